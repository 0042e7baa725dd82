from pathlib import Path

import pytest

from locgentle import WeightFunction, corpus, load_quiver, parse_monomial, validate

QUIVERS = Path(__file__).resolve().parent.parent / "quivers"


def load(name):
    q, w = load_quiver(QUIVERS / name)
    return validate(q), w


@pytest.fixture(scope="session")
def quiver_dir():
    return QUIVERS


@pytest.fixture(scope="session")
def generated():
    """The 200-quiver property corpus (at most 6 vertices, 12 arrows)."""
    return corpus(200)


@pytest.fixture(scope="session")
def three_cycle_pair():
    """Two oriented triangles with full relations, every arrow weighted q."""
    return load("example43.quiver")


@pytest.fixture(scope="session")
def reduced_triangle():
    """Its reduction: one merged arrow of weight q^2*t, others q*t."""
    return load("example33.quiver")


def uniform(lgq, mono="q"):
    m = parse_monomial(mono)
    return WeightFunction({a.id: m for a in lgq.arrows})
