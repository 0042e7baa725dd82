"""Line-oriented quiver files.

::

    # comment
    vertex 1
    arrow a 1 -> 2
    rel a b
    weight a q^2*t

Arrows without a ``weight`` line get the generic weight ``x_<id>``.
"""
from __future__ import annotations

from pathlib import Path
from typing import Dict, List, Tuple, Union

from .polynomial import Monomial, parse_monomial
from .quiver import Arrow, LocallyGentleQuiver, Quiver, WeightFunction

__all__ = ["QuiverParseError", "parse_quiver", "load_quiver", "format_quiver"]


class QuiverParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def parse_quiver(text: str) -> Tuple[Quiver, WeightFunction]:
    vertices: List[str] = []
    vline: Dict[str, int] = {}
    arrows: List[Tuple[int, str, str, str]] = []
    rels: List[Tuple[int, str, str]] = []
    weights: List[Tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kw = tok[0]
        if kw == "vertex":
            if len(tok) != 2:
                raise QuiverParseError(lineno, "expected 'vertex <id>'")
            if tok[1] in vline:
                raise QuiverParseError(lineno, f"duplicate vertex {tok[1]} (first on line {vline[tok[1]]})")
            vline[tok[1]] = lineno
            vertices.append(tok[1])
        elif kw == "arrow":
            if len(tok) != 5 or tok[3] != "->":
                raise QuiverParseError(lineno, "expected 'arrow <id> <source> -> <target>'")
            arrows.append((lineno, tok[1], tok[2], tok[4]))
        elif kw == "rel":
            if len(tok) != 3:
                raise QuiverParseError(lineno, "expected 'rel <arrow> <arrow>'")
            rels.append((lineno, tok[1], tok[2]))
        elif kw == "weight":
            if len(tok) < 3:
                raise QuiverParseError(lineno, "expected 'weight <arrow> <monomial>'")
            weights.append((lineno, tok[1], "".join(tok[2:])))
        else:
            raise QuiverParseError(lineno, f"unknown keyword {kw!r}")

    if not vertices:
        raise QuiverParseError(0, "no vertices declared")
    by_id: Dict[str, Arrow] = {}
    for lineno, aid, s, t in arrows:
        if aid in by_id:
            raise QuiverParseError(lineno, f"duplicate arrow id {aid}")
        for v in (s, t):
            if v not in vline:
                raise QuiverParseError(lineno, f"unknown vertex {v}")
        by_id[aid] = Arrow(aid, s, t)
    relations = set()
    for lineno, a, b in rels:
        for x in (a, b):
            if x not in by_id:
                raise QuiverParseError(lineno, f"unknown arrow {x}")
        if by_id[a].target != by_id[b].source:
            raise QuiverParseError(lineno, f"relation {a} {b} is not composable ({a} ends at {by_id[a].target}, "
                                           f"{b} starts at {by_id[b].source})")
        relations.add((a, b))
    w: Dict[str, Monomial] = {aid: Monomial.var(f"x_{aid}") for aid in by_id}
    for lineno, a, mono in weights:
        if a not in by_id:
            raise QuiverParseError(lineno, f"unknown arrow {a}")
        try:
            m = parse_monomial(mono)
        except ValueError as exc:
            raise QuiverParseError(lineno, str(exc)) from None
        if m.is_one():
            raise QuiverParseError(lineno, f"weight of {a} must be nonconstant")
        w[a] = m
    q = Quiver(tuple(vertices), tuple(by_id.values()), frozenset(relations))
    return q, WeightFunction(w)


def load_quiver(path: Union[str, Path]) -> Tuple[Quiver, WeightFunction]:
    return parse_quiver(Path(path).read_text())


def format_quiver(q: Union[Quiver, LocallyGentleQuiver], weights: WeightFunction | None = None) -> str:
    if isinstance(q, LocallyGentleQuiver):
        q = q.quiver
    lines = [f"vertex {v}" for v in q.vertices]
    lines += [f"arrow {a.id} {a.source} -> {a.target}" for a in q.arrows]
    order = {a.id: i for i, a in enumerate(q.arrows)}
    lines += [f"rel {a} {b}" for a, b in sorted(q.relations, key=lambda p: (order[p[0]], order[p[1]]))]
    if weights is not None:
        for a in q.arrows:
            m = weights[a.id]
            if m != Monomial.var(f"x_{a.id}"):
                lines.append(f"weight {a.id} {m}")
    return "\n".join(lines) + "\n"
