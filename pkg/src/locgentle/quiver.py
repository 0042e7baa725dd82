"""Quivers with quadratic zero relations, the locally gentle axioms, and
their combinatorics (threads, minimal cycles, duals, critical quivers)."""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .polynomial import Monomial, var_key

__all__ = [
    "Arrow",
    "Quiver",
    "LocallyGentleQuiver",
    "WeightFunction",
    "CycleKind",
    "MinimalCycle",
    "QuiverError",
    "MalformedQuiver",
    "MalformedRelation",
    "AxiomViolation",
    "validate",
    "is_gentle",
    "minimal_cycles",
    "dual",
    "is_critical",
    "is_connected",
    "random_locally_gentle",
    "corpus",
]


class QuiverError(ValueError):
    pass


class MalformedQuiver(QuiverError):
    pass


class MalformedRelation(QuiverError):
    def __init__(self, pair: Tuple[str, str], reason: str = "not composable"):
        self.pair = pair
        super().__init__(f"relation {pair[0]}*{pair[1]}: {reason}")


class AxiomViolation(QuiverError):
    """Raised with the complete list of ``(axiom, witness)`` failures."""

    def __init__(self, violations: List[Tuple[str, str]]):
        self.violations = violations
        super().__init__("; ".join(f"{ax}: {w}" for ax, w in violations))


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str

    def __str__(self) -> str:
        return f"{self.id}: {self.source} -> {self.target}"


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph plus a set of length-2 zero relations.

    ``relations`` holds pairs ``(a, b)`` meaning the path ``ab`` (a first)
    is zero.
    """

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...] = ()
    relations: frozenset = frozenset()
    _by_id: Dict[str, Arrow] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "relations", frozenset((str(a), str(b)) for a, b in self.relations))
        if not self.vertices:
            raise MalformedQuiver("a quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise MalformedQuiver("duplicate vertex ids")
        by_id = {}
        vs = set(self.vertices)
        for a in self.arrows:
            if a.id in by_id:
                raise MalformedQuiver(f"duplicate arrow id {a.id}")
            if a.source not in vs or a.target not in vs:
                raise MalformedQuiver(f"arrow {a.id} uses an unknown vertex")
            by_id[a.id] = a
        object.__setattr__(self, "_by_id", by_id)
        for a, b in self.relations:
            if a not in by_id or b not in by_id:
                raise MalformedRelation((a, b), "unknown arrow")
            if by_id[a].target != by_id[b].source:
                raise MalformedRelation((a, b))

    @classmethod
    def build(cls, vertices: Iterable, arrows: Iterable[Tuple[str, str, str]], relations: Iterable[Tuple[str, str]] = ()) -> "Quiver":
        """Convenience constructor from ``(id, source, target)`` triples."""
        return cls(tuple(vertices), tuple(Arrow(str(i), str(s), str(t)) for i, s, t in arrows), frozenset(relations))

    def arrow(self, aid: str) -> Arrow:
        return self._by_id[aid]

    def arrow_ids(self) -> Tuple[str, ...]:
        return tuple(a.id for a in self.arrows)

    def source(self, aid: str) -> str:
        return self._by_id[aid].source

    def target(self, aid: str) -> str:
        return self._by_id[aid].target

    def out_arrows(self, v: str) -> List[str]:
        return [a.id for a in self.arrows if a.source == v]

    def in_arrows(self, v: str) -> List[str]:
        return [a.id for a in self.arrows if a.target == v]

    def composable_pairs(self) -> List[Tuple[str, str]]:
        return [(a.id, b.id) for a in self.arrows for b in self.arrows if a.target == b.source]

    def has_arrow(self, aid: str) -> bool:
        return aid in self._by_id


class WeightFunction(Mapping):
    """Arrow id -> nonconstant monomial."""

    def __init__(self, weights: Mapping[str, Monomial]):
        self._w = dict(weights)
        for a, m in self._w.items():
            if not isinstance(m, Monomial):
                raise TypeError(f"weight of {a} must be a Monomial")
            if m.is_one():
                raise ValueError(f"weight of arrow {a} is constant")

    @classmethod
    def generic(cls, quiver) -> "WeightFunction":
        q = _as_quiver(quiver)
        return cls({a.id: Monomial.var(f"x_{a.id}") for a in q.arrows})

    def __getitem__(self, aid: str) -> Monomial:
        return self._w[aid]

    def __iter__(self):
        return iter(self._w)

    def __len__(self) -> int:
        return len(self._w)

    def path(self, arrows: Iterable[str]) -> Monomial:
        m = Monomial()
        for a in arrows:
            m = m * self._w[a]
        return m

    def covers(self, quiver) -> bool:
        return all(a.id in self._w for a in _as_quiver(quiver).arrows)

    def restrict(self, arrow_ids: Iterable[str]) -> "WeightFunction":
        return WeightFunction({a: self._w[a] for a in arrow_ids})

    def __repr__(self) -> str:
        return "WeightFunction({" + ", ".join(f"{a}: {m}" for a, m in self._w.items()) + "})"


class LocallyGentleQuiver:
    """A quiver certified to satisfy (G2), (G3), (G5); build via :func:`validate`."""

    def __init__(self, quiver: Quiver, permitted_successor, forbidden_successor,
                 permitted_predecessor, forbidden_predecessor):
        self.quiver = quiver
        self.permitted_successor: Dict[str, Optional[str]] = permitted_successor
        self.forbidden_successor: Dict[str, Optional[str]] = forbidden_successor
        self.permitted_predecessor: Dict[str, Optional[str]] = permitted_predecessor
        self.forbidden_predecessor: Dict[str, Optional[str]] = forbidden_predecessor

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> Tuple[Arrow, ...]:
        return self.quiver.arrows

    @property
    def relations(self) -> frozenset:
        return self.quiver.relations

    def source(self, aid: str) -> str:
        return self.quiver.source(aid)

    def target(self, aid: str) -> str:
        return self.quiver.target(aid)

    def out_arrows(self, v: str) -> List[str]:
        return self.quiver.out_arrows(v)

    def in_arrows(self, v: str) -> List[str]:
        return self.quiver.in_arrows(v)

    def thread(self, aid: str, kind: "CycleKind") -> Tuple[List[str], bool]:
        """Arrows ``a, s(a), s(s(a)), ...`` along permitted (no relations) or
        forbidden (full relations) successors.

        Returns the arrows up to (excluding) the first repetition and a flag
        telling whether the thread closed up into a cycle.  Successors are
        injective, so a repeating thread always returns to ``aid`` itself.
        """
        succ = self.forbidden_successor if kind is CycleKind.FULL_RELATIONS else self.permitted_successor
        seen = {aid}
        out = [aid]
        cur = succ[aid]
        while cur is not None:
            if cur in seen:
                return out, True
            seen.add(cur)
            out.append(cur)
            cur = succ[cur]
        return out, False

    def __eq__(self, other) -> bool:
        return isinstance(other, LocallyGentleQuiver) and self.quiver == other.quiver

    def __hash__(self) -> int:
        return hash(self.quiver)

    def __repr__(self) -> str:
        return (f"LocallyGentleQuiver(vertices={list(self.vertices)}, arrows={[str(a) for a in self.arrows]}, "
                f"relations={sorted(self.relations)})")


def _as_quiver(q) -> Quiver:
    return q.quiver if isinstance(q, LocallyGentleQuiver) else q


def validate(q: Quiver) -> LocallyGentleQuiver:
    """Check (G2), (G3), (G5) and build the successor tables.

    (G4) holds by construction since only length-2 relations exist.
    """
    violations: List[Tuple[str, str]] = []
    for v in q.vertices:
        outd, ind = len(q.out_arrows(v)), len(q.in_arrows(v))
        if outd > 2:
            violations.append(("G2", f"vertex {v} has out-degree {outd}"))
        if ind > 2:
            violations.append(("G2", f"vertex {v} has in-degree {ind}"))
    rel = q.relations
    tables = {"ps": {}, "fs": {}, "pp": {}, "fp": {}}
    for a in q.arrows:
        nxt = q.out_arrows(a.target)
        prv = q.in_arrows(a.source)
        permitted = [b for b in nxt if (a.id, b) not in rel]
        forbidden = [b for b in nxt if (a.id, b) in rel]
        permitted_in = [c for c in prv if (c, a.id) not in rel]
        forbidden_in = [c for c in prv if (c, a.id) in rel]
        if len(permitted) > 1:
            violations.append(("G3", f"arrow {a.id} has nonzero successors {', '.join(permitted)}"))
        if len(permitted_in) > 1:
            violations.append(("G3", f"arrow {a.id} has nonzero predecessors {', '.join(permitted_in)}"))
        if len(forbidden) > 1:
            violations.append(("G5", f"arrow {a.id} has zero-relation successors {', '.join(forbidden)}"))
        if len(forbidden_in) > 1:
            violations.append(("G5", f"arrow {a.id} has zero-relation predecessors {', '.join(forbidden_in)}"))
        tables["ps"][a.id] = permitted[0] if permitted else None
        tables["fs"][a.id] = forbidden[0] if forbidden else None
        tables["pp"][a.id] = permitted_in[0] if permitted_in else None
        tables["fp"][a.id] = forbidden_in[0] if forbidden_in else None
    if violations:
        raise AxiomViolation(violations)
    return LocallyGentleQuiver(q, tables["ps"], tables["fs"], tables["pp"], tables["fp"])


class CycleKind(enum.Enum):
    FULL_RELATIONS = "ZC"
    NO_RELATIONS = "IC"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MinimalCycle:
    arrows: Tuple[str, ...]
    kind: CycleKind
    weight: Monomial

    @property
    def length(self) -> int:
        return len(self.arrows)

    def sign_factor_exponent(self) -> int:
        return self.length % 2

    def __str__(self) -> str:
        return f"{self.kind} ({' '.join(self.arrows)}) length={self.length} weight={self.weight}"


def _canonical_rotation(arrows: Sequence[str]) -> Tuple[str, ...]:
    k = min(range(len(arrows)), key=lambda i: var_key(arrows[i]))
    return tuple(arrows[k:]) + tuple(arrows[:k])


def minimal_cycles(lgq: LocallyGentleQuiver, weights: Mapping[str, Monomial] | None = None
                   ) -> Tuple[List[MinimalCycle], List[MinimalCycle]]:
    """``(ZC, IC)``: cycles with full relations and cycles with no relations."""
    w = weights if weights is not None else WeightFunction.generic(lgq)
    out = {}
    for kind in (CycleKind.FULL_RELATIONS, CycleKind.NO_RELATIONS):
        found = {}
        for a in lgq.arrows:
            arrows, closed = lgq.thread(a.id, kind)
            if not closed:
                continue
            canon = _canonical_rotation(arrows)
            if canon not in found:
                m = Monomial()
                for x in canon:
                    m = m * w[x]
                found[canon] = MinimalCycle(canon, kind, m)
        out[kind] = sorted(found.values(), key=lambda c: tuple(var_key(x) for x in c.arrows))
    return out[CycleKind.FULL_RELATIONS], out[CycleKind.NO_RELATIONS]


def is_gentle(lgq: LocallyGentleQuiver) -> bool:
    """No cycle with no relations, i.e. the algebra is finite-dimensional."""
    return not minimal_cycles(lgq)[1]


def dual(lgq: LocallyGentleQuiver) -> LocallyGentleQuiver:
    """Same arrows, relations complemented among composable pairs."""
    q = lgq.quiver
    rel = frozenset(p for p in q.composable_pairs() if p not in q.relations)
    return validate(Quiver(q.vertices, q.arrows, rel))


def is_connected(q) -> bool:
    q = _as_quiver(q)
    adj: Dict[str, set] = {v: set() for v in q.vertices}
    for a in q.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    start = q.vertices[0]
    seen = {start}
    stack = [start]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(q.vertices)


def is_critical(lgq: LocallyGentleQuiver) -> bool:
    if not is_connected(lgq):
        return False
    for v in lgq.vertices:
        if len(lgq.out_arrows(v)) != 2 or len(lgq.in_arrows(v)) != 2:
            return False
    zc, ic = minimal_cycles(lgq)
    n = 2 * len(lgq.vertices)
    return len(zc) == 1 and len(ic) == 1 and zc[0].length == n and ic[0].length == n


def random_locally_gentle(n_vertices: int, max_arrows: int, seed: int) -> LocallyGentleQuiver:
    """Random validated quiver, deterministic in ``seed``.

    Arrows are added while degree bounds allow; at every vertex the
    composable in/out pairs are split into two matchings and one of them
    becomes the relation set, so (G3) and (G5) hold by construction.
    """
    if n_vertices < 1:
        raise ValueError("n_vertices must be at least 1")
    rng = random.Random(seed)
    vertices = [str(i + 1) for i in range(n_vertices)]
    outd = dict.fromkeys(vertices, 0)
    ind = dict.fromkeys(vertices, 0)
    arrows: List[Arrow] = []
    while len(arrows) < max_arrows:
        srcs = [v for v in vertices if outd[v] < 2]
        tgts = [v for v in vertices if ind[v] < 2]
        if not srcs or not tgts:
            break
        s, t = rng.choice(srcs), rng.choice(tgts)
        arrows.append(Arrow(f"a{len(arrows) + 1}", s, t))
        outd[s] += 1
        ind[t] += 1
    relations = set()
    for v in vertices:
        ins = [a.id for a in arrows if a.target == v]
        outs = [a.id for a in arrows if a.source == v]
        if not ins or not outs:
            continue
        rng.shuffle(ins)
        rng.shuffle(outs)
        k = min(len(ins), len(outs))
        straight = {(ins[i], outs[i]) for i in range(k)}
        crossed = {(x, y) for x in ins for y in outs} - straight
        relations |= straight if rng.random() < 0.5 else crossed
    return validate(Quiver(tuple(vertices), tuple(arrows), frozenset(relations)))


def corpus(count: int = 200, max_vertices: int = 6, max_arrows: int = 12, seed: int = 0) -> List[LocallyGentleQuiver]:
    """Deterministic list of random locally gentle quivers of varied size."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = 1 + k % max_vertices
        m = rng.randint(n // 2, min(max_arrows, 2 * n))
        out.append(random_locally_gentle(n, m, rng.randrange(2 ** 32)))
    return out
