"""Weighted Cartan matrices of locally gentle quivers and their determinants."""
from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .linalg import determinant, smith_invariants
from .polynomial import Monomial, Polynomial
from .quiver import (
    CycleKind,
    LocallyGentleQuiver,
    MinimalCycle,
    Quiver,
    Arrow,
    WeightFunction,
    dual,
    is_gentle,
    minimal_cycles,
    validate,
)
from .rational import RationalFunction, TruncatedSeries, series_expand

__all__ = [
    "CartanMatrix",
    "ReductionOutcome",
    "Corollaries",
    "NotGentle",
    "PreconditionViolated",
    "cartan_exact",
    "cartan_series_oracle",
    "cycle_factor",
    "det_formula",
    "det_elimination",
    "matmul",
    "verify_duality",
    "reduce_step",
    "reduction_candidates",
    "verify_diagonalization",
    "specialize_corollaries",
    "q_cartan_determinant",
]

log = logging.getLogger(__name__)


class NotGentle(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class CartanMatrix:
    """Vertex-indexed square matrix of rational functions."""

    def __init__(self, vertices: Sequence[str], entries: List[List[RationalFunction]]):
        self.vertices = tuple(vertices)
        self.entries = entries
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def __getitem__(self, ij: Tuple[str, str]) -> RationalFunction:
        i, j = ij
        return self.entries[self._index[str(i)]][self._index[str(j)]]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def rows(self) -> List[List[RationalFunction]]:
        return [list(r) for r in self.entries]

    def substitute(self, mapping) -> "CartanMatrix":
        return CartanMatrix(self.vertices, [[x.substitute(mapping) for x in r] for r in self.entries])

    def series(self, degree_weights: Mapping[str, int] | None, N: int) -> List[List[TruncatedSeries]]:
        return [[series_expand(x, degree_weights, N) for x in r] for r in self.entries]

    def determinant(self) -> RationalFunction:
        return determinant(self.entries)

    def evaluate(self, values: Mapping[str, int]) -> List[List[Fraction]]:
        return [[x.evaluate(values) for x in r] for r in self.entries]

    def __str__(self) -> str:
        return "\n".join(f"[{i},{j}] {self.entries[a][b]}"
                         for a, i in enumerate(self.vertices) for b, j in enumerate(self.vertices))

    def __repr__(self) -> str:
        return f"CartanMatrix(vertices={list(self.vertices)})"


def _weights(lgq: LocallyGentleQuiver, w: Optional[Mapping[str, Monomial]]) -> Mapping[str, Monomial]:
    return WeightFunction.generic(lgq) if w is None else w


def cartan_exact(lgq: LocallyGentleQuiver, w: Optional[Mapping[str, Monomial]] = None,
                 negate: bool = False) -> CartanMatrix:
    """Exact weighted Cartan matrix via thread structure.

    Every nonzero path starting with arrow ``a`` is a prefix of the thread
    ``a, s(a), s(s(a)), ...`` of permitted successors.  A thread either
    stops, giving finitely many monomials, or closes into a cycle with no
    relations of weight ``W``, giving ``prefix / (1 - W)`` for each prefix of
    one period.  With ``negate`` every path weight is multiplied by
    ``(-1)^length``, i.e. the matrix is evaluated at ``-x``.
    """
    w = _weights(lgq, w)
    idx = {v: k for k, v in enumerate(lgq.vertices)}
    n = len(lgq.vertices)
    polys: List[List[Dict[Monomial, int]]] = [[{} for _ in range(n)] for _ in range(n)]
    geo: List[List[List[Tuple[int, Monomial, int, Monomial]]]] = [[[] for _ in range(n)] for _ in range(n)]
    for v in lgq.vertices:
        i = idx[v]
        polys[i][i][Monomial()] = 1
        for a in lgq.out_arrows(v):
            arrows, closed = lgq.thread(a, CycleKind.NO_RELATIONS)
            m = Monomial()
            prefixes = []
            for k, b in enumerate(arrows, 1):
                m = m * w[b]
                c = -1 if (negate and k % 2) else 1
                prefixes.append((c, m, idx[lgq.target(b)]))
            if not closed:
                for c, pm, j in prefixes:
                    polys[i][j][pm] = polys[i][j].get(pm, 0) + c
            else:
                L = len(arrows)
                cyc_c = -1 if (negate and L % 2) else 1
                for c, pm, j in prefixes:
                    geo[i][j].append((c, pm, cyc_c, m))
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            x = RationalFunction(Polynomial(polys[i][j]))
            for c, pm, cyc_c, cm in geo[i][j]:
                x = x + RationalFunction(Polynomial.term(c, pm), [(cyc_c, cm)])
            row.append(x)
        entries.append(row)
    return CartanMatrix(lgq.vertices, entries)


def cartan_series_oracle(lgq: LocallyGentleQuiver, w: Optional[Mapping[str, Monomial]] = None, N: int = 10,
                         degree_weights: Mapping[str, int] | None = None) -> List[List[TruncatedSeries]]:
    """Brute-force Cartan series: breadth-first enumeration of every nonzero
    path of weighted degree at most ``N``.

    A path is extended by any arrow leaving its endpoint whose composition
    with the last arrow is not a relation; no thread or cycle shortcut.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    w = _weights(lgq, w)
    dw = dict(degree_weights or {})
    deg = {a.id: w[a.id].weighted_degree(dw) for a in lgq.arrows}
    if any(d <= 0 for d in deg.values()):
        raise ValueError("every arrow needs positive weighted degree for the oracle to terminate")
    idx = {v: k for k, v in enumerate(lgq.vertices)}
    n = len(lgq.vertices)
    acc: List[List[Dict[Monomial, int]]] = [[{} for _ in range(n)] for _ in range(n)]
    rel = lgq.relations
    for v in lgq.vertices:
        i = idx[v]
        acc[i][i][Monomial()] = 1
        queue = deque()
        for a in lgq.out_arrows(v):
            if deg[a] <= N:
                queue.append((a, w[a], deg[a]))
        while queue:
            last, m, d = queue.popleft()
            j = idx[lgq.target(last)]
            acc[i][j][m] = acc[i][j].get(m, 0) + 1
            for b in lgq.out_arrows(lgq.target(last)):
                if (last, b) in rel or d + deg[b] > N:
                    continue
                queue.append((b, m * w[b], d + deg[b]))
    return [[TruncatedSeries(Polynomial(acc[i][j]), N, dw) for j in range(n)] for i in range(n)]


def cycle_factor(c: MinimalCycle) -> Polynomial:
    """``1 - (-1)^l(C) w(C)``."""
    sign = -1 if c.length % 2 else 1
    return Polynomial.coerce(1) - Polynomial.term(sign, c.weight)


def det_formula(lgq: LocallyGentleQuiver, w: Optional[Mapping[str, Monomial]] = None) -> RationalFunction:
    """Closed form of the Cartan determinant from the minimal cycles."""
    zc, ic = minimal_cycles(lgq, _weights(lgq, w))
    num = Polynomial.coerce(1)
    for c in zc:
        num = num * cycle_factor(c)
    return RationalFunction(num, [(1, c.weight) for c in ic])


def det_elimination(lgq: LocallyGentleQuiver, w: Optional[Mapping[str, Monomial]] = None) -> RationalFunction:
    return cartan_exact(lgq, w).determinant()


def matmul(a: Sequence[Sequence[RationalFunction]], b: Sequence[Sequence[RationalFunction]]) -> List[List[RationalFunction]]:
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = RationalFunction(0)
            for k in range(m):
                if a[i][k].is_zero() or b[k][j].is_zero():
                    continue
                s = s + a[i][k] * b[k][j]
            row.append(s)
        out.append(row)
    return out


def _is_identity(mat: Sequence[Sequence[RationalFunction]]) -> bool:
    return all(x.equals(1 if i == j else 0) for i, r in enumerate(mat) for j, x in enumerate(r))


def verify_duality(lgq: LocallyGentleQuiver, w: Optional[Mapping[str, Monomial]] = None) -> bool:
    """``C_Q(x) * C_{Q#}(-x)`` is the identity matrix."""
    c = cartan_exact(lgq, w)
    cd = cartan_exact(dual(lgq), w, negate=True)
    return _is_identity(matmul(c.entries, cd.entries))


@dataclass
class ReductionOutcome:
    quiver: LocallyGentleQuiver
    weights: WeightFunction
    extracted_factors: List[Polynomial]
    removed: Tuple[str, ...]
    new_arrow: Optional[str]

    def factor_product(self) -> Polynomial:
        out = Polynomial.coerce(1)
        for f in self.extracted_factors:
            out = out * f
        return out


def _fresh_id(q: Quiver, base: str) -> str:
    aid = base
    while q.has_arrow(aid):
        aid += "'"
    return aid


def reduce_step(lgq: LocallyGentleQuiver, w: Optional[Mapping[str, Monomial]], cycle: MinimalCycle,
                v1: str) -> ReductionOutcome:
    """Remove one cycle with full relations at a vertex it passes only once.

    With an incoming arrow ``q1`` at ``v1`` off the cycle, ``q1`` and the
    cycle arrow ``p1`` leaving ``v1`` are merged into one arrow of weight
    ``w(q1) w(p1)``.  A pair ``(x, y)`` of the new quiver is a relation iff
    the last original arrow of ``x`` followed by the first original arrow of
    ``y`` was one.  Without ``q1`` the arrow ``p1`` is simply deleted.
    """
    w = WeightFunction(_weights(lgq, w))
    zc, _ = minimal_cycles(lgq, w)
    match = [c for c in zc if c.arrows == tuple(cycle.arrows)]
    if cycle.kind is not CycleKind.FULL_RELATIONS or not match:
        raise PreconditionViolated(f"{' '.join(cycle.arrows)} is not a cycle with full relations")
    cycle = match[0]
    v1 = str(v1)
    starts = [a for a in cycle.arrows if lgq.source(a) == v1]
    if len(starts) != 1:
        log.info("reduction blocked: cycle %s, vertex %s, quiver %r", " ".join(cycle.arrows), v1, lgq)
        raise PreconditionViolated(f"vertex {v1} is visited {len(starts)} times by the cycle")
    p1 = starts[0]
    others = [a for a in lgq.in_arrows(v1) if a not in cycle.arrows]
    q = lgq.quiver
    factors = [cycle_factor(cycle)]
    if not others:
        keep = tuple(a for a in q.arrows if a.id != p1)
        rel = frozenset(p for p in q.relations if p1 not in p)
        new = validate(Quiver(q.vertices, keep, rel))
        return ReductionOutcome(new, w.restrict(a.id for a in keep), factors, (p1,), None)
    q1 = others[0]
    second = [c for c in zc if q1 in c.arrows]
    if second:
        factors.append(cycle_factor(second[0]))
    pid = _fresh_id(q, f"{q1}{p1}")
    pbar = Arrow(pid, lgq.source(q1), lgq.target(p1))
    arrows = tuple(a for a in q.arrows if a.id not in (p1, q1)) + (pbar,)
    first = {a.id: a.id for a in arrows}
    last = dict(first)
    first[pid], last[pid] = q1, p1
    rel = frozenset((x.id, y.id) for x in arrows for y in arrows
                    if x.target == y.source and (last[x.id], first[y.id]) in q.relations)
    new = validate(Quiver(q.vertices, arrows, rel))
    nw = {a.id: w[a.id] for a in arrows if a.id != pid}
    nw[pid] = w[q1] * w[p1]
    return ReductionOutcome(new, WeightFunction(nw), factors, (p1, q1), pid)


def reduction_candidates(lgq: LocallyGentleQuiver, w: Optional[Mapping[str, Monomial]] = None
                         ) -> List[Tuple[MinimalCycle, str]]:
    """Every ``(cycle, vertex)`` pair satisfying the reduction precondition."""
    zc, _ = minimal_cycles(lgq, _weights(lgq, w))
    out = []
    for c in zc:
        counts = Counter(lgq.source(a) for a in c.arrows)
        for v in lgq.vertices:
            if counts.get(v) == 1:
                out.append((c, v))
    return out


def verify_diagonalization(lgq: LocallyGentleQuiver, w: Optional[Mapping[str, Monomial]] = None) -> bool:
    """Determinant product and Smith form at all indeterminates = 1 agree with
    the diagonal matrix of cycle factors."""
    if not is_gentle(lgq):
        raise NotGentle("quiver has a cycle with no relations")
    w = _weights(lgq, w)
    zc, _ = minimal_cycles(lgq, w)
    target = Polynomial.coerce(1)
    for c in zc:
        target = target * cycle_factor(c)
    cm = cartan_exact(lgq, w)
    if not cm.determinant().equals(target):
        return False
    n = cm.size
    if len(zc) > n:
        return False
    ones = {}
    for a in lgq.arrows:
        for v in w[a.id].variables():
            ones[v] = 1
    integer = [[int(x) for x in r] for r in cm.evaluate(ones)]
    diag = [0 if c.length % 2 == 0 else 2 for c in zc] + [1] * (n - len(zc))
    dmat = [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
    return smith_invariants(integer) == smith_invariants(dmat)


@dataclass
class Corollaries:
    cor1: RationalFunction
    cor2: int
    cor1_at_one: Fraction

    @property
    def consistent(self) -> bool:
        return self.cor1_at_one == self.cor2


def q_cartan_determinant(lgq: LocallyGentleQuiver, var: str = "q") -> RationalFunction:
    """Generic determinant formula specialised to ``x_e -> q``."""
    gw = WeightFunction.generic(lgq)
    q = Polynomial.var(var)
    return det_formula(lgq, gw).substitute({m.variables()[0]: q for m in gw.values()})


def specialize_corollaries(lgq: LocallyGentleQuiver, var: str = "q") -> Corollaries:
    if not is_gentle(lgq):
        raise NotGentle("the integer Cartan determinant needs a gentle quiver")
    cor1 = q_cartan_determinant(lgq, var)
    zc, _ = minimal_cycles(lgq)
    even = sum(1 for c in zc if c.length % 2 == 0)
    odd = len(zc) - even
    cor2 = 0 if even else 2 ** odd
    return Corollaries(cor1, cor2, cor1.evaluate({var: 1}))

