"""Exact determinants over Z[x] and Smith normal forms over Z."""
from __future__ import annotations

import heapq
from collections import Counter
from typing import Dict, List, Sequence

from .polynomial import Monomial, Polynomial, var_key
from .rational import RationalFunction, factor_poly

__all__ = ["bareiss_det", "determinant", "smith_normal_form", "smith_invariants"]


class _Packer:
    """Packs monomials over a fixed variable list into one integer.

    The top field holds the total degree, so integer order is graded-lex
    and monomial multiplication is integer addition.
    """

    BITS = 20

    def __init__(self, variables):
        self.vars = sorted(variables, key=var_key, reverse=True)
        self.pos = {v: k for k, v in enumerate(self.vars)}
        nf = len(self.vars) + 1
        self.deg_shift = self.BITS * len(self.vars)
        self.guard = sum(1 << (self.BITS * k + self.BITS - 1) for k in range(nf))

    def pack(self, p: Polynomial) -> Dict[int, int]:
        out = {}
        for m, c in p.items():
            key = m.degree << self.deg_shift
            for v, e in m.exponents:
                key |= e << (self.BITS * self.pos[v])
            out[key] = c
        return out

    def unpack(self, d: Dict[int, int]) -> Polynomial:
        mask = (1 << self.BITS) - 1
        terms = {}
        for key, c in d.items():
            exps = []
            for v, k in self.pos.items():
                e = (key >> (self.BITS * k)) & mask
                if e:
                    exps.append((v, e))
            terms[Monomial(exps)] = c
        return Polynomial(terms)


def _pmul(a: Dict[int, int], b: Dict[int, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def _psub(a: Dict[int, int], b: Dict[int, int]) -> Dict[int, int]:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _pdiv(a: Dict[int, int], b: Dict[int, int], guard: int) -> Dict[int, int] | None:
    """Exact quotient ``a / b`` or ``None``."""
    if not a:
        return {}
    lk = max(b)
    lc = b[lk]
    if len(b) == 1:
        out = {}
        for k, c in a.items():
            if c % lc or ((k | guard) - lk) & guard != guard:
                return None
            out[k - lk] = c // lc
        return out
    rest = [(k, c) for k, c in b.items() if k != lk]
    rem = dict(a)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        k = -heapq.heappop(heap)
        c = rem.get(k)
        if not c:
            continue
        if c % lc or ((k | guard) - lk) & guard != guard:
            return None
        qk, qc = k - lk, c // lc
        quot[qk] = qc
        del rem[k]
        for bk, bc in rest:
            kk = bk + qk
            old = rem.get(kk)
            v = (old or 0) - bc * qc
            if v:
                rem[kk] = v
                if old is None:
                    heapq.heappush(heap, -kk)
            elif old is not None:
                del rem[kk]
    return quot


def bareiss_det(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Fraction-free Gaussian elimination over the integer polynomial ring."""
    n = len(rows)
    if n == 0:
        return Polynomial.coerce(1)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    polys = [[Polynomial.coerce(x) for x in r] for r in rows]
    variables = set()
    for r in polys:
        for x in r:
            variables |= x.variables()
    pk = _Packer(variables)
    a = [[pk.pack(x) for x in r] for r in polys]
    sign = 1
    prev = {0: 1}
    for k in range(n - 1):
        if not a[k][k]:
            # sparsest nonzero pivot keeps intermediate sizes down
            cands = [i for i in range(k + 1, n) if a[i][k]]
            if not cands:
                return Polynomial()
            i = min(cands, key=lambda r: len(a[r][k]))
            a[k], a[i] = a[i], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                if aik and row_k[j]:
                    num = _psub(_pmul(piv, row_i[j]), _pmul(aik, row_k[j]))
                else:
                    num = _pmul(piv, row_i[j])
                q = _pdiv(num, prev, pk.guard)
                if q is None:
                    raise ArithmeticError("Bareiss step: inexact division")
                row_i[j] = q
            row_i[k] = {}
        prev = piv
    det = pk.unpack(a[n - 1][n - 1])
    return -det if sign < 0 else det


def determinant(matrix: Sequence[Sequence[RationalFunction]]) -> RationalFunction:
    """Determinant of a square matrix of rational functions.

    Each row is cleared by the least common multiset of its entries'
    denominator factors, the polynomial matrix goes through Bareiss
    elimination, and the result is divided by the product of the row
    denominators.
    """
    n = len(matrix)
    if n == 0 or any(len(r) != n for r in matrix):
        raise ValueError("determinant needs a nonempty square matrix")
    entries = [[RationalFunction.coerce(x) for x in r] for r in matrix]
    total: Counter = Counter()
    cleared = []
    for r in entries:
        common: Counter = Counter()
        for x in r:
            common |= Counter(x.denominator_factors)
        total += common
        row = []
        for x in r:
            p = x.numerator
            if not p.is_zero():
                for f, k in (common - Counter(x.denominator_factors)).items():
                    p = p * factor_poly(f) ** k
            row.append(p)
        cleared.append(row)
    return RationalFunction(bareiss_det(cleared), total)


def smith_invariants(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Diagonal of the Smith normal form (nonnegative, each dividing the next)."""
    d = smith_normal_form(matrix)
    k = min(len(d), len(d[0])) if d else 0
    return [d[i][i] for i in range(k)]


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> List[List[int]]:
    a = [list(map(int, r)) for r in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    t = 0
    while t < min(m, n):
        nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for r in a:
                        r[j] -= q * r[t]
                    if a[t][j]:
                        done = False
            if done:
                # pivot must divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n)
                  if a[i][j] and (i == t or j == t)]
            _, i, j = min(nz)
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
        t += 1
    return a
