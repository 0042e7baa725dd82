"""Secant configurations on a labelled 2n-gon and the Harer-Zagier count of
closed ones.

Points are ``1..2n``; ``gamma`` is the rotation ``i -> i+1``.  Products are
composed as "apply ``gamma`` first, then the pairing".
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Iterator, List, Tuple

from .quiver import Arrow, LocallyGentleQuiver, Quiver, WeightFunction, validate

__all__ = [
    "SecantConfiguration",
    "NotClosed",
    "double_factorial",
    "fixed_point_free_involutions",
    "enumerate_Pn",
    "enumerate_Pn_prime",
    "product_with_rotation",
    "cycle_type_count",
    "is_closed",
    "count_closed",
    "hz_a_n1",
    "hz_coefficients",
    "hz_polynomial_check",
    "critical_quiver_from",
    "count_closed_up_to_dihedral",
]


class NotClosed(ValueError):
    pass


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@dataclass(frozen=True)
class SecantConfiguration:
    n: int
    pairing: Tuple[int, ...]  # pairing[i - 1] is the partner of point i

    def __post_init__(self):
        m = 2 * self.n
        if len(self.pairing) != m:
            raise ValueError("pairing must act on 2n points")
        for i, j in enumerate(self.pairing, 1):
            if j == i or not 1 <= j <= m or self.pairing[j - 1] != i:
                raise ValueError(f"not a fixed-point-free involution at {i}")

    def __call__(self, i: int) -> int:
        return self.pairing[i - 1]

    def pairs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.pairing, 1) if i < j]

    def has_adjacent_pair(self) -> bool:
        m = 2 * self.n
        return any((j - i) % m in (1, m - 1) for i, j in self.pairs())

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "SecantConfiguration":
        p = [0] * (2 * n)
        for i, j in pairs:
            p[i - 1], p[j - 1] = j, i
        return cls(n, tuple(p))

    def __str__(self) -> str:
        return "".join(f"({i} {j})" for i, j in self.pairs())


def fixed_point_free_involutions(m: int) -> Iterator[Tuple[int, ...]]:
    """All perfect matchings of ``1..m`` (as partner tuples); pairs the
    smallest free point first, so the order is deterministic."""
    partner = [0] * m

    def rec():
        try:
            i = partner.index(0)
        except ValueError:
            yield tuple(partner)
            return
        for j in range(i + 1, m):
            if partner[j] == 0:
                partner[i], partner[j] = j + 1, i + 1
                yield from rec()
                partner[i] = partner[j] = 0

    if m % 2 == 0:
        yield from rec()


def enumerate_Pn(n: int) -> List[SecantConfiguration]:
    """Every fixed-point-free involution on ``2n`` points."""
    return [_unchecked(n, p) for p in fixed_point_free_involutions(2 * n)]


def _unchecked(n: int, pairing: Tuple[int, ...]) -> SecantConfiguration:
    # enumerator output is an involution by construction; skip re-validation
    c = object.__new__(SecantConfiguration)
    object.__setattr__(c, "n", n)
    object.__setattr__(c, "pairing", pairing)
    return c


def enumerate_Pn_prime(n: int) -> List[SecantConfiguration]:
    """Involutions with no secant joining neighbouring polygon vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    everything = enumerate_Pn(n)
    if len(everything) != double_factorial(2 * n - 1):
        raise AssertionError("involution enumeration miscounted")
    return [c for c in everything if not c.has_adjacent_pair()]


def product_with_rotation(c: SecantConfiguration) -> Tuple[int, ...]:
    """``mu gamma``: ``i -> mu(gamma(i))`` as a tuple over ``1..2n``."""
    m = 2 * c.n
    return tuple(c.pairing[i % m] for i in range(1, m + 1))


def cycle_type_count(perm: Tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    k = 0
    for s in range(len(perm)):
        if not seen[s]:
            k += 1
            x = s
            while not seen[x]:
                seen[x] = True
                x = perm[x] - 1
    return k


def is_closed(c: SecantConfiguration) -> bool:
    """The secant walk covers everything: ``mu gamma`` is one ``2n``-cycle."""
    return cycle_type_count(product_with_rotation(c)) == 1


def count_closed(n: int) -> int:
    return sum(1 for c in enumerate_Pn_prime(n) if is_closed(c))


def hz_a_n1(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2:
        return 0
    q, r = divmod(double_factorial(2 * n - 1), n + 1)
    assert r == 0
    return q


def hz_coefficients(n: int) -> Dict[int, int]:
    """``a_{n,k}``: number of ``mu`` in ``P_n`` whose ``mu gamma`` has ``k`` cycles."""
    out: Dict[int, int] = {}
    for c in enumerate_Pn(n):
        k = cycle_type_count(product_with_rotation(c))
        out[k] = out.get(k, 0) + 1
    return out


def _falling_binomial(k: int) -> List[Fraction]:
    """Coefficients of ``C(x, k)`` in powers of ``x``."""
    poly = [Fraction(1)]
    for r in range(k):
        nxt = [Fraction(0)] * (len(poly) + 1)
        for e, c in enumerate(poly):
            nxt[e + 1] += c
            nxt[e] -= r * c
        poly = nxt
    f = 1
    for r in range(2, k + 1):
        f *= r
    return [c / f for c in poly]


def hz_polynomial_check(n: int) -> bool:
    """Brute-force ``sum_k a_{n,k} x^k`` against the Harer-Zagier closed form."""
    if n > 6:
        raise ValueError("brute force is limited to n <= 6")
    lhs = [Fraction(0)] * (n + 2)
    for k, a in hz_coefficients(n).items():
        lhs[k] += a
    rhs = [Fraction(0)] * (n + 2)
    df = double_factorial(2 * n - 1)
    for k in range(1, n + 2):
        scale = df * 2 ** (k - 1) * comb(n, k - 1)
        for e, c in enumerate(_falling_binomial(k)):
            rhs[e] += scale * c
    return lhs == rhs


def critical_quiver_from(c: SecantConfiguration) -> Tuple[LocallyGentleQuiver, WeightFunction]:
    """Critical quiver of a closed configuration.

    Vertices are the secants (labelled by their smaller endpoint), arrow
    ``a_k`` runs along the polygon edge ``k -> k+1``, and stepping onto
    point ``i`` then sliding along its secant is the relation
    ``a_{i-1} a_{sigma(i)}``.
    """
    if not is_closed(c):
        raise NotClosed(str(c))
    m = 2 * c.n
    label = {i: str(min(i, c(i))) for i in range(1, m + 1)}
    vertices = tuple(str(i) for i, _ in c.pairs())
    arrows = tuple(Arrow(f"a{k}", label[k], label[k % m + 1]) for k in range(1, m + 1))
    relations = frozenset((f"a{(i - 2) % m + 1}", f"a{c(i)}") for i in range(1, m + 1))
    lgq = validate(Quiver(vertices, arrows, relations))
    return lgq, WeightFunction.generic(lgq)


def _canonical(c: SecantConfiguration) -> Tuple[Tuple[int, int], ...]:
    m = 2 * c.n
    best = None
    for r in range(m):
        for refl in (False, True):
            def g(i, r=r, refl=refl):
                x = (i - 1 + r) % m
                if refl:
                    x = (-x) % m
                return x + 1
            form = tuple(sorted(tuple(sorted((g(i), g(j)))) for i, j in c.pairs()))
            if best is None or form < best:
                best = form
    return best


def count_closed_up_to_dihedral(n: int) -> int:
    """Orbits of closed configurations under the dihedral group of order 4n."""
    if n > 6:
        raise ValueError("enumeration is limited to n <= 6")
    return len({_canonical(c) for c in enumerate_Pn_prime(n) if is_closed(c)})
