"""Rational functions whose denominators are products of ``1 - c*m`` factors,
plus truncated power series used to compare them against path enumeration."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from .polynomial import Coercible, Monomial, Polynomial

__all__ = [
    "DenominatorFactor",
    "RationalFunction",
    "TruncatedSeries",
    "NonExpandable",
    "series_expand",
]

# (c, m) stands for the polynomial 1 - c*m.
DenominatorFactor = Tuple[int, Monomial]


class NonExpandable(ValueError):
    """A denominator factor has weighted degree 0 and no geometric expansion."""


def factor_poly(f: DenominatorFactor) -> Polynomial:
    c, m = f
    return Polynomial.coerce(1) - Polynomial.term(c, m)


def _factor_key(f: DenominatorFactor) -> tuple:
    return (f[1].order_key(), f[0])


def _render_factor(f: DenominatorFactor) -> str:
    c, m = f
    if c == 1:
        return f"(1 - {m})"
    if c == -1:
        return f"(1 + {m})"
    return f"(1 - {c}*{m})" if c > 0 else f"(1 + {-c}*{m})"


class RationalFunction:
    """``numerator / prod(1 - c_k m_k)``.

    Factors are cancelled opportunistically whenever the numerator is
    exactly divisible by one.  Equality is decided by cross-multiplication,
    so two unreduced representations of the same function compare equal.
    """

    __slots__ = ("numerator", "_den")

    def __init__(self, numerator: Coercible, denominator: Iterable[DenominatorFactor] | Mapping[DenominatorFactor, int] = (),
                 reduce: bool = True):
        num = Polynomial.coerce(numerator)
        den: Counter = Counter()
        items = denominator.items() if isinstance(denominator, Mapping) else ((f, 1) for f in denominator)
        for (c, m), k in items:
            if not isinstance(m, Monomial):
                raise TypeError("denominator factors are (int, Monomial) pairs")
            if c == 0:
                continue
            if m.is_one():
                raise ValueError(f"constant denominator factor 1 - {c}")
            if k:
                den[(c, m)] += k
        if num.is_zero():
            den = Counter()
        elif reduce and den:
            for f in sorted(den, key=_factor_key):
                fp = factor_poly(f)
                while den[f]:
                    q = num.exact_div(fp)
                    if q is None:
                        break
                    num = q
                    den[f] -= 1
            den = +den
        self.numerator = num
        self._den = den

    @classmethod
    def geometric(cls, m: Monomial, c: int = 1) -> "RationalFunction":
        """``1 / (1 - c*m)``."""
        return cls(1, [(c, m)], reduce=False)

    @property
    def denominator_factors(self) -> Dict[DenominatorFactor, int]:
        return dict(self._den)

    def factor_list(self) -> list:
        out = []
        for f in sorted(self._den, key=_factor_key):
            out.extend([f] * self._den[f])
        return out

    def denominator(self) -> Polynomial:
        out = Polynomial.coerce(1)
        for f, k in self._den.items():
            out = out * factor_poly(f) ** k
        return out

    def is_polynomial(self) -> bool:
        return not self._den

    def as_polynomial(self) -> Polynomial:
        if self._den:
            raise ValueError(f"{self} is not a polynomial")
        return self.numerator

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def constant_term(self) -> int:
        # every denominator factor has constant term 1
        return self.numerator.constant_term()

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def coerce(x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        return RationalFunction(Polynomial.coerce(x))

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        lcm = self._den | other._den
        a = self.numerator
        for f, k in (lcm - self._den).items():
            a = a * factor_poly(f) ** k
        b = other.numerator
        for f, k in (lcm - other._den).items():
            b = b * factor_poly(f) ** k
        return RationalFunction(a + b, lcm)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        out = RationalFunction.__new__(RationalFunction)
        out.numerator = -self.numerator
        out._den = Counter(self._den)
        return out

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction(0)
        return RationalFunction(self.numerator * other.numerator, self._den + other._den)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            raise ValueError("negative power")
        return RationalFunction(self.numerator ** k, Counter({f: e * k for f, e in self._den.items()}))

    def equals(self, other) -> bool:
        other = RationalFunction.coerce(other)
        return self.numerator * other.denominator() == other.numerator * self.denominator()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Polynomial, Monomial, RationalFunction)):
            return self.equals(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def substitute(self, mapping: Mapping[str, Coercible]) -> "RationalFunction":
        """Substitute into numerator and denominator.

        Each denominator monomial must map to a single nonconstant term.
        """
        num = self.numerator.substitute(mapping)
        den: Counter = Counter()
        for (c, m), k in self._den.items():
            img = Polynomial.term(c, m).substitute(mapping)
            t = img.as_term()
            if t is None:
                if img.is_zero():
                    continue
                raise ValueError(f"factor {_render_factor((c, m))} does not stay of shape 1 - c*m under substitution")
            c2, m2 = t
            if m2.is_one():
                raise ValueError(f"factor {_render_factor((c, m))} becomes the constant {1 - c2}")
            den[(c2, m2)] += k
        return RationalFunction(num, den)

    def evaluate(self, values: Mapping[str, int]) -> Fraction:
        num = self.numerator.evaluate(values)
        den = 1
        for f, k in self._den.items():
            den *= factor_poly(f).evaluate(values) ** k
        if den == 0:
            raise ZeroDivisionError(f"{self} has a pole at {dict(values)}")
        return Fraction(num, den)

    def __str__(self) -> str:
        if not self._den:
            return str(self.numerator)
        num = str(self.numerator)
        if len(self.numerator) > 1:
            num = f"({num})"
        return f"{num} / " + "*".join(_render_factor(f) for f in self.factor_list())

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


class TruncatedSeries:
    """A polynomial with every term of weighted degree at most ``bound``."""

    __slots__ = ("poly", "bound", "weights")

    def __init__(self, poly: Coercible, bound: int, weights: Mapping[str, int] | None = None):
        self.bound = bound
        self.weights = dict(weights) if weights else {}
        self.poly = Polynomial.coerce(poly).truncate(bound, self.weights)

    def _check(self, other: "TruncatedSeries") -> None:
        if self.weights != other.weights:
            raise ValueError("series use different degree weightings")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.poly + other.poly, min(self.bound, other.bound), self.weights)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        bound = min(self.bound, other.bound)
        w = self.weights
        out: Dict[Monomial, int] = {}
        for m1, c1 in self.poly.items():
            d1 = m1.weighted_degree(w)
            for m2, c2 in other.poly.items():
                if d1 + m2.weighted_degree(w) > bound:
                    continue
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return TruncatedSeries(Polynomial(out), bound, w)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        bound = min(self.bound, other.bound)
        return self.poly.truncate(bound, self.weights) == other.poly.truncate(bound, other.weights)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        return f"{self.poly} + O(deg > {self.bound})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({str(self)!r})"


def series_expand(r: Union[RationalFunction, Coercible], degree_weights: Mapping[str, int] | None, N: int) -> TruncatedSeries:
    """Expand ``r`` as a power series up to weighted degree ``N``.

    Indeterminates missing from ``degree_weights`` have weight 1.
    """
    r = RationalFunction.coerce(r)
    w = dict(degree_weights or {})
    acc = TruncatedSeries(r.numerator, N, w)
    for (c, m), k in r.denominator_factors.items():
        d = m.weighted_degree(w)
        if d <= 0:
            raise NonExpandable(f"denominator monomial {m} has weighted degree {d}")
        terms = {}
        j = 0
        while j * d <= N:
            terms[m ** j] = c ** j
            j += 1
        geo = TruncatedSeries(Polynomial(terms), N, w)
        for _ in range(k):
            acc = acc * geo
    return acc
