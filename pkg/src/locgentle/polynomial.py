"""Sparse multivariate polynomials with arbitrary precision integer coefficients.

Indeterminates are plain strings.  Terms are ordered graded-lexicographically;
indeterminates compare by *natural* name order (``x_a2`` before ``x_a10``).
"""
from __future__ import annotations

import re
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

__all__ = ["Monomial", "Polynomial", "var_key", "parse_monomial", "parse_polynomial"]

_NUM_RE = re.compile(r"(\d+)")


@lru_cache(maxsize=None)
def var_key(name: str) -> tuple:
    """Natural sort key for an indeterminate name."""
    parts = _NUM_RE.split(name)
    return tuple((0, int(p)) if p.isdigit() else (1, p) for p in parts if p != "")


class Monomial:
    """A power product of indeterminates; exponents are positive integers."""

    __slots__ = ("_exps", "_hash", "_key")

    def __init__(self, exps: Union[Mapping[str, int], Iterable[Tuple[str, int]], None] = None):
        if exps is None:
            items: Iterable[Tuple[str, int]] = ()
        elif isinstance(exps, Mapping):
            items = exps.items()
        else:
            items = exps
        acc: Dict[str, int] = {}
        for v, e in items:
            if e < 0:
                raise ValueError(f"negative exponent {e} for {v}")
            if e:
                acc[v] = acc.get(v, 0) + e
        self._exps = tuple(sorted(acc.items(), key=lambda ve: var_key(ve[0])))
        self._hash = hash(self._exps)
        self._key = None

    @classmethod
    def _raw(cls, exps: Tuple[Tuple[str, int], ...]) -> "Monomial":
        m = cls.__new__(cls)
        m._exps = exps
        m._hash = hash(exps)
        m._key = None
        return m

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "Monomial":
        return cls({name: exp})

    @property
    def exponents(self) -> Tuple[Tuple[str, int], ...]:
        return self._exps

    def as_dict(self) -> Dict[str, int]:
        return dict(self._exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._exps)

    def weighted_degree(self, weights: Mapping[str, int] | None = None) -> int:
        if weights is None:
            return self.degree
        return sum(weights.get(v, 1) * e for v, e in self._exps)

    def variables(self) -> Tuple[str, ...]:
        return tuple(v for v, _ in self._exps)

    def is_one(self) -> bool:
        return not self._exps

    def order_key(self) -> tuple:
        """Graded-lex key; larger key means larger monomial."""
        if self._key is None:
            # lex part scans variables from the last (in natural order) downwards
            self._key = (self.degree, tuple((var_key(v), e) for v, e in reversed(self._exps)))
        return self._key

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        a, b = self._exps, other._exps
        if not a:
            return other
        if not b:
            return self
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            va, vb = a[i][0], b[j][0]
            if va == vb:
                out.append((va, a[i][1] + b[j][1]))
                i += 1
                j += 1
            elif var_key(va) < var_key(vb):
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Monomial._raw(tuple(out))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative power of a monomial")
        return Monomial._raw(tuple((v, e * k) for v, e in self._exps)) if k else Monomial._raw(())

    def divides(self, other: "Monomial") -> bool:
        d = dict(other._exps)
        return all(d.get(v, 0) >= e for v, e in self._exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        d = dict(self._exps)
        for v, e in other._exps:
            r = d.get(v, 0) - e
            if r < 0:
                raise ArithmeticError(f"{other} does not divide {self}")
            if r:
                d[v] = r
            else:
                del d[v]
        return Monomial._raw(tuple(sorted(d.items(), key=lambda ve: var_key(ve[0]))))

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        return self.order_key() < other.order_key()

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self._exps)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


_FACTOR_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_']*)\s*(?:\^\s*(\d+))?\s*$")


def parse_monomial(text: str) -> Monomial:
    """Parse ``q^2*t`` style monomials; ``1`` is the empty product."""
    text = text.strip()
    if text == "1":
        return Monomial()
    exps: Dict[str, int] = {}
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor)
        if not m:
            raise ValueError(f"bad monomial factor {factor!r} in {text!r}")
        name, exp = m.group(1), int(m.group(2) or 1)
        exps[name] = exps.get(name, 0) + exp
    return Monomial(exps)


Coercible = Union["Polynomial", Monomial, int]


class Polynomial:
    """Immutable sparse polynomial over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Monomial, int], Iterable[Tuple[Monomial, int]], None] = None):
        acc: Dict[Monomial, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for m, c in items:
                if c:
                    c = acc.get(m, 0) + c
                    if c:
                        acc[m] = c
                    else:
                        acc.pop(m, None)
        self._terms = acc
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def coerce(cls, x: Coercible) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, Monomial):
            return cls._raw({x: 1})
        if isinstance(x, int):
            return cls._raw({Monomial._raw(()): x} if x else {})
        raise TypeError(f"cannot coerce {type(x).__name__} to Polynomial")

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        return cls._raw({Monomial.var(name): 1})

    @classmethod
    def term(cls, coeff: int, mono: Monomial) -> "Polynomial":
        return cls._raw({mono: coeff} if coeff else {})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m.is_one() for m in self._terms)

    def constant_term(self) -> int:
        return self._terms.get(Monomial._raw(()), 0)

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def variables(self) -> set:
        out = set()
        for m in self._terms:
            out.update(m.variables())
        return out

    def degree(self, weights: Mapping[str, int] | None = None) -> int:
        if not self._terms:
            return -1
        return max(m.weighted_degree(weights) for m in self._terms)

    def leading(self) -> Tuple[Monomial, int]:
        m = max(self._terms, key=Monomial.order_key)
        return m, self._terms[m]

    def as_term(self) -> Tuple[int, Monomial] | None:
        """``(c, m)`` if the polynomial is a single term, else ``None``."""
        if len(self._terms) != 1:
            return None
        (m, c), = self._terms.items()
        return c, m

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda mc: mc[0].order_key())

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Coercible) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            c = out.get(m, 0) + c
            if c:
                out[m] = c
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "Polynomial":
        return Polynomial.coerce(other) - self

    def __mul__(self, other: Coercible) -> "Polynomial":
        if isinstance(other, int):
            if not other:
                return Polynomial._raw({})
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                c = out.get(m, 0) + c1 * c2
                if c:
                    out[m] = c
                else:
                    del out[m]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.coerce(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_term(self, coeff: int, mono: Monomial) -> "Polynomial":
        return Polynomial._raw({m * mono: c * coeff for m, c in self._terms.items()})

    def exact_div(self, divisor: Coercible) -> "Polynomial | None":
        """Quotient if ``divisor`` divides ``self`` exactly, else ``None``."""
        divisor = Polynomial.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        lm, lc = divisor.leading()
        if len(divisor) == 1:
            out = {}
            for m, c in self._terms.items():
                if c % lc or not lm.divides(m):
                    return None
                out[m / lm] = c // lc
            return Polynomial._raw(out)
        rem = dict(self._terms)
        quot: Dict[Monomial, int] = {}
        dterms = [(m, c) for m, c in divisor._terms.items() if m != lm]
        while rem:
            m = max(rem, key=Monomial.order_key)
            c = rem[m]
            if c % lc or not lm.divides(m):
                return None
            qm, qc = m / lm, c // lc
            quot[qm] = qc
            del rem[m]
            for dm, dc in dterms:
                mm = dm * qm
                v = rem.get(mm, 0) - dc * qc
                if v:
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return Polynomial._raw(quot)

    def __floordiv__(self, divisor: Coercible) -> "Polynomial":
        q = self.exact_div(divisor)
        if q is None:
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    def substitute(self, mapping: Mapping[str, Coercible]) -> "Polynomial":
        """Simultaneous substitution; unmapped indeterminates stay put."""
        images = {v: Polynomial.coerce(p) for v, p in mapping.items()}
        powers: Dict[Tuple[str, int], Polynomial] = {}
        out = Polynomial._raw({})
        for m, c in self._terms.items():
            acc = Polynomial.coerce(c)
            rest = []
            for v, e in m.exponents:
                if v in images:
                    key = (v, e)
                    if key not in powers:
                        powers[key] = images[v] ** e
                    acc = acc * powers[key]
                else:
                    rest.append((v, e))
            if rest:
                acc = acc.mul_term(1, Monomial(rest))
            out = out + acc
        return out

    def evaluate(self, values: Mapping[str, int]) -> int:
        total = 0
        for m, c in self._terms.items():
            t = c
            for v, e in m.exponents:
                t *= values[v] ** e
            total += t
        return total

    def truncate(self, bound: int, weights: Mapping[str, int] | None = None) -> "Polynomial":
        return Polynomial._raw({m: c for m, c in self._terms.items() if m.weighted_degree(weights) <= bound})

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Monomial)):
            other = Polynomial.coerce(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if m.is_one():
                body = str(a)
            elif a == 1:
                body = str(m)
            else:
                body = f"{a}*{m}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def parse_polynomial(text: str) -> Polynomial:
    """Parse the canonical rendering back (``1 + 2*q^3 - t``)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    out = Polynomial()
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        coeff = 1
        factors = body.split("*")
        if factors[0].isdigit():
            coeff = int(factors[0])
            factors = factors[1:]
        mono = parse_monomial("*".join(factors)) if factors else Monomial()
        out = out + Polynomial.term(-coeff if sign == "-" else coeff, mono)
    return out

