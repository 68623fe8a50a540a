"""Exact Laurent polynomials in one variable ``A`` with integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable element of Z[A, A^-1].

    Stored as a mapping ``exponent -> coefficient`` with no zero
    coefficients; the zero polynomial is the empty mapping.  Python ints
    give arbitrary precision for free.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly({-e * -n: c ** -n})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``A**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> "LaurentPoly":
        """Substitute ``A -> A^-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # degrees
    def degrees(self) -> tuple[int, int, int]:
        """Return ``(mindeg, maxdeg, span)``."""
        if not self._terms:
            raise ValueError("degree of zero undefined")
        lo, hi = min(self._terms), max(self._terms)
        return lo, hi, hi - lo

    def unit_normalized(self) -> "LaurentPoly":
        """Representative of the class of ``self`` modulo units ``±A^k``.

        Lowest exponent moved to 0 and leading (lowest-degree) coefficient
        made positive.
        """
        if not self._terms:
            return self
        lo = min(self._terms)
        p = self.shift(-lo)
        return -p if p._terms[0] < 0 else p

    def divides_by_unit(self, other: "LaurentPoly"):
        """Return the unit ``u = ±A^k`` with ``self == u * other``, else None."""
        if self.is_zero() or other.is_zero():
            return ONE if self.is_zero() and other.is_zero() else None
        k = min(self._terms) - min(other._terms)
        for s in (1, -1):
            if self == other.shift(k) * s:
                return LaurentPoly({k: s})
        return None

    # output
    def to_pairs(self) -> list[list[int]]:
        """Structured form: ``[[exponent, coefficient], ...]`` descending."""
        return [[e, self._terms[e]] for e in sorted(self._terms, reverse=True)]

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        return cls((e, c) for e, c in pairs)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self._terms, reverse=True)):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def degrees(p: LaurentPoly) -> tuple[int, int, int]:
    return p.degrees()


_TERM = re.compile(r"([+-])(?:(\d+)\*?)?(?:(A)(?:\^(-?\d+))?)?")


def parse(text: str) -> LaurentPoly:
    """Inverse of ``str``: parse ``"A^2 - 3 + A^-1"`` style text."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    terms: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos + 1:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        sign, coef, var, exp = m.groups()
        c = int(coef) if coef else 1
        e = (int(exp) if exp else 1) if var else 0
        if not var and not coef:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        terms[e] = terms.get(e, 0) + (c if sign == "+" else -c)
        pos = m.end()
    return LaurentPoly(terms)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
A = LaurentPoly.monomial(1)
A_INV = LaurentPoly.monomial(-1)
# value of an unknotted circle, and the loop weight appearing in the flow polynomial
SIGMA = A + 1 + A_INV
SIGMA_PRIME = -A - 2 - A_INV
