"""Exact Laurent polynomials in one variable ``q`` over the rationals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["LaurentPoly", "q", "ONE", "ZERO", "as_poly"]


class LaurentPoly:
    """An element of Q[q, q^-1].

    Stored as a mapping ``exponent -> coefficient`` with zero coefficients
    dropped, so structural equality is ring equality.  Instances are
    immutable; every operation returns a new object.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coef in dict(terms).items():
                if coef:
                    clean[int(exp)] = Fraction(coef)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # terms already canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({0: c}) if c else cls()

    @classmethod
    def monomial(cls, coef, exp: int) -> "LaurentPoly":
        return cls({exp: coef})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_term(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    def is_unit(self) -> bool:
        """Units of Q[q, q^-1] are exactly the nonzero monomials."""
        return len(self._terms) == 1

    def inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit in Q[q, q^-1]")
        (exp, coef), = self._terms.items()
        return LaurentPoly._raw({-exp: 1 / coef})

    def degree_range(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms), max(self._terms)

    def evaluate(self, q0) -> Fraction:
        q0 = Fraction(q0)
        if q0 == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at q = 0")
        return sum((c * q0**e for e, c in self._terms.items()), Fraction(0))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if mag == 1 else f"{mag}*{qpart}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({self})"


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Rational)):
        return LaurentPoly.constant(x)
    return NotImplemented


def as_poly(x) -> LaurentPoly:
    """Promote an int or Fraction to a constant Laurent polynomial."""
    p = _coerce(x)
    if p is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")
    return p


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
q = LaurentPoly({1: 1})
