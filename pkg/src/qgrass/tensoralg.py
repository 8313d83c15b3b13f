"""Graded tensor powers A (x) ... (x) A with Koszul-sign multiplication."""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .coeff import ONE, as_poly
from .freealg import Element, Presentation

__all__ = ["TensorElement", "tensor", "tensor_mul", "tensor_normalize", "tensor_is_zero", "koszul_sign"]


class TensorElement:
    """Linear combination of n-tuples of words, one word per tensor leg."""

    __slots__ = ("_terms", "legs")

    def __init__(self, terms=None, legs: int = 2):
        self.legs = legs
        clean = {}
        if terms:
            for key, c in terms.items():
                key = tuple(tuple(w) for w in key)
                if len(key) != legs:
                    raise ValueError(f"expected {legs} legs, got {len(key)}")
                c = as_poly(c)
                if c:
                    clean[key] = clean[key] + c if key in clean else c
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, terms: dict, legs: int) -> "TensorElement":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.legs = legs
        return obj

    @classmethod
    def zero(cls, legs: int = 2) -> "TensorElement":
        return cls._raw({}, legs)

    @classmethod
    def one(cls, legs: int = 2) -> "TensorElement":
        return cls._raw({((),) * legs: ONE}, legs)

    def items(self):
        return self._terms.items()

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if other.legs != self.legs:
            raise ValueError("cannot add tensors with different numbers of legs")
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out[k] + c if k in out else c
            if s:
                out[k] = s
            else:
                del out[k]
        return TensorElement._raw(out, self.legs)

    def __neg__(self):
        return TensorElement._raw({k: -c for k, c in self._terms.items()}, self.legs)

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return NotImplemented  # needs parities, use tensor_mul
        c = as_poly(other)
        return TensorElement._raw({k: v * c for k, v in self._terms.items() if v * c}, self.legs)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.legs == other.legs and self._terms == other._terms

    def __hash__(self):
        return hash((self.legs, frozenset(self._terms.items())))

    def format(self, P: Presentation | None = None) -> str:
        if not self._terms:
            return "0"
        key = (lambda k: tuple(P.sort_key(w) for w in k)) if P else (lambda k: k)
        parts = []
        for k in sorted(self._terms, key=key):
            c = self._terms[k]
            mono = " (x) ".join("*".join(w) if w else "1" for w in k)
            if c == ONE:
                parts.append(mono)
            elif c == -ONE:
                parts.append(f"-{mono}")
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"TensorElement({self})"


def tensor(*factors: Element) -> TensorElement:
    """x1 (x) x2 (x) ... expanded multilinearly."""
    out: dict = {}
    for combo in product(*(f.items() for f in factors)):
        key = tuple(w for w, _ in combo)
        c = ONE
        for _, v in combo:
            c = c * v
        out[key] = out[key] + c if key in out else c
    return TensorElement._raw({k: v for k, v in out.items() if v}, len(factors))


def koszul_sign(P: Presentation, left: Sequence, right: Sequence) -> int:
    """Sign of (A1 (x) ... (x) An)(B1 (x) ... (x) Bn) -> prod(A_i B_i).

    Each B_j travels leftward past A_i for every i > j.
    """
    pa = [P.word_parity(w) for w in left]
    pb = [P.word_parity(w) for w in right]
    n = 0
    for j in range(len(pb)):
        if pb[j]:
            n += sum(pa[j + 1:])
    return -1 if n & 1 else 1


def tensor_normalize(x: TensorElement, P: Presentation) -> TensorElement:
    out: dict = {}
    for key, c in x.items():
        nfs = [P.normalize(Element.word(*w)).items() for w in key]
        for combo in product(*nfs):
            k = tuple(w for w, _ in combo)
            v = c
            for _, d in combo:
                v = v * d
            s = out[k] + v if k in out else v
            if s:
                out[k] = s
            else:
                del out[k]
    return TensorElement._raw(out, x.legs)


def tensor_mul(x: TensorElement, y: TensorElement, P: Presentation) -> TensorElement:
    """(A (x) B)(C (x) D) = (-1)^{p(B)p(C)} AC (x) BD, extended to n legs."""
    if x.legs != y.legs:
        raise ValueError("tensor legs differ")
    raw: dict = {}
    for k1, c1 in x.items():
        for k2, c2 in y.items():
            s = koszul_sign(P, k1, k2)
            k = tuple(a + b for a, b in zip(k1, k2))
            v = c1 * c2 if s > 0 else -(c1 * c2)
            raw[k] = raw[k] + v if k in raw else v
    return tensor_normalize(TensorElement._raw({k: v for k, v in raw.items() if v}, x.legs), P)


def tensor_is_zero(x: TensorElement, P: Presentation) -> bool:
    return tensor_normalize(x, P).is_zero()
