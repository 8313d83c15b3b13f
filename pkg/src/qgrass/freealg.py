"""Z2-graded free algebra over Q[q, q^-1] and quadratic normal ordering.

An :class:`Element` is a plain linear combination of words; its ``*`` is
free concatenation.  A :class:`Presentation` fixes an ordering of the
generators together with rewrite rules ``xy -> rhs`` for descending
adjacent pairs, and :meth:`Presentation.normalize` reduces an element to
its unique normal form (unique because the rule sets are checked for
local confluence, see :func:`check_local_confluence`).
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterable, Mapping

from .coeff import ONE, LaurentPoly, as_poly

__all__ = [
    "DEFAULT_FUEL",
    "Element",
    "FuelExhausted",
    "Generator",
    "Presentation",
    "PresentationError",
    "check_local_confluence",
    "is_zero_mod",
    "multiply",
    "normalize",
    "default_fuel",
    "fuel_limit",
    "substitute",
]

DEFAULT_FUEL = 10**6
_fuel_limit = [DEFAULT_FUEL]


def default_fuel() -> int:
    return _fuel_limit[0]


@contextmanager
def fuel_limit(n: int):
    """Temporarily change the rewrite budget used when none is passed."""
    if n <= 0:
        raise ValueError("fuel must be positive")
    old = _fuel_limit[0]
    _fuel_limit[0] = n
    try:
        yield
    finally:
        _fuel_limit[0] = old

Word = tuple  # tuple[str, ...]


class FuelExhausted(RuntimeError):
    """Raised when normalization does not reach a fixpoint within budget."""


class PresentationError(ValueError):
    """A presentation violates one of its structural invariants."""


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int
    precedence: int


class Element:
    """Finite linear combination of words with Laurent polynomial coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, object] | None = None):
        clean = {}
        if terms:
            for w, c in terms.items():
                c = as_poly(c)
                if c:
                    clean[tuple(w)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "Element":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def word(cls, *letters: str) -> "Element":
        return cls._raw({tuple(letters): ONE})

    @classmethod
    def scalar(cls, c) -> "Element":
        c = as_poly(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def zero(cls) -> "Element":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Element":
        return cls._raw({(): ONE})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coefficient(self, word: Iterable[str]) -> LaurentPoly:
        return self._terms.get(tuple(word), LaurentPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def letters(self) -> set:
        return {x for w in self._terms for x in w}

    def map_coefficients(self, f) -> "Element":
        return Element({w: f(c) for w, c in self._terms.items()})

    def rename(self, mapping: Mapping[str, str]) -> "Element":
        return Element._raw(
            {tuple(mapping.get(x, x) for x in w): c for w, c in self._terms.items()}
        )

    # -- vector space and free product --------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out[w] + c if w in out else c
            if s:
                out[w] = s
            else:
                del out[w]
        return Element._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw({w: -c for w, c in self._terms.items()})

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
        if isinstance(other, Element):
            out: dict = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    w = w1 + w2
                    out[w] = out[w] + c1 * c2 if w in out else c1 * c2
            return Element._raw({w: c for w, c in out.items() if c})
        try:
            c = as_poly(other)
        except TypeError:
            return NotImplemented
        if not c:
            return Element._raw({})
        return Element._raw({w: v * c for w, v in self._terms.items() if v * c})

    def __rmul__(self, other):
        # scalars commute with everything
        return self.__mul__(other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Element.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def sorted_terms(self, key=None):
        key = key or (lambda w: (len(w), w))
        return sorted(self._terms.items(), key=lambda t: key(t[0]))

    def format(self, key=None) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms(key):
            mono = "*".join(w) if w else "1"
            if c == ONE:
                parts.append(mono)
            elif c == -ONE:
                parts.append(f"-{mono}")
            elif not w:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Element({self})"


def _coerce(x):
    if isinstance(x, Element):
        return x
    try:
        return Element.scalar(x)
    except TypeError:
        return NotImplemented


class _Fuel:
    __slots__ = ("left", "total")

    def __init__(self, amount: int):
        self.left = amount
        self.total = amount

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise FuelExhausted(f"normalization exceeded {self.total} rewrite steps")


class Presentation:
    """Graded generators plus oriented quadratic rewrite rules.

    ``rules`` maps an ordered pair of generator names (a descending pair
    in precedence, or an inverse-cancellation pair) to its replacement.
    Construction validates grading homogeneity and that every stored
    right-hand side is already irreducible.
    """

    def __init__(self, name: str, generators: Iterable[Generator],
                 rules: Mapping[tuple, Element], *, validate: bool = True):
        self.name = name
        self.generators = tuple(sorted(generators, key=lambda g: g.precedence))
        self._by_name = {g.name: g for g in self.generators}
        if len(self._by_name) != len(self.generators):
            raise PresentationError(f"{name}: duplicate generator names")
        if len({g.precedence for g in self.generators}) != len(self.generators):
            raise PresentationError(f"{name}: precedences must be distinct")
        self.rules = {tuple(k): v for k, v in rules.items()}
        self._cache: dict = {}
        if validate:
            self._validate()

    # -- lookup -------------------------------------------------------------

    @property
    def names(self) -> tuple:
        return tuple(g.name for g in self.generators)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def generator(self, name: str) -> Generator:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a generator of {self.name}") from None

    def gen(self, name: str) -> Element:
        self.generator(name)
        return Element.word(name)

    def parity(self, name: str) -> int:
        return self._by_name[name].parity

    def word_parity(self, word: Word) -> int:
        return sum(self._by_name[x].parity for x in word) & 1

    def element_parity(self, e: Element) -> int | None:
        """Common parity of the terms of ``e``; ``None`` if mixed, 0 for zero."""
        ps = {self.word_parity(w) for w in e.words()}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def rank(self, name: str) -> int:
        return self._by_name[name].precedence

    def is_irreducible(self, word: Word) -> bool:
        return all((word[i], word[i + 1]) not in self.rules for i in range(len(word) - 1))

    def sort_key(self, word: Word):
        return (len(word), tuple(self.rank(x) for x in word))

    def format(self, e: Element) -> str:
        return e.format(self.sort_key)

    def _validate(self):
        for (x, y), rhs in self.rules.items():
            if x not in self or y not in self:
                raise PresentationError(f"{self.name}: rule {x}{y} uses unknown generator")
            p = self.word_parity((x, y))
            for w in rhs.words():
                for z in w:
                    if z not in self:
                        raise PresentationError(f"{self.name}: {z!r} unknown in rule {x}*{y}")
                if self.word_parity(w) != p:
                    raise PresentationError(
                        f"{self.name}: rule {x}*{y} -> {rhs} mixes parities")
                if not self.is_irreducible(w):
                    raise PresentationError(
                        f"{self.name}: rhs word {'*'.join(w)} of rule {x}*{y} is reducible")

    # -- normal forms -------------------------------------------------------

    def _nf_word(self, word: Word, fuel: _Fuel) -> dict:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        if len(word) <= 1:
            result = {word: ONE}
        else:
            result: dict = {}
            for u, c in self._nf_word(word[:-1], fuel).items():
                for v, d in self._insert(u, word[-1], fuel).items():
                    _acc(result, v, c * d)
        self._cache[word] = result
        return result

    def _insert(self, u: Word, x: str, fuel: _Fuel) -> dict:
        # u is irreducible; only the seam (u[-1], x) can be a redex
        if not u:
            return {(x,): ONE}
        rhs = self.rules.get((u[-1], x))
        if rhs is None:
            return {u + (x,): ONE}
        fuel.spend()
        head = u[:-1]
        result: dict = {}
        for r, c in rhs.items():
            for v, d in self._nf_word(head + r, fuel).items():
                _acc(result, v, c * d)
        return result

    def normalize(self, e: Element, fuel: int | None = None) -> Element:
        budget = _Fuel(fuel or default_fuel())
        out: dict = {}
        try:
            for w, c in e.items():
                for z in w:
                    if z not in self._by_name:
                        raise KeyError(f"{z!r} is not a generator of {self.name}")
                for v, d in self._nf_word(w, budget).items():
                    _acc(out, v, c * d)
        except RecursionError:
            raise FuelExhausted(f"{self.name}: rewriting did not terminate") from None
        for w in out:
            assert self.is_irreducible(w), f"normal form word {w} is reducible"
        return Element._raw(out)

    def multiply(self, *factors: Element, fuel: int | None = None) -> Element:
        out = Element.one()
        for f in factors:
            out = self.normalize(out * self.normalize(f, fuel), fuel)
        return out

    def is_zero_mod(self, e: Element, fuel: int | None = None) -> bool:
        return self.normalize(e, fuel).is_zero()

    def dump(self) -> str:
        """One ``lhs -> rhs`` line per rule, ordered by the lhs precedences."""
        lines = []
        for (x, y) in sorted(self.rules, key=lambda k: (self.rank(k[0]), self.rank(k[1]))):
            lines.append(f"{x}*{y} -> {self.format(self.rules[(x, y)])}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"Presentation({self.name!r}, {len(self.generators)} generators, {len(self.rules)} rules)"


def _acc(d: dict, w: Word, c: LaurentPoly):
    if not c:
        return
    s = d[w] + c if w in d else c
    if s:
        d[w] = s
    else:
        del d[w]


def normalize(e: Element, P: Presentation, fuel: int | None = None) -> Element:
    return P.normalize(e, fuel)


def multiply(e1: Element, e2: Element, P: Presentation, fuel: int | None = None) -> Element:
    return P.multiply(e1, e2, fuel=fuel)


def is_zero_mod(e: Element, P: Presentation, fuel: int | None = None) -> bool:
    return P.is_zero_mod(e, fuel)


def check_local_confluence(P: Presentation, fuel: int | None = None) -> list:
    """Resolve every overlap ``xyz`` with ``xy`` and ``yz`` both rule heads.

    Returns ``(word, difference)`` pairs for the overlaps whose two one-step
    reductions have different normal forms.  An empty list means the rule
    system is locally confluent, which together with termination gives
    unique normal forms (diamond lemma).
    """
    by_first: dict = {}
    for (x, y) in P.rules:
        by_first.setdefault(x, []).append(y)
    bad = []
    for (x, y), rhs_xy in P.rules.items():
        for z in by_first.get(y, ()):
            left = P.normalize(rhs_xy * Element.word(z), fuel)
            right = P.normalize(Element.word(x) * P.rules[(y, z)], fuel)
            diff = left - right
            if not diff.is_zero():
                bad.append(((x, y, z), diff))
    bad.sort(key=lambda t: tuple(P.rank(s) for s in t[0]))
    return bad


def substitute(e: Element, images) -> Element:
    """Replace each letter x by ``images[x]`` (an Element) in the free algebra.

    Letters missing from ``images`` are kept.
    """
    out = Element.zero()
    for w, c in e.items():
        acc = Element.scalar(c)
        for x in w:
            acc = acc * (images[x] if x in images else Element.word(x))
        out = out + acc
    return out
