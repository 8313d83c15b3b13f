"""Structure maps of GL_q(1|1) and the hatted maps on the Grassmann generators.

All maps act on the localized mixed algebra (GL and Gr generators plus
a^-1, d^-1).  Elements are multiplied out through the Koszul rule of the
graded tensor product; map application across legs follows

    (f (x) g)(x (x) y) = (-1)^{p(g) p(x)} f(x) (x) g(y)

unless a caller asks for the plain rule (the left coaction does, since
its twist tau already carries that sign).
"""

from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Callable, Sequence

from .coeff import ONE, ZERO, LaurentPoly, q
from .freealg import Element, Presentation
from .matrix import T_matrix, That_matrix, superinverse
from .presentations import GL_NAMES, GR_NAMES, inv, presentation_by_id
from .tensoralg import TensorElement, tensor, tensor_mul, tensor_normalize

__all__ = [
    "HopfStructure",
    "default_structure",
    "apply_legs",
    "multiply_legs",
    "D_HAT_EXPLICIT",
    "S_HAT_EXPLICIT",
]

_W = Element.word

# d maps each entry of T to the matching entry of T-hat
DIFFERENTIAL_IMAGES = dict(zip(GL_NAMES, GR_NAMES))


def _as_tensor(x, legs_hint: int = 1) -> TensorElement:
    if isinstance(x, TensorElement):
        return x
    if isinstance(x, Element):
        return TensorElement._raw({(w,): c for w, c in x.items()}, 1)
    c = x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x)
    return TensorElement._raw({(): c} if c else {}, 0)


def _concat(parts: Sequence[TensorElement]) -> TensorElement:
    out: dict = {}
    legs = sum(p.legs for p in parts)
    for combo in product(*(p.items() for p in parts)):
        key = tuple(w for k, _ in combo for w in k)
        c = ONE
        for _, v in combo:
            c = c * v
        s = out[key] + c if key in out else c
        if s:
            out[key] = s
        else:
            del out[key]
    return TensorElement._raw(out, legs)


def apply_legs(t: TensorElement, maps: Sequence, P: Presentation, *,
               parities: Sequence[int] | None = None, koszul: bool = True) -> TensorElement:
    """Apply ``maps[i]`` to leg i of every term and tensor the results.

    A map may be ``None`` (identity) or a callable taking an Element and
    returning an Element, a TensorElement, or a scalar (which removes the
    leg).  ``parities`` gives the Z2 degree of each map, default all even.
    """
    if len(maps) != t.legs:
        raise ValueError(f"{len(maps)} maps for {t.legs} legs")
    parities = parities or [0] * len(maps)
    out = TensorElement.zero(0)
    first = True
    for key, c in t.items():
        exp = 0
        if koszul:
            # sum_i p(f_i) * sum_{j<i} p(w_j)
            passed = 0
            for i, w in enumerate(key):
                exp += parities[i] * passed
                passed += P.word_parity(w)
        sign = -1 if exp & 1 else 1
        parts = []
        for f, w in zip(maps, key):
            e = Element.word(*w)
            parts.append(_as_tensor(e if f is None else f(e)))
        term = _concat(parts) * (c if sign > 0 else -c)
        if first:
            out = term
            first = False
        else:
            out = out + term
    if first:
        legs = sum(1 if f is None else 0 for f in maps)
        return TensorElement.zero(legs)
    return tensor_normalize(out, P)


def multiply_legs(t: TensorElement, P: Presentation) -> Element:
    """m(x (x) y (x) ...) = x*y*..., no sign."""
    out = Element.zero()
    for key, c in t.items():
        w = tuple(x for leg in key for x in leg)
        out = out + c * Element.word(*w)
    return P.normalize(out)


def _extend(images: Callable[[str], object], e: Element, mul, one):
    """Multiplicative extension of a letter map over a linear combination."""
    total = None
    for w, c in e.items():
        acc = one
        for x in w:
            acc = mul(acc, images(x))
        term = acc * c
        total = term if total is None else total + term
    return total


def _hatted_from_matrix_rule(T, That):
    """Entrywise hatted coproduct:  T-hat (.x) T + (-1)^{p(T)} T (.x) T-hat."""
    images = {}
    for i, j in product((0, 1), repeat=2):
        acc = TensorElement.zero()
        for k in (0, 1):
            acc = acc + tensor(That[i, k], T[k, j])
            s = -1 if T.entry_parity(i, k) else 1
            acc = acc + tensor(T[i, k], That[k, j]) * s
        images[That[i, j]] = acc
    return images


def _letter(e: Element) -> str:
    (w,) = e.words()
    (x,) = w
    return x


class HopfStructure:
    """Delta, epsilon, S on the T entries and the hatted maps on T-hat."""

    def __init__(self, P: Presentation | None = None):
        self.P = P or presentation_by_id("MIXED[a,d]")
        self.T = T_matrix()
        self.That = That_matrix()

    # -- coproduct ----------------------------------------------------------

    @cached_property
    def coproduct_images(self) -> dict:
        T, That = self.T, self.That
        images = {}
        for i, j in product((0, 1), repeat=2):
            acc = TensorElement.zero()
            for k in (0, 1):
                acc = acc + tensor(T[i, k], T[k, j])
            images[_letter(T[i, j])] = acc
        for e, img in _hatted_from_matrix_rule(T, That).items():
            images[_letter(e)] = img
        return {x: tensor_normalize(v, self.P) for x, v in images.items()}

    def _coproduct_letter(self, x: str) -> TensorElement:
        try:
            return self.coproduct_images[x]
        except KeyError:
            raise ValueError(f"coproduct is not defined on {x!r}") from None

    def coproduct(self, e: Element) -> TensorElement:
        if e.is_zero():
            return TensorElement.zero()
        return _extend(self._coproduct_letter, e,
                       lambda s, t: tensor_mul(s, t, self.P), TensorElement.one())

    # -- counit -------------------------------------------------------------

    COUNIT_IMAGES = {"a": ONE, "beta": ZERO, "gamma": ZERO, "d": ONE,
                     "alpha": ZERO, "b": ZERO, "c": ZERO, "delta": ZERO,
                     inv("a"): ONE, inv("d"): ONE}

    def _counit_letter(self, x: str) -> LaurentPoly:
        if x == inv("c"):
            raise ValueError("counit is undefined on c^-1 because counit(c) = 0")
        try:
            return self.COUNIT_IMAGES[x]
        except KeyError:
            raise ValueError(f"counit is not defined on {x!r}") from None

    def counit(self, e: Element) -> LaurentPoly:
        total = ZERO
        for w, c in e.items():
            v = c
            for x in w:
                v = v * self._counit_letter(x)
                if not v:
                    break
            total = total + v
        return total

    # -- antipode -----------------------------------------------------------

    @cached_property
    def inverse_matrix(self):
        return superinverse(None, self.P)

    @cached_property
    def antipode_images(self) -> dict:
        Ti, That, P = self.inverse_matrix, self.That, self.P
        images = {}
        for i, j in product((0, 1), repeat=2):
            images[_letter(self.T[i, j])] = Ti[i, j]
        # S-hat(T-hat) = -(-1)^{p(T^-1)} T^-1 T-hat T^-1, sign from the left factor
        for i, j in product((0, 1), repeat=2):
            acc = Element.zero()
            for k, l in product((0, 1), repeat=2):
                s = 1 if Ti.entry_parity(i, k) else -1
                acc = acc + s * (Ti[i, k] * That[k, l] * Ti[l, j])
            images[_letter(That[i, j])] = P.normalize(acc)
        a, beta, gamma, d = (_W(x) for x in GL_NAMES)
        ai, di = _W(inv("a")), _W(inv("d"))
        images[inv("a")] = P.normalize(a - beta * di * gamma)
        images[inv("d")] = P.normalize(d - gamma * ai * beta)
        return images

    def _antipode_letter(self, x: str) -> Element:
        try:
            return self.antipode_images[x]
        except KeyError:
            raise ValueError(f"antipode is not defined on {x!r}") from None

    def antipode(self, e: Element, graded: bool = True) -> Element:
        """Graded anti-homomorphic extension S(xy) = (-1)^{p(x)p(y)} S(y)S(x)."""
        P = self.P
        total = Element.zero()
        for w, c in e.items():
            sign = 1
            if graded:
                ps = [P.parity(x) for x in w]
                odd = 0
                n = 0
                for p in ps:
                    if p:
                        n += odd
                        odd += 1
                sign = -1 if n & 1 else 1
            acc = Element.one()
            for x in reversed(w):
                acc = P.normalize(acc * self._antipode_letter(x))
            total = total + (c if sign > 0 else -c) * acc
        return P.normalize(total)

    # -- axioms ------------------------------------------------------------

    def _id(self, e):
        return e

    def check_axiom(self, which: str, gen: str):
        """Residuals of coassociativity, counit or antipode on a generator.

        coassoc returns one 3-leg tensor; counit and antipode return the
        pair (left version, right version) of Elements.
        """
        P = self.P
        x = _W(gen)
        D = self.coproduct(x)
        if which == "coassoc":
            left = apply_legs(D, [self.coproduct, None], P)
            right = apply_legs(D, [None, self.coproduct], P)
            return left - right
        if which == "counit":
            l = apply_legs(D, [self.counit, None], P)
            r = apply_legs(D, [None, self.counit], P)
            return (P.normalize(_leg_element(l) - x), P.normalize(_leg_element(r) - x))
        if which == "antipode":
            eps = Element.scalar(self.counit(x))
            l = multiply_legs(apply_legs(D, [self.antipode, None], P), P)
            r = multiply_legs(apply_legs(D, [None, self.antipode], P), P)
            return (P.normalize(l - eps), P.normalize(r - eps))
        raise ValueError(f"unknown axiom {which!r}")

    def check_homomorphism(self, which: str, Q: Presentation) -> list:
        """Apply a map to lhs - rhs of every rule of Q; return the survivors.

        ``which`` is "coproduct", "counit" (homomorphisms) or "antipode"
        (graded anti-homomorphism).
        """
        bad = []
        for (x, y), rhs in Q.rules.items():
            rel = _W(x, y) - rhs
            if which == "coproduct":
                r = self.coproduct(rel)
            elif which == "counit":
                r = self.counit(rel)
            elif which == "antipode":
                r = self.antipode(rel)
            else:
                raise ValueError(f"unknown map {which!r}")
            if not r.is_zero():
                bad.append(((x, y), r))
        return bad

    # -- differential and coactions ------------------------------------------

    def _d_letter(self, x: str) -> Element:
        if x in DIFFERENTIAL_IMAGES:
            return _W(DIFFERENTIAL_IMAGES[x])
        if x in GR_NAMES or x == inv("c"):
            return Element.zero()
        if x.endswith("^-1") and x[:-3] in DIFFERENTIAL_IMAGES:
            xi = _W(x)
            return -(xi * _W(DIFFERENTIAL_IMAGES[x[:-3]]) * xi)
        raise ValueError(f"differential is not defined on {x!r}")

    def differential(self, e: Element) -> Element:
        """Odd derivation: d(xy) = d(x) y + (-1)^{p(x)} x d(y); d^2 = 0."""
        P = self.P
        total = Element.zero()
        for w, c in e.items():
            for i, x in enumerate(w):
                dx = self._d_letter(x)
                if dx.is_zero():
                    continue
                sign = -1 if P.word_parity(w[:i]) else 1
                total = total + (c if sign > 0 else -c) * (_W(*w[:i]) * dx * _W(*w[i + 1:]))
        return P.normalize(total)

    def tau(self, e: Element) -> Element:
        return Element({w: (c if not self.P.word_parity(w) else -c) for w, c in e.items()})

    def coaction(self, side: str, form_gen: str) -> TensorElement:
        """Delta_R(d t) = (d (x) id) Delta(t), Delta_L(d t) = (tau (x) d) Delta(t)."""
        t = _source_of(form_gen)
        D = self.coproduct(_W(t))
        if side == "right":
            return apply_legs(D, [self.differential, None], self.P, parities=[1, 0])
        if side == "left":
            # tau carries the Koszul sign of d passing the left leg
            return apply_legs(D, [self.tau, self.differential], self.P, koszul=False)
        raise ValueError("side must be 'right' or 'left'")

    def phi(self, side: str, form: Element) -> TensorElement:
        """Extend the coaction to u1 (d v) u2 by Delta(u1) Delta_side(d v) Delta(u2)."""
        P = self.P
        total = TensorElement.zero()
        for w, c in form.items():
            hatted = [i for i, x in enumerate(w) if x in GR_NAMES]
            if len(hatted) > 1:
                raise ValueError("phi is only defined on forms of degree at most 1")
            if any(x.endswith("^-1") for x in w):
                raise ValueError("phi is not defined on inverted generators")
            if not hatted:
                piece = self.coproduct(_W(*w))
            else:
                i = hatted[0]
                piece = self.coproduct(_W(*w[:i]))
                piece = tensor_mul(piece, self.coaction(side, w[i]), P)
                piece = tensor_mul(piece, self.coproduct(_W(*w[i + 1:])), P)
            total = total + piece * c
        return tensor_normalize(total, P)


def _source_of(form_gen: str) -> str:
    for t, h in DIFFERENTIAL_IMAGES.items():
        if h == form_gen:
            return t
    raise ValueError(f"{form_gen!r} is not a Grassmann generator")


def _leg_element(t: TensorElement) -> Element:
    if t.legs != 1:
        raise ValueError("expected a single-leg tensor")
    return Element({k[0]: c for k, c in t.items()})


def D_HAT_EXPLICIT() -> dict:
    """The four hatted coproducts written out term by term."""
    a, beta, gamma, d = (_W(x) for x in GL_NAMES)
    alpha, b, c, delta = (_W(x) for x in GR_NAMES)
    return {
        "alpha": tensor(alpha, a) + tensor(b, gamma) + tensor(a, alpha) - tensor(beta, c),
        "b": tensor(b, d) + tensor(alpha, beta) + tensor(a, b) - tensor(beta, delta),
        "c": tensor(c, a) + tensor(delta, gamma) - tensor(gamma, alpha) + tensor(d, c),
        "delta": tensor(delta, d) + tensor(c, beta) - tensor(gamma, b) + tensor(d, delta),
    }


def S_HAT_EXPLICIT(Ti) -> dict:
    """Closed forms of the four hatted antipodes in terms of A, Omega, Gamma, D."""
    A, Om, Ga, D = Ti[0, 0], Ti[0, 1], Ti[1, 0], Ti[1, 1]
    alpha, b, c, delta = (_W(x) for x in GR_NAMES)
    return {
        "alpha": -((alpha * A + b * Ga) * A) + q * (c * A + delta * Ga) * Om,
        "b": -((alpha * A - c * Om) * Om) - q * (b * A + delta * Om) * D,
        "c": -((alpha * A + b * Ga) * Ga) - q * (c * A + delta * Ga) * D,
        "delta": q**2 * (alpha * A - c * Om) * D + q * (alpha * Om + q**2 * b * D) * Ga
                 - (alpha * A + q**2 * delta * D) * D,
    }


_DEFAULT = None


def default_structure() -> HopfStructure:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = HopfStructure()
    return _DEFAULT
