"""The concrete algebras: GL_q(1|1), Gr_q(1|1), their mixed algebra,
localizations at even generators, and the supercommuting double.

Generator names are ASCII: ``a beta gamma d`` for the entries of T and
``alpha b c delta`` for the entries of the Grassmann matrix.  The
adjoined inverse of ``x`` is ``x^-1``; the primed copy in the double is
``x'``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .coeff import LaurentPoly, q
from .freealg import (
    Element,
    Generator,
    Presentation,
    PresentationError,
)

__all__ = [
    "GL_NAMES",
    "GR_NAMES",
    "gl_q",
    "gr_q",
    "mixed",
    "localize",
    "supercommuting_double",
    "inv",
    "primed",
    "presentation_by_id",
    "PRESENTATION_IDS",
    "gl_relations",
    "gr_relations",
    "mixed_relations",
]

GL_NAMES = ("a", "beta", "gamma", "d")
GR_NAMES = ("alpha", "b", "c", "delta")
GL_PARITY = {"a": 0, "beta": 1, "gamma": 1, "d": 0}
GR_PARITY = {"alpha": 1, "b": 0, "c": 0, "delta": 1}


def inv(name: str) -> str:
    return f"{name}^-1"


def primed(name: str) -> str:
    return f"{name}'"


def _w(*letters):
    return Element.word(*letters)


def _orient(lhs: tuple, rhs: Element, rank: dict) -> tuple[tuple, Element]:
    """Turn the relation ``x*y = rhs`` into a rule with a descending head.

    For x > y the relation is already a rule.  For x < y the right-hand
    side must contain ``y*x`` with a unit coefficient k, and the relation
    is solved for it: ``y*x -> k^-1 (x*y - (rhs - k y*x))``.
    """
    x, y = lhs
    if x == y or rank[x] > rank[y]:
        return lhs, rhs
    k = rhs.coefficient((y, x))
    if not k.is_unit():
        raise PresentationError(f"cannot solve relation {x}*{y} for {y}*{x}")
    rest = rhs - k * _w(y, x)
    kinv = k.inverse()
    return (y, x), kinv * _w(x, y) - kinv * rest


def _build(name: str, generators: list, relations: Iterable, fuel: int | None = None) -> Presentation:
    """Orient the relations, then store every rhs in normal form."""
    rank = {g.name: g.precedence for g in generators}
    raw = {}
    for lhs, rhs in relations:
        head, body = _orient(tuple(lhs), rhs, rank)
        if head in raw:
            raise PresentationError(f"{name}: two rules for {'*'.join(head)}")
        raw[head] = body
    draft = Presentation(name, generators, raw, validate=False)
    final = {head: draft.normalize(body, fuel) for head, body in raw.items()}
    return Presentation(name, generators, final)


def _gl_relations():
    a, beta, gamma, d = (_w(x) for x in GL_NAMES)
    return [
        (("a", "beta"), q * beta * a),
        (("d", "beta"), q * beta * d),
        (("a", "gamma"), q * gamma * a),
        (("d", "gamma"), q * gamma * d),
        (("beta", "gamma"), -(gamma * beta)),
        (("beta", "beta"), Element.zero()),
        (("gamma", "gamma"), Element.zero()),
        (("a", "d"), d * a + (q - q**-1) * gamma * beta),
    ]


def _gr_relations():
    alpha, b, c, delta = (_w(x) for x in GR_NAMES)
    return [
        (("alpha", "b"), q**-1 * b * alpha),
        (("alpha", "c"), q**-1 * c * alpha),
        (("delta", "b"), q**-1 * b * delta),
        (("delta", "c"), q**-1 * c * delta),
        (("alpha", "delta"), -(delta * alpha)),
        (("alpha", "alpha"), Element.zero()),
        (("delta", "delta"), Element.zero()),
        (("b", "c"), c * b + (q - q**-1) * delta * alpha),
    ]


def _mixed_relations():
    a, beta, gamma, d = (_w(x) for x in GL_NAMES)
    alpha, b, c, delta = (_w(x) for x in GR_NAMES)
    k = q - q**-1
    return [
        (("a", "alpha"), q**2 * alpha * a),
        (("beta", "alpha"), -q * alpha * beta),
        (("a", "b"), q * b * a + (q**2 - 1) * alpha * beta),
        (("beta", "b"), b * beta),
        (("a", "c"), q * c * a + (q**2 - 1) * alpha * gamma),
        (("beta", "c"), c * beta + k * alpha * d),
        (("a", "delta"), delta * a + k * (beta * c - b * gamma)),
        (("beta", "delta"), -q**-1 * delta * beta + (1 - q**-2) * b * d),
        (("d", "alpha"), alpha * d),
        (("gamma", "alpha"), -q * alpha * gamma),
        (("d", "b"), q**-1 * b * d),
        (("gamma", "b"), b * gamma - k * alpha * d),
        (("d", "c"), q**-1 * c * d),
        (("gamma", "c"), c * gamma),
        (("d", "delta"), q**-2 * delta * d),
        (("gamma", "delta"), -q**-1 * delta * gamma + (1 - q**-2) * c * d),
    ]


def _as_elements(relations) -> list:
    return [Element.word(*lhs) - rhs for lhs, rhs in relations]


def gl_relations() -> list:
    """The eight defining relations of GL_q(1|1) as elements lhs - rhs."""
    return _as_elements(_gl_relations())


def gr_relations() -> list:
    return _as_elements(_gr_relations())


def mixed_relations() -> list:
    """The sixteen cross relations between T and T-hat entries."""
    return _as_elements(_mixed_relations())


def _gens(names, parity, start=0):
    return [Generator(n, parity[n], start + i) for i, n in enumerate(names)]


@lru_cache(maxsize=None)
def gl_q() -> Presentation:
    """Functions on GL_q(1|1); precedence a < beta < gamma < d."""
    return _build("GL", _gens(GL_NAMES, GL_PARITY), _gl_relations())


@lru_cache(maxsize=None)
def gr_q() -> Presentation:
    """Functions on Gr_q(1|1); precedence alpha < b < c < delta."""
    return _build("GR", _gens(GR_NAMES, GR_PARITY), _gr_relations())


@lru_cache(maxsize=None)
def mixed() -> Presentation:
    """GL and Gr generators together with the sixteen cross relations.

    Grassmann generators rank after the GL ones, so cross rules move them
    to the right.
    """
    gens = _gens(GL_NAMES, GL_PARITY) + _gens(GR_NAMES, GR_PARITY, start=4)
    rels = _gl_relations() + _gr_relations() + _mixed_relations()
    return _build("MIXED", gens, rels)


def _relation_between(rules: dict, x: str, y: str) -> tuple[LaurentPoly, Element]:
    """Read off ``x*y = k*y*x + C`` from whichever rule governs the pair."""
    if (x, y) in rules:
        rhs = rules[(x, y)]
        k = rhs.coefficient((y, x))
        return k, rhs - k * _w(y, x)
    if (y, x) in rules:
        rhs = rules[(y, x)]
        k = rhs.coefficient((x, y))
        if not k.is_unit():
            raise PresentationError(f"rule {y}*{x} cannot be solved for {x}*{y}")
        kinv = k.inverse()
        return kinv, -kinv * (rhs - k * _w(x, y))
    raise PresentationError(f"no rule relates {x} and {y}")


def _inverse_rules(rules: dict, x: str, letters: Iterable[str], rank: dict) -> dict:
    """Rules for ``x^-1`` against each letter, by conjugating ``x*y = k*y*x + C``.

    Conjugation by ``x^-1`` gives ``y*x^-1 = k*x^-1*y + x^-1*C*x^-1``; the
    returned rule heads are whichever order is descending.
    """
    xi = inv(x)
    new = {}
    for y in letters:
        if y.endswith("^-1") and y in rank and rank[y] < rank[xi]:
            continue
        if y in (x, xi):
            continue
        k, corr = _relation_between(rules, x, y)
        if not k.is_unit():
            raise PresentationError(f"{x}*{y} has no invertible swap coefficient")
        sandwich = _w(xi) * corr * _w(xi)
        if rank[y] < rank[xi]:
            kinv = k.inverse()
            new[(xi, y)] = kinv * _w(y, xi) - kinv * sandwich
        else:
            new[(y, xi)] = k * _w(xi, y) + sandwich
    return new


def localize(P: Presentation, invertibles: Iterable[str], fuel: int | None = None) -> Presentation:
    """Adjoin inverses of the given even generators.

    Each inverse ranks immediately after its generator, so ``x`` and
    ``x^-1`` can always meet and cancel.  Every derived swap rule is
    checked by multiplying it back with ``x`` on both sides.
    """
    invertibles = sorted(set(invertibles), key=P.rank)
    for x in invertibles:
        if x not in P:
            raise PresentationError(f"{x!r} is not a generator of {P.name}")
        if P.parity(x) != 0:
            raise PresentationError(f"{x!r} is odd, hence nilpotent and not invertible")
        if inv(x) in P:
            raise PresentationError(f"{x!r} is already inverted in {P.name}")

    gens = []
    for g in P.generators:
        gens.append(g.name)
        if g.name in invertibles:
            gens.append(inv(g.name))
    parity = {g.name: g.parity for g in P.generators}
    parity.update({inv(x): 0 for x in invertibles})
    generators = [Generator(n, parity[n], i) for i, n in enumerate(gens)]
    rank = {g.name: g.precedence for g in generators}

    rules = dict(P.rules)
    derived = {}
    present = list(P.names)
    done = []
    for x in invertibles:
        rules[(x, inv(x))] = Element.one()
        rules[(inv(x), x)] = Element.one()
        fresh = _inverse_rules(rules, x, present, rank)
        # x^-1 against an earlier z^-1: conjugating z*x^-1 by z^-1 leaves the
        # recurring pair behind a nilpotent factor; the other way round it
        # leads the correction term and rewriting never terminates
        for z in done:
            fresh.update(_inverse_rules({**rules, **fresh}, z, [inv(x)], rank))
        rules.update(fresh)
        derived.update(fresh)
        present.append(inv(x))
        done.append(x)

    name = f"{P.name}[{','.join(inv(x) for x in invertibles)}]"
    draft = Presentation(name, generators, rules, validate=False)
    final = {head: draft.normalize(body, fuel) for head, body in rules.items()}
    result = Presentation(name, generators, final)
    for head in derived:
        _multiply_back(result, P, head)
    result.base = P
    result.invertibles = tuple(invertibles)
    return result


def _multiply_back(L: Presentation, base: Presentation, head: tuple):
    """Sandwich a derived rule between copies of the inverted generator.

    ``x * (x^-1 y) * x`` collapses to ``y x`` by cancellation alone, so the
    rule is sound iff ``x * rhs * x`` has the same normal form as ``y x``.
    """
    u, v = head
    xi = u if u.endswith("^-1") and u[:-3] in base else v
    x = xi[:-3]
    lhs = _w(*head)
    rhs = L.rules[head]
    back = L.normalize(_w(x) * (lhs - rhs) * _w(x))
    if not back.is_zero():
        raise PresentationError(f"derived rule {u}*{v} fails multiply-back: {back}")


def supercommuting_double(P: Presentation) -> Presentation:
    """Two copies of P whose generators supercommute with each other."""
    n = len(P.generators)
    gens = [Generator(g.name, g.parity, i) for i, g in enumerate(P.generators)]
    gens += [Generator(primed(g.name), g.parity, n + i) for i, g in enumerate(P.generators)]
    ren = {g.name: primed(g.name) for g in P.generators}
    rules = dict(P.rules)
    for (x, y), rhs in P.rules.items():
        rules[(ren[x], ren[y])] = rhs.rename(ren)
    for gp in P.generators:
        for g in P.generators:
            sign = -1 if gp.parity and g.parity else 1
            rules[(ren[gp.name], g.name)] = sign * _w(g.name, ren[gp.name])
    return Presentation(f"DOUBLE({P.name})", gens, rules)


PRESENTATION_IDS = (
    "GL", "GR", "MIXED", "DOUBLE",
    "GL[a,d]", "GR[c]", "MIXED[a,d]", "MIXED[a,d,c]",
)


@lru_cache(maxsize=None)
def presentation_by_id(pid: str) -> Presentation:
    table = {
        "GL": gl_q,
        "GR": gr_q,
        "MIXED": mixed,
        "DOUBLE": lambda: supercommuting_double(gr_q()),
        "GL[a,d]": lambda: localize(gl_q(), {"a", "d"}),
        "GR[c]": lambda: localize(gr_q(), {"c"}),
        "MIXED[a,d]": lambda: localize(mixed(), {"a", "d"}),
        "MIXED[a,d,c]": lambda: localize(mixed(), {"a", "d", "c"}),
    }
    try:
        return table[pid]()
    except KeyError:
        raise KeyError(f"unknown presentation {pid!r}; choose from {', '.join(PRESENTATION_IDS)}") from None
