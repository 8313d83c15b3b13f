"""Named verification suites.

Every check computes residuals that must vanish identically in q.  A
residual may be an Element, TensorElement, LaurentPoly, a (nested) list
of those, or a plain string, which always counts as a failure message.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .coeff import LaurentPoly, q
from .freealg import Element, check_local_confluence, substitute
from .hopf import D_HAT_EXPLICIT, S_HAT_EXPLICIT, default_structure
from .matrix import (
    T_matrix,
    That_matrix,
    degree2_span_check,
    grdet,
    grdet_right,
    identity,
    mat_mul,
    rtt_residual,
    sdet,
    sdet_short,
    superinverse,
)
from .presentations import (
    GL_NAMES,
    GR_NAMES,
    PRESENTATION_IDS,
    gl_q,
    gl_relations,
    gr_q,
    gr_relations,
    mixed,
    mixed_relations,
    presentation_by_id,
    primed,
    supercommuting_double,
)
from .rmatrix import GRADED, build, ybe_dressings, ybe_residual
from .tensoralg import TensorElement, tensor_normalize

__all__ = ["Check", "SUITES", "suite_checks", "residual_terms"]

W = Element.word
K = q - q**-1


@dataclass(frozen=True)
class Check:
    check_id: str
    description: str
    compute: Callable[[], list]
    detail: Callable[[], str] | None = field(default=None, compare=False)


def residual_terms(obj, q0: Fraction | None = None, label: str = "") -> list:
    """Flatten a residual into printable nonzero terms (evaluated at q0 if given)."""
    out = []
    pre = f"{label}: " if label else ""

    def coef_ok(c: LaurentPoly):
        if q0 is None:
            return (not c.is_zero()), str(c)
        v = c.evaluate(q0)
        return v != 0, str(v)

    if obj is None:
        return out
    if isinstance(obj, str):
        out.append(pre + obj)
    elif isinstance(obj, LaurentPoly):
        keep, s = coef_ok(obj)
        if keep:
            out.append(pre + s)
    elif isinstance(obj, Element):
        for w, c in sorted(obj.items(), key=lambda t: (len(t[0]), t[0])):
            keep, s = coef_ok(c)
            if keep:
                out.append(f"{pre}({s})*{'*'.join(w) or '1'}")
    elif isinstance(obj, TensorElement):
        for k, c in sorted(obj.items()):
            keep, s = coef_ok(c)
            if keep:
                mono = " (x) ".join("*".join(w) or "1" for w in k)
                out.append(f"{pre}({s})*{mono}")
    elif isinstance(obj, dict):
        for k, v in obj.items():
            out.extend(residual_terms(v, q0, f"{label}{'/' if label else ''}{k}"))
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            # top-level lists are plain collections of residuals
            out.extend(residual_terms(v, q0, f"{label}[{i}]" if label else ""))
    else:
        raise TypeError(f"cannot interpret residual of type {type(obj).__name__}")
    return out


def _label(word) -> str:
    return ".".join(word)


# -- confluence -----------------------------------------------------------------

def _confluence_checks():
    def make(pid):
        def compute():
            P = presentation_by_id(pid)
            return [{_label(w): d} for w, d in check_local_confluence(P)]
        return Check(f"confluence.{pid}", f"all overlap ambiguities of {pid} resolve", compute)
    return [make(pid) for pid in PRESENTATION_IDS]


# -- RTT ------------------------------------------------------------------------

def _rtt_check(check_id, description, R_left, M, N, sign, R_right, P, relations):
    def compute():
        Rl, Rr = build(R_left), build(R_right)
        res = rtt_residual(Rl, M, N, sign, Rr, P)
        free = [e for row in rtt_residual(Rl, M, N, sign, Rr, None) for e in row]
        span = degree2_span_check(free, relations)
        out = [{f"entry{r}{c}": res[r][c] for r in range(4) for c in range(4)}]
        if not span["equal"]:
            out.append(f"degree-2 spans differ: {span}")
        return out
    return Check(check_id, description, compute)


def _rtt_checks():
    T, Th = T_matrix(), That_matrix()
    return [
        _rtt_check("rtt.gl", "R T1 T2 = T2 T1 R over GL_q(1|1), spans equal",
                   "R_GL", T, T, 1, "R_GL", gl_q(), gl_relations()),
        _rtt_check("rtt.gr", "R1 T^1 T^2 = -T^2 T^1 R2 over Gr_q(1|1), spans equal",
                   "R1", Th, Th, -1, "R2", gr_q(), gr_relations()),
        _rtt_check("rtt.mixed", "R T^1 T2 = (-1)^p(T2) T2 T^1 R' over the mixed algebra, spans equal",
                   "R_GL", Th, T, "parity", "R_PRIME", mixed(), mixed_relations()),
    ]


# -- Yang-Baxter ------------------------------------------------------------------

_EXPECTED_DRESSINGS = {(d12, True, d23) for d12 in (False, True) for d23 in (False, True)}


def _ybe_checks():
    out = []
    for rid in ("R_GL", "R1", "R2", "R_PRIME"):
        def compute(rid=rid):
            res = ybe_residual(build(rid), GRADED)
            return [{f"{r},{c}": res[r][c] for r in range(8) for c in range(8)}]
        out.append(Check(f"ybe.{rid}", f"graded Yang-Baxter equation for {rid}", compute))

    def dressings():
        msgs = []
        for rid in ("R_GL", "R1", "R2", "R_PRIME", "P_SUPER"):
            found = {k for k, v in ybe_dressings(build(rid)).items() if v}
            if found != _EXPECTED_DRESSINGS:
                msgs.append(f"{rid}: vanishing dressings {sorted(found)}")
        return msgs

    def detail():
        lines = []
        for rid in ("R_GL", "R1", "R2", "R_PRIME"):
            R = build(rid)
            g = all(x.is_zero() for row in ybe_residual(R, "graded") for x in row)
            p = all(x.is_zero() for row in ybe_residual(R, "plain") for x in row)
            lines.append(f"{rid}: graded={'zero' if g else 'nonzero'} plain={'zero' if p else 'nonzero'}")
        return "; ".join(lines)

    out.append(Check("ybe.dressings",
                     "of the 8 sign dressings exactly those signing R13 solve the YBE", dressings, detail))
    return out


# -- central elements -------------------------------------------------------------

def _central_checks():
    out = []

    def grforms():
        P = presentation_by_id("MIXED[a,d,c]")
        return [P.normalize(grdet(None, P) - grdet_right(None, P))]
    out.append(Check("central.grdet.two-forms", "both expressions of the Grassmann central element agree", grforms))

    for pid, gens in (("GR[c]", GR_NAMES), ("MIXED[a,d,c]", GL_NAMES + GR_NAMES)):
        for g in gens:
            def compute(pid=pid, g=g):
                P = presentation_by_id(pid)
                Dh = grdet(None, P)
                return [P.normalize(Dh * W(g) - W(g) * Dh)]
            tag = "gr" if pid == "GR[c]" else "mixed"
            out.append(Check(f"central.grdet.{tag}.{g}", f"Grassmann central element commutes with {g} in {pid}", compute))

    for g in GL_NAMES:
        def compute(g=g):
            P = presentation_by_id("GL[a,d]")
            D = sdet(None, P)
            return [P.normalize(D * W(g) - W(g) * D)]
        out.append(Check(f"central.sdet.{g}", f"superdeterminant commutes with {g}", compute))

    for g in GR_NAMES:
        def compute(g=g):
            P = presentation_by_id("MIXED[a,d]")
            D = sdet(None, P)
            return [P.normalize(D * W(g) - q**2 * W(g) * D)]
        out.append(Check(f"central.sdet-qcommute.{g}", f"D_q {g} = q^2 {g} D_q", compute))

    def short_form():
        P = presentation_by_id("GL[a,d]")
        Ds = sdet_short(None, P)
        return [f"a d^-1 - beta d^-1 gamma unexpectedly commutes with {g}"
                for g in ("a", "d") if P.is_zero_mod(Ds * W(g) - W(g) * Ds)]
    out.append(Check("central.sdet-short-form.not-central",
                     "negative control: a d^-1 - beta d^-1 gamma (no trailing d^-1) fails to commute with a and d",
                     short_form))
    return out


# -- inverse relations --------------------------------------------------------------

def _inverse_parts(P):
    Ti = superinverse(None, P)
    return Ti, (Ti[0, 0], Ti[0, 1], Ti[1, 0], Ti[1, 1])


def _T_vs_Tinv(A, Om, Ga, D):
    a, beta, gamma, d = (W(x) for x in GL_NAMES)
    return {
        "a.A": a * A - q**2 * A * a - 1 + q**2,
        "d.A": d * A - A * d,
        "a.D": a * D - D * a,
        "d.D": d * D - q**2 * D * d - 1 + q**2,
        "a.Omega": a * Om - q * Om * a,
        "d.Omega": d * Om - q * Om * d,
        "a.Gamma": a * Ga - q * Ga * a,
        "d.Gamma": d * Ga - q * Ga * d,
        "beta.A": beta * A - q * A * beta,
        "gamma.A": gamma * A - q * A * gamma,
        "beta.D": beta * D - q * D * beta,
        "gamma.D": gamma * D - q * D * gamma,
        "beta.Omega": beta * Om - Om * beta,
        "gamma.Omega": gamma * Om + q**2 * Om * gamma,
        "beta.Gamma": beta * Ga + q**2 * Ga * beta,
        "gamma.Gamma": gamma * Ga - Ga * gamma,
    }


def _That_vs_Tinv(A, Om, Ga, D, delta_D_sign=-1):
    """Relations between T-hat and T^-1 entries.

    ``delta_D_sign`` is the sign of the (q - q^-1)^2 A alpha term in the
    delta.D relation; -1 is the one that holds.
    """
    alpha, b, c, delta = (W(x) for x in GR_NAMES)
    return {
        "alpha.A": alpha * A - q**2 * A * alpha,
        "delta.A": delta * A - A * delta,
        "alpha.D": alpha * D - D * alpha,
        "delta.D": delta * D - q**-2 * D * delta - delta_D_sign * K**2 * A * alpha
                   - (q**-2 - 1) * (Om * c - Ga * b),
        "alpha.Omega": alpha * Om + q * Om * alpha,
        "delta.Omega": delta * Om + q**-1 * Om * delta - (q**-1 - q) * A * b,
        "alpha.Gamma": alpha * Ga + q * Ga * alpha,
        "delta.Gamma": delta * Ga + q**-1 * Ga * delta - (q**-1 - q) * A * c,
        "b.A": b * A - q * A * b,
        "c.A": c * A - q * A * c,
        "b.D": b * D - q**-1 * D * b - K * Om * alpha,
        "c.D": c * D - q**-1 * D * c - K * Ga * alpha,
        "b.Omega": b * Om - Om * b,
        "c.Omega": c * Om - Om * c - (q**2 - 1) * A * alpha,
        "b.Gamma": b * Ga - Ga * b - (1 - q**2) * A * alpha,
        "c.Gamma": c * Ga - Ga * c,
    }


def _inverse_checks():
    out = []

    def prod(order):
        def compute():
            P = presentation_by_id("GL[a,d]")
            T, Ti = T_matrix(), superinverse(None, P)
            M = mat_mul(T, Ti, P) if order == "right" else mat_mul(Ti, T, P)
            I = identity()
            return [{f"{i}{j}": P.normalize(M[i, j] - I[i, j]) for i in (0, 1) for j in (0, 1)}]
        return compute
    out.append(Check("inverse.T-Tinv", "T T^-1 = 1", prod("right")))
    out.append(Check("inverse.Tinv-T", "T^-1 T = 1", prod("left")))

    for key in _T_vs_Tinv(*(W(x) for x in "AOGD")):
        def compute(key=key):
            P = presentation_by_id("GL[a,d]")
            _, parts = _inverse_parts(P)
            return [P.normalize(_T_vs_Tinv(*parts)[key])]
        out.append(Check(f"inverse.T-vs-Tinv.{key}", f"commutation relation {key} between T and T^-1", compute))

    for key in _That_vs_Tinv(*(W(x) for x in "AOGD")):
        def compute(key=key):
            P = presentation_by_id("MIXED[a,d]")
            _, parts = _inverse_parts(P)
            return [P.normalize(_That_vs_Tinv(*parts)[key])]
        out.append(Check(f"inverse.That-vs-Tinv.{key}", f"commutation relation {key} between T-hat and T^-1", compute))

    def delta_D_sign():
        P = presentation_by_id("MIXED[a,d]")
        _, parts = _inverse_parts(P)
        A = parts[0]
        wrong = P.normalize(_That_vs_Tinv(*parts, delta_D_sign=+1)["delta.D"])
        msgs = []
        if wrong.is_zero():
            msgs.append("the +(q - q^-1)^2 A alpha variant unexpectedly holds")
        msgs.append(P.normalize(wrong + 2 * K**2 * A * W("alpha")))
        return msgs
    out.append(Check("inverse.That-vs-Tinv.delta.D.sign",
                     "with +(q - q^-1)^2 A alpha the delta.D relation is off by exactly -2(q - q^-1)^2 A alpha",
                     delta_D_sign))
    return out


# -- Hopf structure of GL_q(1|1) ------------------------------------------------------

def _axiom_checks(prefix, gens):
    out = []
    for g in gens:
        for which in ("coassoc", "counit", "antipode"):
            def compute(g=g, which=which):
                return [default_structure().check_axiom(which, g)]
            out.append(Check(f"{prefix}.{which}.{g}", f"{which} axiom on {g}", compute))
    return out


def _hom_check(check_id, which, presentation, description):
    def compute():
        H = default_structure()
        return [{_label(k): r} for k, r in H.check_homomorphism(which, presentation())]
    return Check(check_id, description, compute)


def _hopf_checks():
    out = _axiom_checks("hopf", GL_NAMES)
    out.append(_hom_check("hopf.hom.coproduct", "coproduct", gl_q, "coproduct respects the GL relations"))
    out.append(_hom_check("hopf.hom.counit", "counit", gl_q, "counit respects the GL relations"))
    out.append(_hom_check("hopf.antihom.antipode", "antipode", gl_q,
                          "antipode is a graded anti-homomorphism on the GL relations"))
    return out


def _quasi_hopf_checks():
    out = []
    for g in GR_NAMES:
        def coprod(g=g):
            H = default_structure()
            return [H.coproduct(W(g)) - tensor_normalize(D_HAT_EXPLICIT()[g], H.P)]
        out.append(Check(f"qhopf.coproduct-explicit.{g}",
                         f"matrix form of the hatted coproduct equals its expansion on {g}", coprod))

        def antip(g=g):
            H = default_structure()
            return [H.P.normalize(H.antipode(W(g)) - S_HAT_EXPLICIT(H.inverse_matrix)[g])]
        out.append(Check(f"qhopf.antipode-explicit.{g}",
                         f"matrix form of the hatted antipode equals its closed form on {g}", antip))
    for which, label in (("coproduct", "coproduct"), ("counit", "counit")):
        out.append(_hom_check(f"qhopf.hom.{label}.gr", which, gr_q, f"{label} respects the Grassmann relations"))
        out.append(_hom_check(f"qhopf.hom.{label}.mixed", which, mixed,
                              f"{label} respects every relation of the mixed algebra"))
    out.append(_hom_check("qhopf.antihom.antipode.gr", "antipode", gr_q,
                          "hatted antipode is a graded anti-homomorphism on the Grassmann relations"))
    out.append(_hom_check("qhopf.antihom.antipode.mixed", "antipode", mixed,
                          "antipode is a graded anti-homomorphism on the mixed relations"))
    out += _axiom_checks("qhopf", GR_NAMES)
    return out


# -- product theorem -------------------------------------------------------------------

_GL_RELATION_LABELS = ("a.beta", "d.beta", "a.gamma", "d.gamma", "beta.gamma", "beta.beta", "gamma.gamma", "a.d")


def _product_checks():
    out = []

    def product_entries():
        Th = That_matrix()
        Thp = That_matrix(tuple(primed(x) for x in GR_NAMES))
        M = mat_mul(Th, Thp)
        return {"a": M[0, 0], "beta": M[0, 1], "gamma": M[1, 0], "d": M[1, 1]}

    for label, rel in zip(_GL_RELATION_LABELS, gl_relations()):
        def compute(rel=rel):
            P = supercommuting_double(gr_q())
            return [P.normalize(substitute(rel, product_entries()))]
        out.append(Check(f"product.{label}",
                         f"entries of T^ T^' satisfy the GL relation {label}", compute))

    def negative():
        P = gr_q()
        images = dict(zip(GL_NAMES, (W(x) for x in GR_NAMES)))
        failing = [lab for lab, rel in zip(_GL_RELATION_LABELS, gl_relations())
                   if not P.is_zero_mod(substitute(rel, images))]
        return [] if failing else ["T-hat alone satisfies every GL relation"]

    def negative_detail():
        P = gr_q()
        images = dict(zip(GL_NAMES, (W(x) for x in GR_NAMES)))
        failing = [lab for lab, rel in zip(_GL_RELATION_LABELS, gl_relations())
                   if not P.is_zero_mod(substitute(rel, images))]
        return "GL relations violated by T-hat alone: " + ", ".join(failing)
    out.append(Check("product.negative-control", "T-hat by itself violates some GL relation",
                     negative, negative_detail))
    return out


# -- coactions -------------------------------------------------------------------------

def _half(t: TensorElement, leg: int) -> TensorElement:
    return TensorElement._raw({k: c for k, c in t.items() if any(x in GR_NAMES for x in k[leg])}, t.legs)


def _coaction_checks():
    from .hopf import apply_legs
    out = []
    for g in GR_NAMES:
        def right(g=g):
            H = default_structure()
            exp = tensor_normalize(D_HAT_EXPLICIT()[g], H.P)
            return [H.coaction("right", g) - _half(exp, 0)]

        def left(g=g):
            H = default_structure()
            exp = tensor_normalize(D_HAT_EXPLICIT()[g], H.P)
            return [H.coaction("left", g) - _half(exp, 1)]

        def total(g=g):
            H = default_structure()
            x = W(g)
            return [H.phi("right", x) + H.phi("left", x) - H.coproduct(x)]

        def right_coassoc(g=g):
            H = default_structure()
            f = H.phi("right", W(g))
            lhs = apply_legs(f, [lambda e: H.phi("right", e), None], H.P)
            rhs = apply_legs(f, [None, H.coproduct], H.P)
            return [lhs - rhs]

        def right_counit(g=g):
            H = default_structure()
            f = apply_legs(H.phi("right", W(g)), [None, H.counit], H.P)
            return [f - TensorElement._raw({(w,): c for w, c in W(g).items()}, 1)]

        def left_coassoc(g=g):
            H = default_structure()
            f = H.phi("left", W(g))
            lhs = apply_legs(f, [None, lambda e: H.phi("left", e)], H.P)
            rhs = apply_legs(f, [H.coproduct, None], H.P)
            return [lhs - rhs]

        def left_counit(g=g):
            H = default_structure()
            f = apply_legs(H.phi("left", W(g)), [H.counit, None], H.P)
            return [f - TensorElement._raw({(w,): c for w, c in W(g).items()}, 1)]

        out += [
            Check(f"coaction.right.{g}", f"right coaction of {g} is the left-hatted half of its coproduct", right),
            Check(f"coaction.left.{g}", f"left coaction of {g} is the right-hatted half of its coproduct", left),
            Check(f"coaction.sum.{g}", f"phi_R + phi_L equals the hatted coproduct on {g}", total),
            Check(f"coaction.phi-right.coassoc.{g}", f"(phi_R (x) id) phi_R = (id (x) Delta) phi_R on {g}", right_coassoc),
            Check(f"coaction.phi-right.counit.{g}", f"(id (x) eps) phi_R = id on {g}", right_counit),
            Check(f"coaction.phi-left.coassoc.{g}", f"(id (x) phi_L) phi_L = (Delta (x) id) phi_L on {g}", left_coassoc),
            Check(f"coaction.phi-left.counit.{g}", f"(eps (x) id) phi_L = id on {g}", left_counit),
        ]
    for label, rel in zip(_GL_RELATION_LABELS, gl_relations()):
        def dwell(rel=rel):
            return [default_structure().differential(rel)]
        out.append(Check(f"coaction.d-well-defined.{label}",
                         f"d maps the GL relation {label} into the mixed relations", dwell))
    return out


SUITES = {
    "confluence": _confluence_checks,
    "rtt": _rtt_checks,
    "ybe": _ybe_checks,
    "central": _central_checks,
    "inverse": _inverse_checks,
    "hopf": _hopf_checks,
    "quasi-hopf": _quasi_hopf_checks,
    "product": _product_checks,
    "coaction": _coaction_checks,
}


def suite_checks(name: str) -> list:
    if name == "all":
        checks = [c for build_suite in SUITES.values() for c in build_suite()]
    elif name in SUITES:
        checks = SUITES[name]()
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    return sorted(checks, key=lambda c: c.check_id)
