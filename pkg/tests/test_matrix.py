import pytest

from qgrass.coeff import q
from qgrass.freealg import Element, PresentationError
from qgrass.matrix import (
    PARITY_SIGNS,
    VALUE_SIGNS,
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
    tensor_embed,
)
from qgrass.presentations import (
    gl_q,
    gl_relations,
    gr_q,
    gr_relations,
    inv,
    mixed,
    mixed_relations,
    presentation_by_id,
    primed,
    supercommuting_double,
)
from qgrass.rmatrix import build

W = Element.word


def _all_zero(res):
    return all(e.is_zero() for row in res for e in row)


def test_identity_product():
    T = T_matrix()
    assert mat_mul(identity(), T) == T


def test_double_product_entry():
    P = supercommuting_double(gr_q())
    M = mat_mul(That_matrix(), That_matrix(tuple(primed(x) for x in ("alpha", "b", "c", "delta"))), P)
    assert M[0, 0] == P.normalize(W("alpha", "alpha'") + W("b", "c'"))
    assert M.pattern == "even-diagonal" and M.check_parity(P)


def test_superinverse_is_two_sided():
    P = presentation_by_id("GL[a,d]")
    T, Ti = T_matrix(), superinverse(None, P)
    assert mat_mul(T, Ti, P) == identity()
    assert mat_mul(Ti, T, P) == identity()


def test_superinverse_abelianized():
    Ti = superinverse()
    kill = lambda e: Element({w: c for w, c in e.items() if "beta" not in w and "gamma" not in w})
    assert kill(Ti[0, 0]) == W(inv("a"))
    assert kill(Ti[1, 1]) == W(inv("d"))
    assert kill(Ti[0, 1]).is_zero() and kill(Ti[1, 0]).is_zero()


def test_superinverse_needs_localization():
    with pytest.raises(PresentationError):
        superinverse(None, gl_q())


def test_aA_relation():
    P = presentation_by_id("GL[a,d]")
    A = superinverse(None, P)[0, 0]
    assert P.is_zero_mod(W("a") * A - q**2 * A * W("a") - 1 + q**2)


def test_sdet_identity():
    assert sdet(identity(), gl_q()) == Element.one()


@pytest.mark.parametrize("x", ["a", "beta", "gamma", "d"])
def test_sdet_central(x):
    P = presentation_by_id("GL[a,d]")
    D = sdet(None, P)
    assert P.is_zero_mod(D * W(x) - W(x) * D)


@pytest.mark.parametrize("x", ["alpha", "b", "c", "delta"])
def test_sdet_q_commutes_with_hatted(x):
    P = presentation_by_id("MIXED[a,d]")
    D = sdet(None, P)
    assert P.is_zero_mod(D * W(x) - q**2 * W(x) * D)


def test_sdet_short_form_is_not_central():
    P = presentation_by_id("GL[a,d]")
    D = sdet_short(None, P)
    assert not P.is_zero_mod(D * W("d") - W("d") * D)
    assert not P.is_zero_mod(D * W("a") - W("a") * D)


def test_grdet_two_forms_and_centrality():
    P = presentation_by_id("MIXED[a,d,c]")
    Dh = grdet(None, P)
    assert Dh == grdet_right(None, P)
    for x in ("a", "beta", "gamma", "d", "alpha", "b", "c", "delta"):
        assert P.is_zero_mod(Dh * W(x) - W(x) * Dh)


def test_tensor_embed_examples():
    one, zero = Element.one(), Element.zero()
    I4 = [[one if r == c else zero for c in range(4)] for r in range(4)]
    assert tensor_embed(identity(), "left") == I4
    assert tensor_embed(T_matrix(), "right")[0][0] == W("a")


def test_rtt_examples():
    T, Th = T_matrix(), That_matrix()
    assert _all_zero(rtt_residual(build("R_GL"), T, T, 1, build("R_GL"), gl_q()))
    assert _all_zero(rtt_residual(build("R1"), Th, Th, -1, build("R2"), gr_q()))
    assert _all_zero(rtt_residual(build("R_GL"), Th, T, "parity", build("R_PRIME"), mixed()))


def test_sign_convention_brute_force():
    # reading the exponent as index parities is the only one that works
    T = T_matrix()
    R = build("R_GL")
    assert _all_zero(rtt_residual(R, T, T, 1, R, gl_q(), PARITY_SIGNS))
    assert not _all_zero(rtt_residual(R, T, T, 1, R, gl_q(), VALUE_SIGNS))
    Th = That_matrix()
    assert not _all_zero(rtt_residual(build("R1"), Th, Th, -1, build("R2"), gr_q(), VALUE_SIGNS))


def test_mixed_sign_brute_force():
    # a global sign in place of the entrywise (-1)^p(T2) fails
    Th, T = That_matrix(), T_matrix()
    R, Rp = build("R_GL"), build("R_PRIME")
    for s in (1, -1):
        assert not _all_zero(rtt_residual(R, Th, T, s, Rp, mixed()))


@pytest.mark.parametrize("args,relations", [
    (("R_GL", "T", "T", 1, "R_GL"), gl_relations),
    (("R1", "Th", "Th", -1, "R2"), gr_relations),
    (("R_GL", "Th", "T", "parity", "R_PRIME"), mixed_relations),
])
def test_degree2_span_check(args, relations):
    mats = {"T": T_matrix(), "Th": That_matrix()}
    Rl, M, N, s, Rr = args
    res = rtt_residual(build(Rl), mats[M], mats[N], s, build(Rr), None)
    report = degree2_span_check([e for row in res for e in row], relations())
    assert report["equal"]
    assert report["relation_rank"] == len(relations())


def test_span_check_detects_missing_relation():
    T = T_matrix()
    res = rtt_residual(build("R_GL"), T, T, 1, build("R_GL"), None)
    extra = gl_relations() + [W("a", "a") - W("d", "d")]
    assert not degree2_span_check([e for row in res for e in row], extra)["equal"]
