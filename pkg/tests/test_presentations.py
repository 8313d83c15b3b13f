import pytest

from qgrass.coeff import q
from qgrass.freealg import Element, PresentationError, check_local_confluence
from qgrass.presentations import (
    GL_NAMES,
    GR_NAMES,
    PRESENTATION_IDS,
    gl_q,
    gl_relations,
    gr_q,
    gr_relations,
    inv,
    localize,
    mixed,
    mixed_relations,
    presentation_by_id,
    primed,
    supercommuting_double,
)

from conftest import random_element

W = Element.word
K = q - q**-1


def test_gl_examples():
    P = gl_q()
    assert P.is_zero_mod(W("a", "beta") - q * W("beta", "a"))
    assert P.is_zero_mod(W("gamma", "gamma"))


def test_gr_examples():
    P = gr_q()
    assert P.is_zero_mod(W("delta", "c") - q**-1 * W("c", "delta"))
    assert P.is_zero_mod(W("alpha", "delta") + W("delta", "alpha"))
    assert P.is_zero_mod(W("b", "c") - W("c", "b") - K * W("delta", "alpha"))


def test_mixed_examples():
    P = mixed()
    assert P.is_zero_mod(W("beta", "b") - W("b", "beta"))
    assert P.is_zero_mod(W("a", "delta") - W("delta", "a") - K * (W("beta", "c") - W("b", "gamma")))
    assert P.is_zero_mod(W("gamma", "delta") + q**-1 * W("delta", "gamma") - (1 - q**-2) * W("c", "d"))


def test_hatted_rank_after_unhatted():
    P = mixed()
    assert max(P.rank(x) for x in GL_NAMES) < min(P.rank(x) for x in GR_NAMES)


@pytest.mark.parametrize("relations,P", [(gl_relations, gl_q), (gr_relations, gr_q), (mixed_relations, mixed)])
def test_every_listed_relation_holds(relations, P):
    P = P()
    for rel in relations():
        assert P.is_zero_mod(rel)


def test_localization_examples():
    L = presentation_by_id("GL[a,d]")
    ai = W(inv("a"))
    assert L.is_zero_mod(ai * W("beta") - q**-1 * W("beta") * ai)
    assert L.is_zero_mod(W("a") * ai - 1)
    assert L.is_zero_mod(ai * W("a") - 1)
    assert L.is_zero_mod(ai * W("d") - W("d") * ai + K * q**-2 * W("gamma", "beta") * ai * ai)


def test_inverse_sits_after_its_generator():
    L = presentation_by_id("MIXED[a,d,c]")
    for x in ("a", "d", "c"):
        assert L.rank(inv(x)) == L.rank(x) + 1


def test_localize_rejects_odd_generator():
    with pytest.raises(PresentationError):
        localize(gl_q(), ["beta"])


@pytest.mark.parametrize("pid", PRESENTATION_IDS)
def test_all_presentations_confluent(pid):
    assert check_local_confluence(presentation_by_id(pid)) == []


@pytest.mark.parametrize("pid,base", [("GL[a,d]", gl_q), ("MIXED[a,d]", mixed), ("GR[c]", gr_q)])
def test_localization_is_conservative(pid, base, rng):
    L, B = presentation_by_id(pid), base()
    names = B.names
    for _ in range(40):
        e = random_element(rng, names, max_len=4)
        assert L.is_zero_mod(e) == B.is_zero_mod(e)
        # relations stay zero, random multiples of them too
        rel = rng.choice(gl_relations() if pid != "GR[c]" else gr_relations())
        f = random_element(rng, names, max_len=2) * rel * random_element(rng, names, max_len=2)
        assert L.is_zero_mod(f) and B.is_zero_mod(f)


def test_double_supercommutes():
    P = supercommuting_double(gr_q())
    assert P.is_zero_mod(W(primed("alpha"), "delta") + W("delta", primed("alpha")))
    assert P.is_zero_mod(W(primed("b"), "c") - W("c", primed("b")))
    assert P.is_zero_mod(W(primed("b"), primed("c")) - W(primed("c"), primed("b"))
                         - K * W(primed("delta"), primed("alpha")))


def test_dump_format():
    lines = gl_q().dump().splitlines()
    assert len(lines) == 8
    assert "d*a -> a*d + (q - q^-1)*beta*gamma" in lines
