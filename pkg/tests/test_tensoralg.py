from qgrass.coeff import q
from qgrass.freealg import Element
from qgrass.hopf import default_structure
from qgrass.presentations import GL_NAMES, GR_NAMES, gl_q, mixed
from qgrass.tensoralg import TensorElement, koszul_sign, tensor, tensor_is_zero, tensor_mul, tensor_normalize

from conftest import random_element

W = Element.word
ONE = Element.one()


def test_koszul_examples():
    P = mixed()
    assert tensor_mul(tensor(ONE, W("beta")), tensor(W("beta"), ONE), P) == -tensor(W("beta"), W("beta"))
    assert tensor_mul(tensor(ONE, W("b")), tensor(W("alpha"), ONE), P) == tensor(W("alpha"), W("b"))
    assert tensor_mul(tensor(W("beta"), ONE), tensor(ONE, W("gamma")), P) == tensor(W("beta"), W("gamma"))


def test_tensor_is_zero_examples():
    P = gl_q()
    x = tensor(W("a"), W("beta")) + tensor(W("gamma"), W("d"))
    assert tensor_is_zero(x - x, P)
    H = default_structure()
    assert H.coproduct(W("a", "beta") - q * W("beta", "a")).is_zero()
    assert not tensor_is_zero(tensor(W("beta"), W("beta")), P)


def test_three_leg_sign():
    P = mixed()
    # (1 (x) 1 (x) beta)(gamma (x) 1 (x) 1): gamma passes beta once
    x = tensor(ONE, ONE, W("beta"))
    y = tensor(W("gamma"), ONE, ONE)
    assert tensor_mul(x, y, P) == -tensor(W("gamma"), ONE, W("beta"))
    assert koszul_sign(P, [(), (), ("beta",)], [("gamma",), (), ()]) == -1


def _random_tensor(rng, names):
    return tensor_normalize(tensor(random_element(rng, names, 2), random_element(rng, names, 2)), mixed())


def test_associative(rng):
    P = mixed()
    names = GL_NAMES + GR_NAMES
    for _ in range(25):
        x, y, z = (_random_tensor(rng, names) for _ in range(3))
        assert tensor_mul(tensor_mul(x, y, P), z, P) == tensor_mul(x, tensor_mul(y, z, P), P)


def _literal_mul(x, y, P):
    """The 'AC (x) BC' reading: the second factor's right leg is dropped for C."""
    out = TensorElement.zero()
    for (A, B), c1 in x.items():
        for (C, D), c2 in y.items():
            s = koszul_sign(P, (A, B), (C, D))
            out = out + TensorElement({(A + C, B + C): s * c1 * c2})
    return tensor_normalize(out, P)


def test_literal_reading_is_not_associative():
    # the literal product sends (A, B)(C, D) to (AC, BC); the legs compose
    # associatively but the Koszul signs p(B)p(C) do not once odd C, E meet
    P = gl_q()
    x = tensor(ONE, ONE)
    y = tensor(W("beta"), ONE)
    z = tensor(W("gamma"), ONE)
    left = _literal_mul(_literal_mul(x, y, P), z, P)
    right = _literal_mul(x, _literal_mul(y, z, P), P)
    assert left == -right and not left.is_zero()
    assert tensor_mul(tensor_mul(x, y, P), z, P) == tensor_mul(x, tensor_mul(y, z, P), P)
    # it is not even unital
    assert _literal_mul(tensor(ONE, ONE), tensor(W("a"), W("d")), P) != tensor(W("a"), W("d"))


def test_unit_legs_and_parity(rng):
    P = mixed()
    names = GL_NAMES + GR_NAMES
    for _ in range(30):
        u = tuple(rng.choice(names) for _ in range(rng.randint(0, 3)))
        v = tuple(rng.choice(names) for _ in range(rng.randint(0, 3)))
        prod = tensor_mul(tensor(W(*u), ONE), tensor(ONE, W(*v)), P)
        assert prod == tensor_normalize(tensor(W(*u), W(*v)), P)
        for (l, r), _ in prod.items():
            assert (P.word_parity(l) + P.word_parity(r)) % 2 == (P.word_parity(u) + P.word_parity(v)) % 2
