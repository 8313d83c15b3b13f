import pytest

from qgrass.coeff import ONE, ZERO, q
from qgrass.rmatrix import GRADED, PLAIN, build, idx, ybe_dressings, ybe_is_zero, ybe_residual

K = q - q**-1


def E(R, i, j, k, l):
    return R[idx(i - 1, j - 1)][idx(k - 1, l - 1)]


def test_R_GL_entries():
    R = build("R_GL")
    assert E(R, 1, 1, 1, 1) == q
    assert E(R, 2, 2, 2, 2) == q**-1
    assert E(R, 2, 1, 1, 2) == K


def test_R1_R2_entries():
    assert E(build("R1"), 1, 2, 1, 2) == -ONE
    assert E(build("R2"), 1, 2, 2, 1) == q**-1 - q


def test_R_prime_definition():
    R, P, Rp = build("R_GL"), build("P_SUPER"), build("R_PRIME")
    for r in range(4):
        for c in range(4):
            assert Rp[r][c] == R[r][c] - K * P[r][c]


@pytest.mark.parametrize("rid", ["R_GL", "R1", "R2", "R_PRIME", "P_SUPER"])
def test_graded_ybe(rid):
    res = ybe_residual(build(rid), GRADED)
    assert len(res) == 8 and all(len(row) == 8 for row in res)
    assert all(x.is_zero() for row in res for x in row)


@pytest.mark.parametrize("rid", ["R_GL", "R1", "R2"])
def test_plain_ybe_fails(rid):
    assert not ybe_is_zero(build(rid), PLAIN)


def test_identity_solves_plain_ybe():
    I = tuple(tuple(ONE if r == c else ZERO for c in range(4)) for r in range(4))
    assert ybe_is_zero(I, "plain")


def test_dressing_brute_force():
    # only the sign on the 13 embedding matters
    for rid in ("R_GL", "R1", "R2", "R_PRIME"):
        found = {k for k, ok in ybe_dressings(build(rid)).items() if ok}
        assert found == {(a, True, c) for a in (False, True) for c in (False, True)}
