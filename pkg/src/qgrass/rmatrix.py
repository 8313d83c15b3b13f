"""Constant R-matrices and the (graded) Yang-Baxter residual.

Matrices on V (x) V are 4x4 nested tuples of :class:`LaurentPoly`, rows
and columns indexed by the composite index (i, j) -> 2*i + j with
i, j in {0, 1}.  Index 0 is even, index 1 is odd.
"""

from __future__ import annotations

from itertools import product

from .coeff import ONE, ZERO, LaurentPoly, q

__all__ = [
    "RMATRIX_IDS",
    "build",
    "ybe_residual",
    "ybe_is_zero",
    "ybe_dressings",
    "GRADED",
    "PLAIN",
    "idx",
]

RMATRIX_IDS = ("R_GL", "R1", "R2", "P_SUPER", "R_PRIME")


def idx(i: int, j: int) -> int:
    """Composite row/column index of the pair (i, j), 0-based."""
    return 2 * i + j


def _matrix(rows) -> tuple:
    return tuple(tuple(x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x) for x in r)
                 for r in rows)


def _super_permutation() -> tuple:
    m = [[ZERO] * 4 for _ in range(4)]
    for i, j in product((0, 1), repeat=2):
        # P^{ij}_{kl} = (-1)^{p(i)p(j)} delta^i_l delta^j_k
        m[idx(i, j)][idx(j, i)] = -ONE if i and j else ONE
    return _matrix(m)


def build(rid: str) -> tuple:
    k = q - q**-1
    if rid == "R_GL":
        return _matrix([
            [q, 0, 0, 0],
            [0, 1, 0, 0],
            [0, k, 1, 0],
            [0, 0, 0, q**-1],
        ])
    if rid == "R1":
        return _matrix([
            [q, 0, 0, 0],
            [0, -1, 0, 0],
            [0, k, -1, 0],
            [0, 0, 0, q**-1],
        ])
    if rid == "R2":
        return _matrix([
            [q**-1, 0, 0, 0],
            [0, -1, -k, 0],
            [0, 0, -1, 0],
            [0, 0, 0, q],
        ])
    if rid == "P_SUPER":
        return _super_permutation()
    if rid == "R_PRIME":
        R, P = build("R_GL"), build("P_SUPER")
        return _matrix([[R[r][c] - k * P[r][c] for c in range(4)] for r in range(4)])
    raise KeyError(f"unknown R-matrix {rid!r}; choose from {', '.join(RMATRIX_IDS)}")


# Sign dressing of the three embeddings R12, R13, R23 into End(V^3).  The
# two-space rule (-1)^{p(i)(p(j)+p(l))} for I (x) M charges an idle index
# for every active index standing to its right; extended to three spaces
# that is:
#   R12: idle slot 3 is rightmost, no sign
#   R13: idle slot 2 sees slot 3:  (-1)^{p(j)(p(k)+p(n))}
#   R23: idle slot 1 sees both:    (-1)^{p(i)(p(j)+p(k)+p(m)+p(n))}
# ``ybe_dressings`` enumerates switching each of these on or off; the
# brute-force test confirms that for the even R-matrices here only the
# R13 sign matters, and GRADED (all on) is the one the graded solutions
# satisfy.
GRADED = (True, True, True)
PLAIN = (False, False, False)


def _embed(R, slots: tuple, dressed: bool) -> list:
    out = [[ZERO] * 8 for _ in range(8)]
    for row in product((0, 1), repeat=3):
        for col in product((0, 1), repeat=3):
            idle = ({0, 1, 2} - set(slots)).pop()
            if row[idle] != col[idle]:
                continue
            s, t = slots
            v = R[idx(row[s], row[t])][idx(col[s], col[t])]
            if not v:
                continue
            if dressed:
                right = [x for x in slots if x > idle]
                exp = row[idle] * sum(row[x] + col[x] for x in right)
                if exp & 1:
                    v = -v
            out[4 * row[0] + 2 * row[1] + row[2]][4 * col[0] + 2 * col[1] + col[2]] = v
    return out


def _mm(A, B) -> list:
    n = len(A)
    out = [[ZERO] * n for _ in range(n)]
    for r in range(n):
        for k in range(n):
            a = A[r][k]
            if not a:
                continue
            for c in range(n):
                b = B[k][c]
                if b:
                    out[r][c] = out[r][c] + a * b
    return out


def ybe_residual(R, convention=GRADED) -> list:
    """R12 R13 R23 - R23 R13 R12 as an 8x8 matrix of Laurent polynomials.

    ``convention`` is ``"graded"``, ``"plain"`` or a triple of booleans
    choosing the dressing of (R12, R13, R23) individually.
    """
    if convention == "graded":
        convention = GRADED
    elif convention == "plain":
        convention = PLAIN
    d12, d13, d23 = convention
    R12 = _embed(R, (0, 1), d12)
    R13 = _embed(R, (0, 2), d13)
    R23 = _embed(R, (1, 2), d23)
    lhs = _mm(_mm(R12, R13), R23)
    rhs = _mm(_mm(R23, R13), R12)
    return [[lhs[r][c] - rhs[r][c] for c in range(8)] for r in range(8)]


def ybe_is_zero(R, convention=GRADED) -> bool:
    return all(x.is_zero() for row in ybe_residual(R, convention) for x in row)


def ybe_dressings(R) -> dict:
    """Which of the eight sign dressings make the YBE residual vanish."""
    return {conv: ybe_is_zero(R, conv) for conv in product((False, True), repeat=3)}
