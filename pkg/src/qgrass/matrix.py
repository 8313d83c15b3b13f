"""2x2 supermatrices over a presented algebra, and RTT residuals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .coeff import LaurentPoly
from .freealg import Element, Presentation, PresentationError
from .presentations import inv
from .rmatrix import idx

__all__ = [
    "EVEN_DIAGONAL",
    "ODD_DIAGONAL",
    "SuperMatrix",
    "T_matrix",
    "That_matrix",
    "identity",
    "mat_mul",
    "superinverse",
    "sdet",
    "sdet_short",
    "grdet",
    "grdet_right",
    "tensor_embed",
    "rtt_residual",
    "PARITY_SIGNS",
    "VALUE_SIGNS",
    "degree2_span_check",
    "span_rank",
]

EVEN_DIAGONAL = "even-diagonal"
ODD_DIAGONAL = "odd-diagonal"


@dataclass(frozen=True)
class SuperMatrix:
    """Entries ``entries[i][j]`` (0-based) with a declared parity pattern.

    For EVEN_DIAGONAL the entry (i, j) has parity i + j mod 2; for
    ODD_DIAGONAL it has parity i + j + 1 mod 2.
    """

    entries: tuple
    pattern: str = EVEN_DIAGONAL

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def entry_parity(self, i: int, j: int) -> int:
        return (i + j + (self.pattern == ODD_DIAGONAL)) & 1

    def check_parity(self, P: Presentation) -> bool:
        for i, j in product((0, 1), repeat=2):
            e = self.entries[i][j]
            for w in e.words():
                if P.word_parity(w) != self.entry_parity(i, j):
                    return False
        return True

    def map(self, f) -> "SuperMatrix":
        return SuperMatrix(tuple(tuple(f(x) for x in row) for row in self.entries), self.pattern)


def _sm(rows, pattern=EVEN_DIAGONAL) -> SuperMatrix:
    return SuperMatrix(tuple(tuple(x if isinstance(x, Element) else Element.scalar(x)
                                   for x in row) for row in rows), pattern)


def T_matrix(names=("a", "beta", "gamma", "d")) -> SuperMatrix:
    a, beta, gamma, d = (Element.word(x) for x in names)
    return _sm([[a, beta], [gamma, d]], EVEN_DIAGONAL)


def That_matrix(names=("alpha", "b", "c", "delta")) -> SuperMatrix:
    alpha, b, c, delta = (Element.word(x) for x in names)
    return _sm([[alpha, b], [c, delta]], ODD_DIAGONAL)


def identity() -> SuperMatrix:
    return _sm([[1, 0], [0, 1]])


def mat_mul(M: SuperMatrix, N: SuperMatrix, P: Presentation | None = None) -> SuperMatrix:
    """Ordinary row-by-column product; entries normalized when P is given."""
    pattern = EVEN_DIAGONAL if M.pattern == N.pattern else ODD_DIAGONAL
    rows = []
    for i in range(2):
        row = []
        for j in range(2):
            e = M[i, 0] * N[0, j] + M[i, 1] * N[1, j]
            row.append(P.normalize(e) if P is not None else e)
        rows.append(tuple(row))
    return SuperMatrix(tuple(rows), pattern)


def _require_inverses(P: Presentation, names):
    missing = [x for x in names if inv(x) not in P]
    if missing:
        raise PresentationError(
            f"{P.name} is not localized at {', '.join(missing)}")


def _entry_inverse(e: Element) -> Element:
    """Inverse of a unit scalar or of c * x for a single letter x (as c^-1 x^-1)."""
    items = list(e.items())
    if len(items) == 1:
        w, c = items[0]
        if c.is_unit():
            if w == ():
                return Element.scalar(c.inverse())
            if len(w) == 1:
                return c.inverse() * Element.word(inv(w[0]))
    raise ValueError(f"cannot invert matrix entry {e}")


def superinverse(T: SuperMatrix | None = None, P: Presentation | None = None) -> SuperMatrix:
    """[[A, Omega], [Gamma, D]] built from a^-1 and d^-1.

    Only the generic matrix of generators is supported, since the formula
    needs the inverses of its diagonal entries as letters.
    """
    if T is not None and T != T_matrix():
        raise ValueError("superinverse is only defined for the generator matrix T")
    a, beta, gamma, d = (Element.word(x) for x in ("a", "beta", "gamma", "d"))
    ai, di = Element.word(inv("a")), Element.word(inv("d"))
    A = ai + ai * beta * di * gamma * ai
    Om = -(ai * beta * di)
    Ga = -(di * gamma * ai)
    D = di + di * gamma * ai * beta * di
    M = _sm([[A, Om], [Ga, D]])
    if P is not None:
        _require_inverses(P, ("a", "d"))
        M = M.map(P.normalize)
    return M


def sdet(T: SuperMatrix | None = None, P: Presentation | None = None) -> Element:
    """Superdeterminant (Berezinian) a d^-1 - beta d^-1 gamma d^-1.

    The trailing d^-1 matters: without it the element is neither central
    nor group-like, see :func:`sdet_short`.
    """
    if T is None:
        T = T_matrix()
    di = _entry_inverse(T[1, 1])
    e = T[0, 0] * di - T[0, 1] * di * T[1, 0] * di
    if P is not None:
        _require_inverses(P, [w[0][:-3] for w in di.words() if w])
        e = P.normalize(e)
    return e


def sdet_short(T: SuperMatrix | None = None, P: Presentation | None = None) -> Element:
    """a d^-1 - beta d^-1 gamma, a frequently quoted but non-central variant."""
    if T is None:
        T = T_matrix()
    di = _entry_inverse(T[1, 1])
    e = T[0, 0] * di - T[0, 1] * di * T[1, 0]
    if P is not None:
        _require_inverses(P, [w[0][:-3] for w in di.words() if w])
        e = P.normalize(e)
    return e


def grdet(That: SuperMatrix | None = None, P: Presentation | None = None) -> Element:
    """Central element b c^-1 - alpha c^-1 delta c^-1 of the Grassmann algebra."""
    if That is None:
        That = That_matrix()
    ci = _entry_inverse(That[1, 0])
    alpha, b, delta = That[0, 0], That[0, 1], That[1, 1]
    e = b * ci - alpha * ci * delta * ci
    if P is not None:
        _require_inverses(P, [w[0][:-3] for w in ci.words() if w])
        e = P.normalize(e)
    return e


def grdet_right(That: SuperMatrix | None = None, P: Presentation | None = None) -> Element:
    """The same central element written as c^-1 b - c^-1 alpha c^-1 delta."""
    if That is None:
        That = That_matrix()
    ci = _entry_inverse(That[1, 0])
    alpha, b, delta = That[0, 0], That[0, 1], That[1, 1]
    e = ci * b - ci * alpha * ci * delta
    if P is not None:
        _require_inverses(P, [w[0][:-3] for w in ci.words() if w])
        e = P.normalize(e)
    return e


# Exponent conventions for the sign (-1)^{i(j+l)} of the right embedding:
# read i, j, l as index parities (0 for the first index, 1 for the second)
# or as the raw index values 1, 2.
PARITY_SIGNS = "parity"
VALUE_SIGNS = "value"


def _sign_exp(i, j, l, convention):
    if convention == PARITY_SIGNS:
        return i * (j + l)
    if convention == VALUE_SIGNS:
        return (i + 1) * ((j + 1) + (l + 1))
    raise ValueError(f"unknown sign convention {convention!r}")


def tensor_embed(M: SuperMatrix, slot: str, convention: str = PARITY_SIGNS) -> list:
    """4x4 matrix of Elements: M (x) I for slot "left", I (x) M for "right".

    left:  (M1)^{ij}_{kl} = M^i_k delta^j_l
    right: (M2)^{ij}_{kl} = (-1)^{i(j+l)} M^j_l delta^i_k
    """
    zero = Element.zero()
    out = [[zero] * 4 for _ in range(4)]
    for i, j, k, l in product((0, 1), repeat=4):
        if slot == "left":
            if j == l:
                out[idx(i, j)][idx(k, l)] = M[i, k]
        elif slot == "right":
            if i == k:
                e = M[j, l]
                out[idx(i, j)][idx(k, l)] = -e if _sign_exp(i, j, l, convention) & 1 else e
        else:
            raise ValueError("slot must be 'left' or 'right'")
    return out


def _promote(R) -> list:
    return [[x if isinstance(x, Element) else Element.scalar(x) for x in row] for row in R]


def rtt_residual(R_left, M: SuperMatrix, N: SuperMatrix, sign, R_right,
                 P: Presentation | None = None, convention: str = PARITY_SIGNS) -> list:
    """Entries of R_left M1 N2 - sign * N2 M1 R_right.

    ``sign`` is +1, -1, or ``"parity"``: the latter weights each summand of
    the right-hand side by (-1)^(parity of the N2 entry it uses).  With
    P given every entry is normalized; with P None the residual is left in
    the free algebra.
    """
    Rl, Rr = _promote(R_left), _promote(R_right)
    M1 = tensor_embed(M, "left")
    N2 = tensor_embed(N, "right", convention)
    n2_parity = [[(N.entry_parity(r & 1, c & 1)) for c in range(4)] for r in range(4)]
    out = []
    for r in range(4):
        row = []
        for c in range(4):
            acc = Element.zero()
            for m in range(4):
                if Rl[r][m].is_zero():
                    continue
                for s in range(4):
                    if M1[m][s].is_zero() or N2[s][c].is_zero():
                        continue
                    acc = acc + Rl[r][m] * M1[m][s] * N2[s][c]
            for m in range(4):
                if N2[r][m].is_zero():
                    continue
                if sign == "parity":
                    w = -1 if n2_parity[r][m] else 1
                else:
                    w = sign
                for s in range(4):
                    if M1[m][s].is_zero() or Rr[s][c].is_zero():
                        continue
                    acc = acc - w * (N2[r][m] * M1[m][s] * Rr[s][c])
            row.append(P.normalize(acc) if P is not None else acc)
        out.append(row)
    return out


def _rank(vectors: list) -> int:
    """Rank over Q(q) of vectors given as {word: LaurentPoly} dicts.

    Fraction-free elimination: only ring operations in Q[q, q^-1] are
    needed, and a pivot's nonvanishing is exact.
    """
    rows = [dict(v) for v in vectors if v]
    rank = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        col = min(pivot, key=lambda w: (len(w), w))
        p = pivot[col]
        rank += 1
        reduced = []
        for r in rows:
            f = r.get(col)
            if f is None:
                reduced.append(r)
                continue
            new = {}
            for w in set(r) | set(pivot):
                v = p * r.get(w, LaurentPoly()) - f * pivot.get(w, LaurentPoly())
                if v:
                    new[w] = v
            if new:
                reduced.append(new)
        rows = reduced
    return rank


def span_rank(elements) -> int:
    return _rank([e.terms for e in elements])


def degree2_span_check(residual_entries, relations) -> dict:
    """Compare the Q(q)-spans of free-algebra RTT residuals and relations.

    Returns the three ranks; equal spans (the degree-2 content of
    "RTT is equivalent to the relations") means all three agree.
    """
    res = [e for e in residual_entries if not e.is_zero()]
    rel = [e for e in relations if not e.is_zero()]
    r_res, r_rel, r_all = span_rank(res), span_rank(rel), span_rank(res + rel)
    return {"residual_rank": r_res, "relation_rank": r_rel, "joint_rank": r_all,
            "equal": r_res == r_rel == r_all}
