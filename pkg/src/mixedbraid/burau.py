"""Multivariate (coloured) Burau representation of the mixed braid group.

Raw words are evaluated crossing by crossing from left to right while
tracking which colour sits at each position.  A positive crossing sigma_i
meeting colours (a, b) at positions (i, i+1) contributes the block
[[1 - t_b, 1], [t_a, 0]] and swaps the two colours; matrices multiply in
word order, which makes the map a homomorphism on colour-preserving words.
On A_{1,2} = sigma_{h_1}^2 this reproduces the closed formula of
:func:`burau_A`, which pins the convention.

A_{j,k} letters are expanded with :func:`twist_crossings`, whose image is
exactly the closed formula.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence, TypeVar

from . import linalg as la
from .braid import BraidWord, MixedBraidSpec, Sigma, Twist, is_mixed
from .cover import Character, CoverSpec
from .cyclotomic import CycNum
from .laurent import LaurentPoly
from .linalg import Matrix

PolyMatrix = list[list[LaurentPoly]]
T = TypeVar("T")


class ColoredBurauState:
    """Running product of crossing matrices plus the current colouring."""

    def __init__(self, spec: MixedBraidSpec):
        self.spec = spec
        m = spec.m
        n = spec.n
        self.matrix: PolyMatrix = poly_identity(n, m)
        self.strand_colors: list[int] = list(spec.colors())

    def apply(self, i: int, e: int) -> None:
        block = crossing_block(self.spec.m, self.strand_colors, i, e)
        self.matrix = _right_multiply_block(self.matrix, i, block)
        c = self.strand_colors
        c[i - 1], c[i] = c[i], c[i - 1]


def poly_identity(n: int, m: int) -> PolyMatrix:
    one, zero = LaurentPoly.const(m, 1), LaurentPoly.const(m, 0)
    return [[one if a == b else zero for b in range(n)] for a in range(n)]


def crossing_block(m: int, colors: Sequence[int], i: int, e: int) -> list[list[LaurentPoly]]:
    """2x2 block of sigma_i^e acting on positions (i, i+1) under ``colors``."""
    a, b = colors[i - 1], colors[i]
    t = lambda j, p=1: LaurentPoly.var(m, j, p)  # noqa: E731
    one, zero = LaurentPoly.const(m, 1), LaurentPoly.const(m, 0)
    if e == 1:
        return [[one - t(b), one], [t(a), zero]]
    # inverse of the positive block for the swapped colouring (b, a)
    return [[zero, t(b, -1)], [one, (t(a) - one) * t(b, -1)]]


def _right_multiply_block(A: list[list[T]], i: int, block) -> list[list[T]]:
    """A * (identity with ``block`` at rows/cols i, i+1)."""
    p, q = i - 1, i
    (b00, b01), (b10, b11) = block
    out = [list(row) for row in A]
    for row_in, row_out in zip(A, out):
        x, y = row_in[p], row_in[q]
        row_out[p] = x * b00 + y * b10
        row_out[q] = x * b01 + y * b11
    return out


def burau_sigma(i: int, colors: Sequence[int], m: int | None = None) -> PolyMatrix:
    """Full n x n matrix of sigma_i for the colouring ``colors``."""
    n = len(colors)
    if not 1 <= i < n:
        raise ValueError(f"sigma_{i} out of range for n={n}")
    m = max(colors) if m is None else m
    return _right_multiply_block(poly_identity(n, m), i, crossing_block(m, colors, i, 1))


def burau_A(j: int, k: int, spec: MixedBraidSpec) -> PolyMatrix:
    """Closed formula id + R S^T for the pure generator A_{j,k}."""
    if not 1 <= j < k <= spec.m:
        raise ValueError(f"need 1 <= j < k <= m, got ({j}, {k})")
    m, n, h = spec.m, spec.n, spec.h
    one = LaurentPoly.const(m, 1)
    t = lambda r: LaurentPoly.var(m, r)  # noqa: E731
    R = {h[j]: one - t(k), h[k - 1] + 1: t(j) - one}
    S = {h[j]: -t(j), h[k - 1] + 1: one}
    for r in range(j + 1, k):
        for i in spec.block(r):
            S[i] = one - t(r)
    A = poly_identity(n, m)
    for a, ra in R.items():
        for b, sb in S.items():
            A[a - 1][b - 1] = A[a - 1][b - 1] + ra * sb
    return A


def _check_color_preserving(w: BraidWord, spec: MixedBraidSpec) -> None:
    w.validate(spec)
    if not is_mixed(w, spec):
        raise ValueError(f"word {w} does not preserve the colour blocks")


def burau_word(w: BraidWord, spec: MixedBraidSpec) -> PolyMatrix:
    """beta(w) for a colour-preserving word, as a left-to-right product."""
    _check_color_preserving(w, spec)
    return [list(row) for row in _burau_cached(w, spec)]


@lru_cache(maxsize=256)
def _burau_cached(w: BraidWord, spec: MixedBraidSpec) -> PolyMatrix:
    state = ColoredBurauState(spec)
    for g, e in _crossings(w, spec):
        state.apply(g.i, e)
    if tuple(state.strand_colors) != spec.colors():
        raise AssertionError("colouring did not return to the initial one")
    return state.matrix


def _crossings(w: BraidWord, spec: MixedBraidSpec) -> list:
    out: list = []
    for g, e in w:
        if isinstance(g, Twist):
            x = twist_crossings(g.j, g.k, spec)
            out.extend((x if e == 1 else x.inverse()).letters)
        else:
            out.append((g, e))
    return out


def twist_crossings(j: int, k: int, spec: MixedBraidSpec) -> BraidWord:
    """Raw word whose coloured Burau image is the closed formula for A_{j,k}.

    This is D^-1 sigma_{h_j}^2 D with D = sigma_{h_j+1} ... sigma_{h_{k-1}}.
    It coincides with :func:`mixedbraid.braid.expand_A` when k = j + 1; for
    k > j + 1 the conjugating strand crosses the middle blocks on the other
    side.
    """
    if not 1 <= j < k <= spec.m:
        raise ValueError(f"need 1 <= j < k <= m, got ({j}, {k})")
    h = spec.h
    D = tuple((Sigma(i), 1) for i in range(h[j] + 1, h[k - 1] + 1))
    Dinv = tuple((g, -e) for g, e in reversed(D))
    core = ((Sigma(h[j]), 1), (Sigma(h[j]), 1))
    return BraidWord(Dinv + core + D, raw=True)


def burau_word_evaluated(w: BraidWord, spec: MixedBraidSpec, values: Sequence[CycNum]) -> Matrix:
    """beta(w) with t_j -> values[j-1], multiplied out crossing by crossing."""
    _check_color_preserving(w, spec)
    colors = list(spec.colors())
    inv = [v.inv() for v in values]
    A = la.identity(spec.n)
    for g, e in _crossings(w, spec):
        i = g.i
        a, b = colors[i - 1], colors[i]
        ta, tb = values[a - 1], values[b - 1]
        if e == 1:
            block = [[1 - tb, la.ONE], [ta, la.ZERO]]
        else:
            ib = inv[b - 1]
            block = [[la.ZERO, ib], [la.ONE, (ta - 1) * ib]]
        A = _right_multiply_block(A, i, block)
        colors[i - 1], colors[i] = b, a
    return A


def invariant_vector(spec: MixedBraidSpec) -> list[LaurentPoly]:
    """w = sum_i (1 - t_{j(i)}) e_i, fixed by beta(g)^T for every g."""
    m = spec.m
    return [LaurentPoly.const(m, 1) - LaurentPoly.var(m, c) for c in spec.colors()]


def fixed_vector(spec: MixedBraidSpec) -> list[LaurentPoly]:
    """y with y_i = t_{j(1)} ... t_{j(i-1)}, fixed by beta(g) for every mixed g."""
    m = spec.m
    out = [LaurentPoly.const(m, 1)]
    for c in spec.colors()[:-1]:
        out.append(out[-1] * LaurentPoly.var(m, c))
    return out


def reduce_matrix(full: PolyMatrix, spec: MixedBraidSpec) -> PolyMatrix:
    """Action on the quotient by the fixed line R*y, in the basis of images of e_1..e_{n-1}.

    e_n = (y - sum_{a<n} y_a e_a) / y_n and y_n is a unit, so the quotient is
    free and entry (a, l) is full[a][l] - full[n][l] * y_a / y_n.
    """
    n = spec.n
    y = fixed_vector(spec)
    ratio = [y[a] * y[n - 1] ** -1 for a in range(n - 1)]
    return [
        [full[a][l] - full[n - 1][l] * ratio[a] for l in range(n - 1)] for a in range(n - 1)
    ]


def reduced_burau(w: BraidWord, spec: MixedBraidSpec) -> PolyMatrix:
    """Reduced coloured Burau matrix of a colour-preserving word."""
    return reduce_matrix(burau_word(w, spec), spec)


def evaluate(M: Sequence[Sequence[LaurentPoly]], rho: Character, conjugate: bool = False) -> Matrix:
    """Substitute t_j -> rho_j (or conj(rho_j))."""
    values = [r.conj() if conjugate else r for r in rho.rho]
    return [[p.evaluate(values) for p in row] for row in M]


# --- duality with theta ---------------------------------------------------


def duality_matrix(c: CoverSpec, rho: Character, conjugate_last: bool = True) -> Matrix:
    """Change of basis B with columns v_1..v_{n-1}, w.

    v_i = -conj(rho_{j(i)}) e_i + e_{i+1}.  The last column is
    sum_i (1 - conj(rho_{j(i)})) e_i, or with unconjugated rho when
    ``conjugate_last`` is false.
    """
    spec = c.spec
    n = spec.n
    rbar = [x.conj() for x in rho.rho]
    rlast = rbar if conjugate_last else list(rho.rho)
    B = la.zeros(n)
    for i in range(1, n):
        B[i - 1][i - 1] = -rbar[spec.color_of(i) - 1]
        B[i][i - 1] = la.ONE
    for i in range(1, n + 1):
        B[i - 1][n - 1] = 1 - rlast[spec.color_of(i) - 1]
    return B


def _dual_action(c: CoverSpec, rho: Character, w: BraidWord, B: Matrix, Binv: Matrix) -> Matrix:
    values = [x.conj() for x in rho.rho]
    X = burau_word_evaluated(w, c.spec, values)
    Y = la.inverse(la.transpose(X))
    return la.matmul(la.matmul(Binv, Y), B)


def theta_via_burau(c: CoverSpec, rho: Character, w: BraidWord, conjugate_last: bool = True) -> Matrix:
    """theta(w) read off from the dual of the evaluated coloured Burau matrix.

    Accepts raw words as long as they preserve colours, which is how the full
    twist is evaluated.
    """
    B = duality_matrix(c, rho, conjugate_last)
    Binv = la.inverse(B)
    Z = _dual_action(c, rho, w, B, Binv)
    n = c.spec.n
    tail = [Z[n - 1][l] for l in range(n - 1)] + [Z[l][n - 1] for l in range(n - 1)]
    if any(not x.is_zero() for x in tail) or Z[n - 1][n - 1] != la.ONE:
        raise ArithmeticError("dual Burau action is not block diagonal in the basis B")
    return [row[: n - 1] for row in Z[: n - 1]]


def duality_transform(
    c: CoverSpec, rho: Character, conjugate_last: bool = True
) -> tuple[Matrix, bool]:
    """Return B and whether B^-1 (beta_conj(rho)(g)^T)^-1 B = diag(theta(g), 1) for every generator."""
    from .rep import ThetaRep

    B = duality_matrix(c, rho, conjugate_last)
    try:
        Binv = la.inverse(B)
    except ZeroDivisionError as exc:
        raise ArithmeticError("B is singular; the character violates the duality hypotheses") from exc
    rep = ThetaRep(c, rho)
    n = c.spec.n
    ok = True
    for g in c.spec.mixed_generators():
        Z = _dual_action(c, rho, BraidWord(((g, 1),)), B, Binv)
        target = [list(row) + [la.ZERO] for row in rep.generator(g)]
        target.append([la.ZERO] * (n - 1) + [la.ONE])
        if not la.equal(Z, target):
            ok = False
            break
    return B, ok


def classical_burau_word(w: BraidWord, n: int | None = None) -> list[list[dict[int, int]]]:
    """Single-variable Burau matrix of a raw word, entries as {power: coeff}.

    Independent of the coloured machinery: every crossing uses the block
    [[1 - t, 1], [t, 0]] and its inverse [[0, t^-1], [1, 1 - t^-1]].
    """
    if n is None:
        n = max(2, max((g.i + 1 for g, _ in w), default=2))

    def padd(p, q):
        out = dict(p)
        for k, c in q.items():
            out[k] = out.get(k, 0) + c
            if not out[k]:
                del out[k]
        return out

    def pmul(p, q):
        out: dict[int, int] = {}
        for k1, c1 in p.items():
            for k2, c2 in q.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return {k: c for k, c in out.items() if c}

    pos = [[{0: 1, 1: -1}, {0: 1}], [{1: 1}, {}]]
    neg = [[{}, {-1: 1}], [{0: 1}, {0: 1, -1: -1}]]
    A = [[{0: 1} if a == b else {} for b in range(n)] for a in range(n)]
    for g, e in w:
        block = pos if e == 1 else neg
        p, q = g.i - 1, g.i
        for row in A:
            x, y = row[p], row[q]
            row[p] = padd(pmul(x, block[0][0]), pmul(y, block[1][0]))
            row[q] = padd(pmul(x, block[0][1]), pmul(y, block[1][1]))
    return A



def reduced_pairing_matrix(c: CoverSpec, rho: Character) -> Matrix:
    """P with theta(g) = P^-1 (beta_red(g)^T)^-1 P after t -> conj(rho).

    The vectors v_i pair perfectly with the reduced quotient; P is the
    transpose of the pairing matrix G[i][l] = (v_i)_l, evaluated at conj(rho).
    """
    spec = c.spec
    n = spec.n
    rbar = [x.conj() for x in rho.rho]
    P = la.zeros(n - 1)
    for i in range(1, n):
        P[i - 1][i - 1] = -rbar[spec.color_of(i) - 1]
        if i < n - 1:
            P[i][i - 1] = la.ONE
    return P


def theta_via_reduced(c: CoverSpec, rho: Character, w: BraidWord) -> Matrix:
    """theta(w) from the reduced Burau matrix: the dual representation at conj(rho)."""
    Q = evaluate(reduced_burau(w, c.spec), rho, conjugate=True)
    P = reduced_pairing_matrix(c, rho)
    return la.matmul(la.matmul(la.inverse(P), la.inverse(la.transpose(Q))), P)
