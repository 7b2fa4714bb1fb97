"""The unitary representation of the mixed braid group on a character eigenspace.

Coordinates are columns in the spanning classes omega_1..omega_{n-1}; the
Hermitian form on coordinates is h(u, v) = sum_{i,l} u_i conj(v_l) M[i][l],
where M is the Gram matrix, and column l of a representation matrix is the
image of omega_l.  Invariance of the form then reads A^T M conj(A) = M.

All indices in the public API are 1-based, like the braid generators; the
matrices themselves are ordinary 0-based nested lists.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from . import linalg as la
from .braid import BraidWord, Generator, MixedBraidSpec, Sigma, tau_word
from .cover import Character, CoverSpec, infinity_order
from .cyclotomic import CycNum, eval_complex, imag_unit, real_sign
from .linalg import Matrix, Vector

ONE = la.ONE
ZERO = la.ZERO


class DegenerateCharacter(ValueError):
    """The character lies outside the domain where a construction is defined."""


def _require_primed(rho: Character) -> None:
    if not rho.primed:
        raise DegenerateCharacter(f"character {rho} has some rho_j = 1")


def _require_reflection_domain(rho: Character) -> None:
    _require_primed(rho)
    if not rho.admissible:
        raise DegenerateCharacter(
            f"character {rho} has rho_j * rho_k = 1 for some j, k; the reflections are undefined"
        )


def _rho(rho: Character) -> tuple[CycNum, ...]:
    return rho.rho


# --- Gram matrix ----------------------------------------------------------


def gram_matrix(c: CoverSpec, rho: Character) -> Matrix:
    """Tridiagonal Hermitian matrix of pairings <omega_i, omega_l>."""
    _require_primed(rho)
    spec = c.spec
    n, h = spec.n, spec.h
    r = _rho(rho)
    I = imag_unit()
    M = la.zeros(n - 1)
    boundaries = {h[j]: j for j in range(1, spec.m)}
    for i in range(1, n):
        if i in boundaries:
            j = boundaries[i]
            a, b = r[j - 1], r[j]
            M[i - 1][i - 1] = I * (1 - a * b) / ((1 - a) * (1 - b))
        else:
            a = r[spec.color_of(i) - 1]
            M[i - 1][i - 1] = I * (1 + a) / (1 - a)
    for i in range(2, n):
        a = r[spec.color_of(i) - 1]
        upper = I * (-a) / (1 - a)
        M[i - 2][i - 1] = upper
        M[i - 1][i - 2] = upper.conj()
    return M


def pairing(M: Matrix, u: Vector, v: Vector) -> CycNum:
    """h(u, v) = sum u_i conj(v_l) M[i][l]."""
    acc = ZERO
    vbar = [x.conj() for x in v]
    for i, ui in enumerate(u):
        if ui.is_zero():
            continue
        for l, vl in enumerate(vbar):
            m = M[i][l]
            if not (vl.is_zero() or m.is_zero()):
                acc = acc + ui * vl * m
    return acc


def phi_coordinates(c: CoverSpec, j: int, k: int) -> list[int]:
    """0/1 coordinates of phi_{j,k} = omega_{h_j} + ... + omega_{h_{k-1}}."""
    spec = c.spec
    if not 1 <= j < k <= spec.m:
        raise ValueError(f"need 1 <= j < k <= m, got ({j}, {k})")
    lo, hi = spec.h[j], spec.h[k - 1]
    return [1 if lo <= i <= hi else 0 for i in range(1, spec.n)]


def _vec(ints) -> Vector:
    return [CycNum.rational(x) for x in ints]


# --- generator matrices ---------------------------------------------------


def _check_generator(spec: MixedBraidSpec, g: Generator) -> None:
    if isinstance(g, Sigma):
        if not 1 <= g.i < spec.n:
            raise ValueError(f"{g} out of range for n={spec.n}")
        if spec.is_boundary(g.i):
            raise ValueError(f"{g} swaps two colours and is not in the mixed braid group")
    elif not 1 <= g.j < g.k <= spec.m:
        raise ValueError(f"{g} out of range for m={spec.m}")


def theta_generator_closed_form(c: CoverSpec, rho: Character, g: Generator) -> Matrix:
    """Explicit sparse matrices for sigma_i and A_{j,k}."""
    _require_reflection_domain(rho)
    spec = c.spec
    _check_generator(spec, g)
    dim = spec.n - 1
    r = _rho(rho)
    A = la.identity(dim)

    def put(row: int, col: int, value: CycNum) -> None:
        if 1 <= col <= dim:
            A[row - 1][col - 1] = value

    if isinstance(g, Sigma):
        i = g.i
        a = r[spec.color_of(i) - 1]
        put(i, i - 1, a)
        put(i, i, -a)
        put(i, i + 1, ONE)
        return A

    j, k = g.j, g.k
    hj, hk1 = spec.h[j], spec.h[k - 1]
    a, b = r[j - 1], r[k - 1]
    R: dict[int, CycNum] = {hj - 1: a * (1 - b)}
    if k == j + 1:
        R[hj] = a * b - 1
    else:
        R[hj] = b - 1
        R[hk1] = (a - 1) * b
    R[hk1 + 1] = 1 - a
    for row in range(hj, hk1 + 1):
        for col, val in R.items():
            if 1 <= col <= dim:
                A[row - 1][col - 1] = A[row - 1][col - 1] + val
    return A


def theta_generator_reflection(
    c: CoverSpec, rho: Character, g: Generator, M: Matrix | None = None
) -> Matrix:
    """Complex reflection built from the Gram matrix.

    sigma_i fixes the orthogonal complement of omega_i and scales omega_i by
    -rho_j; A_{j,k} does the same for phi_{j,k} with eigenvalue rho_j rho_k.
    """
    _require_reflection_domain(rho)
    spec = c.spec
    _check_generator(spec, g)
    if M is None:
        M = gram_matrix(c, rho)
    dim = spec.n - 1
    r = _rho(rho)
    if isinstance(g, Sigma):
        root = [ONE if x == g.i else ZERO for x in range(1, dim + 1)]
        eig = -r[spec.color_of(g.i) - 1]
    else:
        root = _vec(phi_coordinates(c, g.j, g.k))
        eig = r[g.j - 1] * r[g.k - 1]
    norm = pairing(M, root, root)
    if norm.is_zero():
        raise DegenerateCharacter(f"root of {g} is isotropic for {rho}")
    A = la.identity(dim)
    scale = (eig - 1) / norm
    for l in range(dim):
        # <omega_l, root> = sum_i M[l][i] conj(root_i)
        pl = ZERO
        for i, x in enumerate(root):
            if not x.is_zero() and not M[l][i].is_zero():
                pl = pl + M[l][i] * x.conj()
        if pl.is_zero():
            continue
        coef = scale * pl
        for i, x in enumerate(root):
            if not x.is_zero():
                A[i][l] = A[i][l] + coef * x
    return A


class ThetaRep:
    """Caches generator matrices and their inverses for repeated word evaluation."""

    def __init__(self, c: CoverSpec, rho: Character, construction: str = "closed"):
        _require_reflection_domain(rho)
        if construction not in ("closed", "reflection"):
            raise ValueError(f"unknown construction {construction!r}")
        self.cover = c
        self.rho = rho
        self.construction = construction
        self._gram: Matrix | None = None
        self._cache: dict[tuple[Generator, int], Matrix] = {}

    @property
    def gram(self) -> Matrix:
        if self._gram is None:
            self._gram = gram_matrix(self.cover, self.rho)
        return self._gram

    def generator(self, g: Generator, e: int = 1) -> Matrix:
        key = (g, e)
        if key not in self._cache:
            if e == 1:
                if self.construction == "closed":
                    A = theta_generator_closed_form(self.cover, self.rho, g)
                else:
                    A = theta_generator_reflection(self.cover, self.rho, g, self.gram)
            else:
                A = la.inverse(self.generator(g, 1))
            self._cache[key] = A
        return self._cache[key]

    def generators(self) -> list[Matrix]:
        return [self.generator(g) for g in self.cover.spec.mixed_generators()]

    def word(self, w: BraidWord) -> Matrix:
        if w.raw:
            raise ValueError("theta is only defined on mixed words; got a raw word")
        out = la.identity(self.cover.spec.n - 1)
        for g, e in w:
            out = la.matmul(out, self.generator(g, e))
        return out


def theta_word(c: CoverSpec, rho: Character, w: BraidWord) -> Matrix:
    """theta(g_1 ... g_k) = theta(g_1) ... theta(g_k)."""
    w.validate(c.spec)
    return ThetaRep(c, rho).word(w)


# --- checks ---------------------------------------------------------------


def verify_unitary(A: Matrix, M: Matrix) -> bool:
    if len(A) != len(M):
        raise ValueError("dimension mismatch")
    return la.equal(la.matmul(la.matmul(la.transpose(A), M), la.conj(A)), M)


def gram_determinant_closed_form(c: CoverSpec, rho: Character) -> CycNum:
    _require_primed(rho)
    r = _rho(rho)
    top = ONE
    bottom = ONE
    for nj, a in zip(c.parts, r):
        top = top * a**nj
        bottom = bottom * (1 - a) ** nj
    return imag_unit() ** (c.spec.n - 1) * (1 - top) / bottom


def gram_determinant_check(c: CoverSpec, rho: Character) -> bool:
    return la.det(gram_matrix(c, rho)) == gram_determinant_closed_form(c, rho)


def _infinity_monodromy(rho: Character) -> CycNum:
    out = ONE
    for nj, a in zip(rho.cover.parts, _rho(rho)):
        out = out * a**nj
    return out


def relation_vector(c: CoverSpec, rho: Character) -> Vector:
    """Coefficients of the linear relation among the omega_i when prod rho_j^{n_j} = 1."""
    _require_primed(rho)
    if rho.total_angle() != 0:
        raise DegenerateCharacter("the relation exists only when prod rho_j^{n_j} = 1")
    spec = c.spec
    r = _rho(rho)
    out = []
    prefix = ONE
    for j in range(1, spec.m + 1):
        a = r[j - 1]
        for i in spec.block(j):
            if i < spec.n:
                out.append(1 - prefix * a ** (i - spec.h[j - 1]))
        prefix = prefix * a ** spec.parts[j - 1]
    return out


def linear_relation_check(c: CoverSpec, rho: Character) -> bool:
    """True iff the relation vector pairs to zero with every omega_l."""
    v = relation_vector(c, rho)
    M = gram_matrix(c, rho)
    dim = len(v)
    return all(
        pairing(M, v, [ONE if x == l else ZERO for x in range(dim)]).is_zero()
        for l in range(dim)
    )


def theta_tau(c: CoverSpec, rho: Character) -> Matrix:
    """Image of the full twist, computed through the coloured Burau duality.

    The full-rank change of basis is singular exactly when prod rho_j^{n_j} = 1;
    the reduced Burau matrix is used in that case.
    """
    from .burau import theta_via_burau, theta_via_reduced

    w = tau_word(c.spec)
    if _infinity_monodromy(rho) == ONE:
        return theta_via_reduced(c, rho, w)
    return theta_via_burau(c, rho, w)


def tau_scalar_check(c: CoverSpec, rho: Character) -> bool:
    """theta(tau) = (prod rho_j^{n_j})^{-1} Id and theta(tau)^f = Id."""
    T = theta_tau(c, rho)
    f, _ = infinity_order(c)
    expected = la.scale(_infinity_monodromy(rho).inv(), la.identity(len(T)))
    return la.equal(T, expected) and la.is_identity(la.power(T, f))


def tau_power_check(c: CoverSpec, rho: Character) -> bool:
    """theta(tau)^f = Id and theta(tau) is a scalar matrix."""
    T = theta_tau(c, rho)
    f, _ = infinity_order(c)
    return la.is_scalar(T) is not None and la.is_identity(la.power(T, f))


def signature_from_gram(M: Matrix) -> tuple[int, int]:
    """(positive, negative) inertia of a Hermitian matrix by exact congruence.

    Elimination is fraction free: after a real pivot d the remaining block
    becomes d * A - a a^*, which is d times the Schur complement and so has
    the same inertia when d > 0 and the swapped inertia when d < 0.
    """
    A = la.copy(M)
    idx = list(range(len(A)))
    counts = [0, 0]  # positive, negative for the current block's orientation
    flipped = False
    while idx:
        p = next((i for i in idx if not A[i][i].is_zero()), None)
        if p is None:
            pair = next(
                ((i, j) for i in idx for j in idx if i != j and not A[i][j].is_zero()), None
            )
            if pair is None:
                break
            i, j = pair
            # replace basis vector i by e_i + c e_j, which makes A[i][i] = 2|c|^2 > 0
            c = A[i][j]
            new_row = {b: A[i][b] + c * A[j][b] for b in idx if b != i}
            diag = c * A[j][i] + c.conj() * A[i][j]
            for b, val in new_row.items():
                A[i][b] = val
                A[b][i] = val.conj()
            A[i][i] = diag
            p = i
        d = A[p][p]
        negative = real_sign(d) < 0
        counts[negative != flipped] += 1
        rest = [i for i in idx if i != p]
        for a in rest:
            col = A[a][p]
            for b in rest:
                x = d * A[a][b]
                if not col.is_zero() and not A[p][b].is_zero():
                    x = x - col * A[p][b]
                A[a][b] = x
        flipped ^= negative
        idx = rest
    return counts[0], counts[1]


def is_irreducible(c: CoverSpec, rho: Character) -> bool:
    """Decide irreducibility of the group generated by the reflection images.

    The eigenspace is the coordinate space modulo the radical of the form,
    which is nonzero exactly when prod rho_j^{n_j} = 1; the generators are
    first pushed down to that quotient.  For a group generated by
    pseudo-reflections, a proper invariant subspace either contains some
    root (so the invariant closure of that root is proper) or lies in every
    reflecting hyperplane (so it sits inside the common fixed space).
    Checking both conditions is therefore complete.
    """
    rep = ThetaRep(c, rho)
    radical = la.nullspace(la.transpose(rep.gram))
    gens = [la.quotient_action(A, radical) for A in rep.generators()]
    dim = c.spec.n - 1 - len(radical)
    if dim == 0:
        return False
    if dim == 1:
        return True
    identity = la.identity(dim)
    roots: list[Vector] = []
    stacked: Matrix = []
    for A in gens:
        D = la.sub(A, identity)
        if la.rank(D) > 1:
            raise AssertionError("generator image is not a pseudo-reflection")
        stacked.extend(D)
        col = next((l for l in range(dim) if any(not D[i][l].is_zero() for i in range(dim))), None)
        if col is not None:
            roots.append([D[i][col] for i in range(dim)])
    if stacked and la.nullspace(stacked):
        return False
    if not roots:
        return False
    return all(la.invariant_closure([v], gens).full() for v in roots)


# --- JSON export ----------------------------------------------------------


def common_conductor(A: Matrix) -> int:
    return math.lcm(1, *(x.conductor for row in A for x in row))


def matrix_to_json(A: Matrix, precision: int | None = None) -> dict:
    N = common_conductor(A)
    out: dict = {
        "dim": len(A),
        "conductor": N,
        "entries": [[[str(q) for q in x.promote(N).coeffs] for x in row] for row in A],
    }
    if precision is not None:
        out["precision"] = precision
        out["complex"] = [[_complex_pair(x, precision) for x in row] for row in A]
    return out


def _complex_pair(x: CycNum, precision: int) -> list[float]:
    z = eval_complex(x, max(precision, 32)).center
    return [z.real, z.imag]


def matrix_from_json(data: dict) -> Matrix:
    N = int(data["conductor"])
    return [[CycNum(N, [Fraction(q) for q in x]) for x in row] for row in data["entries"]]


def dumps(A: Matrix, precision: int | None = None) -> str:
    return json.dumps(matrix_to_json(A, precision))
