"""Dense exact linear algebra over cyclotomic fields.

Matrices are lists of rows of :class:`CycNum`.  Everything here is exact and
written for the small sizes (dimension below ~20) this package needs.
"""

from __future__ import annotations

from typing import Sequence

from .cyclotomic import CycNum

Matrix = list[list[CycNum]]
Vector = list[CycNum]

ZERO = CycNum.rational(0)
ONE = CycNum.rational(1)


def zeros(rows: int, cols: int | None = None) -> Matrix:
    return [[ZERO] * (rows if cols is None else cols) for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def copy(A: Matrix) -> Matrix:
    return [list(row) for row in A]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    inner, cols = len(B), len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [ZERO] * cols
        for k in range(inner):
            a = row[k]
            if a.is_zero():
                continue
            for j, b in enumerate(B[k]):
                if not b.is_zero():
                    acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def matvec(A: Matrix, v: Vector) -> Vector:
    out = []
    for row in A:
        acc = ZERO
        for a, x in zip(row, v):
            if not (a.is_zero() or x.is_zero()):
                acc = acc + a * x
        out.append(acc)
    return out


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def conj(A: Matrix) -> Matrix:
    return [[x.conj() for x in row] for row in A]


def adjoint(A: Matrix) -> Matrix:
    return transpose(conj(A))


def add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def sub(A: Matrix, B: Matrix) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(c: CycNum, A: Matrix) -> Matrix:
    return [[c * x for x in row] for row in A]


def equal(A: Matrix, B: Matrix) -> bool:
    return len(A) == len(B) and all(
        len(ra) == len(rb) and all(a == b for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def is_identity(A: Matrix) -> bool:
    return equal(A, identity(len(A)))


def is_scalar(A: Matrix) -> CycNum | None:
    """Return c when A = c*Id, else None."""
    if not A:
        return None
    c = A[0][0]
    return c if equal(A, scale(c, identity(len(A)))) else None


def power(A: Matrix, e: int) -> Matrix:
    if e < 0:
        return power(inverse(A), -e)
    out, base = identity(len(A)), A
    while e:
        if e & 1:
            out = matmul(out, base)
        e >>= 1
        if e:
            base = matmul(base, base)
    return out


def _pivot_row(M: Matrix, col: int, start: int) -> int | None:
    for r in range(start, len(M)):
        if not M[r][col].is_zero():
            return r
    return None


def row_echelon(A: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row echelon form, pivot columns, and the number of row swaps."""
    M = copy(A)
    rows = len(M)
    cols = len(M[0]) if M else 0
    pivots: list[int] = []
    swaps = 0
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = _pivot_row(M, c, r)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
            swaps += 1
        inv = M[r][c].inv()
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and not M[i][c].is_zero():
                f = M[i][c]
                M[i] = [x - f * y if not y.is_zero() else x for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots, swaps


def rank(A: Matrix) -> int:
    return len(row_echelon(A)[1]) if A else 0


def det(A: Matrix) -> CycNum:
    """Determinant by fraction-carrying Gaussian elimination."""
    M = copy(A)
    n = len(M)
    out = ONE
    for c in range(n):
        p = _pivot_row(M, c, c)
        if p is None:
            return ZERO
        if p != c:
            M[c], M[p] = M[p], M[c]
            out = -out
        piv = M[c][c]
        out = out * piv
        inv = piv.inv()
        for i in range(c + 1, n):
            if not M[i][c].is_zero():
                f = M[i][c] * inv
                M[i] = [x - f * y if not y.is_zero() else x for x, y in zip(M[i], M[c])]
    return out


def inverse(A: Matrix) -> Matrix:
    n = len(A)
    aug = [list(row) + idrow for row, idrow in zip(A, identity(n))]
    R, pivots, _ = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def nullspace(A: Matrix) -> list[Vector]:
    """Basis of {x : A x = 0}."""
    cols = len(A[0]) if A else 0
    R, pivots, _ = row_echelon(A)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -R[r][f]
        basis.append(v)
    return basis


def quotient_action(A: Matrix, sub: Sequence[Vector]) -> Matrix:
    """Matrix induced by A on the quotient by an A-stable subspace.

    The quotient basis is the images of the standard basis vectors at the
    non-pivot positions of the reduced echelon form of ``sub``.
    """
    if not sub:
        return copy(A)
    R, pivots, _ = row_echelon([list(v) for v in sub])
    R = R[: len(pivots)]
    keep = [i for i in range(len(A)) if i not in pivots]
    # e_p = r - sum_{i kept} R[t][i] e_i for the row r with pivot p
    return [
        [A[i][l] - sum((A[p][l] * R[t][i] for t, p in enumerate(pivots)), ZERO) for l in keep]
        for i in keep
    ]


class Span:
    """Incrementally grown subspace, stored as a reduced echelon basis."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[Vector] = []
        self.pivots: list[int] = []

    def _reduce(self, v: Vector) -> Vector:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not c.is_zero():
                v = [x - c * y if not y.is_zero() else x for x, y in zip(v, row)]
        return v

    def add(self, v: Sequence[CycNum]) -> Vector | None:
        """Insert v; return its reduced (new) part, or None if already inside."""
        v = self._reduce(v)
        p = next((i for i, x in enumerate(v) if not x.is_zero()), None)
        if p is None:
            return None
        inv = v[p].inv()
        v = [x * inv for x in v]
        for k, row in enumerate(self.rows):
            c = row[p]
            if not c.is_zero():
                self.rows[k] = [x - c * y if not y.is_zero() else x for x, y in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        return v

    def __len__(self):
        return len(self.rows)

    def full(self) -> bool:
        return len(self.rows) == self.dim


def invariant_closure(vectors: Sequence[Vector], gens: Sequence[Matrix]) -> Span:
    """Smallest subspace containing ``vectors`` and stable under every matrix."""
    dim = len(gens[0]) if gens else len(vectors[0])
    span = Span(dim)
    queue = []
    for v in vectors:
        new = span.add(v)
        if new is not None:
            queue.append(new)
    while queue and not span.full():
        v = queue.pop()
        for g in gens:
            new = span.add(matvec(g, v))
            if new is not None:
                queue.append(new)
    return span
