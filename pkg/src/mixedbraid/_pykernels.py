"""Pure-Python arithmetic kernels for :mod:`mixedbraid.cyclotomic`.

Elements of Q(zeta_M) are stored as integer vectors of length M (numerators
over a common denominator).  ``mul`` computes the cyclic convolution modulo
x^M - 1 and then applies the canonical reduction described by ``plan``.
These functions are the reference implementation; the compiled module
``_ckernels`` must agree with them bit for bit.
"""

from __future__ import annotations

from typing import Sequence

Plan = Sequence[Sequence[tuple[int, tuple[int, ...]]]]


def reduce_inplace(v: list[int], plan: Plan) -> None:
    for step in plan:
        for top, others in step:
            c = v[top]
            if c:
                v[top] = 0
                for k in others:
                    v[k] -= c


def mul(a: Sequence[int], b: Sequence[int], M: int, plan: Plan) -> list[int]:
    out = [0] * M
    nb = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in nb:
            k = i + j
            if k >= M:
                k -= M
            out[k] += x * y
    reduce_inplace(out, plan)
    return out


def lincomb(a: Sequence[int], sa: int, b: Sequence[int], sb: int) -> list[int]:
    """Return ``sa*a + sb*b`` entrywise."""
    return [x * sa + y * sb for x, y in zip(a, b)]


def permute_reduce(a: Sequence[int], mult: int, M: int, plan: Plan) -> list[int]:
    """Apply zeta -> zeta^mult (mult a unit mod M), then reduce."""
    out = [0] * M
    for k, c in enumerate(a):
        if c:
            out[(k * mult) % M] += c
    reduce_inplace(out, plan)
    return out
