"""Kernel selection for cyclotomic arithmetic.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
pure-Python ``_pykernels`` are used.  Set ``MIXEDBRAID_PURE_PYTHON=1`` to
force the fallback.  The compiled path raises ``OverflowError`` whenever
int64 might not suffice, and this module then retries in pure Python, so both
backends always return identical results.
"""

from __future__ import annotations

import os
from array import array
from functools import lru_cache

from . import _pykernels

try:
    if os.environ.get("MIXEDBRAID_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:  # pragma: no cover - depends on the build
    _ckernels = None

BACKEND = "compiled" if _ckernels is not None else "python"


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            out.append((p, a))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=None)
def reduction_plan(M: int) -> tuple:
    """Canonical reduction for vectors modulo x^M - 1.

    For each prime power p^a exactly dividing M, indices whose residue mod p^a
    lies in the top class [(p-1)p^(a-1), p^a) are eliminated with the relation
    sum_r zeta^(k + r*M/p) = 0.  The surviving indices index a basis of
    Q(zeta_M), so the reduced vector is unique.
    """
    steps = []
    for p, a in factorize(M):
        q = p**a
        lo = (p - 1) * (q // p)
        L = M // p
        step = tuple(
            (k, tuple((k + r * L) % M for r in range(1, p)))
            for k in range(M)
            if k % q >= lo
        )
        steps.append(step)
    return tuple(steps)


@lru_cache(maxsize=None)
def _cplan(M: int) -> list:
    out = []
    for step in reduction_plan(M):
        if not step:
            continue
        width = len(step[0][1])
        tops = array("q", [t for t, _ in step])
        others = array("q", [k for _, ks in step for k in ks])
        out.append((tops, others, width))
    return out


def _growth(M: int) -> int:
    return 2 ** len(factorize(M))


def mul(a: tuple, b: tuple, M: int, pure: bool = False) -> tuple:
    if _ckernels is not None and not pure:
        try:
            return _ckernels.mul(a, b, M, _cplan(M), _growth(M))
        except OverflowError:
            pass
    return tuple(_pykernels.mul(a, b, M, reduction_plan(M)))


def lincomb(a: tuple, sa: int, b: tuple, sb: int, pure: bool = False) -> tuple:
    if _ckernels is not None and not pure:
        try:
            return _ckernels.lincomb(a, sa, b, sb)
        except OverflowError:
            pass
    return tuple(_pykernels.lincomb(a, sa, b, sb))


def permute_reduce(a: tuple, mult: int, M: int, pure: bool = False) -> tuple:
    if _ckernels is not None and not pure:
        try:
            return _ckernels.permute_reduce(a, mult % M, M, _cplan(M), _growth(M))
        except OverflowError:
            pass
    return tuple(_pykernels.permute_reduce(a, mult, M, reduction_plan(M)))


def reduce(v: list[int], M: int) -> tuple:
    _pykernels.reduce_inplace(v, reduction_plan(M))
    return tuple(v)
