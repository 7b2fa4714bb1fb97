"""Exact arithmetic in cyclotomic fields Q(zeta_M).

An element is a vector of M rationals c_k standing for sum c_k zeta_M^k,
taken modulo x^M - 1 and brought to a canonical form (see
:func:`mixedbraid.kernels.reduction_plan`).  Numerators are Python ints over
one positive common denominator, so all arithmetic is exact.  Elements with
different conductors are promoted to the lcm before they are combined or
compared.

Floating point appears only in :func:`eval_complex` and in the numeric part of
:func:`real_sign`, both of which return certified answers.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Union

from mpmath import mp, mpf
from mpmath.ctx_iv import MPIntervalContext

from . import kernels
from .kernels import factorize

Scalar = Union[int, Fraction]


def _totient(n: int) -> int:
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def _mobius(n: int) -> int:
    fs = factorize(n)
    if any(a > 1 for _, a in fs):
        return 0
    return -1 if len(fs) % 2 else 1


@lru_cache(maxsize=None)
def _trace_weights(M: int) -> tuple[Fraction, ...]:
    # normalized trace of zeta_M^k is mu(M/g)/phi(M/g) with g = gcd(k, M);
    # it does not depend on the field the element is viewed in
    out = []
    for k in range(M):
        r = M // math.gcd(k, M)
        out.append(Fraction(_mobius(r), _totient(r)))
    return tuple(out)


@lru_cache(maxsize=None)
def _galois_generators(M: int) -> tuple[tuple[int, int], ...]:
    """Generators (a, order) of independent cyclic factors of (Z/M)^*."""
    gens = []
    for p, e in factorize(M):
        q = p**e
        rest = M // q
        local = []
        if p == 2:
            if e >= 2:
                local.append((q - 1, 2))
            if e >= 3:
                local.append((5, q // 4))
        else:
            phi = q - q // p
            for g in range(2, q):
                if math.gcd(g, p) == 1 and _order_mod(g, q) == phi:
                    local.append((g, phi))
                    break
        for g, order in local:
            # lift: a = g mod q, a = 1 mod rest
            a = g if rest == 1 else _crt(g, q, 1, rest)
            gens.append((a, order))
    return tuple(gens)


def _order_mod(g: int, q: int) -> int:
    x, k = g % q, 1
    while x != 1:
        x = x * g % q
        k += 1
    return k


def _crt(a: int, m: int, b: int, n: int) -> int:
    return (a + m * ((b - a) * pow(m, -1, n) % n)) % (m * n)


@lru_cache(maxsize=None)
def _float_table(M: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    cos = tuple(math.cos(2 * math.pi * k / M) for k in range(M))
    sin = tuple(math.sin(2 * math.pi * k / M) for k in range(M))
    return cos, sin


class CycNum:
    """An element of Q(zeta_M); immutable."""

    __slots__ = ("conductor", "_num", "_den", "_hash")

    def __init__(self, conductor: int, coeffs: Iterable[Scalar] = ()):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        fr = [Fraction(c) for c in coeffs]
        if len(fr) > conductor:
            raise ValueError("more coefficients than the conductor")
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        v = [0] * conductor
        for k, c in enumerate(fr):
            v[k] = c.numerator * (den // c.denominator)
        num = kernels.reduce(v, conductor)
        self._set(conductor, num, den)

    def _set(self, M: int, num: tuple, den: int) -> None:
        g = math.gcd(den, *num)
        if g == 0:
            num, den = (0,) * M, 1
        elif g != 1:
            num = tuple(c // g for c in num)
            den //= g
        self.conductor = M
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, M: int, num: tuple, den: int) -> "CycNum":
        obj = cls.__new__(cls)
        obj._set(M, num, den)
        return obj

    # constructors ---------------------------------------------------------

    @classmethod
    def rational(cls, q: Scalar, conductor: int = 1) -> "CycNum":
        q = Fraction(q)
        num = [0] * conductor
        num[0] = q.numerator
        return cls._raw(conductor, tuple(num), q.denominator)

    @classmethod
    def coerce(cls, x: "CycNum | Scalar") -> "CycNum":
        if isinstance(x, CycNum):
            return x
        if isinstance(x, (int, Rational)):
            return cls.rational(Fraction(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to CycNum")

    # accessors ------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Canonical coefficient vector (length = conductor)."""
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return self._den == 1 and not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # conductor handling ---------------------------------------------------

    def promote(self, N: int) -> "CycNum":
        M = self.conductor
        if N == M:
            return self
        if N % M:
            raise ValueError(f"conductor {M} does not divide {N}")
        s = N // M
        v = [0] * N
        for k, c in enumerate(self._num):
            if c:
                v[k * s] = c
        return CycNum._raw(N, kernels.reduce(v, N), self._den)

    def _align(self, other: "CycNum") -> tuple["CycNum", "CycNum"]:
        if self.conductor == other.conductor:
            return self, other
        N = math.lcm(self.conductor, other.conductor)
        return self.promote(N), other.promote(N)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        a, b = self._align(other)
        g = math.gcd(a._den, b._den)
        num = kernels.lincomb(a._num, b._den // g, b._num, a._den // g)
        return CycNum._raw(a.conductor, num, a._den // g * b._den)

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.conductor, tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return CycNum.coerce(other) - self

    def _scale(self, q: Fraction) -> "CycNum":
        if q == 1:
            return self
        return CycNum._raw(
            self.conductor,
            tuple(c * q.numerator for c in self._num),
            self._den * q.denominator,
        )

    def __mul__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_rational():
            return self._scale(other.to_fraction())
        if self.is_rational():
            return other._scale(self.to_fraction())
        a, b = self._align(other)
        num = kernels.mul(a._num, b._num, a.conductor)
        return CycNum._raw(a.conductor, num, a._den * b._den)

    __rmul__ = __mul__

    def inv(self) -> "CycNum":
        """Multiplicative inverse via the norm down the Galois group."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_M)")
        if self.is_rational():
            return CycNum.rational(1 / self.to_fraction(), self.conductor)
        y = self
        cof = CycNum.rational(1, self.conductor)
        for g, order in _galois_generators(self.conductor):
            c = CycNum.rational(1, self.conductor)
            gi = g
            for _ in range(order - 1):
                c = c * y.galois(gi)
                gi = gi * g % self.conductor
            cof = cof * c
            y = y * c
        norm = y.to_fraction()
        return cof._scale(1 / norm)

    def __truediv__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_rational():
            q = other.to_fraction()
            if q == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_M)")
            return self._scale(1 / q)
        return self * other.inv()

    def __rtruediv__(self, other):
        return CycNum.coerce(other) / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        out = CycNum.rational(1, self.conductor)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def galois(self, a: int) -> "CycNum":
        """Apply the automorphism zeta_M -> zeta_M^a (gcd(a, M) = 1)."""
        M = self.conductor
        if math.gcd(a, M) != 1:
            raise ValueError(f"{a} is not a unit mod {M}")
        if a % M == 1 or self.is_rational():
            return self
        return CycNum._raw(M, kernels.permute_reduce(self._num, a, M), self._den)

    def conj(self) -> "CycNum":
        return self.galois(-1)

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._align(other)
        return a._den == b._den and a._num == b._num

    def __hash__(self):
        if self._hash is None:
            w = _trace_weights(self.conductor)
            t = sum((w[k] * c for k, c in enumerate(self._num) if c), Fraction(0))
            self._hash = hash(t / self._den)
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # text -----------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical encoding ``[M] c_0 + c_1*z + ...`` with z = zeta_M."""
        terms = []
        for k, c in enumerate(self._num):
            if not c:
                continue
            q = Fraction(c, self._den)
            mag = abs(q)
            if k == 0:
                body = str(mag)
            else:
                mono = "z" if k == 1 else f"z^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append(("-" if q < 0 else "+", body))
        if not terms:
            return f"[{self.conductor}] 0"
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return f"[{self.conductor}] {s}"

    @classmethod
    def from_text(cls, text: str) -> "CycNum":
        m = re.fullmatch(r"\s*\[(\d+)\]\s*(.*?)\s*", text)
        if not m:
            raise ValueError(f"bad cyclotomic literal: {text!r}")
        M = int(m.group(1))
        body = m.group(2).replace(" ", "")
        v = [Fraction(0)] * M
        if body in ("", "0"):
            return cls(M, v)
        for sign, coef, mono, exp in re.findall(
            r"([+-]?)(?:(\d+(?:/\d+)?)\*?)?(z(?:\^(\d+))?)?", body
        ):
            if not coef and not mono:
                continue
            q = Fraction(coef) if coef else Fraction(1)
            k = (int(exp) if exp else 1) if mono else 0
            v[k % M] += -q if sign == "-" else q
        return cls(M, v)

    def __repr__(self):
        return f"CycNum({self.to_text()!r})"

    def __str__(self):
        return self.to_text()


def root_of_unity(M: int, k: int = 1) -> CycNum:
    """zeta_M^k, stored at the smallest conductor M/gcd(k, M)."""
    if M < 1:
        raise ValueError("root_of_unity needs M >= 1")
    k %= M
    g = math.gcd(k, M)
    N, e = M // g, k // g
    v = [0] * N
    v[e] = 1
    return CycNum._raw(N, kernels.reduce(v, N), 1)


def imag_unit() -> CycNum:
    return root_of_unity(4, 1)


@dataclass(frozen=True)
class ComplexInterval:
    """A rectangle [re_lo, re_hi] x [im_lo, im_hi] of binary rationals."""

    re_lo: mpf
    re_hi: mpf
    im_lo: mpf
    im_hi: mpf

    def contains(self, z: complex) -> bool:
        return self.re_lo <= z.real <= self.re_hi and self.im_lo <= z.imag <= self.im_hi

    @property
    def width(self) -> mpf:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    @property
    def center(self) -> complex:
        return complex(
            float((self.re_lo + self.re_hi) / 2), float((self.im_lo + self.im_hi) / 2)
        )


def eval_complex(x: CycNum, precision: int = 53) -> ComplexInterval:
    """Certified enclosure of the image of x under zeta_M -> exp(2 pi i/M)."""
    if precision < 32:
        raise ValueError("precision must be at least 32 bits")
    if x.is_zero():
        z = mpf(0)
        return ComplexInterval(z, z, z, z)
    M = x.conductor
    # private context: interval precision is per-context state
    ctx = MPIntervalContext()
    ctx.prec = precision + 10
    re_part = ctx.mpf(0)
    im_part = ctx.mpf(0)
    for k, c in enumerate(x._num):
        if not c:
            continue
        if k == 0:
            re_part += c
            continue
        angle = 2 * ctx.pi * k / M
        re_part += c * ctx.cos(angle)
        im_part += c * ctx.sin(angle)
    re_part /= x._den
    im_part /= x._den
    # endpoints carry ctx.prec bits, so converting at that precision is exact
    with mp.workprec(ctx.prec):
        ends = [mpf(e) for e in (*re_part._mpi_, *im_part._mpi_)]
    return ComplexInterval(*ends)


def real_sign(x: CycNum) -> int:
    """Exact sign of a real element of Q(zeta_M).

    Zero is decided symbolically from the canonical form; otherwise the value
    is enclosed numerically, refining until the enclosure excludes zero.
    """
    if x != x.conj():
        raise ValueError(f"real_sign needs a real element, got {x}")
    if x.is_zero():
        return 0
    if x.is_rational():
        return 1 if x._num[0] > 0 else -1
    M = x.conductor
    # double precision pass with a generous error budget
    try:
        cos, _ = _float_table(M)
        total = 0.0
        mass = 0.0
        for k, c in enumerate(x._num):
            if c:
                cf = float(c)
                total += cf * cos[k]
                mass += abs(cf)
        bound = (M + 16) * 1e-15 * mass
        if abs(total) > bound:
            return 1 if total > 0 else -1
    except OverflowError:
        pass
    prec = 64
    while True:
        box = eval_complex(x, prec)
        if box.re_lo > 0:
            return 1
        if box.re_hi < 0:
            return -1
        prec *= 2
