"""Combinatorics of the Abelian cover of the sphere branched over n points.

The deck group is Z/d_1 x ... x Z/d_m; points of colour block j have local
monodromy the j-th generator.  A character of the deck group is recorded by
exponents k_j with rho_j = zeta_{d_j}^{-k_j}.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .braid import MixedBraidSpec
from .cyclotomic import CycNum, root_of_unity


@dataclass(frozen=True)
class CoverSpec:
    spec: MixedBraidSpec
    degrees: tuple[int, ...]

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        if len(degrees) != self.spec.m:
            raise ValueError(f"need {self.spec.m} degrees, got {len(degrees)}")
        if any(d < 2 for d in degrees):
            raise ValueError(f"degrees must be >= 2: {degrees}")
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def of(cls, parts, degrees) -> "CoverSpec":
        return cls(MixedBraidSpec(tuple(parts)), tuple(degrees))

    @property
    def parts(self) -> tuple[int, ...]:
        return self.spec.parts

    @property
    def group_order(self) -> int:
        return math.prod(self.degrees)

    @property
    def conductor(self) -> int:
        """Smallest M such that every character value lies in Q(zeta_M)."""
        return math.lcm(*self.degrees)


@dataclass(frozen=True)
class Character:
    """Character of the deck group: rho_j = zeta_{d_j}^{-k_j}."""

    cover: CoverSpec
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(k) for k in self.exps)
        if len(exps) != len(self.cover.degrees):
            raise ValueError("one exponent per colour block is required")
        for k, d in zip(exps, self.cover.degrees):
            if not 0 <= k < d:
                raise ValueError(f"exponent {k} outside 0..{d - 1}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def from_rho(cls, cover: CoverSpec, rho_exps) -> "Character":
        """Build from exponents a_j with rho_j = zeta_{d_j}^{a_j}."""
        return cls(cover, tuple((-a) % d for a, d in zip(rho_exps, cover.degrees)))

    @property
    def rho(self) -> tuple[CycNum, ...]:
        return tuple(root_of_unity(d, -k) for k, d in zip(self.exps, self.cover.degrees))

    def rho_angle(self, j: int) -> Fraction:
        """rho_j = exp(2 pi i * angle), angle in [0, 1)."""
        k, d = self.exps[j - 1], self.cover.degrees[j - 1]
        return Fraction(-k, d) % 1

    @property
    def primed(self) -> bool:
        return all(self.exps)

    @property
    def nondegenerate(self) -> bool:
        """rho_j rho_k != 1 for all j, k, including j = k."""
        m = len(self.exps)
        return all(
            (self.rho_angle(j) + self.rho_angle(k)) % 1 != 0
            for j in range(1, m + 1)
            for k in range(j, m + 1)
        )

    @property
    def admissible(self) -> bool:
        """Relaxation of ``nondegenerate`` that also accepts rho_j = -1 on
        singleton blocks.

        A block of size one contributes no diagonal Gram entry with
        denominator 1 + rho_j, so rho_j^2 = 1 is harmless there; the
        remaining conditions rho_j rho_k != 1 (j != k) and rho_j != 1 stay.
        """
        m = len(self.exps)
        parts = self.cover.parts
        for j in range(1, m + 1):
            a = self.rho_angle(j)
            if a == 0:
                return False
            if (2 * a) % 1 == 0 and parts[j - 1] > 1:
                return False
            for k in range(j + 1, m + 1):
                if (a + self.rho_angle(k)) % 1 == 0:
                    return False
        return True

    def total_angle(self) -> Fraction:
        """Angle of prod_j rho_j^{n_j} (the monodromy around infinity)."""
        return sum(
            (n * self.rho_angle(j) for j, n in enumerate(self.cover.parts, start=1)),
            Fraction(0),
        ) % 1

    def __str__(self):
        return "(" + ",".join(str(k) for k in self.exps) + ")"


def infinity_order(c: CoverSpec) -> tuple[int, int]:
    """(f, e): order of the monodromy at infinity and the number of points over it."""
    f = math.lcm(*(d // math.gcd(d, n) for d, n in zip(c.degrees, c.parts)))
    return f, c.group_order // f


def genus(c: CoverSpec) -> int:
    """Genus of the cover via Riemann-Hurwitz."""
    G = c.group_order
    _, e = infinity_order(c)
    n = c.spec.n
    ram = sum((Fraction(nj, dj) for nj, dj in zip(c.parts, c.degrees)), Fraction(0))
    g = Fraction(G * (n - 1), 1) - G * ram - e
    g = g / 2 + 1
    if g.denominator != 1 or g < 0:
        raise ArithmeticError(f"Riemann-Hurwitz gave {g} for {c}")
    return int(g)


def eigenspace_dim(c: CoverSpec, rho: Character) -> int:
    """Dimension of the rho-eigenspace of the first cohomology of the cover."""
    if not any(rho.exps):
        return 0
    n = c.spec.n
    trivial_blocks = sum(nj for nj, k in zip(c.parts, rho.exps) if k == 0)
    at_infinity = 1 if rho.total_angle() == 0 else 0
    return n - 1 - trivial_blocks - at_infinity


def _weight(c: CoverSpec, rho: Character) -> Fraction:
    return sum(
        (Fraction(nj * k, d) for nj, k, d in zip(c.parts, rho.exps, c.degrees)),
        Fraction(0),
    )


def chevalley_weil_signature(c: CoverSpec, rho: Character) -> tuple[int, int]:
    """Hodge numbers (r, s) of the rho-eigenspace, for primed rho."""
    if not rho.primed:
        raise ValueError(f"character {rho} has a trivial component")
    w = _weight(c, rho)
    r = math.ceil(w - 1)
    s = math.ceil(c.spec.n - 1 - w)
    return r, s


def np_term(nu: int, j: int) -> Fraction:
    """Contribution 1 - j/nu of a local eigenvalue zeta_nu^j (zero for j = 0)."""
    if not 0 <= j < nu:
        raise ValueError(f"need 0 <= j < nu, got j={j}, nu={nu}")
    return Fraction(0) if j == 0 else 1 - Fraction(j, nu)


def all_characters(c: CoverSpec) -> Iterator[Character]:
    for exps in itertools.product(*(range(d) for d in c.degrees)):
        yield Character(c, exps)


def primed_characters(c: CoverSpec) -> Iterator[Character]:
    """The prod_j (d_j - 1) characters with every rho_j != 1, in lexicographic order."""
    for exps in itertools.product(*(range(1, d) for d in c.degrees)):
        yield Character(c, exps)
