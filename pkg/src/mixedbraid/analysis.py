"""Whether the image of the monodromy representation is known to be infinite."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .cover import Character, CoverSpec

# (block size, degree) pairs for which the infinitude criterion is not available
EXCEPTIONAL_PAIRS: frozenset[tuple[int, int]] = frozenset(
    {(3, 3), (3, 4), (3, 6), (3, 10), (4, 4), (4, 6), (5, 6), (6, 6)}
)


class Verdict(enum.Enum):
    INFINITE = "Infinite"
    EXCEPTIONAL_PAIR_ONLY = "ExceptionalPairOnly"
    CRITERION_SILENT = "CriterionSilent"


@dataclass(frozen=True)
class ImageVerdict:
    tag: Verdict
    witness: int | None = None  # 1-based block index
    pair: tuple[int, int] | None = None

    def __post_init__(self):
        if self.tag is Verdict.INFINITE and self.witness is None:
            raise ValueError("an Infinite verdict needs a witness block")

    def __str__(self):
        if self.witness is None:
            return self.tag.value
        return f"{self.tag.value} (block {self.witness}, (n, d) = {self.pair})"


def primitive_check(d: int, k: int) -> bool:
    """True iff zeta_d^k is a primitive d-th root of unity."""
    if not 0 <= k < d:
        raise ValueError(f"need 0 <= k < d, got k={k}, d={d}")
    return k != 0 and math.gcd(k, d) == 1


def image_finiteness(c: CoverSpec, rho: Character) -> ImageVerdict:
    qualifying = [
        j
        for j, (nj, d, k) in enumerate(zip(c.parts, c.degrees, rho.exps), start=1)
        if nj >= 3 and primitive_check(d, k)
    ]
    for j in qualifying:
        pair = (c.parts[j - 1], c.degrees[j - 1])
        if pair not in EXCEPTIONAL_PAIRS:
            return ImageVerdict(Verdict.INFINITE, j, pair)
    if qualifying:
        return ImageVerdict(Verdict.EXCEPTIONAL_PAIR_ONLY)
    return ImageVerdict(Verdict.CRITERION_SILENT)
