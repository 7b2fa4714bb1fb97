"""Deterministic enumeration of (partition, degrees, character) instances.

The full families grow like 7^n in the partition and degree bounds, so a
sweep is exhaustive only when its size fits the budget.  Otherwise the
partitions are visited from the smallest family up: each one is enumerated
completely if it fits its share of the remaining budget, and sampled with a
seeded generator if not.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .cover import Character, CoverSpec

MAX_DRAWS_PER_KEEP = 50


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Ordered partitions of n into positive parts, in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


@dataclass(frozen=True)
class SweepPlan:
    min_n: int
    max_n: int
    max_d: int
    budget: int
    seed: int = 0
    primed_only: bool = True
    blocks: int | None = None  # restrict to this many colour blocks

    def partitions(self) -> list[tuple[int, ...]]:
        return [
            p
            for n in range(self.min_n, self.max_n + 1)
            for p in compositions(n)
            if self.blocks is None or len(p) == self.blocks
        ]

    def _per_block(self) -> int:
        """Number of (degree, exponent) choices for a single block."""
        ds = range(2, self.max_d + 1)
        return sum(d - 1 if self.primed_only else d for d in ds)

    def size(self) -> int:
        per = self._per_block()
        return sum(per ** len(p) for p in self.partitions())

    def exhaustive(self) -> bool:
        return self.size() <= self.budget

    def _exponents(self, d: int) -> range:
        return range(1, d) if self.primed_only else range(d)

    def _all(self, parts) -> Iterator[Character]:
        for ds in itertools.product(range(2, self.max_d + 1), repeat=len(parts)):
            c = CoverSpec.of(parts, ds)
            for exps in itertools.product(*(self._exponents(d) for d in ds)):
                yield Character(c, exps)

    def instances(self, keep: Callable[[Character], bool] | None = None) -> Iterator[Character]:
        """Characters of the plan, restricted to ``keep`` when given.

        In sampled strata the share counts kept characters, so a selective
        predicate does not shrink the sweep; sampling gives up on a stratum
        after ``MAX_DRAWS_PER_KEEP`` draws per requested character.
        """
        keep = keep or (lambda rho: True)
        parts_list = self.partitions()
        if self.exhaustive():
            for parts in parts_list:
                yield from filter(keep, self._all(parts))
            return
        rng = random.Random(self.seed)
        per = self._per_block()
        # smallest strata first, so leftover budget flows to the larger ones
        order = sorted(parts_list, key=lambda p: (per ** len(p), p))
        remaining = self.budget
        for idx, parts in enumerate(order):
            share = max(1, remaining // (len(order) - idx))
            total = per ** len(parts)
            if total <= share:
                remaining -= total
                yield from filter(keep, self._all(parts))
                continue
            remaining -= share
            seen: set = set()
            kept = 0
            for _ in range(share * MAX_DRAWS_PER_KEEP):
                if kept == share:
                    break
                ds = tuple(rng.randint(2, self.max_d) for _ in parts)
                exps = tuple(rng.choice(self._exponents(d)) for d in ds)
                if (ds, exps) in seen:
                    continue
                seen.add((ds, exps))
                rho = Character(CoverSpec.of(parts, ds), exps)
                if keep(rho):
                    kept += 1
                    yield rho

    def covers(self) -> Iterator[CoverSpec]:
        """Cover specs of the plan; the budget counts characters of the deck group.

        Every character of a cover is an instance, so a cover with degrees
        d_1..d_m costs d_1 * ... * d_m.
        """
        rng = random.Random(self.seed)
        ds = range(2, self.max_d + 1)
        per = sum(ds)
        order = sorted(self.partitions(), key=lambda p: (per ** len(p), p))
        remaining = self.budget
        for idx, parts in enumerate(order):
            share = max(1, remaining // (len(order) - idx))
            if per ** len(parts) <= share:
                remaining -= per ** len(parts)
                for degrees in itertools.product(ds, repeat=len(parts)):
                    yield CoverSpec.of(parts, degrees)
                continue
            spent = 0
            seen: set = set()
            for _ in range(share * MAX_DRAWS_PER_KEEP):
                degrees = tuple(rng.randint(2, self.max_d) for _ in parts)
                cost = math.prod(degrees)
                if spent + cost > share:
                    break
                if degrees in seen:
                    continue
                seen.add(degrees)
                spent += cost
                yield CoverSpec.of(parts, degrees)
            remaining -= spent


def describe(plan: SweepPlan) -> str:
    mode = "exhaustive" if plan.exhaustive() else f"sampled (seed {plan.seed})"
    return (
        f"n in [{plan.min_n}, {plan.max_n}], d_j <= {plan.max_d}: "
        f"{plan.size()} instances, {mode}, budget {plan.budget}"
    )

