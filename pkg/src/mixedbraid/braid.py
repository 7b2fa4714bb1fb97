"""Braid words and the mixed braid group B_{n,Lambda}.

Points 1..n are split into m consecutive colour blocks of sizes
``parts = (n_1, ..., n_m)``; block j is {h_{j-1}+1, ..., h_j}.  The mixed
braid group is generated by the half twists ``Sigma(i)`` with i not a block
boundary and the pure twists ``Twist(j, k)`` = A_{j,k}.

A :class:`BraidWord` is either *mixed* (letters are mixed generators) or
*raw* (any ``Sigma(i)`` allowed, no ``Twist`` letters); raw words feed the
coloured Burau evaluator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Union


@dataclass(frozen=True)
class MixedBraidSpec:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"parts must be a non-empty tuple of positive ints: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @cached_property
    def h(self) -> tuple[int, ...]:
        """Block boundaries (h_0, ..., h_m) with h_0 = 0 and h_m = n."""
        out = [0]
        for p in self.parts:
            out.append(out[-1] + p)
        return tuple(out)

    def color_of(self, i: int) -> int:
        """Block index j (1-based) with h_{j-1} < i <= h_j."""
        if not 1 <= i <= self.n:
            raise ValueError(f"point {i} out of range 1..{self.n}")
        for j in range(1, self.m + 1):
            if i <= self.h[j]:
                return j
        raise AssertionError("unreachable")

    def colors(self) -> tuple[int, ...]:
        return tuple(self.color_of(i) for i in range(1, self.n + 1))

    def block(self, j: int) -> range:
        return range(self.h[j - 1] + 1, self.h[j] + 1)

    def is_boundary(self, i: int) -> bool:
        """True when i = h_j for some 1 <= j < m (sigma_i swaps colours)."""
        return i in self.h[1:-1]

    def mixed_generators(self) -> list["Generator"]:
        gens: list[Generator] = [
            Sigma(i) for i in range(1, self.n) if not self.is_boundary(i)
        ]
        gens += [Twist(j, k) for j in range(1, self.m) for k in range(j + 1, self.m + 1)]
        return gens


@dataclass(frozen=True, order=True)
class Sigma:
    i: int

    def __str__(self):
        return f"s{self.i}"


@dataclass(frozen=True, order=True)
class Twist:
    """The pure braid A_{j,k}, a full twist of p_{h_j} around p_{h_{k-1}+1}."""

    j: int
    k: int

    def __str__(self):
        return f"A{self.j},{self.k}"


Generator = Union[Sigma, Twist]
Letter = tuple[Generator, int]


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[Letter, ...] = ()
    raw: bool = False

    def __post_init__(self):
        letters = tuple((g, int(e)) for g, e in self.letters)
        for g, e in letters:
            if e not in (1, -1):
                raise ValueError(f"exponent must be +-1, got {e}")
            if self.raw and isinstance(g, Twist):
                raise ValueError("raw B_n words cannot contain A_{j,k} letters")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters, self.raw and other.raw)

    def __pow__(self, e: int) -> "BraidWord":
        if e < 0:
            return self.inverse() ** (-e)
        return BraidWord(self.letters * e, self.raw)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((g, -e) for g, e in reversed(self.letters)), self.raw)

    def free_reduce(self) -> "BraidWord":
        out: list[Letter] = []
        for g, e in self.letters:
            if out and out[-1][0] == g and out[-1][1] == -e:
                out.pop()
            else:
                out.append((g, e))
        return BraidWord(tuple(out), self.raw)

    def as_raw(self, spec: MixedBraidSpec) -> "BraidWord":
        """Expand every A_{j,k} into sigma letters."""
        out: list[Letter] = []
        for g, e in self.letters:
            if isinstance(g, Twist):
                w = expand_A(g.j, g.k, spec)
                out.extend((w if e == 1 else w.inverse()).letters)
            else:
                out.append((g, e))
        return BraidWord(tuple(out), raw=True)

    def validate(self, spec: MixedBraidSpec) -> None:
        for g, _ in self.letters:
            if isinstance(g, Sigma):
                if not 1 <= g.i < spec.n:
                    raise ValueError(f"{g} out of range for n={spec.n}")
                if not self.raw and spec.is_boundary(g.i):
                    raise ValueError(f"{g} is not a mixed generator for parts {spec.parts}")
            else:
                if not 1 <= g.j < g.k <= spec.m:
                    raise ValueError(f"{g} out of range for m={spec.m}")

    def __str__(self):
        return " ".join(str(g) if e == 1 else f"{g}^-1" for g, e in self.letters)


def word(*letters: Generator | Letter, raw: bool = False) -> BraidWord:
    """Build a word from generators (exponent +1) or (generator, exp) pairs."""
    out = []
    for x in letters:
        out.append(x if isinstance(x, tuple) else (x, 1))
    return BraidWord(tuple(out), raw)


_TOKEN = re.compile(r"(?:s(\d+)|A(\d+),(\d+))(?:\^(-?1))?")


def parse_word(text: str, raw: bool = False) -> BraidWord:
    """Parse whitespace separated tokens such as ``s3 s3^-1 A1,2 A1,2^-1``."""
    letters = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise ValueError(f"bad braid token {tok!r}")
        e = int(m.group(4)) if m.group(4) else 1
        g: Generator = Sigma(int(m.group(1))) if m.group(1) else Twist(int(m.group(2)), int(m.group(3)))
        letters.append((g, e))
    return BraidWord(tuple(letters), raw)


# --- permutations ---------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """A bijection of 1..n; ``images[i-1]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        im = list(range(1, n + 1))
        im[a - 1], im[b - 1] = b, a
        return cls(tuple(im))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        return Permutation(tuple(self(other(i)) for i in range(1, len(self.images) + 1)))

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.images))


def underlying_permutation(w: BraidWord, spec: MixedBraidSpec) -> Permutation:
    """Phi_n: letters sigma_i map to (i, i+1); A_{j,k} letters are pure.

    The word is read left to right as a product, so Phi(uv) = Phi(u)Phi(v).
    """
    perm = Permutation.identity(spec.n)
    for g, _ in w.letters:
        if isinstance(g, Sigma):
            perm = perm * Permutation.transposition(spec.n, g.i, g.i + 1)
    return perm


def is_mixed(w: BraidWord, spec: MixedBraidSpec) -> bool:
    perm = underlying_permutation(w, spec)
    return all(spec.color_of(perm(i)) == spec.color_of(i) for i in range(1, spec.n + 1))


def expand_A(j: int, k: int, spec: MixedBraidSpec) -> BraidWord:
    """A_{j,k} = C sigma_{h_j}^2 C^-1 with C = sigma_{h_{k-1}} ... sigma_{h_j+1}."""
    if not 1 <= j < k <= spec.m:
        raise ValueError(f"need 1 <= j < k <= m, got ({j}, {k})")
    h = spec.h
    conj = tuple((Sigma(i), 1) for i in range(h[k - 1], h[j], -1))
    core = ((Sigma(h[j]), 1), (Sigma(h[j]), 1))
    inv = tuple((g, -e) for g, e in reversed(conj))
    return BraidWord(conj + core + inv, raw=True)


def tau_word(spec: MixedBraidSpec) -> BraidWord:
    """The full twist (sigma_1 ... sigma_{n-1})^n as a raw word."""
    n = spec.n
    cycle = tuple((Sigma(i), 1) for i in range(1, n))
    return BraidWord(cycle * n, raw=True)


# --- relations ------------------------------------------------------------


def relations_m2(spec: MixedBraidSpec) -> list[tuple[BraidWord, BraidWord]]:
    """Every instance of the two-block presentation of B_{n,Lambda}."""
    if spec.m != 2:
        raise ValueError("relations_m2 needs exactly two blocks")
    return _two_block_relations(spec, 1)


def _two_block_relations(spec: MixedBraidSpec, j: int) -> list[tuple[BraidWord, BraidWord]]:
    """m = 2 relations for the consecutive block pair (j, j+1)."""
    lo, hb, hi = spec.h[j - 1], spec.h[j], spec.h[j + 1]
    sig = [i for i in range(lo + 1, hi) if i != hb]
    A = Twist(j, j + 1)
    S = Sigma
    rels: list[tuple[BraidWord, BraidWord]] = []
    for a in sig:
        for b in sig:
            if a < b - 1:
                rels.append((word(S(a), S(b)), word(S(b), S(a))))
            if b == a + 1:
                rels.append((word(S(a), S(b), S(a)), word(S(b), S(a), S(b))))
    for i in sig:
        if i not in (hb - 1, hb + 1):
            rels.append((word(S(i), A), word(A, S(i))))
    for i in (hb - 1, hb + 1):
        if i in sig:
            rels.append((word(S(i), A, S(i), A), word(A, S(i), A, S(i))))
    if hb - 1 in sig and hb + 1 in sig:
        left = word(S(hb - 1), A, (S(hb - 1), -1))
        right = word(S(hb + 1), A, (S(hb + 1), -1))
        rels.append((left * right, right * left))
    return rels


def _support(g: Generator, spec: MixedBraidSpec) -> set[int]:
    if isinstance(g, Sigma):
        return {g.i, g.i + 1}
    return set(range(spec.h[g.j], spec.h[g.k - 1] + 2))


def relations_general(spec: MixedBraidSpec) -> list[tuple[BraidWord, BraidWord]]:
    """Relation instances checkable for any m.

    The two-block presentation applied to each consecutive pair of blocks,
    plus commutation of generators acting on disjoint sets of strands.  This
    is a subset of the full presentation; it is not claimed to be complete.
    """
    rels: list[tuple[BraidWord, BraidWord]] = []
    for j in range(1, spec.m):
        for pair in _two_block_relations(spec, j):
            if pair not in rels:
                rels.append(pair)
    gens = spec.mixed_generators()
    for x in range(len(gens)):
        for y in range(x + 1, len(gens)):
            a, b = gens[x], gens[y]
            if _support(a, spec).isdisjoint(_support(b, spec)):
                pair = (word(a, b), word(b, a))
                if pair not in rels:
                    rels.append(pair)
    return rels
