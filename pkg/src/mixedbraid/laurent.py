"""Sparse multivariate Laurent polynomials with integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

from .cyclotomic import CycNum

Exponent = tuple[int, ...]


class LaurentPoly:
    """An element of Z[t_1^{+-1}, ..., t_m^{+-1}]; immutable."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has the wrong length for {nvars} variables")
            acc[e] = acc.get(e, 0) + int(c)
        self.nvars = nvars
        self.terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def const(cls, nvars: int, c: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, j: int, power: int = 1) -> "LaurentPoly":
        """t_j^power (j is 1-based)."""
        e = [0] * nvars
        e[j - 1] = power
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def _wrap(cls, nvars: int, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("Laurent polynomials over different variable sets")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.nvars, other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._wrap(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly._wrap(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentPoly._wrap(self.nvars, {tuple(-x * -k for x in e): c**-k})
        out = LaurentPoly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def divide_one_minus(self, j: int) -> "LaurentPoly":
        """Exact quotient by (1 - t_j); raises ArithmeticError if not divisible.

        Viewing the polynomial as sum_k a_k t_j^k with Laurent coefficients
        a_k in the other variables, q = p / (1 - t_j) has q_k = sum_{l <= k} a_l,
        and divisibility means the running sum ends at zero.
        """
        idx = j - 1
        slices: dict[Exponent, dict[int, int]] = {}
        for e, c in self.terms.items():
            rest = e[:idx] + e[idx + 1 :]
            slices.setdefault(rest, {})[e[idx]] = c
        out: dict[Exponent, int] = {}
        for rest, coeffs in slices.items():
            lo, hi = min(coeffs), max(coeffs)
            running = 0
            for k in range(lo, hi + 1):
                running += coeffs.get(k, 0)
                if running:
                    out[rest[:idx] + (k,) + rest[idx:]] = running
            if running:
                raise ArithmeticError(f"{self} is not divisible by 1 - t{j}")
        return LaurentPoly._wrap(self.nvars, out)

    def evaluate(self, values: Sequence[CycNum | int]) -> CycNum:
        if len(values) != self.nvars:
            raise ValueError("one value per variable is required")
        vals = [CycNum.coerce(v) for v in values]
        powers: dict[tuple[int, int], CycNum] = {}

        def pw(j: int, k: int) -> CycNum:
            key = (j, k)
            if key not in powers:
                powers[key] = vals[j] ** k
            return powers[key]

        acc = CycNum.rational(0)
        for e, c in self.terms.items():
            term = CycNum.rational(c)
            for j, k in enumerate(e):
                if k:
                    term = term * pw(j, k)
            acc = acc + term
        return acc

    def specialize(self) -> dict[int, int]:
        """Collapse every t_j to a single variable t; returns {power: coeff}."""
        out: dict[int, int] = {}
        for e, c in self.terms.items():
            k = sum(e)
            out[k] = out.get(k, 0) + c
        return {k: c for k, c in out.items() if c}

    def at_one(self) -> int:
        return sum(self.terms.values())

    # text ------------------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda x: (sum(x), x)):
            c = self.terms[e]
            mono = "*".join(
                f"t{j}" if k == 1 else f"t{j}^{k}" for j, k in enumerate(e, start=1) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    _FACTOR = re.compile(r"t(\d+)(?:\^(-?\d+))?")

    @classmethod
    def from_text(cls, text: str, nvars: int) -> "LaurentPoly":
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        # split on + or - that start a new term (not the sign of an exponent)
        chunks = re.split(r"(?<!\^)(?=[+-])", s)
        terms: list[tuple[Exponent, int]] = []
        for ch in chunks:
            if not ch:
                continue
            sign = -1 if ch[0] == "-" else 1
            body = ch[1:] if ch[0] in "+-" else ch
            coef = 1
            e = [0] * nvars
            if not body:
                raise ValueError(f"bad term in {text!r}")
            for factor in body.split("*"):
                if factor.isdigit():
                    coef *= int(factor)
                    continue
                m = cls._FACTOR.fullmatch(factor)
                if not m:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
                j = int(m.group(1))
                if not 1 <= j <= nvars:
                    raise ValueError(f"variable t{j} outside t1..t{nvars}")
                e[j - 1] += int(m.group(2)) if m.group(2) else 1
            terms.append((tuple(e), sign * coef))
        return cls(nvars, terms)

    def __repr__(self):
        return f"LaurentPoly({self.nvars}, {self.to_text()!r})"

    __str__ = to_text
