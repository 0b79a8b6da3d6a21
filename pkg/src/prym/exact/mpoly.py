"""Sparse multivariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        clean = {}
        for mono, c in (terms or {}).items():
            if len(mono) != nvars:
                raise ValueError("monomial length does not match variable count")
            c = Fraction(c)
            if c:
                clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def var(cls, nvars: int, i: int) -> "MPoly":
        mono = [0] * nvars
        mono[i] = 1
        return cls(nvars, {tuple(mono): 1})

    @classmethod
    def const(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variables(cls, nvars: int) -> list["MPoly"]:
        return [cls.var(nvars, i) for i in range(nvars)]

    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable counts differ")
            return other
        return MPoly.const(self.nvars, other)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (MPoly, int, Fraction)):
            o = self._lift(other)
            return self.terms == o.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            vs = "*".join(f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(mono) if e)
            parts.append(f"{c}" + (f"*{vs}" if vs else ""))
        return " + ".join(parts)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = MPoly.const(self.nvars, 1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, c):
        c = Fraction(c)
        return MPoly(self.nvars, {m: v / c for m, v in self.terms.items()})

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        return {sum(w * e for w, e in zip(weights, m)) for m in self.terms}

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        total = 0
        for mono, c in self.terms.items():
            term = c
            for x, e in zip(point, mono):
                if e:
                    term = term * x**e
            total = total + term
        return total

    def substitute(self, images: Sequence["MPoly"]) -> "MPoly":
        """Compose with polynomial images for each variable (all in a common ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = images[0].nvars
        cache: dict[tuple[int, int], MPoly] = {}

        def power(i: int, e: int) -> MPoly:
            if (i, e) not in cache:
                cache[(i, e)] = images[i] ** e
            return cache[(i, e)]

        out = MPoly(nv)
        for mono, c in self.terms.items():
            term = MPoly.const(nv, c)
            for i, e in enumerate(mono):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def coefficient_in(self, var: int) -> dict[int, "MPoly"]:
        """Split by the exponent of one variable."""
        out: dict[int, dict] = {}
        for mono, c in self.terms.items():
            e = mono[var]
            rest = mono[:var] + (0,) + mono[var + 1 :]
            out.setdefault(e, {})[rest] = c
        return {e: MPoly(self.nvars, t) for e, t in out.items()}

    def variables_used(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}


def mdet(m: Sequence[Sequence[MPoly]]) -> MPoly:
    """Determinant by cofactor expansion (intended for small sizes)."""
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = MPoly(m[0][0].nvars)
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * mdet(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def from_terms(nvars: int, items: Iterable[tuple[Monomial, object]]) -> MPoly:
    acc: dict[Monomial, Fraction] = {}
    for mono, c in items:
        acc[mono] = acc.get(mono, 0) + Fraction(c)
    return MPoly(nvars, acc)
