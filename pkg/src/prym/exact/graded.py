"""Weighted-homogeneous polynomials in four variables of weights 2, 6, 8, 12."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .linalg import InconsistentSystem, SingularSystem, solve

WEIGHTS = (2, 6, 8, 12)


class NeedsMoreSamples(ValueError):
    pass


class NotAPolynomial(ValueError):
    pass


@lru_cache(maxsize=None)
def graded_monomials(degree: int, weights: tuple[int, ...] = WEIGHTS) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of the given weighted degree, in a fixed order."""
    out = []

    def rec(i: int, left: int, acc: list[int]):
        if i == len(weights) - 1:
            if left % weights[i] == 0:
                out.append(tuple(acc + [left // weights[i]]))
            return
        for e in range(left // weights[i], -1, -1):
            rec(i + 1, left - e * weights[i], acc + [e])

    rec(0, degree, [])
    return tuple(out)


@dataclass(frozen=True)
class GradedPoly4:
    degree: int
    coeffs: Mapping[tuple[int, int, int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mono, c in self.coeffs.items():
            if sum(w * e for w, e in zip(WEIGHTS, mono)) != self.degree:
                raise ValueError(f"monomial {mono} does not have weighted degree {self.degree}")
            c = Fraction(c)
            if c:
                clean[tuple(mono)] = c
        object.__setattr__(self, "coeffs", clean)

    def __call__(self, c: Sequence) -> Fraction:
        total = Fraction(0)
        for mono, coef in self.coeffs.items():
            term = coef
            for x, e in zip(c, mono):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total

    def coefficient(self, mono: tuple[int, ...]) -> Fraction:
        return self.coeffs.get(tuple(mono), Fraction(0))

    def __repr__(self):
        if not self.coeffs:
            return f"GradedPoly4(deg={self.degree}, 0)"
        names = ("c1", "c2", "c3", "c4")
        terms = []
        for mono in graded_monomials(self.degree):
            if mono in self.coeffs:
                vs = "*".join(n + (f"^{e}" if e > 1 else "") for n, e in zip(names, mono) if e)
                terms.append(f"{self.coeffs[mono]}*{vs}")
        return " + ".join(terms)


def interpolate_graded(samples: Sequence[tuple[Sequence, object]], degree: int) -> GradedPoly4:
    """Recover the unique weighted-homogeneous polynomial through the samples."""
    monos = graded_monomials(degree)
    if len(samples) < len(monos):
        raise NeedsMoreSamples(f"need at least {len(monos)} samples for degree {degree}")
    rows = []
    rhs = []
    for point, value in samples:
        pt = [Fraction(x) for x in point]
        row = []
        for mono in monos:
            term = Fraction(1)
            for x, e in zip(pt, mono):
                if e:
                    term *= x**e
            row.append(term)
        rows.append(row)
        rhs.append(Fraction(value))
    try:
        sol = solve(rows, rhs)
    except SingularSystem as exc:
        raise NeedsMoreSamples(str(exc)) from exc
    except InconsistentSystem as exc:
        raise NotAPolynomial(f"samples do not fit a degree-{degree} graded polynomial") from exc
    return GradedPoly4(degree, dict(zip(monos, sol)))
