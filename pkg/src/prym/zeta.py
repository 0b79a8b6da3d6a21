"""Point counts over F_{p^k} and L-polynomials of the genus-3 curve, its elliptic quotient and the Prym factor."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .curves import InvariantPoint, chi, discriminants
from .exact import GF, UPoly, is_prime
from .exact.fields import FieldTables
from .exact.poly import DomainError


@lru_cache(maxsize=32)
def _tables(p: int, k: int) -> FieldTables:
    return GF(p, k).tables()


def _reduce(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise DomainError(f"{x} has a denominator divisible by {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


MIN_PRIME = 5  # curve-side counting only needs 2 and 3 invertible


def _admissible(b: InvariantPoint, p: int) -> None:
    if not is_prime(p) or p < MIN_PRIME:
        raise DomainError(f"p = {p} is not an admissible prime (need a prime >= {MIN_PRIME})")
    for x in b:
        _reduce(x, p)
    delta = discriminants(b)[2]
    if _reduce(delta, p) == 0:
        raise DomainError(f"the curve has bad reduction at {p}")


def is_admissible(b, p: int) -> bool:
    try:
        _admissible(InvariantPoint.of(b), p)
    except DomainError:
        return False
    return True


def _character(t: FieldTables, a: np.ndarray) -> np.ndarray:
    """Quadratic character on F_q, 0 at 0."""
    return np.where(a == 0, 0, np.where(t.sqrt[a] >= 0, 1, -1))


def _ab(b: InvariantPoint, p: int, k: int):
    t = _tables(p, k)
    p2, p6, p8, p12 = (_reduce(x, p) for x in b)
    x = np.arange(p**k, dtype=np.int64)
    A = t.add(t.mul(x, p2), np.full_like(x, p6))
    x3 = t.mul(t.mul(x, x), x)
    R = t.add(t.add(x3, t.mul(x, p8)), np.full_like(x, p12))
    return t, A, R


def _counts(b: InvariantPoint, p: int, k: int) -> tuple[int, int]:
    """(#C, #E) over F_{p^k} on the projective models, via the quadratic y^2 = s, s^2 + A s - R = 0."""
    t, A, R = _ab(b, p, k)
    D = t.add(t.mul(A, A), t.mul(R, 4 % p))
    chiD = _character(t, D)
    affine_e = int(np.sum(1 + chiD))
    sq = np.where(chiD >= 0, t.sqrt[D], 0)
    minusA = t.neg(A)
    s_plus = t.half(t.add(minusA, sq))
    s_minus = t.half(t.sub(minusA, sq))
    ny_plus = 1 + _character(t, s_plus)
    ny_minus = 1 + _character(t, s_minus)
    affine_c = int(np.sum(np.where(chiD == 1, ny_plus + ny_minus, np.where(chiD == 0, ny_plus, 0))))
    return affine_c + 1, affine_e + 1


def count_curve_points(b, p: int, k: int = 1) -> int:
    b = InvariantPoint.of(b)
    _admissible(b, p)
    return _counts(b, p, k)[0]


def count_elliptic_points(b, p: int, k: int = 1) -> int:
    b = InvariantPoint.of(b)
    _admissible(b, p)
    return _counts(b, p, k)[1]


def brute_force_counts(b, p: int, k: int = 1) -> tuple[int, int]:
    """(#C, #E) by scanning every affine (x, y), plus one point at infinity each."""
    b = InvariantPoint.of(b)
    t = _tables(p, k)
    p2, p6, p8, p12 = (_reduce(x, p) for x in b)
    q = p**k
    x = np.repeat(np.arange(q, dtype=np.int64), q)
    y = np.tile(np.arange(q, dtype=np.int64), q)
    A = t.add(t.mul(x, p2), np.full_like(x, p6))
    R = t.add(t.add(t.mul(t.mul(x, x), x), t.mul(x, p8)), np.full_like(x, p12))
    y2 = t.mul(y, y)
    lhs_c = t.add(t.mul(y2, y2), t.mul(A, y2))
    lhs_e = t.add(y2, t.mul(A, y))
    return int(np.sum(lhs_c == R)) + 1, int(np.sum(lhs_e == R)) + 1


@dataclass(frozen=True)
class FrobeniusData:
    p: int
    curve_counts: tuple[int, int, int]
    elliptic_count: int
    l_curve: tuple[int, ...]  # coefficients of T^0..T^6
    l_elliptic: tuple[int, ...]  # T^0..T^2
    l_prym: tuple[int, ...]  # T^0..T^4

    def weil_ok(self) -> bool:
        p = self.p
        for k, n in enumerate(self.curve_counts, start=1):
            s = p**k + 1 - n
            if s * s > 36 * p**k:
                return False
        a = p + 1 - self.elliptic_count
        return a * a <= 4 * p

    def functional_equation_ok(self) -> bool:
        c, p = self.l_curve, self.p
        return all(c[6 - i] == p ** (3 - i) * c[i] for i in range(4))

    def jacobian_order(self) -> int:
        return sum(self.l_curve)

    def prym_order(self) -> int:
        return sum(self.l_prym)


class IsogenyMismatch(AssertionError):
    pass


def l_polynomial_from_counts(p: int, counts: tuple[int, int, int]) -> tuple[int, ...]:
    """Genus-3 L-polynomial from #C(F_p), #C(F_p^2), #C(F_p^3) via Newton's identities and the functional equation."""
    S = [p**k + 1 - n for k, n in enumerate(counts, start=1)]
    c = [Fraction(1)]
    for k in range(1, 4):
        c.append(-sum(S[i - 1] * c[k - i] for i in range(1, k + 1)) / k)
    if any(x.denominator != 1 for x in c):
        raise IsogenyMismatch("Newton's identities gave non-integral L-polynomial coefficients")
    c = [int(x) for x in c]
    return (c[0], c[1], c[2], c[3], p * c[2], p**2 * c[1], p**3)


def divide_l_polynomials(lc: tuple[int, ...], le: tuple[int, ...]) -> tuple[int, ...]:
    q, r = divmod(UPoly(lc), UPoly(le))
    if r or any(Fraction(x).denominator != 1 for x in q.coeffs):
        raise IsogenyMismatch("the elliptic L-polynomial does not divide the curve L-polynomial in Z[T]")
    out = [int(q[i]) for i in range(q.degree + 1)]
    return tuple(out + [0] * (5 - len(out)))


def frobenius_data(b, p: int) -> FrobeniusData:
    b = InvariantPoint.of(b)
    _admissible(b, p)
    counts, ne = [], None
    for k in (1, 2, 3):
        nc, e = _counts(b, p, k)
        counts.append(nc)
        if k == 1:
            ne = e
    lc = l_polynomial_from_counts(p, tuple(counts))
    a = p + 1 - ne
    le = (1, -a, p)
    lp = divide_l_polynomials(lc, le)
    return FrobeniusData(p, tuple(counts), ne, lc, le, lp)


def bigonal_duality_check(b, p: int) -> bool:
    """Whether the Prym L-polynomials of b and chi(b) agree at p."""
    b = InvariantPoint.of(b)
    return frobenius_data(b, p).l_prym == frobenius_data(chi(b), p).l_prym


def perturbed_control(b, p: int) -> bool | None:
    """Same comparison against chi(b) with p12 shifted by one; None when the shifted point is inadmissible."""
    b = InvariantPoint.of(b)
    h = chi(b)
    shifted = InvariantPoint(h.p2, h.p6, h.p8, h.p12 + 1)
    if not is_admissible(shifted, p):
        return None
    return frobenius_data(b, p).l_prym == frobenius_data(shifted, p).l_prym
