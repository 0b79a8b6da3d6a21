"""The genus-3 family y^4 + p2 x y^2 + p6 y^2 = x^3 + p8 x + p12, its quotient curves and bigonal dual."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import integer_nthroot

from .exact import MPoly, UPoly, gcd
from .exact.mpoly import mdet
from .exact.poly import DomainError

WEIGHTS = (2, 6, 8, 12)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class InvariantPoint:
    p2: Fraction
    p6: Fraction
    p8: Fraction
    p12: Fraction

    def __post_init__(self):
        for name in ("p2", "p6", "p8", "p12"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    @classmethod
    def of(cls, b) -> "InvariantPoint":
        return b if isinstance(b, InvariantPoint) else cls(*b)

    def __iter__(self):
        return iter((self.p2, self.p6, self.p8, self.p12))

    def as_tuple(self) -> tuple[Fraction, ...]:
        return tuple(self)

    def scale(self, lam) -> "InvariantPoint":
        """Weighted action: component i multiplied by lam^d_i."""
        lam = _frac(lam)
        return InvariantPoint(*(lam**d * p for d, p in zip(WEIGHTS, self)))

    def is_integral(self) -> bool:
        return all(p.denominator == 1 for p in self)


def _chi_raw(p2, p6, p8, p12):
    return (
        -2 * p2,
        8 * p6 - Fraction(2, 3) * p2**3,
        16 * p8 - Fraction(1, 3) * p2**4 + 8 * p2 * p6,
        -64 * p12 - Fraction(2, 27) * p2**6 + Fraction(8, 3) * p2**3 * p6 - 16 * p6**2 + Fraction(16, 3) * p2**2 * p8,
    )


def chi(b) -> InvariantPoint:
    """Bigonal dual: the displayed 4-tuple, then the weighted action of 3."""
    return InvariantPoint(*_chi_raw(*InvariantPoint.of(b))).scale(3)


def chi_polynomials() -> tuple[MPoly, ...]:
    """The four components of chi as polynomials in (p2, p6, p8, p12)."""
    v = MPoly.variables(4)
    return tuple(3**d * c for d, c in zip(WEIGHTS, _chi_raw(*v)))


def delta_ehat(b) -> Fraction:
    b = InvariantPoint.of(b)
    return 4 * b.p8**3 + 27 * b.p12**2


def delta_e(b) -> Fraction:
    return delta_ehat(chi(b))


def discriminants(b) -> tuple[Fraction, Fraction, Fraction]:
    """(Delta_E, Delta_Ehat, Delta) with Delta = Delta_E * Delta_Ehat."""
    de, dh = delta_e(b), delta_ehat(b)
    return de, dh, de * dh


# exponent n with Delta(chi(b)) = 18^n Delta(b); asserted in the test suite
DISCRIMINANT_UNIT_EXPONENT = 24


# --- smoothness by elimination -------------------------------------------------


def _curve_mpolys(b: InvariantPoint):
    """f, f_x, f_y as coefficient lists in y (index = power of y) over Q[x, t]."""
    x, t = MPoly.variables(2)
    p2, p6, p8, p12 = b
    f = [-(x**3) - p8 * x - p12, MPoly(2), p2 * x + p6, MPoly(2), MPoly.const(2, 1)]
    fx = [-3 * x**2 - p8, MPoly(2), MPoly.const(2, p2), MPoly(2)]
    fy = [MPoly(2), 2 * p2 * x + 2 * p6, MPoly(2), MPoly.const(2, 4)]
    return f, fx, fy, x, t


def _reduce_mod_monic(poly: list[MPoly], f: list[MPoly]) -> list[MPoly]:
    poly = list(poly)
    n = len(f) - 1
    while len(poly) > n:
        lead = poly.pop()
        if lead:
            for i in range(n):
                poly[len(poly) - n + i] = poly[len(poly) - n + i] - lead * f[i]
    return poly + [MPoly(2)] * (n - len(poly))


def elimination_resultant(b) -> MPoly:
    """Res_y(f, f_x + t f_y) as a polynomial in (x, t), via the multiplication matrix modulo f."""
    b = InvariantPoint.of(b)
    f, fx, fy, x, t = _curve_mpolys(b)
    g = [a + t * c for a, c in zip(fx, fy)]
    cols = []
    for k in range(4):
        shifted = [MPoly(2)] * k + g
        cols.append(_reduce_mod_monic(shifted, f))
    m = [[cols[j][i] for j in range(4)] for i in range(4)]
    return mdet(m)


class EliminationDegenerate(RuntimeError):
    pass


def _singular_by_elimination(b: InvariantPoint) -> bool:
    r = elimination_resultant(b)
    coeffs = r.coefficient_in(1)
    common = None
    for poly in coeffs.values():
        cs = [Fraction(0)] * (max((m[0] for m in poly.terms), default=0) + 1)
        for (ex, _), c in poly.terms.items():
            cs[ex] += c
        u = UPoly(cs)
        common = u if common is None else gcd(common, u)
    if common is None or not common:
        raise EliminationDegenerate("resultant vanishes identically")
    return common.degree >= 1


def is_smooth_genus3(b) -> bool:
    """Smoothness of the projective plane quartic, decided by elimination.

    The only point at infinity is (1:0:0), where the z-derivative of the
    homogenized equation is -1, so it is always smooth.  An affine point is
    singular iff Res_y(f, f_x + t f_y) vanishes identically in t at its
    x-coordinate, i.e. iff the t-coefficients share a root.
    """
    b = InvariantPoint.of(b)
    try:
        return not _singular_by_elimination(b)
    except EliminationDegenerate:
        warnings.warn("elimination degenerated; using the factored discriminant criterion", RuntimeWarning)
        return _smooth_factored(b)


def _smooth_factored(b: InvariantPoint) -> bool:
    g_e, _ = _cubics(b)
    return _squarefree(g_e) and delta_ehat(b) != 0


def _squarefree(f: UPoly) -> bool:
    return gcd(f, f.derivative()).degree == 0


def _cubics(b: InvariantPoint) -> tuple[UPoly, UPoly]:
    p2, p6, p8, p12 = b
    g_e = UPoly([4 * p12 + p6**2, 4 * p8 + 2 * p2 * p6, p2**2, Fraction(4)])
    g_h = UPoly([-p12, p8, Fraction(0), Fraction(1)])
    return g_e, g_h


def two_torsion_cubics(b) -> tuple[UPoly, UPoly]:
    """(g_E, g_Ehat): (2y + p2 x + p6)^2 = g_E(x) and W^2 = g_Ehat(x)."""
    b = InvariantPoint.of(b)
    if discriminants(b)[2] == 0:
        raise DomainError("two-torsion cubics need a smooth curve (nonzero discriminant)")
    return _cubics(b)


def rational_two_torsion(b) -> tuple[int, int]:
    """(#E_b[2](Q), #Ehat_b[2](Q))."""
    g_e, g_h = two_torsion_cubics(b)
    return 1 + len(set(g_e.rational_roots())), 1 + len(set(g_h.rational_roots()))


# --- heights ------------------------------------------------------------------


def height_less_than(b, X) -> bool:
    """ht(b) < X, decided exactly as |p_i| < X^d_i for every i."""
    X = _frac(X)
    if X <= 0:
        return False
    return all(abs(p) < X**d for p, d in zip(InvariantPoint.of(b), WEIGHTS))


def _exact_root(q: Fraction, d: int) -> Fraction | None:
    num, ok_n = integer_nthroot(q.numerator, d)
    den, ok_d = integer_nthroot(q.denominator, d)
    return Fraction(int(num), int(den)) if ok_n and ok_d else None


def height(b) -> Fraction | float:
    """max |p_i|^(1/d_i); exact when the maximizing term is a perfect power, else a float."""
    b = InvariantPoint.of(b)
    terms = [(abs(p), d) for p, d in zip(b, WEIGHTS)]
    best = terms[0]
    for q, d in terms[1:]:
        # compare q^(1/d) with best_q^(1/best_d) exactly
        if q**best[1] > best[0] ** d:
            best = (q, d)
    exact = _exact_root(*best)
    if exact is not None:
        return exact
    q, d = best
    return math.exp((math.log(q.numerator) - math.log(q.denominator)) / d)


def box_volume(X) -> Fraction:
    """Volume of {|p_i| < X^d_i}: the product of the interval lengths 2 X^d_i."""
    X = _frac(X)
    out = Fraction(1)
    for d in WEIGHTS:
        out *= 2 * X**d
    return out


# --- equations ------------------------------------------------------------------


@dataclass(frozen=True)
class CurveBundle:
    b: InvariantPoint
    bhat: InvariantPoint
    genus3: str
    elliptic: str
    elliptic_short: str
    dual_elliptic_short: str
    dual_genus3: str


def curve_bundle(b) -> CurveBundle:
    b = InvariantPoint.of(b)
    p2, p6, p8, p12 = (str(x) for x in b)
    g_e, g_h = _cubics(b)
    return CurveBundle(
        b=b,
        bhat=chi(b),
        genus3=f"y^4 + ({p2})*x*y^2 + ({p6})*y^2 = x^3 + ({p8})*x + ({p12})",
        elliptic=f"y^2 + ({p2})*x*y + ({p6})*y = x^3 + ({p8})*x + ({p12})",
        elliptic_short=f"(2*y + ({p2})*x + ({p6}))^2 = {_poly_str(g_e)}",
        dual_elliptic_short=f"W^2 = {_poly_str(g_h)}",
        dual_genus3=f"(y^2 + ({p2})*x + ({p6}))^2 = -4*(x^3 + ({p8})*x + ({p12}))",
    )


def _poly_str(f: UPoly) -> str:
    parts = []
    for k in range(f.degree, -1, -1):
        c = f[k]
        if c:
            parts.append(f"({c})" + (f"*x^{k}" if k > 1 else "*x" if k == 1 else ""))
    return " + ".join(parts) or "0"
