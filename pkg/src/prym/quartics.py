"""Binary quartic forms: invariants I and J, the PGL2 action, root tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .exact import GF, UPoly, gcd
from .exact.poly import DomainError


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class BinaryQuartic:
    """a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def __post_init__(self):
        for name in "abcde":
            object.__setattr__(self, name, _frac(getattr(self, name)))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "BinaryQuartic":
        if len(coeffs) != 5:
            raise ValueError("a binary quartic has 5 coefficients")
        return cls(*coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return (self.a, self.b, self.c, self.d, self.e)

    def __call__(self, x, y):
        a, b, c, d, e = self.coeffs
        return a * x**4 + b * x**3 * y + c * x**2 * y**2 + d * x * y**3 + e * y**4

    def __bool__(self):
        return any(self.coeffs)

    def scale(self, lam) -> "BinaryQuartic":
        lam = _frac(lam)
        return BinaryQuartic(*(lam * x for x in self.coeffs))

    def __str__(self):
        mons = ("x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4")
        parts = [f"{c}*{m}" for c, m in zip(self.coeffs, mons) if c]
        return " + ".join(parts).replace("+ -", "- ") or "0"


def inv_I(q: BinaryQuartic) -> Fraction:
    a, b, c, d, e = q.coeffs
    return -3 * (12 * a * e - 3 * b * d + c * c)


def inv_J(q: BinaryQuartic) -> Fraction:
    a, b, c, d, e = q.coeffs
    return 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c**3


def discriminant_ij(q: BinaryQuartic) -> Fraction:
    """4 I^3 + 27 J^2."""
    i, j = inv_I(q), inv_J(q)
    return 4 * i**3 + 27 * j**2


def _binom_expand(p: Sequence[Fraction], k: int) -> list[Fraction]:
    """Coefficients of (p0 x + p1 y)^k, indexed by the power of y."""
    return [comb(k, i) * p[0] ** (k - i) * p[1] ** i for i in range(k + 1)]


def pgl2_act(A: Sequence[Sequence], q: BinaryQuartic) -> BinaryQuartic:
    """q((x, y) A) / det(A)^2."""
    (p, r), (s, t) = [[_frac(x) for x in row] for row in A]
    det = p * t - r * s
    if det == 0:
        raise DomainError("singular matrix does not define an element of PGL2")
    # (x, y) A = (p x + s y, r x + t y)
    lin1 = (p, s)
    lin2 = (r, t)
    out = [Fraction(0)] * 5
    for k, coef in enumerate(q.coeffs):
        if not coef:
            continue
        u = _binom_expand(lin1, 4 - k)
        v = _binom_expand(lin2, k)
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                out[i + j] += coef * ui * vj
    return BinaryQuartic(*(x / det**2 for x in out))


def _check_nonzero(q: BinaryQuartic):
    if not q:
        raise DomainError("the zero form has no roots to speak of")


def has_distinct_roots(q: BinaryQuartic, over: int | None = None) -> bool:
    """Distinct roots in P^1 over the algebraic closure, via 4I^3 + 27J^2 (computed mod p if over=p)."""
    _check_nonzero(q)
    d = discriminant_ij(q)
    if over is None:
        return d != 0
    return (d.numerator * pow(d.denominator, -1, over)) % over != 0


def _dehomogenize(q: BinaryQuartic, field: GF | None = None) -> UPoly:
    # q(x, 1) with coefficients from x^0 upwards
    coeffs = [q.e, q.d, q.c, q.b, q.a]
    if field is not None:
        coeffs = [field(c.numerator * pow(c.denominator, -1, field.p)) for c in coeffs]
    return UPoly(coeffs, field)


def is_squarefree_form(q: BinaryQuartic, over: int | None = None) -> bool:
    """Squarefreeness of the binary form through gcd(f, f') on q(x, 1) plus the root at infinity."""
    _check_nonzero(q)
    f = _dehomogenize(q, None if over is None else GF(over))
    deg = f.degree
    if deg < 3:  # y^2 divides the form
        return False
    return gcd(f, f.derivative()).degree == 0


def has_rational_linear_factor(q: BinaryQuartic, over: int | None = None) -> bool:
    """Linear factor over Q (over=None) or over F_p (over=p)."""
    _check_nonzero(q)
    field = None if over is None else GF(over)
    f = _dehomogenize(q, field)
    if f.degree < 4:
        return True
    if field is None:
        return bool(f.rational_roots())
    return bool(f.roots_in_field())


@dataclass(frozen=True)
class VStarElement:
    b2: Fraction
    b6: Fraction
    q: BinaryQuartic

    def scale(self, lam) -> "VStarElement":
        lam = _frac(lam)
        return VStarElement(lam**2 * _frac(self.b2), lam**6 * _frac(self.b6), self.q.scale(lam**4))

    def act(self, A) -> "VStarElement":
        return VStarElement(self.b2, self.b6, pgl2_act(A, self.q))
