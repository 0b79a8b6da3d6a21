"""Univariate polynomials over Q (Fraction) or a finite field (FqElem)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .fields import FqElem, GF


class PolyError(ValueError):
    pass


def _coerce(c, field: GF | None):
    if field is None:
        if isinstance(c, FqElem):
            raise PolyError("finite-field coefficient in a rational polynomial")
        return Fraction(c)
    return field(c)


class UPoly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of t^i.

    ``field`` is None for Q, otherwise a GF instance.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable = (), field: GF | None = None):
        cs = [_coerce(c, field) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    # construction helpers

    @classmethod
    def t(cls, field: GF | None = None) -> "UPoly":
        return cls([0, 1], field)

    @classmethod
    def const(cls, c, field: GF | None = None) -> "UPoly":
        return cls([c], field)

    def _like(self, coeffs) -> "UPoly":
        return UPoly(coeffs, self.field)

    def _lift(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            if other.field != self.field:
                raise PolyError("coefficient rings differ")
            return other
        return UPoly([other], self.field)

    @property
    def zero(self):
        return _coerce(0, self.field)

    @property
    def one(self):
        return _coerce(1, self.field)

    # basic queries

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.zero

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, FqElem)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            cs = str(c.coords[0] if isinstance(c, FqElem) and c.field.k == 1 else c)
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and cs == "1":
                terms.append(mono)
            elif mono:
                terms.append(f"({cs})*{mono}")
            else:
                terms.append(cs)
        return " + ".join(terms)

    # ring operations

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return self._like([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return self._like([])
        out = [self.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] = out[i + j] + a * b
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise PolyError("negative power of a polynomial")
        result, base = self._like([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return self._like([]), self
        quo = [self.zero] * (dq + 1)
        inv = self.one / o.lc
        for shift in range(dq, -1, -1):
            c = rem[shift + o.degree] * inv
            quo[shift] = c
            if c:
                for i, b in enumerate(o.coeffs):
                    rem[shift + i] = rem[shift + i] - c * b
        return self._like(quo), self._like(rem[: o.degree])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UPoly":
        q, r = divmod(self, other)
        if r:
            raise PolyError("division is not exact")
        return q

    def monic(self) -> "UPoly":
        if not self:
            return self
        return self * (self.one / self.lc)

    def derivative(self) -> "UPoly":
        return self._like([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = self.zero if not isinstance(x, UPoly) else self._like([])
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, g: "UPoly") -> "UPoly":
        acc = self._like([])
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def map_to(self, field: GF) -> "UPoly":
        """Reduce a rational polynomial into a prime field."""
        if self.field is not None:
            raise PolyError("already over a finite field")
        if field.k != 1:
            raise PolyError("reduction targets a prime field")
        p = field.p
        out = []
        for c in self.coeffs:
            if c.denominator % p == 0:
                raise PolyError(f"coefficient {c} is not p-integral for p={p}")
            out.append(c.numerator * pow(c.denominator, -1, p))
        return UPoly(out, field)

    def roots_in_field(self) -> list:
        """Distinct roots by exhaustive scan (finite fields only)."""
        if self.field is None:
            raise PolyError("use rational_roots over Q")
        return [x for x in self.field.elements() if not self(x)]

    def rational_roots(self) -> list[Fraction]:
        """Distinct rational roots via the rational root test."""
        if self.field is not None:
            raise PolyError("rational roots only over Q")
        if not self:
            raise PolyError("zero polynomial has every root")
        cs = _primitive_integer(self.coeffs)
        roots = set()
        while cs and cs[0] == 0:
            roots.add(Fraction(0))
            cs = cs[1:]
        if len(cs) <= 1:
            return sorted(roots)
        lead, const = abs(cs[-1]), abs(cs[0])
        for num in _divisors(const):
            for den in _divisors(lead):
                for s in (1, -1):
                    x = Fraction(s * num, den)
                    if x not in roots and _eval_int(cs, x) == 0:
                        roots.add(x)
        return sorted(roots)


def _primitive_integer(coeffs: Sequence[Fraction]) -> list[int]:
    from math import gcd, lcm

    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


def _eval_int(cs: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd (zero if both inputs vanish)."""
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def resultant(f: UPoly, g: UPoly):
    """Res(f, g) by the Euclidean remainder sequence."""
    if f.field != g.field:
        raise PolyError("coefficient rings differ")
    one = f.one
    if not f or not g:
        return f.zero
    a, b = f, g
    res = one
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return res * b.lc**da
        r = a % b
        if not r:
            return f.zero
        if (da * db) % 2:
            res = -res
        res = res * b.lc ** (da - r.degree)
        a, b = b, r


def sylvester_resultant(f: UPoly, g: UPoly):
    """Res(f, g) as the determinant of the Sylvester matrix."""
    from .linalg import det

    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        return f.zero
    if m == 0 and n == 0:
        return f.one
    size = m + n
    rows = []
    for i in range(n):
        row = [f.zero] * size
        for j, c in enumerate(reversed(f.coeffs)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [f.zero] * size
        for j, c in enumerate(reversed(g.coeffs)):
            row[i + j] = c
        rows.append(row)
    return det(rows)


def is_squarefree(f: UPoly) -> bool:
    return gcd(f, f.derivative()).degree == 0


class DomainError(ValueError):
    pass


def cubic_splitting_type(f: UPoly) -> list[int]:
    """Degree partition of the factorisation of a squarefree cubic over F_p."""
    if f.field is None or f.field.k != 1:
        raise DomainError("cubic_splitting_type expects a polynomial over a prime field")
    if f.degree != 3:
        raise DomainError(f"expected a cubic, got degree {f.degree}")
    if not is_squarefree(f):
        raise DomainError("cubic is not squarefree")
    n = len(f.roots_in_field())
    return {3: [1, 1, 1], 1: [1, 2], 0: [3]}[n]
