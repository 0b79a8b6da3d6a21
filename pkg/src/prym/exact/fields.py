"""Finite fields F_{p^k} with a canonical defining polynomial.

Elements are immutable and carry their coordinate tuple relative to the
power basis 1, t, ..., t^{k-1}.  The defining polynomial is the first monic
irreducible of degree k met when the non-leading coefficients (low to high)
are read as the base-p digits of 0, 1, 2, ...
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# --- dense polynomial helpers over Z/p (coefficient lists, low to high) ---

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    _trim(a)
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: list[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic f over F_p."""
    f = _trim([x % p for x in f])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**k, f, p), x, p):
        return False
    for r in _prime_factors(k):
        h = _psub(_ppowmod(x, p ** (k // r), f, p), x, p)
        g = _pgcd(list(f), h, p)
        if len(g) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k in digit order (low coefficient first)."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k == 1:
        return (0, 1)
    for n in range(p**k):
        digits = [(n // p**i) % p for i in range(k)]
        f = digits + [1]
        if is_irreducible_mod_p(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {k} mod {p}")


class GF:
    """The field with p^k elements."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if k < 1:
            raise FieldError("extension degree must be positive")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = canonical_modulus(p, k)
        self._tables = None

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    def __call__(self, value) -> "FqElem":
        if isinstance(value, FqElem):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FqElem(self, (value % self.p,) + (0,) * (self.k - 1))
        coords = tuple(int(c) % self.p for c in value)
        if len(coords) != self.k:
            raise FieldError("wrong number of coordinates")
        return FqElem(self, coords)

    @property
    def zero(self) -> "FqElem":
        return self(0)

    @property
    def one(self) -> "FqElem":
        return self(1)

    @property
    def gen(self) -> "FqElem":
        """The class of t in F_p[t]/(modulus)."""
        if self.k == 1:
            raise FieldError("prime field has no adjoined generator")
        return self((0, 1) + (0,) * (self.k - 2))

    def from_index(self, n: int) -> "FqElem":
        return FqElem(self, tuple((n // self.p**i) % self.p for i in range(self.k)))

    def elements(self) -> Iterator["FqElem"]:
        for n in range(self.q):
            yield self.from_index(n)

    # Vectorised tables over the integer encoding sum c_i p^i.

    def tables(self) -> "FieldTables":
        if self._tables is None:
            self._tables = FieldTables(self)
        return self._tables


class FqElem:
    __slots__ = ("field", "coords")

    def __init__(self, field: GF, coords: tuple[int, ...]):
        self.field = field
        self.coords = coords

    def _coerce(self, other) -> "FqElem | None":
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise FieldError("mixed fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return None

    @property
    def index(self) -> int:
        p = self.field.p
        return sum(c * p**i for i, c in enumerate(self.coords))

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.coords[0]} (mod {self.field.p})"
        return f"FqElem{self.coords} in {self.field!r}"

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple(-a % p for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        if f.k == 1:
            return FqElem(f, (self.coords[0] * o.coords[0] % f.p,))
        prod = _pmod(_pmul(self.coords, o.coords, f.p), f.modulus, f.p)
        return FqElem(f, tuple(prod) + (0,) * (f.k - len(prod)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FqElem":
        if not self:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.field.k == 1:
            return FqElem(self.field, (pow(self.coords[0], -1, self.field.p),))
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def frobenius(self) -> "FqElem":
        return self ** self.field.p


class FieldTables:
    """Integer-encoded arithmetic tables for vectorised work over F_q.

    Element n encodes sum_i c_i p^i.  Multiplication goes through discrete
    logarithms to a primitive element; addition is digit-wise.
    """

    def __init__(self, field: GF):
        p, k, q = field.p, field.k, field.q
        self.field = field
        self.digits = np.array([[(n // p**i) % p for i in range(k)] for n in range(q)], dtype=np.int64)
        self.weights = np.array([p**i for i in range(k)], dtype=np.int64)
        self.exp, self.log = self._discrete_log(field)
        sq = np.full(q, -1, dtype=np.int64)
        elems = np.arange(q, dtype=np.int64)
        squares = self.mul(elems, elems)
        sq[squares[::-1]] = elems[::-1]
        self.sqrt = sq

    @staticmethod
    def _discrete_log(field: GF):
        q = field.q
        order = q - 1
        factors = _prime_factors(order) if order > 1 else []
        for n in range(1, q):
            g = field.from_index(n)
            if all(g ** (order // r) != 1 for r in factors):
                break
        exp = np.zeros(order, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = field.one
        for i in range(order):
            exp[i] = x.index
            log[x.index] = i
            x = x * g
        return exp, log

    def add(self, a, b):
        d = (self.digits[a] + self.digits[b]) % self.field.p
        return d @ self.weights

    def neg(self, a):
        d = (-self.digits[a]) % self.field.p
        return d @ self.weights

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        zero = (a == 0) | (b == 0)
        la = self.log[np.where(a == 0, 1, a)]
        lb = self.log[np.where(b == 0, 1, b)]
        out = self.exp[(la + lb) % (self.field.q - 1)]
        return np.where(zero, 0, out)

    def scalar(self, n: int) -> int:
        return n % self.field.p

    def half(self, a):
        return self.mul(a, self.scalar(pow(2, -1, self.field.p)))
