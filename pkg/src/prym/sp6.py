"""The 14-dimensional symplectic representation W inside the third exterior power of Q^6.

Coordinates (u, X, Y, z) of an element of the third exterior power are read off
the wedge basis through

    u = c_123,  z = c_456,
    X[i][j] = coefficient of e_1 ^ e_2 ^ e_3 with slot j replaced by e_{4+i},
    Y[i][j] = coefficient of e_4 ^ e_5 ^ e_6 with slot j replaced by e_{1+i},

so that X[0][1] is the coefficient of e_1 ^ e_4 ^ e_3, for instance.  The
coefficient of an unsorted triple is the sign of the sorting permutation times
the coefficient of the sorted triple.  Elements of W are the ones whose X and
Y are symmetric, equivalently the kernel of the contraction with the standard
symplectic form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exact import MPoly, solve
from .exact.linalg import det, matmul, transpose
from .exact.poly import DomainError
from .quartics import BinaryQuartic

Triple = tuple[int, int, int]
TRIPLES: tuple[Triple, ...] = tuple(combinations(range(1, 7), 3))

# unsorted triples carrying X[i][j] and Y[i][j]
X_SLOTS: tuple[tuple[Triple, ...], ...] = tuple(
    tuple(tuple(4 + i if k == j else k + 1 for k in range(3)) for j in range(3)) for i in range(3)
)
Y_SLOTS: tuple[tuple[Triple, ...], ...] = tuple(
    tuple(tuple(1 + i if k == j else k + 4 for k in range(3)) for j in range(3)) for i in range(3)
)

# the 14 coordinates of W, as (name, slot or slots)
SYM_PAIRS = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))
W_COORDS: tuple[str, ...] = (
    ("u",) + tuple(f"X{i}{j}" for i, j in SYM_PAIRS) + tuple(f"Y{i}{j}" for i, j in SYM_PAIRS) + ("z",)
)

OMEGA = tuple(
    tuple(1 if (j == i + 3) else -1 if (i == j + 3) else 0 for j in range(6)) for i in range(6)
)


def perm_sign(seq: Sequence[int]) -> int:
    s = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
            elif seq[i] == seq[j]:
                return 0
    return s


def omega(a: int, b: int) -> int:
    """The standard symplectic form on basis vectors, 1-indexed."""
    return OMEGA[a - 1][b - 1]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _mat(m) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(_frac(x) for x in row) for row in m)


ZERO3 = ((Fraction(0),) * 3,) * 3


@dataclass(frozen=True)
class WVector:
    u: Fraction
    X: tuple[tuple[Fraction, ...], ...]
    Y: tuple[tuple[Fraction, ...], ...]
    z: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", _frac(self.u))
        object.__setattr__(self, "z", _frac(self.z))
        object.__setattr__(self, "X", _mat(self.X))
        object.__setattr__(self, "Y", _mat(self.Y))
        if len(self.X) != 3 or len(self.Y) != 3 or any(len(r) != 3 for r in self.X + self.Y):
            raise ValueError("X and Y must be 3x3")

    @classmethod
    def zero(cls) -> "WVector":
        return cls(0, ZERO3, ZERO3, 0)

    @classmethod
    def from_coords(cls, c: Sequence) -> "WVector":
        """From the 14 coordinates ordered as W_COORDS."""
        if len(c) != 14:
            raise ValueError("W has 14 coordinates")
        X = [[None] * 3 for _ in range(3)]
        Y = [[None] * 3 for _ in range(3)]
        for k, (i, j) in enumerate(SYM_PAIRS):
            X[i][j] = X[j][i] = c[1 + k]
            Y[i][j] = Y[j][i] = c[7 + k]
        return cls(c[0], X, Y, c[13])

    def coords(self) -> tuple[Fraction, ...]:
        if not self.is_symmetric():
            raise DomainError("coordinates are only defined on W (symmetric X and Y)")
        return (
            (self.u,)
            + tuple(self.X[i][j] for i, j in SYM_PAIRS)
            + tuple(self.Y[i][j] for i, j in SYM_PAIRS)
            + (self.z,)
        )

    def is_symmetric(self) -> bool:
        return all(self.X[i][j] == self.X[j][i] and self.Y[i][j] == self.Y[j][i] for i in range(3) for j in range(3))

    def __add__(self, other: "WVector") -> "WVector":
        return WVector(
            self.u + other.u,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.X, other.X)],
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.Y, other.Y)],
            self.z + other.z,
        )

    def scale(self, lam) -> "WVector":
        lam = _frac(lam)
        return WVector(
            lam * self.u, [[lam * a for a in r] for r in self.X], [[lam * a for a in r] for r in self.Y], lam * self.z
        )

    def to_wedge(self) -> dict[Triple, Fraction]:
        c: dict[Triple, Fraction] = {t: Fraction(0) for t in TRIPLES}

        def put(t: Triple, v: Fraction):
            c[tuple(sorted(t))] += perm_sign(t) * v

        put((1, 2, 3), self.u)
        put((4, 5, 6), self.z)
        for i in range(3):
            for j in range(3):
                put(X_SLOTS[i][j], self.X[i][j])
                put(Y_SLOTS[i][j], self.Y[i][j])
        return c

    @classmethod
    def from_wedge(cls, c: Mapping[Triple, object]) -> "WVector":
        """Inverse of to_wedge; the input must lie in W."""
        if any(contraction(c)):
            raise DomainError("element of the exterior cube is not killed by contraction")

        def get(t: Triple) -> Fraction:
            return perm_sign(t) * _frac(c.get(tuple(sorted(t)), 0))

        X = [[get(X_SLOTS[i][j]) for j in range(3)] for i in range(3)]
        Y = [[get(Y_SLOTS[i][j]) for j in range(3)] for i in range(3)]
        return cls(get((1, 2, 3)), X, Y, get((4, 5, 6)))


def contraction(c: Mapping[Triple, object]) -> list[Fraction]:
    """x1^x2^x3 -> w(x2,x3) x1 - w(x1,x3) x2 + w(x1,x2) x3, as a vector of length 6."""
    out = [Fraction(0)] * 6
    for (a, b, d), v in c.items():
        if not v:
            continue
        v = _frac(v)
        out[a - 1] += v * omega(b, d)
        out[b - 1] -= v * omega(a, d)
        out[d - 1] += v * omega(a, b)
    return out


def contraction_matrix() -> list[list[int]]:
    """6x20 matrix of the contraction in the sorted-triple basis."""
    cols = []
    for t in TRIPLES:
        cols.append([int(x) for x in contraction({t: 1})])
    return transpose(cols)


# --- the quartic invariant ----------------------------------------------------


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _minor(m, i: int, j: int):
    r = [k for k in range(3) if k != i]
    c = [k for k in range(3) if k != j]
    return m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]


def _f_closed(u, X, Y, z):
    tr = sum(X[i][j] * Y[j][i] for i in range(3) for j in range(3))
    mixed = sum(_minor(X, i, j) * _minor(Y, i, j) for i in range(3) for j in range(3))
    return (u * z - tr) ** 2 + 4 * u * _det3(Y) + 4 * z * _det3(X) - 4 * mixed


def f_invariant(w: WVector) -> Fraction:
    """(uz - tr XY)^2 + 4u det Y + 4z det X - 4 sum_ij det(X^_ij) det(Y^_ij), X^_ij the (i,j) minor matrix."""
    return _f_closed(w.u, w.X, w.Y, w.z)


@lru_cache(maxsize=None)
def f_polynomial_general() -> MPoly:
    """F expanded in the 20 variables u, X (row major), Y (row major), z."""
    v = MPoly.variables(20)
    X = [v[1 + 3 * i : 4 + 3 * i] for i in range(3)]
    Y = [v[10 + 3 * i : 13 + 3 * i] for i in range(3)]
    return _f_closed(v[0], X, Y, v[19])


@lru_cache(maxsize=None)
def f_polynomial() -> MPoly:
    """F restricted to W, in the 14 coordinates ordered as W_COORDS."""
    v = MPoly.variables(14)
    X = [[None] * 3 for _ in range(3)]
    Y = [[None] * 3 for _ in range(3)]
    for k, (i, j) in enumerate(SYM_PAIRS):
        X[i][j] = X[j][i] = v[1 + k]
        Y[i][j] = Y[j][i] = v[7 + k]
    return _f_closed(v[0], X, Y, v[13])


def sl6_quartic_invariant(c: Mapping[Triple, object]) -> Fraction:
    """The SL6 quartic invariant tr(K^2)/6 of a 3-form, with K: V* -> V built from (iota_a phi) ^ phi.

    Coded directly on wedge coefficients; on W it agrees with F, which makes it an
    independent check of the closed formula and of the coordinate layout.
    """
    coeff = {t: _frac(v) for t, v in c.items() if v}
    K = [[Fraction(0)] * 6 for _ in range(6)]
    for a in range(1, 7):
        inner: dict[tuple[int, int], Fraction] = {}
        for t, v in coeff.items():
            if a in t:
                pos = t.index(a)
                rest = tuple(s for s in t if s != a)
                inner[rest] = inner.get(rest, 0) + (-1) ** pos * v
        for r, v1 in inner.items():
            for t, v2 in coeff.items():
                full = r + t
                if len(set(full)) < 5:
                    continue
                missing = next(k for k in range(1, 7) if k not in full)
                sign = perm_sign(full) * perm_sign((missing,) + tuple(sorted(full)))
                K[missing - 1][a - 1] += sign * v1 * v2
    K2 = matmul(K, K)
    return sum(K2[i][i] for i in range(6)) / 6


# --- group and Lie algebra actions --------------------------------------------


def is_symplectic(g: Sequence[Sequence]) -> bool:
    gt = transpose(g)
    return matmul(matmul(gt, [list(r) for r in OMEGA]), [list(r) for r in g]) == [list(r) for r in OMEGA]


def wedge3_matrix(g: Sequence[Sequence]) -> list[list]:
    """Matrix of the induced map on the third exterior power, sorted-triple basis."""
    out = []
    for T in TRIPLES:
        rows = [g[t - 1] for t in T]
        out.append([det([[r[s - 1] for s in S] for r in rows]) for S in TRIPLES])
    return out


def _apply_wedge(m: Sequence[Sequence], c: Mapping[Triple, object]) -> dict[Triple, Fraction]:
    vec = [_frac(c.get(t, 0)) for t in TRIPLES]
    return {T: sum((x * y for x, y in zip(row, vec) if x and y), Fraction(0)) for T, row in zip(TRIPLES, m)}


def sp6_act(g: Sequence[Sequence], w: WVector) -> WVector:
    if not is_symplectic(g):
        raise DomainError("matrix does not preserve the symplectic form")
    return WVector.from_wedge(_apply_wedge(wedge3_matrix(g), w.to_wedge()))


def derivation_matrix(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Matrix of the Lie algebra action of a 6x6 matrix on the third exterior power."""
    out = [[Fraction(0)] * 20 for _ in range(20)]
    index = {t: k for k, t in enumerate(TRIPLES)}
    for col, S in enumerate(TRIPLES):
        for slot in range(3):
            for r in range(1, 7):
                coef = m[r - 1][S[slot] - 1]
                if not coef:
                    continue
                t = list(S)
                t[slot] = r
                sgn = perm_sign(t)
                if sgn:
                    out[index[tuple(sorted(t))]][col] += sgn * _frac(coef)
    return out


def is_sp6_lie(m: Sequence[Sequence]) -> bool:
    """m^T Omega + Omega m = 0."""
    om = [list(r) for r in OMEGA]
    a = matmul(transpose(m), om)
    b = matmul(om, m)
    return all(x + y == 0 for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def sp6_lie_act(m: Sequence[Sequence], w: WVector) -> WVector:
    if not is_sp6_lie(m):
        raise DomainError("matrix is not in sp6")
    return WVector.from_wedge(_apply_wedge(derivation_matrix(m), w.to_wedge()))


def lie_action_on_coords(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """14x14 matrix of an sp6 element on the W coordinates."""
    cols = []
    for k in range(14):
        e = [0] * 14
        e[k] = 1
        cols.append(list(sp6_lie_act(m, WVector.from_coords(e)).coords()))
    return transpose(cols)


def symplectic_generators(rng, bound: int = 2) -> list[list[list[int]]]:
    """Random elementary symplectic matrices: unipotent blocks and block-diagonal (A, A^-T) with A unimodular."""
    def sym():
        s = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(i, 3):
                s[i][j] = s[j][i] = rng.randint(-bound, bound)
        return s

    def block(a, b, c, d):
        return [a[i] + b[i] for i in range(3)] + [c[i] + d[i] for i in range(3)]

    eye = [[int(i == j) for j in range(3)] for i in range(3)]
    zero = [[0] * 3 for _ in range(3)]
    upper = block(eye, sym(), zero, eye)
    lower = block(eye, zero, sym(), eye)
    i, j = rng.sample(range(3), 2)
    a = [row[:] for row in eye]
    a[i][j] = rng.randint(-bound, bound)
    a_inv_t = [row[:] for row in eye]
    a_inv_t[j][i] = -a[i][j]
    levi = block(a, zero, zero, a_inv_t)
    return [upper, lower, levi]


# --- V = W tensor the standard representation of SL2 ---------------------------


@dataclass(frozen=True)
class VElement:
    w1: WVector
    w2: WVector

    @classmethod
    def from_coords(cls, c: Sequence) -> "VElement":
        return cls(WVector.from_coords(c[:14]), WVector.from_coords(c[14:]))

    def coords(self) -> tuple[Fraction, ...]:
        return self.w1.coords() + self.w2.coords()

    def sl2_act(self, A: Sequence[Sequence]) -> "VElement":
        """(w1, w2) A^T."""
        (a, b), (c, d) = A
        return VElement(self.w1.scale(a) + self.w2.scale(b), self.w1.scale(c) + self.w2.scale(d))

    def sp6_act(self, g: Sequence[Sequence]) -> "VElement":
        return VElement(sp6_act(g, self.w1), sp6_act(g, self.w2))

    def scale(self, lam) -> "VElement":
        return VElement(self.w1.scale(lam), self.w2.scale(lam))


_QUARTIC_NODES = ((1, 0), (0, 1), (1, 1), (1, -1), (1, 2))


def resolvent_quartic(v: VElement) -> BinaryQuartic:
    """The binary quartic Q(x, y) = F(x w1 + y w2)."""
    vals = [f_invariant(v.w1.scale(x) + v.w2.scale(y)) for x, y in _QUARTIC_NODES]
    rows = [[Fraction(x) ** (4 - k) * Fraction(y) ** k for k in range(5)] for x, y in _QUARTIC_NODES]
    return BinaryQuartic(*solve(rows, vals))


# --- weights of the coordinates -----------------------------------------------


def _basis_weight(k: int) -> tuple[int, int, int]:
    w = [0, 0, 0]
    if k <= 3:
        w[k - 1] += 1
    else:
        w[k - 4] -= 1
    return tuple(w)


def coordinate_weight(name: str) -> tuple[int, int, int]:
    """L1..L3 weight of a W coordinate."""
    if name == "u":
        t = (1, 2, 3)
    elif name == "z":
        t = (4, 5, 6)
    else:
        slots = X_SLOTS if name[0] == "X" else Y_SLOTS
        t = slots[int(name[1])][int(name[2])]
    return tuple(sum(_basis_weight(k)[i] for k in t) for i in range(3))


class DictionaryUnavailable(RuntimeError):
    pass


def weight_dictionary(l_rows: Iterable[tuple[int, tuple[int, ...]]], anchor_sign: int = 1) -> dict[int, tuple[int, str]]:
    """Map row index -> (factor, coordinate name), factor 1 for w1 and 2 for w2.

    Rows whose L4 coefficient equals anchor_sign go to w1.
    """
    by_weight = {coordinate_weight(n): n for n in W_COORDS}
    if len(by_weight) != 14:
        raise DictionaryUnavailable("W weights are not multiplicity free")
    out = {}
    for idx, l in l_rows:
        factor = 1 if l[3] == anchor_sign else 2
        out[idx] = (factor, by_weight[tuple(l[:3])])
    return out


def restrict_f_to_weight_subspace(zeroed: Iterable[int], dictionary: Mapping[int, tuple[int, str]] | None) -> bool:
    """Whether F(w1) vanishes identically once the coordinates of the zeroed rows are set to 0."""
    if dictionary is None:
        raise DictionaryUnavailable("the weight dictionary of V is needed to restrict F")
    dead = set()
    for idx in zeroed:
        factor, name = dictionary[idx]
        if factor == 1:
            dead.add(W_COORDS.index(name))
    return all(any(mono[i] for i in dead) for mono in f_polynomial().terms)
