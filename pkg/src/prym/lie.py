"""The E6 Chevalley algebra, its diagram involution, and the folded F4 algebra graded by root height parity.

Structure constants use the bimultiplicative sign

    eps(a, b) = (-1)^(sum_i a_i b_i + sum_{i<j adjacent} a_i b_j)

on the root lattice, with [E_a, E_b] = eps(a, b) E_{a+b} when a+b is a root,
[E_a, E_-a] = eps(a, -a) h_a and [h_i, E_a] = (a, a_i) E_a.  The involution
sends E_{+-a_i} to E_{+-zeta(a_i)} and h_i to h_{zeta(i)}; its fixed algebra has
basis H_1..H_4 (sums of coroots over a fibre) and one X_a per F4 root a (the
sum of zeta-conjugate root vectors over the fibre).

Folded basis order: H_1..H_4, the 20 even-height roots, then the 28 odd-height
roots in weight-table order.  Indices 0..23 span g, 24..51 span V.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, lcm
from typing import Callable, Mapping, Sequence

import numpy as np

from .exact import GradedPoly4, charpoly, interpolate_graded, rank, solve
from .exact.linalg import bareiss_det, nullspace
from .exact.poly import DomainError
from .roots import E6_EDGES, FOLDING, ZETA_NODES, e6, f4, height, phi_v_table, restrict
from .sp6 import VElement, W_COORDS, lie_action_on_coords, weight_dictionary

Vec = tuple[int, ...]
Elem = dict  # sparse element: basis index -> coefficient


class SelfCheckError(AssertionError):
    pass


# --- E6 ----------------------------------------------------------------------


def _eps(a: Sequence[int], b: Sequence[int]) -> int:
    e = sum(x * y for x, y in zip(a, b))
    e += sum(a[i - 1] * b[j - 1] for i, j in E6_EDGES)
    return -1 if e % 2 else 1


@dataclass
class LieAlgebraTable:
    dim: int
    labels: list[str]
    bracket_table: dict[tuple[int, int], tuple[tuple[int, int], ...]]

    def bracket_basis(self, i: int, j: int) -> tuple[tuple[int, int], ...]:
        return self.bracket_table.get((i, j), ())

    def bracket(self, x: Mapping[int, object], y: Mapping[int, object]) -> Elem:
        out: Elem = {}
        for i, a in x.items():
            if not a:
                continue
            for j, b in y.items():
                if not b:
                    continue
                for k, c in self.bracket_basis(i, j):
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}

    def check_jacobi(self) -> None:
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    ei, ej, ek = {i: 1}, {j: 1}, {k: 1}
                    tot: Elem = {}
                    for a, b, c in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
                        for m, v in self.bracket(a, self.bracket(b, c)).items():
                            tot[m] = tot.get(m, 0) + v
                    if any(tot.values()):
                        raise SelfCheckError(f"Jacobi identity fails on {self.labels[i]}, {self.labels[j]}, {self.labels[k]}")

    def check_antisymmetry(self) -> None:
        for i in range(self.dim):
            for j in range(self.dim):
                a = dict(self.bracket_basis(i, j))
                b = dict(self.bracket_basis(j, i))
                if any(a.get(k, 0) + b.get(k, 0) for k in set(a) | set(b)):
                    raise SelfCheckError(f"antisymmetry fails on {self.labels[i]}, {self.labels[j]}")


@lru_cache(maxsize=None)
def e6_table() -> LieAlgebraTable:
    rs = e6()
    roots = rs.roots
    index = {r: k for k, r in enumerate(roots)}
    nr = len(roots)
    table: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
    for i, a in enumerate(roots):
        for j, b in enumerate(roots):
            s = tuple(x + y for x, y in zip(a, b))
            if s in index:
                table[(i, j)] = ((index[s], _eps(a, b)),)
            elif not any(s):
                table[(i, j)] = tuple((nr + m, _eps(a, b) * a[m]) for m in range(6) if a[m])
        for m in range(6):
            c = int(rs.form(a, rs.simple_roots[m]))
            if c:
                table[(nr + m, i)] = ((i, c),)
                table[(i, nr + m)] = ((i, -c),)
    labels = ["E" + "".join(str(x) if x >= 0 else f"({x})" for x in r) for r in roots] + [f"h{m + 1}" for m in range(6)]
    return LieAlgebraTable(nr + 6, labels, table)


@lru_cache(maxsize=None)
def zeta_signs() -> dict[Vec, int]:
    """Signs s(a) with zeta(E_a) = s(a) E_{zeta a}."""
    rs = e6()
    signs: dict[Vec, int] = {}
    simple = rs.simple_roots

    def zeta(r: Sequence[int]) -> Vec:
        out = [0] * 6
        for n, m in ZETA_NODES.items():
            out[m - 1] = r[n - 1]
        return tuple(out)

    for sgn in (1, -1):
        for r in sorted((r for r in rs.roots if sgn * sum(r) > 0), key=lambda r: abs(sum(r))):
            if abs(sum(r)) == 1:
                signs[r] = 1
                continue
            for s in simple:
                si = tuple(sgn * x for x in s)
                b = tuple(x - y for x, y in zip(r, si))
                if b in signs:
                    signs[r] = _eps(b, si) * _eps(zeta(b), zeta(si)) * signs[b]
                    break
            else:
                raise SelfCheckError(f"no predecessor found for root {r}")
    return signs


ZETA_NODES_INV = {m: n for n, m in ZETA_NODES.items()}


def _zeta_elem(x: Mapping[int, object]) -> Elem:
    rs = e6()
    index = {r: k for k, r in enumerate(rs.roots)}
    signs = zeta_signs()
    nr = len(rs.roots)
    out: Elem = {}
    for k, c in x.items():
        if k < nr:
            r = rs.roots[k]
            zr = tuple(r[ZETA_NODES_INV[m] - 1] for m in range(1, 7))
            out[index[zr]] = out.get(index[zr], 0) + signs[r] * c
        else:
            m = ZETA_NODES[k - nr + 1] - 1
            out[nr + m] = out.get(nr + m, 0) + c
    return out


def check_zeta_automorphism() -> None:
    t = e6_table()
    for i in range(t.dim):
        for j in range(t.dim):
            lhs = _zeta_elem(t.bracket({i: 1}, {j: 1}))
            rhs = t.bracket(_zeta_elem({i: 1}), _zeta_elem({j: 1}))
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                raise SelfCheckError(f"zeta is not an automorphism on {t.labels[i]}, {t.labels[j]}")


# --- folded algebra -------------------------------------------------------------


@dataclass
class GradedF4:
    """The 52-dimensional fixed algebra with integer structure constants in the folded basis."""

    labels: list[str]
    roots: list[Vec | None]  # F4 root of each basis vector (None for the Cartan part)
    e6_vectors: list[Elem]
    structure: np.ndarray  # [i, j, k]: coefficient of b_k in [b_i, b_j]
    cartan_pairing: list[list[int]]  # [i][j] = a_i(H_j)
    g_dim: int = 24
    v_dim: int = 28
    _sa: np.ndarray | None = field(default=None, repr=False)
    _sb: np.ndarray | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index_of_root(self, r: Sequence[int]) -> int:
        return self.roots.index(tuple(r))

    def theta_sign(self, k: int) -> int:
        r = self.roots[k]
        return 1 if r is None or height(r) % 2 == 0 else -1

    def bracket(self, x: Sequence, y: Sequence) -> list:
        """Bracket of two dense 52-vectors (any exact scalar type)."""
        xi = [(i, a) for i, a in enumerate(x) if a]
        yj = [(j, b) for j, b in enumerate(y) if b]
        out = [0] * self.dim
        for i, a in xi:
            row = self.structure[i]
            for j, b in yj:
                col = row[j]
                for k in np.flatnonzero(col):
                    out[k] += a * b * int(col[k])
        return out

    def ad(self, x: Sequence) -> list[list]:
        """Matrix of ad x, columns indexed by the basis."""
        m = [[0] * self.dim for _ in range(self.dim)]
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.structure[i]
            for j, k in zip(*np.nonzero(row)):
                m[k][j] += a * int(row[j, k])
        return m

    def split_tensors(self) -> tuple[np.ndarray, np.ndarray]:
        """SA[j] : V -> g block and SB[j] : g -> V block of ad of the j-th V basis vector."""
        if self._sa is None:
            g, n = self.g_dim, self.dim
            s = self.structure
            sa = np.zeros((self.v_dim, g, self.v_dim), dtype=np.int64)
            sb = np.zeros((self.v_dim, self.v_dim, g), dtype=np.int64)
            for j in range(self.v_dim):
                vj = g + j
                sa[j] = s[vj, g:n, :g].T
                sb[j] = s[vj, :g, g:n].T
            self._sa, self._sb = sa, sb
        return self._sa, self._sb

    def embed_v(self, v: Sequence) -> list:
        return [0] * self.g_dim + list(v)

    def v_part(self, x: Sequence) -> list:
        if any(x[: self.g_dim]):
            raise DomainError("element has a nonzero component in g")
        return list(x[self.g_dim :])


def _folded_basis() -> tuple[list[str], list[Vec | None], list[Elem]]:
    rs = e6()
    nr = len(rs.roots)
    index = {r: k for k, r in enumerate(rs.roots)}
    signs = zeta_signs()
    labels, roots, vecs = [], [], []
    for i in range(1, 5):
        labels.append(f"H{i}")
        roots.append(None)
        vecs.append({nr + n - 1: 1 for n in FOLDING[i]})
    f4_roots = [r for r in f4().roots if height(r) % 2 == 0] + [row.alpha for row in phi_v_table()]
    for a in f4_roots:
        fibre = [g for g in rs.roots if restrict(g) == a]
        gamma = fibre[0]
        vec = {index[gamma]: 1}
        if len(fibre) == 2:
            zg = fibre[1]
            vec[index[zg]] = signs[gamma]
        elif signs[gamma] != 1:
            raise SelfCheckError(f"zeta acts by -1 on the fixed root space of {gamma}")
        labels.append("X" + "".join(str(x) if x >= 0 else f"({x})" for x in a))
        roots.append(tuple(a))
        vecs.append(vec)
    return labels, roots, vecs


@lru_cache(maxsize=None)
def build_folded_f4(check: bool = True) -> GradedF4:
    t = e6_table()
    rs = e6()
    nr = len(rs.roots)
    labels, roots, vecs = _folded_basis()
    n = len(labels)
    if n != 52:
        raise SelfCheckError(f"folded algebra has dimension {n}, expected 52")
    # leading coordinate of each folded basis vector
    lead: dict[int, int] = {}
    for k, vec in enumerate(vecs):
        key = min(vec) if roots[k] is not None else nr + FOLDING[k + 1][0] - 1
        lead[key] = k

    def decompose(x: Elem) -> list[int]:
        coeffs = [0] * n
        for key, k in lead.items():
            c = x.get(key, 0)
            if c:
                coeffs[k] = c
        recon: Elem = {}
        for k, c in enumerate(coeffs):
            for m, v in vecs[k].items():
                recon[m] = recon.get(m, 0) + c * v
        if {m: v for m, v in recon.items() if v} != {m: v for m, v in x.items() if v}:
            raise SelfCheckError("bracket leaves the fixed subalgebra")
        return coeffs

    structure = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            c = decompose(t.bracket(vecs[i], vecs[j]))
            structure[i, j] = c
            structure[j, i] = [-x for x in c]

    pairing = []
    for i in range(4):
        simple = roots.index(tuple(int(m == i) for m in range(4)))
        pairing.append([int(structure[j, simple, simple]) for j in range(4)])
    alg = GradedF4(labels, roots, vecs, structure, pairing)
    if check:
        _check_grading(alg)
    return alg


def _check_grading(alg: GradedF4) -> None:
    g = alg.g_dim
    if (g, alg.v_dim, alg.dim) != (24, 28, 52):
        raise SelfCheckError("graded dimensions differ from (24, 28, 52)")
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k in np.flatnonzero(alg.structure[i, j]):
                if alg.theta_sign(i) * alg.theta_sign(j) != alg.theta_sign(k):
                    raise SelfCheckError("bracket does not respect the grading")
    for k, r in enumerate(alg.roots):
        if r is None:
            continue
        for j in range(4):
            h = [0] * alg.dim
            h[j] = 1
            br = alg.bracket(h, _unit(alg.dim, k))
            expected = sum(r[i] * alg.cartan_pairing[i][j] for i in range(4))
            if br != [expected * int(m == k) for m in range(alg.dim)]:
                raise SelfCheckError(f"{alg.labels[k]} is not a weight vector for H{j + 1}")


def _unit(n: int, k: int) -> list[int]:
    v = [0] * n
    v[k] = 1
    return v


# --- sl2 triple and Kostant slice ------------------------------------------------


@dataclass(frozen=True)
class Sl2Triple:
    E: tuple
    X: tuple
    F: tuple


def _simple_index(alg: GradedF4, i: int, sign: int = 1) -> int:
    return alg.index_of_root(tuple(sign * int(m == i) for m in range(4)))


@lru_cache(maxsize=None)
def sl2_triple() -> Sl2Triple:
    alg = build_folded_f4()
    n = alg.dim
    E = [0] * n
    for i in range(4):
        E[_simple_index(alg, i)] = 1
    # a_i(X) = 2 for every simple root, X in the span of H_1..H_4
    xs = solve([[Fraction(alg.cartan_pairing[i][j]) for j in range(4)] for i in range(4)], [Fraction(2)] * 4)
    X = [Fraction(0)] * n
    X[:4] = xs
    # F = sum f_i X_{-a_i} with [E, F] = X
    cols = [alg.bracket(E, _unit(n, _simple_index(alg, i, -1))) for i in range(4)]
    fs = solve([[Fraction(c[k]) for c in cols] for k in range(n)], X)
    F = [Fraction(0)] * n
    for i in range(4):
        F[_simple_index(alg, i, -1)] = fs[i]
    E = [Fraction(x) for x in E]
    trip = Sl2Triple(tuple(E), tuple(X), tuple(F))
    _check_sl2(alg, trip)
    return trip


def _check_sl2(alg: GradedF4, t: Sl2Triple) -> None:
    E, X, F = t.E, t.X, t.F
    if alg.bracket(X, E) != [2 * e for e in E]:
        raise SelfCheckError("[X, E] != 2E")
    if alg.bracket(X, F) != [-2 * f for f in F]:
        raise SelfCheckError("[X, F] != -2F")
    if alg.bracket(E, F) != list(X):
        raise SelfCheckError("[E, F] != X")
    if any(X[alg.g_dim :]) or any(F[: alg.g_dim]):
        raise SelfCheckError("X must lie in g and F in V")


EXPONENTS = (1, 5, 7, 11)
SLICE_WEIGHTS = (2, 6, 8, 12)


def _primitive(v: Sequence[Fraction]) -> list[int]:
    den = lcm(*(Fraction(x).denominator for x in v))
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    return [-x for x in ints] if first < 0 else ints


@lru_cache(maxsize=None)
def kostant_basis() -> tuple[tuple[int, ...], ...]:
    """F_1..F_4 spanning the centralizer of F, as integer 52-vectors, ordered by exponent."""
    alg = build_folded_f4()
    trip = sl2_triple()
    adF = alg.ad(trip.F)
    out = []
    for m in EXPONENTS:
        idx = [k for k, r in enumerate(alg.roots) if r is not None and height(r) == -m]
        sub = [[adF[row][k] for k in idx] for row in range(alg.dim)]
        ker = nullspace(sub)
        if len(ker) != 1:
            raise SelfCheckError(f"centralizer of F has dimension {len(ker)} at height {-m}")
        vec = [0] * alg.dim
        for k, c in zip(idx, _primitive(ker[0])):
            vec[k] = c
        out.append(tuple(vec))
    return tuple(out)


def slice_point(c: Sequence) -> list:
    """sigma(c) = E + sum c_i F_i, as a V-coordinate vector of length 28."""
    alg = build_folded_f4()
    E = sl2_triple().E
    v = list(E)
    for ci, Fi in zip(c, kostant_basis()):
        ci = Fraction(ci)
        for k, x in enumerate(Fi):
            if x:
                v[k] += ci * x
    return alg.v_part(v)


# --- invariants ----------------------------------------------------------------


def _integral(v: Sequence) -> tuple[list[int], int]:
    fr = [Fraction(x) for x in v]
    den = lcm(1, *(x.denominator for x in fr))
    return [int(x * den) for x in fr], den


def _blocks(v_int: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    sa, sb = build_folded_f4().split_tensors()
    w = np.array(v_int, dtype=object)
    A = np.tensordot(w, sa.astype(object), axes=(0, 0))
    B = np.tensordot(w, sb.astype(object), axes=(0, 0))
    return A, B


def trace_invariants(v: Sequence) -> tuple[Fraction, ...]:
    """(T2, T6, T8, T12) with T_2k = tr((ad v)^2k) on the 52-dimensional algebra."""
    w, den = _integral(v)
    A, B = _blocks(w)
    M = A.dot(B)
    out = []
    P = M
    power = 1
    for k in (1, 3, 4, 6):
        while power < k:
            P = P.dot(M)
            power += 1
        out.append(Fraction(2 * int(np.trace(P)), den ** (2 * k)))
    return tuple(out)


def lie_discriminant(v: Sequence) -> Fraction:
    """Coefficient of t^4 in the characteristic polynomial of ad v, i.e. det(AB) for the off-diagonal blocks."""
    w, den = _integral(v)
    A, B = _blocks(w)
    M = A.dot(B)
    d = bareiss_det([[int(x) for x in row] for row in M])
    return Fraction(d, den**48)


def adjoint_kernel_dim(v: Sequence) -> int:
    w, _ = _integral(v)
    A, B = _blocks(w)
    return 52 - rank([[int(x) for x in r] for r in A]) - rank([[int(x) for x in r] for r in B])


def adjoint_charpoly_coefficients(v: Sequence) -> tuple[Fraction, ...]:
    """Fallback invariants: coefficients of t^(52-d) in det(t - ad v) for d = 2, 6, 8, 12."""
    alg = build_folded_f4()
    cp = charpoly(alg.ad([Fraction(x) for x in alg.embed_v(v)]))
    return tuple(cp[52 - d] for d in SLICE_WEIGHTS)


@dataclass(frozen=True)
class InvariantChart:
    polys: tuple[GradedPoly4, ...]
    kind: str  # "trace" or "charpoly"

    def __call__(self, c: Sequence) -> tuple[Fraction, ...]:
        return tuple(p(c) for p in self.polys)

    def leading(self) -> tuple[Fraction, ...]:
        return tuple(p.coefficient(tuple(int(m == i) for m in range(4))) for i, p in enumerate(self.polys))

    def invert(self, t: Sequence) -> tuple[Fraction, ...]:
        c = [Fraction(0)] * 4
        lead = self.leading()
        for i, p in enumerate(self.polys):
            mono = tuple(int(m == i) for m in range(4))
            rest = GradedPoly4(p.degree, {k: v for k, v in p.coeffs.items() if k != mono})
            c[i] = (Fraction(t[i]) - rest(c)) / lead[i]
        return tuple(c)

    def is_triangular(self) -> bool:
        for i, p in enumerate(self.polys):
            for mono in p.coeffs:
                if any(mono[j] for j in range(i + 1, 4)):
                    return False
        return all(self.leading())


class ChartDegenerate(RuntimeError):
    pass


_CHART_SAMPLES = [
    (1, 2, -1, 3), (2, -1, 1, 1), (-1, 1, 2, -2), (3, 1, -2, 1), (1, -3, 1, 2), (-2, 2, 3, 1),
    (2, 3, 1, -1), (1, 1, -3, -2), (-3, -1, 2, 3), (2, -2, -1, 4), (4, 1, 1, -3), (1, 4, -2, 1),
]


def _chart_from(fn: Callable[[Sequence], Sequence], kind: str) -> InvariantChart:
    values = [(c, fn(slice_point(c))) for c in _CHART_SAMPLES]
    polys = tuple(interpolate_graded([(c, val[i]) for c, val in values], d) for i, d in enumerate(SLICE_WEIGHTS))
    return InvariantChart(polys, kind)


@lru_cache(maxsize=None)
def invariant_chart() -> InvariantChart:
    chart = _chart_from(trace_invariants, "trace")
    if chart.is_triangular():
        return chart
    chart = _chart_from(adjoint_charpoly_coefficients, "charpoly")
    if chart.is_triangular():
        return chart
    raise ChartDegenerate("neither power traces nor characteristic coefficients give a triangular chart")


def chart_invariants(v: Sequence) -> tuple[Fraction, ...]:
    if invariant_chart().kind == "trace":
        return trace_invariants(v)
    return adjoint_charpoly_coefficients(v)


def slice_coordinates(v: Sequence) -> tuple[Fraction, ...]:
    return invariant_chart().invert(chart_invariants(v))


# --- exponentials ------------------------------------------------------------


def exp_ad(n: Sequence, v: Sequence) -> list:
    """exp(ad n) applied to v, for n in g with ad n nilpotent; v and the result are 52-vectors."""
    alg = build_folded_f4()
    if any(n[alg.g_dim :]):
        raise DomainError("exp_ad expects an element of g")
    out = [Fraction(x) for x in v]
    term = list(out)
    for j in range(1, alg.dim + 2):
        term = alg.bracket(n, term)
        if not any(term):
            return out
        out = [a + Fraction(b) / factorial(j) for a, b in zip(out, term)]
    raise DomainError("ad n is not nilpotent")


def root_vector(r: Sequence[int], scale=1) -> list:
    alg = build_folded_f4()
    v = [0] * alg.dim
    v[alg.index_of_root(tuple(r))] = scale
    return v


# --- the isomorphism with W tensor the standard representation of SL2 --------------------

BETA_SIMPLE = ((0, 1, 1, 0), (0, 0, 1, 1), (1, 1, 0, 0), (1, 1, 2, 0))


def _e(r: int, c: int, n: int = 6) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    m[r - 1][c - 1] = 1
    return m


def _lin(*terms) -> list[list[int]]:
    n = len(terms[0][1])
    out = [[0] * n for _ in range(n)]
    for coef, m in terms:
        for i in range(n):
            for j in range(n):
                out[i][j] += coef * m[i][j]
    return out


# images of the raising and lowering generators for beta_1..beta_4: (sp6 matrix, sl2 matrix)
_SP6_E = (
    _lin((1, _e(1, 2)), (-1, _e(5, 4))),
    _lin((1, _e(2, 3)), (-1, _e(6, 5))),
    _e(3, 6),
)
_SP6_F = (
    _lin((1, _e(2, 1)), (-1, _e(4, 5))),
    _lin((1, _e(3, 2)), (-1, _e(5, 6))),
    _e(6, 3),
)
_Z6 = [[0] * 6 for _ in range(6)]
_Z2 = [[0, 0], [0, 0]]
SL2_E = [[0, 1], [0, 0]]
SL2_F = [[0, 0], [1, 0]]


def _commutator(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] - b[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class Generator:
    name: str
    element: tuple  # 52-vector in g
    sp6: tuple
    sl2: tuple


@lru_cache(maxsize=None)
def g_generators() -> tuple[Generator, ...]:
    """e_i, f_i and h_i = [e_i, f_i] for the simple roots of C3 x A1, with their matrix images."""
    alg = build_folded_f4()
    gens = []
    for i, beta in enumerate(BETA_SIMPLE):
        e = root_vector(beta)
        fv = root_vector(tuple(-x for x in beta))
        h = alg.bracket(e, fv)
        kappa = Fraction(alg.bracket(h, e)[alg.index_of_root(beta)], 2)
        f = [Fraction(x) / kappa for x in fv]
        h = [Fraction(x) / kappa for x in h]
        if i < 3:
            me, mf, ne, nf = _SP6_E[i], _SP6_F[i], _Z2, _Z2
        else:
            me, mf, ne, nf = _Z6, _Z6, SL2_E, SL2_F
        mh, nh = _commutator(me, mf), _commutator(ne, nf)
        for name, x, m, nn in ((f"e{i + 1}", e, me, ne), (f"f{i + 1}", f, mf, nf), (f"h{i + 1}", h, mh, nh)):
            gens.append(Generator(name, tuple(Fraction(a) for a in x), tuple(map(tuple, m)), tuple(map(tuple, nn))))
    return tuple(gens)


def rho_matrix(sp6: Sequence[Sequence], sl2: Sequence[Sequence]) -> list[list[Fraction]]:
    """28x28 action of (M, N) in sp6 + sl2 on V = W x Q^2, coordinates (w1, w2)."""
    rw = lie_action_on_coords(sp6)
    out = [[Fraction(0)] * 28 for _ in range(28)]
    for a in range(2):
        for i in range(14):
            for j in range(14):
                out[14 * a + i][14 * a + j] += rw[i][j]
            for b in range(2):
                out[14 * a + i][14 * b + i] += Fraction(sl2[a][b])
    return out


def _coord_index(factor: int, name: str) -> int:
    return 14 * (factor - 1) + W_COORDS.index(name)


@lru_cache(maxsize=None)
def v_dictionary() -> dict[int, tuple[int, str]]:
    """Row index -> (1 or 2, W coordinate), with the anchor row 14 (alpha_1) landing in w1."""
    rows = phi_v_table()
    anchor = rows[13]
    return weight_dictionary(((r.index, r.l) for r in rows), anchor_sign=anchor.l[3])


ANCHOR_ROW = 14


@lru_cache(maxsize=None)
def construct_w_isomorphism() -> tuple[tuple[Fraction, ...], ...]:
    """28x28 matrix Psi (rows: (w1, w2) coordinates, columns: V basis in table order)."""
    alg = build_folded_f4()
    g = alg.g_dim
    dic = v_dictionary()
    gens = g_generators()
    rhos = [rho_matrix(gn.sp6, gn.sl2) for gn in gens]
    scale: dict[int, Fraction] = {ANCHOR_ROW: Fraction(1)}
    queue = [ANCHOR_ROW]
    while queue:
        r = queue.pop(0)
        src = _coord_index(*dic[r])
        for gn, rho in zip(gens, rhos):
            br = alg.bracket(gn.element, _unit(alg.dim, g + r - 1))
            nz = [k for k, x in enumerate(br) if x]
            if not nz:
                continue
            if len(nz) != 1 or nz[0] < g:
                raise SelfCheckError("generator does not map a weight vector to a weight vector of V")
            target = nz[0] - g + 1
            kappa = br[nz[0]]
            dst = _coord_index(*dic[target])
            image = [rho[k][src] for k in range(28)]
            if any(x for k, x in enumerate(image) if k != dst):
                raise SelfCheckError("matrix action leaves the expected weight line")
            value = scale[r] * image[dst] / kappa
            if target in scale:
                if scale[target] != value:
                    raise SelfCheckError(f"inconsistent scaling propagated to row {target}")
            else:
                scale[target] = value
                queue.append(target)
    if len(scale) != 28:
        raise SelfCheckError("propagation did not reach every weight of V")
    psi = [[Fraction(0)] * 28 for _ in range(28)]
    for r, s in scale.items():
        psi[_coord_index(*dic[r])][r - 1] = s
    return tuple(tuple(row) for row in psi)


def psi(v: Sequence) -> VElement:
    """Image of a V-coordinate vector (length 28) in W x Q^2."""
    m = construct_w_isomorphism()
    coords = [sum((m[i][j] * v[j] for j in range(28) if v[j] and m[i][j]), Fraction(0)) for i in range(28)]
    return VElement.from_coords(coords)


def equivariance_residuals() -> list[tuple[str, int, int]]:
    """(generator, basis index, number of nonzero residual entries) for every generator and basis vector of V."""
    alg = build_folded_f4()
    g = alg.g_dim
    m = construct_w_isomorphism()
    out = []
    for gn in g_generators():
        rho = rho_matrix(gn.sp6, gn.sl2)
        for j in range(28):
            br = alg.v_part(alg.bracket(gn.element, _unit(alg.dim, g + j)))
            lhs = [sum(m[i][k] * br[k] for k in range(28) if br[k]) for i in range(28)]
            col = [m[i][j] for i in range(28)]
            rhs = [sum(rho[i][k] * col[k] for k in range(28) if col[k]) for i in range(28)]
            out.append((gn.name, j + 1, sum(1 for a, b in zip(lhs, rhs) if a != b)))
    return out


def denominator_bound() -> int:
    """Least common denominator of the sl2 triple, the slice basis and Psi."""
    trip = sl2_triple()
    vals = list(trip.E) + list(trip.X) + list(trip.F)
    vals += [x for row in construct_w_isomorphism() for x in row]
    return lcm(1, *(Fraction(x).denominator for x in vals))


def group_element_images(gen: Generator, t) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """exp(t M), exp(t N) for a nilpotent generator."""

    def mexp(m):
        n = len(m)
        out = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        term = [row[:] for row in out]
        for k in range(1, n + 1):
            term = [[sum(term[i][l] * m[l][j] for l in range(n)) * Fraction(t) / k for j in range(n)] for i in range(n)]
            if not any(any(r) for r in term):
                break
            out = [[a + b for a, b in zip(r, s)] for r, s in zip(out, term)]
        return out

    return mexp(gen.sp6), mexp(gen.sl2)


# --- experimental --------------------------------------------------------------


def experimental_discriminant_calibration(
    candidate: Callable[[Sequence], Sequence], curve_discriminant: Callable[[Sequence], object], points: Sequence[Sequence]
) -> dict:
    """Compare the Lie discriminant on the slice with a curve discriminant pulled back along a candidate chart.

    Experimental.  A correct graded identification of slice coordinates with
    curve coefficients makes the ratio constant; the report lists the ratios
    observed on the given points.
    """
    ratios = []
    for c in points:
        dl = lie_discriminant(slice_point(c))
        dc = Fraction(curve_discriminant(candidate(c)))
        ratios.append(None if dc == 0 else dl / dc)
    finite = {r for r in ratios if r is not None}
    return {"ratios": ratios, "constant": len(finite) == 1, "experimental": True}
