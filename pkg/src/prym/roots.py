"""Root data for E6 and F4, the odd-height weight table and Weyl computations mod 2.

E6 is labelled with the chain 1-3-4-5-6 and node 2 attached to node 4; the
diagram involution zeta swaps 1<->6 and 3<->5.  Folding sends the E6 nodes
{2}, {4}, {3,5}, {1,6} to the F4 simple roots a1, a2, a3, a4 (a1, a2 long).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

Vec = tuple[int, ...]


@dataclass(frozen=True)
class RootSystem:
    name: str
    rank: int
    roots: tuple[Vec, ...]
    pairing: tuple[tuple[Q, ...], ...]  # symmetric bilinear form on simple roots

    @property
    def simple_roots(self) -> tuple[Vec, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @property
    def positive_roots(self) -> tuple[Vec, ...]:
        return tuple(r for r in self.roots if sum(r) > 0)

    def form(self, a: Sequence, b: Sequence) -> Q:
        return sum(
            (a[i] * b[j] * self.pairing[i][j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j]),
            Q(0),
        )

    def cartan_matrix(self) -> list[list[int]]:
        """Entry (i, j) is <a_i, a_j^vee> = 2(a_i, a_j)/(a_j, a_j)."""
        n = self.rank
        return [[int(2 * self.pairing[i][j] / self.pairing[j][j]) for j in range(n)] for i in range(n)]

    def highest_root(self) -> Vec:
        return max(self.roots, key=lambda r: (sum(r), r))

    def reflect(self, i: int, v: Sequence) -> Vec:
        a = self.simple_roots[i]
        c = 2 * self.form(v, a) / self.pairing[i][i]
        return tuple(int(x - c * y) for x, y in zip(v, a))

    def is_long(self, r: Vec) -> bool:
        return self.form(r, r) == max(self.pairing[i][i] for i in range(self.rank))


def _generate_roots(pairing: Sequence[Sequence[Q]]) -> tuple[Vec, ...]:
    n = len(pairing)
    tmp = RootSystem("tmp", n, (), tuple(tuple(Q(x) for x in row) for row in pairing))
    seen = set(tmp.simple_roots)
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for i in range(n):
            w = tmp.reflect(i, v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return tuple(seen)


def _ordered(roots: Iterable[Vec]) -> tuple[Vec, ...]:
    """Positive roots by height then lexicographically, followed by their negatives."""
    pos = sorted((r for r in roots if sum(r) > 0), key=lambda r: (sum(r), r))
    return tuple(pos) + tuple(tuple(-x for x in r) for r in pos)


E6_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4))
ZETA_NODES = {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}

# F4 simple root -> E6 nodes in its fibre
FOLDING = {1: (2,), 2: (4,), 3: (3, 5), 4: (1, 6)}

F4_BOURBAKI_CARTAN = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]


@lru_cache(maxsize=None)
def e6() -> RootSystem:
    pairing = [[Q(0)] * 6 for _ in range(6)]
    for i in range(6):
        pairing[i][i] = Q(2)
    for a, b in E6_EDGES:
        pairing[a - 1][b - 1] = pairing[b - 1][a - 1] = Q(-1)
    pairing_t = tuple(tuple(r) for r in pairing)
    return RootSystem("E6", 6, _ordered(_generate_roots(pairing_t)), pairing_t)


def _f4_pairing() -> tuple[tuple[Q, ...], ...]:
    p = [[Q(0)] * 4 for _ in range(4)]
    p[0][0] = p[1][1] = Q(2)
    p[2][2] = p[3][3] = Q(1)
    p[0][1] = p[1][0] = Q(-1)
    p[1][2] = p[2][1] = Q(-1)
    p[2][3] = p[3][2] = Q(-1, 2)
    return tuple(tuple(r) for r in p)


@lru_cache(maxsize=None)
def f4_from_cartan() -> RootSystem:
    """F4 generated directly from its Bourbaki inner products (independent of folding)."""
    pairing = _f4_pairing()
    return RootSystem("F4", 4, _ordered(_generate_roots(pairing)), pairing)


def restrict(root: Sequence[int]) -> Vec:
    """Restriction X*(T_E) -> X*(T) in simple-root coordinates."""
    return tuple(sum(root[n - 1] for n in FOLDING[i]) for i in range(1, 5))


def zeta_root(root: Sequence[int]) -> Vec:
    out = [0] * 6
    for n, m in ZETA_NODES.items():
        out[m - 1] = root[n - 1]
    return tuple(out)


@lru_cache(maxsize=None)
def fold_e6_to_f4() -> tuple[RootSystem, dict[int, tuple[int, ...]]]:
    """F4 as the image of the E6 roots under restriction, with the fibres over simple roots."""
    images = {restrict(r) for r in e6().roots}
    f4 = RootSystem("F4", 4, _ordered(images), _f4_pairing())
    return f4, dict(FOLDING)


def f4() -> RootSystem:
    return fold_e6_to_f4()[0]


def height(root: Sequence[int]) -> int:
    return sum(root)


# --- the weight table of V -----------------------------------------------------

# beta basis of the C3 x A1 subsystem, in alpha coordinates
BETA = ((0, 1, 1, 0), (0, 0, 1, 1), (1, 1, 0, 0), (1, 1, 2, 0))

# Stored transcription: (beta/2 coordinates, alpha coordinates, L coordinates)
TABLE_V = (
    ((2, 4, 3, 1), (2, 3, 4, 2), (1, 1, 1, 1)),
    ((2, 4, 1, 1), (1, 2, 4, 2), (1, 1, -1, 1)),
    ((2, 2, 1, 1), (1, 2, 3, 1), (1, 0, 0, 1)),
    ((2, 4, 3, -1), (1, 2, 2, 2), (1, 1, 1, -1)),
    ((0, 2, 1, 1), (1, 1, 2, 1), (0, 1, 0, 1)),
    ((2, 0, 1, 1), (1, 2, 2, 0), (1, -1, 1, 1)),
    ((2, 4, 1, -1), (0, 1, 2, 2), (1, 1, -1, -1)),
    ((2, 2, 1, -1), (0, 1, 1, 1), (1, 0, 0, -1)),
    ((0, 0, 1, 1), (1, 1, 1, 0), (0, 0, 1, 1)),
    ((2, 0, -1, 1), (0, 1, 2, 0), (1, -1, -1, 1)),
    ((0, 2, 1, -1), (0, 0, 0, 1), (0, 1, 0, -1)),
    ((0, 0, -1, 1), (0, 0, 1, 0), (0, 0, -1, 1)),
    ((2, 0, 1, -1), (0, 1, 0, 0), (1, -1, 1, -1)),
    ((-2, 0, 1, 1), (1, 0, 0, 0), (-1, 1, 1, 1)),
    ((2, 0, -1, -1), (-1, 0, 0, 0), (1, -1, -1, -1)),
    ((-2, 0, -1, 1), (0, -1, 0, 0), (-1, 1, -1, 1)),
    ((0, 0, 1, -1), (0, 0, -1, 0), (0, 0, 1, -1)),
    ((0, -2, -1, 1), (0, 0, 0, -1), (0, -1, 0, 1)),
    ((-2, 0, 1, -1), (0, -1, -2, 0), (-1, 1, 1, -1)),
    ((0, 0, -1, -1), (-1, -1, -1, 0), (0, 0, -1, -1)),
    ((-2, -2, -1, 1), (0, -1, -1, -1), (-1, 0, 0, 1)),
    ((-2, -4, -1, 1), (0, -1, -2, -2), (-1, -1, 1, 1)),
    ((-2, 0, -1, -1), (-1, -2, -2, 0), (-1, 1, -1, -1)),
    ((0, -2, -1, -1), (-1, -1, -2, -1), (0, -1, 0, -1)),
    ((-2, -4, -3, 1), (-1, -2, -2, -2), (-1, -1, -1, 1)),
    ((-2, -2, -1, -1), (-1, -2, -3, -1), (-1, 0, 0, -1)),
    ((-2, -4, -1, -1), (-1, -2, -4, -2), (-1, -1, 1, -1)),
    ((-2, -4, -3, -1), (-2, -3, -4, -2), (-1, -1, -1, -1)),
)

PHI_G_POSITIVE_BETA = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (1, 1, 0, 0),
    (0, 1, 1, 0),
    (0, 2, 1, 0),
    (1, 1, 1, 0),
    (1, 2, 1, 0),
    (2, 2, 1, 0),
    (0, 0, 0, 1),
)

HASSE_SUBPOSET = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13)
HASSE_EDGES = frozenset(
    frozenset(e)
    for e in (
        (1, 2), (2, 3), (3, 6), (1, 4), (4, 7), (7, 8), (8, 13),
        (2, 7), (3, 8), (6, 13), (6, 10), (3, 5), (5, 9), (6, 9),
    )
)


def _solve4(m: Sequence[Sequence[Q]], v: Sequence) -> tuple[Q, ...]:
    from .exact.linalg import solve

    return tuple(solve([list(r) for r in m], list(v)))


def beta_coordinates(alpha: Sequence[int]) -> tuple[Q, ...]:
    """Coordinates n_i with alpha = sum n_i beta_i."""
    cols = [[Q(BETA[j][i]) for j in range(4)] for i in range(4)]
    return _solve4(cols, [Q(a) for a in alpha])


def l_coordinates(alpha: Sequence[int]) -> tuple[Q, ...]:
    """Coordinates in L1..L4 with beta1 = L1-L2, beta2 = L2-L3, beta3 = 2L3, beta4 = 2L4."""
    n = beta_coordinates(alpha)
    return (n[0], n[1] - n[0], 2 * n[2] - n[1], 2 * n[3])


@dataclass(frozen=True)
class WeightRow:
    index: int
    beta_half: tuple[int, ...]
    alpha: tuple[int, ...]
    l: tuple[int, ...]

    @property
    def n(self) -> tuple[Q, ...]:
        return tuple(Q(x, 2) for x in self.beta_half)

    @property
    def height(self) -> int:
        return sum(self.alpha)


class TableMismatch(AssertionError):
    pass


@lru_cache(maxsize=None)
def phi_v_table() -> tuple[WeightRow, ...]:
    """The 28 odd-height F4 roots, indexed like the stored table and checked against it."""
    odd = {r for r in f4().roots if height(r) % 2}
    if len(odd) != 28:
        raise TableMismatch(f"expected 28 odd-height roots, found {len(odd)}")
    rows = []
    for idx, (bh, alpha, lc) in enumerate(TABLE_V, start=1):
        if alpha not in odd:
            raise TableMismatch(f"row {idx}: {alpha} is not an odd-height root")
        odd.discard(alpha)
        n = beta_coordinates(alpha)
        if tuple(2 * x for x in n) != bh:
            raise TableMismatch(f"row {idx}: beta/2 coordinates {tuple(2 * x for x in n)} != {bh}")
        if l_coordinates(alpha) != lc:
            raise TableMismatch(f"row {idx}: L coordinates {l_coordinates(alpha)} != {lc}")
        rows.append(WeightRow(idx, bh, alpha, lc))
    if odd:
        raise TableMismatch(f"unmatched roots {sorted(odd)}")
    return tuple(rows)


def row(index: int) -> WeightRow:
    return phi_v_table()[index - 1]


def row_of_alpha(alpha: Sequence[int]) -> int:
    for r in phi_v_table():
        if r.alpha == tuple(alpha):
            return r.index
    raise KeyError(alpha)


def phi_g_positive() -> list[tuple[Q, ...]]:
    """Positive even-height roots in beta coordinates, sorted."""
    even_pos = [r for r in f4().positive_roots if height(r) % 2 == 0]
    return sorted(beta_coordinates(r) for r in even_pos)


def leq(x: int, y: int) -> bool:
    """Whether row x lies below row y: every beta coordinate of y - x is nonnegative."""
    a, b = row(x).beta_half, row(y).beta_half
    return all(q - p >= 0 for p, q in zip(a, b))


def covering_relations(indices: Iterable[int]) -> set[frozenset[int]]:
    idx = sorted(indices)
    rel = set()
    for a, b in product(idx, idx):
        if a == b or not leq(a, b):
            continue
        if any(c not in (a, b) and leq(a, c) and leq(c, b) for c in idx):
            continue
        rel.add(frozenset((a, b)))
    return rel


def phi_w() -> set[tuple[int, int, int]]:
    """Weights of the 14-dimensional symplectic representation in L1..L3."""
    out = set()
    for r in phi_v_table():
        out.add(r.l[:3])
    return out


# --- Weyl group of E6 on the roots, reduced mod 2 ------------------------------

class EnumerationCap(RuntimeError):
    pass


def _simple_reflection_perms(rs: RootSystem) -> list[tuple[int, ...]]:
    index = {r: i for i, r in enumerate(rs.roots)}
    return [tuple(index[rs.reflect(i, r)] for r in rs.roots) for i in range(rs.rank)]


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """p after q."""
    return tuple(p[i] for i in q)


def weyl_group_perms(rs: RootSystem, cap: int = 10**6) -> set[tuple[int, ...]]:
    gens = _simple_reflection_perms(rs)
    ident = tuple(range(len(rs.roots)))
    seen = {ident}
    queue = deque([ident])
    while queue:
        w = queue.popleft()
        for s in gens:
            v = _compose(s, w)
            if v not in seen:
                seen.add(v)
                if len(seen) > cap:
                    raise EnumerationCap(f"Weyl group enumeration exceeded {cap} elements")
                queue.append(v)
    return seen


def perm_to_matrix(rs: RootSystem, perm: Sequence[int]) -> list[list[int]]:
    """Integer matrix (columns = images of simple roots)."""
    index = {r: i for i, r in enumerate(rs.roots)}
    cols = [rs.roots[perm[index[s]]] for s in rs.simple_roots]
    return [[cols[j][i] for j in range(rs.rank)] for i in range(rs.rank)]


def _mod2(m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Pack a 6x6 matrix mod 2 into column bitmasks."""
    n = len(m)
    return tuple(sum(((m[i][j] & 1) << i) for i in range(n)) for j in range(n))


def _apply2(cols: Sequence[int], v: int) -> int:
    out = 0
    j = 0
    while v:
        if v & 1:
            out ^= cols[j]
        v >>= 1
        j += 1
    return out


def _span2(vectors: Iterable[int]) -> set[int]:
    span = {0}
    for v in vectors:
        if v not in span:
            span |= {x ^ v for x in span}
    return span


def _dim2(span: set[int]) -> int:
    return len(span).bit_length() - 1


ZETA_PERM_NODES = tuple(ZETA_NODES[i + 1] - 1 for i in range(6))


def zeta_matrix_mod2() -> tuple[int, ...]:
    return tuple(1 << ZETA_PERM_NODES[j] for j in range(6))


@dataclass(frozen=True)
class WeylMod2Report:
    order_w: int
    order_centralizer: int
    image_dim: int
    fixed_dim: int
    invariant_subspace_dims: tuple[int, ...]
    coxeter_fixed_dim: int
    eta: Q
    identity_in_c: bool

    @property
    def filtration_orders(self) -> tuple[int, ...]:
        return (1, 2**self.image_dim, 2**self.fixed_dim, 2**6)


def _subspaces_f2(n: int) -> list[set[int]]:
    """All subspaces of F_2^n, as sets of bitmask vectors."""
    seen: set[frozenset[int]] = set()
    frontier = [frozenset({0})]
    seen.add(frontier[0])
    while frontier:
        nxt = []
        for s in frontier:
            for v in range(1, 2**n):
                if v in s:
                    continue
                t = frozenset(s | {x ^ v for x in s})
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return [set(s) for s in seen]


@lru_cache(maxsize=None)
def weyl_mod2_report() -> WeylMod2Report:
    rs = e6()
    perms = weyl_group_perms(rs)
    index = {r: i for i, r in enumerate(rs.roots)}
    zeta = tuple(index[zeta_root(r)] for r in rs.roots)
    centralizer = [w for w in perms if _compose(zeta, w) == _compose(w, zeta)]

    z2 = zeta_matrix_mod2()
    basis = [1 << i for i in range(6)]
    image = _span2(v ^ _apply2(z2, v) for v in basis)
    fixed = {v for v in range(64) if _apply2(z2, v) == v}

    mats = [_mod2(perm_to_matrix(rs, w)) for w in centralizer]
    for m in mats:
        for v in basis:
            if _apply2(m, _apply2(z2, v)) != _apply2(z2, _apply2(m, v)):
                raise AssertionError("centralizer element does not commute with zeta mod 2")

    gens_e6 = _simple_reflection_perms(rs)
    folded = [
        _mod2(perm_to_matrix(rs, _compose(*(gens_e6[n - 1] for n in nodes)) if len(nodes) == 2 else gens_e6[nodes[0] - 1]))
        for nodes in FOLDING.values()
    ]
    invariant = sorted(
        _dim2(s) for s in _subspaces_f2(6) if all(_apply2(g, v) in s for g in folded for v in s)
    )

    cox = tuple(range(len(rs.roots)))
    for i in (1, 6, 2, 3, 5, 4):
        cox = _compose(cox, gens_e6[i - 1])
    cox2 = _mod2(perm_to_matrix(rs, cox))
    cox_fixed = {v for v in range(64) if _apply2(cox2, v) == v}

    def fixed_count(m, space):
        return sum(1 for v in space if _apply2(m, v) == v)

    in_c = [fixed_count(m, image) == fixed_count(m, fixed) for m in mats]
    ident = _mod2([[int(i == j) for j in range(6)] for i in range(6)])
    identity_in_c = fixed_count(ident, image) == fixed_count(ident, fixed)
    return WeylMod2Report(
        order_w=len(perms),
        order_centralizer=len(centralizer),
        image_dim=_dim2(image),
        fixed_dim=_dim2(fixed),
        invariant_subspace_dims=tuple(invariant),
        coxeter_fixed_dim=_dim2(cox_fixed),
        eta=Q(sum(in_c), len(centralizer)),
        identity_in_c=identity_in_c,
    )
