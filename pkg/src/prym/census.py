"""Height-ordered census of the integral family, record emission, and a Monte Carlo density check over F_p."""

from __future__ import annotations

import csv
import io
import json
import math
import multiprocessing
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np
from sympy import factorint, integer_nthroot

from .curves import WEIGHTS, chi, discriminants, rational_two_torsion
from .exact import is_prime
from .exact.poly import DomainError

COORDS = ("p2", "p6", "p8", "p12")
CSV_HEADER = (
    "p2", "p6", "p8", "p12",
    "delta_E", "delta_Ehat", "delta",
    "chi_p2", "chi_p6", "chi_p8", "chi_p12",
    "e2_rat", "ehat2_rat", "sqfree_E", "sqfree_Ehat",
)


# --- boxes and filters ------------------------------------------------------------


@dataclass(frozen=True)
class CongruenceFilter:
    modulus: int
    coord: str
    residue: int

    @classmethod
    def parse(cls, text: str) -> "CongruenceFilter":
        """Read 'm:coord:residue', e.g. '2:p2:0'."""
        try:
            m, coord, r = text.split(":")
            m, r = int(m), int(r)
        except ValueError:
            raise ValueError(f"bad congruence filter {text!r}; expected m:coord:residue") from None
        if coord not in COORDS:
            raise ValueError(f"unknown coordinate {coord!r}; choose from {', '.join(COORDS)}")
        if m < 1:
            raise ValueError(f"modulus must be positive in {text!r}")
        return cls(m, coord, r % m)

    def __str__(self) -> str:
        return f"{self.modulus}:{self.coord}:{self.residue}"


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def coordinate_bound(X, d: int) -> int:
    """Largest integer n with n < X^d."""
    t = _frac(X) ** d
    return math.ceil(t) - 1


@dataclass(frozen=True)
class BoxSpec:
    """|p_i| < X^d_i together with finitely many congruence conditions."""

    X: Fraction
    filters: tuple[CongruenceFilter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "X", _frac(self.X))
        if self.X <= 0:
            raise DomainError("the height bound must be positive")

    def bounds(self) -> tuple[int, ...]:
        return tuple(coordinate_bound(self.X, d) for d in WEIGHTS)

    def _conditions(self, coord: str) -> tuple[int, list[int]]:
        fs = [f for f in self.filters if f.coord == coord]
        L = math.lcm(1, *(f.modulus for f in fs))
        ok = [r for r in range(L) if all(r % f.modulus == f.residue for f in fs)]
        return L, ok

    def coordinate_count(self, k: int) -> int:
        n = self.bounds()[k]
        if n < 0:
            return 0
        L, ok = self._conditions(COORDS[k])
        # integers in [-n, n] congruent to r mod L
        return sum((n - r) // L - (-n - 1 - r) // L for r in ok)

    def coordinate_values(self, k: int) -> Iterator[int]:
        n = self.bounds()[k]
        L, ok = self._conditions(COORDS[k])
        for x in range(-n, n + 1):
            if x % L in ok:
                yield x

    def count(self) -> int:
        out = 1
        for k in range(4):
            out *= self.coordinate_count(k)
        return out


def box_count(X, filters: Sequence[CongruenceFilter] = ()) -> int:
    """Integer points of the box before the discriminant filter."""
    return BoxSpec(X, tuple(filters)).count()


# --- the discriminant locus in integers ---------------------------------------------


def _chi_scaled(p2: int, p6: int, p8: int) -> tuple[int, int]:
    """(a, K) with a = 3 * chi_raw_8 and 27 * chi_raw_12 = K - 1728 p12."""
    a = 48 * p8 - p2**4 + 24 * p2 * p6
    K = -2 * p2**6 + 72 * p2**3 * p6 - 432 * p6**2 + 144 * p2**2 * p8
    return a, K


def delta_e_int(p2: int, p6: int, p8: int, p12: int) -> int:
    """Delta_E = 3^21 (4 a^3 + c^2) on integer points."""
    a, K = _chi_scaled(p2, p6, p8)
    c = K - 1728 * p12
    return 3**21 * (4 * a**3 + c * c)


def delta_ehat_int(p8: int, p12: int) -> int:
    return 4 * p8**3 + 27 * p12**2


def _square_root(n: int) -> int | None:
    if n < 0:
        return None
    r, exact = integer_nthroot(n, 2)
    return int(r) if exact else None


def singular_p12(p2: int, p6: int, p8: int, bound: int) -> set[int]:
    """The p12 with |p12| <= bound at which Delta vanishes, solved exactly."""
    out = set()
    if (-4 * p8**3) % 27 == 0:
        s = _square_root(-4 * p8**3 // 27)
        if s is not None:
            out.update(x for x in (s, -s) if abs(x) <= bound)
    a, K = _chi_scaled(p2, p6, p8)
    s = _square_root(-4 * a**3)
    if s is not None:
        for c in (s, -s):
            num = K - c
            if num % 1728 == 0 and abs(num // 1728) <= bound:
                out.add(num // 1728)
    return out


def singular_count(X, filters: Sequence[CongruenceFilter] = ()) -> int:
    """Integer points of the box (after congruences) with Delta = 0."""
    box = BoxSpec(X, tuple(filters))
    b12 = box.bounds()[3]
    L, ok = box._conditions("p12")
    n = 0
    for p2 in box.coordinate_values(0):
        for p6 in box.coordinate_values(1):
            for p8 in box.coordinate_values(2):
                n += sum(1 for x in singular_p12(p2, p6, p8, b12) if x % L in ok)
    return n


# --- records ----------------------------------------------------------------------


def squarefree_away_from_6(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    for q in (2, 3):
        while n % q == 0:
            n //= q
    return all(e == 1 for e in factorint(n).values())


@dataclass(frozen=True)
class CensusRecord:
    b: tuple[int, int, int, int]
    delta_E: int
    delta_Ehat: int
    delta: int
    chi: tuple[int, int, int, int]
    e2_rat: int
    ehat2_rat: int
    sqfree_E: bool
    sqfree_Ehat: bool
    zeta: tuple[tuple[int, tuple[int, ...] | None], ...] = field(default=())

    @classmethod
    def of(cls, b: Sequence[int], zeta_primes: Sequence[int] = ()) -> "CensusRecord":
        de, dh, d = (int(x) for x in discriminants(b))
        if d == 0:
            raise DomainError(f"{tuple(b)} lies on the discriminant locus")
        e2, h2 = rational_two_torsion(b)
        z = tuple((p, _prym_l(b, p)) for p in zeta_primes)
        return cls(
            tuple(int(x) for x in b), de, dh, d, tuple(int(x) for x in chi(b)),
            e2, h2, squarefree_away_from_6(de), squarefree_away_from_6(dh), z,
        )

    def row(self) -> list[str]:
        vals = [*self.b, self.delta_E, self.delta_Ehat, self.delta, *self.chi, self.e2_rat, self.ehat2_rat]
        out = [str(v) for v in vals] + [str(int(self.sqfree_E)), str(int(self.sqfree_Ehat))]
        out += [";".join(map(str, lp)) if lp is not None else "" for _, lp in self.zeta]
        return out

    def to_json(self) -> dict:
        d = dict(zip(COORDS, self.b))
        d.update(delta_E=self.delta_E, delta_Ehat=self.delta_Ehat, delta=self.delta)
        d.update({f"chi_{c}": v for c, v in zip(COORDS, self.chi)})
        d.update(e2_rat=self.e2_rat, ehat2_rat=self.ehat2_rat, sqfree_E=self.sqfree_E, sqfree_Ehat=self.sqfree_Ehat)
        for p, lp in self.zeta:
            d[f"lp_{p}"] = list(lp) if lp is not None else None
        return d

    @classmethod
    def from_json(cls, d: dict) -> "CensusRecord":
        zeta = tuple(
            (int(k[3:]), tuple(v) if v is not None else None) for k, v in d.items() if k.startswith("lp_")
        )
        return cls(
            tuple(d[c] for c in COORDS), d["delta_E"], d["delta_Ehat"], d["delta"],
            tuple(d[f"chi_{c}"] for c in COORDS), d["e2_rat"], d["ehat2_rat"],
            d["sqfree_E"], d["sqfree_Ehat"], zeta,
        )


def _prym_l(b, p: int) -> tuple[int, ...] | None:
    from .zeta import frobenius_data, is_admissible

    if not is_admissible(b, p):
        return None
    return frobenius_data(b, p).l_prym


def _slice_records(args) -> list[CensusRecord]:
    box, p2, zeta_primes = args
    b12 = box.bounds()[3]
    out = []
    for p6 in box.coordinate_values(1):
        for p8 in box.coordinate_values(2):
            bad = singular_p12(p2, p6, p8, b12)
            for p12 in box.coordinate_values(3):
                if p12 not in bad:
                    out.append(CensusRecord.of((p2, p6, p8, p12), zeta_primes))
    return out


def enumerate_census(
    X, filters: Sequence[CongruenceFilter] = (), zeta_primes: Sequence[int] = (), jobs: int = 1
) -> Iterator[CensusRecord]:
    """Records for every integral b with ht(b) < X, Delta(b) != 0 and the congruences, in lexicographic order."""
    box = BoxSpec(X, tuple(filters))
    for p in zeta_primes:
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
    tasks = [(box, p2, tuple(zeta_primes)) for p2 in box.coordinate_values(0)]
    if jobs <= 1 or len(tasks) <= 1:
        for t in tasks:
            yield from _slice_records(t)
        return
    with multiprocessing.get_context("spawn").Pool(jobs) as pool:
        # imap keeps slice order, so output is independent of the worker count
        for chunk in pool.imap(_slice_records, tasks):
            yield from chunk


def subsample(records: Iterable[CensusRecord], k: int, seed: int) -> list[CensusRecord]:
    """k records chosen by a seeded counter-based generator, kept in enumeration order."""
    pool = list(records)
    if k >= len(pool):
        return pool
    rng = np.random.Generator(np.random.Philox(seed))
    idx = np.sort(rng.choice(len(pool), size=k, replace=False))
    return [pool[i] for i in idx]


def emit(records: Iterable[CensusRecord], fmt: str, path, zeta_primes: Sequence[int] = ()) -> int:
    """Write records as csv or jsonl; returns the number written."""
    path = Path(path)
    if fmt not in ("csv", "jsonl"):
        raise ValueError(f"unknown format {fmt!r}")
    n = 0
    try:
        with path.open("w", newline="", encoding="utf-8") as fh:
            if fmt == "csv":
                w = csv.writer(fh, lineterminator="\n")
                w.writerow(list(CSV_HEADER) + [f"lp_{p}" for p in zeta_primes])
                for r in records:
                    w.writerow(r.row())
                    n += 1
            else:
                for r in records:
                    fh.write(json.dumps(r.to_json(), separators=(",", ":")) + "\n")
                    n += 1
    except OSError as e:
        raise OSError(f"could not write census output to {path}: {e}") from e
    return n


def read_jsonl(text: str) -> list[CensusRecord]:
    return [CensusRecord.from_json(json.loads(line)) for line in io.StringIO(text) if line.strip()]


def torsion_fraction(records: Sequence[CensusRecord], size: int = 4) -> float:
    if not records:
        return float("nan")
    return sum(1 for r in records if r.e2_rat == size) / len(records)


# --- Monte Carlo density over F_p --------------------------------------------------------


def sp6_order(p: int) -> int:
    return p**9 * (p**2 - 1) * (p**4 - 1) * (p**6 - 1)


def sl2_order(p: int) -> int:
    return p * (p**2 - 1)


def group_order(p: int) -> int:
    return sp6_order(p) * sl2_order(p)


def full_rank_mod_p(M: np.ndarray, p: int) -> np.ndarray:
    """For a stack of square matrices over F_p, whether each is invertible (batched elimination)."""
    M = np.array(M, dtype=np.int64) % p
    n_mat, n, _ = M.shape
    inv = np.array([0] + [pow(int(x), -1, p) for x in range(1, p)], dtype=np.int64)
    alive = np.ones(n_mat, dtype=bool)
    rows = np.arange(n_mat)
    for col in range(n):
        sub = M[:, col:, col]
        has = sub != 0
        alive &= has.any(axis=1)
        piv = col + np.argmax(has, axis=1)
        # swap pivot rows into place
        top = M[rows, col].copy()
        M[rows, col] = M[rows, piv]
        M[rows, piv] = top
        scale = inv[M[:, col, col]]
        pivot_row = M[:, col, :] * scale[:, None] % p
        factors = M[:, col + 1 :, col]
        M[:, col + 1 :, :] = (M[:, col + 1 :, :] - factors[:, :, None] * pivot_row[:, None, :]) % p
    return alive


def rs_mask_mod_p(V: np.ndarray, p: int, chunk: int = 2000) -> np.ndarray:
    """Nonvanishing of the Lie discriminant mod p for each row of V (points of F_p^28)."""
    from .lie import build_folded_f4

    sa, sb = build_folded_f4().split_tensors()
    sa, sb = sa % p, sb % p
    out = []
    for start in range(0, len(V), chunk):
        w = np.asarray(V[start : start + chunk], dtype=np.int64) % p
        A = np.einsum("nj,jab->nab", w, sa) % p
        B = np.einsum("nj,jab->nab", w, sb) % p
        out.append(full_rank_mod_p(np.matmul(A, B) % p, p))
    return np.concatenate(out) if out else np.zeros(0, dtype=bool)


def slice_rs_count(p: int) -> int:
    """R = #{c in F_p^4 : the slice point sigma(c) is regular semisimple mod p}."""
    from .lie import slice_point

    base = np.array([int(x) for x in slice_point((0, 0, 0, 0))], dtype=np.int64)
    dirs = []
    for i in range(4):
        e = [0, 0, 0, 0]
        e[i] = 1
        diff = [Fraction(x) - y for x, y in zip(slice_point(e), base)]
        if any(d.denominator != 1 for d in diff):
            raise DomainError("slice directions are not integral")
        dirs.append(np.array([int(d) for d in diff], dtype=np.int64))
    grid = np.array(np.meshgrid(*[np.arange(p)] * 4, indexing="ij")).reshape(4, -1).T
    V = base[None, :] + grid @ np.array(dirs)
    return int(rs_mask_mod_p(V % p, p).sum())


@dataclass(frozen=True)
class DensityReport:
    p: int
    samples: int
    seed: int
    hits: int
    slice_count: int
    predicted: float
    observed: float
    z: float

    def passed(self, tol: float = 4.0) -> bool:
        return abs(self.z) <= tol

    def lines(self) -> list[str]:
        d = asdict(self)
        return [f"{k}: {v}" for k, v in d.items()] + [f"within 4 sigma: {self.passed()}"]


MC_MIN_PRIME = 7


def monte_carlo_rs_density(p: int, samples: int, seed: int) -> DensityReport:
    if not is_prime(p) or p < MC_MIN_PRIME:
        raise DomainError(f"p = {p} is not admissible here (need a prime > 5)")
    if samples < 10_000:
        raise DomainError("at least 10^4 samples are required")
    R = slice_rs_count(p)
    predicted = float(Fraction(group_order(p) * R, p**28))
    rng = np.random.Generator(np.random.Philox(seed))
    V = rng.integers(0, p, size=(samples, 28), dtype=np.int64)
    hits = int(rs_mask_mod_p(V, p).sum())
    observed = hits / samples
    sigma = math.sqrt(predicted * (1 - predicted) / samples)
    z = (observed - predicted) / sigma if sigma > 0 else float("inf")
    return DensityReport(p, samples, seed, hits, R, predicted, observed, z)
