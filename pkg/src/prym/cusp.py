"""Cusp-cutting combinatorics on the weights of V: upward-closed sets, certificates, exhaustive check."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .exact.poly import DomainError
from .roots import PHI_G_POSITIVE_BETA, leq, row

N_WEIGHTS = 28
ALL = frozenset(range(1, N_WEIGHTS + 1))


class CuspSet:
    """A subset of the row indices 1..28, stored as a 28-bit mask."""

    __slots__ = ("mask",)

    def __init__(self, members: Iterable[int] = ()):
        m = 0
        for i in members:
            if not 1 <= i <= N_WEIGHTS:
                raise ValueError(f"row index {i} out of range")
            m |= 1 << (i - 1)
        self.mask = m

    @classmethod
    def from_mask(cls, mask: int) -> "CuspSet":
        out = cls()
        out.mask = mask
        return out

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> (i - 1) & 1)

    def __iter__(self):
        return (i for i in range(1, N_WEIGHTS + 1) if i in self)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __eq__(self, other) -> bool:
        if isinstance(other, CuspSet):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def __le__(self, other: "CuspSet") -> bool:
        return self.mask & ~other.mask == 0

    def __or__(self, other: "CuspSet") -> "CuspSet":
        return CuspSet.from_mask(self.mask | other.mask)

    def __sub__(self, other: "CuspSet") -> "CuspSet":
        return CuspSet.from_mask(self.mask & ~other.mask)

    def complement(self) -> "CuspSet":
        return CuspSet.from_mask(((1 << N_WEIGHTS) - 1) & ~self.mask)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


def _as_set(s) -> CuspSet:
    return s if isinstance(s, CuspSet) else CuspSet(s)


def is_upward_closed(s) -> bool:
    s = _as_set(s)
    return all(b in s for a in s for b in ALL if leq(a, b))


def in_family(s) -> bool:
    """Nonempty and upward-closed."""
    s = _as_set(s)
    return len(s) > 0 and is_upward_closed(s)


def lambda_set(m0) -> CuspSet:
    """Maximal elements of the complement; equivalently the alpha with m0 + {alpha} still in the family."""
    m0 = _as_set(m0)
    if not in_family(m0):
        raise DomainError(f"{m0} is not a nonempty upward-closed set")
    rest = list(m0.complement())
    return CuspSet(a for a in rest if not any(b != a and leq(a, b) for b in rest))


# --- certificates ---------------------------------------------------------------


def n_vector(i: int) -> tuple[Fraction, ...]:
    return row(i).n


def _sum_n(indices: Iterable[int], weights: Mapping[int, Fraction] | None = None) -> list[Fraction]:
    out = [Fraction(0)] * 4
    for i in indices:
        w = Fraction(1) if weights is None else weights[i]
        for k, x in enumerate(n_vector(i)):
            out[k] += w * x
    return out


def phi_g_positive_sum() -> tuple[Fraction, ...]:
    return tuple(Fraction(sum(r[k] for r in PHI_G_POSITIVE_BETA)) for k in range(4))


@dataclass(frozen=True)
class GoodnessCertificate:
    m0: CuspSet
    m1: CuspSet
    f: Mapping[int, Fraction] = field(hash=False)

    def margin(self) -> tuple[Fraction, ...]:
        """The four sums that must be strictly positive."""
        base = phi_g_positive_sum()
        s0 = _sum_n(self.m0)
        s1 = _sum_n(self.m1, self.f)
        return tuple(b - a + c for b, a, c in zip(base, s0, s1))

    def mass(self) -> Fraction:
        return sum((Fraction(self.f[a]) for a in self.m1), Fraction(0))


def verify_certificate(cert: GoodnessCertificate) -> bool:
    if cert.m0.mask & cert.m1.mask:
        return False
    if set(cert.f) != set(cert.m1) or any(Fraction(v) < 0 for v in cert.f.values()):
        return False
    if cert.mass() >= len(cert.m0):
        return False
    return all(x > 0 for x in cert.margin())


def table_weights(m0) -> tuple[Fraction, ...]:
    """2 (sum over positive roots of g minus sum over m0) in beta coordinates."""
    base = phi_g_positive_sum()
    s0 = _sum_n(_as_set(m0))
    return tuple(2 * (b - a) for b, a in zip(base, s0))


@dataclass(frozen=True)
class TableRow:
    m0: tuple[int, ...]
    m1: tuple[int, ...]
    weights: tuple[int, ...]
    f: tuple[Fraction, ...]

    def certificate(self) -> GoodnessCertificate:
        return GoodnessCertificate(CuspSet(self.m0), CuspSet(self.m1), dict(zip(self.m1, self.f)))


F = Fraction
GOOD_EXAMPLES = (
    TableRow((1, 2, 3, 5, 6, 10), (4, 12), (2, 8, 6, -4), (F(0), F(5))),
    TableRow((1, 2, 3, 5, 6, 9), (4, 10, 14), (4, 8, 4, -4), (F(0), F(7, 2), F(3, 2))),
    TableRow((1, 2, 3, 4, 5, 6, 7, 8, 10, 13), (9, 11, 15), (-6, -2, 0, 0), (F(19, 4), F(9, 8), F(25, 8))),
    TableRow((1, 2, 3, 4, 5, 6, 7, 8, 9, 13), (10, 11, 14), (-4, -2, -2, 0), (F(15, 4), F(35, 8), F(13, 8))),
    TableRow((1, 2, 3, 4, 5, 6, 7, 8, 9), (10, 11, 13, 14), (-2, -2, -1, -1), (F(103, 32), F(21, 16), F(41, 32), F(23, 8))),
)


class CertificateTransferError(ValueError):
    pass


@dataclass(frozen=True)
class Transfer:
    """A certificate for m0' that covers every family member between m0'' and m0'."""

    m0pp: CuspSet
    base: GoodnessCertificate
    g: Mapping[int, int] = field(hash=False)

    def covers(self, m0) -> bool:
        m0 = _as_set(m0)
        return self.m0pp <= m0 <= self.base.m0

    def certificate_for(self, m0) -> GoodnessCertificate:
        m0 = _as_set(m0)
        if not self.covers(m0):
            raise CertificateTransferError(f"{m0} is not between {self.m0pp} and {self.base.m0}")
        removed = set(self.base.m0 - m0)
        f = {a: Fraction(self.base.f[a]) - sum(1 for x, y in self.g.items() if y == a and x in removed) for a in self.base.m1}
        return GoodnessCertificate(m0, self.base.m1, f)


def transfer_certificate(m0pp, m0p, m1p, fp: Mapping[int, Fraction], g: Mapping[int, int]) -> Transfer:
    """Check the two conditions on g and return a transfer usable for every m0 with m0pp <= m0 <= m0p."""
    m0pp, m0p, m1p = _as_set(m0pp), _as_set(m0p), _as_set(m1p)
    base = GoodnessCertificate(m0p, m1p, dict(fp))
    if not m0pp <= m0p:
        raise CertificateTransferError(f"{m0pp} is not contained in {m0p}")
    if not verify_certificate(base):
        raise CertificateTransferError(f"the certificate for {m0p} is not valid")
    diff = set(m0p - m0pp)
    if set(g) != diff:
        raise CertificateTransferError(f"g must be defined exactly on {sorted(diff)}")
    for a, b in g.items():
        if b not in m1p:
            raise CertificateTransferError(f"g({a}) = {b} is not in M1'")
        if not leq(b, a):
            raise CertificateTransferError(f"condition alpha >= g(alpha) fails at {a} -> {b}")
    for b in m1p:
        if Fraction(fp[b]) - sum(1 for y in g.values() if y == b) < 0:
            raise CertificateTransferError(f"condition f'(alpha) - #g^-1(alpha) >= 0 fails at {b}")
    return Transfer(m0pp, base, dict(g))


# --- the exhaustive check -------------------------------------------------------

ELIGIBILITY_CAPS = (11, 14, 15)
FORBIDDEN_PAIR = (9, 10)

# (subset, cocharacter or None); None means the F-restriction criterion
REDUCIBILITY_SUBSETS = (
    ((1, 2, 3, 4, 5, 7, 8, 11), (0, 1, 0, 0)),
    ((1, 2, 3, 4, 6, 7, 8, 10, 13, 15), (1, 0, 0, 0)),
    ((1, 2, 3, 5, 6, 9, 10), None),
    ((1, 2, 3, 5, 6, 9, 14), None),
)


ELIGIBLE = CuspSet((1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13))


def eligibility_set(include_pair: bool = True) -> CuspSet:
    """Weights an admissible M0 may contain.

    Without the pair condition this is everything not below 11, 14 or 15.
    Rows lying below both 9 and 10 drop out once {9,10} is excluded too,
    since any upward-closed set holding them holds 9 and 10.
    """
    out = CuspSet(a for a in ALL if not any(leq(a, c) for c in ELIGIBILITY_CAPS))
    if include_pair:
        out = CuspSet(a for a in out if not all(leq(a, c) for c in FORBIDDEN_PAIR))
    return out


def cocharacter_criterion(subset, b: tuple[int, ...]) -> bool:
    """Every weight pairing positively with b lies in subset."""
    s = _as_set(subset)
    pos = {i for i in ALL if sum(bi * ni for bi, ni in zip(b, n_vector(i))) > 0}
    return pos <= set(s)


def f_restriction_criterion(subset) -> bool:
    from .lie import v_dictionary
    from .sp6 import restrict_f_to_weight_subspace

    return restrict_f_to_weight_subspace(_as_set(subset), v_dictionary())


def spot_check_reducible(subset, samples: int = 5, seed: int = 0, bound: int = 5) -> bool:
    """Random points of V(subset): each has vanishing Lie discriminant or a resolvent with a rational linear factor."""
    from .lie import lie_discriminant, psi
    from .quartics import has_rational_linear_factor
    from .sp6 import resolvent_quartic

    s = _as_set(subset)
    rng = random.Random(seed)
    for _ in range(samples):
        v = [0 if i + 1 in s else rng.randint(-bound, bound) for i in range(N_WEIGHTS)]
        if lie_discriminant(v) == 0:
            continue
        q = resolvent_quartic(psi(v))
        if not q or has_rational_linear_factor(q):
            continue
        return False
    return True


def family_members_within(universe) -> list[CuspSet]:
    """Every nonempty subset of universe that is upward-closed in the whole weight poset, by mask order."""
    items = sorted(_as_set(universe))
    out = []
    for k in range(1, len(items) + 1):
        for combo in combinations(items, k):
            s = CuspSet(combo)
            if is_upward_closed(s):
                out.append(s)
    return sorted(out, key=lambda s: (len(s), s.mask))


SMALL_CERT_M1 = (3,)
SMALL_CERT_F = (Fraction(1, 2),)


def _row_cert(k: int, m0: CuspSet) -> GoodnessCertificate:
    cert = GOOD_EXAMPLES[k].certificate()
    if cert.m0 != m0:
        raise CertificateTransferError(f"{m0} should equal {cert.m0} in this case")
    return cert


def case_transfers() -> dict[str, Transfer]:
    r = GOOD_EXAMPLES
    return {
        "case 1": transfer_certificate((1, 2), r[0].m0, r[0].m1, dict(zip(r[0].m1, r[0].f)), {3: 12, 5: 12, 6: 12, 10: 12}),
        "case 3": transfer_certificate(
            (1, 2, 4), r[2].m0, r[2].m1, dict(zip(r[2].m1, r[2].f)),
            {3: 9, 5: 9, 6: 9, 7: 11, 8: 15, 10: 15, 13: 15},
        ),
        "case 4b": transfer_certificate((1, 2, 3, 4, 5, 6, 9), r[4].m0, r[4].m1, dict(zip(r[4].m1, r[4].f)), {7: 11, 8: 13}),
    }


def certify(m0: CuspSet, transfers: Mapping[str, Transfer] | None = None) -> tuple[str, GoodnessCertificate]:
    """Pick the certificate prescribed by the case split on 4 and 9."""
    transfers = case_transfers() if transfers is None else transfers
    if len(m0) <= 2:
        return "small", GoodnessCertificate(m0, CuspSet(SMALL_CERT_M1), dict(zip(SMALL_CERT_M1, SMALL_CERT_F)))
    has4, has9 = 4 in m0, 9 in m0
    if not has4 and not has9:
        return "case 1", transfers["case 1"].certificate_for(m0)
    if not has4:
        return "case 2", _row_cert(1, m0)
    if not has9:
        return "case 3", transfers["case 3"].certificate_for(m0)
    if 13 in m0:
        return "case 4a", _row_cert(3, m0)
    return "case 4b", transfers["case 4b"].certificate_for(m0)


@dataclass
class CuspReport:
    caps_only: CuspSet
    eligibility: CuspSet
    eligibility_ok: bool
    subsets_ok: dict[tuple[int, ...], str]
    table_ok: list[bool]
    weights_ok: list[bool]
    certified: dict[str, int]
    small_sets: list[CuspSet]
    failures: list[str]

    @property
    def total(self) -> int:
        return sum(self.certified.values())

    @property
    def ok(self) -> bool:
        return (
            self.eligibility_ok
            and all(v.endswith("ok") for v in self.subsets_ok.values())
            and all(self.table_ok)
            and all(self.weights_ok)
            and not self.failures
        )

    def lines(self) -> list[str]:
        out = [
            f"not below 11, 14, 15: {self.caps_only}",
            f"eligibility set {self.eligibility} ({'ok' if self.eligibility_ok else 'MISMATCH'})",
        ]
        for s, status in self.subsets_ok.items():
            out.append(f"reducibility subset {set(s)}: {status}")
        for k, (t, w) in enumerate(zip(self.table_ok, self.weights_ok), start=1):
            out.append(f"good example row {k}: certificate {'ok' if t else 'FAIL'}, weights {'ok' if w else 'MISMATCH'}")
        for name, n in sorted(self.certified.items()):
            out.append(f"{name}: {n} sets certified")
        out.append(f"sets with at most 2 elements: {', '.join(map(repr, self.small_sets))}")
        out.append(f"total certified: {self.total}")
        out.extend(f"FAILED: {f}" for f in self.failures)
        return out


def verify_cusp_certificates(spot_samples: int = 3) -> CuspReport:
    caps = eligibility_set(include_pair=False)
    elig = eligibility_set()
    elig_ok = elig == ELIGIBLE

    subsets_ok = {}
    for s, b in REDUCIBILITY_SUBSETS:
        crit = cocharacter_criterion(s, b) if b is not None else f_restriction_criterion(s)
        name = f"cocharacter {b}" if b is not None else "F restriction"
        spot = spot_check_reducible(s, samples=spot_samples) if spot_samples else True
        subsets_ok[s] = f"{name} {'ok' if crit and spot else 'FAIL'}"

    table_ok = [verify_certificate(r.certificate()) for r in GOOD_EXAMPLES]
    weights_ok = [table_weights(r.m0) == tuple(Fraction(w) for w in r.weights) for r in GOOD_EXAMPLES]

    failures: list[str] = []
    certified: dict[str, int] = {}
    try:
        transfers = case_transfers()
    except CertificateTransferError as e:
        return CuspReport(caps, elig, elig_ok, subsets_ok, table_ok, weights_ok, {}, [], [f"transfer: {e}"])
    # enumerate over the larger set so nothing is lost to the refinement
    members = [m for m in family_members_within(caps) if not all(x in m for x in FORBIDDEN_PAIR)]
    small = []
    for m0 in members:
        if len(m0) <= 2:
            small.append(m0)
        try:
            name, cert = certify(m0, transfers)
        except CertificateTransferError as e:
            failures.append(f"{m0}: {e}")
            continue
        if verify_certificate(cert):
            certified[name] = certified.get(name, 0) + 1
        else:
            failures.append(f"{m0}: certificate from {name} does not verify")
    return CuspReport(caps, elig, elig_ok, subsets_ok, table_ok, weights_ok, certified, small, failures)
