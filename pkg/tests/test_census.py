import hashlib
import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from sympy import Matrix

from prym import census as Cn
from prym.curves import box_volume, discriminants
from prym.exact import DomainError

X = Fraction(3, 2)


def test_coordinate_bounds_are_strict():
    assert Cn.BoxSpec(X).bounds() == (2, 11, 25, 129)
    assert Cn.coordinate_bound(2, 2) == 3
    assert Cn.coordinate_bound(1, 12) == 0


def test_box_counts():
    assert Cn.box_count(1) == 1
    assert Cn.box_count(X) == 5 * 23 * 51 * 259
    with pytest.raises(DomainError):
        Cn.box_count(0)


def test_box_count_tracks_volume():
    ratio = Cn.box_count(10) / box_volume(10)
    assert 0.99 < ratio < 1


def test_congruence_filters():
    f = Cn.CongruenceFilter.parse("2:p2:0")
    assert str(f) == "2:p2:0"
    box = Cn.BoxSpec(X, (f,))
    assert list(box.coordinate_values(0)) == [-2, 0, 2]
    assert box.count() == 3 * 23 * 51 * 259
    # two filters on the same coordinate combine
    both = Cn.BoxSpec(X, (Cn.CongruenceFilter.parse("2:p6:1"), Cn.CongruenceFilter.parse("3:p6:0")))
    assert list(both.coordinate_values(1)) == [-9, -3, 3, 9]
    assert both.coordinate_count(1) == 4
    for bad in ("2:p3:0", "0:p2:0", "p2:0", "a:p2:0"):
        with pytest.raises(ValueError):
            Cn.CongruenceFilter.parse(bad)


def test_integer_discriminants_match_rational_ones():
    rng = random.Random(0)
    for _ in range(40):
        b = tuple(rng.randint(-40, 40) for _ in range(4))
        de, dh, _ = discriminants(b)
        assert Cn.delta_e_int(*b) == de
        assert Cn.delta_ehat_int(b[2], b[3]) == dh


def test_singular_count_matches_brute_scan():
    n2, n6, n8, n12 = Cn.BoxSpec(X).bounds()
    p2, p6, p8, p12 = np.meshgrid(
        *(np.arange(-n, n + 1, dtype=np.int64) for n in (n2, n6, n8, n12)), indexing="ij"
    )
    a = 48 * p8 - p2**4 + 24 * p2 * p6
    k = -2 * p2**6 + 72 * p2**3 * p6 - 432 * p6**2 + 144 * p2**2 * p8
    c = k - 1728 * p12
    zero = ((4 * a**3 + c * c) == 0) | ((4 * p8**3 + 27 * p12**2) == 0)
    assert Cn.singular_count(X) == int(zero.sum()) == 863


def test_census_at_height_one_is_empty():
    assert Cn.singular_count(1) == 1
    assert list(Cn.enumerate_census(1)) == []


def test_census_small_height_totals():
    x = Fraction(5, 4)
    recs = list(Cn.enumerate_census(x))
    assert len(recs) + Cn.singular_count(x) == Cn.box_count(x) == 6699
    assert len(recs) == 6614
    assert recs == sorted(recs, key=lambda r: r.b)
    assert all(r.delta != 0 for r in recs)


def test_record_fields():
    r = Cn.CensusRecord.of((0, 0, -1, 0), zeta_primes=(5, 7))
    assert (r.e2_rat, r.ehat2_rat) == (4, 4)
    assert r.delta == r.delta_E * r.delta_Ehat
    assert dict(r.zeta)[5] is not None
    with pytest.raises(DomainError):
        Cn.CensusRecord.of((0, 0, 0, 0))


def test_squarefree_away_from_6():
    assert Cn.squarefree_away_from_6(2**5 * 3 * 5 * 7)
    assert not Cn.squarefree_away_from_6(2 * 25)
    assert not Cn.squarefree_away_from_6(0)
    assert Cn.squarefree_away_from_6(-1)


def test_empty_csv_is_header_only(tmp_path):
    out = tmp_path / "empty.csv"
    assert Cn.emit([], "csv", out) == 0
    assert out.read_text() == ",".join(Cn.CSV_HEADER) + "\n"


def test_jsonl_round_trip(tmp_path):
    recs = [Cn.CensusRecord.of(b, (7,)) for b in [(0, 0, -1, 0), (1, 2, 3, 4), (0, 1, 0, 1)]]
    out = tmp_path / "r.jsonl"
    Cn.emit(recs, "jsonl", out, (7,))
    assert Cn.read_jsonl(out.read_text()) == recs


def test_emit_rejects_unknown_format(tmp_path):
    with pytest.raises(ValueError):
        Cn.emit([], "xml", tmp_path / "x")


def test_output_is_deterministic_across_worker_counts(tmp_path):
    f = (Cn.CongruenceFilter.parse("3:p12:1"),)
    digests = []
    for jobs in (1, 2):
        out = tmp_path / f"c{jobs}.csv"
        Cn.emit(Cn.enumerate_census(Fraction(5, 4), f, jobs=jobs), "csv", out)
        digests.append(hashlib.sha256(out.read_bytes()).hexdigest())
    assert digests[0] == digests[1]


def test_subsample_is_seeded_and_ordered():
    recs = list(Cn.enumerate_census(Fraction(5, 4), (Cn.CongruenceFilter.parse("5:p12:0"),)))
    a = Cn.subsample(recs, 50, seed=3)
    assert a == Cn.subsample(recs, 50, seed=3)
    assert a != Cn.subsample(recs, 50, seed=4)
    assert [r.b for r in a] == sorted(r.b for r in a)
    assert Cn.subsample(recs, 10**6, seed=0) == recs


def test_torsion_fraction():
    recs = [Cn.CensusRecord.of(b) for b in [(0, 0, -1, 0), (1, 2, 3, 4)]]
    assert Cn.torsion_fraction(recs) == 0.5


def test_group_orders():
    sl2_f3 = sum(1 for a, b, c, d in itertools.product(range(3), repeat=4) if (a * d - b * c) % 3 == 1)
    assert Cn.sl2_order(3) == sl2_f3 == 24
    assert Cn.sp6_order(2) == 1451520


def test_full_rank_mod_p_agrees_with_sympy():
    rng = np.random.default_rng(0)
    p = 7
    mats = rng.integers(0, p, size=(40, 5, 5))
    mats[:10, 4] = mats[:10, 0] * 2  # force some singular ones
    got = Cn.full_rank_mod_p(mats, p)
    want = [Matrix(m.tolist()).det() % p != 0 for m in mats]
    assert got.tolist() == want


def test_slice_point_mod_p_agrees_with_exact_discriminant():
    from prym.lie import lie_discriminant, slice_point

    rng = random.Random(1)
    pts = [tuple(rng.randrange(7) for _ in range(4)) for _ in range(5)]
    V = np.array([[int(x) for x in slice_point(c)] for c in pts])
    mask = Cn.rs_mask_mod_p(V, 7)
    for c, m in zip(pts, mask):
        d = lie_discriminant(slice_point(c))
        assert m == (d.numerator % 7 != 0)


def test_monte_carlo_argument_checks():
    with pytest.raises(DomainError):
        Cn.monte_carlo_rs_density(5, 20000, 0)
    with pytest.raises(DomainError):
        Cn.monte_carlo_rs_density(7, 100, 0)
