import itertools
from fractions import Fraction

import pytest

from prym import cusp as K
from prym import roots as R
from prym.cusp import CuspSet
from prym.exact import DomainError


def test_cusp_set_basics():
    s = CuspSet((1, 2, 4))
    assert 4 in s and 3 not in s
    assert len(s) == 3 and list(s) == [1, 2, 4]
    assert repr(s) == "{1,2,4}"
    assert CuspSet.from_mask(s.mask) == s
    assert CuspSet((1, 2)) <= s
    assert s - CuspSet((2,)) == CuspSet((1, 4))
    assert (s | CuspSet((5,))) == CuspSet((1, 2, 4, 5))
    assert len(s.complement()) == 25


def test_family_membership():
    assert K.in_family((1,))
    assert K.in_family((1, 2, 4))
    assert not K.in_family((2,))
    assert not K.in_family(())


def test_lambda_sets():
    assert K.lambda_set((1,)) == CuspSet((2, 4))
    assert K.lambda_set((1, 2, 4)) == CuspSet((3, 7))
    assert K.lambda_set(K.ALL) == CuspSet(())
    with pytest.raises(DomainError):
        K.lambda_set((2,))


def test_lambda_set_extends_family():
    for m0 in [(1,), (1, 2), (1, 2, 3, 4)]:
        for a in K.lambda_set(m0):
            assert K.in_family(CuspSet(m0) | CuspSet((a,)))


def test_weight_vectors_used_in_the_second_example():
    assert R.row(4).beta_half == (2, 4, 3, -1)
    assert R.row(10).beta_half == (2, 0, -1, 1)
    assert R.row(14).beta_half == (-2, 0, 1, 1)


def test_good_examples_verify_and_weights_match():
    for row in K.GOOD_EXAMPLES:
        assert K.verify_certificate(row.certificate())
        assert K.table_weights(row.m0) == tuple(Fraction(w) for w in row.weights)


def test_certificate_rejections():
    good = K.GOOD_EXAMPLES[0].certificate()
    overlap = K.GoodnessCertificate(good.m0, CuspSet((1,)), {1: Fraction(0)})
    assert not K.verify_certificate(overlap)
    heavy = K.GoodnessCertificate(good.m0, good.m1, {4: Fraction(0), 12: Fraction(6)})
    assert not K.verify_certificate(heavy)
    negative = K.GoodnessCertificate(good.m0, good.m1, {4: Fraction(-1), 12: Fraction(5)})
    assert not K.verify_certificate(negative)


def test_transfer_conditions():
    r = K.GOOD_EXAMPLES[0]
    f = dict(zip(r.m1, r.f))
    t = K.transfer_certificate((1, 2), r.m0, r.m1, f, {3: 12, 5: 12, 6: 12, 10: 12})
    assert t.covers((1, 2, 3)) and not t.covers((1,))
    cert = t.certificate_for((1, 2, 3))
    assert cert.f[12] == 5 - 3
    with pytest.raises(K.CertificateTransferError):
        t.certificate_for((1, 4))
    # wrong domain
    with pytest.raises(K.CertificateTransferError):
        K.transfer_certificate((1, 2), r.m0, r.m1, f, {3: 12})
    # image outside M1'
    with pytest.raises(K.CertificateTransferError):
        K.transfer_certificate((1, 2), r.m0, r.m1, f, {3: 12, 5: 12, 6: 12, 10: 11})
    # too many preimages for the available weight
    with pytest.raises(K.CertificateTransferError):
        K.transfer_certificate((1, 2), r.m0, r.m1, f, {3: 4, 5: 12, 6: 12, 10: 12})


def test_eligibility_sets():
    assert K.eligibility_set(include_pair=False) == CuspSet((1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 18))
    assert K.eligibility_set() == K.ELIGIBLE
    for extra in (12, 18):
        assert R.leq(extra, 9) and R.leq(extra, 10)


def _filters_from_hasse() -> int:
    """Count nonempty up-sets of the top subposet avoiding {9, 10}, using only the Hasse edges."""
    nodes = sorted(R.HASSE_SUBPOSET)
    up = {n: set() for n in nodes}
    for e in R.HASSE_EDGES:
        a, b = sorted(e, key=lambda i: R.row(i).height)
        up[a].add(b)
    count = 0
    for k in range(1, len(nodes) + 1):
        for combo in itertools.combinations(nodes, k):
            s = set(combo)
            if {9, 10} <= s:
                continue
            if all(up[a] <= s for a in s):
                count += 1
    return count


def test_enumeration_count_matches_independent_oracle():
    rep = K.verify_cusp_certificates(spot_samples=0)
    assert rep.total == _filters_from_hasse() == 38


def test_case_split_counts():
    rep = K.verify_cusp_certificates(spot_samples=0)
    assert rep.ok, rep.failures
    assert rep.certified == {"small": 3, "case 1": 6, "case 2": 1, "case 3": 24, "case 4a": 1, "case 4b": 3}
    assert rep.small_sets == [CuspSet((1,)), CuspSet((1, 2)), CuspSet((1, 4))]


def test_reducibility_subsets():
    for s, b in K.REDUCIBILITY_SUBSETS:
        if b is None:
            assert K.f_restriction_criterion(s)
        else:
            assert K.cocharacter_criterion(s, b)
        assert K.spot_check_reducible(s, samples=2)
    assert not K.cocharacter_criterion((1,), (1, 0, 0, 0))
    assert not K.f_restriction_criterion((1,))
