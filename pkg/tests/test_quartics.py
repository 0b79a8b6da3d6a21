import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prym.exact import DomainError
from prym.quartics import (
    BinaryQuartic,
    VStarElement,
    discriminant_ij,
    has_distinct_roots,
    has_rational_linear_factor,
    inv_I,
    inv_J,
    is_squarefree_form,
    pgl2_act,
)

coeff = st.integers(-9, 9)
quartics = st.tuples(coeff, coeff, coeff, coeff, coeff).map(lambda c: BinaryQuartic(*c))
sl2 = st.sampled_from([[[1, 1], [0, 1]], [[1, 0], [-2, 1]], [[0, -1], [1, 0]], [[2, 1], [1, 1]], [[3, 2], [1, 1]]])


def test_invariants_of_small_forms():
    q = BinaryQuartic(1, 0, 0, 0, 1)  # x^4 + y^4
    assert (inv_I(q), inv_J(q)) == (-36, 0)
    q = BinaryQuartic(0, 0, 1, 0, 0)  # x^2 y^2
    assert (inv_I(q), inv_J(q)) == (-3, -2)
    assert discriminant_ij(q) == 0


def test_pgl2_action_substitutes():
    q = BinaryQuartic(1, 0, 0, 0, 0)  # x^4
    # (x, y) A with A = [[1, 0], [1, 1]] sends x to x + y
    assert pgl2_act([[1, 0], [1, 1]], q) == BinaryQuartic(1, 4, 6, 4, 1)
    with pytest.raises(DomainError):
        pgl2_act([[1, 2], [2, 4]], q)


@settings(max_examples=80, deadline=None)
@given(quartics, sl2)
def test_invariants_are_sl2_invariant(q, A):
    g = pgl2_act(A, q)
    assert inv_I(g) == inv_I(q) and inv_J(g) == inv_J(q)


@settings(max_examples=40, deadline=None)
@given(quartics, st.integers(1, 5))
def test_invariants_scale(q, lam):
    s = q.scale(lam)
    assert inv_I(s) == lam**2 * inv_I(q) and inv_J(s) == lam**3 * inv_J(q)


@settings(max_examples=120, deadline=None)
@given(quartics)
def test_distinct_roots_iff_squarefree_over_q(q):
    if not q:
        return
    assert has_distinct_roots(q) == is_squarefree_form(q)


def test_exhaustive_agreement_over_f5():
    p = 5
    for c in itertools.product(range(p), repeat=5):
        q = BinaryQuartic(*c)
        if not q:
            continue
        assert has_distinct_roots(q, over=p) == is_squarefree_form(q, over=p), c


def test_rational_linear_factors():
    assert has_rational_linear_factor(BinaryQuartic(1, 0, 0, 0, -16))  # x^4 - 16 y^4 has x = 2y
    assert not has_rational_linear_factor(BinaryQuartic(1, 0, 0, 0, 1))
    assert has_rational_linear_factor(BinaryQuartic(0, 1, 0, 0, 1))  # divisible by y
    assert has_rational_linear_factor(BinaryQuartic(1, 0, 0, 0, 1), over=2)
    assert not has_rational_linear_factor(BinaryQuartic(1, 0, 0, 0, 1), over=5)


def test_zero_form_is_rejected():
    with pytest.raises(DomainError):
        has_distinct_roots(BinaryQuartic(0, 0, 0, 0, 0))


def test_vstar_scaling():
    v = VStarElement(Fraction(1), Fraction(2), BinaryQuartic(1, 0, 0, 0, 1))
    s = v.scale(2)
    assert (s.b2, s.b6) == (4, 128)
    assert s.q == BinaryQuartic(16, 0, 0, 0, 16)
