import random
from fractions import Fraction

import pytest

from prym import lie as L
from prym import sp6 as S
from prym.exact import DomainError, matmul, rank
from prym.quartics import BinaryQuartic


def _random_w(rng, bound=3):
    return S.WVector.from_coords([rng.randint(-bound, bound) for _ in range(14)])


def _random_full(rng, bound=3):
    m = lambda: [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)]
    return S.WVector(rng.randint(-bound, bound), m(), m(), rng.randint(-bound, bound))


def test_contraction_kernel_is_fourteen_dimensional():
    assert rank(S.contraction_matrix()) == 6
    rng = random.Random(0)
    for _ in range(5):
        w = _random_w(rng)
        assert not any(S.contraction(w.to_wedge()))


def test_contraction_detects_asymmetry():
    w = S.WVector(0, [[0, 1, 0], [0, 0, 0], [0, 0, 0]], S.ZERO3, 0)
    assert any(S.contraction(w.to_wedge()))
    with pytest.raises(DomainError):
        S.WVector.from_wedge(w.to_wedge())


def test_wedge_round_trip():
    rng = random.Random(1)
    for _ in range(10):
        w = _random_w(rng)
        assert S.WVector.from_wedge(w.to_wedge()) == w


def test_slot_convention():
    w = S.WVector(0, [[0, 1, 0], [1, 0, 0], [0, 0, 0]], S.ZERO3, 0)
    c = w.to_wedge()
    # X[0][1] sits on e1 ^ e4 ^ e3, i.e. minus the sorted triple (1, 3, 4)
    assert c[(1, 3, 4)] == -1


def test_f_small_values():
    e123 = S.WVector(1, S.ZERO3, S.ZERO3, 0)
    e456 = S.WVector(0, S.ZERO3, S.ZERO3, 1)
    assert S.f_invariant(e123) == 0
    assert S.f_invariant(e123 + e456) == 1
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert S.f_invariant(S.WVector(1, S.ZERO3, ident, 0)) == 4


def test_f_agrees_with_sl6_invariant_on_w():
    rng = random.Random(2)
    for _ in range(10):
        w = _random_w(rng)
        assert S.f_invariant(w) == S.sl6_quartic_invariant(w.to_wedge())


def test_closed_formula_is_not_the_sl6_invariant_off_w():
    # off the contraction kernel the two quartics genuinely differ
    w = _random_full(random.Random(2))
    assert not w.is_symmetric()
    assert S.f_invariant(w) != S.sl6_quartic_invariant(w.to_wedge())


def test_f_polynomial_forms_agree():
    rng = random.Random(3)
    w = _random_w(rng)
    assert S.f_polynomial()(*w.coords()) == S.f_invariant(w)
    assert S.f_polynomial().weighted_degrees([1] * 14) == {4}


def test_sp6_action_preserves_f():
    rng = random.Random(4)
    for _ in range(5):
        g = [[int(i == j) for j in range(6)] for i in range(6)]
        for m in S.symplectic_generators(rng):
            assert S.is_symplectic(m)
            g = matmul(g, m)
        w = _random_w(rng)
        gw = S.sp6_act(g, w)
        assert gw.is_symmetric()
        assert S.f_invariant(gw) == S.f_invariant(w)


def test_sp6_act_rejects_non_symplectic():
    g = [[2 if i == j == 0 else int(i == j) for j in range(6)] for i in range(6)]
    with pytest.raises(DomainError):
        S.sp6_act(g, S.WVector.zero())


def test_lie_action_kills_f_to_first_order():
    rng = random.Random(5)
    m = [[0] * 6 for _ in range(6)]
    m[0][3] = 1  # upper-right symmetric block entry
    assert S.is_sp6_lie(m)
    w = _random_w(rng)
    dw = S.sp6_lie_act(m, w)
    eps = Fraction(1, 10**6)
    # F(w + eps dw) - F(w) is O(eps^2)
    delta = S.f_invariant(w + dw.scale(eps)) - S.f_invariant(w)
    assert abs(delta) < eps * Fraction(1, 1000) or delta == 0


def test_resolvent_of_split_pair():
    w1 = S.WVector(1, S.ZERO3, S.ZERO3, 0)
    w2 = S.WVector(0, S.ZERO3, S.ZERO3, 1)
    assert S.resolvent_quartic(S.VElement(w1, w2)) == BinaryQuartic(0, 0, 1, 0, 0)


def test_resolvent_leading_coefficient_is_f():
    rng = random.Random(6)
    v = S.VElement(_random_w(rng), _random_w(rng))
    q = S.resolvent_quartic(v)
    assert q.a == S.f_invariant(v.w1) and q.e == S.f_invariant(v.w2)


def test_resolvent_sl2_covariance():
    rng = random.Random(7)
    v = S.VElement(_random_w(rng), _random_w(rng))
    A = [[2, 1], [1, 1]]
    from prym.quartics import pgl2_act

    lhs = S.resolvent_quartic(v.sl2_act(A))
    # (w1, w2) A^T evaluated at (x, y) is x w1' + y w2' = (x, y) A applied to (w1, w2)
    assert lhs == pgl2_act(A, S.resolvent_quartic(v))


def test_weight_dictionary_covers_w_once():
    d = L.v_dictionary()
    assert len(d) == 28
    w1 = sorted(name for f, name in d.values() if f == 1)
    w2 = sorted(name for f, name in d.values() if f == 2)
    assert w1 == sorted(S.W_COORDS) and w2 == sorted(S.W_COORDS)


def test_restrict_f_to_weight_subspace():
    d = L.v_dictionary()
    assert not S.restrict_f_to_weight_subspace([], d)
    w1_rows = [k for k, (f, _) in d.items() if f == 1]
    assert S.restrict_f_to_weight_subspace(w1_rows, d)
    with pytest.raises(S.DictionaryUnavailable):
        S.restrict_f_to_weight_subspace([], None)
