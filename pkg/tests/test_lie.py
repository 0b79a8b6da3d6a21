import random
from fractions import Fraction

import pytest

from prym import lie as L
from prym.exact import DomainError


@pytest.fixture(scope="module")
def alg():
    return L.build_folded_f4()


def test_graded_dimensions(alg):
    assert (alg.dim, alg.g_dim, alg.v_dim) == (52, 24, 28)


def test_e6_table_is_a_lie_algebra():
    t = L.e6_table()
    t.check_antisymmetry()
    t.check_jacobi()
    L.check_zeta_automorphism()


def test_bracket_respects_grading(alg):
    rng = random.Random(5)
    g = lambda: [rng.randint(-2, 2) for _ in range(alg.g_dim)] + [0] * alg.v_dim
    v = lambda: [0] * alg.g_dim + [rng.randint(-2, 2) for _ in range(alg.v_dim)]
    for _ in range(5):
        assert not any(alg.bracket(g(), g())[alg.g_dim :])
        assert not any(alg.bracket(g(), v())[: alg.g_dim])
        assert not any(alg.bracket(v(), v())[alg.g_dim :])


def test_sl2_triple_relations(alg):
    t = L.sl2_triple()
    assert alg.bracket(t.X, t.E) == [2 * x for x in t.E]
    assert alg.bracket(t.X, t.F) == [-2 * x for x in t.F]
    assert alg.bracket(t.E, t.F) == list(t.X)


def test_exp_ad_inverse(alg):
    rng = random.Random(1)
    x = [rng.randint(-3, 3) for _ in range(alg.dim)]
    for gen in L.g_generators():
        if gen.name[0] not in "ef":
            continue
        n = [3 * a for a in gen.element]
        back = L.exp_ad([-a for a in n], L.exp_ad(n, x))
        assert back == [Fraction(a) for a in x]


def test_exp_ad_rejects_odd_part(alg):
    with pytest.raises(DomainError):
        L.exp_ad([0] * alg.g_dim + [1] + [0] * (alg.v_dim - 1), [0] * alg.dim)


def test_trace_invariants_are_invariant(alg):
    rng = random.Random(4)
    v = [rng.randint(-2, 2) for _ in range(28)]
    base = L.trace_invariants(v)
    gens = [g for g in L.g_generators() if g.name[0] in "ef"]
    x = alg.embed_v(v)
    for gen in gens[:6]:
        x = L.exp_ad([2 * a for a in gen.element], x)
        assert L.trace_invariants(alg.v_part(x)) == base


def test_trace_invariants_scale_with_degree():
    rng = random.Random(8)
    v = [rng.randint(-2, 2) for _ in range(28)]
    lam = Fraction(-3, 2)
    scaled = L.trace_invariants([lam * a for a in v])
    assert scaled == tuple(lam**d * t for d, t in zip(L.SLICE_WEIGHTS, L.trace_invariants(v)))


def test_slice_chart_is_triangular_and_inverts():
    chart = L.invariant_chart()
    assert chart.is_triangular()
    for c in [(1, 0, 0, 0), (0, 0, 0, 1), (2, -3, 5, 7), (Fraction(1, 2), 1, -1, Fraction(3, 4))]:
        v = L.slice_point(c)
        assert L.slice_coordinates(v) == tuple(Fraction(x) for x in c)


def test_regular_semisimple_slice_points():
    v = L.slice_point((1, 2, -1, 3))
    assert L.lie_discriminant(v) != 0
    assert L.adjoint_kernel_dim(v) == 4
    # the nilpotent E itself is far from semisimple
    assert L.lie_discriminant(L.slice_point((0, 0, 0, 0))) == 0


def test_psi_anchor_and_equivariance():
    from prym.sp6 import WVector

    v = [0] * 28
    v[L.ANCHOR_ROW - 1] = 1
    img = L.psi(v)
    assert img.w1 == WVector.from_wedge({(2, 3, 4): 1})
    assert not any(img.w2.coords())
    res = L.equivariance_residuals()
    assert len(res) == 28 * 12
    assert not any(r[2] for r in res)


def test_psi_is_injective_on_basis():
    images = [L.psi([int(i == k) for i in range(28)]).coords() for k in range(28)]
    from prym.exact import rank

    assert rank([list(r) for r in images]) == 28
