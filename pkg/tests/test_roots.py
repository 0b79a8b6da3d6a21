import itertools
from fractions import Fraction

from prym import roots as R


def test_root_counts_and_highest_roots():
    e, f = R.e6(), R.f4()
    assert len(e.roots) == 72 and len(e.positive_roots) == 36
    assert len(f.roots) == 48 and len(f.positive_roots) == 24
    assert e.highest_root() == (1, 2, 2, 3, 2, 1)
    assert f.highest_root() == (2, 3, 4, 2)
    # Coxeter number 12: heights run up to 11
    assert max(R.height(r) for r in f.roots) == 11


def test_folding_reproduces_cartan_matrix():
    assert set(R.f4().roots) == set(R.f4_from_cartan().roots)
    assert R.f4().cartan_matrix() == R.F4_BOURBAKI_CARTAN
    assert R.restrict(R.e6().highest_root()) == R.f4().highest_root()


def test_diagram_automorphism_is_an_involution_on_roots():
    roots = set(R.e6().roots)
    for r in roots:
        z = R.zeta_root(r)
        assert z in roots
        assert R.zeta_root(z) == r
        assert R.restrict(z) == R.restrict(r)


def test_short_simple_roots_fold_from_orbits_of_size_two():
    f = R.f4()
    for i, nodes in R.FOLDING.items():
        simple = f.simple_roots[i - 1]
        assert f.is_long(simple) == (len(nodes) == 1)


def test_odd_and_even_heights_split_28_and_24():
    odd = [r for r in R.f4().roots if R.height(r) % 2]
    even_pos = [r for r in R.f4().positive_roots if R.height(r) % 2 == 0]
    assert len(odd) == 28
    assert 4 + 2 * len(even_pos) == 24
    assert len(R.phi_g_positive()) == 10


def test_weight_table_rows():
    rows = R.phi_v_table()
    assert [r.index for r in rows] == list(range(1, 29))
    assert rows[0].alpha == (2, 3, 4, 2)
    assert R.row(14).alpha == (1, 0, 0, 0)
    assert R.row_of_alpha((1, 0, 0, 0)) == 14
    for r in rows:
        assert tuple(2 * x for x in R.beta_coordinates(r.alpha)) == r.beta_half


def test_order_is_a_partial_order_with_row_one_on_top():
    idx = range(1, 29)
    for x in idx:
        assert R.leq(x, x)
        assert R.leq(x, 1)
    for x, y in itertools.permutations(idx, 2):
        assert not (R.leq(x, y) and R.leq(y, x))
    for x, y, z in itertools.product([1, 2, 4, 9, 10, 14, 20], repeat=3):
        if R.leq(x, y) and R.leq(y, z):
            assert R.leq(x, z)


def test_hasse_diagram_on_top_subposet():
    assert R.covering_relations(R.HASSE_SUBPOSET) == R.HASSE_EDGES


def test_symplectic_weights():
    w = R.phi_w()
    assert len(w) == 14
    assert all(tuple(-x for x in v) in w for v in w)


def test_weyl_mod2_report():
    r = R.weyl_mod2_report()
    assert r.order_w == 51840
    assert r.order_centralizer == 1152
    assert (r.image_dim, r.fixed_dim) == (2, 4)
    assert r.filtration_orders == (1, 4, 16, 64)
    assert r.invariant_subspace_dims == (0, 2, 4, 6)
    assert r.coxeter_fixed_dim == 0
    assert not r.identity_in_c
    assert r.eta == Fraction(17, 32)
