import random
from fractions import Fraction

import pytest

from prym import curves as C
from prym.exact import DomainError, MPoly


def test_chi_on_first_basis_vector():
    assert C.chi((1, 0, 0, 0)).as_tuple() == (-18, -486, -2187, -39366)


def test_chi_is_an_involution_up_to_scaling_symbolically():
    polys = C.chi_polynomials()
    twice = tuple(p.substitute(list(polys)) for p in polys)
    v = MPoly.variables(4)
    for t, x, d in zip(twice, v, C.WEIGHTS):
        assert t == 18**d * x


def test_chi_components_are_integral_and_homogeneous():
    for p, d in zip(C.chi_polynomials(), C.WEIGHTS):
        assert p.is_integral()
        assert p.weighted_degrees(C.WEIGHTS) == {d}


def test_chi_commutes_with_scaling():
    b = C.InvariantPoint(1, -2, 3, 5)
    lam = Fraction(2, 3)
    assert C.chi(b.scale(lam)) == C.chi(b).scale(lam)


def test_delta_e_closed_form():
    rng = random.Random(0)
    for _ in range(50):
        p2, p6, p8, p12 = (rng.randint(-30, 30) for _ in range(4))
        a = 48 * p8 - p2**4 + 24 * p2 * p6
        k = -2 * p2**6 + 72 * p2**3 * p6 - 432 * p6**2 + 144 * p2**2 * p8
        c = k - 1728 * p12
        assert C.delta_e((p2, p6, p8, p12)) == 3**21 * (4 * a**3 + c**2)


def test_discriminant_transforms_by_a_power_of_18():
    rng = random.Random(1)
    for _ in range(30):
        b = tuple(rng.randint(-20, 20) for _ in range(4))
        d = C.discriminants(b)[2]
        assert C.discriminants(C.chi(b))[2] == 18**C.DISCRIMINANT_UNIT_EXPONENT * d
    de, dh = C.discriminants((1, 0, 0, 0))[:2]
    assert C.delta_ehat(C.chi((1, 0, 0, 0))) == de


def _singular_hat(t: int) -> tuple[int, int, int, int]:
    # 4 p8^3 + 27 p12^2 = 0 along (p8, p12) = (-3 t^2, 2 t^3)
    return (0, 0, -3 * t * t, 2 * t**3)


def test_smoothness_examples():
    assert C.is_smooth_genus3((1, 2, 3, 4))
    assert not C.is_smooth_genus3(_singular_hat(1))
    assert not C.is_smooth_genus3((0, 0, 0, 0))


def test_singular_on_the_other_factor():
    # b with chi(b) on the Ehat-discriminant locus has Delta_E(b) = 0
    b = C.chi(_singular_hat(2)).scale(Fraction(1, 18))
    assert C.discriminants(b)[0] == 0
    assert not C.is_smooth_genus3(b)


def test_two_torsion():
    b = (0, 0, -1, 0)
    g_e, g_h = C.two_torsion_cubics(b)
    assert g_h.coeffs == (0, -1, 0, 1)
    assert C.rational_two_torsion(b) == (4, 4)
    assert C.rational_two_torsion((0, 0, 1, 1))[1] == 1
    with pytest.raises(DomainError):
        C.two_torsion_cubics(_singular_hat(1))


def test_heights():
    assert C.height((4, 0, 0, 0)) == 2
    assert C.height((0, 0, 0, 4096)) == 2
    assert C.height((1, 0, 0, 4096)) == 2
    assert abs(C.height((0, 0, 0, 5)) - 5 ** (1 / 12)) < 1e-12
    # strict inequality on every coordinate
    assert not C.height_less_than((4, 0, 0, 0), 2)
    assert C.height_less_than((3, 63, 255, 4095), 2)
    assert not C.height_less_than((0, 0, 0, 0), 0)


def test_height_scales_linearly():
    b = C.InvariantPoint(4, 0, 1, 0)
    assert C.height(b.scale(3)) == 3 * C.height(b)


def test_box_volume():
    assert C.box_volume(1) == 16
    assert C.box_volume(2) == 16 * 2**28


def test_curve_bundle_strings():
    bundle = C.curve_bundle((1, 0, -1, 2))
    assert bundle.genus3 == "y^4 + (1)*x*y^2 + (0)*y^2 = x^3 + (-1)*x + (2)"
    assert bundle.bhat == C.chi((1, 0, -1, 2))
