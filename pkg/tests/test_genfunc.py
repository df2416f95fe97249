from fractions import Fraction

import pytest

from hankel_catalan.genfunc import (
    JacobiParams,
    big_g_series,
    big_g_series_from_jacobi,
    f_series,
    jacobi_genfun_series,
    jacobi_poly,
    rho_series,
    t_sum_identities,
)
from hankel_catalan.sequences import a_sequence
from hankel_catalan.series import TruncatedSeries


def test_jacobi_degree_zero_and_one():
    assert jacobi_poly(0, JacobiParams(3, 2), Fraction(7, 3)) == 1
    x = Fraction(11, 4)
    assert jacobi_poly(1, JacobiParams(0, 0), x) == x
    for a, b in [(0, 0), (2, 0), (1, 3)]:
        expected = ((a + b + 2) * x + (a - b)) / 2
        assert jacobi_poly(1, JacobiParams(a, b), x) == expected


@pytest.mark.parametrize("params", [JacobiParams(0, 0), JacobiParams(2, 0)])
@pytest.mark.parametrize("x", [Fraction(3), Fraction(5, 3), Fraction(7, 2)])
def test_genfun_coefficients_are_jacobi_values(params, x):
    series = jacobi_genfun_series(params, x, 12)
    for n in range(13):
        assert series.coefficient(n) == jacobi_poly(n, params, x)


def test_genfun_constant_term():
    assert jacobi_genfun_series(JacobiParams(0, 0), Fraction(9, 7), 5).coefficient(0) == 1


@pytest.mark.parametrize("L", [2, 3, Fraction(5, 2)])
def test_t_sum_identities(L):
    assert t_sum_identities(L, 10)


def test_t_sum_identities_reject_l_one():
    with pytest.raises(ValueError):
        t_sum_identities(1, 5)


def test_rho_series():
    assert rho_series(3, 8).coefficient(0) == 1
    assert rho_series(1, 4).coefficients(0, 4) == [1, -2, -2, -4, -10]
    rho = rho_series(5, 20)
    assert rho * rho == TruncatedSeries([1, -12, 16], 20)


def test_big_g_golden_l2():
    series = big_g_series(2, 4)
    assert series.coefficients(0, 4) == [3, 8, 28, 112, 484]


@pytest.mark.parametrize("L", [2, 3, 4, 5, Fraction(5, 2)])
def test_big_g_matches_sequence(L):
    series = big_g_series(L, 25)
    assert series.coefficients(0, 25) == list(a_sequence(L, 25).terms)


def gen9_assembly(order):
    # (1/t) * ((1 - sqrt(1-4t)) (1+t) / (2t) - 1)
    work = order + 2
    one = TruncatedSeries([1], work)
    s = (one - TruncatedSeries([1, -4], work).sqrt()) * TruncatedSeries([1, 1], work)
    return (s.shift(-1) / 2 - one).shift(-1)


def gen10_assembly(order):
    # -1/t + (t+1)/sqrt(t^2-6t+1) * (1/t - 4/(1 - t + sqrt(t^2-6t+1))^2)
    work = order + 2
    root = TruncatedSeries([1, -6, 1], work).sqrt()
    inv_t = TruncatedSeries([1], work, min_exp=-1)
    bracket = inv_t - (
        (TruncatedSeries([1, -1], work) + root) * (TruncatedSeries([1, -1], work) + root)
    ).reciprocal() * 4
    return TruncatedSeries([1, 1], work) * root.reciprocal() * bracket - inv_t


def test_big_g_l1_matches_direct_assembly():
    direct = gen9_assembly(20)
    series = big_g_series(1, 20)
    assert series.coefficients(0, 20) == direct.coefficients(0, 20)
    assert direct.coefficient(-1) == 0


def test_big_g_l2_matches_direct_assembly():
    direct = gen10_assembly(20)
    series = big_g_series(2, 20)
    assert series.coefficients(0, 20) == direct.coefficients(0, 20)


@pytest.mark.parametrize("L", [2, 3, 4, 5])
def test_both_generating_function_assemblies_agree(L):
    assert big_g_series(L, 20) == big_g_series_from_jacobi(L, 20)


def test_jacobi_assembly_rejects_l_one():
    with pytest.raises(ValueError):
        big_g_series_from_jacobi(1, 10)


def test_f_series_l1_matches_direct_assembly():
    # (1/2) { z - 1 - (z+1) sqrt(1 - 4/z) } expanded in u = 1/z:
    # (1/(2u)) ((1-u) - (1+u) sqrt(1-4u))
    order = 15
    work = order + 1
    s = TruncatedSeries([1, -1], work) - TruncatedSeries([1, 1], work) * TruncatedSeries(
        [1, -4], work
    ).sqrt()
    direct = s.shift(-1) / 2
    series = f_series(1, order)
    assert series.coefficients(0, order) == direct.coefficients(0, order)


def test_f_series_coefficients_are_shifted_sequence():
    series = f_series(2, 5)
    assert series.coefficients(1, 5) == [3, 8, 28, 112, 484]
    assert series.coefficient(0) == 0


def test_f_series_is_shifted_generating_function():
    f = f_series(3, 21)
    g = big_g_series(3, 20)
    assert f.coefficients(1, 21) == g.coefficients(0, 20)
