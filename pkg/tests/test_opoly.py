import math
from fractions import Fraction

import pytest

from hankel_catalan.hankel import InsufficientTerms, h_closed_form, surd_states
from hankel_catalan.opoly import (
    base_stage,
    breve_coeffs,
    chain_coeffs,
    gautschi_divide,
    h_from_products,
    hat_stage,
    jfraction_series,
    lambda_closed,
    monic_polynomials,
    norm_closed_form,
    r_closed_form,
    stieltjes_from_moments,
    tilde_coeffs,
)
from hankel_catalan.sequences import a_sequence


def test_lambda_initial_values():
    assert lambda_closed(4.0, -1) == 0.0
    assert lambda_closed(4.0, 0) == 1.0
    assert lambda_closed(2.0, 0) == 1.0


def test_lambda_recurrence_residual():
    L = 4.0
    c = -(L + 2) / (2 * math.sqrt(L))
    lam = [lambda_closed(L, n) for n in range(-1, 17)]
    for n in range(16):
        residual = abs(4 * lam[n + 2] - 4 * c * lam[n + 1] + lam[n])
        assert residual < 1e-10 * abs(lam[n + 1])


@pytest.mark.parametrize("L", [2.0, 4.0])
def test_lambda_matches_chebyshev_recurrence(L):
    # independent evaluation: monic second-kind recurrence at the shift point
    c = -(L + 2) / (2 * math.sqrt(L))
    prev, cur = 1.0, c  # degree 0, degree 1
    assert lambda_closed(L, 1) == pytest.approx(c, rel=1e-12)
    for n in range(2, 11):
        prev, cur = cur, c * cur - 0.25 * prev
        assert lambda_closed(L, n) == pytest.approx(cur, rel=1e-12)


def test_base_stage_values():
    stage = base_stage(5)
    assert stage.alpha == (0,) * 5
    assert stage.beta[0] == Fraction(1, 2) and stage.beta0_times_pi
    assert stage.beta[1:] == (Fraction(1, 4),) * 4


def test_tilde_golden_l4():
    stage = tilde_coeffs(4, 3)
    assert stage.alpha == (Fraction(17, 3), Fraction(61, 12), Fraction(421, 84))
    assert stage.beta[0] == Fraction(3) and stage.beta0_times_pi  # i.e. 3*pi
    assert stage.beta[1] == Fraction(32, 9)
    assert stage.beta[2] == Fraction(63, 16)


@pytest.mark.parametrize("L", [2, 4])
def test_tilde_consistent_with_float_hat_stage(L):
    n_max = 10
    exact = tilde_coeffs(L, n_max)
    hat = hat_stage(float(L), n_max)
    a = 1.0 / (2.0 * math.sqrt(L))
    b = -(L + 1) / (2.0 * math.sqrt(L))
    for n in range(n_max):
        assert float(exact.alpha[n]) == pytest.approx((hat.alpha[n] - b) / a, rel=1e-10)
    for n in range(1, n_max):
        assert float(exact.beta[n]) == pytest.approx(hat.beta[n] / a**2, rel=1e-10)
    # masses scale by 1/a, and the pi flag carries the transcendental factor
    assert float(exact.beta[0]) * math.pi == pytest.approx(hat.beta[0] / a, rel=1e-12)


def test_breve_rescaling():
    stage = tilde_coeffs(4, 4)
    breve = breve_coeffs(stage)
    assert breve.beta[0] == 24
    assert breve.alpha == stage.alpha
    assert breve.beta[1:] == stage.beta[1:]
    assert not breve.beta0_times_pi
    with pytest.raises(ValueError):
        breve_coeffs(breve)


@pytest.mark.parametrize("L", [1, 2, 3, 4, 5, 6])
def test_breve_product_telescopes(L):
    breve = breve_coeffs(tilde_coeffs(L, 12))
    psihat = [s.psihat for s in surd_states(L, 13)]
    product = Fraction(1)
    for n in range(1, 13):
        product *= breve.beta[n - 1]
        assert product == Fraction(L) ** n / 2 * psihat[n + 1] / psihat[n]


def test_gautschi_golden_l4():
    coeffs, state = chain_coeffs(4, 3)
    assert state.r == (
        Fraction(-5),
        Fraction(-13, 15),
        Fraction(-51, 52),
        Fraction(-356, 357),
    )
    assert coeffs.alpha == (Fraction(24, 5), Fraction(323, 65), Fraction(1104, 221))
    assert coeffs.beta == (Fraction(5), Fraction(104, 25), Fraction(680, 169))
    assert coeffs.provenance == "chain"


def test_gautschi_requires_breve_stage():
    with pytest.raises(ValueError):
        gautschi_divide(tilde_coeffs(4, 3), 4, 3)


@pytest.mark.parametrize("L", range(1, 9))
def test_first_ratio_closed_form(L):
    _, state = chain_coeffs(L, 2)
    assert state.r[1] == Fraction(-(L * L + 2 * L + 2), (L + 1) * (L + 2))


def test_r_closed_form_values():
    assert r_closed_form(4, 0) == Fraction(-13, 15)
    assert r_closed_form(4, 2) == Fraction(-356, 357)


@pytest.mark.parametrize("L", [1, 2, 3, 4, 5, 6])
def test_r_recursion_matches_closed_form(L):
    _, state = chain_coeffs(L, 16)
    for n in range(16):
        assert state.r[n + 1] == r_closed_form(L, n)
        assert state.r[n + 1] < 0


def test_stieltjes_golden_l4():
    coeffs = stieltjes_from_moments(a_sequence(4, 7), 4)
    assert coeffs.alpha[:3] == (Fraction(24, 5), Fraction(323, 65), Fraction(1104, 221))
    assert coeffs.beta[:3] == (Fraction(5), Fraction(104, 25), Fraction(680, 169))
    norms = []
    running = Fraction(1)
    for b in coeffs.beta:
        running *= b
        norms.append(running)
    assert norms == [5, Fraction(104, 5), Fraction(1088, 13), Fraction(5696, 17)]
    polys = monic_polynomials(coeffs, 3)
    assert polys[1] == [Fraction(-24, 5), 1]
    assert polys[2] == [Fraction(256, 13), Fraction(-127, 13), 1]
    # x^2 coefficient is -(alpha_0+alpha_1+alpha_2) = -251/17 by the trace identity
    assert polys[3] == [Fraction(-1344, 17), Fraction(1096, 17), Fraction(-251, 17), 1]


def test_stieltjes_needs_enough_moments():
    with pytest.raises(InsufficientTerms):
        stieltjes_from_moments(a_sequence(4, 4), 4)


@pytest.mark.parametrize("L", [1, 4, Fraction(5, 2)])
def test_chain_equals_moments(L):
    chain, _ = chain_coeffs(L, 8)
    moments = stieltjes_from_moments(a_sequence(L, 15), 8)
    assert chain.alpha == moments.alpha
    assert chain.beta == moments.beta


def test_jfraction_depth_one():
    coeffs, _ = chain_coeffs(4, 1)
    series = jfraction_series(coeffs, 1)
    window = a_sequence(4, 1)
    assert series.coefficient(0) == window.terms[0]
    assert series.coefficient(1) == window.terms[1]  # alpha_0 = a_1/a_0


def test_jfraction_reproduces_moments():
    coeffs, _ = chain_coeffs(4, 5)
    series = jfraction_series(coeffs, 8)
    assert series.coefficients(0, 8) == list(a_sequence(4, 8).terms)
    coeffs2 = stieltjes_from_moments(a_sequence(2, 11), 6)
    series2 = jfraction_series(coeffs2, 10)
    assert series2.coefficients(0, 10) == list(a_sequence(2, 10).terms)


def test_jfraction_depth_guard():
    coeffs, _ = chain_coeffs(4, 3)
    with pytest.raises(InsufficientTerms):
        jfraction_series(coeffs, 6)


def test_h_from_products_values():
    coeffs, _ = chain_coeffs(4, 3)
    assert h_from_products(coeffs, 3) == 8704
    assert h_from_products(coeffs, 1) == 5
    assert h_from_products(coeffs, 0) == 1
    coeffs2, _ = chain_coeffs(2, 5)
    assert h_from_products(coeffs2, 5) == 405504


def test_norm_closed_form_values():
    assert norm_closed_form(4, 3) == Fraction(1088, 13)
    assert norm_closed_form(4, 2) == Fraction(104, 5)
    assert norm_closed_form(4, 1) == 5


@pytest.mark.parametrize("L", [2, 3, Fraction(5, 2)])
def test_norm_is_transform_ratio(L):
    for n in range(1, 13):
        assert norm_closed_form(L, n) == h_closed_form(L, n) / h_closed_form(L, n - 1)


def test_norms_positive():
    coeffs, _ = chain_coeffs(3, 12)
    assert all(b > 0 for b in coeffs.beta)
