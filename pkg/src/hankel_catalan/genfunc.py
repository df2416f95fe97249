"""Jacobi polynomials and the closed-form generating functions of the sequence.

Everything here is exact series arithmetic. The ordinary generating function
of a_n is assembled two independent ways: from its closed square-root form,
and from the Jacobi-polynomial generating function with a scaled argument.
Both carry a 1/t pole that must cancel identically; a surviving pole means a
transcription error, not a rounding problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sequences import RationalLike, as_rational, binomial, pascal_t
from .series import TruncatedSeries


class PoleNotCancelled(ArithmeticError):
    """The generating-function pole failed to cancel exactly."""


@dataclass(frozen=True)
class JacobiParams:
    """Jacobi parameter pair (a, b); only small nonnegative integers are used."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("Jacobi parameters must be nonnegative integers")


def jacobi_poly(n: int, p: JacobiParams, x: RationalLike) -> Fraction:
    """Exact value of the degree-n Jacobi polynomial at a rational point.

    Uses the finite sum
    P_n^{(a,b)}(x) = 2^{-n} sum_k C(n+a,k) C(n+b,n-k) (x-1)^{n-k} (x+1)^k.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    xf = as_rational(x)
    total = Fraction(0)
    for k in range(n + 1):
        total += (
            binomial(n + p.a, k)
            * binomial(n + p.b, n - k)
            * (xf - 1) ** (n - k)
            * (xf + 1) ** k
        )
    return total / 2**n


def jacobi_genfun_series(p: JacobiParams, x: RationalLike, order: int) -> TruncatedSeries:
    """Generating function sum_n P_n^{(a,b)}(x) t^n as an exact series in t.

    Assembled as 2^{a+b} / (phi * (1-t+phi)^a * (1+t+phi)^b) with
    phi = sqrt(1 - 2xt + t^2).
    """
    xf = as_rational(x)
    phi = TruncatedSeries([1, -2 * xf, 1], order).sqrt()
    denom = phi
    factor_a = TruncatedSeries([1, -1], order) + phi
    factor_b = TruncatedSeries([1, 1], order) + phi
    for _ in range(p.a):
        denom = denom * factor_a
    for _ in range(p.b):
        denom = denom * factor_b
    return denom.reciprocal() * 2 ** (p.a + p.b)


def rho_series(L: RationalLike, order: int) -> TruncatedSeries:
    """Exact square root of 1 - 2(L+1)t + (L-1)^2 t^2."""
    Lf = as_rational(L)
    return TruncatedSeries([1, -2 * (Lf + 1), (Lf - 1) ** 2], order).sqrt()


def t_sum_identities(L: RationalLike, n_max: int) -> bool:
    """Check that the four central triangle columns are Jacobi evaluations.

    With x = (L+1)/(L-1) (hence L != 1), verifies exactly for n <= n_max:
      T(2n, n; L)     = (L-1)^n     P_n^{(0,0)}(x)
      T(2n+2, n; L)   = (L-1)^n     P_n^{(2,0)}(x)
      T(2n, n-1; L)   = (L-1)^{n-1} P_{n-1}^{(2,0)}(x)   (n >= 1; zero at n=0)
      T(2n+2, n+1; L) = (L-1)^{n+1} P_{n+1}^{(0,0)}(x)
    The last two are the coefficient form of the shifted series identities.
    """
    Lf = as_rational(L)
    if Lf == 1:
        raise ValueError("the substitution x = (L+1)/(L-1) is singular at L = 1")
    x = (Lf + 1) / (Lf - 1)
    legendre = JacobiParams(0, 0)
    shifted = JacobiParams(2, 0)
    if pascal_t(0, -1, Lf) != 0:
        return False
    for n in range(n_max + 1):
        scale = (Lf - 1) ** n
        if pascal_t(2 * n, n, Lf) != scale * jacobi_poly(n, legendre, x):
            return False
        if pascal_t(2 * n + 2, n, Lf) != scale * jacobi_poly(n, shifted, x):
            return False
        if n >= 1 and pascal_t(2 * n, n - 1, Lf) != (Lf - 1) ** (n - 1) * jacobi_poly(
            n - 1, shifted, x
        ):
            return False
        if pascal_t(2 * n + 2, n + 1, Lf) != (Lf - 1) ** (n + 1) * jacobi_poly(
            n + 1, legendre, x
        ):
            return False
    return True


def big_g_series(L: RationalLike, order: int) -> TruncatedSeries:
    """Ordinary generating function of a_n from its closed square-root form.

    Evaluates (t+1)/rho * (1/t - 4/(1 - (L-1)t + rho)^2) - 1/t as a Laurent
    series, asserts the 1/t coefficient vanishes exactly, and returns the
    regular part, whose coefficient of t^n is a_n(L).
    """
    Lf = as_rational(L)
    work = order + 1
    rho = rho_series(Lf, work)
    inv_t = TruncatedSeries([1], work, min_exp=-1)
    bracket_base = TruncatedSeries([1, -(Lf - 1)], work) + rho
    inner = inv_t - (bracket_base * bracket_base).reciprocal() * 4
    g = TruncatedSeries([1, 1], work) * rho.reciprocal() * inner - inv_t
    pole = g.coefficient(-1)
    if pole != 0:
        raise PoleNotCancelled(f"1/t coefficient is {pole}, expected 0")
    return g.regular_part().truncate(order)


def big_g_series_from_jacobi(L: RationalLike, order: int) -> TruncatedSeries:
    """Same generating function assembled from Jacobi generating functions.

    Evaluates (t+1)/t * G^{(0,0)} - (t+1) * G^{(2,0)} - 1/t, both G's taken
    at x = (L+1)/(L-1) with argument scaled by (L-1). Requires L != 1.
    """
    Lf = as_rational(L)
    if Lf == 1:
        raise ValueError("the substitution x = (L+1)/(L-1) is singular at L = 1")
    work = order + 1
    x = (Lf + 1) / (Lf - 1)
    g00 = jacobi_genfun_series(JacobiParams(0, 0), x, work).scale_argument(Lf - 1)
    g20 = jacobi_genfun_series(JacobiParams(2, 0), x, work).scale_argument(Lf - 1)
    one_plus_inv_t = TruncatedSeries([1, 1], work, min_exp=-1)  # (t+1)/t
    inv_t = TruncatedSeries([1], work, min_exp=-1)
    g = one_plus_inv_t * g00 - TruncatedSeries([1, 1], work) * g20 - inv_t
    pole = g.coefficient(-1)
    if pole != 0:
        raise PoleNotCancelled(f"1/t coefficient is {pole}, expected 0")
    return g.regular_part().truncate(order)


def f_series(L: RationalLike, order: int) -> TruncatedSeries:
    """Moment generating function sum_k a_k z^{-k-1} as a series in u = 1/z.

    The closed form -1 + 2(z+1)/(z - L + 1 + R(z)) becomes, after z = 1/u,
    -1 + 2(1+u)/(1 - (L-1)u + rho(u)); its constant term must vanish and the
    coefficient of u^{k+1} is a_k(L). (The denominator follows from
    (1 - (L-1)u + rho)^2 - 4u = 2 rho (1 - (L-1)u + rho); flipping the sign
    of the (L-1) term breaks every coefficient except at L = 1.)
    """
    Lf = as_rational(L)
    denom = TruncatedSeries([1, -(Lf - 1)], order) + rho_series(Lf, order)
    f = TruncatedSeries([1, 1], order) * denom.reciprocal() * 2 - TruncatedSeries(
        [1], order
    )
    constant = f.coefficient(0)
    if constant != 0:
        raise PoleNotCancelled(f"constant term is {constant}, expected 0")
    return f
