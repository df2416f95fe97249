"""Hankel determinants and the closed-form transform of the target sequence.

Determinants are computed exactly: fraction-free (Bareiss) elimination over
the integers, falling back to a common-denominator scaling for rational
entries. The closed form h_n = L^{n(n-1)/2} * sigma_n / 2^{n+1} runs entirely
on rational carriers of the surd expressions, so sqrt(L^2+4) never appears:
phi_n, psihat_n and sigma_n all satisfy x_{n+1} = 2(L+2) x_n - 4L x_{n-1}.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .sequences import RationalLike, SequenceWindow, as_rational, binomial, window_terms


class InsufficientTerms(ValueError):
    """The supplied sequence window is too short for the requested determinant."""


class NonIntegerResult(RuntimeWarning):
    """Integer L produced a non-integer transform value; falsifies the closed form."""


@dataclass(frozen=True)
class HankelMatrix:
    """n x n matrix with entry(i, j) = a_{i+j}; antidiagonals are constant."""

    dim: int
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_terms(cls, seq: Union[SequenceWindow, Sequence[RationalLike]], n: int) -> "HankelMatrix":
        terms = window_terms(seq)
        if n < 1:
            raise ValueError("matrix dimension must be positive")
        if len(terms) < 2 * n - 1:
            raise InsufficientTerms(f"need a_0..a_{2 * n - 2}, window has {len(terms)} terms")
        rows = tuple(tuple(terms[i + j] for j in range(n)) for i in range(n))
        return cls(dim=n, entries=rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]


def _bareiss_det(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free elimination; consumes `rows`."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def hankel_det(seq: Union[SequenceWindow, Sequence[RationalLike]], n: int) -> Fraction:
    """Exact n x n Hankel determinant of the window; h_0 = 1 by convention."""
    if n == 0:
        return Fraction(1)
    matrix = HankelMatrix.from_terms(seq, n)
    denom = 1
    for row in matrix.entries:
        for value in row:
            denom = denom * value.denominator // math.gcd(denom, value.denominator)
    rows = [[int(v * denom) for v in row] for row in matrix.entries]
    det = _bareiss_det(rows)
    return Fraction(det, denom**n)


# -- integer carriers of the surd closed form --------------------------------


@dataclass(frozen=True)
class SurdState:
    """Power sums of the characteristic roots t_{1,2} = L+2 +- sqrt(L^2+4).

    phi = t1^n + t2^n, psihat = (t1^n - t2^n)/sqrt(L^2+4), and
    sigma = L*psihat + phi. All three are rational (integers for integer L)
    and satisfy x_{n+1} = 2(L+2) x_n - 4L x_{n-1}.
    """

    index: int
    phi: Fraction
    psihat: Fraction
    sigma: Fraction


def surd_states(L: RationalLike, n_max: int) -> list[SurdState]:
    """States 0..n_max of (phi, psihat, sigma) via the shared linear recurrence."""
    Lf = as_rational(L)
    if Lf <= 0:
        raise ValueError("parameter L must be positive")
    p = 2 * (Lf + 2)  # t1 + t2
    q = 4 * Lf  # t1 * t2
    phi, phi_prev = 2 * (Lf + 2), Fraction(2)
    psi, psi_prev = Fraction(2), Fraction(0)
    states = [SurdState(0, phi_prev, psi_prev, Lf * psi_prev + phi_prev)]
    if n_max == 0:
        return states
    states.append(SurdState(1, phi, psi, Lf * psi + phi))
    for n in range(2, n_max + 1):
        phi, phi_prev = p * phi - q * phi_prev, phi
        psi, psi_prev = p * psi - q * psi_prev, psi
        states.append(SurdState(n, phi, psi, Lf * psi + phi))
    return states


def h_closed_form(L: RationalLike, n: int) -> Fraction:
    """Transform value L^{n(n-1)/2} * sigma_n / 2^{n+1}; h_0 = 1.

    For integer L the result is provably an integer; a fractional outcome is
    reported as a NonIntegerResult warning because it would falsify the
    closed form rather than indicate a caller error.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    Lf = as_rational(L)
    sigma = surd_states(Lf, n)[n].sigma
    value = Lf ** (n * (n - 1) // 2) * sigma / 2 ** (n + 1)
    if Lf.denominator == 1 and value.denominator != 1:
        warnings.warn(
            f"h_{n}({Lf}) = {value} is not an integer", NonIntegerResult, stacklevel=2
        )
    return value


def h_polynomial_form(L: RationalLike, n: int) -> Fraction:
    """Transform value as an explicit polynomial in L.

    Expands the surd closed form by the binomial theorem, leaving
    2^{-n} L^{n(n-1)/2} * [ sum_i C(n,2i+1) L (L+2)^{n-2i-1} (L^2+4)^i
                          + sum_i C(n,2i)   (L+2)^{n-2i}     (L^2+4)^i ].
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    Lf = as_rational(L)
    shifted = Lf + 2
    squared = Lf * Lf + 4
    odd_sum = Fraction(0)
    for i in range((n - 1) // 2 + 1 if n >= 1 else 0):
        odd_sum += binomial(n, 2 * i + 1) * Lf * shifted ** (n - 2 * i - 1) * squared**i
    even_sum = Fraction(0)
    for i in range(0, n // 2 + 1):
        even_sum += binomial(n, 2 * i) * shifted ** (n - 2 * i) * squared**i
    return Lf ** (n * (n - 1) // 2) * (odd_sum + even_sum) / 2**n


def fibonacci_check(n_max: int) -> bool:
    """True iff the L=1 transform equals the odd-indexed Fibonacci numbers.

    h_n(1) must equal F_{2n+1} for 1 <= n <= n_max, with F computed by the
    standard integer recurrence.
    """
    fib_prev, fib = 0, 1  # F_0, F_1
    for n in range(1, n_max + 1):
        fib_prev, fib = fib, fib + fib_prev  # advance to F_{2n}
        fib_prev, fib = fib, fib + fib_prev  # advance to F_{2n+1}
        if h_closed_form(1, n) != fib:
            return False
    return True


def lemma_identities(L: RationalLike, j: int, k: int) -> bool:
    """Check the four product identities linking phi and psihat exactly.

    With xi^2 = L^2 + 4 and 0 <= j <= k:
        phi_j*phi_k          = phi_{j+k} + (4L)^j phi_{k-j}
        xi^2*psihat_j*psihat_k = phi_{j+k} - (4L)^j phi_{k-j}
        phi_j*psihat_k       = psihat_{j+k} + (4L)^j psihat_{k-j}
        psihat_j*phi_k       = psihat_{j+k} - (4L)^j psihat_{k-j}
    """
    if not 0 <= j <= k:
        raise ValueError("need 0 <= j <= k")
    Lf = as_rational(L)
    states = surd_states(Lf, j + k)
    xi_sq = Lf * Lf + 4
    scale = (4 * Lf) ** j
    sj, sk = states[j], states[k]
    s_sum, s_diff = states[j + k], states[k - j]
    return (
        sj.phi * sk.phi == s_sum.phi + scale * s_diff.phi
        and xi_sq * sj.psihat * sk.psihat == s_sum.phi - scale * s_diff.phi
        and sj.phi * sk.psihat == s_sum.psihat + scale * s_diff.psihat
        and sj.psihat * sk.phi == s_sum.psihat - scale * s_diff.psihat
    )


@dataclass
class VerificationReport:
    """Per-(L, n) record of the transform computed by each route."""

    L: Fraction
    n: int
    h_det: Optional[Fraction] = None
    h_closed: Optional[Fraction] = None
    h_product: Optional[Fraction] = None
    h_poly: Optional[Fraction] = None
    agree: bool = False
    elapsed: dict[str, float] = field(default_factory=dict)

    def values(self) -> dict[str, Optional[Fraction]]:
        return {
            "det": self.h_det,
            "closed": self.h_closed,
            "product": self.h_product,
            "poly": self.h_poly,
        }

    def computed(self) -> dict[str, Fraction]:
        return {name: v for name, v in self.values().items() if v is not None}
