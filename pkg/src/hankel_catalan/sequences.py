"""Generalized Pascal triangle, generalized Catalan numbers, and the target sequence.

The triangle entry T(n, k; L) = sum_j C(k,j)*C(n-k,j)*L^j generalizes Pascal's
triangle (L=1 collapses to binomials by Vandermonde convolution). Differences
of central columns give generalized Catalan numbers c(n; L), and the sequence
under study is a_n = c(n; L) + c(n+1; L) with a_0 = L + 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

RationalLike = Union[int, str, Fraction]


class InconsistentA0(ArithmeticError):
    """c(0;L) + c(1;L) failed to equal L + 1; signals an implementation bug."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce int / 'p/q' string / Fraction to an exact Fraction."""
    return value if isinstance(value, Fraction) else Fraction(value)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pascal_t(n: int, k: int, L: RationalLike) -> Fraction:
    """Entry T(n, k; L) of the generalized Pascal triangle; zero for k < 0."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    if k < 0 or k > n:
        return Fraction(0)
    Lf = as_rational(L)
    total = Fraction(0)
    power = Fraction(1)
    for j in range(n - k + 1):
        total += binomial(k, j) * binomial(n - k, j) * power
        power *= Lf
    return total


def gen_catalan(n: int, L: RationalLike) -> Fraction:
    """Generalized Catalan number c(n; L) = T(2n, n; L) - T(2n, n-1; L).

    c(0; L) = 1 since the k = -1 entry is an empty triangle edge.
    """
    return pascal_t(2 * n, n, L) - pascal_t(2 * n, n - 1, L)


@dataclass(frozen=True)
class SequenceParams:
    """The weight parameter L; any positive rational is accepted."""

    L: Fraction

    def __post_init__(self):
        if self.L <= 0:
            raise ValueError(f"parameter L must be positive, got {self.L}")


@dataclass(frozen=True)
class SequenceWindow:
    """Terms a_0 .. a_n_max of the sum-of-consecutive-Catalan sequence."""

    params: SequenceParams
    terms: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, n: int) -> Fraction:
        return self.terms[n]


def a_sequence(L: RationalLike, n_max: int) -> SequenceWindow:
    """Window a_0 .. a_n_max, with a_n = c(n;L) + c(n+1;L) and a_0 = L + 1.

    The defining a_0 = L + 1 and the sum c(0;L) + c(1;L) must agree; a
    mismatch would mean the triangle conventions are broken.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    params = SequenceParams(as_rational(L))
    c_prev = gen_catalan(0, params.L)
    c_next = gen_catalan(1, params.L)
    if c_prev + c_next != params.L + 1:
        raise InconsistentA0(
            f"c(0)+c(1) = {c_prev + c_next} differs from L+1 = {params.L + 1}"
        )
    terms = [params.L + 1]
    for n in range(1, n_max + 1):
        c_prev, c_next = c_next, gen_catalan(n + 1, params.L)
        terms.append(c_prev + c_next)
    return SequenceWindow(params=params, terms=tuple(terms))


def window_terms(seq: Union[SequenceWindow, Sequence[RationalLike]]) -> tuple[Fraction, ...]:
    """Accept either a SequenceWindow or a bare list of rationals."""
    if isinstance(seq, SequenceWindow):
        return seq.terms
    return tuple(as_rational(t) for t in seq)
