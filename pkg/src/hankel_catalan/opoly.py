"""Three-term recurrence coefficients for the sequence's moment functional.

Two fully independent derivations of the monic-orthogonal-polynomial
coefficients (alpha_k, beta_k):

* the modification chain: monic Chebyshev second kind -> multiply the weight
  by a linear factor -> affine change of variable -> constant rescale ->
  divide by x (Gautschi's algorithm with an auxiliary ratio sequence r_n);
* the Stieltjes procedure straight from the moments a_n.

The chain enters exact rational arithmetic at the "tilde" stage, where every
coefficient is a ratio of the integer carriers psihat/sigma; the two earlier
stages involve pi and sqrt(L) and are kept in float64 purely as a
cross-check. Products of betas reconstruct the Hankel determinants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .hankel import InsufficientTerms, surd_states
from .sequences import RationalLike, SequenceWindow, as_rational, window_terms
from .series import TruncatedSeries


class DivisionByZeroR(ZeroDivisionError):
    """An auxiliary ratio r_n hit zero; the functional lost positive-definiteness."""


class ZeroNorm(ZeroDivisionError):
    """A squared norm vanished; the functional is not positive definite."""


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """Monic three-term recurrence data: Q_{n+1} = (x - alpha_n) Q_n - beta_n Q_{n-1}.

    beta[0] is the total mass of the functional (= a_0).
    """

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]
    provenance: str  # "chain" or "moments"

    def __post_init__(self):
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta must have equal length")
        if any(b <= 0 for b in self.beta):
            raise ValueError("all beta must be positive for a positive-definite functional")


@dataclass(frozen=True)
class ChainStage:
    """Coefficients at one stage of the weight-modification chain.

    For the exact stages the lists hold Fractions; the hat stage holds
    float64. When beta0_times_pi is set, beta[0] stores the rational factor
    of a value beta[0] * pi.
    """

    stage: str  # "base" | "hat" | "tilde" | "breve"
    L: Optional[Fraction]
    alpha: tuple
    beta: tuple
    beta0_times_pi: bool = False


@dataclass(frozen=True)
class GautschiState:
    """Auxiliary ratios r_{-1}, r_0, r_1, ... from the divide-by-x step."""

    r: tuple[Fraction, ...]


def base_stage(n_max: int) -> ChainStage:
    """Monic Chebyshev (second kind) coefficients: alpha = 0, beta_0 = pi/2, beta_n = 1/4."""
    beta = [Fraction(1, 2)] + [Fraction(1, 4)] * (n_max - 1)
    return ChainStage(
        stage="base",
        L=None,
        alpha=(Fraction(0),) * n_max,
        beta=tuple(beta),
        beta0_times_pi=True,
    )


def lambda_closed(L: float, n: int) -> float:
    """Value of the monic Chebyshev polynomial at c = -(L+2)/(2 sqrt L).

    Closed form (-1)^n * psihat_{n+1} / (2 * 4^n * L^{n/2}); psihat is
    computed exactly and converted at the end. Defined for n >= -1.
    """
    if n < -1:
        raise ValueError("index must be at least -1")
    if n == -1:
        return 0.0
    psihat = surd_states(as_rational(L), n + 1)[n + 1].psihat
    sign = -1.0 if n % 2 else 1.0
    return sign * float(psihat) / (2.0 * 4.0**n * float(L) ** (n / 2))


def hat_stage(L: float, n_max: int) -> ChainStage:
    """Float64 coefficients after multiplying the Chebyshev weight by (x - c).

    beta[0] is the total mass of (x - c) sqrt(1 - x^2), namely -c*pi/2.
    Exists only as a consistency check; the exact pipeline starts at the
    tilde stage.
    """
    c = -(L + 2) / (2.0 * math.sqrt(L))
    lam = [lambda_closed(L, n) for n in range(-1, n_max + 2)]  # lam[i] = lambda_{i-1}
    alpha = []
    beta = [-c * math.pi / 2.0]
    for n in range(n_max):
        l_prev, l_n, l_next = lam[n], lam[n + 1], lam[n + 2]
        alpha.append(c - l_next / l_n - 0.25 * l_n / l_next)
        if n >= 1:
            beta.append(0.25 * l_prev * l_next / (l_n * l_n))
    return ChainStage(stage="hat", L=as_rational(L), alpha=tuple(alpha), beta=tuple(beta))


def tilde_coeffs(L: RationalLike, n_max: int) -> ChainStage:
    """Exact coefficients after mapping the support onto ((sqrt L - 1)^2, (sqrt L + 1)^2).

    alpha_n = -1 + psihat_{n+2}/(2 psihat_{n+1}) + 2L psihat_{n+1}/psihat_{n+2};
    beta_n = L psihat_n psihat_{n+2} / psihat_{n+1}^2 for n >= 1, while
    beta_0 is (L+2)/2 times pi (kept as the rational factor plus a flag).
    The psihat ratios are where the sqrt(L) and sqrt(L^2+4) factors cancel,
    which is what makes this stage exactly rational.
    """
    Lf = as_rational(L)
    if n_max < 1:
        raise ValueError("need at least one coefficient")
    states = surd_states(Lf, n_max + 1)
    psihat = [s.psihat for s in states]
    alpha = []
    beta = [(Lf + 2) / 2]
    for n in range(n_max):
        alpha.append(-1 + psihat[n + 2] / (2 * psihat[n + 1]) + 2 * Lf * psihat[n + 1] / psihat[n + 2])
        if n >= 1:
            beta.append(Lf * psihat[n] * psihat[n + 2] / psihat[n + 1] ** 2)
    return ChainStage(
        stage="tilde", L=Lf, alpha=tuple(alpha), beta=tuple(beta), beta0_times_pi=True
    )


def breve_coeffs(stage: ChainStage) -> ChainStage:
    """Rescale the weight by 2L/pi: only the mass changes, to L(L+2) exactly."""
    if stage.stage != "tilde":
        raise ValueError(f"expected the tilde stage, got {stage.stage!r}")
    L = stage.L
    beta = (L * (L + 2),) + stage.beta[1:]
    return ChainStage(stage="breve", L=L, alpha=stage.alpha, beta=beta)


def gautschi_divide(
    stage: ChainStage, L: RationalLike, n_max: int
) -> tuple[RecurrenceCoeffs, GautschiState]:
    """Divide the weight by x: final coefficients via the auxiliary ratios r_n.

    r_{-1} = -(L+1) (minus the mass of the divided weight), then
    r_n = -(alpha'_n + beta'_n / r_{n-1}). The outputs are
    alpha_0 = alpha'_0 + r_0, alpha_k = alpha'_k + r_k - r_{k-1},
    beta_0 = -r_{-1}, beta_k = beta'_{k-1} r_{k-1} / r_{k-2}.
    """
    if stage.stage != "breve":
        raise ValueError(f"expected the breve stage, got {stage.stage!r}")
    Lf = as_rational(L)
    if stage.L != Lf:
        raise ValueError(f"stage was built for L = {stage.L}, not {Lf}")
    if n_max < 1 or n_max > len(stage.alpha):
        raise ValueError(f"cannot produce {n_max} coefficients from a stage of size {len(stage.alpha)}")
    r = [Fraction(-(Lf + 1))]
    for n in range(n_max):
        r_next = -(stage.alpha[n] + stage.beta[n] / r[-1])
        if r_next == 0:
            raise DivisionByZeroR(f"r_{n} = 0")
        r.append(r_next)
    alpha = [stage.alpha[0] + r[1]]
    beta = [-r[0]]
    for k in range(1, n_max):
        alpha.append(stage.alpha[k] + r[k + 1] - r[k])
        beta.append(stage.beta[k - 1] * r[k] / r[k - 1])
    return (
        RecurrenceCoeffs(alpha=tuple(alpha), beta=tuple(beta), provenance="chain"),
        GautschiState(r=tuple(r)),
    )


def chain_coeffs(L: RationalLike, n_max: int) -> tuple[RecurrenceCoeffs, GautschiState]:
    """Run the exact part of the chain end to end: tilde -> breve -> divide by x."""
    Lf = as_rational(L)
    return gautschi_divide(breve_coeffs(tilde_coeffs(Lf, n_max)), Lf, n_max)


def r_closed_form(L: RationalLike, n: int) -> Fraction:
    """Explicit value of the auxiliary ratio:
    r_n = -(psihat_{n+1}/psihat_{n+2}) * (sigma_{n+2}/sigma_{n+1})."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    Lf = as_rational(L)
    states = surd_states(Lf, n + 2)
    return -(states[n + 1].psihat / states[n + 2].psihat) * (
        states[n + 2].sigma / states[n + 1].sigma
    )


def stieltjes_from_moments(
    seq: Union[SequenceWindow, Sequence[RationalLike]], n_max: int
) -> RecurrenceCoeffs:
    """Recurrence coefficients straight from the moments, exactly.

    Builds the monic family Q_0, Q_1, ... by its own recurrence, computing
    alpha_n = U[x Q_n^2]/U[Q_n^2] and beta_n = U[Q_n^2]/U[Q_{n-1}^2]
    (beta_0 = a_0), where U maps x^i to the i-th moment.
    """
    moments = window_terms(seq)
    if len(moments) < 2 * n_max:
        raise InsufficientTerms(f"need a_0..a_{2 * n_max - 1}, window has {len(moments)} terms")

    def functional(poly: list[Fraction]) -> Fraction:
        return sum((c * moments[i] for i, c in enumerate(poly) if c), Fraction(0))

    q_prev: list[Fraction] = []  # Q_{-1} = 0
    q: list[Fraction] = [Fraction(1)]  # Q_0
    norm_prev = Fraction(1)
    alpha, beta = [], []
    for n in range(n_max):
        q_sq = _poly_mul(q, q)
        norm = functional(q_sq)
        if norm == 0:
            raise ZeroNorm(f"U[Q_{n}^2] = 0")
        a_n = functional([Fraction(0)] + q_sq) / norm
        alpha.append(a_n)
        beta.append(moments[0] if n == 0 else norm / norm_prev)
        # Q_{n+1} = (x - alpha_n) Q_n - beta_n Q_{n-1}
        q_next = [Fraction(0)] + q
        for i, c in enumerate(q):
            q_next[i] -= a_n * c
        b_n = beta[-1]
        for i, c in enumerate(q_prev):
            q_next[i] -= b_n * c
        q_prev, q = q, q_next
        norm_prev = norm
    return RecurrenceCoeffs(alpha=tuple(alpha), beta=tuple(beta), provenance="moments")


def monic_polynomials(coeffs: RecurrenceCoeffs, count: int) -> list[list[Fraction]]:
    """Q_0 .. Q_count as ascending coefficient lists, from the recurrence."""
    if count >= len(coeffs.alpha) + 1:
        raise ValueError(f"need {count} coefficient pairs, have {len(coeffs.alpha)}")
    polys = [[Fraction(1)]]
    if count == 0:
        return polys
    polys.append([-coeffs.alpha[0], Fraction(1)])
    for n in range(1, count):
        prev, cur = polys[n - 1], polys[n]
        nxt = [Fraction(0)] + cur
        for i, c in enumerate(cur):
            nxt[i] -= coeffs.alpha[n] * c
        for i, c in enumerate(prev):
            nxt[i] -= coeffs.beta[n] * c
        polys.append(nxt)
    return polys


def jfraction_series(coeffs: RecurrenceCoeffs, order: int) -> TruncatedSeries:
    """Expand the continued fraction a_0/(1 - alpha_0 x - beta_1 x^2/(...)).

    Evaluated bottom-up in exact series arithmetic; a depth of m coefficient
    pairs pins coefficients 0..2m-1, which must cover the requested order.
    Note the partial denominators are 1 - alpha_k x: the opposite sign fails
    to reproduce the moments for any positive sequence.
    """
    m = len(coeffs.alpha)
    if order > 2 * m - 1:
        raise InsufficientTerms(f"depth {m} pins {2 * m} coefficients, order {order} requested")
    denom = TruncatedSeries([1, -coeffs.alpha[m - 1]], order)
    for k in range(m - 2, -1, -1):
        tail = denom.reciprocal().shift(2) * coeffs.beta[k + 1]
        denom = TruncatedSeries([1, -coeffs.alpha[k]], order) - tail
    return denom.reciprocal() * coeffs.beta[0]


def h_from_products(coeffs: RecurrenceCoeffs, n: int) -> Fraction:
    """Hankel determinant as the product a_0^n beta_1^{n-1} ... beta_{n-1}.

    Computed in the running form h_n = (beta_0 beta_1 ... beta_{n-1}) h_{n-1}
    with beta_0 = a_0; h_0 = 1.
    """
    if n > len(coeffs.beta):
        raise InsufficientTerms(f"need beta_0..beta_{n - 1}, have {len(coeffs.beta)}")
    h = Fraction(1)
    running = Fraction(1)
    for k in range(n):
        running *= coeffs.beta[k]
        h *= running
    return h


def norm_closed_form(L: RationalLike, n: int) -> Fraction:
    """Squared norm of Q_{n-1} in closed form: (L^{n-1}/2) sigma_n / sigma_{n-1}.

    Equals beta_0 ... beta_{n-1} and therefore h_n / h_{n-1}.
    """
    if n < 1:
        raise ValueError("index must be positive")
    Lf = as_rational(L)
    states = surd_states(Lf, n)
    return Lf ** (n - 1) / 2 * states[n].sigma / states[n - 1].sigma


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out
