"""Numerical validation of the weight function behind the moment functional.

The derived weight is (1/2pi)(1 + 1/x) sqrt(4L - (x-L-1)^2) on the interval
((sqrt L - 1)^2, (sqrt L + 1)^2). This module checks, in float64, that its
moments really are a_n and that the final monic polynomials are orthogonal
under it. Every integral is taken after the substitution
x = L + 1 + 2 sqrt(L) cos(theta), which turns the integrand into a smooth
(periodic) function of theta: the endpoint square-root singularities and the
x^(-1/2) endpoint behaviour at L = 1 are absorbed exactly, so simple rules
converge spectrally. Exactness lives elsewhere; a mismatch here beyond
tolerance signals a transcription error in the weight, not rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .opoly import chain_coeffs, monic_polynomials
from .sequences import RationalLike, as_rational


class DomainError(ValueError):
    """The weight is undefined at x = 0 (reachable only for L = 1)."""


@dataclass(frozen=True)
class WeightSpec:
    """Weight parameter and its support endpoints."""

    L: float
    support_lo: float
    support_hi: float

    @classmethod
    def for_parameter(cls, L: float) -> "WeightSpec":
        if L <= 0:
            raise ValueError(f"parameter L must be positive, got {L}")
        root = math.sqrt(L)
        return cls(L=float(L), support_lo=(root - 1) ** 2, support_hi=(root + 1) ** 2)


@dataclass(frozen=True)
class QuadratureConfig:
    node_count: int = 4000
    scheme: str = "theta-midpoint"

    def __post_init__(self):
        if self.node_count < 16:
            raise ValueError("node_count must be at least 16")
        if self.scheme not in ("theta-midpoint", "theta-gauss"):
            raise ValueError(f"unknown scheme {self.scheme!r}")


def weight_eval(x: float, spec: WeightSpec) -> float:
    """Pointwise weight value; exactly 0 outside the open support."""
    if x == 0.0:
        raise DomainError("weight undefined at x = 0")
    if not spec.support_lo < x < spec.support_hi:
        return 0.0
    radicand = 4.0 * spec.L - (x - spec.L - 1.0) ** 2
    if radicand <= 0.0:
        return 0.0
    return (1.0 + 1.0 / x) * math.sqrt(radicand) / (2.0 * math.pi)


def _theta_nodes(cfg: QuadratureConfig) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on (0, pi); open rules so x = 0 is never sampled."""
    n = cfg.node_count
    if cfg.scheme == "theta-midpoint":
        theta = (np.arange(n) + 0.5) * (math.pi / n)
        w = np.full(n, math.pi / n)
    else:
        nodes, w = np.polynomial.legendre.leggauss(n)
        theta = (nodes + 1.0) * (math.pi / 2.0)
        w = w * (math.pi / 2.0)
    return theta, w


def _substituted(spec: WeightSpec, cfg: QuadratureConfig) -> tuple[np.ndarray, np.ndarray]:
    """Abscissae x(theta) and combined quadrature factor for integrals against the weight.

    integral f(x) w(x) dx = (2L/pi) integral_0^pi f(x(theta)) (1 + 1/x) sin^2(theta) dtheta.
    """
    theta, w = _theta_nodes(cfg)
    x = spec.L + 1.0 + 2.0 * math.sqrt(spec.L) * np.cos(theta)
    factor = (2.0 * spec.L / math.pi) * (1.0 + 1.0 / x) * np.sin(theta) ** 2
    return x, w * factor


def moment_quadrature(spec: WeightSpec, n: int, cfg: QuadratureConfig) -> float:
    """Approximate the n-th moment of the weight."""
    x, w = _substituted(spec, cfg)
    return float(w @ x**n)


def polynomial_quadrature(
    spec: WeightSpec, coeffs: Sequence, cfg: QuadratureConfig
) -> float:
    """Integral of a polynomial (ascending coefficients) against the weight."""
    x, w = _substituted(spec, cfg)
    values = np.polynomial.polynomial.polyval(x, np.array([float(c) for c in coeffs]))
    return float(w @ values)


def orthogonality_check(L: RationalLike, n_max: int, cfg: QuadratureConfig) -> float:
    """Largest normalized off-diagonal inner product among Q_0 .. Q_{n_max}.

    The polynomials come from the exact chain coefficients; each pair
    integral is divided by the product of the quadrature norms, so the
    result is a dimensionless residual that should sit at quadrature noise.
    """
    Lf = as_rational(L)
    coeffs, _ = chain_coeffs(Lf, max(n_max, 1))
    polys = monic_polynomials(coeffs, n_max)
    spec = WeightSpec.for_parameter(float(Lf))
    x, w = _substituted(spec, cfg)
    values = [
        np.polynomial.polynomial.polyval(x, np.array([float(c) for c in poly]))
        for poly in polys
    ]
    norms = [math.sqrt(float(w @ (v * v))) for v in values]
    worst = 0.0
    for i in range(n_max + 1):
        for j in range(i + 1, n_max + 1):
            residual = abs(float(w @ (values[i] * values[j]))) / (norms[i] * norms[j])
            worst = max(worst, residual)
    return worst
