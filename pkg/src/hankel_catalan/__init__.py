"""Exact Hankel transforms of sums of consecutive generalized Catalan numbers.

The transform h_n of a_n(L) = c(n;L) + c(n+1;L) is computed by four
independent exact routes (determinant, surd closed form, orthogonal-polynomial
beta products, explicit polynomial) plus series and quadrature cross-checks
of the generating functions and the underlying weight.
"""

from .genfunc import (
    JacobiParams,
    PoleNotCancelled,
    big_g_series,
    big_g_series_from_jacobi,
    f_series,
    jacobi_genfun_series,
    jacobi_poly,
    rho_series,
    t_sum_identities,
)
from .hankel import (
    HankelMatrix,
    InsufficientTerms,
    NonIntegerResult,
    SurdState,
    VerificationReport,
    fibonacci_check,
    h_closed_form,
    h_polynomial_form,
    hankel_det,
    lemma_identities,
    surd_states,
)
from .opoly import (
    ChainStage,
    DivisionByZeroR,
    GautschiState,
    RecurrenceCoeffs,
    ZeroNorm,
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
from .sequences import (
    InconsistentA0,
    SequenceParams,
    SequenceWindow,
    a_sequence,
    as_rational,
    binomial,
    gen_catalan,
    pascal_t,
)
from .series import (
    BadConstantTerm,
    LaurentPoleError,
    TruncatedSeries,
    ZeroLeadingCoefficient,
    geometric,
)
from .verify import verify_cell, verify_grid
from .weight import (
    DomainError,
    QuadratureConfig,
    WeightSpec,
    moment_quadrature,
    orthogonality_check,
    polynomial_quadrature,
    weight_eval,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
