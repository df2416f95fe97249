"""Multi-route verification grid for the Hankel transform values.

Every cell (L, n) computes the transform by up to four independent routes
(exact determinant, surd closed form, beta-product reconstruction, explicit
polynomial) and records whether they agree exactly. Cells are pure, so the
grid may fan out across threads; reports are always returned sorted by
(L, n), which keeps output deterministic regardless of parallelism.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

from .hankel import VerificationReport, h_closed_form, h_polynomial_form, hankel_det
from .opoly import chain_coeffs, h_from_products
from .sequences import RationalLike, a_sequence, as_rational

ROUTES = ("det", "closed", "product", "poly")


def verify_cell(L: RationalLike, n: int, routes: Sequence[str] = ROUTES) -> VerificationReport:
    """Compute one (L, n) transform value by the requested routes."""
    Lf = as_rational(L)
    if n < 1:
        raise ValueError("n must be positive")
    report = VerificationReport(L=Lf, n=n)
    if "det" in routes:
        start = time.perf_counter()
        window = a_sequence(Lf, 2 * n - 2)
        report.h_det = hankel_det(window, n)
        report.elapsed["det"] = time.perf_counter() - start
    if "closed" in routes:
        start = time.perf_counter()
        report.h_closed = h_closed_form(Lf, n)
        report.elapsed["closed"] = time.perf_counter() - start
    if "product" in routes:
        start = time.perf_counter()
        coeffs, _ = chain_coeffs(Lf, n)
        report.h_product = h_from_products(coeffs, n)
        report.elapsed["product"] = time.perf_counter() - start
    if "poly" in routes:
        start = time.perf_counter()
        report.h_poly = h_polynomial_form(Lf, n)
        report.elapsed["poly"] = time.perf_counter() - start
    report.agree = len(set(report.computed().values())) <= 1
    return report


def verify_grid(
    L_values: Iterable[RationalLike], n_max: int, jobs: int = 1
) -> list[VerificationReport]:
    """All-routes reports for every (L, n) with 1 <= n <= n_max, sorted by (L, n)."""
    cells = [(as_rational(L), n) for L in L_values for n in range(1, n_max + 1)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda cell: verify_cell(*cell), cells))
    else:
        reports = [verify_cell(L, n) for L, n in cells]
    reports.sort(key=lambda rep: (rep.L, rep.n))
    return reports


def first_mismatch(reports: Sequence[VerificationReport]) -> VerificationReport | None:
    for report in reports:
        if not report.agree:
            return report
    return None
