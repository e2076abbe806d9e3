"""Numerical checks of the supnorm inequalities and of their sharpness.

With A = ||u||_2, B = ||u||_{H^s-dot} and alpha = n/(2s):

    l1_bound       ||u||_inf <= (2 pi)^(-n/2) ||u_hat||_1
    embedding      ||u||_inf <= C(n, s) (A^2 + B^2)^(1/2)
    interpolation  ||u||_inf <= K(n, s) A^(1-alpha) B^alpha
    young          Y(n, s) A^(1-alpha) B^alpha <= (A^2 + B^2)^(1/2)

The interpolation bound is the embedding bound applied to u(lam x) at the
best lam; :func:`lambda_sweep` samples that one-parameter family.
"""

from __future__ import annotations

import math

import numpy as np

from .constants import (
    SobolevIndex,
    embedding_constant,
    gn_constant,
    optimal_lambda,
    scaling_objective,
    young_factor,
)
from .extremizer import ExtremizerSpec, extremizer_grid, extremizer_norms_exact
from .reports import InequalityReport, ScalingSweepResult
from .spectral import GridFunction, GridSpec, NormBundle, default_points, l1_bound_check, norms

__all__ = [
    "INEQUALITY_TOL",
    "GRID_SHARPNESS_TOL",
    "EXACT_SHARPNESS_TOL",
    "YOUNG_TOL",
    "interpolation_report",
    "embedding_report",
    "check_interpolation",
    "check_embedding",
    "check_young",
    "check_all",
    "rescale_norms",
    "lambda_sweep",
    "lambda_sweep_from_norms",
    "sharpness_ratio",
    "l1_bound_check",
]

INEQUALITY_TOL = 1e-9
GRID_SHARPNESS_TOL = 1e-4
EXACT_SHARPNESS_TOL = 1e-9
YOUNG_TOL = 1e-12

DEFAULT_BOX = 60.0


def _check_dims(u: GridFunction, idx: SobolevIndex) -> None:
    if u.spec.n != idx.n:
        raise ValueError(f"grid dimension {u.spec.n} does not match n = {idx.n}")


def interpolation_report(b: NormBundle, idx: SobolevIndex, tolerance: float = INEQUALITY_TOL,
                         grid_meta="exact", equality_expected: bool = False) -> InequalityReport:
    k = gn_constant(idx)
    alpha = idx.alpha
    degenerate = b.sup == 0.0 and b.l2 == 0.0
    rhs = 0.0 if degenerate else k * b.l2 ** (1.0 - alpha) * b.hs_semi**alpha
    return InequalityReport("interpolation", b.sup, rhs, k, tolerance, grid_meta,
                            degenerate=degenerate, equality_expected=equality_expected)


def embedding_report(b: NormBundle, idx: SobolevIndex, tolerance: float = INEQUALITY_TOL,
                     grid_meta="exact", equality_expected: bool = False) -> InequalityReport:
    c = embedding_constant(idx)
    degenerate = b.sup == 0.0 and b.l2 == 0.0
    return InequalityReport("embedding", b.sup, c * b.hs_full, c, tolerance, grid_meta,
                            degenerate=degenerate, equality_expected=equality_expected)


def check_interpolation(u: GridFunction, idx: SobolevIndex,
                        tolerance: float = INEQUALITY_TOL) -> InequalityReport:
    _check_dims(u, idx)
    return interpolation_report(norms(u, idx.s), idx, tolerance, u.spec)


def check_embedding(u: GridFunction, idx: SobolevIndex,
                    tolerance: float = INEQUALITY_TOL) -> InequalityReport:
    _check_dims(u, idx)
    return embedding_report(norms(u, idx.s), idx, tolerance, u.spec)


def check_young(a: float, b: float, idx: SobolevIndex, tolerance: float = YOUNG_TOL) -> InequalityReport:
    if not (a > 0.0 and b > 0.0):
        raise ValueError(f"a and b must be positive, got a={a!r}, b={b!r}")
    y = young_factor(idx)
    alpha = idx.alpha
    lhs = y * a ** (1.0 - alpha) * b**alpha
    return InequalityReport("young", lhs, math.hypot(a, b), y, tolerance, "exact")


def check_all(u: GridFunction, idx: SobolevIndex,
              tolerance: float = INEQUALITY_TOL) -> list[InequalityReport]:
    """l1_bound, embedding and interpolation reports for one function (norms computed once)."""
    _check_dims(u, idx)
    b = norms(u, idx.s)
    return [
        l1_bound_check(u, tolerance),
        embedding_report(b, idx, tolerance, u.spec),
        interpolation_report(b, idx, tolerance, u.spec),
    ]


def rescale_norms(b: NormBundle, lam: float, n: int) -> NormBundle:
    """Norms of u(lam x) from those of u, by the dilation laws."""
    l2 = lam ** (-0.5 * n) * b.l2
    hs = lam ** (b.s - 0.5 * n) * b.hs_semi
    return NormBundle(
        l2=l2,
        hs_semi=hs,
        hs_full=math.hypot(l2, hs),
        sup=b.sup,
        l1_fourier=b.l1_fourier,
        s=b.s,
    )


def lambda_sweep_from_norms(a: float, b: float, idx: SobolevIndex, points: int = 512) -> ScalingSweepResult:
    """Sample f(lam) on ``points`` log-spaced values in [lam*/10, 10 lam*]."""
    if points < 16:
        raise ValueError(f"need at least 16 sample points, got {points}")
    if a == 0.0 or b == 0.0:
        empty = np.zeros(0)
        return ScalingSweepResult(empty, empty, 0.0, 0.0, 0.0, a, b, degenerate=True)
    lam_star = optimal_lambda(idx, a, b)
    lambdas = lam_star * np.logspace(-1.0, 1.0, points)
    objective = scaling_objective(idx, a, b, lambdas)
    y = young_factor(idx)
    alpha = idx.alpha
    closed = y * y * a ** (2.0 * (1.0 - alpha)) * b ** (2.0 * alpha)
    return ScalingSweepResult(
        lambdas=lambdas,
        objective=objective,
        argmin_sampled=float(lambdas[int(np.argmin(objective))]),
        lambda_star=lam_star,
        min_value_closed_form=closed,
        a=a,
        b=b,
    )


def lambda_sweep(u: GridFunction, idx: SobolevIndex, points: int = 512) -> ScalingSweepResult:
    _check_dims(u, idx)
    b = norms(u, idx.s)
    return lambda_sweep_from_norms(b.l2, b.hs_semi, idx, points)


def default_grid(n: int, N: int | None = None, L: float | None = None) -> GridSpec:
    return GridSpec(n, N or default_points(n), DEFAULT_BOX if L is None else L)


def sharpness_ratio(idx: SobolevIndex, method: str = "exact", N: int | None = None,
                    L: float | None = None, c: float = 1.0) -> float:
    """lhs/rhs of the interpolation inequality for the extremizer."""
    spec = ExtremizerSpec(idx, c)
    if method == "exact":
        b = extremizer_norms_exact(spec)
    elif method == "grid":
        g = default_grid(idx.n, N, L)
        b = norms(extremizer_grid(spec, g), idx.s)
    else:
        raise ValueError(f"method must be 'exact' or 'grid', got {method!r}")
    return interpolation_report(b, idx).ratio
