"""Real special functions used by the sharp constants.

Everything here works in double precision on plain floats.
"""

from __future__ import annotations

import math

__all__ = ["gamma", "beta", "sinc_sigma", "unit_sphere_area"]

_SINC_SERIES_CUTOFF = 1e-4


def _check_positive(name: str, x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"{name} must be positive and finite, got {x!r}")
    return x


def gamma(x: float) -> float:
    """Gamma function for real x > 0."""
    x = _check_positive("x", x)
    return math.gamma(x)


def beta(a: float, b: float) -> float:
    """Euler Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)."""
    a = _check_positive("a", a)
    b = _check_positive("b", b)
    if a + b < 170.0:
        return math.gamma(a) * math.gamma(b) / math.gamma(a + b)
    # Gamma overflows past ~171.6
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def sinc_sigma(r: float) -> float:
    """Return sin(r*pi) / (r*pi) for 0 <= r < 1.

    r = n/(2s) >= 1 corresponds to s <= n/2, where none of the
    inequalities hold, so it is rejected.
    """
    r = float(r)
    if not math.isfinite(r) or r < 0.0 or r >= 1.0:
        raise ValueError(f"sinc_sigma requires 0 <= r < 1, got {r!r}")
    x = r * math.pi
    if x < _SINC_SERIES_CUTOFF:
        # remainder x**6/5040 < 1e-27 here
        x2 = x * x
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    return math.sin(x) / x


def unit_sphere_area(n: int) -> float:
    """Surface area of the unit sphere in R^n, 2 pi^(n/2) / Gamma(n/2)."""
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    n = int(n)
    return 2.0 * math.pi ** (n / 2.0) / math.gamma(n / 2.0)
