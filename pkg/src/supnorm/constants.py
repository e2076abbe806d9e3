"""Closed-form sharp constants for the H^s supnorm inequalities.

With alpha = n/(2s), the interpolation (Gagliardo-Nirenberg) constant is

    K(n, s) = C(n, s) * Y(n, s)

where C is the embedding constant for ||u||_inf <= C ||u||_{H^s} and Y is
the factor picked up when the full H^s norm is traded for
||u||_2^(1-alpha) ||u||_{H^s-dot}^alpha by optimising over dilations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .special import gamma, sinc_sigma

__all__ = [
    "SobolevIndex",
    "gn_constant",
    "embedding_constant",
    "young_factor",
    "optimal_lambda",
    "scaling_objective",
]


@dataclass(frozen=True)
class SobolevIndex:
    """Dimension ``n`` and regularity ``s`` with the standing assumption s > n/2."""

    n: int
    s: float

    def __post_init__(self):
        n, s = self.n, self.s
        if isinstance(n, bool) or int(n) != n or n < 1:
            raise ValueError(f"n must be a positive integer, got {n!r}")
        s = float(s)
        if not math.isfinite(s):
            raise ValueError(f"s must be finite, got {s!r}")
        if not 2.0 * s > n:
            raise ValueError(f"requires s > n/2, got n={n}, s={s}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "s", s)

    @property
    def alpha(self) -> float:
        """The interpolation exponent n/(2s), always in (0, 1)."""
        return self.n / (2.0 * self.s)


def _log_embedding(idx: SobolevIndex) -> float:
    n = idx.n
    return (
        -0.25 * n * math.log(4.0 * math.pi)
        - 0.5 * math.log(0.5 * n * gamma(0.5 * n))
        - 0.5 * math.log(sinc_sigma(idx.alpha))
    )


def _log_young(idx: SobolevIndex) -> float:
    n, s = idx.n, idx.s
    gap = 2.0 * s - n
    return -(n / (4.0 * s)) * math.log(n / gap) + 0.5 * math.log(2.0 * s / gap)


def embedding_constant(idx: SobolevIndex) -> float:
    """Sharp constant C(n, s) in ||u||_inf <= C ||u||_{H^s}."""
    return math.exp(_log_embedding(idx))


def young_factor(idx: SobolevIndex) -> float:
    """(n/(2s-n))^(-n/4s) * (2s/(2s-n))^(1/2)."""
    return math.exp(_log_young(idx))


def gn_constant(idx: SobolevIndex) -> float:
    """Sharp constant K(n, s) in ||u||_inf <= K ||u||_2^(1-n/2s) ||u||_{H^s-dot}^(n/2s).

    For integral s = m this is the constant of the classical
    Gagliardo-Nirenberg supnorm inequality with ||D^m u||_2.
    """
    return math.exp(_log_embedding(idx) + _log_young(idx))


def scaling_objective(idx: SobolevIndex, a: float, b: float, lam):
    """f(lam) = lam^(-n) a^2 + lam^(2s-n) b^2, the squared H^s norm of u(lam x)."""
    n, s = idx.n, idx.s
    return lam ** (-n) * a * a + lam ** (2.0 * s - n) * b * b


def optimal_lambda(idx: SobolevIndex, a: float, b: float) -> float:
    """Minimiser of :func:`scaling_objective` over lam > 0.

    ``a`` is ||u||_2 and ``b`` the homogeneous seminorm. When a == 0 the
    objective is monotone and there is no interior minimiser; 0.0 is
    returned as a sentinel.
    """
    a, b = float(a), float(b)
    if not (math.isfinite(b) and b > 0.0):
        raise ValueError(f"b must be positive, got {b!r}")
    if not (math.isfinite(a) and a >= 0.0):
        raise ValueError(f"a must be nonnegative, got {a!r}")
    if a == 0.0:
        return 0.0
    n, s = idx.n, idx.s
    log_lam = (math.log(n) - math.log(2.0 * s - n) + 2.0 * (math.log(a) - math.log(b))) / (2.0 * s)
    return math.exp(log_lam)
