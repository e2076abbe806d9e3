"""Adaptive Gauss-Legendre evaluation of the radial integrals

    I(n, s, p, q) = int_0^inf r^(n-1+2sq) (1 + r^(2s))^(-p) dr

used as an independent oracle for the Beta/reflection closed forms.

The half line is split at r = 1. Writing a = n + 2sq and
delta = 2sp - a (the tail decay rate), the head is mapped by r = v^(5/a)
and the tail by r = v^(-5/delta). Both pieces become

    m * v^4 * (1 + v^(2sm))^(-p)   on [0, 1]

which is bounded and vanishes to fourth order at v = 0, so no piece
carries an endpoint singularity even when delta is small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import SobolevIndex
from .special import beta, sinc_sigma, unit_sphere_area

__all__ = [
    "QuadratureError",
    "RadialIntegralSpec",
    "LorentzianMass",
    "adaptive_gauss_legendre",
    "radial_integral",
    "radial_integral_closed_form",
    "lorentzian_mass",
    "lorentzian_mass_closed_form",
]

ABS_TOL = 1e-12
REL_TOL = 1e-10
MAX_LEVEL = 30
MIN_DECAY = 1e-6

_ORDER = 15
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(_ORDER)
_V_POWER = 4.0


class QuadratureError(ArithmeticError):
    """Raised when adaptive refinement hits the level cap without converging."""

    def __init__(self, message: str, estimates: tuple[float, float]):
        super().__init__(f"{message} (last estimates {estimates[0]!r}, {estimates[1]!r})")
        self.estimates = estimates


@dataclass(frozen=True)
class RadialIntegralSpec:
    idx: SobolevIndex
    power_p: int = 1
    weight_q: int = 0

    def __post_init__(self):
        p, q = self.power_p, self.weight_q
        if isinstance(p, bool) or int(p) != p or p < 1:
            raise ValueError(f"power_p must be a positive integer, got {p!r}")
        if isinstance(q, bool) or int(q) != q or q < 0:
            raise ValueError(f"weight_q must be a nonnegative integer, got {q!r}")
        object.__setattr__(self, "power_p", int(p))
        object.__setattr__(self, "weight_q", int(q))
        if self.decay <= MIN_DECAY:
            raise ValueError(
                f"divergent or near-divergent radial integral: tail decay "
                f"2sp - n - 2sq = {self.decay!r} must exceed {MIN_DECAY}"
            )

    @property
    def moment(self) -> float:
        """a = n + 2sq, the power of r carried by the measure and weight."""
        return self.idx.n + 2.0 * self.idx.s * self.weight_q

    @property
    def decay(self) -> float:
        return 2.0 * self.idx.s * self.power_p - self.moment


@dataclass(frozen=True)
class LorentzianMass:
    """Integral of (1 + |xi|^(2s))^(-1) over R^n by quadrature and in closed form."""

    quadrature: float
    closed_form: float

    @property
    def relative_error(self) -> float:
        return abs(self.quadrature - self.closed_form) / self.closed_form


def _gl(f, a: float, b: float) -> float:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * float(np.dot(_WEIGHTS, f(mid + half * _NODES)))


def adaptive_gauss_legendre(f, a: float, b: float, *, abs_tol: float = ABS_TOL,
                            rel_tol: float = REL_TOL, max_level: int = MAX_LEVEL) -> float:
    """Integrate a vectorised ``f`` over [a, b] by bisection of 15-point Gauss-Legendre panels.

    A panel is accepted once its own estimate and the sum over its two
    halves agree to within its share of max(abs_tol, rel_tol*|I|). Panels
    are processed left to right and the accepted contributions summed with
    ``math.fsum``, so the result is reproducible bit for bit.
    """
    width = b - a
    whole = _gl(f, a, b)
    # (lo, hi, coarse estimate, level); stack keeps left-to-right order
    stack = [(a, b, whole, 0)]
    accepted = []
    total = whole
    while stack:
        lo, hi, coarse, level = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _gl(f, lo, mid)
        right = _gl(f, mid, hi)
        fine = left + right
        total += fine - coarse
        budget = max(abs_tol, rel_tol * abs(total)) * (hi - lo) / width
        if abs(fine - coarse) <= budget:
            accepted.append(fine)
            continue
        if level + 1 >= max_level:
            raise QuadratureError(
                f"no convergence on [{lo!r}, {hi!r}] after {max_level} levels", (coarse, fine)
            )
        stack.append((mid, hi, right, level + 1))
        stack.append((lo, mid, left, level + 1))
    return math.fsum(accepted)


def _mapped_piece(exponent: float, two_s: float, p: int) -> float:
    # r = v^(+-m) turns r^(exponent-1) dr into m v^(m*exponent-1) dv = m v^4 dv
    m = (_V_POWER + 1.0) / exponent
    k = two_s * m

    def g(v):
        return m * v**_V_POWER * (1.0 + v**k) ** (-p)

    # (1 + v^k)^(-p) drops over a layer of width ~1/k below v = 1; pre-split
    # geometrically so the first panels cannot step over it
    levels = max(1, math.ceil(math.log2(k)) + 3)
    edges = [0.0] + [1.0 - 2.0**-i for i in range(1, levels + 1)] + [1.0]
    return math.fsum(adaptive_gauss_legendre(g, lo, hi) for lo, hi in zip(edges, edges[1:]))


def radial_integral(spec: RadialIntegralSpec) -> float:
    """int_0^inf r^(n-1+2sq) (1+r^(2s))^(-p) dr by adaptive quadrature."""
    two_s = 2.0 * spec.idx.s
    head = _mapped_piece(spec.moment, two_s, spec.power_p)
    tail = _mapped_piece(spec.decay, two_s, spec.power_p)
    return head + tail


def radial_integral_closed_form(spec: RadialIntegralSpec) -> float:
    """(1/2s) B(a/2s, p - a/2s) with a = n + 2sq."""
    two_s = 2.0 * spec.idx.s
    x = spec.moment / two_s
    return beta(x, spec.power_p - x) / two_s


def lorentzian_mass_closed_form(idx: SobolevIndex) -> float:
    """(omega_n / n) * sigma / sin(sigma) with sigma = pi n/(2s)."""
    return unit_sphere_area(idx.n) / idx.n / sinc_sigma(idx.alpha)


def lorentzian_mass(idx: SobolevIndex) -> LorentzianMass:
    radial = radial_integral(RadialIntegralSpec(idx, 1, 0))
    return LorentzianMass(
        quadrature=unit_sphere_area(idx.n) * radial,
        closed_form=lorentzian_mass_closed_form(idx),
    )
