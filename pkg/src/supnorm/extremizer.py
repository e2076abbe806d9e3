"""The Bessel-potential extremizer and the test-function corpus."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import SobolevIndex
from .quadrature import RadialIntegralSpec, lorentzian_mass, radial_integral_closed_form
from .spectral import (
    GridFunction,
    GridSpec,
    NormBundle,
    SpectralField,
    inverse_transform,
)
from .special import unit_sphere_area

__all__ = [
    "ExtremizerSpec",
    "bessel_potential_spectrum",
    "extremizer_grid",
    "extremizer_norms_exact",
    "gaussian",
    "random_band_limited",
]


@dataclass(frozen=True)
class ExtremizerSpec:
    """w_hat(xi) = c / (1 + |xi|^(2s)); s > n/2 puts w_hat in L^1 and L^2."""

    idx: SobolevIndex
    c: float = 1.0

    def __post_init__(self):
        c = float(self.c)
        if not (math.isfinite(c) and c >= 0.0):
            raise ValueError(f"amplitude must be nonnegative, got {self.c!r}")
        object.__setattr__(self, "c", c)


def bessel_potential_spectrum(spec: ExtremizerSpec, g: GridSpec) -> SpectralField:
    if g.n != spec.idx.n:
        raise ValueError(f"grid dimension {g.n} does not match n = {spec.idx.n}")
    values = spec.c / (1.0 + g.frequency_radius_squared() ** spec.idx.s)
    return SpectralField(g, values)


def extremizer_grid(spec: ExtremizerSpec, g: GridSpec) -> GridFunction:
    """Physical-space samples of the band-truncated extremizer."""
    return inverse_transform(bessel_potential_spectrum(spec, g))


def extremizer_norms_exact(spec: ExtremizerSpec) -> NormBundle:
    """Grid-free norms of the extremizer.

    L^2 and H^s-dot come from Beta closed forms of the p = 2 radial
    integrals; the Fourier-L^1 norm is c times the Lorentzian mass,
    evaluated by quadrature. Since w_hat >= 0 the supremum is attained at
    the origin and equals (2 pi)^(-n/2) ||w_hat||_1. For c == 0 every entry
    is zero.
    """
    idx = spec.idx
    c = spec.c
    omega = unit_sphere_area(idx.n)
    l2_sq = c * c * omega * radial_integral_closed_form(RadialIntegralSpec(idx, 2, 0))
    hs_sq = c * c * omega * radial_integral_closed_form(RadialIntegralSpec(idx, 2, 1))
    l1 = c * lorentzian_mass(idx).quadrature if c > 0.0 else 0.0
    return NormBundle(
        l2=math.sqrt(l2_sq),
        hs_semi=math.sqrt(hs_sq),
        hs_full=math.sqrt(l2_sq + hs_sq),
        sup=(2.0 * math.pi) ** (-0.5 * idx.n) * l1,
        l1_fourier=l1,
        s=idx.s,
    )


def gaussian(g: GridSpec, a: float, center=None) -> GridFunction:
    """Samples of exp(-a |x - center|^2)."""
    if not a > 0.0:
        raise ValueError(f"a must be positive, got {a!r}")
    center = np.zeros(g.n) if center is None else np.broadcast_to(np.asarray(center, float), (g.n,))
    r2 = sum((x - x0) ** 2 for x, x0 in zip(g.mesh(), center))
    return GridFunction(g, np.exp(-a * r2))


def random_band_limited(g: GridSpec, seed: int, cutoff: float | None = None,
                        decay: float | None = None) -> GridFunction:
    """A real function with random spectrum supported in |xi| <= cutoff.

    Coefficients get independent complex-normal amplitudes and phases,
    shaped by exp(-decay |xi|^2), and are then made conjugate-symmetric.
    Defaults: cutoff = nyquist/2 and decay = 0.05/nyquist^2, a nearly flat
    envelope; the cutoff alone keeps the Nyquist band empty.
    """
    nyq = g.nyquist
    cutoff = 0.5 * nyq if cutoff is None else float(cutoff)
    decay = 0.05 / nyq**2 if decay is None else float(decay)
    if not 0.0 < cutoff < nyq:
        raise ValueError(f"cutoff must lie in (0, {nyq}), got {cutoff!r}")
    if not decay > 0.0:
        raise ValueError(f"decay must be positive, got {decay!r}")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(g.shape) + 1j * rng.standard_normal(g.shape)
    r2 = g.frequency_radius_squared()
    z = z * np.exp(-decay * r2)
    z[r2 > cutoff * cutoff] = 0.0
    axes = tuple(range(g.n))
    # centred index i <-> k = i - N/2, so k -> -k is flip followed by a roll of one
    mirrored = np.roll(np.flip(z, axes), 1, axes)
    z = 0.5 * (z + np.conj(mirrored))
    return inverse_transform(SpectralField(g, z))
