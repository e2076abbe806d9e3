"""End-to-end acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line; the lines are repeated in an
"acceptance" section at the end of the pytest run.
"""

import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from supnorm.constants import SobolevIndex, embedding_constant, gn_constant, young_factor
from supnorm.extremizer import ExtremizerSpec, extremizer_grid, gaussian, random_band_limited
from supnorm.quadrature import lorentzian_mass
from supnorm.spectral import GridFunction, GridSpec, default_points, forward_transform, inverse_transform, norms
from supnorm.verifier import (
    GRID_SHARPNESS_TOL,
    INEQUALITY_TOL,
    check_all,
    embedding_report,
    interpolation_report,
    lambda_sweep,
    sharpness_ratio,
)


def _record(number: int, title: str, ok: bool, detail: str, t0: float) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail} ({time.perf_counter() - t0:.2f} s)"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def test_1_closed_form_constants():
    t0 = time.perf_counter()
    k22 = gn_constant(SobolevIndex(2, 2))
    k12 = gn_constant(SobolevIndex(1, 2))
    k32 = gn_constant(SobolevIndex(3, 2))
    err22 = abs(k22 - 0.5)
    rel12 = abs(k12 / (2**0.25 / 27**0.125) - 1.0)
    rel32 = abs(k32 / (12**0.125 / math.sqrt(6.0 * math.pi)) - 1.0)
    ok = err22 <= 1e-15 and rel12 <= 1e-14 and rel32 <= 1e-14
    _record(1, "closed-form constants", ok,
            f"|K(2,2)-1/2|={err22:.1e}, rel(1,2)={rel12:.1e}, rel(3,2)={rel32:.1e}", t0)


def _factorization_pairs():
    counts = [34, 34, 33, 33, 33, 33]
    for n, count in zip(range(1, 7), counts):
        for s in np.linspace(n / 2 + 0.05, 20.0, count):
            yield SobolevIndex(n, float(s))


def test_2_factorization_identity():
    t0 = time.perf_counter()
    pairs = list(_factorization_pairs())
    worst = max(abs(gn_constant(i) / (embedding_constant(i) * young_factor(i)) - 1.0) for i in pairs)
    _record(2, "factorization K = C_emb * Y", len(pairs) == 200 and worst <= 1e-12,
            f"{len(pairs)} pairs, worst rel err {worst:.1e}", t0)


def _mass_pairs():
    pairs = []
    for n in (1, 2, 3):
        for s in (n / 2 + 0.1, 1.0, 2.0, 3.0, 5.0, 10.0):
            if 2 * s > n:
                pairs.append((n, s))
    pairs += [(2, 1.5), (3, 3.5)]
    return pairs


def test_3_lorentzian_mass_oracle():
    t0 = time.perf_counter()
    pairs = _mass_pairs()
    errs = [lorentzian_mass(SobolevIndex(n, s)).relative_error for n, s in pairs]
    anchor = abs(lorentzian_mass(SobolevIndex(1, 1)).quadrature / math.pi - 1.0)
    worst = max(errs)
    ok = len(pairs) == 18 and worst <= 1e-8 and anchor <= 1e-8
    _record(3, "Lorentzian mass quadrature vs closed form", ok,
            f"{len(pairs)} pairs, worst rel err {worst:.1e}, (1,1) vs pi {anchor:.1e}", t0)


def test_4_exact_sharpness():
    t0 = time.perf_counter()
    worst = 0.0
    for n in (1, 2, 3):
        for s in (max(1.0, n / 2 + 0.25), 2.0, 3.0, 3.5):
            worst = max(worst, abs(sharpness_ratio(SobolevIndex(n, s), "exact") - 1.0))
    _record(4, "exact sharpness ratio", worst <= 1e-9, f"12 pairs, max |ratio-1| = {worst:.1e}", t0)


def test_5_grid_sharpness():
    t0 = time.perf_counter()
    parts, ok = [], True
    for n, s, N, L in [(1, 2.0, 512, 80.0), (2, 2.0, 256, 60.0)]:
        idx = SobolevIndex(n, s)
        b = norms(extremizer_grid(ExtremizerSpec(idx), GridSpec(n, N, L)), s)
        for rep in (interpolation_report(b, idx), embedding_report(b, idx)):
            inside = 1.0 - GRID_SHARPNESS_TOL <= rep.ratio <= 1.0 + INEQUALITY_TOL
            ok = ok and inside
            parts.append(f"n={n} {rep.inequality_id} {rep.ratio:.7f}{'' if inside else ' (out)'}")
    _record(5, "grid sharpness in [1-1e-4, 1+1e-9]", ok, ", ".join(parts), t0)


SOUNDNESS_PAIRS = [(n, s) for n in (1, 2) for s in (1.0, 1.5, 2.0, 4.0) if 2 * s > n]


def test_6_inequality_soundness():
    t0 = time.perf_counter()
    worst, count = 0.0, 0
    for n, s in SOUNDNESS_PAIRS:
        idx = SobolevIndex(n, s)
        g = GridSpec(n, default_points(n), 60.0)
        for seed in range(100):
            for rep in check_all(random_band_limited(g, seed), idx):
                count += 1
                worst = max(worst, rep.ratio)
    eq_gap = 0.0
    for n in (1, 2):
        rep = check_all(gaussian(GridSpec(n, 256, 40.0), 0.5), SobolevIndex(n, 2.0))[0]
        eq_gap = max(eq_gap, abs(rep.ratio - 1.0))
    ok = worst <= 1.0 + INEQUALITY_TOL and eq_gap <= 1e-10
    _record(6, "inequality soundness", ok,
            f"{len(SOUNDNESS_PAIRS)} pairs (n=2, s=1 excluded: s must exceed n/2), {count} reports, "
            f"max ratio {worst:.4f}, l1 equality gap {eq_gap:.1e}", t0)


def test_7_spectral_core():
    t0 = time.perf_counter()
    rng = np.random.default_rng(7)
    trip, planch = 0.0, 0.0
    for n, N in [(1, 256), (2, 128), (3, 32)]:
        g = GridSpec(n, N, 20.0)
        for _ in range(5):
            u = GridFunction(g, rng.standard_normal(g.shape) + 1j * rng.standard_normal(g.shape))
            f = forward_transform(u)
            back = inverse_transform(f)
            trip = max(trip, float(np.max(np.abs(back.samples - u.samples)) / np.max(np.abs(u.samples))))
            e_x = g.h**n * float(np.sum(np.abs(u.samples) ** 2))
            e_xi = g.dxi**n * float(np.sum(np.abs(f.coefficients) ** 2))
            planch = max(planch, abs(e_xi / e_x - 1.0))
    g = GridSpec(1, 256, 40.0)
    f = forward_transform(gaussian(g, 0.5))
    selfx = float(np.max(np.abs(f.coefficients - np.exp(-0.5 * g.xi**2))))
    ok = trip <= 1e-12 and planch <= 1e-12 and selfx <= 1e-12
    _record(7, "spectral core", ok,
            f"round trip {trip:.1e}, Plancherel {planch:.1e}, Gaussian self-transform {selfx:.1e}", t0)


def test_8_scaling_sweep():
    t0 = time.perf_counter()
    cases = [
        (gaussian(GridSpec(1, 256, 40.0), 0.5), SobolevIndex(1, 2.0)),
        (gaussian(GridSpec(2, 128, 40.0), 1.0), SobolevIndex(2, 1.5)),
        (extremizer_grid(ExtremizerSpec(SobolevIndex(1, 1.0)), GridSpec(1, 512, 80.0)), SobolevIndex(1, 1.0)),
    ]
    cases += [(random_band_limited(GridSpec(2, 64, 30.0), seed), SobolevIndex(2, 3.0)) for seed in range(3)]
    cases += [(random_band_limited(GridSpec(3, 32, 30.0), 0), SobolevIndex(3, 2.0))]
    worst, bracketed = 0.0, True
    for u, idx in cases:
        res = lambda_sweep(u, idx, 512)
        bracketed = bracketed and res.brackets
        worst = max(worst, abs(res.min_relative_gap))
    _record(8, "scaling sweep", bracketed and worst <= 1e-3,
            f"{len(cases)} functions, all bracket lambda*: {bracketed}, worst min gap {worst:.1e}", t0)
