import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supnorm.special import beta, gamma, sinc_sigma, unit_sphere_area

mpmath.mp.dps = 40


@pytest.mark.parametrize("x, expected", [(1.0, 1.0), (0.5, math.sqrt(math.pi)), (5.0, 24.0)])
def test_gamma_values(x, expected):
    assert gamma(x) == pytest.approx(expected, rel=1e-15)


@given(st.floats(min_value=1e-3, max_value=50.0))
@settings(max_examples=300)
def test_gamma_matches_mpmath(x):
    ref = float(mpmath.gamma(mpmath.mpf(x)))
    assert abs(gamma(x) - ref) <= 1e-13 * ref


@given(st.floats(min_value=1e-3, max_value=30.0))
def test_gamma_recurrence(x):
    assert gamma(x + 1) == pytest.approx(x * gamma(x), rel=1e-12)


@pytest.mark.parametrize("bad", [0.0, -1.0, -0.5, math.inf, math.nan])
def test_gamma_domain(bad):
    with pytest.raises(ValueError):
        gamma(bad)


def test_beta_values():
    assert beta(1, 1) == pytest.approx(1.0, rel=1e-15)
    assert beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-15)


def test_beta_quarter_against_integral():
    # int_0^1 t^(-3/4) (1-t)^(-1/4) dt split at 1/2; t = u^4 on the left and
    # 1 - t = w^4 on the right remove both endpoint singularities
    top = mpmath.mpf(0.5) ** 0.25
    ref = mpmath.quad(lambda u: 4 * (1 - u**4) ** -0.25, [0, top]) + mpmath.quad(
        lambda w: 4 * w**2 * (1 - w**4) ** -0.75, [0, top]
    )
    assert float(ref) == pytest.approx(4.4428829382, abs=1e-10)
    assert beta(0.25, 0.75) == pytest.approx(float(ref), rel=1e-13)
    assert beta(0.25, 0.75) == pytest.approx(math.pi / math.sin(math.pi / 4), rel=1e-14)


@given(st.floats(min_value=1e-3, max_value=1 - 1e-3))
def test_beta_reflection(r):
    assert beta(r, 1 - r) * math.sin(r * math.pi) == pytest.approx(math.pi, rel=1e-12)


def test_beta_large_arguments_do_not_overflow():
    ref = float(mpmath.beta(120, 90))
    assert beta(120.0, 90.0) == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("a, b", [(0, 1), (1, -2), (math.nan, 1)])
def test_beta_domain(a, b):
    with pytest.raises(ValueError):
        beta(a, b)


def test_sinc_sigma_values():
    assert sinc_sigma(0.0) == 1.0
    assert sinc_sigma(0.5) == pytest.approx(2 / math.pi, rel=1e-15)
    ref = float(mpmath.sin(3 * mpmath.pi / 4) / (3 * mpmath.pi / 4))
    assert ref == pytest.approx(0.3001054388, abs=1e-10)
    assert sinc_sigma(0.75) == pytest.approx(ref, rel=1e-15)


@given(st.floats(min_value=0.0, max_value=1e-4))
def test_sinc_sigma_continuous_at_zero(eps):
    # leading term of 1 - sin(x)/x is x^2/6 with x = pi*eps
    assert abs(sinc_sigma(eps) - 1.0) <= (math.pi**2 / 6) * eps * eps + 2e-16


@given(st.floats(min_value=0.0, max_value=0.999))
def test_sinc_sigma_matches_mpmath(r):
    ref = float(mpmath.sinc(mpmath.pi * r)) if r else 1.0
    assert sinc_sigma(r) == pytest.approx(ref, rel=1e-14)


@pytest.mark.parametrize("bad", [1.0, 1.5, -1e-9, math.nan])
def test_sinc_sigma_domain(bad):
    with pytest.raises(ValueError):
        sinc_sigma(bad)


@pytest.mark.parametrize("n, expected", [(1, 2.0), (2, 2 * math.pi), (3, 4 * math.pi)])
def test_unit_sphere_area(n, expected):
    assert unit_sphere_area(n) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("n", range(1, 30))
def test_unit_sphere_area_recursion(n):
    assert unit_sphere_area(n + 2) == pytest.approx(2 * math.pi * unit_sphere_area(n) / n, rel=1e-12)


@pytest.mark.parametrize("bad", [0, -2, 1.5, True])
def test_unit_sphere_area_domain(bad):
    with pytest.raises(ValueError):
        unit_sphere_area(bad)
