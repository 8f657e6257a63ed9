import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

import reference
from unruh_entanglement.kinematics import (
    ModeSpec,
    NearHorizonSpec,
    SqueezingParameter,
    near_horizon_accel,
    squeezing_from_mode,
    squeezing_from_omega,
)

# frozen from tests/reference.py (mpmath, 50 digits)
R_AT_OMEGA_LN2_OVER_2PI = 0.8813735870195430
R_AT_OMEGA_ONE = 0.04324084828357018


def test_half_boltzmann_factor_point():
    # e^{-2 pi Omega} = 1/2 at Omega = ln2/(2 pi): cosh r = sqrt(2), tanh^2 r = 1/2
    sqz = squeezing_from_omega(math.log(2.0) / (2.0 * math.pi))
    assert sqz.r == pytest.approx(R_AT_OMEGA_LN2_OVER_2PI, abs=1e-15)
    assert sqz.r == pytest.approx(math.acosh(math.sqrt(2.0)), abs=1e-15)
    assert sqz.cosh_r == pytest.approx(math.sqrt(2.0), rel=1e-15)
    assert sqz.tanh_sq == pytest.approx(0.5, rel=1e-14)


def test_omega_one_pinned():
    sqz = squeezing_from_omega(1.0)
    assert sqz.r == pytest.approx(R_AT_OMEGA_ONE, abs=1e-16)
    assert sqz.r == pytest.approx(reference.squeezing_from_omega(1.0), abs=1e-16)


def test_zero_acceleration_limit():
    # Omega -> infinity is the a -> 0+ limit: r -> 0, cosh r -> 1
    sqz = squeezing_from_omega(40.0)
    assert 0.0 < sqz.r < 1e-50
    assert sqz.cosh_r == 1.0
    big = squeezing_from_omega(1e6)
    assert big.r == 0.0  # below double resolution


def test_infinite_acceleration_growth():
    # r -> infinity as Omega -> 0+, but stays finite for every positive double
    assert squeezing_from_omega(1e-300).r == pytest.approx(345.16, abs=0.05)
    assert squeezing_from_omega(5e-324).r < 400.0


def test_round_trip_cosh_identity():
    for k in range(-30, 40):
        omega = 10.0 ** (k / 6.0)
        if not 1e-3 <= omega <= 50.0:
            continue
        sqz = squeezing_from_omega(omega)
        expected = (1.0 - math.exp(-2.0 * math.pi * omega)) ** -0.5
        assert math.cosh(sqz.r) == pytest.approx(expected, rel=1e-12)


@given(st.floats(min_value=1e-6, max_value=60.0), st.floats(min_value=1.01, max_value=50.0))
def test_monotone_decreasing_in_omega(omega, factor):
    assert squeezing_from_omega(omega).r > squeezing_from_omega(omega * factor).r


@given(
    st.floats(min_value=1e-3, max_value=1e3),
    st.floats(min_value=1e-3, max_value=1e3),
    st.floats(min_value=1e-6, max_value=1e6),
)
def test_scale_invariance(freq, accel, scale):
    base = squeezing_from_mode(ModeSpec(freq_k=freq, accel_a=accel))
    scaled = squeezing_from_mode(ModeSpec(freq_k=scale * freq, accel_a=scale * accel))
    assert scaled.r == pytest.approx(base.r, rel=1e-12, abs=1e-300)


@given(st.floats(min_value=1e-8, max_value=300.0))
def test_cached_hyperbolic_identity(r):
    sqz = SqueezingParameter.from_r(r)
    c2 = sqz.cosh_r**2
    assert abs(c2 - (sqz.cosh_r * sqz.tanh_r) ** 2 - 1.0) < 1e-12 * c2
    assert 0.0 <= sqz.tanh_r < 1.0 or sqz.tanh_r == 1.0
    assert sqz.cosh_r >= 1.0


def test_ln_space_caches_beyond_overflow():
    sqz = SqueezingParameter.from_r(800.0)
    assert sqz.cosh_r == math.inf
    assert sqz.tanh_r == 1.0
    assert sqz.ln_cosh_r == pytest.approx(800.0 - math.log(2.0), rel=1e-15)
    assert sqz.ln_tanh_r == 0.0  # true value ~ -1e-695, below double resolution


def test_effectively_infinite_flag():
    assert not squeezing_from_omega(2e-8).effectively_infinite
    assert squeezing_from_omega(5e-9).effectively_infinite
    assert not SqueezingParameter.from_r(1.0).effectively_infinite
    assert SqueezingParameter.from_r(10.0).effectively_infinite


def test_domain_errors():
    for bad in (0.0, -1.0, math.nan, math.inf):
        with pytest.raises(ValueError):
            squeezing_from_omega(bad)
    with pytest.raises(ValueError):
        ModeSpec(freq_k=-1.0, accel_a=1.0)
    with pytest.raises(ValueError):
        ModeSpec(freq_k=1.0, accel_a=0.0)
    with pytest.raises(ValueError):
        SqueezingParameter.from_r(-0.5)
    with pytest.raises(ValueError):
        SqueezingParameter.from_r(math.nan)
    with pytest.raises(ValueError):
        SqueezingParameter(r=1.0, tanh_r=0.9, cosh_r=5.0, ln_cosh_r=math.log(5.0), ln_tanh_r=math.log(0.9))


def test_mode_spec_omega():
    spec = ModeSpec(freq_k=3.0, accel_a=6.0, speed_c=2.0)
    assert spec.omega == pytest.approx(1.0, rel=1e-15)


# --- near-horizon map ------------------------------------------------------


def test_near_horizon_unit_mass():
    res = near_horizon_accel(NearHorizonSpec(mass_m=1.0, coord_x=0.5))
    assert res.surface_gravity == 0.25
    assert res.accel_param == 4.0


def test_near_horizon_identity_case():
    res = near_horizon_accel(NearHorizonSpec(mass_m=0.25, coord_x=0.1))
    assert res.surface_gravity == 1.0
    assert res.accel_param == 1.0


def test_near_horizon_validity_indicator():
    # (A x)^2 at m = 2, x = 0.1, cross-checked against the metric factor
    # 1 - 2m/R with R - 2m = x^2/(8m): exactly (Ax)^2 / (1 + (Ax)^2)
    res = near_horizon_accel(NearHorizonSpec(mass_m=2.0, coord_x=0.1))
    assert res.validity_indicator == pytest.approx(1.5625e-4, rel=1e-14)
    m, x = 2.0, 0.1
    big_r = 2.0 * m + x * x / (8.0 * m)
    metric_factor = 1.0 - 2.0 * m / big_r
    v = res.validity_indicator
    assert v / (1.0 + v) == pytest.approx(metric_factor, rel=1e-14)


def test_near_horizon_domain_errors():
    with pytest.raises(ValueError):
        NearHorizonSpec(mass_m=0.0, coord_x=0.1)
    with pytest.raises(ValueError):
        NearHorizonSpec(mass_m=1.0, coord_x=-0.1)
