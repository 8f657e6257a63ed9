import math
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import reference
from unruh_entanglement.analytic import (
    CrossValidationWarning,
    SeriesConvergenceError,
    SeriesResult,
    block_spectrum,
    entropy_alice,
    entropy_joint,
    entropy_rob,
    log_negativity,
    measure_bundle,
    mutual_information,
    mutual_information_partial_sum,
    pt_block_eigenvalues,
    pt_negative_sum,
    sigma_bounds,
    sigma_series,
    standalone_eigenvalue,
)
from unruh_entanglement.kinematics import SqueezingParameter

# frozen from tests/reference.py (mpmath, 50 digits, unregularized forms)
SIGMA_R1 = 1.0811494655222239
NEGATIVITY_R1 = 0.3686416839322744
ENTROPY_JOINT_R1 = 2.7903686621969911
ENTROPY_ROB_R1 = 3.0199017069528823
MUTUAL_INFO_R1 = 1.2295330447558912
PT_PAIR_R1_N0 = (0.20998717080701303, -0.08818922380706733)


# --- partial-transpose blocks ----------------------------------------------


def test_pt_block_bell_limit():
    assert pt_block_eigenvalues(0.0, 0) == (0.5, -0.5)


def test_pt_block_vanishes_at_zero_squeezing_for_high_blocks():
    for n in (2, 3, 7):
        lam_plus, lam_minus = pt_block_eigenvalues(0.0, n)
        assert lam_plus == 0.0
        assert lam_minus == 0.0


def test_pt_block_r1_pinned():
    # independent 2x2 characteristic polynomial of the assembled block
    lam_plus, lam_minus = pt_block_eigenvalues(1.0, 0)
    assert lam_plus == pytest.approx(PT_PAIR_R1_N0[0], abs=1e-15)
    assert lam_minus == pytest.approx(PT_PAIR_R1_N0[1], abs=1e-15)


@pytest.mark.parametrize("r", [0.2, 1.0, 2.5])
@pytest.mark.parametrize("n", [0, 1, 2, 5, 17])
def test_pt_block_matches_reference(r, n):
    ref_plus, ref_minus = reference.pt_block(r, n)
    lam_plus, lam_minus = pt_block_eigenvalues(r, n)
    assert lam_plus == pytest.approx(ref_plus, rel=1e-13, abs=1e-16)
    assert lam_minus == pytest.approx(ref_minus, rel=1e-13, abs=1e-16)


def test_pt_block_domain_errors():
    with pytest.raises(ValueError):
        pt_block_eigenvalues(1.0, -1)
    with pytest.raises(ValueError):
        pt_block_eigenvalues(math.nan, 0)


@given(
    st.floats(min_value=1e-6, max_value=100.0),
    st.integers(min_value=0, max_value=300),
)
def test_negative_eigenvalue_always_present(r, n):
    lam_plus, lam_minus = pt_block_eigenvalues(r, n)
    assert lam_minus < 0.0
    assert lam_plus >= 0.0


def test_block_spectrum_carries_standalone():
    spec = block_spectrum(0.5, 3)
    assert spec.standalone == pytest.approx(1.0 / (2.0 * math.cosh(0.5) ** 2), rel=1e-15)
    assert spec.n == 3
    assert standalone_eigenvalue(0.0) == 0.5


@pytest.mark.parametrize("r", [0.0, 0.25, 0.5, 1.0, 2.0, 4.0])
def test_trace_closure(r, n_cover=30000):
    # standalone + sum over blocks of (lambda_+ + lambda_-) is the unit trace
    total = standalone_eigenvalue(r)
    for n in range(n_cover):
        lam_plus, lam_minus = pt_block_eigenvalues(r, n)
        total += lam_plus + lam_minus
        if n > 2 and lam_plus < 1e-18:
            break
    assert total == pytest.approx(1.0, abs=1e-10)


# --- sigma and its bounds ---------------------------------------------------


def test_sigma_exact_at_zero():
    res = sigma_series(0.0)
    assert res.value == 1.5
    assert res.tail_bound == 0.0


def test_sigma_r1_pinned():
    res = sigma_series(1.0, 1e-12)
    assert abs(res.value - SIGMA_R1) <= res.tail_bound
    assert res.value == pytest.approx(SIGMA_R1, abs=2e-12)


@pytest.mark.parametrize("r", [0.3, 1.7])
def test_sigma_matches_reference(r):
    assert sigma_series(r, 1e-12).value == pytest.approx(reference.sigma(r), abs=5e-12)


def test_sigma_bounds_values():
    assert sigma_bounds(0.0) == (1.0, 2.0)
    lo, up = sigma_bounds(math.acosh(2.0))
    assert (lo, up) == (1.0, pytest.approx(1.5, rel=1e-15))
    lo, up = sigma_bounds(300.0)
    assert up - lo < 1e-100  # both bounds collapse to 1


def test_sigma_bounds_gap_is_sech():
    for r in (0.1, 1.0, 5.0):
        lo, up = sigma_bounds(r)
        assert up - lo == pytest.approx(1.0 / math.cosh(r), rel=1e-12)


@pytest.mark.parametrize("r", [0.01, 0.25, 1.0, 3.0, 6.0])
def test_sigma_within_bounds(r):
    res = sigma_series(r, 1e-10)
    lo, up = sigma_bounds(r)
    assert lo <= res.value < up


def test_trace_norm_identity():
    # 1/(2 cosh^2 r) + Sigma = 1 - 2 sum_n lambda_-^n, computed independently
    for r in (0.3, 1.0, 2.0):
        sig = sigma_series(r, 1e-12)
        neg = pt_negative_sum(r, 1e-12)
        left = 0.5 / math.cosh(r) ** 2 + sig.value
        right = 1.0 - 2.0 * neg.value
        assert abs(left - right) <= sig.tail_bound + 2.0 * neg.tail_bound + 1e-13


def test_negative_sum_at_zero():
    assert pt_negative_sum(0.0).value == -0.5


# --- log-negativity ----------------------------------------------------------


def test_negativity_bell_state():
    assert log_negativity(0.0).value == 1.0


def test_negativity_r1_pinned():
    res = log_negativity(1.0, 1e-12)
    assert res.value == pytest.approx(NEGATIVITY_R1, abs=2e-12)
    assert res.value == pytest.approx(reference.log_negativity(1.0), abs=2e-12)


def test_negativity_positive_and_decaying():
    values = [log_negativity(r, 1e-10).value for r in (0.5, 1.0, 2.0, 4.0, 7.0)]
    assert all(v > 0.0 for v in values)
    assert values == sorted(values, reverse=True)


def test_negativity_limit_pin_r10():
    # the bound gap 1/cosh r pins the infinite-acceleration limit
    tol = 1e-6
    bundle = measure_bundle(10.0, tol)
    assert bundle.log_negativity.value <= math.log2(1.0 + 1.0 / math.cosh(10.0)) + tol
    assert bundle.log_negativity.value > 0.0


# --- entropies and mutual information ---------------------------------------


def test_entropies_at_zero():
    assert entropy_joint(0.0).value == 0.0
    assert entropy_rob(0.0).value == 1.0
    assert entropy_alice() == 1.0
    assert mutual_information(0.0).value == 2.0


def test_entropies_r1_pinned():
    assert entropy_joint(1.0, 1e-12).value == pytest.approx(ENTROPY_JOINT_R1, abs=5e-12)
    assert entropy_rob(1.0, 1e-12).value == pytest.approx(ENTROPY_ROB_R1, abs=5e-12)
    assert mutual_information(1.0, 1e-12).value == pytest.approx(MUTUAL_INFO_R1, abs=1e-11)


@pytest.mark.parametrize("r", [0.3, 1.7])
def test_entropies_match_reference(r):
    assert entropy_joint(r, 1e-12).value == pytest.approx(reference.entropy_joint(r), abs=5e-12)
    assert entropy_rob(r, 1e-12).value == pytest.approx(reference.entropy_rob(r), abs=5e-12)
    assert mutual_information(r, 1e-12).value == pytest.approx(
        reference.mutual_information(r), abs=1e-11
    )


@pytest.mark.parametrize("r", [0.25, 1.0, 2.5])
def test_weight_normalization(r):
    # the joint and reduced spectra are probability distributions
    sqz = SqueezingParameter.from_r(r)
    x, c2 = sqz.tanh_sq, sqz.cosh_sq
    n = np.arange(0, 4000, dtype=np.float64)
    xp = x**n
    p = xp * (1.0 + (n + 1.0) / c2) / (2.0 * c2)
    q = xp / (2.0 * c2) + np.where(n > 0, n * x ** np.maximum(n - 1.0, 0.0), 0.0) / (
        2.0 * c2 * c2
    )
    assert p.sum() == pytest.approx(1.0, abs=1e-12)
    assert q.sum() == pytest.approx(1.0, abs=1e-12)
    assert (p >= 0.0).all() and (q >= 0.0).all()


def test_mutual_information_consistency():
    res = mutual_information(1.3, 1e-10)
    expected = 1.0 + entropy_rob(1.3, 5e-11).value - entropy_joint(1.3, 5e-11).value
    assert abs(res.value - expected) <= res.tail_bound + 1e-15


@pytest.mark.parametrize("r", [0.3, 0.8, 2.0])
def test_partial_sum_route_agrees(r):
    primary = mutual_information(r, 1e-11)
    secondary = mutual_information_partial_sum(r, primary.terms_used)
    assert secondary == pytest.approx(primary.value, abs=1e-9)
    assert secondary == pytest.approx(
        reference.mutual_information_partial(r, primary.terms_used), abs=1e-11
    )


def test_partial_sum_route_rejects_zero():
    with pytest.raises(ValueError):
        mutual_information_partial_sum(0.0, 10)


def test_no_cross_validation_warning_on_clean_inputs():
    with warnings.catch_warnings():
        warnings.simplefilter("error", CrossValidationWarning)
        mutual_information(1.0, 1e-10)
        measure_bundle(0.7, 1e-10)


# --- truncation control ------------------------------------------------------


def test_series_result_invariants():
    with pytest.raises(ValueError):
        SeriesResult(value=1.0, terms_used=0, tail_bound=0.0, requested_tol=1e-10)
    with pytest.raises(ValueError):
        SeriesResult(value=1.0, terms_used=3, tail_bound=1e-6, requested_tol=1e-10)


def test_tail_bound_honored_across_tolerances():
    loose = sigma_series(2.0, 1e-4)
    tight = sigma_series(2.0, 1e-13)
    assert abs(loose.value - tight.value) <= loose.tail_bound
    assert loose.terms_used < tight.terms_used
    loose_j = entropy_joint(2.0, 1e-4)
    tight_j = entropy_joint(2.0, 1e-13)
    assert abs(loose_j.value - tight_j.value) <= loose_j.tail_bound


def test_convergence_error_carries_partial():
    with pytest.raises(SeriesConvergenceError) as excinfo:
        sigma_series(9.0, 1e-10, term_cap=20000)
    err = excinfo.value
    assert err.terms_used == 20000
    assert 0.0 < err.partial < 2.0
    assert err.tail_bound > 1e-10


def test_domain_errors():
    with pytest.raises(ValueError):
        sigma_series(1.0, 0.0)
    with pytest.raises(ValueError):
        entropy_joint(1.0, -1e-3)
    with pytest.raises(ValueError):
        mutual_information(-1.0, 1e-10)


# --- measure bundle ----------------------------------------------------------


def test_bundle_exact_at_zero():
    bundle = measure_bundle(0.0)
    assert bundle.log_negativity.value == 1.0
    assert bundle.mutual_information.value == 2.0
    assert bundle.entropy_joint.value == 0.0
    assert bundle.entropy_rob.value == 1.0
    assert bundle.entropy_alice.value == 1.0
    assert bundle.sigma.value == 1.5
    assert bundle.max_est_error == 0.0


def test_bundle_monotone_degradation():
    rs = np.arange(0.0, 3.01, 0.1)
    bundles = [measure_bundle(float(r), 1e-10) for r in rs]
    negativity = [b.log_negativity.value for b in bundles]
    mutual = [b.mutual_information.value for b in bundles]
    assert all(a > b for a, b in zip(negativity, negativity[1:]))
    assert all(a > b for a, b in zip(mutual, mutual[1:]))


def test_bundle_invariant_ranges():
    for r in (0.0, 0.4, 1.0, 2.0, 5.0, 12.0):
        b = measure_bundle(r, 1e-8)
        m = b.mutual_information
        n = b.log_negativity
        assert 1.0 - m.est_error <= m.value <= 2.0 + m.est_error
        assert -n.est_error <= n.value <= 1.0 + n.est_error
        assert b.sigma_lower <= b.sigma.value < b.sigma_upper


def test_bundle_far_regime_consistent_with_series():
    # force the bracket/asymptotic regime at a point where the series still
    # works, and check the honest error bars cover the series values
    series = measure_bundle(6.0, 1e-8)
    far = measure_bundle(6.0, 1e-30)
    assert far.sigma.method == "bracket"
    assert far.entropy_joint.method == "asymptotic"
    for name in ("sigma", "log_negativity", "entropy_joint", "entropy_rob",
                 "mutual_information"):
        s = getattr(series, name)
        f = getattr(far, name)
        assert abs(s.value - f.value) <= f.est_error + s.est_error


def test_bundle_far_regime_extreme_r():
    b = measure_bundle(400.0, 1e-6)
    assert b.log_negativity.value < 1e-100
    assert b.mutual_information.value == pytest.approx(1.0, abs=1e-100)
    assert b.entropy_joint.value > 1000.0  # grows like 2 r log2(e)
