"""Closed-form entanglement and correlation measures with rigorous tails.

Everything here is a function of the squeezing parameter r alone.  The
quantities follow from the partial transpose of the Alice/Rob mixed state:

* per-block partial-transpose eigenvalue pairs (lambda_+, lambda_-),
* the trace-norm series Sigma with its exact bracket
  1 <= Sigma < 1 + 1/cosh r,
* log-negativity  N = log2(1/(2 cosh^2 r) + Sigma),
* von Neumann entropies of the joint state and of Rob's reduced state,
* mutual information I = 1 + S_rob - S_joint (Alice's entropy is exactly 1).

Series are summed in a numerically regularized form: every occurrence of
tanh^{2n} r * n / sinh^2 r is rewritten as n * tanh^{2(n-1)} r / cosh^2 r,
which is algebraically identical for r > 0 and finite at r = 0.  Truncation
is controlled by closed-form geometric tail bounds, never by term size
alone.  Where no term count within the cap can meet the tolerance (large r),
``measure_bundle`` falls back to rigorous limit brackets instead of summing.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import exp1

from .kinematics import SqueezingParameter, as_squeezing

LN2 = math.log(2.0)

DEFAULT_TERM_CAP = 10_000_000
_CHUNK = 1 << 20

# r -> infinity limit of the entropy correction sum, (1 + e*E1(1)) / (2 ln 2)
T_LIMIT = (1.0 + math.e * float(exp1(1.0))) / (2.0 * LN2)


class SeriesConvergenceError(RuntimeError):
    """Tolerance unreachable within the term cap; carries the partial sum."""

    def __init__(self, message: str, *, partial: float, terms_used: int, tail_bound: float):
        super().__init__(message)
        self.partial = partial
        self.terms_used = terms_used
        self.tail_bound = tail_bound


class CrossValidationWarning(UserWarning):
    """The independent partial-sum route disagrees beyond combined tolerance."""


@dataclass(frozen=True)
class SeriesResult:
    """A converged series value with a rigorous bound on the discarded tail."""

    value: float
    terms_used: int
    tail_bound: float
    requested_tol: float

    def __post_init__(self) -> None:
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")
        if not self.tail_bound <= self.requested_tol:
            raise ValueError(
                f"tail bound {self.tail_bound!r} exceeds requested tolerance "
                f"{self.requested_tol!r}"
            )


@dataclass(frozen=True)
class BlockSpectrum:
    """Partial-transpose eigenvalue pair of block n, plus the standalone eigenvalue."""

    n: int
    lambda_plus: float
    lambda_minus: float
    standalone: float


@dataclass(frozen=True)
class Measured:
    """A measure value with its error estimate and evaluation provenance.

    ``method`` is one of "series" (tail-bounded summation), "bracket"
    (midpoint of rigorous limit bounds), "asymptotic" (closed form plus
    integral-bracketed correction) or "exact".
    """

    value: float
    est_error: float
    terms_used: int
    method: str


@dataclass(frozen=True)
class MeasureBundle:
    """All measures at one squeezing, with per-field error estimates."""

    r: float
    log_negativity: Measured
    sigma: Measured
    sigma_lower: float
    sigma_upper: float
    entropy_joint: Measured
    entropy_rob: Measured
    entropy_alice: Measured
    mutual_information: Measured

    @property
    def max_est_error(self) -> float:
        return max(
            self.log_negativity.est_error,
            self.sigma.est_error,
            self.entropy_joint.est_error,
            self.entropy_rob.est_error,
            self.mutual_information.est_error,
        )

    @property
    def max_terms_used(self) -> int:
        return max(
            self.log_negativity.terms_used,
            self.sigma.terms_used,
            self.entropy_joint.terms_used,
            self.entropy_rob.terms_used,
            self.mutual_information.terms_used,
        )


def _validate_tol(tol: float) -> float:
    tol = float(tol)
    if not (math.isfinite(tol) and tol > 0.0):
        raise ValueError(f"tolerance must be finite and > 0, got {tol!r}")
    return tol


# ---------------------------------------------------------------------------
# closed-form geometric tails
#
#   S0  = sum_{n>N} x^n          S1  = sum_{n>N} n x^n      S2 = sum_{n>N} n^2 x^n
#   S1m = sum_{n>N} n x^(n-1)    S2m = sum_{n>N} n^2 x^(n-1)
#
# written as sums of positive terms (no cancellation), so each is a true
# upper bound even under floating-point rounding slack.
# ---------------------------------------------------------------------------


def _geom_tails(x: float, last: int) -> tuple[float, float, float, float, float]:
    omx = 1.0 - x
    xn = x ** last
    m = last + 1.0
    a = m / omx + x / (omx * omx)
    b = m * m / omx + 2.0 * m * x / (omx * omx) + x * (1.0 + x) / (omx * omx * omx)
    return x * xn / omx, x * xn * a, x * xn * b, xn * a, xn * b


def _sigma_tail(x: float, c2: float, h: float, last: int) -> float:
    # per-term bound sqrt(u^2 + b^2) <= u + b with
    # u_n = n x^(n-1)/c2 + x^(n+1) and b_n = 2 x^n / cosh r
    if x >= 1.0:
        return math.inf
    if x == 0.0:
        return 0.0 if last >= 1 else math.inf
    s0, _, _, s1m, _ = _geom_tails(x, last)
    return (s1m / c2 + (x + 2.0 * h) * s0) / (2.0 * c2)


def _joint_tail(x: float, c2: float, big_l: float, big_k: float, last: int) -> float:
    # -p log2 p <= p_up * (n L + K) with p_up = x^n (n+2)/(2 c2),
    # L = log2(1/x), K = log2(2 c2)
    if x >= 1.0:
        return math.inf
    if x == 0.0:
        return 0.0 if last >= 1 else math.inf
    s0, s1, s2, _, _ = _geom_tails(x, last)
    return (big_l * s2 + (2.0 * big_l + big_k) * s1 + 2.0 * big_k * s0) / (2.0 * c2)


def _rob_tail(x: float, c2: float, big_l: float, big_k: float, last: int) -> float:
    # q_up = (x^n + n x^(n-1))/(2 c2), same (n L + K) log factor
    if x >= 1.0:
        return math.inf
    if x == 0.0:
        return 0.0 if last >= 1 else math.inf
    s0, s1, s2, s1m, s2m = _geom_tails(x, last)
    return (big_l * (s1 + s2m) + big_k * (s0 + s1m)) / (2.0 * c2)


def _negsum_tail(x: float, c3: float, last: int) -> float:
    # |lambda_-^n| <= x^n / (2 cosh^3 r)
    if x >= 1.0:
        return math.inf
    if x == 0.0:
        return 0.0 if last >= 1 else math.inf
    return (x ** (last + 1) / (1.0 - x)) / (2.0 * c3)


def _dsum_tail(x: float, c2: float, s: float, last: int) -> float:
    # tail of sum x^n |D_n| for the partial-sum mutual-information route:
    # |D_n| <= (n+s)(n+1+s) / (c2 s^2 ln 2) per term coefficient
    if x >= 1.0:
        return math.inf
    if x == 0.0:
        return 0.0 if last >= 1 else math.inf
    s0, s1, s2, _, _ = _geom_tails(x, last)
    return (s2 + (2.0 * s + 1.0) * s1 + s * (s + 1.0) * s0) / (
        2.0 * c2 * c2 * s * s * LN2
    )


# ---------------------------------------------------------------------------
# summation engine
# ---------------------------------------------------------------------------


def _bisect_terms(tail_fn, tol: float, cap: int) -> int | None:
    """Smallest last-index N in [0, cap] with tail_fn(N) <= tol, else None."""
    if not tail_fn(cap) <= tol:
        return None
    lo, hi = 0, cap
    while lo < hi:
        mid = (lo + hi) // 2
        if tail_fn(mid) <= tol:
            hi = mid
        else:
            lo = mid + 1
    return hi


def _sum_chunks(chunk_fn, first_term: float, last: int) -> float:
    """fsum of first_term (n = 0) and vectorized chunks over n = 1..last."""
    pieces = [first_term]
    n0 = 1
    while n0 <= last:
        n1 = min(last + 1, n0 + _CHUNK)
        n = np.arange(n0, n1, dtype=np.float64)
        pieces.append(float(chunk_fn(n).sum()))
        n0 = n1
    return math.fsum(pieces)


def _entropy_terms(weights: np.ndarray) -> np.ndarray:
    out = np.zeros_like(weights)
    nz = weights > 0.0
    w = weights[nz]
    out[nz] = -w * np.log2(w)
    return out


def _run_series(sqz, chunk_fn, first_term, tail_fn, tol, cap, label):
    last = _bisect_terms(tail_fn, tol, cap)
    if last is None:
        partial = _sum_chunks(chunk_fn, first_term, cap - 1)
        raise SeriesConvergenceError(
            f"{label} series cannot reach tol={tol:g} within {cap} terms at r={sqz.r:g}",
            partial=partial,
            terms_used=cap,
            tail_bound=tail_fn(cap - 1),
        )
    value = _sum_chunks(chunk_fn, first_term, last)
    return SeriesResult(value, last + 1, tail_fn(last), tol)


# ---------------------------------------------------------------------------
# partial-transpose block spectrum
# ---------------------------------------------------------------------------


def pt_block_eigenvalues(r: SqueezingParameter | float, n: int) -> tuple[float, float]:
    """Eigenvalue pair (lambda_+, lambda_-) of partial-transpose block n.

    Block n couples the basis pair {|1,n>, |0,n+1>}.  Evaluated as

        lambda_+- = (u_n +- sqrt(u_n^2 + b_n^2)) / (4 cosh^2 r),
        u_n = n tanh^(2n-2) r / cosh^2 r + tanh^(2n+2) r,
        b_n^2 = 4 tanh^(4n) r / cosh^2 r,

    finite at r = 0 and with the negative root computed cancellation-free.
    lambda_- < 0 strictly for every n while b_n^2 stays above underflow
    (0 < r <~ 178 in double precision).
    """
    sqz = as_squeezing(r)
    n = int(n)
    if n < 0:
        raise ValueError(f"block index must be >= 0, got {n}")
    x = sqz.tanh_sq
    c2 = sqz.cosh_sq
    u = (n * x ** (n - 1) / c2 if n > 0 else 0.0) + x ** (n + 1)
    b2 = 4.0 * x ** (2 * n) / c2
    disc = math.sqrt(u * u + b2)
    lam_plus = (u + disc) / (4.0 * c2)
    lam_minus = -b2 / ((u + disc) * 4.0 * c2) if u + disc > 0.0 else -0.0
    return lam_plus, lam_minus


def standalone_eigenvalue(r: SqueezingParameter | float) -> float:
    """The single unpaired partial-transpose eigenvalue, 1/(2 cosh^2 r)."""
    sqz = as_squeezing(r)
    return 1.0 / (2.0 * sqz.cosh_sq)


def block_spectrum(r: SqueezingParameter | float, n: int) -> BlockSpectrum:
    sqz = as_squeezing(r)
    lam_plus, lam_minus = pt_block_eigenvalues(sqz, n)
    return BlockSpectrum(
        n=int(n),
        lambda_plus=lam_plus,
        lambda_minus=lam_minus,
        standalone=standalone_eigenvalue(sqz),
    )


# ---------------------------------------------------------------------------
# series quantities
# ---------------------------------------------------------------------------


def sigma_bounds(r: SqueezingParameter | float) -> tuple[float, float]:
    """Exact bracket for the trace-norm series: (1, 1 + 1/cosh r)."""
    sqz = as_squeezing(r)
    h = 1.0 / sqz.cosh_r if math.isfinite(sqz.cosh_r) else math.exp(-sqz.ln_cosh_r)
    return 1.0, 1.0 + h


def sigma_series(
    r: SqueezingParameter | float,
    tol: float = 1e-10,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
) -> SeriesResult:
    """Sigma = sum_n tanh^{2n} r / (2 cosh^2 r) * sqrt(Z_n), tail-bounded.

    Exactly 3/2 at r = 0, where the sum terminates after n = 1.
    """
    sqz = as_squeezing(r)
    tol = _validate_tol(tol)
    if sqz.r == 0.0:
        return SeriesResult(1.5, 2, 0.0, tol)
    x, c2 = sqz.tanh_sq, sqz.cosh_sq
    h = 1.0 / sqz.cosh_r
    lt2 = 2.0 * sqz.ln_tanh_r

    def chunk(n):
        e = np.exp(lt2 * (n - 1.0))
        xp = x * e
        u = n * e / c2 + x * xp
        b2 = 4.0 * xp * xp / c2
        return np.sqrt(u * u + b2) / (2.0 * c2)

    first = math.sqrt(x * x + 4.0 / c2) / (2.0 * c2)
    return _run_series(
        sqz, chunk, first, lambda last: _sigma_tail(x, c2, h, last), tol, term_cap, "sigma"
    )


def log_negativity(
    r: SqueezingParameter | float,
    tol: float = 1e-10,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
) -> SeriesResult:
    """log2(1/(2 cosh^2 r) + Sigma): 1 at r = 0, strictly positive, -> 0."""
    sqz = as_squeezing(r)
    tol = _validate_tol(tol)
    sig = sigma_series(sqz, tol * LN2, term_cap=term_cap)
    arg = 0.5 / sqz.cosh_sq + sig.value
    return SeriesResult(
        math.log2(arg), sig.terms_used, sig.tail_bound / (arg * LN2), tol
    )


def entropy_joint(
    r: SqueezingParameter | float,
    tol: float = 1e-10,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
) -> SeriesResult:
    """Entropy of the joint Alice/Rob state, -sum_n p_n log2 p_n.

    p_n = (tanh^{2n} r / 2 cosh^2 r)(1 + (n+1)/cosh^2 r); the weights sum
    to one exactly, and the entropy vanishes at r = 0 (pure Bell state).
    """
    sqz = as_squeezing(r)
    tol = _validate_tol(tol)
    if sqz.r == 0.0:
        return SeriesResult(0.0, 2, 0.0, tol)
    x, c2 = sqz.tanh_sq, sqz.cosh_sq
    lt2 = 2.0 * sqz.ln_tanh_r
    big_l = -lt2 / LN2
    big_k = 1.0 + 2.0 * sqz.ln_cosh_r / LN2

    def chunk(n):
        xp = x * np.exp(lt2 * (n - 1.0))
        return _entropy_terms(xp * (1.0 + (n + 1.0) / c2) / (2.0 * c2))

    p0 = (1.0 + 1.0 / c2) / (2.0 * c2)
    first = -p0 * math.log2(p0)
    return _run_series(
        sqz, chunk, first,
        lambda last: _joint_tail(x, c2, big_l, big_k, last), tol, term_cap, "joint entropy",
    )


def entropy_rob(
    r: SqueezingParameter | float,
    tol: float = 1e-10,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
) -> SeriesResult:
    """Entropy of Rob's reduced state, -sum_n q_n log2 q_n.

    q_n = tanh^{2n} r / (2 cosh^2 r) + n tanh^{2(n-1)} r / (2 cosh^4 r);
    equals 1 at r = 0 (maximally mixed marginal of a Bell pair).
    """
    sqz = as_squeezing(r)
    tol = _validate_tol(tol)
    if sqz.r == 0.0:
        return SeriesResult(1.0, 2, 0.0, tol)
    x, c2 = sqz.tanh_sq, sqz.cosh_sq
    lt2 = 2.0 * sqz.ln_tanh_r
    big_l = -lt2 / LN2
    big_k = 1.0 + 2.0 * sqz.ln_cosh_r / LN2

    def chunk(n):
        e = np.exp(lt2 * (n - 1.0))
        return _entropy_terms((x * e + n * e / c2) / (2.0 * c2))

    q0 = 1.0 / (2.0 * c2)
    first = -q0 * math.log2(q0)
    return _run_series(
        sqz, chunk, first,
        lambda last: _rob_tail(x, c2, big_l, big_k, last), tol, term_cap, "rob entropy",
    )


def entropy_alice() -> float:
    """Alice's marginal is (|0><0| + |1><1|)/2 for every r: entropy exactly 1."""
    return 1.0


def pt_negative_sum(
    r: SqueezingParameter | float,
    tol: float = 1e-10,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
) -> SeriesResult:
    """Sum of the negative partial-transpose eigenvalues, sum_n lambda_-^n.

    Algebraically, 1 - 2 * pt_negative_sum equals the trace norm
    1/(2 cosh^2 r) + Sigma; the two routes are computed independently.
    """
    sqz = as_squeezing(r)
    tol = _validate_tol(tol)
    if sqz.r == 0.0:
        return SeriesResult(-0.5, 2, 0.0, tol)
    x, c2 = sqz.tanh_sq, sqz.cosh_sq
    c3 = sqz.cosh_r ** 3
    lt2 = 2.0 * sqz.ln_tanh_r

    def chunk(n):
        e = np.exp(lt2 * (n - 1.0))
        xp = x * e
        u = n * e / c2 + x * xp
        b2 = 4.0 * xp * xp / c2
        denom = (u + np.sqrt(u * u + b2)) * 4.0 * c2
        out = np.zeros_like(b2)
        nz = b2 > 0.0
        out[nz] = b2[nz] / denom[nz]
        return out

    u0, b20 = x, 4.0 / c2
    first = b20 / ((u0 + math.sqrt(u0 * u0 + b20)) * 4.0 * c2)
    res = _run_series(
        sqz, chunk, first, lambda last: _negsum_tail(x, c3, last), tol, term_cap,
        "negative eigenvalue sum",
    )
    return SeriesResult(-res.value, res.terms_used, res.tail_bound, res.requested_tol)


def mutual_information_partial_sum(r: SqueezingParameter | float, n_terms: int) -> float:
    """Partial-sum route for the mutual information (independent of the entropies).

    I(N) = 1 - (1/2) log2(tanh^2 r) - sum_{n=0}^{N-1} tanh^{2n} r D_n / (2 cosh^2 r)
    with D_n = B_n log2 B_n - C_n log2 C_n, B_n = 1 + n/sinh^2 r and
    C_n = 1 + (n+1)/cosh^2 r.  The prefactor diverges as r -> 0 and is
    cancelled by the sum only in exact arithmetic, so this route is used for
    cross-validation at r >= 0.25 only.
    """
    sqz = as_squeezing(r)
    if sqz.r <= 0.0:
        raise ValueError("partial-sum route requires r > 0")
    n_terms = int(n_terms)
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    x, c2, s = sqz.tanh_sq, sqz.cosh_sq, sqz.sinh_sq
    lt2 = 2.0 * sqz.ln_tanh_r

    def chunk(n):
        e = np.exp(lt2 * (n - 1.0))
        xp = x * e
        b = 1.0 + n / s
        c = 1.0 + (n + 1.0) / c2
        return ((xp + n * e / c2) * np.log2(b) - xp * c * np.log2(c)) / (2.0 * c2)

    c0 = 1.0 + 1.0 / c2
    first = -c0 * math.log2(c0) / (2.0 * c2)
    dsum = _sum_chunks(chunk, first, n_terms - 1)
    return 1.0 - sqz.ln_tanh_r / LN2 - dsum


def _cross_validate(sqz, primary: float, primary_err: float, n_terms: int) -> None:
    secondary = mutual_information_partial_sum(sqz, n_terms)
    budget = primary_err + _dsum_tail(
        sqz.tanh_sq, sqz.cosh_sq, sqz.sinh_sq, n_terms - 1
    ) + 1e-11
    if abs(secondary - primary) > budget:
        warnings.warn(
            f"partial-sum mutual information {secondary!r} deviates from the "
            f"entropy route {primary!r} by {abs(secondary - primary):.3e} "
            f"(allowed {budget:.3e}) at r={sqz.r:g}",
            CrossValidationWarning,
            stacklevel=3,
        )


def mutual_information(
    r: SqueezingParameter | float,
    tol: float = 1e-10,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
    cross_validate: bool = True,
) -> SeriesResult:
    """I = S_alice + S_rob - S_joint with S_alice = 1 exactly.

    2 at r = 0, strictly decreasing towards 1 as r -> infinity.  For
    r >= 0.25 the independent partial-sum route is evaluated as a
    cross-check; a mismatch beyond the combined tolerance raises a
    CrossValidationWarning (never silently ignored).
    """
    sqz = as_squeezing(r)
    tol = _validate_tol(tol)
    if sqz.r == 0.0:
        return SeriesResult(2.0, 2, 0.0, tol)
    joint = entropy_joint(sqz, 0.5 * tol, term_cap=term_cap)
    rob = entropy_rob(sqz, 0.5 * tol, term_cap=term_cap)
    value = 1.0 + rob.value - joint.value
    err = joint.tail_bound + rob.tail_bound
    terms = max(joint.terms_used, rob.terms_used)
    if cross_validate and sqz.r >= 0.25:
        _cross_validate(sqz, value, err, terms)
    return SeriesResult(value, terms, err, tol)


# ---------------------------------------------------------------------------
# large-r regime: rigorous brackets and asymptotics where no term count can
# meet the tolerance
# ---------------------------------------------------------------------------


def _far_sigma(sqz: SqueezingParameter) -> Measured:
    lo, up = sigma_bounds(sqz)
    return Measured(0.5 * (lo + up), 0.5 * (up - lo), 0, "bracket")


def _far_negativity(sqz: SqueezingParameter) -> Measured:
    delta = math.exp(-2.0 * sqz.ln_cosh_r)
    h = math.exp(-sqz.ln_cosh_r)
    lo = math.log1p(0.5 * delta) / LN2
    up = math.log1p(h + 0.5 * delta) / LN2
    return Measured(0.5 * (lo + up), 0.5 * (up - lo), 0, "bracket")


def _integer_peak(f, hi: int) -> float:
    """Max of a unimodal sequence f(0..hi) by ternary search."""
    lo = 0
    while hi - lo > 2:
        m1 = lo + (hi - lo) // 3
        m2 = hi - (hi - lo) // 3
        if f(float(m1)) < f(float(m2)):
            lo = m1 + 1
        else:
            hi = m2
    return max(f(float(k)) for k in range(lo, hi + 1))


def _far_correction(sqz: SqueezingParameter, which: str) -> tuple[float, float]:
    """Entropy correction sum T = sum_n w_n log2(1 + u_n) via its integral.

    The summand is log-concave in n, so the sum lies within one peak value
    of the integral; the returned error uses a 3x safety factor on the peak.
    """
    c2 = sqz.cosh_sq
    mu = -2.0 * sqz.ln_tanh_r
    if which == "joint":
        beta = mu * c2
        a = 1.0 + 1.0 / c2
        ln_a = math.log1p(1.0 / c2)
        integral = (
            (a * ln_a + (ln_a + 1.0) / beta) / beta
            + math.exp(mu + beta) * float(exp1(beta * a)) / (beta * beta)
        ) / (2.0 * LN2)

        def f(t: float) -> float:
            u = (t + 1.0) / c2
            return math.exp(-mu * t) * (1.0 + u) * math.log2(1.0 + u) / (2.0 * c2)

    else:
        s = sqz.sinh_sq
        gamma = mu * s
        integral = (s / (2.0 * c2 * LN2)) * (
            1.0 + math.exp(gamma) * float(exp1(gamma))
        ) / (gamma * gamma)

        def f(t: float) -> float:
            u = t / s
            return math.exp(-mu * t) * (1.0 + u) * math.log2(1.0 + u) / (2.0 * c2)

    hi = int(min(45.0 / mu, 1e18)) + 8
    peak = _integer_peak(f, hi)
    return integral, 3.0 * (peak + f(0.0))


def _far_is_degenerate(sqz: SqueezingParameter) -> bool:
    mu = -2.0 * sqz.ln_tanh_r
    return not (
        math.isfinite(sqz.cosh_sq) and mu > 0.0 and math.isfinite(mu * sqz.cosh_sq)
    )


def _far_entropy(sqz: SqueezingParameter, which: str) -> Measured:
    # S = log2(2 cosh^2 r) + mu * w / ln 2 - T, with w = (3/2) sinh^2 r for
    # the joint state and (3 sinh^2 r + 1)/2 for Rob's; T -> T_LIMIT.
    log2_2c2 = 1.0 + 2.0 * sqz.ln_cosh_r / LN2
    if _far_is_degenerate(sqz):
        delta = math.exp(-2.0 * min(sqz.ln_cosh_r, 350.0))
        value = log2_2c2 + 1.5 / LN2 - T_LIMIT
        return Measured(value, max(3.0 * delta, 5e-324), 0, "asymptotic")
    mu = -2.0 * sqz.ln_tanh_r
    s = sqz.sinh_sq
    weight = 1.5 * s if which == "joint" else 0.5 * (3.0 * s + 1.0)
    correction, err = _far_correction(sqz, which)
    return Measured(log2_2c2 + mu * weight / LN2 - correction, err, 0, "asymptotic")


def _far_mutual(sqz: SqueezingParameter) -> Measured:
    # I - 1 = mu/(2 ln 2) - (T_rob - T_joint); the log2(2 cosh^2 r) and
    # leading mu-weight pieces cancel identically between the entropies.
    if _far_is_degenerate(sqz):
        delta = math.exp(-2.0 * min(sqz.ln_cosh_r, 350.0))
        return Measured(1.0, max(4.0 * delta, 5e-324), 0, "asymptotic")
    mu = -2.0 * sqz.ln_tanh_r
    t_joint, err_joint = _far_correction(sqz, "joint")
    t_rob, err_rob = _far_correction(sqz, "rob")
    value = 1.0 + 0.5 * mu / LN2 - (t_rob - t_joint)
    return Measured(value, err_joint + err_rob, 0, "asymptotic")


# ---------------------------------------------------------------------------
# bundle
# ---------------------------------------------------------------------------

_EXACT_ZERO_BUNDLE_FIELDS = dict(
    log_negativity=1.0, sigma=1.5, entropy_joint=0.0, entropy_rob=1.0,
    mutual_information=2.0,
)


def measure_bundle(
    r: SqueezingParameter | float,
    tol: float = 1e-10,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
) -> MeasureBundle:
    """Evaluate every measure at one squeezing.

    Each series is summed to a rigorous tail bound below the (per-field)
    tolerance budget; where no term count within the cap can achieve that,
    the field is reported from rigorous limit brackets or the asymptotic form
    with an honest, larger ``est_error``.
    """
    sqz = as_squeezing(r)
    tol = _validate_tol(tol)
    sigma_lower, sigma_upper = sigma_bounds(sqz)

    if sqz.r == 0.0:
        exact = {
            k: Measured(v, 0.0, 2, "exact") for k, v in _EXACT_ZERO_BUNDLE_FIELDS.items()
        }
        return MeasureBundle(
            r=0.0,
            sigma_lower=sigma_lower,
            sigma_upper=sigma_upper,
            entropy_alice=Measured(1.0, 0.0, 1, "exact"),
            **exact,
        )

    x, c2 = sqz.tanh_sq, sqz.cosh_sq
    h = 1.0 / sqz.cosh_r if math.isfinite(sqz.cosh_r) else 0.0
    lt2 = 2.0 * sqz.ln_tanh_r
    big_l = -lt2 / LN2
    big_k = 1.0 + 2.0 * sqz.ln_cosh_r / LN2

    sigma_ok = _bisect_terms(
        lambda last: _sigma_tail(x, c2, h, last), tol * LN2, term_cap
    ) is not None
    joint_ok = _bisect_terms(
        lambda last: _joint_tail(x, c2, big_l, big_k, last), 0.5 * tol, term_cap
    ) is not None
    rob_ok = _bisect_terms(
        lambda last: _rob_tail(x, c2, big_l, big_k, last), 0.5 * tol, term_cap
    ) is not None

    if sigma_ok:
        sig_res = sigma_series(sqz, tol * LN2, term_cap=term_cap)
        arg = 0.5 / c2 + sig_res.value
        sigma = Measured(sig_res.value, sig_res.tail_bound, sig_res.terms_used, "series")
        negativity = Measured(
            math.log2(arg), sig_res.tail_bound / (arg * LN2), sig_res.terms_used, "series"
        )
    else:
        sigma = _far_sigma(sqz)
        negativity = _far_negativity(sqz)

    joint = (
        _measured_from(entropy_joint(sqz, 0.5 * tol, term_cap=term_cap))
        if joint_ok
        else _far_entropy(sqz, "joint")
    )
    rob = (
        _measured_from(entropy_rob(sqz, 0.5 * tol, term_cap=term_cap))
        if rob_ok
        else _far_entropy(sqz, "rob")
    )

    if joint_ok and rob_ok:
        value = 1.0 + rob.value - joint.value
        err = joint.est_error + rob.est_error
        terms = max(joint.terms_used, rob.terms_used)
        if sqz.r >= 0.25:
            _cross_validate(sqz, value, err, terms)
        mutual = Measured(value, err, terms, "series")
    else:
        mutual = _far_mutual(sqz)

    return MeasureBundle(
        r=sqz.r,
        log_negativity=negativity,
        sigma=sigma,
        sigma_lower=sigma_lower,
        sigma_upper=sigma_upper,
        entropy_joint=joint,
        entropy_rob=rob,
        entropy_alice=Measured(1.0, 0.0, 1, "exact"),
        mutual_information=mutual,
    )


def _measured_from(res: SeriesResult) -> Measured:
    return Measured(res.value, res.tail_bound, res.terms_used, "series")
