"""Brute-force validation path in a truncated Fock basis.

Builds the tripartite pure state |psi> = (|0>_A |vac> + |1>_A |one>)/sqrt(2)
with the wedge-pair expansions truncated at occupation n_max, forms density
matrices by generic partial traces over the dense coefficient tensor,
partially transposes, and diagonalizes densely with the in-repo Jacobi
solver.  No step assumes the block structure that the closed-form route
exploits, so agreement between the two is a genuine cross-check.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .jacobi import jacobi_eigh
from .kinematics import SqueezingParameter, as_squeezing

LN2 = math.log(2.0)


def build_vacuum_expansion(r: SqueezingParameter | float, n_max: int) -> np.ndarray:
    """Wedge-pair coefficients of the vacuum: c_n = tanh^n r / cosh r."""
    sqz = as_squeezing(r)
    n_max = _check_cutoff(n_max)
    n = np.arange(n_max + 1, dtype=np.float64)
    return sqz.tanh_r ** n / sqz.cosh_r


def build_one_particle_expansion(r: SqueezingParameter | float, n_max: int) -> np.ndarray:
    """One-particle coefficients d_n = tanh^n r sqrt(n+1) / cosh^2 r on |n+1, n>."""
    sqz = as_squeezing(r)
    n_max = _check_cutoff(n_max)
    n = np.arange(n_max + 1, dtype=np.float64)
    return sqz.tanh_r ** n * np.sqrt(n + 1.0) / sqz.cosh_sq


def _check_cutoff(n_max: int) -> int:
    n_max = int(n_max)
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    return n_max


@dataclass(frozen=True)
class TripartiteState:
    """Sparse amplitude table over |alice, n_I, n_II>.

    Only two families are populated: (1/sqrt2) c_n on |0, n, n> and
    (1/sqrt2) d_n on |1, n+1, n>, so the table never exceeds
    2 (n_max + 1) nonzero entries.  The region-I index runs to n_max + 1.
    """

    r: float
    n_max: int
    vacuum_amp: np.ndarray    # on |0, n, n>, n = 0..n_max
    particle_amp: np.ndarray  # on |1, n+1, n>, n = 0..n_max

    @property
    def dim_i(self) -> int:
        return self.n_max + 2

    @property
    def dim_ii(self) -> int:
        return self.n_max + 1

    @property
    def nonzero_count(self) -> int:
        return int(np.count_nonzero(self.vacuum_amp) + np.count_nonzero(self.particle_amp))

    def amplitude(self, alice: int, n_i: int, n_ii: int) -> float:
        if alice == 0 and n_i == n_ii and 0 <= n_i <= self.n_max:
            return float(self.vacuum_amp[n_i])
        if alice == 1 and n_i == n_ii + 1 and 0 <= n_ii <= self.n_max:
            return float(self.particle_amp[n_ii])
        return 0.0

    def dense(self) -> np.ndarray:
        psi = np.zeros((2, self.dim_i, self.dim_ii))
        idx = np.arange(self.n_max + 1)
        psi[0, idx, idx] = self.vacuum_amp
        psi[1, idx + 1, idx] = self.particle_amp
        return psi

    def squared_norm(self) -> float:
        return float(self.vacuum_amp @ self.vacuum_amp + self.particle_amp @ self.particle_amp)


def build_tripartite_state(r: SqueezingParameter | float, n_max: int) -> TripartiteState:
    sqz = as_squeezing(r)
    n_max = _check_cutoff(n_max)
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    return TripartiteState(
        r=sqz.r,
        n_max=n_max,
        vacuum_amp=inv_sqrt2 * build_vacuum_expansion(sqz, n_max),
        particle_amp=inv_sqrt2 * build_one_particle_expansion(sqz, n_max),
    )


def truncation_tail(r: SqueezingParameter | float, n_max: int) -> float:
    """Exact norm deficit of the truncated state, (vacuum + one-particle)/2."""
    sqz = as_squeezing(r)
    n_max = _check_cutoff(n_max)
    x = sqz.tanh_sq
    if x == 0.0:
        return 0.0
    if x >= 1.0:
        return math.inf
    omx = 1.0 - x
    vac = x ** (n_max + 1)
    # sum_{n>N} (n+1) x^n = x^(N+1) [ (N+2)/(1-x) + x/(1-x)^2 ]
    particle = x ** (n_max + 1) * ((n_max + 2) / omx + x / (omx * omx)) / (sqz.cosh_sq ** 2)
    return 0.5 * (vac + particle)


@dataclass(frozen=True)
class DensityMatrix:
    """Dense real symmetric density matrix with ordered basis labels."""

    entries: np.ndarray
    basis_labels: tuple

    def __post_init__(self) -> None:
        e = self.entries
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError(f"entries must be square, got shape {e.shape}")
        if len(self.basis_labels) != e.shape[0]:
            raise ValueError("basis_labels length must match matrix dimension")

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries))

    def hermiticity_defect(self) -> float:
        scale = float(np.abs(self.entries).max()) or 1.0
        return float(np.abs(self.entries - self.entries.T).max()) / scale


def _qubit_mode_labels(dim_i: int) -> tuple:
    return tuple((a, n) for a in (0, 1) for n in range(dim_i))


def trace_out_region_II(state: TripartiteState) -> DensityMatrix:
    """rho_AR = Tr_II |psi><psi| over the (alice, n_I) basis."""
    psi = state.dense()
    m = psi.reshape(2 * state.dim_i, state.dim_ii)
    return DensityMatrix(m @ m.T, _qubit_mode_labels(state.dim_i))


def trace_out_alice_and_region_I(state: TripartiteState) -> DensityMatrix:
    """rho_RII = Tr_{A,I} |psi><psi| over the region-II occupation basis."""
    psi = state.dense()
    m = psi.reshape(2 * state.dim_i, state.dim_ii)
    return DensityMatrix(m.T @ m, tuple(range(state.dim_ii)))


def _split_qubit_mode(dm: DensityMatrix) -> int:
    labels = dm.basis_labels
    m = dm.dim // 2
    if (
        dm.dim % 2 != 0
        or not all(isinstance(l, tuple) and len(l) == 2 for l in labels)
        or labels[0] != (0, 0)
        or labels[m] != (1, 0)
    ):
        raise ValueError("expected a qubit (x) mode labeled density matrix")
    return m


def trace_out_alice(dm: DensityMatrix) -> DensityMatrix:
    m = _split_qubit_mode(dm)
    blocks = dm.entries.reshape(2, m, 2, m)
    return DensityMatrix(np.einsum("aiaj->ij", blocks), tuple(range(m)))


def trace_out_rob(dm: DensityMatrix) -> DensityMatrix:
    m = _split_qubit_mode(dm)
    blocks = dm.entries.reshape(2, m, 2, m)
    return DensityMatrix(np.einsum("aibi->ab", blocks), ((0,), (1,)))


def partial_transpose_alice(dm: DensityMatrix) -> DensityMatrix:
    """Swap Alice's index between bra and ket; Hermitian, trace-preserving."""
    m = _split_qubit_mode(dm)
    blocks = dm.entries.reshape(2, m, 2, m)
    swapped = blocks.transpose(2, 1, 0, 3).reshape(dm.dim, dm.dim)
    return DensityMatrix(swapped, dm.basis_labels)


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalues and the relative off-diagonal residual."""

    eigenvalues: np.ndarray
    residual: float

    @property
    def trace(self) -> float:
        return float(self.eigenvalues.sum())

    def trace_norm(self) -> float:
        return float(np.abs(self.eigenvalues).sum())

    def entropy(self) -> float:
        w = self.eigenvalues[self.eigenvalues > 0.0]
        return float(-(w * np.log2(w)).sum())


def symmetric_eigenvalues(matrix: DensityMatrix | np.ndarray) -> Spectrum:
    entries = matrix.entries if isinstance(matrix, DensityMatrix) else np.asarray(matrix)
    w, _, residual = jacobi_eigh(entries)
    return Spectrum(eigenvalues=w, residual=residual)


def default_cutoff(r: SqueezingParameter | float, tol: float = 1e-8) -> int:
    """Smallest n_max with tanh^{2n} r (n+2) / (1 - tanh^2 r)^2 below tol/10.

    Chosen so the analytic geometric remainder of every reported measure is
    provably below the requested tolerance before any matrix is allocated.
    """
    sqz = as_squeezing(r)
    if not (tol > 0.0):
        raise ValueError("tol must be > 0")
    x = sqz.tanh_sq
    if x == 0.0:
        return 1
    target = 0.1 * tol / (sqz.cosh_sq ** 2)
    if x >= 1.0 or target <= 0.0:
        raise ValueError(f"no feasible cutoff at r={sqz.r:g}; pass n_max explicitly")
    n = max(0, int((math.log(target) - math.log(2.0)) / math.log(x)))
    while n > 0 and x ** (n - 1) * (n + 1.0) < target:
        n -= 1
    while x ** n * (n + 2.0) >= target:
        n += 1
        if n > 500_000:
            raise ValueError(f"cutoff beyond 5e5 at r={sqz.r:g}; dense path infeasible")
    return max(n, 1)


@dataclass(frozen=True)
class OracleBundle:
    """Every measure from the dense path at one (r, n_max)."""

    r: float
    n_max: int
    tol: float
    log_negativity: float
    mutual_information: float
    entropy_joint: float
    entropy_rob: float
    entropy_alice: float
    entropy_region_ii: float
    sigma: float
    truncation_tail: float
    max_residual: float

    @property
    def est_error(self) -> float:
        dim = 2 * (self.n_max + 2)
        return self.truncation_tail * (math.log2(dim) + 2.0) + 10.0 * self.max_residual


def measures_numeric(
    r: SqueezingParameter | float,
    n_max: int | None = None,
    tol: float = 1e-8,
) -> OracleBundle:
    """Full dense pipeline: state, partial traces, transpose, eigensolves."""
    sqz = as_squeezing(r)
    if n_max is None:
        n_max = default_cutoff(sqz, tol)
    state = build_tripartite_state(sqz, n_max)
    rho_ar = trace_out_region_II(state)
    spec_ar = symmetric_eigenvalues(rho_ar)
    spec_pt = symmetric_eigenvalues(partial_transpose_alice(rho_ar))
    spec_ri = symmetric_eigenvalues(trace_out_alice(rho_ar))
    spec_a = symmetric_eigenvalues(trace_out_rob(rho_ar))
    spec_rii = symmetric_eigenvalues(trace_out_alice_and_region_I(state))

    s_ar = spec_ar.entropy()
    s_ri = spec_ri.entropy()
    s_a = spec_a.entropy()
    return OracleBundle(
        r=sqz.r,
        n_max=n_max,
        tol=tol,
        log_negativity=math.log2(spec_pt.trace_norm()),
        mutual_information=s_a + s_ri - s_ar,
        entropy_joint=s_ar,
        entropy_rob=s_ri,
        entropy_alice=s_a,
        entropy_region_ii=spec_rii.entropy(),
        sigma=spec_pt.trace_norm() - 0.5 / sqz.cosh_sq,
        truncation_tail=truncation_tail(sqz, n_max),
        max_residual=max(
            spec_ar.residual, spec_pt.residual, spec_ri.residual,
            spec_a.residual, spec_rii.residual,
        ),
    )


# ---------------------------------------------------------------------------
# golden-record fixtures: one flat record per line, fixed key order,
# 17-significant-digit decimals
# ---------------------------------------------------------------------------

RECORD_KEYS = ("r", "n_max", "tol", "N", "I", "S_AR", "S_RI", "sigma")


def format_record(
    r: float, n_max: int, tol: float, N: float, I: float,
    S_AR: float, S_RI: float, sigma: float,
) -> str:
    return (
        f'{{"r": {r:.16e}, "n_max": {int(n_max)}, "tol": {tol:.16e}, '
        f'"N": {N:.16e}, "I": {I:.16e}, "S_AR": {S_AR:.16e}, '
        f'"S_RI": {S_RI:.16e}, "sigma": {sigma:.16e}}}'
    )


def record_from_bundle(bundle: OracleBundle) -> str:
    return format_record(
        bundle.r, bundle.n_max, bundle.tol, bundle.log_negativity,
        bundle.mutual_information, bundle.entropy_joint, bundle.entropy_rob,
        bundle.sigma,
    )


def parse_record(line: str) -> dict:
    record = json.loads(line)
    if tuple(record.keys()) != RECORD_KEYS:
        raise ValueError(f"unexpected record keys {tuple(record.keys())!r}")
    return record


def read_records(path) -> list[dict]:
    with open(path, "r", encoding="ascii") as fh:
        return [parse_record(line) for line in fh if line.strip()]
