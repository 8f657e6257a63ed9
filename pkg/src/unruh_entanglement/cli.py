"""Command-line interface: sweeps, single-point measures, verification.

Exit codes: 0 success, 1 verification or convergence failure, 2 usage or
I/O error.  Sweep output is CSV with a fixed ten-column schema; rows whose
error estimate misses the requested tolerance are replaced by a
``# no-convergence`` marker line and flip the exit code to 1.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import oracle
from .analytic import (
    MeasureBundle,
    SeriesConvergenceError,
    measure_bundle,
    pt_block_eigenvalues,
    sigma_bounds,
)
from .jacobi import JacobiConvergenceError, jacobi_eigh
from .kinematics import SqueezingParameter, squeezing_from_omega

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

CSV_HEADER = (
    "r", "omega", "log_negativity", "mutual_information", "entropy_joint",
    "entropy_rob", "sigma", "sigma_upper", "est_error", "terms_used",
)

DEFAULT_VERIFY_RS = (0.1, 0.5, 1.0, 2.0)


def _f12(value: float) -> str:
    return f"{value:.11e}"


# ---------------------------------------------------------------------------
# measure
# ---------------------------------------------------------------------------


def _resolve_squeezing(args) -> tuple[SqueezingParameter, float | None]:
    if args.omega is not None:
        return squeezing_from_omega(args.omega), args.omega
    return SqueezingParameter.from_r(args.r), None


def _measure_record(bundle: MeasureBundle, tol: float) -> str:
    return oracle.format_record(
        bundle.r, bundle.max_terms_used, tol, bundle.log_negativity.value,
        bundle.mutual_information.value, bundle.entropy_joint.value,
        bundle.entropy_rob.value, bundle.sigma.value,
    )


def cmd_measure(args) -> int:
    sqz, omega = _resolve_squeezing(args)
    bundle = measure_bundle(sqz, args.tol)
    if args.json_lines:
        print(_measure_record(bundle, args.tol))
        return EXIT_OK

    print(f"r                  = {sqz.r:.16e}")
    if omega is not None:
        print(f"omega              = {omega:.16e}")
    print(f"cosh_r             = {sqz.cosh_r:.16e}")
    print(f"tanh_r             = {sqz.tanh_r:.16e}")
    if sqz.effectively_infinite:
        print("regime             = effectively infinite acceleration")
    for name, m in (
        ("log_negativity", bundle.log_negativity),
        ("sigma", bundle.sigma),
        ("entropy_joint", bundle.entropy_joint),
        ("entropy_rob", bundle.entropy_rob),
        ("entropy_alice", bundle.entropy_alice),
        ("mutual_information", bundle.mutual_information),
    ):
        print(
            f"{name:<18s} = {m.value:.16e} +- {m.est_error:.3e}"
            f"  [{m.method}, {m.terms_used} terms]"
        )
    print(f"sigma_bounds       = [{bundle.sigma_lower:.16e}, {bundle.sigma_upper:.16e}]")
    if bundle.max_est_error > args.tol:
        print(
            f"note: error estimates above the requested tolerance {args.tol:g} "
            "(limit-bracket regime)"
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


def _sweep_grid(args) -> list[tuple[float, float | None]]:
    """(r, omega-or-None) pairs in strictly ascending r order."""
    if args.steps < 2:
        raise ValueError("steps must be >= 2")
    if not (args.r_max > args.r_min):
        raise ValueError("--r-max must exceed --r-min (degenerate grid rejected)")
    grid = np.linspace(args.r_min, args.r_max, args.steps)
    if args.axis == "r":
        if args.r_min < 0.0:
            raise ValueError("--r-min must be >= 0 for the r axis")
        return [(float(g), None) for g in grid]
    if args.axis == "cosh_r":
        if args.r_min < 1.0:
            raise ValueError("--r-min must be >= 1 for the cosh_r axis")
        return [(float(np.arccosh(g)), None) for g in grid]
    if args.r_min <= 0.0:
        raise ValueError("--r-min must be > 0 for the omega axis")
    return [
        (squeezing_from_omega(float(om)).r, float(om)) for om in grid[::-1]
    ]


def _sweep_row(r: float, omega: float | None, bundle: MeasureBundle) -> list[str]:
    return [
        _f12(r),
        "" if omega is None else _f12(omega),
        _f12(bundle.log_negativity.value),
        _f12(bundle.mutual_information.value),
        _f12(bundle.entropy_joint.value),
        _f12(bundle.entropy_rob.value),
        _f12(bundle.sigma.value),
        _f12(bundle.sigma_upper),
        _f12(bundle.max_est_error),
        str(bundle.max_terms_used),
    ]


def cmd_sweep(args) -> int:
    grid = _sweep_grid(args)
    lines: list[list[str] | str] = []
    flagged = 0
    for r, omega in grid:
        try:
            bundle = measure_bundle(r, args.tol)
        except SeriesConvergenceError as exc:
            lines.append(f"# no-convergence r={_f12(r)}: {exc}")
            flagged += 1
            continue
        if bundle.max_est_error <= args.tol:
            lines.append(_sweep_row(r, omega, bundle))
        else:
            lines.append(
                f"# no-convergence r={_f12(r)}: est_error "
                f"{bundle.max_est_error:.3e} exceeds tol {args.tol:.3e}"
            )
            flagged += 1

    with open(args.out, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for line in lines:
            if isinstance(line, str):
                fh.write(line + "\n")
            else:
                writer.writerow(line)
    print(
        f"wrote {len(lines) - flagged} rows to {args.out}"
        + (f" ({flagged} grid points flagged)" if flagged else "")
    )
    return EXIT_FAIL if flagged else EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComparisonRow:
    r: float
    quantity: str
    analytic: float
    oracle: float
    abs_diff: float
    allowed: float
    ok: bool
    note: str = ""


@dataclass(frozen=True)
class VerificationReport:
    rows: list[ComparisonRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.ok for row in self.rows)


def _block_comparison(r: float, n_max: int, block_tol: float) -> ComparisonRow:
    """Dense PT eigenpairs, classified by eigenvector support, vs closed form."""
    state = oracle.build_tripartite_state(r, n_max)
    rho_t = oracle.partial_transpose_alice(oracle.trace_out_region_II(state))
    w, v, _ = jacobi_eigh(rho_t.entries)
    dim_i = state.dim_i
    worst = 0.0
    n_blocks = min(60, n_max)
    for n in range(n_blocks + 1):
        i_one = dim_i + n       # |1, n>
        i_zero = n + 1          # |0, n+1>
        mass = v[i_one, :] ** 2 + v[i_zero, :] ** 2
        cols = np.flatnonzero(mass > 0.5)
        if cols.size != 2:
            return ComparisonRow(
                r, "pt_blocks", math.nan, math.nan, math.inf, block_tol, False,
                f"block {n}: expected 2 supported eigenvectors, found {cols.size}",
            )
        dense_pair = np.sort(w[cols])
        lam_plus, lam_minus = pt_block_eigenvalues(r, n)
        worst = max(
            worst,
            abs(dense_pair[0] - lam_minus),
            abs(dense_pair[1] - lam_plus),
        )
    return ComparisonRow(
        r, "pt_blocks", 0.0, 0.0, worst, block_tol, worst <= block_tol,
        f"max |dense - closed form| over blocks n <= {n_blocks}",
    )


def verify_report(
    rs=DEFAULT_VERIFY_RS, n_max: int = 400, tol: float = 1e-8
) -> VerificationReport:
    rows: list[ComparisonRow] = []
    for r in rs:
        r = float(r)
        try:
            bundle = measure_bundle(r, min(0.1 * tol, 1e-10))
            numeric = oracle.measures_numeric(r, n_max=n_max, tol=tol)
        except (SeriesConvergenceError, JacobiConvergenceError, ValueError) as exc:
            rows.append(
                ComparisonRow(r, "pipeline", math.nan, math.nan, math.inf, tol,
                              False, f"{type(exc).__name__}: {exc}")
            )
            continue
        tail_note = f"oracle truncation tail {numeric.truncation_tail:.2e}"
        for name, a_val, o_val in (
            ("N", bundle.log_negativity.value, numeric.log_negativity),
            ("S_AR", bundle.entropy_joint.value, numeric.entropy_joint),
            ("S_RI", bundle.entropy_rob.value, numeric.entropy_rob),
            ("I", bundle.mutual_information.value, numeric.mutual_information),
            ("sigma", bundle.sigma.value, numeric.sigma),
        ):
            diff = abs(a_val - o_val)
            rows.append(
                ComparisonRow(r, name, a_val, o_val, diff, tol, diff <= tol, tail_note)
            )
        purity = abs(numeric.entropy_joint - numeric.entropy_region_ii)
        rows.append(
            ComparisonRow(
                r, "purity", numeric.entropy_joint, numeric.entropy_region_ii,
                purity, tol, purity <= tol, "|S_AR - S_RII| at matched truncation",
            )
        )
        lower, upper = sigma_bounds(r)
        sig = bundle.sigma.value
        in_bounds = lower - bundle.sigma.est_error <= sig < upper
        rows.append(
            ComparisonRow(
                r, "sigma_bounds", sig, upper, 0.0 if in_bounds else math.inf,
                tol, in_bounds, f"require {lower:g} <= sigma < upper",
            )
        )
        rows.append(_block_comparison(r, n_max, 0.1 * tol))
    return VerificationReport(rows=rows)


def print_report(report: VerificationReport) -> None:
    header = (
        f"{'r':>6s} {'quantity':<12s} {'analytic':>24s} {'oracle':>24s} "
        f"{'|diff|':>10s} {'allowed':>10s} {'status':<6s}"
    )
    print(header)
    print("-" * len(header))
    for row in report.rows:
        print(
            f"{row.r:>6.3g} {row.quantity:<12s} {row.analytic:>24.16e} "
            f"{row.oracle:>24.16e} {row.abs_diff:>10.3e} {row.allowed:>10.3e} "
            f"{'ok' if row.ok else 'FAIL':<6s}"
            + (f"  {row.note}" if row.note and not row.ok else "")
        )
    print(f"overall: {'PASS' if report.passed else 'FAIL'}")


def cmd_verify(args) -> int:
    rs = args.r if args.r else list(DEFAULT_VERIFY_RS)
    report = verify_report(rs, n_max=args.n_max, tol=args.tol)
    print_report(report)
    return EXIT_OK if report.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# from-acceleration
# ---------------------------------------------------------------------------


def cmd_from_acceleration(args) -> int:
    sqz = squeezing_from_omega(args.omega)
    if args.json_lines:
        print(
            f'{{"omega": {args.omega:.16e}, "r": {sqz.r:.16e}, '
            f'"cosh_r": {sqz.cosh_r:.16e}, "tanh_r": {sqz.tanh_r:.16e}, '
            f'"effectively_infinite": {"true" if sqz.effectively_infinite else "false"}}}'
        )
        return EXIT_OK
    print(f"omega                 = {args.omega:.16e}")
    print(f"r                     = {sqz.r:.16e}")
    print(f"cosh_r                = {sqz.cosh_r:.16e}")
    print(f"tanh_r                = {sqz.tanh_r:.16e}")
    print(f"effectively_infinite  = {sqz.effectively_infinite}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruh-entanglement",
        description=(
            "Entanglement and correlation measures of a two-mode Bell state "
            "seen from a uniformly accelerated frame."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    measure = sub.add_parser("measure", help="measure every quantity at one point")
    group = measure.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=float, help="squeezing parameter r >= 0")
    group.add_argument("--omega", type=float, help="dimensionless |k| c / a")
    measure.add_argument("--tol", type=float, default=1e-10)
    measure.add_argument("--json-lines", action="store_true",
                         help="emit one machine-readable record line")
    measure.set_defaults(func=cmd_measure)

    sweep = sub.add_parser("sweep", help="sweep a grid and write a CSV")
    sweep.add_argument("--r-min", type=float, required=True)
    sweep.add_argument("--r-max", type=float, required=True)
    sweep.add_argument("--steps", type=int, required=True)
    sweep.add_argument("--axis", choices=("r", "cosh_r", "omega"), default="r",
                       help="grid variable; bounds are read on this axis")
    sweep.add_argument("--tol", type=float, default=1e-10)
    sweep.add_argument("--out", required=True, help="output CSV path")
    sweep.set_defaults(func=cmd_sweep)

    verify = sub.add_parser("verify", help="closed form vs dense brute force")
    verify.add_argument("--r", type=float, action="append",
                        help="repeatable; default 0.1 0.5 1 2")
    verify.add_argument("--n-max", type=int, default=400)
    verify.add_argument("--tol", type=float, default=1e-8)
    verify.set_defaults(func=cmd_verify)

    froma = sub.add_parser("from-acceleration",
                           help="kinematics only: omega -> squeezing")
    froma.add_argument("--omega", type=float, required=True)
    froma.add_argument("--json-lines", action="store_true")
    froma.set_defaults(func=cmd_from_acceleration)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SeriesConvergenceError, JacobiConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def entry_point() -> None:
    sys.exit(main())
