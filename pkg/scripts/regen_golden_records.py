#!/usr/bin/env python3
"""Regenerate the dense-path golden records in tests/data/golden_records.jsonl.

The first four records (n_max = 400) are the standard verification points;
the last two are the big-cutoff runs pinning the sweep-curve endpoints at
r = 3 and cosh r = 10.  Those two allocate ~5000^2 dense matrices and take
a couple of minutes on one core; they exist so the test suite never has to.
"""

import argparse
import pathlib
import sys
import time

import numpy as np

from unruh_entanglement.oracle import measures_numeric, record_from_bundle

DEFAULT_OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "golden_records.jsonl"

POINTS = (
    (0.1, 400, 1e-8),
    (0.5, 400, 1e-8),
    (1.0, 400, 1e-8),
    (2.0, 400, 1e-8),
    (3.0, 2500, 5e-8),
    (float(np.arccosh(10.0)), 2500, 5e-8),
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=pathlib.Path, default=DEFAULT_OUT)
    args = parser.parse_args()

    lines = []
    for r, n_max, tol in POINTS:
        t0 = time.perf_counter()
        bundle = measures_numeric(r, n_max=n_max, tol=tol)
        line = record_from_bundle(bundle)
        lines.append(line)
        print(f"[{time.perf_counter() - t0:7.1f}s] {line}")

    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {len(lines)} records to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
