#!/usr/bin/env python3
"""Produce the CSV data behind the two standard curves.

* negativity_vs_r.csv  — log-negativity over r in [0, 3]
* mutual_info_vs_cosh.csv — mutual information over cosh r in [1, 10]

Plot with any tool, e.g.:
    python -c "import pandas as pd, matplotlib.pyplot as plt; \
        d = pd.read_csv('out/negativity_vs_r.csv', comment='#'); \
        plt.plot(d.r, d.log_negativity); plt.show()"
"""

import argparse
import pathlib
import sys

from unruh_entanglement.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=pathlib.Path, default=pathlib.Path("out"))
    parser.add_argument("--steps", type=int, default=121)
    parser.add_argument("--tol", type=float, default=1e-10)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    rc = cli_main([
        "sweep", "--r-min", "0", "--r-max", "3", "--steps", str(args.steps),
        "--tol", str(args.tol),
        "--out", str(args.outdir / "negativity_vs_r.csv"),
    ])
    rc |= cli_main([
        "sweep", "--r-min", "1", "--r-max", "10", "--steps", str(args.steps),
        "--axis", "cosh_r", "--tol", str(args.tol),
        "--out", str(args.outdir / "mutual_info_vs_cosh.csv"),
    ])
    return rc


if __name__ == "__main__":
    sys.exit(main())
