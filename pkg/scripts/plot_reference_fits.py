#!/usr/bin/env python3
"""Render the bundled reference parameter sets without any retraining.

Writes one SVG per target comparing the target function with the circuit
at the shipped parameters, and prints the index each achieves on the
standard 30-point grid.
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from qubitfit import (
    circuit_expectation_grid,
    get_target,
    make_grid,
    max_pointwise_error,
    performance_index,
    published_params,
)
from qubitfit.reproduce import EXPERIMENT_TARGETS
from qubitfit.svgplot import write_line_plot


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="reference_fits", help="output directory")
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    grid = make_grid(30, 1.5)
    dense = np.linspace(-1.5, 1.5, 200)

    for target_id in EXPERIMENT_TARGETS:
        target = get_target(target_id)
        params = published_params(target_id)
        j = performance_index(params, target, grid)
        eps = max_pointwise_error(params, target, grid)
        path = out / f"{target_id}_reference.svg"
        write_line_plot(
            path,
            dense,
            [
                (f"target {target_id}", target(dense), "#cc0000"),
                ("reference fit", circuit_expectation_grid(params, dense), "#000000"),
            ],
            title=f"{target_id}: reference parameters",
            xlabel="x",
        )
        print(f"{target_id:10s} J={j:.4f} max_error={eps:.4f} -> {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
