#!/usr/bin/env python3
"""Re-run the three bundled experiments end to end and print the table.

Equivalent to `qubitfit reproduce` but with the thread pool exposed, so a
multi-core box can run the restarts concurrently (results are identical
either way).
"""

import argparse
import sys
from pathlib import Path

from qubitfit import run_reproduction


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="reproduction", help="output directory")
    parser.add_argument("--seed", type=int, default=42, help="master seed")
    parser.add_argument("--iterations", type=int, default=5000, help="iterations per restart")
    parser.add_argument("--restarts", type=int, default=10, help="independent restarts")
    parser.add_argument("--workers", type=int, default=1, help="threads for concurrent restarts")
    args = parser.parse_args()

    report = run_reproduction(
        Path(args.out_dir),
        seed=args.seed,
        iterations=args.iterations,
        restarts=args.restarts,
        workers=args.workers,
    )
    print(report.table_path.read_text(encoding="utf-8"))
    print(f"artifacts in {args.out_dir}/ (params, SVG plots, report.md)")
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
