"""Sweep the term-growth benchmark over degrees and term budgets.

Writes one CSV per (d, L) into the output directory and prints the peak
term counts of the Euclidean expansion next to the resultant's.
"""

import argparse
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from ffelim.config import Config
from ffelim.eliminate import GrowthConfig, bench_growth
from ffelim.errors import FFElimError


def main():
    parser = argparse.ArgumentParser(description="Term-growth sweep")
    parser.add_argument("-p", type=int, default=31)
    parser.add_argument("-n", type=int, default=2)
    parser.add_argument("--degrees", default="1,2,3,4")
    parser.add_argument("--budgets", default="1,2,3")
    parser.add_argument("--trials", type=int, default=5)
    parser.add_argument("--out-dir", default="bench-out")
    args = parser.parse_args()

    try:
        config = Config.from_env()
        config.validate()

        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)

        print(f"Sweeping p={args.p} n={args.n} trials={args.trials} seed={config.seed}")
        print(f"{'d':>3} {'L':>3} {'eea peak':>10} {'resultant':>10}")
        for d in (int(v) for v in args.degrees.split(",")):
            for L in (int(v) for v in args.budgets.split(",")):
                growth = GrowthConfig(
                    d=d, L=L, n=args.n, p=args.p, seed=config.seed, trials=args.trials
                )
                log = bench_growth(growth, record_timing=config.record_timing)
                (out_dir / f"growth_d{d}_L{L}.csv").write_text(log.to_csv(), encoding="utf-8")

                peaks = log.summary()["max_terms"]
                print(
                    f"{d:>3} {L:>3} {peaks.get('eea-expansion', 0):>10} "
                    f"{peaks.get('resultant-propagate', 0):>10}"
                )

        print(f"\n✓ CSV files written to {out_dir}/")

    except FFElimError as e:
        print(f"\n✗ Benchmark rejected: {e}")
        sys.exit(1)
    except Exception as e:
        print(f"\n✗ Error: {e}")
        import traceback

        traceback.print_exc()
        sys.exit(1)


if __name__ == "__main__":
    main()
