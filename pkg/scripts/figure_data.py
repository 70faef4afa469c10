"""Write plot-ready CSV grids for the four entanglement surfaces.

    python3 scripts/figure_data.py --out figures/ --steps 61
"""
import argparse
from pathlib import Path

import numpy as np

from relent.cli import ScanConfig, render_rows, scan_rows

PI = np.pi


def surfaces(steps: int) -> dict[str, ScanConfig]:
    grid = tuple(np.linspace(0, PI, steps))
    return {
        # 1-vs-3 change for the Bell family at delta = pi/2 ("egg tray")
        "bell_one_vs_three_diff": ScanConfig("bell", alpha=grid, beta=grid, delta=(PI / 2,), partition="one-vs-three-diff"),
        "bell_spin_vs_mom": ScanConfig("bell", alpha=grid, beta=grid, delta=(PI / 4,), partition="spin-vs-mom"),
        "triplet_one_vs_three_diff": ScanConfig(
            "triplet", alpha=(PI / 4,), theta=grid, phi=grid, delta=(PI / 2,), partition="one-vs-three-diff"
        ),
        "triplet_spin_vs_mom": ScanConfig(
            "triplet", alpha=(PI / 4,), theta=grid, phi=grid, delta=(PI / 4,), partition="spin-vs-mom"
        ),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("figures"))
    parser.add_argument("--steps", type=int, default=61)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, config in surfaces(args.steps).items():
        rows = scan_rows(config)
        path = args.out / f"{name}.csv"
        path.write_text(render_rows(rows, "csv"), encoding="utf-8")
        col = "E_delta" if config.partition.endswith("diff") else "E_boosted"
        values = np.array([r[col] for r in rows])
        worst = max((r["abs_error_vs_closed_form_or_blank"] or 0.0) for r in rows)
        print(f"{path}: {len(rows)} rows, {col} in [{values.min():.6f}, {values.max():.6f}], closed-form err {worst:.1e}")


if __name__ == "__main__":
    main()
