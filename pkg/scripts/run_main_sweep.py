#!/usr/bin/env python3
"""Run the deformed-top-1 => invariant-dim-1 sweep over the standard battery
of small groups and all their maximal parabolics, writing one JSON report per
(group, parabolic) into ./reports/.

Usage: python scripts/run_main_sweep.py [--nmax 3] [--s 3] [--outdir reports]
"""

import argparse
import pathlib
import sys

from flagcalc.cli import main as flagcalc_main

GROUPS = ["A2", "A3", "B2", "B3", "C3", "G2"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=3)
    ap.add_argument("--s", type=int, default=3)
    ap.add_argument("--outdir", default="reports")
    args = ap.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    failures = 0
    for g in GROUPS:
        rank = int(g[1:])
        for cross in range(1, rank + 1):
            out = outdir / f"verify-{g}-cross{cross}.json"
            code = flagcalc_main([
                "verify", "--group", g, "--cross", str(cross),
                "--s", str(args.s), "--nmax", str(args.nmax), "--out", str(out),
            ])
            status = "ok" if code == 0 else f"EXIT {code}"
            print(f"{g} cross {cross}: {status} -> {out}")
            failures += code != 0
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
