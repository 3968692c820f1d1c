#!/usr/bin/env python3
"""Recompute reduction rates of a benchmark run by counting lines.

Input rule counts come from rules/<label>.txt (one rule per non-comment
line); output counts from cells/<rules>__<taxonomies>.tsv (header plus one
line per generalized rule). Every row of report.csv must agree.
"""

import csv
import sys
from pathlib import Path


def rule_lines(path: Path, header: int = 0) -> int:
    lines = [ln for ln in path.read_text(encoding="utf-8").splitlines() if ln and not ln.startswith("#")]
    return len(lines) - header


def main(out: Path) -> int:
    bad = 0
    rows = 0
    with open(out / "report.csv", newline="", encoding="utf-8") as f:
        for row in csv.DictReader(f):
            rows += 1
            if row["error"]:
                print(f"cell failed: {row['ruleset']} x {row['taxonomy_set']}: {row['error']}")
                bad += 1
                continue
            n_in = rule_lines(out / "rules" / f"{row['ruleset']}.txt")
            n_out = rule_lines(out / "cells" / f"{row['ruleset']}__{row['taxonomy_set']}.tsv", header=1)
            rate = 0.0 if n_in == 0 else 100.0 * (n_in - n_out) / n_in
            expect = (str(n_in), str(n_out), "%.6f" % rate)
            got = (row["input"], row["output"], row["reduction_rate"])
            status = "ok" if got == expect else "MISMATCH"
            print(f"{row['ruleset']:>12} x {row['taxonomy_set']:<12} {n_in:>6} -> {n_out:<6} {rate:8.2f}%  {status}")
            if got != expect or not 0.0 <= rate <= 100.0:
                bad += 1
    if rows == 0:
        print("empty report")
        return 1
    return 1 if bad else 0


if __name__ == "__main__":
    if len(sys.argv) != 2:
        sys.exit("usage: recount_rates.py <benchmark-out-dir>")
    sys.exit(main(Path(sys.argv[1])))
