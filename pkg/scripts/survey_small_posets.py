#!/usr/bin/env python3
"""Exhaustive survey of layer-count polynomials over small labelled posets.

For every poset on up to --max-n elements and every labelling, compute the
layer-count polynomial, confirm all roots lie in [-1, 0], and tabulate how
often roots are simple versus repeated.  With --json, the per-size rows are
also written as a JSON document.
"""

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from realroots.generators import all_labellings, all_posets_on
from realroots.polynomial import format_polynomial_text
from realroots.posets import e_polynomial
from realroots.roots import count_roots, isolate_roots, roots_in_interval


@dataclass
class SizeRow:
    n: int
    posets: int = 0
    labelled: int = 0
    distinct_polys: int = 0
    repeated_root_cases: int = 0
    max_multiplicity: int = 1


def survey(max_n: int) -> list[SizeRow]:
    rows = []
    for n in range(1, max_n + 1):
        row = SizeRow(n=n)
        seen = Counter()
        for poset in all_posets_on(n):
            row.posets += 1
            for labelled in all_labellings(poset):
                row.labelled += 1
                e = e_polynomial(labelled)
                if not roots_in_interval(e, Fraction(-1), Fraction(0)):
                    raise AssertionError(f"root outside [-1,0]: {labelled!r}")
                seen[format_polynomial_text(e)] += 1
                multiplicities = [loc.multiplicity for loc in isolate_roots(e)]
                worst = max(multiplicities, default=1)
                row.max_multiplicity = max(row.max_multiplicity, worst)
                if worst > 1:
                    row.repeated_root_cases += 1
                # degree check is free: strict-order layers can't exceed n
                assert e.degree <= n and count_roots(e, Fraction(-2), Fraction(1)) >= 1
        row.distinct_polys = len(seen)
        rows.append(row)
    return rows


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--json", type=Path, default=None,
                        help="also write the table as JSON")
    args = parser.parse_args(argv)
    if args.max_n < 1:
        parser.error("--max-n must be at least 1")

    rows = survey(args.max_n)
    header = f"{'n':>2} {'posets':>8} {'labelled':>9} {'distinct':>9} {'repeated':>9} {'max mult':>9}"
    print(header)
    print("-" * len(header))
    for row in rows:
        print(
            f"{row.n:>2} {row.posets:>8} {row.labelled:>9} {row.distinct_polys:>9}"
            f" {row.repeated_root_cases:>9} {row.max_multiplicity:>9}"
        )
    print("all roots confirmed inside [-1, 0]")
    if args.json is not None:
        args.json.write_text(
            json.dumps([row.__dict__ for row in rows], indent=2, sort_keys=True) + "\n"
        )
        print(f"wrote {args.json}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
