#!/usr/bin/env python3
"""Run every randomized verification suite and write a combined JSON report.

Each suite runs at its registered defaults unless overridden.  The combined
report maps suite id to the usual report document plus wall-clock seconds,
so long runs can be compared across machines.  Exits 1 if any suite records
a failure.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from realroots.suites import SUITES, run_suite


@dataclass(frozen=True)
class RunConfig:
    suites: tuple[str, ...]
    seed: int
    max_n: int | None
    samples: int | None
    out: Path | None


def parse_args(argv=None) -> RunConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", action="append", choices=sorted(SUITES),
                        help="run only this suite (repeatable); default: all")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-n", type=int, default=None,
                        help="override every suite's size bound")
    parser.add_argument("--samples", type=int, default=None,
                        help="override every suite's sample count")
    parser.add_argument("--out", type=Path, default=None,
                        help="write the combined JSON report here")
    args = parser.parse_args(argv)
    return RunConfig(
        suites=tuple(args.suite or sorted(SUITES)),
        seed=args.seed,
        max_n=args.max_n,
        samples=args.samples,
        out=args.out,
    )


def main(argv=None) -> int:
    config = parse_args(argv)
    combined = {}
    any_failed = False
    for name in config.suites:
        start = time.monotonic()
        report = run_suite(
            name, max_n=config.max_n, samples=config.samples, seed=config.seed
        )
        elapsed = time.monotonic() - start
        document = report.to_json_dict()
        document["seconds"] = round(elapsed, 3)
        combined[name] = document
        status = "ok" if report.passed else f"FAILED ({len(report.failures)})"
        print(f"{name:<20} {report.instances:>6} instances  {elapsed:>7.1f}s  {status}")
        any_failed = any_failed or not report.passed
    if config.out is not None:
        config.out.write_text(json.dumps(combined, indent=2, sort_keys=True) + "\n")
        print(f"wrote {config.out}")
    return 1 if any_failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
