#!/usr/bin/env python3
"""Certify every theorem over a range of orders and dump a JSON report.

    python scripts/run_certification.py --n-hi 14 --out report.json
"""

import argparse
import os
import sys
import time

from status_lab.verifier import TheoremId, VerifyConfig, all_passed, format_reports, run_verification


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-lo", type=int, default=4)
    ap.add_argument("--n-hi", type=int, default=12)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--theorem", action="append", choices=[t.value for t in TheoremId])
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    theorems = tuple(TheoremId(t) for t in args.theorem) if args.theorem else tuple(TheoremId)
    config = VerifyConfig(theorems, args.n_lo, args.n_hi, args.jobs)
    start = time.perf_counter()
    reports = run_verification(config)
    elapsed = time.perf_counter() - start

    sys.stderr.write(format_reports(reports, "text"))
    sys.stderr.write(f"{len(reports)} theorem(s), n={args.n_lo}..{args.n_hi}, {elapsed:.1f}s\n")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(format_reports(reports, "json"))
    return 0 if all_passed(reports) else 2


if __name__ == "__main__":
    sys.exit(main())
