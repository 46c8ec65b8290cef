#!/usr/bin/env python3
"""Fuzz the two local surgeries and report the observed status changes.

Prints, for each transform, how many applications were tried and the
smallest/largest change in minimum status seen.
"""

import argparse
import random
import sys

from status_lab.graph import min_status
from status_lab.sampling import random_branch_move, random_contraction
from status_lab.transforms import contract_to_pendant, move_branches


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--n-max", type=int, default=64)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    drops, rises, bad = [], [], 0
    for _ in range(args.trials):
        g, e = random_contraction(rng, args.n_max)
        delta = min_status(g) - min_status(contract_to_pendant(g, e))
        drops.append(delta)
        bad += delta <= 0
        t, u, w, moved = random_branch_move(rng, args.n_max)
        delta = min_status(move_branches(t, u, w, moved)) - min_status(t)
        rises.append(delta)
        bad += delta <= 0

    print(f"contract_to_pendant: {len(drops)} trials, decrease in [{min(drops)}, {max(drops)}]")
    print(f"move_branches:       {len(rises)} trials, increase in [{min(rises)}, {max(rises)}]")
    print(f"violations: {bad}")
    return 3 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
