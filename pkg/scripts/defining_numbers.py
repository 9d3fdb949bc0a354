#!/usr/bin/env python3
"""Exact defining numbers of the small instances, by full search from size 0."""

import argparse
import time

from regdef.coloring import SearchBudget, chromatic_number, smallest_defining_set
from regdef.sweep import instances


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=12, help="skip graphs with more vertices")
    p.add_argument("--time-limit", type=float, default=120.0)
    args = p.parse_args()
    budget = SearchBudget(time_limit=args.time_limit)

    for inst in instances(5):
        res = inst.build()
        if res.n > args.max_n:
            continue
        t0 = time.perf_counter()
        best = smallest_defining_set(res.graph, budget, min_size=0)
        chi = chromatic_number(res.graph)
        print(f"{str(inst):<22} n={res.n:<3} chi={chi} d={len(best)} ({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    main()
