#!/usr/bin/env python3
"""Print the order-parameter tables for every built-in catalog entry.

For each entry the table lists the reference states, the computed value of
the entropic order parameter, the stored reference value, and their gap.
Run with no arguments; add --bits for base-2 reporting.
"""

import argparse
import math

import anycond as ac


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bits", action="store_true")
    args = parser.parse_args()
    scale = 1.0 / math.log(2.0) if args.bits else 1.0
    unit = "bits" if args.bits else "nats"

    for entry in ac.catalog():
        b = entry.branching
        lam = ac.jones_index(b)
        print(f"\n== {entry.id}: {entry.description}")
        print(f"   index = {lam:g}, bound = {scale * math.log(lam):.6f} {unit}")
        header = f"   {'state':<32} {'computed':>12} {'reference':>12} {'gap':>9}"
        print(header)
        for golden in entry.expected:
            state = golden.state(b.source)
            got = scale * ac.order_parameter(b, state).order_parameter
            want = scale * golden.value()
            probs = ", ".join(str(x) for x in golden.probs)
            print(f"   ({probs:<30}) {got:>12.8f} {want:>12.8f} {abs(got - want):>9.1e}")


if __name__ == "__main__":
    main()
