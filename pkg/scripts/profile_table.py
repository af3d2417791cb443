#!/usr/bin/env python3
"""Tabulate exact isoperimetric profiles I(a), theta(a) for one graph family.

    python scripts/profile_table.py fq4
    python scripts/profile_table.py circ:10,1,2 --out g10.csv
"""

import argparse
import sys

from cyclic_embed.graphs import parse_family
from cyclic_embed.isoperimetric import BudgetExceeded, exact_profile, profiles_to_csv


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("family", help="designator such as fq4, q3, col:4,1, circ:8,1,2")
    p.add_argument("--out", help="CSV destination (default stdout)")
    args = p.parse_args()

    g = parse_family(args.family)
    profiles = []
    for a in range(g.n + 1):
        try:
            profiles.append(exact_profile(g, a))
        except BudgetExceeded:
            print(f"stopping at a={a}: search over budget", file=sys.stderr)
            break
    text = profiles_to_csv(profiles)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
