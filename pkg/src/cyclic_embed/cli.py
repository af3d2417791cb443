"""Command-line front end: build, embed, verify, oracle, report.

Exit status: 0 on success, 1 when a verification flag is false, 2 for bad
parameters, 3 when a budget refuses a search.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graphs import (
    build_circulant,
    build_cycle_of_ladders,
    build_folded_hypercube,
    build_hypercube,
    build_ladder,
    build_star_of_cycle,
    parse_family,
)
from .isoperimetric import DEFAULT_SUBSET_BUDGET, BudgetExceeded
from .oracle import DEFAULT_PERMUTATION_BUDGET, brute_force_min_wirelength
from .report import row_for_a, row_for_b, rows_to_csv, rows_to_json, run_sweep

EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 1, 2, 3


class UsageError(ValueError):
    pass


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing {', '.join(missing)}")
    return [getattr(args, n) for n in names]


def graph_from_args(args):
    fam = args.family
    if fam is None:
        raise UsageError("--family is required")
    if ":" in fam or fam[-1:].isdigit():
        return parse_family(fam)
    if fam in ("q", "hypercube"):
        return build_hypercube(*_need(args, "s"))
    if fam in ("fq", "folded-hypercube"):
        return build_folded_hypercube(*_need(args, "s"))
    if fam in ("circ", "circulant"):
        n, j = _need(args, "n", "j")
        return build_circulant(n, range(1, j + 1))
    if fam == "ladder":
        return build_ladder(*_need(args, "r"))
    if fam in ("col", "cycle-of-ladders"):
        return build_cycle_of_ladders(*_need(args, "l", "r"))
    if fam in ("star", "star-of-cycle"):
        return build_star_of_cycle(*_need(args, "k", "m"))
    raise UsageError(f"unknown family {fam!r}")


def _row(args):
    budget = DEFAULT_SUBSET_BUDGET if args.budget is None else args.budget
    if args.algorithm == "A":
        return row_for_a(*_need(args, "s"), oracle=args.oracle, subset_budget=budget)
    n, j, k, m = _need(args, "n", "j", "k", "m")
    return row_for_b(n, j, k, m, oracle=args.oracle, subset_budget=budget)


def cmd_build(args) -> tuple[str, int]:
    g = graph_from_args(args)
    if args.format == "dot":
        return g.to_dot(), 0
    if args.format == "csv":
        return "u,v\n" + "".join(f"{u},{v}\n" for u, v in g.edges), 0
    return g.to_json() + "\n", 0


def cmd_embed(args) -> tuple[str, int]:
    row, _ = _row(args)
    if args.format == "csv":
        return rows_to_csv([row]), 0
    return rows_to_json([row]), 0


def cmd_verify(args) -> tuple[str, int]:
    row, verdicts = _row(args)
    if args.format == "csv":
        out = rows_to_csv([row])
    else:
        out = rows_to_json([row], [verdicts])
    if not row.ok:
        failed = [k for k, v in row.flags().items() if not v]
        print(f"verification failed: {', '.join(failed)}", file=sys.stderr)
        return out, EXIT_FAIL
    return out, 0


def cmd_oracle(args) -> tuple[str, int]:
    if args.guest is None or args.host is None:
        raise UsageError("oracle needs --guest and --host")
    guest, host = parse_family(args.guest), parse_family(args.host)
    budget = DEFAULT_PERMUTATION_BUDGET if args.budget is None else args.budget
    res = brute_force_min_wirelength(guest, host, budget)
    return json.dumps(res.to_dict(), sort_keys=True) + "\n", 0


def cmd_report(args) -> tuple[str, int]:
    rows = run_sweep(oracle=True)
    if args.format == "csv":
        return rows_to_csv(rows), 0
    return rows_to_json(rows), 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclic-embed", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=["build", "embed", "verify", "oracle", "report"])
    p.add_argument("--algorithm", choices=["A", "B"], default="A")
    for name in ("s", "n", "j", "k", "m", "l", "r"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--family", help="family name, or a designator such as col:4,3 or fq3")
    p.add_argument("--guest", help="oracle guest designator, e.g. fq3")
    p.add_argument("--host", help="oracle host designator, e.g. col:4,0")
    p.add_argument("--format", choices=["json", "csv", "dot"], default="json")
    p.add_argument("--budget", type=int,
                   help=f"subset budget (default {DEFAULT_SUBSET_BUDGET}); "
                        f"for oracle, permutation budget (default {DEFAULT_PERMUTATION_BUDGET})")
    p.add_argument("--oracle", action="store_true", help="add the brute-force column when feasible")
    p.add_argument("--out", help="write output here instead of stdout")
    return p


COMMANDS = {
    "build": cmd_build,
    "embed": cmd_embed,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "report": cmd_report,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
