"""Report rows comparing measured and closed-form wirelengths."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from math import factorial
from typing import Sequence

from .constructions import (
    algorithm_a,
    algorithm_b,
    theorem_a_terms,
    theorem_b_formula,
)
from .engine import verify_partition, wirelength_by_cuts, wirelength_by_distance
from .isoperimetric import DEFAULT_SUBSET_BUDGET
from .oracle import DEFAULT_PERMUTATION_BUDGET, brute_force_min_wirelength

COLUMNS = (
    "algorithm",
    "params",
    "wl_distance",
    "wl_cuts",
    "wl_formula",
    "wl_oracle",
    "distance_equals_cuts",
    "all_cuts_verified",
    "formula_agrees",
    "oracle_agrees",
    "formula_suspect",
    "certificates_used",
)


@dataclass(frozen=True)
class ReportRow:
    algorithm: str
    params: str
    wl_distance: int
    wl_cuts: int
    wl_formula: int
    wl_oracle: int | None
    distance_equals_cuts: bool
    all_cuts_verified: bool
    formula_agrees: bool
    oracle_agrees: bool | None
    formula_suspect: str
    certificates_used: str

    def flags(self) -> dict[str, bool]:
        out = {
            "distance_equals_cuts": self.distance_equals_cuts,
            "all_cuts_verified": self.all_cuts_verified,
            "formula_agrees": self.formula_agrees,
        }
        if self.oracle_agrees is not None:
            out["oracle_agrees"] = self.oracle_agrees
        return out

    @property
    def ok(self) -> bool:
        return all(self.flags().values())


def _oracle(emb, want: bool, budget: int):
    if not want or factorial(emb.guest.n) > budget:
        return None
    return brute_force_min_wirelength(emb.guest, emb.host, budget).minimum_wirelength


def row_for_a(
    s: int,
    oracle: bool = False,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
    perm_budget: int = DEFAULT_PERMUTATION_BUDGET,
):
    """Report row and per-cut verdicts for Algorithm A at dimension ``s``."""
    inst = algorithm_a(s)
    emb = inst.embedding
    verdicts = verify_partition(emb, inst.cuts, subset_budget)
    wl_d = wirelength_by_distance(emb)
    wl_c = wirelength_by_cuts(emb, inst.cuts)
    terms = theorem_a_terms(s, subset_budget)
    wl_f = (1 << (s + 2)) + 4 * sum(t for _, t, _ in terms)
    certs = {c for v in verdicts for c in v.certificates} | {c for _, _, c in terms}
    wl_o = _oracle(emb, oracle, perm_budget)
    row = ReportRow(
        "A", f"s={s}", wl_d, wl_c, wl_f, wl_o, wl_d == wl_c,
        all(v.holds for v in verdicts), wl_f == wl_d,
        None if wl_o is None else wl_o == wl_d,
        "", "+".join(sorted(certs)),
    )
    return row, verdicts


def row_for_b(
    n: int,
    j: int,
    k: int,
    m: int,
    oracle: bool = False,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
    perm_budget: int = DEFAULT_PERMUTATION_BUDGET,
):
    """Report row and per-cut verdicts for Algorithm B."""
    inst = algorithm_b(n, j, k, m, verify=True, budget=subset_budget)
    emb = inst.embedding
    wl_d = wirelength_by_distance(emb)
    wl_c = wirelength_by_cuts(emb, inst.cuts)
    f = theorem_b_formula(n, j, k, m)
    certs = {c for v in inst.verdicts for c in v.certificates}
    wl_o = _oracle(emb, oracle, perm_budget)
    row = ReportRow(
        "B", f"n={n},j={j},k={k},m={m}", wl_d, wl_c, f.value, wl_o, wl_d == wl_c,
        not inst.failures, f.value == wl_d and not f.suspect,
        None if wl_o is None else wl_o == wl_d,
        "; ".join(f.suspect), "+".join(sorted(certs)),
    )
    return row, list(inst.verdicts)


def default_sweep() -> list[tuple[str, tuple[int, ...]]]:
    """Parameter sets of the standard report: A for s=3..6, B even and odd."""
    out: list[tuple[str, tuple[int, ...]]] = [("A", (s,)) for s in range(3, 7)]
    out += [("B", (20, j, 4, 4)) for j in range(1, 10)]
    out += [("B", (12, j, 3, 3)) for j in range(1, 6)]
    out += [("B", (15, j, 4, 3)) for j in (1, 2, 4)]
    return out


def run_sweep(items=None, oracle: bool = True) -> list[ReportRow]:
    rows = []
    for alg, params in items or default_sweep():
        fn = row_for_a if alg == "A" else row_for_b
        rows.append(fn(*params, oracle=oracle)[0])
    return rows


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def rows_to_csv(rows: Sequence[ReportRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        d = asdict(r)
        w.writerow([_cell(d[c]) for c in COLUMNS])
    return buf.getvalue()


def rows_to_json(rows: Sequence[ReportRow], verdicts=None) -> str:
    items = []
    for i, r in enumerate(rows):
        d = asdict(r)
        d["flags"] = r.flags()
        if verdicts is not None:
            d["verdicts"] = [v.to_dict() for v in verdicts[i]]
        items.append(d)
    return json.dumps(items, sort_keys=True, indent=2) + "\n"
