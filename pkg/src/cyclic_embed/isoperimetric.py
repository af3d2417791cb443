"""Maximum-subgraph / minimum-cut solvers and optimal-set certificates.

``I(a)`` is the largest number of edges induced by an ``a``-vertex set and
``theta(a)`` the smallest number of edges leaving one.  Exhaustive search is
budgeted: it refuses loudly rather than hang on C(64, 14)-sized searches.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, islice
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .graphs import Graph, is_consecutive_circulant

DEFAULT_SUBSET_BUDGET = comb(32, 6)
_CHUNK = 1 << 16


class BudgetExceeded(RuntimeError):
    """An exhaustive search would examine more candidates than allowed."""


@dataclass(frozen=True)
class IsoperimetricProfile:
    graph: Graph = field(repr=False)
    size: int
    induced: int
    boundary: int
    witness_induced: tuple[int, ...]
    witness_boundary: tuple[int, ...]
    certificate: str = "exhaustive"

    def check(self) -> None:
        """Re-derive both values from the witnesses."""
        g = self.graph
        assert len(self.witness_induced) == self.size
        assert len(self.witness_boundary) == self.size
        assert induced_edge_count(g, self.witness_induced) == self.induced
        assert boundary_edge_count(g, self.witness_boundary) == self.boundary


def _as_set(g: Graph, vertices: Iterable[int]) -> set[int]:
    s = set(vertices)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph on {g.n} vertices")
    return s


def induced_edge_count(g: Graph, vertices: Iterable[int]) -> int:
    s = _as_set(g, vertices)
    return sum(1 for u, v in g.edges if u in s and v in s)


def boundary_edge_count(g: Graph, vertices: Iterable[int]) -> int:
    s = _as_set(g, vertices)
    return sum(1 for u, v in g.edges if (u in s) != (v in s))


def theta_from_regularity(r: int, a: int, induced: int) -> int:
    """Boundary size of an optimal ``a``-set in an ``r``-regular graph: ``r*a - 2I``."""
    return r * a - 2 * induced


def circulant_xi(n: int, j: int, l: int) -> int:
    """Closed-form I(l) for the circulant G(n; +-{1..j}).

    The last branch reads ``(n-l)^2 + (4j+1)l - (2j+1)n``; that is the only
    reading under which ``l = n`` yields the full edge count ``jn``.
    """
    if n < 3 or not 1 <= j < n // 2 or not 1 <= l <= n:
        raise ValueError(f"parameters (n={n}, j={j}, l={l}) outside the closed form's range")
    if l <= j + 1:
        return l * (l - 1) // 2
    if l <= n - j:
        return l * j - j * (j + 1) // 2
    twice = (n - l) ** 2 + (4 * j + 1) * l - (2 * j + 1) * n
    assert twice % 2 == 0
    return twice // 2


# ----------------------------------------------------------------------------
# exhaustive search


def _combination_chunks(n: int, b: int) -> Iterable[np.ndarray]:
    it = combinations(range(n), b)
    while True:
        block = list(islice(it, _CHUNK))
        if not block:
            return
        yield np.asarray(block, dtype=np.int64).reshape(len(block), b)


def _matrix(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    adj = np.zeros((g.n, g.n), dtype=np.int32)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = 1
    return adj, adj.sum(axis=1)


def _scan(g: Graph, b: int):
    """Yield (combos, induced, degree-sum) blocks over all ``b``-subsets in lex order."""
    adj, deg = _matrix(g)
    pairs = list(combinations(range(b), 2))
    for block in _combination_chunks(g.n, b):
        ind = np.zeros(len(block), dtype=np.int64)
        for p, q in pairs:
            ind += adj[block[:, p], block[:, q]]
        yield block, ind, deg[block].sum(axis=1)


class _Tracker:
    """Running optimum over scanned blocks, keeping the attaining rows."""

    def __init__(self, maximize: bool, keep_all: bool):
        self.sign = 1 if maximize else -1
        self.keep_all = keep_all
        self.best: int | None = None
        self.rows: list[np.ndarray] = []

    def update(self, block: np.ndarray, values: np.ndarray) -> None:
        top = int(values.max()) if self.sign > 0 else int(values.min())
        if self.best is not None and self.sign * top < self.sign * self.best:
            return
        if self.best is None or top != self.best:
            self.best, self.rows = top, []
        hits = block[values == top]
        if self.keep_all:
            self.rows.append(hits)
        elif not self.rows:
            # lex scan order: the first hit is the lex-least witness
            self.rows.append(hits[:1])


@lru_cache(maxsize=512)
def _exact(g: Graph, a: int) -> IsoperimetricProfile:
    n, m = g.n, g.num_edges
    if a == 0 or a == n:
        w = tuple(range(a))
        return IsoperimetricProfile(g, a, induced_edge_count(g, w), 0, w, w)

    # Enumerate whichever of a and n-a is smaller.  For the complement T of S:
    # I(S) = |E| - deg(T) + I(T) and boundary(S) = boundary(T).
    direct = a <= n - a
    b = a if direct else n - a
    track_i = _Tracker(maximize=True, keep_all=not direct)
    track_t = _Tracker(maximize=False, keep_all=not direct)
    for block, ind, dsum in _scan(g, b):
        track_i.update(block, ind if direct else m - dsum + ind)
        track_t.update(block, dsum - 2 * ind)
    best_i, cand_i = track_i.best, track_i.rows
    best_t, cand_t = track_t.best, track_t.rows

    def lex_least(blocks: list[np.ndarray]) -> tuple[int, ...]:
        rows = np.concatenate([x for x in blocks if len(x)])
        if direct:
            return tuple(int(v) for v in rows[0])
        full = np.ones((len(rows), n), dtype=bool)
        full[np.arange(len(rows))[:, None], rows] = False
        sets = [tuple(np.flatnonzero(r).tolist()) for r in full]
        return min(sets)

    return IsoperimetricProfile(g, a, best_i, best_t, lex_least(cand_i), lex_least(cand_t))


def exact_profile(g: Graph, a: int, budget: int = DEFAULT_SUBSET_BUDGET) -> IsoperimetricProfile:
    """Exhaustive I(a) and theta(a) with lexicographically least witnesses.

    Raises :class:`BudgetExceeded` when C(n, a) exceeds ``budget``.
    """
    if not 0 <= a <= g.n:
        raise ValueError(f"size {a} outside 0..{g.n}")
    count = comb(g.n, a)
    if count > budget:
        raise BudgetExceeded(f"C({g.n}, {a}) = {count} subsets exceeds budget {budget}")
    return _exact(g, a)


def exhaustive_feasible(g: Graph, a: int, budget: int = DEFAULT_SUBSET_BUDGET) -> bool:
    return comb(g.n, a) <= budget


# ----------------------------------------------------------------------------
# closed forms and certification


def _formula_induced(g: Graph, a: int) -> int | None:
    """I(a) from a cited closed form, or ``None`` if no form covers ``g``."""
    if g.family == "hypercube":
        return induced_edge_count(g, range(a))
    if g.family == "folded-hypercube":
        n, r = g.n, g.regularity()
        if 2 * a <= n:
            return induced_edge_count(g, range(a))
        # complement symmetry of the boundary in a regular graph
        return induced_edge_count(g, range(n - a)) + r * (2 * a - n) // 2
    if is_consecutive_circulant(g):
        n, *jumps = g.params
        return 0 if a == 0 else circulant_xi(n, len(jumps), a)
    return None


def optimal_induced(
    g: Graph, a: int, budget: int = DEFAULT_SUBSET_BUDGET
) -> tuple[int | None, str]:
    """Best available value of I(a) and how it was obtained.

    Returns ``(value, "exhaustive")`` when the search fits in ``budget``,
    ``(value, "formula")`` when a cited closed form covers the family, and
    ``(None, "uncertified")`` otherwise.
    """
    if exhaustive_feasible(g, a, budget):
        return exact_profile(g, a, budget).induced, "exhaustive"
    val = _formula_induced(g, a)
    if val is not None:
        return val, "formula"
    return None, "uncertified"


def lex_segment_profile(
    g: Graph, a: int, budget: int = DEFAULT_SUBSET_BUDGET, certify: bool = True
) -> IsoperimetricProfile:
    """Profile of the initial segment ``{0, ..., a-1}`` of the canonical labeling.

    ``certificate`` records whether the segment was shown optimal by
    exhaustion, accepted on a closed form, refuted, or left unchecked.
    """
    if not 0 <= a <= g.n:
        raise ValueError(f"size {a} outside 0..{g.n}")
    seg = tuple(range(a))
    ind = induced_edge_count(g, seg)
    bnd = boundary_edge_count(g, seg)
    cert = "unchecked"
    if certify:
        best, how = optimal_induced(g, a, budget)
        if best is None:
            cert = how
        elif ind == best:
            cert = how
        else:
            cert = "refuted"
    return IsoperimetricProfile(g, a, ind, bnd, seg, seg, cert)


def profiles_to_csv(profiles: Sequence[IsoperimetricProfile]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "n", "a", "I", "theta", "witness"])
    for p in profiles:
        w.writerow(
            [p.graph.family, p.graph.n, p.size, p.induced, p.boundary,
             " ".join(map(str, p.witness_induced))]
        )
    return buf.getvalue()
