"""Brute-force minimum wirelength over all vertex bijections."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .engine import Embedding, host_distances, wirelength_by_distance
from .graphs import Graph
from .isoperimetric import BudgetExceeded

DEFAULT_PERMUTATION_BUDGET = factorial(10)


@dataclass(frozen=True)
class OracleResult:
    minimum_wirelength: int
    witness_map: tuple[int, ...]
    searched: int
    pruned: int

    def to_dict(self) -> dict:
        return {
            "minimum_wirelength": self.minimum_wirelength,
            "pruned": self.pruned,
            "searched": self.searched,
            "witness_map": list(self.witness_map),
        }


def brute_force_min_wirelength(
    guest: Graph, host: Graph, budget: int = DEFAULT_PERMUTATION_BUDGET
) -> OracleResult:
    """Exact min over bijections of the sum of host distances across guest edges.

    Depth-first over guest vertices 0, 1, ... with host labels tried in
    increasing order, so the first optimum found is the lexicographically
    least witness.  A branch is cut when its partial cost plus a lower bound
    on the remaining edges reaches the incumbent: an edge with one endpoint
    placed costs at least the distance to the nearest free host vertex, an
    edge with neither placed costs at least 1.
    """
    n = guest.n
    if host.n != n:
        raise ValueError(f"guest has {n} vertices, host has {host.n}")
    if factorial(n) > budget:
        raise BudgetExceeded(f"{n}! bijections exceeds budget {budget}")
    dist = host_distances(host)
    if n > 1 and any(d < 0 for row in dist for d in row):
        raise ValueError("host must be connected")

    # neighbours of each guest vertex that are placed before it
    back = [[u for u in guest.adjacency[v] if u < v] for v in range(n)]

    best = [sum(1 for _ in guest.edges) * max((max(r) for r in dist), default=0) + 1]
    best_map: list[tuple[int, ...]] = [()]
    stats = {"searched": 0, "pruned": 0}
    place = [-1] * n
    used = [False] * n

    def bound(depth: int, cost: int) -> int:
        free = [h for h in range(n) if not used[h]]
        extra = 0
        for v in range(depth, n):
            for u in back[v]:
                if u < depth:
                    hu = place[u]
                    extra += min(dist[hu][h] for h in free)
                else:
                    extra += 1
        return cost + extra

    def dfs(depth: int, cost: int) -> None:
        if depth == n:
            stats["searched"] += 1
            if cost < best[0]:
                best[0] = cost
                best_map[0] = tuple(place)
            return
        for h in range(n):
            if used[h]:
                continue
            add = sum(dist[place[u]][h] for u in back[depth])
            place[depth], used[h] = h, True
            if bound(depth + 1, cost + add) >= best[0]:
                stats["pruned"] += 1
            else:
                dfs(depth + 1, cost + add)
            place[depth], used[h] = -1, False

    dfs(0, 0)
    return OracleResult(best[0], best_map[0], stats["searched"], stats["pruned"])


def certify_optimal(e: Embedding, budget: int = DEFAULT_PERMUTATION_BUDGET) -> bool:
    """True iff the embedding attains the brute-force minimum wirelength."""
    res = brute_force_min_wirelength(e.guest, e.host, budget)
    return wirelength_by_distance(e) == res.minimum_wirelength
