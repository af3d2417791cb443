"""Embeddings, routing, congestion, wirelength and cut verification."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .graphs import Edge, Graph, _norm, all_pairs_distances
from .isoperimetric import DEFAULT_SUBSET_BUDGET, induced_edge_count, optimal_induced


class EmbeddingError(ValueError):
    pass


class PartitionError(ValueError):
    pass


@lru_cache(maxsize=64)
def host_distances(host: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in all_pairs_distances(host))


@dataclass(frozen=True, eq=False)
class Embedding:
    """Bijection guest -> host plus one host path per guest edge."""

    guest: Graph
    host: Graph
    vertex_map: tuple[int, ...]
    routes: dict[Edge, tuple[int, ...]] = field(repr=False)

    def validate(self) -> None:
        _check_bijection(self.guest, self.host, self.vertex_map)
        if set(self.routes) != set(self.guest.edges):
            raise EmbeddingError("routes must cover exactly the guest edges")
        for (x, y), path in self.routes.items():
            if path[0] != self.vertex_map[x] or path[-1] != self.vertex_map[y]:
                raise EmbeddingError(f"route for {(x, y)} has wrong endpoints")
            if len(set(path)) != len(path):
                raise EmbeddingError(f"route for {(x, y)} is not simple")
            for a, b in zip(path, path[1:]):
                if not self.host.has_edge(a, b):
                    raise EmbeddingError(f"route for {(x, y)} uses non-edge {(a, b)}")

    def route_edges(self, guest_edge: Edge) -> list[Edge]:
        path = self.routes[guest_edge]
        return [_norm(a, b) for a, b in zip(path, path[1:])]

    def inverse(self) -> list[int]:
        inv = [0] * len(self.vertex_map)
        for x, hx in enumerate(self.vertex_map):
            inv[hx] = x
        return inv

    def to_json(self) -> str:
        return json.dumps(
            {"map": list(self.vertex_map),
             "routes": [list(self.routes[e]) for e in self.guest.edges]},
            sort_keys=True,
        )


def _check_bijection(guest: Graph, host: Graph, vertex_map: Sequence[int]) -> None:
    if guest.n != host.n:
        raise EmbeddingError(f"guest has {guest.n} vertices, host has {host.n}")
    if len(vertex_map) != guest.n or sorted(vertex_map) != list(range(host.n)):
        raise EmbeddingError("vertex map is not a bijection")


def shortest_route(host: Graph, src: int, dst: int) -> tuple[int, ...]:
    """Shortest host path, taking the smallest-labelled next vertex at each step."""
    dist = host_distances(host)
    d = dist[src][dst]
    if d < 0:
        raise EmbeddingError(f"host has no path from {src} to {dst}")
    path = [src]
    u = src
    while u != dst:
        u = next(w for w in host.adjacency[u] if dist[w][dst] == dist[u][dst] - 1)
        path.append(u)
    return tuple(path)


def route_all(guest: Graph, host: Graph, vertex_map: Sequence[int]) -> Embedding:
    vertex_map = tuple(int(v) for v in vertex_map)
    _check_bijection(guest, host, vertex_map)
    routes = {
        (x, y): shortest_route(host, vertex_map[x], vertex_map[y]) for x, y in guest.edges
    }
    return Embedding(guest, host, vertex_map, routes)


def congestion(e: Embedding) -> Counter:
    """Congestion of every host edge (zero entries included)."""
    load = Counter({edge: 0 for edge in e.host.edges})
    for ge in e.guest.edges:
        load.update(e.route_edges(ge))
    return load


def edge_congestion(e: Embedding, host_edge: Edge) -> int:
    he = _norm(*host_edge)
    if he not in e.host.edge_set:
        raise EmbeddingError(f"{host_edge} is not a host edge")
    return sum(1 for ge in e.guest.edges if he in e.route_edges(ge))


def wirelength_by_distance(e: Embedding) -> int:
    dist = host_distances(e.host)
    return sum(dist[e.vertex_map[x]][e.vertex_map[y]] for x, y in e.guest.edges)


def wirelength_by_routes(e: Embedding) -> int:
    return sum(len(p) - 1 for p in e.routes.values())


# ----------------------------------------------------------------------------
# cuts


@dataclass(frozen=True)
class EdgeCut:
    edges: frozenset[Edge]
    side_one: frozenset[int]
    label: str = ""

    def check(self, host: Graph) -> None:
        if not self.edges <= host.edge_set:
            raise PartitionError(f"cut {self.label} contains non-host edges")
        comps = host.components(self.edges)
        if len(comps) != 2:
            raise PartitionError(f"cut {self.label} leaves {len(comps)} components")
        if self.side_one not in comps:
            raise PartitionError(f"side of cut {self.label} is not a component")


def make_cut(host: Graph, edges: Iterable[Edge], label: str = "", side_of: int | None = None) -> EdgeCut:
    """Build and structurally check a cut.

    ``side_one`` is the component containing ``side_of`` if given, else the
    smaller component (ties: the one holding the larger least vertex, so the
    side away from vertex 0).
    """
    es = frozenset(_norm(u, v) for u, v in edges)
    comps = host.components(es)
    if len(comps) != 2:
        raise PartitionError(f"cut {label} leaves {len(comps)} components")
    if side_of is not None:
        side = next(c for c in comps if side_of in c)
    else:
        side = min(comps, key=lambda c: (len(c), -min(c)))
    cut = EdgeCut(es, frozenset(side), label)
    cut.check(host)
    return cut


@dataclass(frozen=True)
class CutPartition:
    cuts: tuple[EdgeCut, ...]
    multiplicity: int = 1

    def validate(self, host: Graph) -> None:
        if self.multiplicity not in (1, 2):
            raise PartitionError("multiplicity must be 1 or 2")
        count = Counter()
        for c in self.cuts:
            c.check(host)
            count.update(c.edges)
        bad = [e for e in host.edges if count[e] != self.multiplicity]
        extra = set(count) - host.edge_set
        if bad or extra:
            raise PartitionError(
                f"edges not covered exactly {self.multiplicity} time(s): {sorted(bad)[:5]}"
            )

    def __len__(self) -> int:
        return len(self.cuts)


def cut_congestion(e: Embedding, cut: EdgeCut, load: Counter | None = None) -> int:
    load = congestion(e) if load is None else load
    return sum(load[x] for x in cut.edges)


def wirelength_by_cuts(e: Embedding, p: CutPartition) -> int:
    p.validate(e.host)
    load = congestion(e)
    total = sum(cut_congestion(e, c, load) for c in p.cuts)
    assert total % p.multiplicity == 0
    return total // p.multiplicity


# ----------------------------------------------------------------------------
# Modified Congestion Lemma checker


@dataclass(frozen=True)
class MclVerdict:
    cut: str
    internal_routes_avoid_cut: bool
    crossing_routes_cross_once: bool
    sides_optimal: bool | None
    congestion: int
    boundary_formula: int
    certificates: tuple[str, str]
    witness: str = ""

    @property
    def congestion_matches(self) -> bool:
        return self.congestion == self.boundary_formula

    @property
    def holds(self) -> bool:
        return (
            self.internal_routes_avoid_cut
            and self.crossing_routes_cross_once
            and self.sides_optimal is True
            and self.congestion_matches
        )

    def to_dict(self) -> dict:
        return {
            "certificates": list(self.certificates),
            "condition_i": self.internal_routes_avoid_cut,
            "condition_ii": self.crossing_routes_cross_once,
            "condition_iii": self.sides_optimal,
            "congestion": self.congestion,
            "congestion_matches": self.congestion_matches,
            "cut": self.cut,
            "formula": self.boundary_formula,
            "holds": self.holds,
            "witness": self.witness,
        }


def verify_mcl(
    e: Embedding, cut: EdgeCut, budget: int = DEFAULT_SUBSET_BUDGET, load: Counter | None = None
) -> MclVerdict:
    """Check the three hypotheses of the congestion lemma for one cut.

    (i) routes of guest edges inside either preimage side avoid the cut,
    (ii) routes of crossing guest edges use exactly one cut edge,
    (iii) both preimage sides are optimal sets of their size;
    plus the identity EC(cut) = sum of degrees on side one - 2|E(side one)|.
    """
    cut.check(e.host)
    guest = e.guest
    side1 = frozenset(x for x in range(guest.n) if e.vertex_map[x] in cut.side_one)
    side2 = frozenset(range(guest.n)) - side1
    witness = []
    cond_i = cond_ii = True
    for x, y in guest.edges:
        used = sum(1 for he in e.route_edges((x, y)) if he in cut.edges)
        crossing = (x in side1) != (y in side1)
        if not crossing and used:
            if cond_i:
                witness.append(f"internal edge {(x, y)} uses {used} cut edge(s)")
            cond_i = False
        if crossing and used != 1:
            if cond_ii:
                witness.append(f"crossing edge {(x, y)} uses {used} cut edge(s)")
            cond_ii = False

    cond_iii: bool | None = True
    certs = []
    for side in (side1, side2):
        best, how = optimal_induced(guest, len(side), budget)
        certs.append(how)
        if best is None:
            if cond_iii:
                cond_iii = None
            continue
        have = induced_edge_count(guest, side)
        if have != best:
            witness.append(f"side {sorted(side)} induces {have} < {best} edges")
            cond_iii = False

    ec = cut_congestion(e, cut, load)
    formula = sum(guest.degree(u) for u in side1) - 2 * induced_edge_count(guest, side1)
    return MclVerdict(
        cut.label, cond_i, cond_ii, cond_iii, ec, formula, (certs[0], certs[1]), "; ".join(witness)
    )


def verify_partition(
    e: Embedding, p: CutPartition, budget: int = DEFAULT_SUBSET_BUDGET
) -> list[MclVerdict]:
    p.validate(e.host)
    load = congestion(e)
    return [verify_mcl(e, c, budget, load) for c in p.cuts]
