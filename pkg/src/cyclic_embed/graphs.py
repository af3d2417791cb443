"""Graph families with canonical integer labelings.

Every constructor returns an immutable :class:`Graph` whose vertices are the
integers ``0..n-1``.  Coordinate views (bit strings, ladder coordinates,
star-of-cycle coordinates) are decoders over those labels, not stored state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``family`` and ``params`` record how the graph was built; they let the
    isoperimetric module pick a closed-form certificate when exhaustion is
    out of budget.
    """

    n: int
    edges: tuple[Edge, ...]
    family: str = "generic"
    params: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = _norm(u, v)
            if e in seen:
                raise ValueError(f"parallel edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Edge],
        family: str = "generic",
        params: Sequence[int] = (),
        dedupe: bool = False,
    ) -> "Graph":
        edges = [_norm(u, v) for u, v in edges]
        if dedupe:
            edges = set(edges)
        return cls(n, tuple(edges), family, tuple(params))

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.n, self.edges, self.family, self.params))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour tuples, indexed by vertex."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edge_set

    def regularity(self) -> int | None:
        """Common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        if self.n == 0:
            return 0
        return None

    def components(self, removed: Iterable[Edge] = ()) -> list[frozenset[int]]:
        """Connected components after deleting ``removed``, ordered by least vertex."""
        gone = {_norm(u, v) for u, v in removed}
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if not seen[w] and _norm(u, w) not in gone:
                        seen[w] = True
                        stack.append(w)
                        comp.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def to_json(self) -> str:
        return json.dumps(
            {"edges": [list(e) for e in self.edges], "family": self.family, "n": self.n},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        obj = json.loads(text)
        return cls.from_edges(obj["n"], (tuple(e) for e in obj["edges"]), obj.get("family", "generic"))

    def to_dot(self, name: str = "G", annotate: bool = True) -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            attrs = vertex_annotation(self, v) if annotate else {}
            if attrs:
                body = ", ".join(f'{k}="{val}"' for k, val in attrs.items())
                lines.append(f"  {v} [{body}];")
            else:
                lines.append(f"  {v};")
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------------
# elementary families


def build_path(length: int) -> Graph:
    """Path with ``length`` edges (``length + 1`` vertices)."""
    if length < 0:
        raise ValueError("path length must be nonnegative")
    return Graph.from_edges(length + 1, ((i, i + 1) for i in range(length)), "path", (length,))


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), "cycle", (n,))


def build_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph.from_edges(
        n, ((u, v) for u in range(n) for v in range(u + 1, n)), "complete", (n,)
    )


def cartesian_product(a: Graph, b: Graph) -> Graph:
    """Cartesian product; vertex ``(x, y)`` gets label ``x * b.n + y``."""
    if a.n == 0 or b.n == 0:
        raise ValueError("factors must be nonempty")
    edges = []
    for x in range(a.n):
        for y1, y2 in b.edges:
            edges.append((x * b.n + y1, x * b.n + y2))
    for x1, x2 in a.edges:
        for y in range(b.n):
            edges.append((x1 * b.n + y, x2 * b.n + y))
    return Graph.from_edges(a.n * b.n, edges, "product")


# ----------------------------------------------------------------------------
# hypercubes


def gray_code(rank: int, width: int) -> str:
    """Reflected binary Gray code of ``rank`` as a ``width``-bit string."""
    if width < 0 or not 0 <= rank < (1 << width):
        raise ValueError(f"rank {rank} out of range for width {width}")
    return format(gray_int(rank), f"0{width}b") if width else ""


def gray_int(rank: int) -> int:
    return rank ^ (rank >> 1)


def build_hypercube(s: int) -> Graph:
    if s < 0:
        raise ValueError("dimension must be nonnegative")
    n = 1 << s
    edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(s) if u < u ^ (1 << b)]
    return Graph.from_edges(n, edges, "hypercube", (s,))


def build_folded_hypercube(s: int) -> Graph:
    """Q^s plus an edge from every vertex to its bitwise complement.

    For ``s == 1`` the complementary edge coincides with the cube edge and is
    dropped, giving K2.
    """
    if s < 1:
        raise ValueError("folded hypercube needs s >= 1")
    n = 1 << s
    mask = n - 1
    cube = build_hypercube(s).edges
    comp = [(u, u ^ mask) for u in range(n) if u < u ^ mask]
    return Graph.from_edges(n, list(cube) + comp, "folded-hypercube", (s,), dedupe=True)


# ----------------------------------------------------------------------------
# circulants


def build_circulant(n: int, jumps: Iterable[int]) -> Graph:
    """Circulant G(n; +-S) on ``0..n-1``."""
    jumps = sorted(set(jumps))
    if n < 3:
        raise ValueError("circulant needs n >= 3")
    if not jumps:
        raise ValueError("jump set must be nonempty")
    for s in jumps:
        if not 1 <= s <= n // 2:
            raise ValueError(f"jump {s} outside 1..{n // 2}")
    edges = {_norm(i, (i + s) % n) for i in range(n) for s in jumps}
    return Graph.from_edges(n, edges, "circulant", (n, *jumps))


def is_consecutive_circulant(g: Graph) -> bool:
    """True for G(n; +-{1..j}) with 1 <= j < floor(n/2)."""
    if g.family != "circulant":
        return False
    n, *jumps = g.params
    j = len(jumps)
    return jumps == list(range(1, j + 1)) and 1 <= j < n // 2


# ----------------------------------------------------------------------------
# ladders and cycle-of-ladders


def build_ladder(r: int) -> Graph:
    """Ladder L(r) = P(r) x K2; vertex ``(band, rung)`` has label ``2 * rung + band``."""
    g = cartesian_product(build_path(r), build_path(1))
    return Graph(g.n, g.edges, "ladder", (r,))


@dataclass(frozen=True)
class ColCoordinates:
    ladder: int
    band: int
    rung: int


def col_label(c: ColCoordinates, l: int, r: int) -> int:
    """Label of a cycle-of-ladders vertex.

    Labels run up band 0 of a ladder, across its top rung, down band 1, then
    on to the next ladder, so consecutive labels are adjacent.
    """
    if not (0 <= c.ladder < l and c.band in (0, 1) and 0 <= c.rung <= r):
        raise ValueError(f"{c} out of range for COL({l},{r})")
    base = c.ladder * 2 * (r + 1)
    return base + (c.rung if c.band == 0 else 2 * r + 1 - c.rung)


def col_coordinates(label: int, l: int, r: int) -> ColCoordinates:
    size = 2 * (r + 1)
    if not 0 <= label < l * size:
        raise ValueError(f"label {label} out of range for COL({l},{r})")
    ladder, off = divmod(label, size)
    if off <= r:
        return ColCoordinates(ladder, 0, off)
    return ColCoordinates(ladder, 1, 2 * r + 1 - off)


def build_cycle_of_ladders(l: int, r: int) -> Graph:
    """COL(l, r): ``l`` ladders of length ``r`` whose bottom rungs sit on a bone cycle.

    The bone cycle is (0,0)_0, (1,0)_0, (0,0)_1, (1,0)_1, ..., so each bottom
    rung is a bone edge and ladder ``t`` meets ladder ``t+1`` through the edge
    (1,0)_t -- (0,0)_{t+1}.
    """
    if l < 2 or r < 0:
        raise ValueError("COL needs l >= 2 and r >= 0")

    def lab(t: int, band: int, rung: int) -> int:
        return col_label(ColCoordinates(t, band, rung), l, r)

    edges = set()
    for t in range(l):
        for q in range(r + 1):
            edges.add(_norm(lab(t, 0, q), lab(t, 1, q)))
            if q < r:
                edges.add(_norm(lab(t, 0, q), lab(t, 0, q + 1)))
                edges.add(_norm(lab(t, 1, q), lab(t, 1, q + 1)))
        edges.add(_norm(lab(t, 1, 0), lab((t + 1) % l, 0, 0)))
    return Graph.from_edges(l * 2 * (r + 1), edges, "cycle-of-ladders", (l, r))


def col_rung(l: int, r: int, t: int, q: int) -> Edge:
    return _norm(col_label(ColCoordinates(t, 0, q), l, r), col_label(ColCoordinates(t, 1, q), l, r))


def col_band_edge(l: int, r: int, t: int, band: int, q: int) -> Edge:
    """Band edge of ladder ``t`` between rungs ``q`` and ``q + 1``."""
    return _norm(
        col_label(ColCoordinates(t, band, q), l, r), col_label(ColCoordinates(t, band, q + 1), l, r)
    )


def col_bone_link(l: int, r: int, t: int) -> Edge:
    """Bone edge joining ladder ``t`` to ladder ``t + 1``."""
    return _norm(
        col_label(ColCoordinates(t, 1, 0), l, r), col_label(ColCoordinates((t + 1) % l, 0, 0), l, r)
    )


# ----------------------------------------------------------------------------
# star of cycle


@dataclass(frozen=True)
class StarOfCycleCoordinates:
    role: str  # "central" | "outer"
    cycle: int  # central vertex index, or index of the outer cycle
    position: int  # 0 for central vertices; position in the outer cycle otherwise


def star_label(c: StarOfCycleCoordinates, k: int, m: int) -> int:
    if not 0 <= c.cycle < m:
        raise ValueError(f"{c} out of range")
    if c.role == "central":
        return c.cycle * (k + 1)
    if c.role == "outer" and 0 <= c.position < k:
        return c.cycle * (k + 1) + 1 + c.position
    raise ValueError(f"{c} out of range")


def star_coordinates(label: int, k: int, m: int) -> StarOfCycleCoordinates:
    if not 0 <= label < m * (k + 1):
        raise ValueError(f"label {label} out of range")
    i, off = divmod(label, k + 1)
    if off == 0:
        return StarOfCycleCoordinates("central", i, 0)
    return StarOfCycleCoordinates("outer", i, off - 1)


def build_star_of_cycle(k: int, m: int) -> Graph:
    """C_k*(m): central m-cycle, m outer k-cycles, one attachment edge each.

    Central vertex ``i`` has label ``i(k+1)``; outer cycle ``i`` occupies
    ``i(k+1)+1 .. i(k+1)+k`` and attaches through its first vertex.
    """
    if k < 3 or m < 3:
        raise ValueError("star of cycle needs k >= 3 and m >= 3")
    edges = []
    for i in range(m):
        c = i * (k + 1)
        edges.append((c, ((i + 1) % m) * (k + 1)))
        edges.append((c, c + 1))
        for p in range(k):
            edges.append((c + 1 + p, c + 1 + (p + 1) % k))
    return Graph.from_edges(m * (k + 1), edges, "star-of-cycle", (k, m))


def star_central_edge(k: int, m: int, i: int) -> Edge:
    return _norm(i * (k + 1), ((i + 1) % m) * (k + 1))


def star_attachment_edge(k: int, i: int) -> Edge:
    return (i * (k + 1), i * (k + 1) + 1)


def star_outer_edge(k: int, i: int, p: int) -> Edge:
    """Edge of outer cycle ``i`` between positions ``p`` and ``p + 1 (mod k)``."""
    base = i * (k + 1) + 1
    return _norm(base + p, base + (p + 1) % k)


# ----------------------------------------------------------------------------


def vertex_annotation(g: Graph, v: int) -> dict[str, str]:
    """Coordinate attributes for DOT export."""
    if g.family in ("hypercube", "folded-hypercube"):
        return {"bits": format(v, f"0{g.params[0]}b")}
    if g.family == "cycle-of-ladders":
        c = col_coordinates(v, *g.params)
        return {"ladder": str(c.ladder), "band": str(c.band), "rung": str(c.rung)}
    if g.family == "star-of-cycle":
        c = star_coordinates(v, *g.params)
        return {"role": c.role, "cycle": str(c.cycle), "position": str(c.position)}
    if g.family == "ladder":
        rung, band = divmod(v, 2)
        return {"band": str(band), "rung": str(rung)}
    return {}


def parse_family(spec: str) -> Graph:
    """Build a graph from a ``name:params`` designator.

    Examples: ``fq3``, ``fq:3``, ``q:4``, ``col:4,0``, ``circ:8,1,2`` (n then
    jumps), ``star:3,4`` (k, m), ``ladder:3``, ``cycle:8``, ``path:3``, ``k:4``.
    """
    text = spec.strip().lower()
    if ":" in text:
        name, _, rest = text.partition(":")
    else:
        i = len(text.rstrip("0123456789"))
        name, rest = text[:i], text[i:]
    try:
        args = [int(x) for x in rest.split(",") if x] if rest else []
    except ValueError:
        raise ValueError(f"bad parameters in {spec!r}") from None
    builders = {
        "q": (build_hypercube, 1),
        "hypercube": (build_hypercube, 1),
        "fq": (build_folded_hypercube, 1),
        "folded-hypercube": (build_folded_hypercube, 1),
        "col": (build_cycle_of_ladders, 2),
        "ladder": (build_ladder, 1),
        "star": (build_star_of_cycle, 2),
        "cycle": (build_cycle, 1),
        "c": (build_cycle, 1),
        "path": (build_path, 1),
        "p": (build_path, 1),
        "k": (build_complete, 1),
        "complete": (build_complete, 1),
    }
    if name in ("circ", "circulant"):
        if len(args) < 2:
            raise ValueError("circulant needs n and at least one jump")
        return build_circulant(args[0], args[1:])
    if name not in builders:
        raise ValueError(f"unknown family {name!r}")
    fn, arity = builders[name]
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} parameter(s), got {len(args)}")
    return fn(*args)


def all_pairs_distances(g: Graph) -> list[list[int]]:
    """BFS distance matrix; unreachable pairs get -1."""
    out = []
    adj = g.adjacency
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        out.append(dist)
    return out


__all__ = [
    "ColCoordinates",
    "Edge",
    "Graph",
    "StarOfCycleCoordinates",
    "all_pairs_distances",
    "build_circulant",
    "build_complete",
    "build_cycle",
    "build_cycle_of_ladders",
    "build_folded_hypercube",
    "build_hypercube",
    "build_ladder",
    "build_path",
    "build_star_of_cycle",
    "cartesian_product",
    "col_coordinates",
    "col_label",
    "gray_code",
    "gray_int",
    "parse_family",
    "star_coordinates",
    "star_label",
]
