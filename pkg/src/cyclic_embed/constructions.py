"""The two layout constructions, their cut partitions and closed-form wirelengths.

Algorithm A lays the folded hypercube FQ^s along the Hamiltonian traversal of
COL(4, 2^(s-3) - 1) in Gray-code order.  Algorithm B lays the circulant
G(n; +-{1..j}) on the star of cycle C_k*(m) with n = m(k+1) by the identity
map on canonical labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import (
    CutPartition,
    EdgeCut,
    Embedding,
    MclVerdict,
    make_cut,
    route_all,
    verify_partition,
)
from .graphs import (
    Graph,
    build_circulant,
    build_cycle_of_ladders,
    build_folded_hypercube,
    build_star_of_cycle,
    col_band_edge,
    col_bone_link,
    col_rung,
    gray_int,
    star_attachment_edge,
    star_central_edge,
    star_outer_edge,
)
from .isoperimetric import DEFAULT_SUBSET_BUDGET, circulant_xi, lex_segment_profile


@dataclass(frozen=True, eq=False)
class AlgorithmAInstance:
    s: int
    guest: Graph
    host: Graph
    embedding: Embedding
    cuts: CutPartition


@dataclass(frozen=True, eq=False)
class AlgorithmBInstance:
    n: int
    j: int
    k: int
    m: int
    parity: str
    guest: Graph
    host: Graph
    embedding: Embedding
    cuts: CutPartition
    verdicts: tuple[MclVerdict, ...] = ()

    @property
    def failures(self) -> list[MclVerdict]:
        return [v for v in self.verdicts if not v.holds]


# ----------------------------------------------------------------------------
# Algorithm A


def algorithm_a(s: int) -> AlgorithmAInstance:
    """Gray-order layout of FQ^s on COL(4, 2^(s-3) - 1) with its cut partition.

    Cut families: ``A1, A2`` take all rungs of ladders {0, 2} and {1, 3};
    ``B1, B2`` take the bone links out of ladders {0, 2} and {1, 3};
    ``S{i},{j}`` takes both band edges of ladder i-1 between rungs R-j and
    R-j+1, where R = 2^(s-3) - 1.
    """
    if s < 3:
        raise ValueError("Algorithm A needs s >= 3")
    r = (1 << (s - 3)) - 1
    guest = build_folded_hypercube(s)
    host = build_cycle_of_ladders(4, r)
    vmap = [0] * guest.n
    for rank in range(guest.n):
        vmap[gray_int(rank)] = rank
    emb = route_all(guest, host, vmap)

    cuts: list[EdgeCut] = []
    for i in (1, 2):
        rungs = [col_rung(4, r, t, q) for t in (i - 1, i + 1) for q in range(r + 1)]
        cuts.append(make_cut(host, rungs, f"A{i}"))
    for i in (1, 2):
        links = [col_bone_link(4, r, i - 1), col_bone_link(4, r, i + 1)]
        cuts.append(make_cut(host, links, f"B{i}"))
    for i in range(1, 5):
        for j in range(1, r + 1):
            q = r - j
            band = [col_band_edge(4, r, i - 1, b, q) for b in (0, 1)]
            cuts.append(make_cut(host, band, f"S{i},{j}"))
    part = CutPartition(tuple(cuts), 1)
    part.validate(host)
    return AlgorithmAInstance(s, guest, host, emb, part)


def theorem_a_terms(s: int, budget: int = DEFAULT_SUBSET_BUDGET) -> list[tuple[int, int, str]]:
    """``(2j, theta(2j), certificate)`` for j = 1 .. 2^(s-3) - 1, from FQ^s lex segments."""
    if s < 3:
        raise ValueError("closed form needs s >= 3")
    g = build_folded_hypercube(s)
    out = []
    for j in range(1, 1 << (s - 3)):
        prof = lex_segment_profile(g, 2 * j, budget)
        out.append((2 * j, prof.boundary, prof.certificate))
    return out


def theorem_a_wirelength(s: int, budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """2^(s+2) + 4 * sum_{j=1}^{2^(s-3)-1} theta_FQ^s(2j)."""
    return (1 << (s + 2)) + 4 * sum(t for _, t, _ in theorem_a_terms(s, budget))


# ----------------------------------------------------------------------------
# Algorithm B


def _check_b(n: int, j: int, k: int, m: int) -> None:
    if n != m * (k + 1):
        raise ValueError(f"n={n} must equal m(k+1)={m * (k + 1)}")
    if not 1 <= j < n // 2:
        raise ValueError(f"j={j} must satisfy 1 <= j < floor(n/2)={n // 2}")


def _pair_cycle_cuts(
    host: Graph, edge_of, length: int, label: str, multiplicity: int
) -> list[EdgeCut]:
    """Cuts pairing far-apart edges of one cycle whose edge p is ``edge_of(p)``.

    Even cycles pair each edge with its antipode (listed ``multiplicity``
    times); odd cycles pair edge p with edge p + (length-1)/2, which covers
    every edge twice.
    """
    cuts = []
    if length % 2 == 0:
        half = length // 2
        for p in range(half):
            cut = make_cut(host, [edge_of(p), edge_of(p + half)], f"{label}{p + 1}")
            cuts.extend([cut] * multiplicity)
    else:
        if multiplicity != 2:
            raise ValueError("odd cycles can only be covered with multiplicity 2")
        off = (length - 1) // 2
        for p in range(length):
            cuts.append(make_cut(host, [edge_of(p), edge_of((p + off) % length)], f"{label}{p + 1}"))
    return cuts


def star_cut_partition(k: int, m: int) -> CutPartition:
    """Cut partition of C_k*(m): central pairs, attachment bridges, outer pairs.

    Multiplicity 1 when m and k are even, otherwise 2.
    """
    host = build_star_of_cycle(k, m)
    mult = 1 if m % 2 == 0 and k % 2 == 0 else 2
    cuts = _pair_cycle_cuts(host, lambda p: star_central_edge(k, m, p % m), m, "C", mult)
    for i in range(m):
        bridge = make_cut(host, [star_attachment_edge(k, i)], f"T{i + 1}")
        cuts.extend([bridge] * mult)
    for i in range(m):
        cuts += _pair_cycle_cuts(
            host, lambda p, i=i: star_outer_edge(k, i, p % k), k, f"O{i + 1},", mult
        )
    part = CutPartition(tuple(cuts), mult)
    part.validate(host)
    return part


def algorithm_b(
    n: int, j: int, k: int, m: int, verify: bool = True, budget: int = DEFAULT_SUBSET_BUDGET
) -> AlgorithmBInstance:
    """Identity layout of G(n; +-{1..j}) on C_k*(m), plus its cut partition.

    With ``verify`` every cut is run through the congestion-lemma checker and
    the verdicts are kept on the instance; failing cuts show up in
    ``instance.failures``.
    """
    _check_b(n, j, k, m)
    if m < 3 or k < 3:
        raise ValueError("star of cycle needs k >= 3 and m >= 3")
    if m % 2 == 0 and k % 2 == 1:
        raise ValueError("even case needs k even as well as m even")
    guest = build_circulant(n, range(1, j + 1))
    host = build_star_of_cycle(k, m)
    emb = route_all(guest, host, range(n))
    part = star_cut_partition(k, m)
    verdicts = tuple(verify_partition(emb, part, budget)) if verify else ()
    parity = "even" if m % 2 == 0 else "odd"
    return AlgorithmBInstance(n, j, k, m, parity, guest, host, emb, part, verdicts)


@dataclass(frozen=True)
class FormulaValue:
    value: int
    exact: Fraction
    suspect: tuple[str, ...] = ()


def theorem_b_formula(n: int, j: int, k: int, m: int) -> FormulaValue:
    """Evaluate the star-of-cycle closed form, flagging non-integral pieces.

    even m: (k/2) * (theta(m(k+1)/2) + theta(k) + (m/2) * theta(k/2))
    odd m:  (1/2) * ((m-1) theta(m(k+1)/2) + (m-1) theta(k) + (k/2) theta(k/2))

    Non-integral theta arguments and summation limits are floored and listed
    in ``suspect``; so is a half-integral total.
    """
    _check_b(n, j, k, m)

    def theta(a: int) -> int:
        return 0 if a == 0 else 2 * j * a - 2 * circulant_xi(n, j, a)

    suspect = []
    if (m * (k + 1)) % 2:
        suspect.append(f"m(k+1)/2 = {m * (k + 1)}/2 floored")
    if k % 2:
        suspect.append(f"k/2 = {k}/2 floored")
    half_n, half_k = (m * (k + 1)) // 2, k // 2
    if m % 2 == 0:
        exact = Fraction(k, 2) * (theta(half_n) + theta(k) + (m // 2) * theta(half_k))
    else:
        exact = Fraction(1, 2) * (
            (m - 1) * theta(half_n) + (m - 1) * theta(k) + half_k * theta(half_k)
        )
    if exact.denominator != 1:
        suspect.append(f"total {exact} is not an integer; floored")
    return FormulaValue(int(exact), exact, tuple(suspect))


def theorem_b_wirelength(n: int, j: int, k: int, m: int) -> int:
    return theorem_b_formula(n, j, k, m).value
