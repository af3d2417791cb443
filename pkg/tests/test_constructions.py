from collections import Counter

import pytest

import brute
from cyclic_embed.constructions import (
    algorithm_a,
    algorithm_b,
    star_cut_partition,
    theorem_a_terms,
    theorem_a_wirelength,
    theorem_b_formula,
    theorem_b_wirelength,
)
from cyclic_embed.engine import wirelength_by_cuts, wirelength_by_distance
from cyclic_embed.graphs import (
    build_circulant,
    build_cycle,
    build_folded_hypercube,
    gray_int,
)
from cyclic_embed.isoperimetric import exact_profile


def families(part):
    return Counter(c.label.rstrip("0123456789,")[:1] for c in part.cuts)


def test_algorithm_a_s3_is_gray_cycle_on_c8():
    inst = algorithm_a(3)
    assert inst.host.edges == build_cycle(8).edges
    for rank in range(8):
        assert inst.embedding.vertex_map[gray_int(rank)] == rank
    assert [c.label for c in inst.cuts.cuts] == ["A1", "A2", "B1", "B2"]


@pytest.mark.parametrize("s, n, m, ncuts", [(4, 16, 20, 8), (5, 32, 44, 16), (6, 64, 92, 32)])
def test_algorithm_a_structure(s, n, m, ncuts):
    inst = algorithm_a(s)
    assert (inst.host.n, inst.host.num_edges) == (n, m)
    assert inst.guest.n == inst.host.n == 1 << s
    assert len(inst.cuts) == ncuts
    r = (1 << (s - 3)) - 1
    assert families(inst.cuts) == {"A": 2, "B": 2, "S": 4 * r}
    # multiplicity-1 partition of the host edges
    seen = Counter(e for c in inst.cuts.cuts for e in c.edges)
    assert set(seen) == set(inst.host.edges) and set(seen.values()) == {1}
    assert sorted(inst.embedding.vertex_map) == list(range(n))
    # host labels trace a Hamiltonian cycle, so Gray neighbours land adjacent
    assert all(inst.host.has_edge(i, (i + 1) % n) for i in range(n))


def test_algorithm_a_rung_cut_takes_all_rungs():
    inst = algorithm_a(5)
    a1 = next(c for c in inst.cuts.cuts if c.label == "A1")
    assert len(a1.edges) == 2 * 4  # two ladders, R + 1 = 4 rungs each
    assert len(a1.side_one) == 16


def test_algorithm_a_rejects_small_s():
    with pytest.raises(ValueError):
        algorithm_a(2)


@pytest.mark.parametrize("s", [3, 4, 5])
def test_algorithm_a_wirelength_two_ways(s):
    inst = algorithm_a(s)
    assert wirelength_by_distance(inst.embedding) == wirelength_by_cuts(inst.embedding, inst.cuts)


def test_theorem_a_s3_and_s4():
    assert theorem_a_wirelength(3) == 32
    fq4 = build_folded_hypercube(4)
    theta2 = brute.min_boundary(16, fq4.edges, 2)
    assert theta2 == 2 * 5 - 2
    assert theorem_a_wirelength(4) == 64 + 4 * theta2 == 96


def test_theorem_a_s5_terms():
    fq5 = build_folded_hypercube(5)
    want = [brute.min_boundary(32, fq5.edges, 2), brute.min_boundary(32, fq5.edges, 4),
            exact_profile(fq5, 6).boundary]
    assert want == [10, 16, 22]
    terms = theorem_a_terms(5)
    assert [t for _, t, _ in terms] == want
    assert all(c == "exhaustive" for _, _, c in terms)
    assert theorem_a_wirelength(5) == 128 + 4 * sum(want) == 320


def test_theorem_a_s6_uses_formula_beyond_budget():
    certs = [c for _, _, c in theorem_a_terms(6)]
    assert certs[:2] == ["exhaustive", "exhaustive"]
    assert set(certs[2:]) == {"formula"}


def test_algorithm_b_even_example():
    inst = algorithm_b(20, 2, 4, 4)
    assert inst.parity == "even" and inst.cuts.multiplicity == 1
    assert inst.guest.n == inst.host.n == 20
    assert families(inst.cuts) == {"C": 2, "T": 4, "O": 8}
    assert not inst.failures
    assert wirelength_by_distance(inst.embedding) == wirelength_by_cuts(inst.embedding, inst.cuts)


def test_algorithm_b_rejections():
    with pytest.raises(ValueError):
        algorithm_b(16, 1, 3, 4)  # k odd with m even
    with pytest.raises(ValueError):
        algorithm_b(21, 2, 4, 4)  # n != m(k+1)
    with pytest.raises(ValueError):
        algorithm_b(20, 10, 4, 4)  # j not below floor(n/2)


def test_algorithm_b_odd_multiplicity_two():
    inst = algorithm_b(12, 2, 3, 3)
    assert inst.parity == "odd" and inst.cuts.multiplicity == 2
    seen = Counter(e for c in inst.cuts.cuts for e in c.edges)
    assert len(seen) == 15 and set(seen.values()) == {2}
    assert not inst.failures
    assert wirelength_by_distance(inst.embedding) == wirelength_by_cuts(inst.embedding, inst.cuts)


@pytest.mark.parametrize("k, m", [(4, 3), (3, 4), (5, 5), (6, 4)])
def test_star_partitions_valid(k, m):
    part = star_cut_partition(k, m)
    assert part.multiplicity == (1 if k % 2 == 0 and m % 2 == 0 else 2)
    seen = Counter(e for c in part.cuts for e in c.edges)
    assert set(seen.values()) == {part.multiplicity}


def test_theorem_b_even_examples():
    g = build_circulant(20, [1, 2])
    theta = {a: brute.min_boundary(20, g.edges, a) for a in (2, 4, 10)}
    assert theta == {2: 6, 4: 6, 10: 6}
    assert theorem_b_wirelength(20, 2, 4, 4) == 2 * (theta[10] + theta[4] + 2 * theta[2]) == 48
    g10 = build_circulant(10, [1, 2])
    t10 = {a: brute.min_boundary(10, g10.edges, a) for a in (2, 4, 5)}
    assert theorem_b_wirelength(10, 2, 4, 2) == 2 * (t10[5] + t10[4] + t10[2]) == 36


def test_theorem_b_whole_graph_term_is_zero():
    # with m = 2 the first argument m(k+1)/2 is n/2, never n; check theta(n) = 0 directly
    g = build_circulant(12, [1, 2])
    assert brute.min_boundary(12, g.edges, 12) == 0


def test_theorem_b_odd_flags():
    f = theorem_b_formula(12, 2, 3, 3)
    assert any("k/2" in s for s in f.suspect)
    f = theorem_b_formula(15, 2, 4, 3)
    assert any("m(k+1)/2" in s for s in f.suspect)
    f = theorem_b_formula(20, 2, 4, 4)
    assert f.suspect == ()
