from itertools import permutations

import pytest

import brute
from cyclic_embed.constructions import algorithm_a
from cyclic_embed.engine import route_all, wirelength_by_distance
from cyclic_embed.graphs import (
    build_complete,
    build_cycle,
    build_cycle_of_ladders,
    build_folded_hypercube,
    build_path,
)
from cyclic_embed.isoperimetric import BudgetExceeded
from cyclic_embed.oracle import brute_force_min_wirelength, certify_optimal


def rewire(res, guest, host):
    return wirelength_by_distance(route_all(guest, host, res.witness_map))


@pytest.mark.parametrize(
    "guest, host, want",
    [
        (build_cycle(4), build_path(3), 6),
        (build_cycle(8), build_cycle(8), 8),
        (build_complete(4), build_cycle(4), 8),
        (build_cycle(6), build_path(5), 10),
    ],
    ids=["C4-P4", "C8-C8", "K4-C4", "C6-P6"],
)
def test_small_minima_match_permutation_scan(guest, host, want):
    res = brute_force_min_wirelength(guest, host)
    assert res.minimum_wirelength == brute.min_wirelength(guest, host) == want
    assert rewire(res, guest, host) == want


def test_fq3_into_c8():
    guest, host = build_folded_hypercube(3), build_cycle_of_ladders(4, 0)
    res = brute_force_min_wirelength(guest, host)
    assert res.minimum_wirelength == brute.min_wirelength(guest, host) == 32
    assert res.witness_map == (0, 1, 2, 3, 5, 4, 7, 6)
    assert rewire(res, guest, host) == 32
    assert res.searched >= 1 and res.pruned > 0


def test_witness_is_lexicographically_least():
    guest, host = build_cycle(5), build_path(4)
    res = brute_force_min_wirelength(guest, host)
    d = brute.distances(host)
    want = next(
        p for p in permutations(range(5))
        if sum(d[p[u]][p[v]] for u, v in guest.edges) == res.minimum_wirelength
    )
    assert res.witness_map == want


def test_budget_refusal_and_size_mismatch():
    with pytest.raises(BudgetExceeded):
        brute_force_min_wirelength(build_folded_hypercube(4), build_cycle_of_ladders(4, 1))
    with pytest.raises(BudgetExceeded):
        brute_force_min_wirelength(build_cycle(6), build_cycle(6), budget=100)
    with pytest.raises(ValueError):
        brute_force_min_wirelength(build_cycle(4), build_cycle(5))


def test_relabelling_guest_keeps_minimum():
    guest, host = build_cycle(7), build_path(6)
    base = brute_force_min_wirelength(guest, host).minimum_wirelength
    rotated = [(i + 3) % 7 for i in range(7)]
    # relabelling the guest cannot change the optimum
    relabelled = type(guest).from_edges(7, [tuple(sorted((rotated[u], rotated[v]))) for u, v in guest.edges])
    assert brute_force_min_wirelength(relabelled, host).minimum_wirelength == base == 12


def test_certify_optimal():
    inst = algorithm_a(3)
    assert certify_optimal(inst.embedding)
    vm = list(inst.embedding.vertex_map)
    vm[0], vm[1] = vm[1], vm[0]
    worse = route_all(inst.guest, inst.host, vm)
    assert wirelength_by_distance(worse) > 32
    assert not certify_optimal(worse)


def test_result_dict_sorted():
    res = brute_force_min_wirelength(build_cycle(4), build_path(3))
    assert list(res.to_dict()) == sorted(res.to_dict())
