import itertools
import random

import pytest

from conftest import bitstrings, permutations
from flipgray.errors import BadIndices, BoundExceeded, ResourceLimit
from flipgray.flipgraph import FlipGraph, build_flip_graph
from flipgray.objects import BitString, Instance, Permutation
from flipgray.solver import (Certificate, check_debruijn_sequence,
                             check_shorthand_sequence, count_hamilton_paths,
                             has_hamilton_cycle, has_hamilton_path,
                             solve_debruijn_subset, solve_shorthand_ucycle,
                             verify_certificate)
from flipgray.verify import brute_force_hamilton


def bits(*strings):
    return tuple(BitString.from_str(s) for s in strings)


def perms(*strings):
    return tuple(Permutation.from_str(s) for s in strings)


STAR = Instance("bitstring", "bitflip", bits("000", "001", "010", "100"))
ABSTRACT_YES = Instance("permutation", "swap", perms("1234", "1324", "1243"))


def solve_checked(inst, cyclic=False, **kw):
    g = build_flip_graph(inst)
    res = (has_hamilton_cycle if cyclic else has_hamilton_path)(g, **kw)
    if res.yes:
        assert verify_certificate(inst, res.certificate, cyclic=cyclic)
    else:
        assert res.certificate is None
    return res


def test_star_is_no():
    res = solve_checked(STAR)
    assert res.answer == "no"
    assert res.stats.get("prune_endpoints") == 1


def test_abstract_yes():
    res = solve_checked(ABSTRACT_YES)
    assert res.yes
    assert res.certificate.order in ((3, 1, 2), (2, 1, 3))


def test_single_and_empty():
    one = Instance("bitstring", "bitflip", bits("0"))
    assert solve_checked(one).certificate == Certificate((1,))
    assert solve_checked(Instance("bitstring", "bitflip", ())).yes


def test_cycles():
    assert solve_checked(Instance("bitstring", "bitflip", tuple(bitstrings(3))), cyclic=True).yes
    path3 = FlipGraph.from_edges(3, [(0, 1), (1, 2)])
    assert has_hamilton_cycle(path3).answer == "no"
    tri = FlipGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert has_hamilton_cycle(tri).yes
    assert has_hamilton_cycle(FlipGraph.from_edges(2, [(0, 1)])).answer == "no"


def test_directed_two_cycle():
    g = FlipGraph.from_edges(2, [(0, 1), (1, 0)], directed=True)
    assert has_hamilton_cycle(g).yes


@pytest.mark.parametrize("n", [4, 6, 8])
def test_full_cube_paths_and_cycles(n):
    inst = Instance("bitstring", "bitflip", tuple(bitstrings(n)))
    assert solve_checked(inst).yes
    assert solve_checked(inst, cyclic=True).yes


def test_full_s4_swap():
    assert solve_checked(Instance("permutation", "swap", tuple(permutations(4)))).yes


def test_counts():
    assert count_hamilton_paths(FlipGraph.from_edges(1, [])) == 1
    assert count_hamilton_paths(build_flip_graph(STAR)) == 0
    assert count_hamilton_paths(FlipGraph.from_edges(3, [(0, 1), (1, 2)])) == 1
    q2 = FlipGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert count_hamilton_paths(q2) == 4
    with pytest.raises(BoundExceeded):
        count_hamilton_paths(FlipGraph.from_edges(11, []))


def test_verify_certificate_examples():
    assert verify_certificate(ABSTRACT_YES, Certificate((3, 1, 2)))
    assert not verify_certificate(STAR, Certificate((1, 2, 3, 4)))
    assert verify_certificate(Instance("bitstring", "bitflip", bits("0")), Certificate((1,)))
    assert not verify_certificate(ABSTRACT_YES, Certificate((3, 1)))
    assert not verify_certificate(ABSTRACT_YES, Certificate((3, 1, 1)))
    with pytest.raises(BadIndices):
        verify_certificate(ABSTRACT_YES, Certificate((0, 1, 2)))
    with pytest.raises(BadIndices):
        Certificate.parse("1 x 2")


def test_budget_exhaustion_is_not_no():
    g = build_flip_graph(Instance("permutation", "transposition", tuple(permutations(5))))
    with pytest.raises(ResourceLimit) as exc:
        has_hamilton_cycle(g, budget=5, canonical=True)
    assert exc.value.stats["nodes"] > 5


def test_canonical_certificate_is_lexicographically_least():
    rng = random.Random(11)
    for _ in range(40):
        m = rng.randint(2, 7)
        edges = [e for e in itertools.combinations(range(m), 2) if rng.random() < 0.5]
        g = FlipGraph.from_edges(m, edges)
        res = has_hamilton_path(g, canonical=True)
        paths = [p for p in itertools.permutations(range(m))
                 if all(g.has_edge(p[i], p[i + 1]) for i in range(m - 1))]
        if paths:
            assert res.certificate.vertices() == list(min(paths))
        else:
            assert res.answer == "no"


def test_threads_are_deterministic():
    rng = random.Random(5)
    for _ in range(5):
        objs = rng.sample(bitstrings(4), 9)
        g = build_flip_graph(Instance("bitstring", "bitflip", tuple(objs)))
        a = has_hamilton_path(g)
        b = has_hamilton_path(g, threads=3)
        assert (a.answer, a.certificate, a.stats) == (b.answer, b.certificate, b.stats)


def _random_graph(rng, m, directed):
    pairs = itertools.permutations(range(m), 2) if directed else itertools.combinations(range(m), 2)
    return FlipGraph.from_edges(m, [e for e in pairs if rng.random() < 0.4], directed)


@pytest.mark.parametrize("directed", [False, True])
def test_agrees_with_brute_force_on_random_graphs(directed):
    rng = random.Random(2024)
    for _ in range(300):
        g = _random_graph(rng, rng.randint(0, 7), directed)
        bf_answer, bf_count = brute_force_hamilton(g)
        assert has_hamilton_path(g).answer == bf_answer
        assert count_hamilton_paths(g) == bf_count
        closing = [p for p in itertools.permutations(range(g.m))
                   if g.m >= (2 if directed else 3)
                   and all(g.has_edge(p[i], p[(i + 1) % g.m]) for i in range(g.m))]
        assert has_hamilton_cycle(g).yes == bool(closing)


# --- Eulerian families ------------------------------------------------------

def test_debruijn_full_b3():
    res = solve_debruijn_subset(bitstrings(3), cyclic=True)
    assert res.yes and len(res.sequence) == 8
    assert check_debruijn_sequence(res.sequence, bitstrings(3))
    assert res.text == "00010111"
    assert check_debruijn_sequence((0, 0, 0, 1, 0, 1, 1, 1), bitstrings(3))


def test_debruijn_weight_one_or_two():
    subset = [b for b in bitstrings(3) if b.weight in (1, 2)]
    res = solve_debruijn_subset(subset, cyclic=True)
    assert res.yes and len(res.sequence) == 6
    assert check_debruijn_sequence(res.sequence, subset)
    assert check_debruijn_sequence((0, 0, 1, 0, 1, 1), subset)


def test_debruijn_disconnected():
    assert solve_debruijn_subset(bits("000", "111"), cyclic=True).answer == "no"
    assert solve_debruijn_subset(bits("000", "111"), cyclic=False).answer == "no"


def test_shorthand_examples():
    res = solve_shorthand_ucycle(permutations(3), cyclic=True)
    assert res.yes and len(res.sequence) == 6
    assert check_shorthand_sequence(res.sequence, permutations(3))
    assert check_shorthand_sequence((1, 2, 3, 1, 3, 2), permutations(3))
    assert solve_shorthand_ucycle(perms("123", "321"), cyclic=False).answer == "no"
    one = solve_shorthand_ucycle(perms("123"), cyclic=False)
    assert one.yes and one.text == "12"


def test_linear_packing():
    res = solve_debruijn_subset(bits("001", "011", "111"), cyclic=False)
    assert res.yes and res.text == "00111"
    assert check_debruijn_sequence(res.sequence, bits("001", "011", "111"), cyclic=False)


def _subsets(universe):
    for mask in range(1 << len(universe)):
        yield [universe[i] for i in range(len(universe)) if mask >> i & 1]


@pytest.mark.parametrize("cyclic", [False, True])
def test_debruijn_agrees_with_shift_graph_search(cyclic):
    for sub in _subsets(bitstrings(3)):
        res = solve_debruijn_subset(sub, cyclic=cyclic)
        if res.yes:
            assert check_debruijn_sequence(res.sequence, sub, cyclic=cyclic)
        if cyclic and len(sub) < 2:
            continue  # a lone 000 or 111 closes on itself; no simple cycle
        g = build_flip_graph(Instance("bitstring", "register_shift", tuple(sub)))
        search = has_hamilton_cycle(g) if cyclic else has_hamilton_path(g)
        assert res.answer == search.answer, sub


@pytest.mark.parametrize("cyclic", [False, True])
def test_shorthand_agrees_with_rotation_graph_search(cyclic):
    for sub in _subsets(permutations(3)):
        res = solve_shorthand_ucycle(sub, cyclic=cyclic)
        if res.yes:
            assert check_shorthand_sequence(res.sequence, sub, cyclic=cyclic)
        if cyclic and not sub:
            continue  # the empty sequence is vacuous; a cycle needs vertices
        g = build_flip_graph(Instance("permutation", "shorthand_rotation", tuple(sub)))
        search = has_hamilton_cycle(g) if cyclic else has_hamilton_path(g)
        assert res.answer == search.answer, sub


def test_debruijn_b4_weight_samples():
    rng = random.Random(4)
    universe = bitstrings(4)
    for _ in range(150):
        weights = set(rng.sample(range(5), rng.randint(1, 4)))
        pool = [b for b in universe if b.weight in weights]
        sub = rng.sample(pool, rng.randint(1, len(pool)))
        res = solve_debruijn_subset(sub, cyclic=False)
        g = build_flip_graph(Instance("bitstring", "register_shift", tuple(sub)))
        assert res.answer == has_hamilton_path(g).answer
