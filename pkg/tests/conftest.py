import itertools

import pytest

from flipgray.objects import (BitString, Combination, DiamondGraph, EdgeSubset,
                              Permutation, SetPartition)


def bitstrings(n):
    return [BitString(b) for b in itertools.product((0, 1), repeat=n)]


def permutations(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def combinations(n, k):
    return [b for b in (Combination(b.bits) for b in bitstrings(n)) if b.weight == k]


def set_partitions(n):
    """Restricted-growth enumeration, independent of the package's parser."""
    out = []

    def grow(seq, top):
        if len(seq) == n:
            blocks = {}
            for v, lbl in enumerate(seq, start=1):
                blocks.setdefault(lbl, []).append(v)
            out.append(SetPartition(tuple(tuple(b) for b in blocks.values()), n))
            return
        for lbl in range(top + 2):
            grow(seq + [lbl], max(top, lbl))

    if n == 0:
        return [SetPartition((), 0)]
    grow([0], 0)
    return out


def _is_tree(n, edges):
    parent = {}

    def find(v):
        parent.setdefault(v, v)
        while parent[v] != v:
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return len(edges) == 4 * n - 1


def spanning_trees(n):
    host = DiamondGraph(n).edges
    return [EdgeSubset(n, frozenset(sub), "tree")
            for sub in itertools.combinations(host, 4 * n - 1) if _is_tree(n, sub)]


def perfect_matchings(n):
    host = DiamondGraph(n).edges
    out = []
    for sub in itertools.combinations(host, 2 * n):
        ends = [v for e in sub for v in e]
        if len(set(ends)) == 4 * n:
            out.append(EdgeSubset(n, frozenset(sub), "matching"))
    return out


@pytest.fixture(scope="session")
def small_objects():
    """Every object kind, exhaustively at small sizes, keyed by (kind, size)."""
    return {
        "bitstring": [bitstrings(n) for n in range(0, 6)],
        "permutation": [permutations(n) for n in range(1, 6)],
        "setpartition": [set_partitions(n) for n in range(1, 6)],
    }


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, label, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {label}  {detail}")
