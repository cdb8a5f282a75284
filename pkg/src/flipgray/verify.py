"""Brute-force oracles and reduction checks.

Nothing here reuses the solver's search or the adjacency shortcuts in
``flips``.  The oracles enumerate permutations or apply every flip of a
family outright, so they can certify the fast paths.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BoundExceeded, InvariantViolation, KindMismatch
from .flipgraph import FlipGraph, build_flip_graph
from .flips import adjacent, adjacent_bitflip
from .objects import (BitString, DiamondGraph, EdgeSubset, Instance,
                      Permutation, SetPartition, Tuple2)
from .reductions import (REDUCTIONS, normalize_continuous, reduce_instance)
from .solver import count_hamilton_paths

BRUTE_FORCE_BOUND = 10


def brute_force_hamilton(graph: FlipGraph, *, bound=BRUTE_FORCE_BOUND):
    """Enumerate all m! orders.  Returns (answer, count), undirected counts up to reversal."""
    m = graph.m
    if m > bound:
        raise BoundExceeded(f"m={m} exceeds brute-force bound {bound}")
    adj = [set(out) for out in graph.adj]
    count = sum(1 for order in itertools.permutations(range(m))
                if all(order[i + 1] in adj[order[i]] for i in range(m - 1)))
    if not graph.directed and m >= 2:
        count //= 2
    return ("yes" if count else "no"), count


# --- flip application oracles ------------------------------------------------

def _seq(x):
    return x.bits if isinstance(x, BitString) else x.values


def _rebuild(x, seq):
    if isinstance(x, Permutation):
        return Permutation(tuple(seq))
    return type(x)(tuple(seq))


def _interval_images(x, op):
    a = list(_seq(x))
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            for seg in op(a[i:j + 1]):
                yield _rebuild(x, a[:i] + seg + a[j + 1:])


@lru_cache(maxsize=None)
def _diamond_cycles(n):
    """Every simple cycle of D_n, found by testing all edge subsets."""
    host = DiamondGraph(n)
    edges = host.edges
    cycles = []
    for r in range(3, len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            deg = {}
            for u, v in sub:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            # connected?
            nbr = {}
            for u, v in sub:
                nbr.setdefault(u, []).append(v)
                nbr.setdefault(v, []).append(u)
            start = sub[0][0]
            seen, stack = {start}, [start]
            while stack:
                for w in nbr[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == len(deg):
                cycles.append(frozenset(sub))
    return tuple(cycles)


def flip_images(family: str, x):
    """Every object reachable from ``x`` by one flip, excluding ``x`` itself."""
    out = set()
    if family == "bitflip":
        a = list(_seq(x))
        for i in range(len(a)):
            b = a[:]
            b[i] ^= 1
            out.add(_rebuild(x, b))
    elif family == "substring_complement":
        a = list(_seq(x))
        for i in range(len(a)):
            for j in range(i, len(a)):
                out.add(_rebuild(x, a[:i] + [1 - v for v in a[i:j + 1]] + a[j + 1:]))
    elif family == "pm1_tuple":
        for da, db in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            if x.a + da >= 1 and x.b + db >= 1:
                out.add(Tuple2(x.a + da, x.b + db))
    elif family == "swap":
        out.update(_interval_images(x, lambda s: [s[::-1]] if len(s) == 2 else []))
    elif family == "transposition":
        a = list(_seq(x))
        for i, j in itertools.combinations(range(len(a)), 2):
            b = a[:]
            b[i], b[j] = b[j], b[i]
            out.add(_rebuild(x, b))
    elif family == "reversal":
        out.update(_interval_images(x, lambda s: [s[::-1]]))
    elif family == "rotation":
        out.update(_interval_images(x, lambda s: [s[1:] + s[:1], s[-1:] + s[:-1]]))
    elif family == "jump":
        out.update(_interval_images(x, lambda s: (
            ([s[1:] + s[:1]] if s[0] > max(s[1:]) else [])
            + ([s[-1:] + s[:-1]] if s[-1] > max(s[:-1]) else []))))
    elif family == "refinement":
        blocks = list(x.blocks)
        for i, blk in enumerate(blocks):
            rest = blocks[:i] + blocks[i + 1:]
            for r in range(1, len(blk)):
                for part in itertools.combinations(blk, r):
                    other = tuple(v for v in blk if v not in part)
                    out.add(SetPartition(tuple(rest) + (part, other), x.n))
        for i, j in itertools.combinations(range(len(blocks)), 2):
            rest = [b for k, b in enumerate(blocks) if k not in (i, j)]
            out.add(SetPartition(tuple(rest) + (blocks[i] + blocks[j],), x.n))
    elif family == "edge_exchange":
        host = set(DiamondGraph(x.n).edges)
        for e in x.edges:
            for f in host - x.edges:
                try:
                    out.add(EdgeSubset(x.n, (x.edges - {e}) | {f}, "tree"))
                except InvariantViolation:
                    pass
    elif family == "alternating_cycle":
        for cyc in _diamond_cycles(x.n):
            try:
                out.add(EdgeSubset(x.n, x.edges ^ cyc, "matching"))
            except InvariantViolation:
                pass
    elif family == "register_shift":
        a = list(_seq(x))
        for bit in (0, 1):
            out.add(_rebuild(x, a[1:] + [bit]))
    elif family == "shorthand_rotation":
        p = list(x.values)
        if p:
            out.add(Permutation(tuple(p[1:] + p[:1])))
            out.add(Permutation(tuple(p[1:-1] + p[:1] + p[-1:])) if len(p) >= 2 else x)
    else:
        raise KindMismatch(f"unknown flip family {family!r}")
    out.discard(x)
    return out


# --- reduction checks --------------------------------------------------------

@dataclass
class ReductionReport:
    tag: str
    target_flips: tuple = ()
    pairs_checked: int = 0
    adjacency_iff_violations: int = 0
    injective: bool = True
    parsimony_samples: list = field(default_factory=list)
    hypercube_checks: dict = field(default_factory=dict)

    @property
    def passed(self):
        return (self.adjacency_iff_violations == 0 and self.injective
                and all(s == t for s, t in self.parsimony_samples)
                and all(self.hypercube_checks.values()))

    def lines(self):
        out = [f"tag={self.tag}",
               f"target_flips={','.join(self.target_flips)}",
               f"pairs_checked={self.pairs_checked}",
               f"adjacency_iff_violations={self.adjacency_iff_violations}",
               f"injective={int(self.injective)}",
               f"parsimony_samples={len(self.parsimony_samples)}",
               "parsimony_counts=" + ";".join(f"{s}:{t}" for s, t in self.parsimony_samples)]
        out += [f"hypercube_n{n}={int(ok)}" for n, ok in sorted(self.hypercube_checks.items())]
        out.append(f"passed={int(self.passed)}")
        return out


def _source_adjacent(x, y):
    if isinstance(x, Tuple2):
        return abs(x.a - y.a) + abs(x.b - y.b) == 1
    return adjacent_bitflip(x, y)


def _images(tag, source: Instance, mapping, flip):
    if mapping is not None:
        objs = tuple(mapping(b) for b in source.objects)
        kind = REDUCTIONS[tag].target_kind
        return Instance(kind, flip, objs)
    return reduce_instance(source, tag, target_flip=flip)


def check_reduction(tag, source: Instance, *, target_flip=None, mapping=None,
                    parsimony_bound=BRUTE_FORCE_BOUND) -> ReductionReport:
    """Scan every pair for adjacency-iff and injectivity; for small m also compare solution counts.

    ``mapping`` replaces the registered per-object map, which lets tests
    feed in deliberately broken maps.
    """
    red = REDUCTIONS[tag]
    flips = (target_flip,) if target_flip else red.target_flips
    report = ReductionReport(tag, flips)
    if tag == "tuples_normalize" and normalize_continuous(source.objects).no_instance:
        # the target is a fixed no-instance; only the answers can be compared
        target = reduce_instance(source, tag)
        if source.m <= parsimony_bound:
            src = count_hamilton_paths(build_flip_graph(source), bound=parsimony_bound)
            tgt = count_hamilton_paths(build_flip_graph(target), bound=parsimony_bound)
            report.parsimony_samples.append((int(src > 0), int(tgt > 0)))
        return report
    src_objs = source.objects
    for flip in flips:
        target = _images(tag, source, mapping, flip)
        tgt_objs = target.objects
        if len(set(tgt_objs)) != len(tgt_objs):
            report.injective = False
        for i, j in itertools.combinations(range(len(src_objs)), 2):
            report.pairs_checked += 1
            s = _source_adjacent(src_objs[i], src_objs[j])
            t = adjacent(flip, tgt_objs[i], tgt_objs[j])
            if s != t:
                report.adjacency_iff_violations += 1
        if source.m <= parsimony_bound and report.injective:
            src = count_hamilton_paths(build_flip_graph(source), bound=parsimony_bound)
            tgt = count_hamilton_paths(build_flip_graph(target), bound=parsimony_bound)
            report.parsimony_samples.append((src, tgt))
    return report


def full_cube(n):
    return [BitString(b) for b in itertools.product((0, 1), repeat=n)]


def check_hypercube_inducement(tag, n, *, target_flip=None, mapping=None, bound=5) -> bool:
    """The image of all n-bit strings induces exactly the n-cube, via the map itself."""
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds hypercube check bound {bound}")
    red = REDUCTIONS[tag]
    if red.image is None and mapping is None:
        raise KindMismatch(f"{tag} is not a map from bitstrings")
    f = mapping or red.image
    cube = full_cube(n)
    images = [f(b) for b in cube]
    if len(set(images)) != len(images):
        return False
    for flip in ((target_flip,) if target_flip else red.target_flips):
        count = 0
        for i, j in itertools.combinations(range(len(cube)), 2):
            if adjacent(flip, images[i], images[j]):
                if not adjacent_bitflip(cube[i], cube[j]):
                    return False
                count += 1
        if count != n * 2 ** (n - 1):
            return False
    return True


def random_bit_instance(n, m, rng: random.Random):
    """m distinct n-bit strings drawn uniformly without replacement."""
    codes = rng.sample(range(2 ** n), m)
    objs = [BitString(tuple((c >> (n - 1 - i)) & 1 for i in range(n))) for c in codes]
    return Instance("bitstring", "bitflip", tuple(objs), n)


def random_continuous_tuples(m, rng: random.Random, side=4):
    """Draw distinct points from a side x side grid until a continuous list results."""
    while True:
        pts = rng.sample([(a, b) for a in range(1, side + 1) for b in range(1, side + 1)], m)
        out = normalize_continuous(pts)
        if not out.no_instance:
            return Instance("tuple", "pm1_tuple", out.tuples)


def verify_reduction(tag, n, *, samples=100, seed=0, sample_size=None):
    """Full B_n plus seeded random subsets, with the cube inducement test on top."""
    rng = random.Random(seed)
    red = REDUCTIONS[tag]
    if red.image is None:
        agg = ReductionReport(tag, red.target_flips)
        for _ in range(samples):
            src = random_continuous_tuples(rng.randint(1, 8), rng)
            _merge(agg, check_reduction(tag, src))
        return agg
    full = Instance("bitstring", "bitflip", tuple(full_cube(n)), n)
    agg = check_reduction(tag, full)
    for _ in range(samples):
        m = rng.randint(1, min(2 ** n, sample_size or 8))
        _merge(agg, check_reduction(tag, random_bit_instance(n, m, rng)))
    for k in range(1, min(n, 5) + 1):
        agg.hypercube_checks[k] = check_hypercube_inducement(tag, k)
    return agg


def _merge(agg: ReductionReport, rep: ReductionReport):
    agg.pairs_checked += rep.pairs_checked
    agg.adjacency_iff_violations += rep.adjacency_iff_violations
    agg.injective = agg.injective and rep.injective
    agg.parsimony_samples.extend(rep.parsimony_samples)
