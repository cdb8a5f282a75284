"""Exact Gray-code decisions.

Hamilton paths and cycles in a flip graph are found by deterministic
depth-first search with connectivity and dead-end pruning.  Register shifts
and shorthand rotations are instead solved through Eulerian trails of a
transition multigraph, which takes polynomial time.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import BadIndices, BoundExceeded, ResourceLimit
from .flipgraph import FlipGraph, articulation_points, connected_components
from .flips import adjacent, is_directed
from .objects import BitString, Instance, Permutation

DEFAULT_BUDGET = 10**8
COUNT_BOUND = 10


@dataclass(frozen=True)
class Certificate:
    """An ordering of an instance, as 1-based indices into its object list."""

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))

    @classmethod
    def from_vertices(cls, path):
        return cls(tuple(v + 1 for v in path))

    def vertices(self):
        return [i - 1 for i in self.order]

    def __str__(self):
        return " ".join(map(str, self.order))

    @classmethod
    def parse(cls, text: str):
        try:
            return cls(tuple(int(t) for t in text.split()))
        except ValueError:
            raise BadIndices(f"certificate must be integers: {text!r}") from None


@dataclass
class SolveResult:
    answer: str
    certificate: Certificate | None = None
    stats: dict = field(default_factory=dict)

    @property
    def yes(self):
        return self.answer == "yes"


@dataclass
class UcycleResult:
    answer: str
    sequence: tuple | None = None
    cyclic: bool = True
    order: tuple | None = None  # indices into the input list, in trail order

    @property
    def yes(self):
        return self.answer == "yes"

    @property
    def text(self):
        if self.sequence is None:
            return ""
        sep = "" if all(0 <= s <= 9 for s in self.sequence) else " "
        return sep.join(map(str, self.sequence))


# ---------------------------------------------------------------------------
# Whole-graph refutations

def _prune_path(graph: FlipGraph, stats):
    """Return the name of a rule refuting a Hamilton path, or None."""
    m = graph.m
    und = graph.underlying()
    if m >= 2 and any(not s for s in und):
        return "isolated"
    if len(connected_components(graph)) > 1:
        return "disconnected"
    if graph.directed:
        ins = graph.in_adj()
        if sum(1 for s in ins if not s) > 1 or sum(1 for s in graph.adj if not s) > 1:
            return "endpoints"
    elif sum(1 for s in und if len(s) <= 1) > 2:
        return "endpoints"
    for v in articulation_points(graph):
        rest = [u for u in range(m) if u != v]
        if len(connected_components(graph, within=rest)) >= 3:
            return "cut_vertex"
    return None


def _prune_cycle(graph: FlipGraph):
    m = graph.m
    if m <= 1 or (m == 2 and not graph.directed):
        return "too_small"
    if len(connected_components(graph)) > 1:
        return "disconnected"
    if graph.directed:
        if any(not s for s in graph.adj) or any(not s for s in graph.in_adj()):
            return "endpoints"
    else:
        if any(len(s) < 2 for s in graph.adj):
            return "endpoints"
        if articulation_points(graph):
            return "cut_vertex"
    return None


# ---------------------------------------------------------------------------
# Backtracking core.  Vertex sets are Python ints used as bitsets.

def _masks(graph: FlipGraph):
    out = [0] * graph.m
    inn = [0] * graph.m
    for i, j in graph.edges():
        out[i] |= 1 << j
        inn[j] |= 1 << i
        if not graph.directed:
            out[j] |= 1 << i
            inn[i] |= 1 << j
    return out, inn


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _search(m, directed, out, inn, start, budget, cyclic, canonical=False):
    """DFS from ``start``.  Returns (path | None, nodes, prunes, exhausted_budget)."""
    full = (1 << m) - 1
    start_bit = 1 << start
    prunes = Counter()
    nodes = 1
    path = [start]
    visited = start_bit

    def branches(v, visited):
        cand = out[v] & ~visited
        if canonical:
            return _bits(cand)
        free = ~visited
        return iter(sorted(_bits(cand), key=lambda w: ((out[w] & free).bit_count(), w)))

    stack = [branches(start, visited)]

    def feasible(cur, visited):
        remaining = full & ~visited
        if not remaining:
            return (not cyclic) or bool(out[cur] & start_bit)
        # everything left must be reachable from the path's end
        reach = out[cur] & remaining
        frontier = reach
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= out[v]
            frontier = nxt & remaining & ~reach
            reach |= frontier
        if reach != remaining:
            prunes["unreachable"] += 1
            return False
        cur_bit = 1 << cur
        if cyclic:
            if not (inn[start] & remaining):
                prunes["no_return"] += 1
                return False
            for v in _bits(remaining):
                if directed:
                    ok = (out[v] & (remaining | start_bit)) and (inn[v] & (remaining | cur_bit))
                else:
                    ok = (out[v] & (remaining | cur_bit | start_bit)).bit_count() >= 2
                if not ok:
                    prunes["dead_end"] += 1
                    return False
            return True
        ends = 0
        for v in _bits(remaining):
            if directed:
                low = not (out[v] & remaining)
            else:
                low = (out[v] & (remaining | cur_bit)).bit_count() <= 1
            if low:
                ends += 1
                if ends > 1:
                    prunes["dead_end"] += 1
                    return False
        return True

    if not feasible(start, visited):
        return None, nodes, prunes, False
    if visited == full:
        return list(path), nodes, prunes, False
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            visited &= ~(1 << path.pop())
            continue
        if visited >> nxt & 1:
            continue
        nodes += 1
        if nodes > budget:
            return None, nodes, prunes, True
        visited |= 1 << nxt
        path.append(nxt)
        if not feasible(nxt, visited):
            visited &= ~(1 << nxt)
            path.pop()
            continue
        if visited == full:
            return list(path), nodes, prunes, False
        stack.append(branches(nxt, visited))
    return None, nodes, prunes, False


def _search_task(args):
    return _search(*args)


def _run(graph: FlipGraph, cyclic, budget, threads, canonical):
    out, inn = _masks(graph)
    starts = [0] if cyclic else list(range(graph.m))
    tasks = [(graph.m, graph.directed, out, inn, s, budget, cyclic, canonical) for s in starts]
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_search_task, tasks))
    else:
        results = None
    stats = {"nodes": 0, "starts": 0}
    prunes = Counter()
    for idx, task in enumerate(tasks):
        if results is not None:
            path, nodes, pr, hit = results[idx]
        else:
            path, nodes, pr, hit = _search(*task[:5], budget - stats["nodes"], cyclic, canonical)
        stats["nodes"] += nodes
        stats["starts"] += 1
        prunes.update(pr)
        if hit or stats["nodes"] > budget:
            stats.update({f"prune_{k}": v for k, v in sorted(prunes.items())})
            raise ResourceLimit(f"node budget {budget} exhausted", stats)
        if path is not None:
            stats.update({f"prune_{k}": v for k, v in sorted(prunes.items())})
            return path, stats
    stats.update({f"prune_{k}": v for k, v in sorted(prunes.items())})
    return None, stats


def has_hamilton_path(graph: FlipGraph, *, budget=DEFAULT_BUDGET, threads=1,
                      canonical=False) -> SolveResult:
    """Decide whether ``graph`` has a Hamilton path (directed paths for directed graphs).

    Branching prefers the neighbour with the fewest unvisited neighbours,
    ties to the lower index.  ``canonical=True`` branches strictly by index
    instead, which returns the lexicographically least certificate but can
    be far slower on large yes-instances.  ``budget`` caps node expansions;
    exceeding it raises ResourceLimit rather than answering no.
    """
    if graph.m <= 1:
        return SolveResult("yes", Certificate.from_vertices(range(graph.m)), {"nodes": 0})
    rule = _prune_path(graph, None)
    if rule:
        return SolveResult("no", None, {"nodes": 0, f"prune_{rule}": 1})
    path, stats = _run(graph, False, budget, threads, canonical)
    if path is None:
        return SolveResult("no", None, stats)
    return SolveResult("yes", Certificate.from_vertices(path), stats)


def has_hamilton_cycle(graph: FlipGraph, *, budget=DEFAULT_BUDGET, threads=1,
                       canonical=False) -> SolveResult:
    rule = _prune_cycle(graph)
    if rule:
        return SolveResult("no", None, {"nodes": 0, f"prune_{rule}": 1})
    path, stats = _run(graph, True, budget, threads, canonical)
    if path is None:
        return SolveResult("no", None, stats)
    return SolveResult("yes", Certificate.from_vertices(path), stats)


def count_hamilton_paths(graph: FlipGraph, *, bound=COUNT_BOUND) -> int:
    """Number of Hamilton paths; undirected paths are counted up to reversal.

    Subset dynamic programme over (visited set, end vertex).
    """
    m = graph.m
    if m > bound:
        raise BoundExceeded(f"m={m} exceeds counting bound {bound}")
    if m <= 1:
        return 1
    out, _ = _masks(graph)
    ways = [[0] * m for _ in range(1 << m)]
    for v in range(m):
        ways[1 << v][v] = 1
    for mask in range(1, 1 << m):
        row = ways[mask]
        for v in range(m):
            c = row[v]
            if not c:
                continue
            for w in _bits(out[v] & ~mask):
                ways[mask | 1 << w][w] += c
    total = sum(ways[(1 << m) - 1])
    return total if graph.directed else total // 2


def verify_certificate(instance: Instance, certificate: Certificate, *, cyclic=False) -> bool:
    """Check that the certificate lists every object once with each step a single flip."""
    m = instance.m
    order = certificate.order
    if any(not (1 <= i <= m) for i in order):
        raise BadIndices(f"indices must lie in 1..{m}: {order}")
    if len(order) != m or len(set(order)) != m:
        return False
    objs = [instance.objects[i - 1] for i in order]
    steps = list(zip(objs, objs[1:]))
    if cyclic:
        if m <= (1 if is_directed(instance.flip) else 2):
            return False
        steps.append((objs[-1], objs[0]))
    return all(adjacent(instance.flip, x, y) for x, y in steps)


# ---------------------------------------------------------------------------
# Eulerian solvers

def _euler_trail(arcs, cyclic):
    """Arcs are (label, tail, head).  Returns arc indices in trail order or None.

    Hierholzer's algorithm taking the least-labelled unused arc first.
    """
    if not arcs:
        return []
    outs, deg_in, deg_out = {}, Counter(), Counter()
    for idx, (label, tail, head) in enumerate(arcs):
        outs.setdefault(tail, []).append(idx)
        outs.setdefault(head, [])
        deg_out[tail] += 1
        deg_in[head] += 1
    for lst in outs.values():
        lst.sort(key=lambda i: arcs[i][0])
    # weak connectivity of the non-isolated part
    nodes = list(outs)
    und = {v: set() for v in nodes}
    for _, t, h in arcs:
        und[t].add(h)
        und[h].add(t)
    seen, stack = {nodes[0]}, [nodes[0]]
    while stack:
        for w in und[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(nodes):
        return None
    surplus = {v: deg_out[v] - deg_in[v] for v in nodes}
    first = arcs[min(range(len(arcs)), key=lambda i: arcs[i][0])][1]
    if all(s == 0 for s in surplus.values()):
        start = first
    elif cyclic:
        return None
    else:
        plus = [v for v, s in surplus.items() if s == 1]
        minus = [v for v, s in surplus.items() if s == -1]
        if len(plus) != 1 or len(minus) != 1 or any(abs(s) > 1 for s in surplus.values()):
            return None
        start = plus[0]
    ptr = Counter()
    node_stack, arc_stack, trail = [start], [], []
    while node_stack:
        v = node_stack[-1]
        if ptr[v] < len(outs[v]):
            a = outs[v][ptr[v]]
            ptr[v] += 1
            node_stack.append(arcs[a][2])
            arc_stack.append(a)
        else:
            node_stack.pop()
            if arc_stack:
                trail.append(arc_stack.pop())
    trail.reverse()
    return trail


def _pack(labels, order, cyclic):
    if not order:
        return ()
    if cyclic:
        return tuple(labels[i][0] for i in order)
    return tuple(labels[order[0]]) + tuple(labels[i][-1] for i in order[1:])


def solve_debruijn_subset(strings, cyclic=True) -> UcycleResult:
    """De Bruijn sequence for a subset of n-bit strings, if one exists.

    Each string b_1..b_n is an arc from node b_1..b_{n-1} to node b_2..b_n.
    """
    words = [s.bits if isinstance(s, BitString) else tuple(s) for s in strings]
    arcs = [(w, w[:-1], w[1:]) for w in words]
    order = _euler_trail(arcs, cyclic)
    if order is None:
        return UcycleResult("no", None, cyclic)
    return UcycleResult("yes", _pack(words, order, cyclic), cyclic, tuple(order))


def shorthand(p):
    return tuple(p)[:-1]


def solve_shorthand_ucycle(perms, cyclic=True) -> UcycleResult:
    """Shorthand universal cycle (or linear packing) for a set of permutations of [n], n >= 3."""
    words = [tuple(p.values if isinstance(p, Permutation) else p) for p in perms]
    labels = [shorthand(w) for w in words]
    arcs = [(lab, lab[:-1], lab[1:]) for lab in labels]
    order = _euler_trail(arcs, cyclic)
    if order is None:
        return UcycleResult("no", None, cyclic)
    return UcycleResult("yes", _pack(labels, order, cyclic), cyclic, tuple(order))


def _windows(seq, width, cyclic):
    seq = tuple(seq)
    L = len(seq)
    if cyclic:
        return [tuple(seq[(i + j) % L] for j in range(width)) for i in range(L)] if L else []
    return [seq[i:i + width] for i in range(L - width + 1)]


def check_debruijn_sequence(seq, strings, cyclic=True) -> bool:
    """True iff the windows of ``seq`` are exactly ``strings``, each once."""
    words = [s.bits if isinstance(s, BitString) else tuple(s) for s in strings]
    if not words:
        return len(seq) == 0
    n = len(words[0])
    wins = _windows(seq, n, cyclic)
    return len(wins) == len(words) and Counter(wins) == Counter(words)


def check_shorthand_sequence(seq, perms, cyclic=True) -> bool:
    """True iff the length n-1 windows of ``seq``, completed, are exactly ``perms``."""
    words = [tuple(p.values if isinstance(p, Permutation) else p) for p in perms]
    if not words:
        return len(seq) == 0
    n = len(words[0])
    wins = _windows(seq, n - 1, cyclic)
    full = set(range(1, n + 1))
    decoded = []
    for w in wins:
        missing = full - set(w)
        if len(missing) != 1 or len(set(w)) != n - 1:
            return False
        decoded.append(w + tuple(missing))
    return len(decoded) == len(words) and Counter(decoded) == Counter(words)
