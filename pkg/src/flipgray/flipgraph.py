"""Flip graphs induced on an instance, plus the few graph utilities the solver needs."""
from __future__ import annotations

from dataclasses import dataclass

from .flips import adjacent, is_directed
from .objects import Instance, validate_instance


@dataclass(frozen=True)
class FlipGraph:
    """Vertices are 0-based positions in the instance's object list.

    ``adj[i]`` is the ascending tuple of (out-)neighbours of vertex i.
    """

    m: int
    directed: bool
    adj: tuple
    labels: tuple = ()

    @classmethod
    def from_edges(cls, m, edges, directed=False, labels=()):
        nbrs = [set() for _ in range(m)]
        for i, j in edges:
            if i == j:
                continue
            nbrs[i].add(j)
            if not directed:
                nbrs[j].add(i)
        return cls(m, directed, tuple(tuple(sorted(s)) for s in nbrs), tuple(labels))

    def edges(self):
        """Directed: every arc.  Undirected: each edge once as (i, j), i < j."""
        for i, out in enumerate(self.adj):
            for j in out:
                if self.directed or i < j:
                    yield (i, j)

    @property
    def edge_count(self):
        return sum(1 for _ in self.edges())

    def in_adj(self):
        if not self.directed:
            return self.adj
        ins = [[] for _ in range(self.m)]
        for i, j in self.edges():
            ins[j].append(i)
        return tuple(tuple(sorted(s)) for s in ins)

    def has_edge(self, i, j):
        return j in self.adj[i]

    def underlying(self):
        """Undirected neighbour sets, ignoring arc direction."""
        und = [set(out) for out in self.adj]
        if self.directed:
            for i, j in self.edges():
                und[j].add(i)
        return und


def build_flip_graph(instance: Instance) -> FlipGraph:
    validate_instance(instance)
    objs = instance.objects
    m = len(objs)
    directed = is_directed(instance.flip)
    edges = []
    for i in range(m):
        for j in range(m) if directed else range(i + 1, m):
            if i != j and adjacent(instance.flip, objs[i], objs[j]):
                edges.append((i, j))
    return FlipGraph.from_edges(m, edges, directed, objs)


def connected_components(graph: FlipGraph, within=None):
    """Weak components, each a sorted list, ordered by smallest vertex."""
    und = graph.underlying()
    alive = set(range(graph.m)) if within is None else set(within)
    comps = []
    for s in sorted(alive):
        if not alive or s not in alive:
            continue
        alive.discard(s)
        comp, stack = [s], [s]
        while stack:
            for w in und[stack.pop()]:
                if w in alive:
                    alive.discard(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def degree_profile(graph: FlipGraph):
    """Per-vertex degree, or (in, out) pairs for directed graphs."""
    if not graph.directed:
        return [len(out) for out in graph.adj]
    ins = graph.in_adj()
    return [(len(ins[i]), len(graph.adj[i])) for i in range(graph.m)]


def articulation_points(graph: FlipGraph):
    """Cut vertices of the underlying undirected graph (iterative Tarjan)."""
    und = [sorted(s) for s in graph.underlying()]
    m = graph.m
    disc = [-1] * m
    low = [0] * m
    cuts = set()
    t = 0
    for root in range(m):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, iter(und[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(und[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return sorted(cuts)


def export_edge_list(graph: FlipGraph) -> str:
    lines = [f"m={graph.m} directed={int(graph.directed)}"]
    lines += [f"{i + 1} {j + 1}" for i, j in graph.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> FlipGraph:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    header = dict(tok.split("=") for tok in lines[0].split())
    m, directed = int(header["m"]), header["directed"] == "1"
    edges = [(int(a) - 1, int(b) - 1) for a, b in (ln.split() for ln in lines[1:])]
    return FlipGraph.from_edges(m, edges, directed)
