"""Combinatorial object kinds with their text grammar.

Every object is an immutable value.  Text forms:

==============  =====================================================
kind            canonical text
==============  =====================================================
bitstring       ``0101``
combination     ``0110`` (a bitstring whose weight is the declared k)
tuple           ``(3,5)``
permutation     ``1324``; space separated once n > 9
setpartition    ``124|3`` blocks by minimum, every singleton written
ncpartition     as setpartition, crossing blocks rejected
spanningtree    ``E1-S1,N1-W1,S1-W1`` edges of the diamond path D_n
matching        ``E1-S1,N1-W1``
==============  =====================================================
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (DuplicateObject, InapplicableFlip, InvariantViolation,
                     MalformedText, MixedSizes)

KINDS = ("bitstring", "combination", "tuple", "permutation", "setpartition",
         "ncpartition", "spanningtree", "matching")


@dataclass(frozen=True)
class BitString:
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise InvariantViolation(f"non-binary symbol in {self.bits!r}")

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))

    @property
    def weight(self):
        return sum(self.bits)

    @classmethod
    def from_str(cls, s: str):
        return cls(tuple(int(c) for c in s))


@dataclass(frozen=True)
class Combination(BitString):
    """A k-subset of [n] stored as its characteristic bitstring."""


@dataclass(frozen=True)
class Tuple2:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InvariantViolation(f"tuple entries must be positive: {self}")

    def __str__(self):
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class Permutation:
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise InvariantViolation(f"not a permutation of [n]: {self.values!r}")

    def __len__(self):
        return len(self.values)

    def __str__(self):
        if len(self.values) <= 9:
            return "".join(map(str, self.values))
        return " ".join(map(str, self.values))

    @classmethod
    def from_str(cls, s: str):
        return cls(_parse_int_run(s))


def crossing_pair(blocks):
    """Return a witness ``(a, x, b, y)`` with a<x<b<y and a,b / x,y in different blocks, or None."""
    owner = {v: i for i, blk in enumerate(blocks) for v in blk}
    for i, blk in enumerate(blocks):
        for a, b in itertools.combinations(sorted(blk), 2):
            for x in range(a + 1, b):
                j = owner[x]
                if j == i:
                    continue
                for y in blocks[j]:
                    if y > b:
                        return (a, x, b, y)
    return None


@dataclass(frozen=True)
class SetPartition:
    blocks: tuple[tuple[int, ...], ...]
    n: int = field(default=-1)

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        if any(len(b) == 0 for b in blocks):
            raise InvariantViolation("empty block")
        elements = [v for b in blocks for v in b]
        n = self.n if self.n >= 0 else (max(elements) if elements else 0)
        if sorted(elements) != list(range(1, n + 1)):
            raise InvariantViolation(f"blocks do not partition [{n}]: {blocks!r}")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "n", n)

    def __str__(self):
        sep = "" if self.n <= 9 else " "
        return "|".join(sep.join(map(str, b)) for b in self.blocks)

    def is_noncrossing(self):
        return crossing_pair(self.blocks) is None


# Diamond path D_n.  A vertex is (index, letter); sorting vertices therefore
# groups each diamond together.

LETTERS = ("E", "N", "S", "W")


def vertex_name(v):
    return f"{v[1]}{v[0]}"


def parse_vertex(s: str):
    s = s.strip()
    if len(s) < 2 or s[0] not in LETTERS or not s[1:].isdigit():
        raise MalformedText(f"bad diamond vertex {s!r}")
    return (int(s[1:]), s[0])


def edge(u, v):
    return (u, v) if u <= v else (v, u)


def edge_name(e):
    return f"{vertex_name(e[0])}-{vertex_name(e[1])}"


@dataclass(frozen=True)
class DiamondGraph:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvariantViolation("diamond path needs n >= 1")

    @property
    def vertices(self):
        return tuple((i, c) for i in range(1, self.n + 1) for c in LETTERS)

    @property
    def edges(self):
        out = []
        for i in range(1, self.n + 1):
            out += [edge((i, "N"), (i, "E")), edge((i, "N"), (i, "W")),
                    edge((i, "S"), (i, "E")), edge((i, "S"), (i, "W"))]
        out += [edge((i, "E"), (i + 1, "W")) for i in range(1, self.n)]
        return tuple(sorted(out))


def _components(vertices, edges):
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    cycles = 0
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            cycles += 1
        else:
            parent[ru] = rv
    return len({find(v) for v in vertices}), cycles


@dataclass(frozen=True)
class EdgeSubset:
    """A spanning tree or perfect matching of the diamond path D_n."""

    n: int
    edges: frozenset
    role: str = "tree"

    def __post_init__(self):
        host = DiamondGraph(self.n)
        edges = frozenset(edge(*e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if not edges <= set(host.edges):
            raise InvariantViolation("edge not in D_%d: %s" % (self.n, sorted(edges - set(host.edges))))
        if self.role == "tree":
            comps, cycles = _components(host.vertices, edges)
            if comps != 1 or cycles or len(edges) != 4 * self.n - 1:
                raise InvariantViolation("edge set is not a spanning tree of D_%d" % self.n)
        elif self.role == "matching":
            seen = [v for e in edges for v in e]
            if len(seen) != len(set(seen)) or len(seen) != 4 * self.n:
                raise InvariantViolation("edge set is not a perfect matching of D_%d" % self.n)
        else:
            raise InvariantViolation(f"unknown edge-subset role {self.role!r}")

    def __str__(self):
        return ",".join(edge_name(e) for e in sorted(self.edges))


def _parse_int_run(s: str):
    s = s.strip()
    if not s:
        return ()
    try:
        if any(c in s for c in " ,\t"):
            return tuple(int(t) for t in s.replace(",", " ").split())
        return tuple(int(c) for c in s)
    except ValueError:
        raise MalformedText(f"expected integers, got {s!r}") from None


def parse_object(kind: str, text: str, *, noncrossing=False, n=None, k=None):
    """Parse one object in the canonical grammar of ``kind``.

    ``n`` and ``k`` are optional size declarations; a mismatch is an
    InvariantViolation.  ``noncrossing=True`` (or kind ``ncpartition``)
    rejects crossing partitions.
    """
    text = text.strip()
    if kind in ("bitstring", "combination"):
        if any(c not in "01" for c in text):
            raise MalformedText(f"bitstring must use 0/1 only: {text!r}")
        cls = Combination if kind == "combination" else BitString
        obj = cls.from_str(text)
        if n is not None and len(obj) != n:
            raise InvariantViolation(f"{text!r} has length {len(obj)}, expected {n}")
        if k is not None and obj.weight != k:
            raise InvariantViolation(f"{text!r} has weight {obj.weight}, expected {k}")
        return obj
    if kind == "tuple":
        body = text[1:-1] if text.startswith("(") and text.endswith(")") else text
        parts = body.split(",")
        if len(parts) != 2:
            raise MalformedText(f"expected '(a,b)', got {text!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedText(f"expected '(a,b)', got {text!r}") from None
        return Tuple2(a, b)
    if kind == "permutation":
        obj = Permutation(_parse_int_run(text))
        if n is not None and len(obj) != n:
            raise InvariantViolation(f"{text!r} has length {len(obj)}, expected {n}")
        return obj
    if kind in ("setpartition", "ncpartition"):
        if not text:
            raise MalformedText("empty partition text")
        blocks = []
        for part in text.split("|"):
            vals = _parse_int_run(part)
            if not vals:
                raise MalformedText(f"empty block in {text!r}")
            blocks.append(vals)
        obj = SetPartition(tuple(blocks), -1 if n is None else n)
        if (noncrossing or kind == "ncpartition") and not obj.is_noncrossing():
            raise InvariantViolation(f"{text!r} has crossing blocks {crossing_pair(obj.blocks)}")
        return obj
    if kind in ("spanningtree", "matching"):
        edges = []
        for token in filter(None, (t.strip() for t in text.split(","))):
            ends = token.split("-")
            if len(ends) != 2:
                raise MalformedText(f"bad edge {token!r}")
            edges.append(edge(parse_vertex(ends[0]), parse_vertex(ends[1])))
        if len(set(edges)) != len(edges):
            raise MalformedText(f"repeated edge in {text!r}")
        size = n if n is not None else max((v[0] for e in edges for v in e), default=0)
        role = "tree" if kind == "spanningtree" else "matching"
        return EdgeSubset(size, frozenset(edges), role)
    raise MalformedText(f"unknown kind {kind!r}")


def format_object(obj) -> str:
    return str(obj)


def kind_of(obj):
    if isinstance(obj, Combination):
        return "combination"
    if isinstance(obj, BitString):
        return "bitstring"
    if isinstance(obj, Tuple2):
        return "tuple"
    if isinstance(obj, Permutation):
        return "permutation"
    if isinstance(obj, SetPartition):
        return "setpartition"
    if isinstance(obj, EdgeSubset):
        return "spanningtree" if obj.role == "tree" else "matching"
    raise TypeError(f"not a combinatorial object: {obj!r}")


def size_of(obj):
    """Size parameters that must agree across an instance."""
    if isinstance(obj, Combination):
        return (len(obj), obj.weight)
    if isinstance(obj, (BitString, Permutation)):
        return len(obj)
    if isinstance(obj, (SetPartition, EdgeSubset)):
        return obj.n
    return None


# Which flip families make sense on which kinds.
APPLICABLE = {
    "bitstring": {"bitflip", "substring_complement", "swap", "transposition",
                  "reversal", "rotation", "register_shift"},
    "combination": {"swap", "transposition", "substring_complement",
                    "reversal", "rotation"},
    "tuple": {"pm1_tuple"},
    "permutation": {"swap", "transposition", "reversal", "rotation", "jump",
                    "shorthand_rotation"},
    "setpartition": {"refinement"},
    "ncpartition": {"refinement"},
    "spanningtree": {"edge_exchange"},
    "matching": {"alternating_cycle"},
}


@dataclass(frozen=True)
class Instance:
    """A flip family plus a list of distinct objects of one kind."""

    kind: str
    flip: str
    objects: tuple = ()
    n: int | None = None
    k: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))

    @property
    def m(self):
        return len(self.objects)


def validate_instance(instance: Instance):
    """Return True for a well-formed instance and raise the matching error otherwise."""
    kind = instance.kind
    if kind not in APPLICABLE:
        raise InapplicableFlip(f"unknown kind {kind!r}")
    if instance.flip not in APPLICABLE[kind]:
        raise InapplicableFlip(f"flip {instance.flip!r} does not apply to {kind}")
    base_kind = "setpartition" if kind == "ncpartition" else kind
    sizes = set()
    for obj in instance.objects:
        if kind_of(obj) != base_kind:
            raise MixedSizes(f"object {obj} is a {kind_of(obj)}, instance kind is {kind}")
        if kind == "ncpartition" and not obj.is_noncrossing():
            raise InvariantViolation(f"{obj} is crossing")
        sizes.add(size_of(obj))
    if len(sizes) > 1:
        raise MixedSizes(f"objects have differing sizes {sorted(sizes, key=str)}")
    if sizes:
        (size,) = sizes
        if isinstance(size, tuple):
            n, k = size
        else:
            n, k = size, None
        if instance.n is not None and n is not None and n != instance.n:
            raise MixedSizes(f"declared n={instance.n} but objects have n={n}")
        if instance.k is not None and k is not None and k != instance.k:
            raise MixedSizes(f"declared k={instance.k} but objects have k={k}")
    seen = set()
    for obj in instance.objects:
        if obj in seen:
            raise DuplicateObject(f"{obj} appears more than once")
        seen.add(obj)
    return True


def is_peakless(perm: Permutation) -> bool:
    p = perm.values
    return not any(p[i - 1] < p[i] > p[i + 1] for i in range(1, len(p) - 1))


def contains_pattern(perm: Permutation, pattern) -> bool:
    """True iff some subsequence of ``perm`` is order-isomorphic to ``pattern``."""
    p = perm.values
    pat = pattern.values if isinstance(pattern, Permutation) else tuple(pattern)
    k = len(pat)
    if k > len(p):
        return False
    order = sorted(range(k), key=lambda i: pat[i])
    for idx in itertools.combinations(range(len(p)), k):
        sub = [p[i] for i in idx]
        if all(sub[order[j]] < sub[order[j + 1]] for j in range(k - 1)):
            return True
    return False
