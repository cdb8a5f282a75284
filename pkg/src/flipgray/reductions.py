"""Gray-code reductions between instance kinds.

Each ``bits_to_*`` map sends n-bit strings to another object family so
that two strings differ in one bit exactly when their images differ by one
flip of the target family.  A list of strings therefore has a bitflip Gray
code exactly when its image list has one, and the order carries over
index for index.

The tuple maps start from integer 2-tuples under +-1 steps (equivalently
grid-graph Hamilton paths).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BadIndices, EmptyInstance, KindMismatch, NotContinuous
from .objects import (BitString, Combination, DiamondGraph, EdgeSubset,
                      Instance, Permutation, SetPartition, Tuple2, edge,
                      validate_instance)
from .solver import Certificate


@dataclass(frozen=True)
class NormalizeOutcome:
    """Either a proof of a no-instance (``case`` 1 or 2, with the skipped value)
    or the shifted continuous tuple list."""

    tuples: tuple | None = None
    case: int | None = None
    gap: int | None = None

    @property
    def no_instance(self):
        return self.case is not None


def _gap(values):
    vals = sorted(set(values))
    for lo, hi in zip(vals, vals[1:]):
        if hi - lo > 1:
            return lo + 1
    return None


def is_continuous(tuples):
    tuples = list(tuples)
    if not tuples:
        return True
    a = {t.a for t in tuples}
    b = {t.b for t in tuples}
    return a == set(range(1, max(a) + 1)) and b == set(range(1, max(b) + 1))


def normalize_continuous(tuples) -> NormalizeOutcome:
    tuples = [t if isinstance(t, Tuple2) else Tuple2(*t) for t in tuples]
    if not tuples:
        raise EmptyInstance("cannot normalise an empty tuple list")
    gap = _gap(t.a for t in tuples)
    if gap is not None:
        return NormalizeOutcome(case=1, gap=gap)
    gap = _gap(t.b for t in tuples)
    if gap is not None:
        return NormalizeOutcome(case=2, gap=gap)
    da = 1 - min(t.a for t in tuples)
    db = 1 - min(t.b for t in tuples)
    return NormalizeOutcome(tuple(Tuple2(t.a + da, t.b + db) for t in tuples))


def _require_continuous(tuples):
    tuples = list(tuples)
    if not is_continuous(tuples):
        raise NotContinuous("tuple list is not continuous; normalise it first")
    return tuples, max((t.a for t in tuples), default=0), max((t.b for t in tuples), default=0)


def tuples_to_bitstrings(tuples):
    """(x, y) -> 0^x 1^(a-x) 0^y 1^(b-y) with a, b the coordinate maxima."""
    tuples, a, b = _require_continuous(tuples)
    return [BitString((0,) * t.a + (1,) * (a - t.a) + (0,) * t.b + (1,) * (b - t.b))
            for t in tuples]


def tuple_to_permutation(x, y, a, b):
    """Identity on [a+b] with a+b+1 placed at position x and a+b+2 at position a+y."""
    size = a + b + 2
    out = [0] * size
    out[x - 1] = a + b + 1
    out[a + y - 1] = a + b + 2
    rest = iter(range(1, a + b + 1))
    for i in range(size):
        if not out[i]:
            out[i] = next(rest)
    return Permutation(tuple(out))


def tuples_to_permutations(tuples):
    tuples, a, b = _require_continuous(tuples)
    return [tuple_to_permutation(t.a, t.b, a, b) for t in tuples]


# --- from bitstrings ---------------------------------------------------------

def _bits(b):
    return b.bits if isinstance(b, BitString) else tuple(b)


def bit_to_ncpartition(b):
    """Bit i set puts i+1 in the block of 1; otherwise i+1 is a singleton."""
    bits = _bits(b)
    main = [1] + [i + 2 for i, v in enumerate(bits) if v]
    singles = [(i + 2,) for i, v in enumerate(bits) if not v]
    return SetPartition((tuple(main), *singles), len(bits) + 1)


def _pairs(bits):
    return [(1, 0) if v else (0, 1) for v in bits]


def bit_to_combination_swap(b):
    return Combination(tuple(x for p in _pairs(_bits(b)) for x in p))


def _padded(bits, pad):
    out = []
    for i, p in enumerate(_pairs(bits)):
        if i:
            out += pad
        out += p
    return Combination(tuple(out))


def bit_to_combination_complement(b):
    return _padded(_bits(b), (1,))


def bit_to_combination_reversal(b):
    return _padded(_bits(b), (0, 1))


def bit_to_permutation_pairs(b):
    out = []
    for i, v in enumerate(_bits(b), start=1):
        out += [2 * i, 2 * i - 1] if v else [2 * i - 1, 2 * i]
    return Permutation(tuple(out))


def bit_to_peakless(b):
    """Read the string as b_2..b_n: insert 2..n leftmost on a 1, rightmost on a 0."""
    seq = [1]
    for value, v in enumerate(_bits(b), start=2):
        if v:
            seq.insert(0, value)
        else:
            seq.append(value)
    return Permutation(tuple(seq))


def build_diamond_graph(n: int) -> DiamondGraph:
    return DiamondGraph(n)


def bit_to_spanning_tree(b):
    bits = _bits(b)
    n = len(bits)
    edges = set()
    for i, v in enumerate(bits, start=1):
        edges.add(edge((i, "W"), (i, "S")))
        edges.add(edge((i, "E"), (i, "S")))
        edges.add(edge((i, "E" if v else "W"), (i, "N")))
        if i < n:
            edges.add(edge((i, "E"), (i + 1, "W")))
    return EdgeSubset(n, frozenset(edges), "tree")


def bit_to_matching(b):
    bits = _bits(b)
    edges = set()
    for i, v in enumerate(bits, start=1):
        if v:
            edges |= {edge((i, "E"), (i, "N")), edge((i, "W"), (i, "S"))}
        else:
            edges |= {edge((i, "W"), (i, "N")), edge((i, "E"), (i, "S"))}
    return EdgeSubset(len(bits), frozenset(edges), "matching")


@dataclass(frozen=True)
class Reduction:
    tag: str
    source_kind: str
    source_flip: str
    target_kind: str
    target_flips: tuple  # first entry is the default
    image: object  # per-object map; None for list-level tuple maps


REDUCTIONS = {r.tag: r for r in (
    Reduction("tuples_normalize", "tuple", "pm1_tuple", "tuple", ("pm1_tuple",), None),
    Reduction("tuples_to_bits", "tuple", "pm1_tuple", "bitstring", ("bitflip",), None),
    Reduction("tuples_to_perms", "tuple", "pm1_tuple", "permutation", ("swap",), None),
    Reduction("bits_to_ncpartitions", "bitstring", "bitflip", "ncpartition",
              ("refinement",), bit_to_ncpartition),
    Reduction("bits_to_combos_swap", "bitstring", "bitflip", "combination",
              ("swap", "transposition"), bit_to_combination_swap),
    Reduction("bits_to_combos_complement", "bitstring", "bitflip", "combination",
              ("substring_complement",), bit_to_combination_complement),
    Reduction("bits_to_combos_reversal", "bitstring", "bitflip", "combination",
              ("reversal",), bit_to_combination_reversal),
    Reduction("bits_to_perms_pairs", "bitstring", "bitflip", "permutation",
              ("swap", "transposition", "reversal", "rotation", "jump"),
              bit_to_permutation_pairs),
    Reduction("bits_to_peakless", "bitstring", "bitflip", "permutation",
              ("jump",), bit_to_peakless),
    Reduction("bits_to_trees", "bitstring", "bitflip", "spanningtree",
              ("edge_exchange",), bit_to_spanning_tree),
    Reduction("bits_to_matchings", "bitstring", "bitflip", "matching",
              ("alternating_cycle",), bit_to_matching),
)}

BIT_TAGS = tuple(t for t in REDUCTIONS if t.startswith("bits_to_"))

# The fixed continuous no-instance that a gapped tuple list normalises to.
NO_INSTANCE_TUPLES = (Tuple2(1, 1), Tuple2(2, 2))


def map_bitstrings(tag, strings):
    red = REDUCTIONS[tag]
    if red.image is None:
        raise KindMismatch(f"{tag} does not take bitstrings")
    return [red.image(b) for b in strings]


def _target_size(red, objs):
    if not objs:
        return None, None
    o = objs[0]
    if isinstance(o, Combination):
        return len(o), o.weight
    if isinstance(o, (BitString, Permutation)):
        return len(o), None
    if isinstance(o, (SetPartition, EdgeSubset)):
        return o.n, None
    return None, None


def reduce_instance(source: Instance, tag: str, *, target_flip=None) -> Instance:
    """Map every object of ``source`` through the reduction, keeping list order."""
    try:
        red = REDUCTIONS[tag]
    except KeyError:
        raise KindMismatch(f"unknown reduction tag {tag!r}") from None
    if source.kind != red.source_kind or source.flip != red.source_flip:
        raise KindMismatch(f"{tag} needs kind={red.source_kind} flip={red.source_flip}, "
                           f"got kind={source.kind} flip={source.flip}")
    flip = target_flip or red.target_flips[0]
    if flip not in red.target_flips:
        raise KindMismatch(f"{tag} does not preserve adjacency for flip {flip!r}")
    validate_instance(source)
    if tag == "tuples_normalize":
        out = normalize_continuous(source.objects)
        objs = NO_INSTANCE_TUPLES if out.no_instance else out.tuples
    elif tag == "tuples_to_bits":
        objs = tuples_to_bitstrings(source.objects)
    elif tag == "tuples_to_perms":
        objs = tuples_to_permutations(source.objects)
    else:
        objs = [red.image(b) for b in source.objects]
    n, k = _target_size(red, objs)
    return Instance(red.target_kind, flip, tuple(objs), n, k)


def lift_certificate(source: Instance, target: Instance, certificate):
    """Carry a target certificate back to the source.

    Reductions keep list positions, so this is the identity on indices once
    the sizes are checked.
    """
    if source.m != target.m:
        raise BadIndices(f"source has {source.m} objects, target has {target.m}")
    order = tuple(certificate.order)
    if any(not (1 <= i <= source.m) for i in order):
        raise BadIndices(f"certificate indices out of range 1..{source.m}")
    return Certificate(order)
