"""Pairwise flip-adjacency predicates, one per flip family.

Each predicate answers "is y one flip away from x" in polynomial time
without generating neighbourhoods.  Adjacency is irreflexive.
"""
from __future__ import annotations

from .errors import InapplicableFlip, SizeMismatch
from .objects import BitString, EdgeSubset, Permutation, SetPartition, Tuple2

FAMILIES = ("bitflip", "substring_complement", "pm1_tuple", "swap",
            "transposition", "reversal", "rotation", "jump", "refinement",
            "edge_exchange", "alternating_cycle", "register_shift",
            "shorthand_rotation")

DIRECTED = frozenset({"register_shift", "shorthand_rotation"})


def is_directed(family: str) -> bool:
    if family not in FAMILIES:
        raise InapplicableFlip(f"unknown flip family {family!r}")
    return family in DIRECTED


def _seq(x):
    if isinstance(x, BitString):
        return x.bits
    if isinstance(x, Permutation):
        return x.values
    return tuple(x)


def _pair(x, y):
    a, b = _seq(x), _seq(y)
    if len(a) != len(b):
        raise SizeMismatch(f"{x} and {y} differ in length")
    return a, b


def _diff(a, b):
    return [i for i in range(len(a)) if a[i] != b[i]]


def adjacent_bitflip(x, y) -> bool:
    a, b = _pair(x, y)
    return len(_diff(a, b)) == 1


def adjacent_substring_complement(x, y) -> bool:
    a, b = _pair(x, y)
    d = _diff(a, b)
    return bool(d) and d[-1] - d[0] + 1 == len(d)


def adjacent_pm1(x: Tuple2, y: Tuple2) -> bool:
    return abs(x.a - y.a) + abs(x.b - y.b) == 1


def adjacent_swap(x, y) -> bool:
    a, b = _pair(x, y)
    d = _diff(a, b)
    return (len(d) == 2 and d[1] == d[0] + 1
            and a[d[0]] == b[d[1]] and a[d[1]] == b[d[0]])


def adjacent_transposition(x, y) -> bool:
    a, b = _pair(x, y)
    d = _diff(a, b)
    return len(d) == 2 and a[d[0]] == b[d[1]] and a[d[1]] == b[d[0]]


def adjacent_reversal(x, y) -> bool:
    # A reversal's changed positions are symmetric about its centre, so the
    # outermost differing positions pin the interval down.
    a, b = _pair(x, y)
    d = _diff(a, b)
    if not d:
        return False
    lo, hi = d[0], d[-1]
    return b[lo:hi + 1] == a[lo:hi + 1][::-1]


def _rotated_left(a, lo, hi):
    return a[lo + 1:hi + 1] + a[lo:lo + 1]


def _rotated_right(a, lo, hi):
    return a[hi:hi + 1] + a[lo:hi]


def adjacent_rotation(x, y) -> bool:
    # Shrinking a rotated interval to the differing span never changes the
    # result, so only [lo, hi] needs checking.
    a, b = _pair(x, y)
    d = _diff(a, b)
    if not d:
        return False
    lo, hi = d[0], d[-1]
    seg = b[lo:hi + 1]
    return seg == _rotated_left(a, lo, hi) or seg == _rotated_right(a, lo, hi)


def adjacent_jump(x: Permutation, y: Permutation) -> bool:
    """A value moves left or right over a run of strictly smaller values."""
    a, b = _pair(x, y)
    d = _diff(a, b)
    if not d:
        return False
    lo, hi = d[0], d[-1]
    if lo == hi:
        return False
    seg = b[lo:hi + 1]
    if seg == _rotated_left(a, lo, hi) and a[lo] > max(a[lo + 1:hi + 1]):
        return True
    return seg == _rotated_right(a, lo, hi) and a[hi] > max(a[lo:hi])


def adjacent_refinement(x: SetPartition, y: SetPartition) -> bool:
    if x.n != y.n:
        raise SizeMismatch(f"{x} and {y} partition different ground sets")
    bx, by = set(x.blocks), set(y.blocks)
    only_x, only_y = bx - by, by - bx
    if len(only_x) == 2 and len(only_y) == 1:
        merged = set().union(*only_x)
        return merged == set(next(iter(only_y)))
    if len(only_x) == 1 and len(only_y) == 2:
        merged = set().union(*only_y)
        return merged == set(next(iter(only_x)))
    return False


def _check_hosts(x: EdgeSubset, y: EdgeSubset):
    if x.n != y.n:
        raise SizeMismatch(f"edge subsets of D_{x.n} and D_{y.n}")


def adjacent_edge_exchange(x: EdgeSubset, y: EdgeSubset) -> bool:
    _check_hosts(x, y)
    return len(x.edges ^ y.edges) == 2


def adjacent_alternating_cycle(x: EdgeSubset, y: EdgeSubset) -> bool:
    """The symmetric difference of the two matchings is one cycle."""
    _check_hosts(x, y)
    diff = x.edges ^ y.edges
    if not diff:
        return False
    nbrs = {}
    for u, v in diff:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    if any(len(vs) != 2 for vs in nbrs.values()):
        return False
    start = next(iter(nbrs))
    seen, stack = {start}, [start]
    while stack:
        for w in nbrs[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(nbrs)


def adjacent_shift(x: BitString, y: BitString) -> bool:
    """Directed: y = x_2..x_n followed by a new bit."""
    a, b = _pair(x, y)
    return a != b and a[1:] == b[:-1]


def shorthand_rotations(p):
    """The two rotations (sigma_0, sigma_1) of a one-line sequence."""
    p = tuple(p)
    if len(p) < 2:
        return p, p
    return p[1:] + p[:1], p[1:-1] + p[:1] + p[-1:]


def adjacent_shorthand_rotation(x: Permutation, y: Permutation) -> bool:
    a, b = _pair(x, y)
    return a != b and b in shorthand_rotations(a)


PREDICATES = {
    "bitflip": adjacent_bitflip,
    "substring_complement": adjacent_substring_complement,
    "pm1_tuple": adjacent_pm1,
    "swap": adjacent_swap,
    "transposition": adjacent_transposition,
    "reversal": adjacent_reversal,
    "rotation": adjacent_rotation,
    "jump": adjacent_jump,
    "refinement": adjacent_refinement,
    "edge_exchange": adjacent_edge_exchange,
    "alternating_cycle": adjacent_alternating_cycle,
    "register_shift": adjacent_shift,
    "shorthand_rotation": adjacent_shorthand_rotation,
}


def adjacent(family: str, x, y) -> bool:
    try:
        pred = PREDICATES[family]
    except KeyError:
        raise InapplicableFlip(f"unknown flip family {family!r}") from None
    return pred(x, y)
