import itertools

import pytest

from conftest import (bitstrings, combinations, perfect_matchings,
                      permutations, set_partitions, spanning_trees)
from flipgray.errors import (DuplicateObject, InapplicableFlip,
                             InvariantViolation, MalformedText, MixedSizes)
from flipgray.objects import (BitString, Combination, EdgeSubset, Instance,
                              Permutation, SetPartition, Tuple2,
                              contains_pattern, format_object, is_peakless,
                              kind_of, parse_object, validate_instance)


def test_parse_bitstring():
    assert parse_object("bitstring", "0101") == BitString((0, 1, 0, 1))


def test_parse_partition_with_singleton():
    p = parse_object("setpartition", "134|2")
    assert p.blocks == ((1, 3, 4), (2,))


def test_crossing_partition_rejected_when_noncrossing_required():
    # {1,3} and {2,4}: 1 < 2 < 3 < 4
    with pytest.raises(InvariantViolation):
        parse_object("setpartition", "13|24", noncrossing=True)
    with pytest.raises(InvariantViolation):
        parse_object("ncpartition", "13|24")
    assert parse_object("setpartition", "13|24").blocks == ((1, 3), (2, 4))


def test_format_examples():
    assert format_object(BitString((0, 0, 0))) == "000"
    assert format_object(SetPartition(((1, 2, 4), (3,)))) == "124|3"


def test_matching_text_accepts_any_orientation():
    m = parse_object("matching", "W1-N1,E1-S1")
    assert m.edges == frozenset({((1, "N"), (1, "W")), ((1, "E"), (1, "S"))})
    assert format_object(m) == "E1-S1,N1-W1"
    assert parse_object("matching", format_object(m)) == m


@pytest.mark.parametrize("text", ["01a", "(1,)", "12|", "X1-N1"])
def test_malformed(text):
    kind = {"01a": "bitstring", "(1,)": "tuple", "12|": "setpartition",
            "X1-N1": "matching"}[text]
    with pytest.raises(MalformedText):
        parse_object(kind, text)


@pytest.mark.parametrize("kind,text", [
    ("permutation", "1224"),
    ("setpartition", "12|4"),
    ("spanningtree", "N1-E1,N1-W1"),
    ("matching", "N1-E1,N1-W1"),
    ("tuple", "(0,3)"),
])
def test_invariant_violations(kind, text):
    with pytest.raises(InvariantViolation):
        parse_object(kind, text)


def test_declared_sizes_checked():
    with pytest.raises(InvariantViolation):
        parse_object("combination", "0111", k=2)
    with pytest.raises(InvariantViolation):
        parse_object("bitstring", "01", n=3)


def _all_small_objects():
    for n in range(0, 6):
        yield from (("bitstring", b) for b in bitstrings(n))
    for n in range(1, 6):
        yield from (("permutation", p) for p in permutations(n))
        yield from (("setpartition", p) for p in set_partitions(n))
        for k in range(n + 1):
            yield from (("combination", c) for c in combinations(n, k))
    for a, b in itertools.product(range(1, 6), repeat=2):
        yield "tuple", Tuple2(a, b)
    for n in (1, 2):
        yield from (("spanningtree", t) for t in spanning_trees(n))
        yield from (("matching", m) for m in perfect_matchings(n))


def test_round_trip_exhaustive():
    count = 0
    for kind, obj in _all_small_objects():
        text = format_object(obj)
        if kind == "bitstring" and not text:
            continue
        assert parse_object(kind, text) == obj, (kind, text)
        count += 1
    assert count > 400


def test_long_permutations_use_spaces():
    p = Permutation(tuple(range(10, 0, -1)))
    assert format_object(p) == "10 9 8 7 6 5 4 3 2 1"
    assert parse_object("permutation", format_object(p)) == p


def test_explicit_singletons_only():
    assert format_object(SetPartition(((1, 2), (3,), (4,)))) == "12|3|4"
    with pytest.raises(InvariantViolation):
        parse_object("setpartition", "12", n=4)


def _crosses_by_quadruples(p: SetPartition):
    owner = {v: i for i, blk in enumerate(p.blocks) for v in blk}
    for a, x, b, y in itertools.combinations(range(1, p.n + 1), 4):
        if owner[a] == owner[b] and owner[x] == owner[y] and owner[a] != owner[x]:
            return True
    return False


@pytest.mark.parametrize("n", range(1, 7))
def test_noncrossing_matches_quadruple_enumeration(n):
    for p in set_partitions(n):
        assert p.is_noncrossing() == (not _crosses_by_quadruples(p))


def test_noncrossing_count_is_catalan():
    assert [sum(p.is_noncrossing() for p in set_partitions(n)) for n in range(1, 7)] == \
        [1, 2, 5, 14, 42, 132]


def test_validate_instance():
    ok = Instance("bitstring", "bitflip", (BitString.from_str("000"), BitString.from_str("001")))
    assert validate_instance(ok)
    with pytest.raises(DuplicateObject):
        validate_instance(Instance("bitstring", "bitflip", (BitString.from_str("000"),) * 2))
    with pytest.raises(MixedSizes):
        validate_instance(Instance("combination", "swap",
                                   (Combination.from_str("0101"), Combination.from_str("0111"))))
    with pytest.raises(MixedSizes):
        validate_instance(Instance("bitstring", "bitflip",
                                   (BitString.from_str("00"), BitString.from_str("001"))))
    with pytest.raises(InapplicableFlip):
        validate_instance(Instance("bitstring", "jump", ()))
    with pytest.raises(InapplicableFlip):
        validate_instance(Instance("bitstring", "no_such_flip", ()))


def test_validate_rejects_crossing_in_nc_instance():
    inst = Instance("ncpartition", "refinement", (SetPartition(((1, 3), (2, 4))),))
    with pytest.raises(InvariantViolation):
        validate_instance(inst)


@pytest.mark.parametrize("text,expected", [("213", True), ("132", False), ("1", True),
                                           ("321", True), ("2413", False)])
def test_is_peakless(text, expected):
    assert is_peakless(Permutation.from_str(text)) is expected


@pytest.mark.parametrize("perm,pattern,expected", [
    ("1234", (1, 2), True),
    ("321", (1, 2), False),
    ("2413", (1, 3, 2), True),
    ("12", (1, 2, 3), False),
])
def test_contains_pattern(perm, pattern, expected):
    assert contains_pattern(Permutation.from_str(perm), pattern) is expected


@pytest.mark.parametrize("n", range(1, 8))
def test_peakless_is_132_and_231_avoiding(n):
    for p in permutations(n):
        avoids = not contains_pattern(p, (1, 3, 2)) and not contains_pattern(p, (2, 3, 1))
        assert is_peakless(p) == avoids


def test_objects_are_hashable_values():
    assert {BitString.from_str("01"), BitString.from_str("01")} == {BitString.from_str("01")}
    assert BitString.from_str("01") != Combination.from_str("01")
    assert kind_of(Combination.from_str("01")) == "combination"
    assert kind_of(EdgeSubset(1, spanning_trees(1)[0].edges)) == "spanningtree"
