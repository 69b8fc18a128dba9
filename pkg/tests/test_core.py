"""Coloring model and .kcol round-trip checks."""

import random

import pytest

from cherry_ramsey.core import (
    ColoredComplete,
    IncompleteColoring,
    ParseError,
    TargetKind,
    TargetSpec,
    Witness,
    all_edges,
    color_class,
    edge_count,
    edge_index,
    new_coloring,
    parse,
    parse_target,
    parse_target_list,
    serialize,
    witness_is_valid,
)
from helpers import coloring_from_classes, random_coloring


def test_edge_index_is_colex():
    order = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4)]
    for i, (u, v) in enumerate(order):
        assert edge_index(u, v) == i
        assert edge_index(v, u) == i
    assert list(all_edges(4)) == order[:6]


def test_new_coloring_slot_counts():
    assert len(new_coloring(3, 2).colors) == 3
    assert len(new_coloring(1, 1).colors) == 0
    assert len(new_coloring(5, 3).colors) == 10
    assert not new_coloring(3, 2).is_complete()


def test_coloring_rejects_bad_parameters():
    with pytest.raises(ValueError):
        new_coloring(0, 1)
    with pytest.raises(ValueError):
        new_coloring(3, 0)
    with pytest.raises(ValueError):
        ColoredComplete(3, 2, (1, 2, 3))  # color 3 out of range
    with pytest.raises(ValueError):
        ColoredComplete(3, 2, (1, 2))  # wrong slot count


def test_color_of_and_with_color():
    c = new_coloring(4, 2)
    c = c.with_color(1, 3, 2)
    assert c.color_of(1, 3) == 2
    assert c.color_of(3, 1) == 2
    assert c.color_of(0, 1) == 0
    with pytest.raises(ValueError):
        c.color_of(1, 1)
    with pytest.raises(ValueError):
        c.color_of(0, 4)


def test_serialize_k2_exact():
    c = ColoredComplete(2, 1, (1,))
    assert serialize(c) == "2 1\n0 1 1\n"


def test_serialize_requires_complete():
    with pytest.raises(IncompleteColoring):
        serialize(new_coloring(3, 2))


def test_roundtrip_random_colorings():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 12)
        k = rng.randint(1, 6)
        c = random_coloring(n, k, rng)
        assert parse(serialize(c)) == c


def test_parse_accepts_any_edge_order():
    text = "3 2\n1 2 2\n0 1 1\n0 2 1\n"
    c = parse(text)
    assert c.color_of(1, 2) == 2
    assert c.color_of(0, 1) == 1


@pytest.mark.parametrize(
    "text",
    [
        "",                                   # empty
        "3\n",                                # short header
        "x y\n",                              # junk header
        "0 1\n",                              # no vertices
        "2 1\n0 0 1\n",                       # self loop
        "2 1\n1 0 1\n",                       # u >= v
        "2 1\n0 1 1\n0 1 1\n",                # duplicate pair and wrong count
        "3 1\n0 1 1\n0 2 1\n0 2 1\n",         # duplicate pair, right count
        "2 1\n0 1 2\n",                       # color out of range
        "2 1\n0 1 0\n",                       # color zero
        "2 1\n0 2 1\n",                       # vertex out of range
        "3 1\n0 1 1\n",                       # too few lines
        "2 1\n0 1 1\n1 2\n",                  # malformed line
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse(text)


def test_color_class_triangle():
    c = ColoredComplete(3, 2, (1, 1, 2))
    g1 = color_class(c, 1)
    g2 = color_class(c, 2)
    assert g1.edges() == [(0, 1), (0, 2)]
    assert g2.edges() == [(1, 2)]
    assert g1.degree(0) == 2
    with pytest.raises(ValueError):
        color_class(c, 3)


def test_color_class_requires_complete():
    with pytest.raises(IncompleteColoring):
        color_class(new_coloring(3, 2), 1)


def test_color_classes_partition_edge_set():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(2, 10)
        k = rng.randint(1, 5)
        c = random_coloring(n, k, rng)
        total = sum(color_class(c, i).n_edges() for i in range(1, k + 1))
        assert total == edge_count(n)


def test_parse_target_grammar():
    assert parse_target("2P3") == TargetSpec(TargetKind.PATH_MATCHING_P3, 2)
    assert parse_target("P3") == TargetSpec(TargetKind.PATH_MATCHING_P3, 1)
    assert parse_target("3P2") == TargetSpec(TargetKind.MATCHING, 3)
    assert parse_target("C6") == TargetSpec(TargetKind.CYCLE, 6)
    assert parse_target("1K1s2") == TargetSpec(TargetKind.STAR_FOREST, 1, 2)
    assert parse_target("2K1s3") == TargetSpec(TargetKind.STAR_FOREST, 2, 3)
    assert parse_target_list("2P3,P3,P3") == (
        TargetSpec(TargetKind.PATH_MATCHING_P3, 2),
        TargetSpec(TargetKind.PATH_MATCHING_P3, 1),
        TargetSpec(TargetKind.PATH_MATCHING_P3, 1),
    )
    for bad in ["", "Q7", "C2", "0P3", "K1s0", "P35x"]:
        with pytest.raises(ValueError):
            parse_target(bad)


def test_target_spec_validation():
    with pytest.raises(ValueError):
        TargetSpec(TargetKind.PATH_MATCHING_P3, 0)
    with pytest.raises(ValueError):
        TargetSpec(TargetKind.CYCLE, 2)
    with pytest.raises(ValueError):
        TargetSpec(TargetKind.STAR_FOREST, 1)  # missing arity
    with pytest.raises(ValueError):
        TargetSpec(TargetKind.MATCHING, 1, star_arity=2)


def test_witness_is_valid_by_kind():
    # K5: color 2 on the 5-cycle 0-1-2-3-4-0, color 1 elsewhere
    cyc = [(i, (i + 1) % 5) for i in range(5)]
    c = coloring_from_classes(5, 2, {2: cyc})
    t_cycle = TargetSpec(TargetKind.CYCLE, 5)
    assert witness_is_valid(c, 2, t_cycle, Witness(TargetKind.CYCLE, ((0, 1, 2, 3, 4),)))
    assert not witness_is_valid(c, 1, t_cycle, Witness(TargetKind.CYCLE, ((0, 1, 2, 3, 4),)))

    t_p3 = TargetSpec(TargetKind.PATH_MATCHING_P3, 1)
    assert witness_is_valid(c, 2, t_p3, Witness(TargetKind.PATH_MATCHING_P3, ((0, 1, 2),)))
    # (0, 2, 4) is a cherry of color 1 (chords), not color 2
    assert not witness_is_valid(c, 2, t_p3, Witness(TargetKind.PATH_MATCHING_P3, ((0, 2, 4),)))
    assert witness_is_valid(c, 1, t_p3, Witness(TargetKind.PATH_MATCHING_P3, ((0, 2, 4),)))
    # wrong copy count
    assert not witness_is_valid(c, 2, TargetSpec(TargetKind.PATH_MATCHING_P3, 2),
                                Witness(TargetKind.PATH_MATCHING_P3, ((0, 1, 2),)))
    # overlapping copies rejected
    two = TargetSpec(TargetKind.MATCHING, 2)
    assert not witness_is_valid(c, 2, two, Witness(TargetKind.MATCHING, ((0, 1), (1, 2))))
    assert witness_is_valid(c, 2, two, Witness(TargetKind.MATCHING, ((0, 1), (2, 3))))

    t_star = TargetSpec(TargetKind.STAR_FOREST, 1, 2)
    assert witness_is_valid(c, 2, t_star, Witness(TargetKind.STAR_FOREST, ((1, 0, 2),)))
    assert not witness_is_valid(c, 2, t_star, Witness(TargetKind.STAR_FOREST, ((0, 2, 3),)))
