from hypothesis import given

from grothpos.shapes import (
    EMPTY,
    ExtendedSkewShape,
    Partition,
    conjugate,
    extended_stats,
    format_partition,
    inner_corners,
    outer_corners,
    parse_partition,
    partition_key,
    partitions_upto,
    skew_cells,
    staircase,
    strip_classify,
)

from strategies import nested_pair, partitions_of_size_at_most


def test_conjugate_examples():
    assert conjugate(EMPTY) == EMPTY
    assert conjugate((5, 3, 3, 1)) == (4, 3, 3, 1, 1)
    assert conjugate((3,)) == (1, 1, 1)


def test_inner_corners_examples():
    assert inner_corners(Partition((4, 3, 2))) == {(1, 4), (2, 3), (3, 2)}
    assert inner_corners(EMPTY) == set()
    assert inner_corners(Partition((2, 2))) == {(2, 2)}


def test_outer_corners_examples():
    assert outer_corners(EMPTY) == {(1, 1)}
    assert outer_corners(Partition((2, 1))) == {(1, 3), (2, 2), (3, 1)}
    assert outer_corners(Partition((2, 2))) == {(1, 3), (3, 1)}


def test_strip_classify_examples():
    assert strip_classify((5, 3, 3, 1), (4, 3, 2)).kind == "rook"
    info = strip_classify((3,), (1,))
    assert info.horizontal and not info.vertical and info.kind == "horizontal"
    assert strip_classify((2, 2), (1,)).kind == "general"
    assert strip_classify((1,), (2,)).kind == "not_contained"


def test_extended_stats_examples():
    st = extended_stats(ExtendedSkewShape((5, 3, 3, 1), (4, 3, 2)))
    assert (st.a, st.boxes) == (2, 3)
    assert extended_stats(ExtendedSkewShape((3, 2))).a == 0
    # the corner (1,1) sits in a column the skew box (1,2) does not use
    assert extended_stats(ExtendedSkewShape((2,), (1,))).a == 1


def test_staircase():
    assert staircase(0) == EMPTY
    assert staircase(3) == (3, 2, 1)
    assert staircase(1) == (1,)


def test_partition_canonical_form():
    assert Partition((2, 1, 0, 0)) == (2, 1)
    assert parse_partition("-") == EMPTY
    assert parse_partition("5,3,3,1") == (5, 3, 3, 1)
    assert format_partition(EMPTY) == "-"
    assert format_partition((2, 1)) == "2,1"


def test_partition_order_is_graded_revlex():
    ordered = sorted(partitions_upto(3), key=partition_key)
    assert ordered == [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]


@given(partitions_of_size_at_most(8))
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam


def test_corner_counts_exhaustive():
    for lam in partitions_upto(8):
        assert len(outer_corners(lam)) == len(inner_corners(lam)) + 1
        assert len(inner_corners(lam)) == len(set(lam))


def test_rook_implies_both_strips_exhaustive():
    for lam in partitions_upto(6):
        for mu in partitions_upto(lam.size):
            info = strip_classify(lam, mu)
            if info.rook:
                assert info.horizontal and info.vertical


@given(nested_pair(6))
def test_column_count_identity(pair):
    outer, inner = pair
    shape = ExtendedSkewShape(outer, inner)
    st = extended_stats(shape)
    all_cols = {j for _, j in shape.cells()}
    assert st.a + st.c == len(all_cols)
    assert st.boxes == len(skew_cells(outer, inner))
