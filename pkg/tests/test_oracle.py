import pytest

from zipseq import (
    EmptyInputError,
    EmptySideError,
    L,
    NaiveSeq,
    OutOfBoundsError,
    R,
    naive_apply,
)
from zipseq.oracle import naive_view


@pytest.fixture
def s0():
    return NaiveSeq(list("zabcyde"), cursor=4)


def test_remove_left_of_cursor(s0):
    got = naive_apply(s0, ("remove", L))
    assert got.elems == list("zabyde")
    assert got.cursor == 3


def test_remove_right_of_cursor(s0):
    got = naive_apply(s0, ("remove", R))
    assert got.elems == list("zabcye")
    assert got.cursor == 4


def test_insert_left_shifts_cursor(s0):
    got = naive_apply(s0, ("insert", L, "x"))
    assert got.elems == list("zabcxyde")
    assert got.cursor == 5
    assert got.elems[got.cursor] == "y"


def test_insert_right_keeps_cursor(s0):
    got = naive_apply(s0, ("insert", R, "x"))
    assert got.elems == list("zabcyxde")
    assert got.cursor == 4


def test_replace_cursor(s0):
    got = naive_apply(s0, ("replace_cursor", "w"))
    assert got.elems[4] == "w"
    assert got.cursor == 4


def test_replace_adjacent(s0):
    assert naive_apply(s0, ("replace", L, "w")).elems == list("zabwyde")
    assert naive_apply(s0, ("replace", R, "w")).elems == list("zabcywe")


def test_move(s0):
    assert naive_apply(s0, ("move", L)).cursor == 3
    assert naive_apply(s0, ("move", R)).cursor == 5


def test_focus_sets_cursor(s0):
    assert naive_apply(s0, ("focus", 0)).cursor == 0


def test_unfocus_is_identity(s0):
    assert naive_apply(s0, ("unfocus",)) is s0


def test_views(s0):
    assert naive_view(s0, L) == "c"
    assert naive_view(s0, R) == "d"
    assert naive_apply(s0, ("view", L)) is s0


def test_value_semantics(s0):
    naive_apply(s0, ("remove", L))
    naive_apply(s0, ("insert", R, "q"))
    naive_apply(s0, ("replace_cursor", "w"))
    assert s0.elems == list("zabcyde")
    assert s0.cursor == 4


def test_error_classes_match_zipper():
    one = NaiveSeq(["e"])
    with pytest.raises(EmptySideError, match="no elements"):
        naive_apply(one, ("remove", L))
    with pytest.raises(EmptySideError, match="no elements"):
        naive_apply(one, ("move", R))
    with pytest.raises(EmptySideError, match="no elements"):
        naive_apply(one, ("view", L))
    with pytest.raises(EmptySideError, match="no elements"):
        naive_apply(one, ("replace", R, "w"))
    with pytest.raises(OutOfBoundsError, match="out of bounds"):
        naive_apply(one, ("focus", 1))
    with pytest.raises(EmptyInputError, match="empty sequence"):
        NaiveSeq([])


def test_edge_positions():
    s = NaiveSeq([1, 2, 3], cursor=0)
    with pytest.raises(EmptySideError):
        naive_apply(s, ("remove", L))
    end = NaiveSeq([1, 2, 3], cursor=2)
    with pytest.raises(EmptySideError):
        naive_apply(end, ("remove", R))
    assert naive_apply(end, ("remove", L)).elems == [1, 3]
