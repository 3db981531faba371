import pytest

from zipseq import ScriptedLevels, focus, from_elements


def figure_tree():
    """The worked-example tree over z..e with levels 4 6 1 2 5 3."""
    t, _ = from_elements(list("zabcyde"), ScriptedLevels([4, 6, 1, 2, 5, 3]))
    return t


# the same tree written out node by node: (level, count, left, right), (elem,)
FIGURE_TREE = (
    6, 7,
    (4, 2, ("z",), ("a",)),
    (5, 5,
     (2, 3, (1, 2, ("b",), ("c",)), ("y",)),
     (3, 2, ("d",), ("e",))),
)


@pytest.fixture
def t0():
    return figure_tree()


@pytest.fixture
def z0(t0):
    """The example zipper: focused on y (position 4)."""
    return focus(t0, 4)
