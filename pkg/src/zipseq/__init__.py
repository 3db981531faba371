"""zipseq: persistent sequences as a zipper over balanced trees.

Constant-time edits at a movable cursor, logarithmic random access,
full structure sharing between versions.  See ``zipseq.core`` for the
data structure, ``zipseq.oracle`` and ``zipseq.checker`` for the
differential-testing machinery, ``zipseq.bench`` for the benchmark
harness and ``zipseq.cli`` for the command line.
"""

from .core import (
    CONS,
    LEVEL,
    NIL,
    TREE,
    EmptyInputError,
    EmptySideError,
    L,
    MalformedTreeError,
    OutOfBoundsError,
    R,
    SequenceError,
    StepCounter,
    append,
    branch,
    cons,
    cursor_index,
    elm_count,
    focus,
    from_elements,
    grow,
    head_as_tree,
    insert,
    leaf,
    lev,
    move,
    remove,
    replace,
    replace_cursor,
    singleton,
    tail_tlist,
    to_elements,
    tree_cell,
    tree_levels,
    trim,
    unfocus,
    view,
    view_cursor,
    zip_elements,
)
from .levels import (
    LevelSource,
    LevelSourceError,
    ScriptedLevels,
    SeededLevels,
    draw_level,
    level_of_hash,
)
from .oracle import NaiveSeq, naive_apply

__version__ = "0.1.0"
