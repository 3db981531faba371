"""Naive reference sequence for differential testing.

``NaiveSeq`` keeps the whole sequence in one contiguous Python list with
an explicit cursor index, and applies every edit by copying -- O(n) per
edit, pure value semantics.  It mirrors the zipper API operation for
operation so that the same edit script can drive both structures and
the results compared after every step.  It raises the same error
classes the zipper raises for the same out-of-bounds situations.
"""

from __future__ import annotations

from .core import EmptyInputError, EmptySideError, L, OutOfBoundsError, R


class NaiveSeq:
    """Immutable list-plus-cursor sequence; every edit returns a new value."""

    __slots__ = ("elems", "cursor")

    def __init__(self, elems, cursor=0):
        self.elems = list(elems)
        self.cursor = cursor
        if not self.elems:
            raise EmptyInputError("empty sequence")
        if cursor < 0 or cursor >= len(self.elems):
            raise OutOfBoundsError("out of bounds")

    def __eq__(self, other):
        return (isinstance(other, NaiveSeq)
                and self.elems == other.elems and self.cursor == other.cursor)

    def __repr__(self):
        return f"NaiveSeq({self.elems!r}, cursor={self.cursor})"


def naive_apply(s, op):
    """Apply one edit-script operation, returning a new ``NaiveSeq``.

    ``op`` is a tagged tuple as produced by ``checker.random_script``:
    ("singleton", e), ("from_elements", elems), ("focus", p),
    ("insert", d, e), ("remove", d), ("replace", d, e),
    ("replace_cursor", e), ("move", d), ("view", d), ("view_cursor",)
    or ("unfocus",).  View operations and unfocus return ``s`` itself.
    """
    kind = op[0]
    if kind == "insert":
        d, e = op[1], op[2]
        elems = list(s.elems)
        c = s.cursor
        if d == L:
            elems.insert(c, e)
            return NaiveSeq(elems, c + 1)
        elems.insert(c + 1, e)
        return NaiveSeq(elems, c)
    if kind == "remove":
        d = op[1]
        c = s.cursor
        if d == L:
            if c == 0:
                raise EmptySideError("no elements")
            elems = list(s.elems)
            del elems[c - 1]
            return NaiveSeq(elems, c - 1)
        if c >= len(s.elems) - 1:
            raise EmptySideError("no elements")
        elems = list(s.elems)
        del elems[c + 1]
        return NaiveSeq(elems, c)
    if kind == "move":
        d = op[1]
        c = s.cursor
        if d == L:
            if c == 0:
                raise EmptySideError("no elements")
            return NaiveSeq(s.elems, c - 1)
        if c >= len(s.elems) - 1:
            raise EmptySideError("no elements")
        return NaiveSeq(s.elems, c + 1)
    if kind == "replace":
        d, e = op[1], op[2]
        c = s.cursor
        i = c - 1 if d == L else c + 1
        if i < 0 or i >= len(s.elems):
            raise EmptySideError("no elements")
        elems = list(s.elems)
        elems[i] = e
        return NaiveSeq(elems, c)
    if kind == "replace_cursor":
        elems = list(s.elems)
        elems[s.cursor] = op[1]
        return NaiveSeq(elems, s.cursor)
    if kind == "focus":
        p = op[1]
        if p < 0 or p >= len(s.elems):
            raise OutOfBoundsError("out of bounds")
        return NaiveSeq(s.elems, p)
    if kind in ("view", "view_cursor", "unfocus"):
        if kind == "view":
            i = s.cursor - 1 if op[1] == L else s.cursor + 1
            if i < 0 or i >= len(s.elems):
                raise EmptySideError("no elements")
        return s
    if kind == "singleton":
        return NaiveSeq([op[1]], 0)
    if kind == "from_elements":
        return NaiveSeq(list(op[1]), 0)
    raise ValueError(f"unknown op: {op!r}")


def naive_view(s, d):
    """Element adjacent to the cursor, matching ``core.view``."""
    i = s.cursor - 1 if d == L else s.cursor + 1
    if i < 0 or i >= len(s.elems):
        raise EmptySideError("no elements")
    return s.elems[i]
