"""Persistent sequence as a zipper over a probabilistically balanced tree.

A sequence lives in one of two forms:

* an unfocused *tree* -- leaves hold the elements, each internal node
  carries a level (its height rank) and a cached element count;
* a focused *zip* -- a cursor element between two *tlists*, heterogeneous
  stacks of elements, levels and whole unfocused subtrees.

``focus`` turns a tree into a zip at a given index in O(depth);
``unfocus`` rebuilds the tree.  Edits at the cursor (insert, remove,
replace, move) are constant or amortized-constant time.  The tree shape
is a pure function of the stored element/level arrangement, never of the
operation order, so re-unfocusing after cursor motion reproduces the
identical structure.

Node representations are plain tuples, chosen for allocation speed and
free structural equality:

* tree:   ``None`` (empty) | ``(elem,)`` (leaf) | ``(level, count, left, right)``
* tlist:  ``None`` | ``(CONS, elem, rest)`` | ``(LEVEL, level, rest)``
          | ``(TREE, tree, rest)``
* zip:    ``(left_tlist, focus_elem, right_tlist)``

The left tlist is stored cursor-outward: its head is the entry nearest
the cursor.  All values are immutable; every operation returns a new
version sharing structure with the old one.
"""

from __future__ import annotations

from .levels import draw_level

# directions
L = "L"
R = "R"

# tlist cell tags
CONS = 0
LEVEL = 1
TREE = 2

NIL = None


class SequenceError(Exception):
    """Base class for sequence/zipper errors."""


class OutOfBoundsError(SequenceError):
    """Focus index outside the sequence."""


class EmptySideError(SequenceError):
    """An edit needed an adjacent element on a side that has none."""


class MalformedTreeError(SequenceError):
    """A structurally invalid tree was encountered."""


class EmptyInputError(SequenceError):
    """An operation that needs at least one element got none."""


class StepCounter:
    """Per-call accumulator for operation-count instrumentation.

    Passed explicitly into the operations that accept it; never global.
    ``steps`` counts primitive structural steps (descents, appends,
    node deconstructions) as defined by each operation.
    """

    __slots__ = ("steps",)

    def __init__(self):
        self.steps = 0

    def reset(self):
        n = self.steps
        self.steps = 0
        return n


# ---------------------------------------------------------------------------
# constructors

def leaf(elem):
    return (elem,)


def branch(level, count, left, right):
    return (level, count, left, right)


def cons(elem, rest):
    return (CONS, elem, rest)


def lev(level, rest):
    return (LEVEL, level, rest)


def tree_cell(tree, rest):
    return (TREE, tree, rest)


def singleton(elem):
    """Zipper holding exactly one element."""
    return (NIL, elem, NIL)


# ---------------------------------------------------------------------------
# tree basics

def elm_count(t):
    """Number of elements in a tree, from cached counts in O(1)."""
    if t is None:
        return 0
    if len(t) == 1:
        return 1
    return t[1]


def to_elements(t):
    """In-order element list of a tree (iterative; safe on deep trees)."""
    out = []
    push = out.append
    stack = [t]
    pop = stack.pop
    add = stack.append
    while stack:
        x = pop()
        if x is None:
            continue
        if len(x) == 1:
            push(x[0])
        else:
            add(x[3])
            add(x[2])
    return out


def tree_levels(t):
    """In-order list of the levels stored in a tree."""
    out = []
    emit = out.append
    work = [(t, False)]
    while work:
        x, is_level = work.pop()
        if is_level:
            emit(x)
        elif x is None or len(x) == 1:
            continue
        else:
            work.append((x[3], False))
            work.append((x[0], True))
            work.append((x[2], False))
    return out


# ---------------------------------------------------------------------------
# focus

def focus(t, p, counter=None):
    """Zipper focused on the p-th element (0-based) of tree ``t``.

    Descends one root-to-leaf path; each bypassed subtree goes, with the
    level of the node it hung from, onto the list for its side.  The
    smallest bypassed subtrees end up nearest the cursor.
    """
    c = elm_count(t)
    if p >= c or p < 0:
        raise OutOfBoundsError("out of bounds")
    l = r = None
    steps = 0
    while True:
        if t is None:
            raise MalformedTreeError("internal Nil")
        if len(t) == 1:
            if counter is not None:
                counter.steps += steps
            return (l, t[0], r)
        steps += 1
        level, _, bl, br = t
        cl = 0 if bl is None else (1 if len(bl) == 1 else bl[1])
        if p < cl:
            r = (LEVEL, level, (TREE, br, r))
            t = bl
        else:
            l = (LEVEL, level, (TREE, bl, l))
            p -= cl
            t = br


# ---------------------------------------------------------------------------
# append

def append(t1, t2, counter=None):
    """Join two trees so traversal visits all of ``t1`` then all of ``t2``.

    Descends the facing spines, keeping the higher-level root on top
    (ties go to ``t1``), so higher levels stay higher in the result.
    Counts are recomputed as sums on the way out.
    """
    if counter is not None:
        counter.steps += 1
    if t1 is None:
        return t2
    if t2 is None:
        return t1
    leaf1 = len(t1) == 1
    leaf2 = len(t2) == 1
    tot = (1 if leaf1 else t1[1]) + (1 if leaf2 else t2[1])
    if leaf1:
        if leaf2:
            raise MalformedTreeError("leaf-leaf should not arise")
        lv, _, l, r = t2
        return (lv, tot, append(t1, l, counter), r)
    if leaf2:
        lv, _, l, r = t1
        return (lv, tot, l, append(r, t2, counter))
    lv1 = t1[0]
    lv2 = t2[0]
    if lv1 >= lv2:
        return (lv1, tot, t1[2], append(t1[3], t2, counter))
    return (lv2, tot, append(t1, t2[2], counter), t2[3])


# ---------------------------------------------------------------------------
# tlist primitives

def head_as_tree(tl):
    """Tree form of a tlist's head constructor.

    An element becomes a leaf, a level becomes an empty branch shell
    (filled in by later appends), a tree is itself, Nil maps to Nil.
    """
    if tl is None:
        return None
    tag, payload, _ = tl
    if tag == CONS:
        return (payload,)
    if tag == LEVEL:
        return (payload, 0, None, None)
    return payload


def tail_tlist(tl):
    """Drop one head constructor."""
    if tl is None:
        raise EmptyInputError("empty tlist")
    return tl[2]


def trim(d, tl, counter=None):
    """Expose the sequence element nearest the head of ``tl`` on side ``d``.

    If the head is not a tree the list is returned unchanged.  Otherwise
    the head tree is deconstructed along its d-most spine (rightmost for
    L, leftmost for R), pushing bypassed branches and levels back into
    the list, until the nearest element surfaces as a Cons.
    """
    if tl is None or tl[0] != TREE:
        return tl
    h1 = tl[1]
    t1 = tl[2]
    while True:
        if counter is not None:
            counter.steps += 1
        if h1 is None:
            raise MalformedTreeError("malformed tree")
        if len(h1) == 1:
            return (CONS, h1[0], t1)
        level, _, bl, br = h1
        if d == L:
            t1 = (LEVEL, level, (TREE, bl, t1))
            h1 = br
        else:
            t1 = (LEVEL, level, (TREE, br, t1))
            h1 = bl


# ---------------------------------------------------------------------------
# grow / unfocus

def grow(d, tl, counter=None):
    """Fold a tlist back into one tree by repeated appends.

    Each entry is lifted with ``head_as_tree`` and appended on side ``d``
    of the accumulator (L: new tree to the left, R: to the right), so a
    left list -- stored cursor-outward -- comes out in sequence order.
    """
    if tl is None:
        return None
    h1 = head_as_tree(tl)
    t1 = tl[2]
    if d == L:
        while t1 is not None:
            if counter is not None:
                counter.steps += 1
            h1 = append(head_as_tree(t1), h1, counter)
            t1 = t1[2]
    else:
        while t1 is not None:
            if counter is not None:
                counter.steps += 1
            h1 = append(h1, head_as_tree(t1), counter)
            t1 = t1[2]
    return h1


def _grow_fused(d, tl, counter=None):
    """``grow`` with the dominant append shapes constructed directly.

    Focus-produced lists alternate Level/Tree with levels non-decreasing
    outward, so almost every append in the fold reduces to attaching one
    subtree under a fresh shell.  Each such attachment is built in one
    step here; anything not matching the guard falls back to ``append``.
    Produces trees identical to ``grow``.
    """
    if tl is None:
        return None
    count = counter is not None
    tag, payload, t1 = tl
    if tag == CONS:
        h1 = (payload,)
    elif tag == LEVEL:
        h1 = (payload, 0, None, None)
    else:
        h1 = payload
    if d == L:
        while t1 is not None:
            if count:
                counter.steps += 1
            tag, payload, t1 = t1
            if tag == LEVEL:
                if h1 is None:
                    h1 = (payload, 0, None, None)
                elif len(h1) == 1:
                    h1 = (payload, 1, None, h1)
                elif payload >= h1[0]:
                    h1 = (payload, h1[1], None, h1)
                else:
                    h1 = append((payload, 0, None, None), h1, counter)
            elif tag == TREE:
                t = payload
                if t is None:
                    continue
                if (h1 is not None and len(h1) == 4 and h1[2] is None
                        and (len(t) == 1 or t[0] < h1[0])):
                    tc = 1 if len(t) == 1 else t[1]
                    h1 = (h1[0], tc + h1[1], t, h1[3])
                else:
                    h1 = append(t, h1, counter)
            else:
                if h1 is None:
                    h1 = (payload,)
                elif len(h1) == 4 and h1[2] is None:
                    h1 = (h1[0], h1[1] + 1, (payload,), h1[3])
                else:
                    h1 = append((payload,), h1, counter)
    else:
        while t1 is not None:
            if count:
                counter.steps += 1
            tag, payload, t1 = t1
            if tag == LEVEL:
                if h1 is None:
                    h1 = (payload, 0, None, None)
                elif len(h1) == 1:
                    h1 = (payload, 1, h1, None)
                elif payload > h1[0]:
                    h1 = (payload, h1[1], h1, None)
                else:
                    h1 = append(h1, (payload, 0, None, None), counter)
            elif tag == TREE:
                t = payload
                if t is None:
                    continue
                if (h1 is not None and len(h1) == 4 and h1[3] is None
                        and (len(t) == 1 or t[0] <= h1[0])):
                    tc = 1 if len(t) == 1 else t[1]
                    h1 = (h1[0], tc + h1[1], h1[2], t)
                else:
                    h1 = append(h1, t, counter)
            else:
                if h1 is None:
                    h1 = (payload,)
                elif len(h1) == 4 and h1[3] is None:
                    h1 = (h1[0], h1[1] + 1, h1[2], (payload,))
                else:
                    h1 = append(h1, (payload,), counter)
    return h1


def unfocus(z, counter=None):
    """Tree whose traversal is the zipper's sequence, levels preserved."""
    l, e, r = z
    return append(_grow_fused(L, l, counter),
                  append((e,), _grow_fused(R, r, counter), counter),
                  counter)


# ---------------------------------------------------------------------------
# edits

def insert(d, ne, z, src):
    """Insert ``ne`` adjacent to the cursor on side ``d``; O(1).

    A fresh level is drawn to fill the new gap between ``ne`` and the
    cursor.  Returns the new zipper and the advanced level source.
    """
    level, src = draw_level(src)
    l, e, r = z
    if d == L:
        return ((LEVEL, level, (CONS, ne, l)), e, r), src
    return (l, e, (LEVEL, level, (CONS, ne, r))), src


def remove(d, z, counter=None):
    """Remove the element nearest the cursor on side ``d``.

    Every level passed on the way to that element is dropped with it;
    trees are trimmed as needed.  The cursor is unchanged.
    """
    l, e, r = z
    s = l if d == L else r
    while True:
        if s is None:
            raise EmptySideError("no elements")
        tag = s[0]
        if counter is not None:
            counter.steps += 1
        if tag == CONS:
            s = s[2]
            break
        if tag == LEVEL:
            s = s[2]
        else:
            s = trim(d, s, counter)
    if d == L:
        return (s, e, r)
    return (l, e, s)


def view(d, z):
    """Element adjacent to the cursor on side ``d``, without restructuring.

    Walks read-only: levels are skipped, a head tree is descended along
    its d-most spine to the nearest leaf.
    """
    s = z[0] if d == L else z[2]
    while s is not None:
        tag, payload, rest = s
        if tag == CONS:
            return payload
        if tag == LEVEL:
            s = rest
            continue
        t = payload
        if t is None:
            s = rest
            continue
        while len(t) != 1:
            t = t[3] if d == L else t[2]
            if t is None:
                raise MalformedTreeError("malformed tree")
        return t[0]
    raise EmptySideError("no elements")


def view_cursor(z):
    """The focused element."""
    return z[1]


def replace(d, ne, z):
    """Replace the element adjacent to the cursor on side ``d``.

    All levels are kept in place: the walk trims through trees, swaps
    the first exposed element, and reattaches the levels it crossed.
    """
    l, e, r = z
    s = l if d == L else r
    kept = []
    while True:
        if s is None:
            raise EmptySideError("no elements")
        tag = s[0]
        if tag == CONS:
            s = (CONS, ne, s[2])
            break
        if tag == LEVEL:
            kept.append(s[1])
            s = s[2]
        else:
            s = trim(d, s)
    for level in reversed(kept):
        s = (LEVEL, level, s)
    if d == L:
        return (s, e, r)
    return (l, e, s)


def replace_cursor(ne, z):
    """Replace the focused element; O(1)."""
    return (z[0], ne, z[2])


def move(d, z, counter=None):
    """Shift the cursor one element in direction ``d``.

    The displaced focus crosses to the other side together with the
    level that separated it from the new focus, so no level is lost and
    ``unfocus`` of the result is structurally identical to ``unfocus``
    of the input.
    """
    l, e, r = z
    s = l if d == L else r
    crossed = None  # levels between old and new focus, innermost last
    while True:
        if s is None:
            raise EmptySideError("no elements")
        tag = s[0]
        if counter is not None:
            counter.steps += 1
        if tag == CONS:
            new_focus = s[1]
            s = s[2]
            break
        if tag == LEVEL:
            if crossed is None:
                crossed = [s[1]]
            else:
                crossed.append(s[1])
            s = s[2]
        else:
            s = trim(d, s, counter)
    other = r if d == L else l
    other = (CONS, e, other)
    if crossed is not None:
        for level in crossed:
            other = (LEVEL, level, other)
    if d == L:
        return (s, new_focus, other)
    return (other, new_focus, s)


# ---------------------------------------------------------------------------
# whole-sequence construction / inspection

def from_elements(elems, src):
    """Canonical tree over ``elems`` with one drawn level between each pair.

    Equivalent to folding the sequence together with ``append`` (and to
    ``unfocus`` of any zipper holding the same arrangement), built here
    with a monotone spine stack in O(n).  Returns the tree and the
    advanced level source.
    """
    it = iter(elems)
    try:
        first = next(it)
    except StopIteration:
        raise EmptyInputError("empty sequence") from None
    # stack frames: (level, left_subtree) open along the right spine,
    # levels strictly decreasing from bottom to top of the stack
    stack = []
    push = stack.append
    cur = (first,)
    for e in it:
        level, src = draw_level(src)
        # close frames that the new, higher level must sit above;
        # ties stay open so the leftmost equal level ends up on top
        while stack and stack[-1][0] < level:
            flv, lt = stack.pop()
            cur = (flv, (1 if len(lt) == 1 else lt[1]) +
                   (1 if len(cur) == 1 else cur[1]), lt, cur)
        push((level, cur))
        cur = (e,)
    while stack:
        flv, lt = stack.pop()
        cur = (flv, (1 if len(lt) == 1 else lt[1]) +
               (1 if len(cur) == 1 else cur[1]), lt, cur)
    return cur, src


def zip_elements(z):
    """Sequence represented by a zipper, as a list."""
    l, e, r = z
    parts = []
    s = l
    while s is not None:
        tag, payload, s = s
        if tag == CONS:
            parts.append((payload,))
        elif tag == TREE and payload is not None:
            parts.append(to_elements(payload))
    out = []
    for part in reversed(parts):
        out.extend(part)
    out.append(e)
    s = r
    while s is not None:
        tag, payload, s = s
        if tag == CONS:
            out.append(payload)
        elif tag == TREE and payload is not None:
            out.extend(to_elements(payload))
    return out


def cursor_index(z):
    """Number of elements left of the focus (the focus's sequence index)."""
    n = 0
    s = z[0]
    while s is not None:
        tag, payload, s = s
        if tag == CONS:
            n += 1
        elif tag == TREE and payload is not None:
            n += 1 if len(payload) == 1 else payload[1]
    return n
