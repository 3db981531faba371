"""Structural checking, differential fuzzing and operation counting.

This module owns the edit-script vocabulary (tagged tuples), verifies
tree invariants, replays seeded random scripts against both the zipper
and the naive oracle, and measures the step counts and depth statistics
that back the library's complexity claims.  All failures are reported
as data (violations), never raised, so a fuzzing run always completes
and every finding is replayable from its seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from . import core, oracle
from .core import L, R, StepCounter
from .levels import SeededLevels, level_stream, mix64

# Edit ops are tagged tuples:
#   ("singleton", e)           ("from_elements", (e0, e1, ...))
#   ("focus", p)               ("insert", d, e)
#   ("remove", d)              ("replace", d, e)
#   ("replace_cursor", e)      ("move", d)
#   ("view", d)                ("view_cursor",)
#   ("unfocus",)
# A script is a list of ops whose first entry is a construction
# (singleton or from_elements).

VIOLATION_COUNT = "count"
VIOLATION_ORDER = "canonical-order"
VIOLATION_NIL = "nil-child"
VIOLATION_SEQUENCE = "sequence"
VIOLATION_CURSOR = "cursor"


@dataclass
class Violation:
    script_id: int      # seed (or caller-chosen id) of the offending script
    op_index: int       # -1 for whole-tree checks outside any script
    invariant: str
    detail: str = ""

    def line(self):
        return f"seed={self.script_id} op={self.op_index} invariant={self.invariant}"


@dataclass
class CheckReport:
    """Outcome of one or more differential runs; merged with ``extend``."""

    scripts_run: int = 0
    violations: list = field(default_factory=list)
    depth_stats: tuple = ()          # (n, mean depth, max depth) when measured
    step_counts: dict = field(default_factory=dict)  # op kind -> {steps: freq}

    @property
    def ok(self):
        return not self.violations

    def extend(self, other):
        self.scripts_run += other.scripts_run
        self.violations.extend(other.violations)
        for kind, hist in other.step_counts.items():
            mine = self.step_counts.setdefault(kind, {})
            for steps, freq in hist.items():
                mine[steps] = mine.get(steps, 0) + freq

    def report_lines(self):
        return [v.line() for v in self.violations]


# ---------------------------------------------------------------------------
# structural invariants

def check_tree(t):
    """Violations in a tree: cached counts, level ordering, Nil children.

    Checks every branch node for count soundness (cached count equals
    the real number of leaves below), canonical level ordering (left
    subtree levels strictly below the node's, right subtree levels not
    above it) and the absence of Nil beneath a branch.  Returns a list
    of ``(invariant, detail)`` pairs; empty means the tree is sound.
    """
    violations = []
    if t is None:
        return violations
    # post-order walk computing (leaf count, max level) per subtree
    results = {}  # id(node) -> (count, max_level)
    stack = [(t, False)]
    while stack:
        node, processed = stack.pop()
        if node is None or len(node) == 1:
            continue
        if not processed:
            stack.append((node, True))
            stack.append((node[2], False))
            stack.append((node[3], False))
            continue
        level, cached, left, right = node

        def info(child):
            if child is None:
                return 0, None
            if len(child) == 1:
                return 1, None
            return results[id(child)]

        lc, lmax = info(left)
        rc, rmax = info(right)
        if left is None or right is None:
            violations.append((VIOLATION_NIL,
                               f"branch level {level} has a Nil child"))
        if cached != lc + rc:
            violations.append((VIOLATION_COUNT,
                               f"branch level {level} caches {cached}, has {lc + rc}"))
        if lmax is not None and lmax >= level:
            violations.append((VIOLATION_ORDER,
                               f"left subtree level {lmax} not below {level}"))
        if rmax is not None and rmax > level:
            violations.append((VIOLATION_ORDER,
                               f"right subtree level {rmax} above {level}"))
        own_max = level
        if lmax is not None and lmax > own_max:
            own_max = lmax
        if rmax is not None and rmax > own_max:
            own_max = rmax
        results[id(node)] = (lc + rc, own_max)
    return violations


def leaf_depths(t):
    """Depths of all leaves (root at 0); iterative."""
    out = []
    stack = [(t, 0)]
    while stack:
        node, d = stack.pop()
        if node is None:
            continue
        if len(node) == 1:
            out.append(d)
        else:
            stack.append((node[2], d + 1))
            stack.append((node[3], d + 1))
    return out


def depth_stats(n, trials, seed):
    """Mean and max leaf depth over ``trials`` seeded trees of ``n`` elements."""
    total = 0
    count = 0
    deepest = 0
    for trial in range(trials):
        t = build_tree(n, mix64(seed + trial))
        ds = leaf_depths(t)
        total += sum(ds)
        count += len(ds)
        m = max(ds)
        if m > deepest:
            deepest = m
    return total / count, deepest


def build_tree(n, seed):
    """Seeded n-element tree, same shape law as ``core.from_elements``."""
    if n < 1:
        raise core.EmptyInputError("empty sequence")
    levels = level_stream(seed)
    stack = []
    push = stack.append
    cur = (0,)
    for e in range(1, n):
        level = next(levels)
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
    return cur


# ---------------------------------------------------------------------------
# script generation

OP_WEIGHTS = {
    "insert": 0.30,
    "remove": 0.26,
    "move": 0.18,
    "replace": 0.07,
    "replace_cursor": 0.07,
    "view": 0.05,
    "view_cursor": 0.04,
    "refocus": 0.03,    # emitted as an unfocus/focus pair
}

_KINDS = tuple(OP_WEIGHTS)
_WEIGHTS = tuple(OP_WEIGHTS.values())


def random_script(seed, length, value_pool):
    """Deterministic in-bounds edit script: construction plus ``length`` ops.

    Ops are drawn from ``OP_WEIGHTS`` (a refocus draw emits the
    unfocus/focus pair); kinds that need an adjacent element pick a
    feasible direction against a tracked length/cursor model, and a
    kind with no feasible direction is redrawn.  The model keeps at
    least one element at all times, so every generated op is in-bounds.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    rng = random.Random(seed)
    size = rng.randint(8, 24)
    script = [("from_elements", tuple(rng.randrange(value_pool)
                                      for _ in range(size)))]
    script.append(("focus", rng.randrange(size)))
    cursor = script[-1][1]
    emitted = 0
    while emitted < length:
        kind = rng.choices(_KINDS, _WEIGHTS)[0]
        if kind == "insert":
            d = rng.choice((L, R))
            script.append(("insert", d, rng.randrange(value_pool)))
            size += 1
            if d == L:
                cursor += 1
        elif kind == "remove":
            d = _feasible_dir(rng, cursor, size)
            if d is None:
                continue
            script.append(("remove", d))
            size -= 1
            if d == L:
                cursor -= 1
        elif kind == "move":
            d = _feasible_dir(rng, cursor, size)
            if d is None:
                continue
            script.append(("move", d))
            cursor += -1 if d == L else 1
        elif kind == "replace":
            d = _feasible_dir(rng, cursor, size)
            if d is None:
                continue
            script.append(("replace", d, rng.randrange(value_pool)))
        elif kind == "replace_cursor":
            script.append(("replace_cursor", rng.randrange(value_pool)))
        elif kind == "view":
            d = _feasible_dir(rng, cursor, size)
            if d is None:
                continue
            script.append(("view", d))
        elif kind == "view_cursor":
            script.append(("view_cursor",))
        else:  # refocus
            script.append(("unfocus",))
            cursor = rng.randrange(size)
            script.append(("focus", cursor))
        emitted += 1
    return script


def _feasible_dir(rng, cursor, size):
    left_ok = cursor > 0
    right_ok = cursor < size - 1
    if left_ok and right_ok:
        return L if rng.random() < 0.5 else R
    if left_ok:
        return L
    if right_ok:
        return R
    return None


# ---------------------------------------------------------------------------
# differential execution

def differential_run(script, src, script_id=0, check_every_op=True):
    """Replay one script against both structures and compare throughout.

    After every op the zipper's element sequence must equal the naive
    oracle's, and (while focused) the cursor index must match; after
    every unfocus the rebuilt tree is handed to ``check_tree``.  Step
    counts per op kind are recorded into the report's histograms.
    """
    if not script or script[0][0] not in ("singleton", "from_elements"):
        raise ValueError("script must begin with a construction")
    report = CheckReport(scripts_run=1)
    violations = report.violations
    hists = report.step_counts
    counter = StepCounter()
    raz = None          # current zip when focused, else None
    tree = None         # current tree when unfocused, else None
    naive = None
    for i, op in enumerate(script):
        kind = op[0]
        counter.steps = 0
        if kind == "from_elements":
            tree, src = core.from_elements(op[1], src)
            raz = None
            naive = oracle.NaiveSeq(op[1])
        elif kind == "singleton":
            raz = core.singleton(op[1])
            tree = None
            naive = oracle.NaiveSeq([op[1]])
        elif kind == "focus":
            raz = core.focus(tree, op[1], counter)
            tree = None
            naive = oracle.naive_apply(naive, op)
        elif kind == "unfocus":
            tree = core.unfocus(raz, counter)
            raz = None
            for inv, detail in check_tree(tree):
                violations.append(Violation(script_id, i, inv, detail))
        elif kind == "insert":
            raz, src = core.insert(op[1], op[2], raz, src)
            naive = oracle.naive_apply(naive, op)
        elif kind == "remove":
            raz = core.remove(op[1], raz, counter)
            naive = oracle.naive_apply(naive, op)
        elif kind == "replace":
            raz = core.replace(op[1], op[2], raz)
            naive = oracle.naive_apply(naive, op)
        elif kind == "replace_cursor":
            raz = core.replace_cursor(op[1], raz)
            naive = oracle.naive_apply(naive, op)
        elif kind == "move":
            raz = core.move(op[1], raz, counter)
            naive = oracle.naive_apply(naive, op)
        elif kind == "view":
            got = core.view(op[1], raz)
            expect = oracle.naive_view(naive, op[1])
            if got != expect:
                violations.append(Violation(
                    script_id, i, VIOLATION_SEQUENCE,
                    f"view {op[1]} saw {got!r}, oracle {expect!r}"))
        elif kind == "view_cursor":
            got = core.view_cursor(raz)
            if got != naive.elems[naive.cursor]:
                violations.append(Violation(
                    script_id, i, VIOLATION_SEQUENCE,
                    f"view_cursor saw {got!r}"))
        else:
            raise ValueError(f"unknown op: {op!r}")
        hist = hists.setdefault(kind, {})
        n = counter.steps
        hist[n] = hist.get(n, 0) + 1
        if check_every_op:
            seq = core.zip_elements(raz) if raz is not None \
                else core.to_elements(tree)
            if seq != naive.elems:
                violations.append(Violation(
                    script_id, i, VIOLATION_SEQUENCE,
                    f"after {kind}: {seq!r} != {naive.elems!r}"))
            if raz is not None:
                ci = core.cursor_index(raz)
                if ci != naive.cursor:
                    violations.append(Violation(
                        script_id, i, VIOLATION_CURSOR,
                        f"after {kind}: cursor {ci} != {naive.cursor}"))
    return report


def run_scripts(seed, n_scripts, ops_per_script, value_pool=64, processes=1):
    """Fuzz ``n_scripts`` seeded scripts; returns the merged report.

    Script i uses seed ``seed + i`` for both its op stream and its level
    source, so any violation is replayable from the reported seed alone.
    Scripts are independent; ``processes > 1`` spreads them over a
    worker pool and merges the reports.
    """
    if processes > 1 and n_scripts > 1:
        import multiprocessing

        step = (n_scripts + processes - 1) // processes
        chunks = [(seed + lo, min(step, n_scripts - lo), ops_per_script,
                   value_pool)
                  for lo in range(0, n_scripts, step)]
        merged = CheckReport()
        with multiprocessing.Pool(processes) as pool:
            for part in pool.map(_run_chunk, chunks):
                merged.extend(part)
        return merged
    merged = CheckReport()
    for i in range(n_scripts):
        s = seed + i
        script = random_script(s, ops_per_script, value_pool)
        merged.extend(differential_run(script, SeededLevels(mix64(s)),
                                       script_id=s))
    return merged


def _run_chunk(args):
    seed, n_scripts, ops_per_script, value_pool = args
    return run_scripts(seed, n_scripts, ops_per_script, value_pool)


# ---------------------------------------------------------------------------
# operation-count measurements

def focus_steps(t, p):
    """Descent steps taken by focus(t, p)."""
    c = StepCounter()
    core.focus(t, p, c)
    return c.steps


def unfocus_steps(t, p):
    """Append/grow steps taken by unfocus(focus(t, p))."""
    z = core.focus(t, p)
    c = StepCounter()
    core.unfocus(z, c)
    return c.steps


def first_exposure_steps(t, p, d):
    """Nodes touched exposing the element adjacent to a fresh focus.

    Measures the cost of the first trim-driven walk (as done by remove
    or move) on side ``d`` immediately after focusing at ``p``.
    """
    z = core.focus(t, p)
    side = z[0] if d == L else z[2]
    c = StepCounter()
    s = side
    while s is not None:
        tag = s[0]
        c.steps += 1
        if tag == core.CONS:
            break
        if tag == core.LEVEL:
            s = s[2]
        else:
            s = core.trim(d, s, c)
    return c.steps


def move_scan_steps(t, start, k, d):
    """Total nodes touched by ``k`` successive moves from a fresh focus."""
    z = core.focus(t, start)
    c = StepCounter()
    for _ in range(k):
        z = core.move(d, z, c)
    return c.steps
