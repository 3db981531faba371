import math

import pytest

from zipseq import ScriptedLevels, SeededLevels, from_elements
from zipseq.checker import (
    OP_WEIGHTS,
    VIOLATION_COUNT,
    VIOLATION_NIL,
    VIOLATION_ORDER,
    CheckReport,
    Violation,
    build_tree,
    check_tree,
    depth_stats,
    differential_run,
    first_exposure_steps,
    focus_steps,
    leaf_depths,
    move_scan_steps,
    random_script,
    run_scripts,
    unfocus_steps,
)
from zipseq.levels import mix64
from conftest import FIGURE_TREE


class TestCheckTree:
    def test_figure_tree_is_sound(self, t0):
        assert check_tree(t0) == []

    def test_nil_and_leaf_are_sound(self):
        assert check_tree(None) == []
        assert check_tree(("x",)) == []

    def test_counterexample_hits_all_three_classes(self):
        # right child level above the root, cached counts wrong at both
        # branches, and a Nil sitting under a branch
        bad = (3, 5, ("x",), (5, 2, ("y",), None))
        names = {name for name, _ in check_tree(bad)}
        assert names == {VIOLATION_COUNT, VIOLATION_ORDER, VIOLATION_NIL}

    def test_spec_shaped_counterexample(self):
        # order and nil-child violations; counts here are arithmetically
        # consistent, so no count violation is reported
        bad = (3, 2, ("x",), (5, 1, ("y",), None))
        names = {name for name, _ in check_tree(bad)}
        assert names == {VIOLATION_ORDER, VIOLATION_NIL}

    def test_left_equal_level_is_a_violation(self):
        bad = (3, 2, (3, 1, ("x",), None), ("y",))
        names = {name for name, _ in check_tree(bad)}
        assert VIOLATION_ORDER in names

    def test_right_equal_level_is_allowed(self):
        ok = (3, 3, ("w",), (3, 2, ("x",), ("y",)))
        assert not any(n == VIOLATION_ORDER for n, _ in check_tree(ok))

    def test_bad_count_only(self):
        bad = (2, 3, ("a",), ("b",))
        names = [name for name, _ in check_tree(bad)]
        assert names == [VIOLATION_COUNT]

    def test_seeded_trees_pass(self):
        for seed in range(200):
            t = build_tree(50, mix64(seed))
            assert check_tree(t) == [], seed


class TestRandomScript:
    def test_deterministic(self):
        a = random_script(1, 10, 5)
        b = random_script(1, 10, 5)
        assert a == b

    def test_starts_with_construction_then_focus(self):
        script = random_script(3, 50, 8)
        assert script[0][0] == "from_elements"
        assert script[1][0] == "focus"

    def test_length_model_stays_positive(self):
        for seed in range(20):
            script = random_script(seed, 1000, 5)
            size = 0
            for op in script:
                kind = op[0]
                if kind == "from_elements":
                    size = len(op[1])
                elif kind == "singleton":
                    size = 1
                elif kind == "insert":
                    size += 1
                elif kind == "remove":
                    size -= 1
                assert size >= 1

    def test_op_mix_matches_weights(self):
        # pool the drawn kinds over ~10^5 ops; a refocus draw shows up
        # as an unfocus (paired with a forced focus)
        counts = {}
        total = 0
        for seed in range(100):
            script = random_script(seed, 1000, 16)
            for op in script[2:]:
                kind = "refocus" if op[0] == "unfocus" else op[0]
                if kind == "focus":
                    continue  # the forced half of a refocus pair
                counts[kind] = counts.get(kind, 0) + 1
                total += 1
        assert total >= 10 ** 5
        for kind, weight in OP_WEIGHTS.items():
            got = counts.get(kind, 0) / total
            assert abs(got - weight) / weight <= 0.05, (kind, got, weight)


class TestDifferentialRun:
    def test_figure_script_end_to_end(self):
        script = [
            ("from_elements", tuple("zabcyde")),
            ("focus", 4),
            ("remove", "L"),
            ("unfocus",),
        ]
        report = differential_run(script, ScriptedLevels([4, 6, 1, 2, 5, 3]))
        assert report.ok
        assert report.scripts_run == 1

    def test_empty_edit_script_keeps_tree(self):
        script = [("from_elements", (1, 2, 3, 4, 5)), ("focus", 2), ("unfocus",)]
        report = differential_run(script, SeededLevels(9))
        assert report.ok

    def test_all_op_kinds_run_clean(self):
        script = [
            ("singleton", 0),
            ("insert", "L", 1), ("insert", "R", 2), ("move", "L"),
            ("replace", "R", 7), ("replace_cursor", 9), ("view", "R"),
            ("view_cursor",), ("remove", "R"), ("unfocus",), ("focus", 0),
        ]
        report = differential_run(script, SeededLevels(4))
        assert report.ok, [v.line() for v in report.violations]

    def test_violation_is_reported_not_raised(self, monkeypatch):
        import zipseq.core as core
        real = core.remove

        def broken_remove(d, z, counter=None):
            z2 = real(d, z, counter)
            return core.replace_cursor("corrupted", z2)

        monkeypatch.setattr(core, "remove", broken_remove)
        script = [("from_elements", tuple("abcd")), ("focus", 2), ("remove", "L")]
        report = differential_run(script, SeededLevels(1), script_id=77)
        assert not report.ok
        v = report.violations[0]
        assert v.script_id == 77
        assert v.line().startswith("seed=77 op=2 invariant=")

    def test_requires_construction_first(self):
        with pytest.raises(ValueError):
            differential_run([("focus", 0)], SeededLevels(1))

    def test_step_counts_recorded(self):
        script = random_script(5, 200, 8)
        report = differential_run(script, SeededLevels(5))
        assert report.ok
        assert "focus" in report.step_counts
        assert sum(report.step_counts["insert"].values()) == \
            sum(1 for op in script if op[0] == "insert")
        # insert is O(1) and uncounted: all entries in its histogram are 0
        assert set(report.step_counts["insert"]) == {0}

    def test_seeded_scripts_run_clean(self):
        report = run_scripts(1000, 30, 200, 16)
        assert report.scripts_run == 30
        assert report.ok, report.report_lines()[:5]

    def test_parallel_matches_serial(self):
        serial = run_scripts(1, 8, 100)
        parallel = run_scripts(1, 8, 100, processes=2)
        assert parallel.scripts_run == serial.scripts_run == 8
        assert parallel.ok == serial.ok
        assert parallel.step_counts == serial.step_counts


class TestReportPlumbing:
    def test_merge(self):
        a = CheckReport(scripts_run=1, step_counts={"move": {2: 3}})
        b = CheckReport(scripts_run=2, step_counts={"move": {2: 1, 5: 4}})
        b.violations.append(Violation(9, 3, "count"))
        a.extend(b)
        assert a.scripts_run == 3
        assert a.step_counts == {"move": {2: 4, 5: 4}}
        assert not a.ok
        assert a.report_lines() == ["seed=9 op=3 invariant=count"]


class TestDepthStats:
    def test_single_leaf(self):
        assert depth_stats(1, 3, 42) == (0.0, 0)

    def test_figure_tree_depths(self, t0):
        # z,a under Bin4; y,d,e three deep; b,c under Bin1 four deep
        assert sorted(leaf_depths(t0)) == [2, 2, 3, 3, 3, 4, 4]

    def test_known_small_tree(self):
        t, _ = from_elements([1, 2, 3], ScriptedLevels([2, 1]))
        # Bin2(1, Bin1(2, 3)): depths 1, 2, 2
        assert sorted(leaf_depths(t)) == [1, 2, 2]

    def test_logarithmic_growth(self):
        mean16, _ = depth_stats(2 ** 12, 10, 7)
        mean8, _ = depth_stats(2 ** 6, 10, 7)
        assert mean16 / mean8 <= 2.6


class TestStepMeasures:
    def test_focus_steps_equal_leaf_depth(self, t0):
        depths = {}

        def walk(t, d):
            if len(t) == 1:
                depths[t[0]] = d
            else:
                walk(t[2], d + 1)
                walk(t[3], d + 1)

        walk(t0, 0)
        for p, e in enumerate("zabcyde"):
            assert focus_steps(t0, p) == depths[e]

    def test_unfocus_steps_bounded_by_depth(self):
        t = build_tree(4096, mix64(11))
        depth = max(leaf_depths(t))
        for p in (0, 1000, 2048, 4095):
            assert unfocus_steps(t, p) <= 4.0 * depth

    def test_first_exposure_is_small_on_average(self):
        t = build_tree(4096, mix64(12))
        total = sum(first_exposure_steps(t, p, d)
                    for p in range(1, 4000, 37) for d in ("L", "R"))
        count = 2 * len(range(1, 4000, 37))
        assert total / count <= 8.0

    def test_move_scan_is_logarithmic(self):
        n, k = 4096, 500
        t = build_tree(n, mix64(13))
        steps = move_scan_steps(t, n - 1, k, "L")
        assert steps <= 1.0 * k * math.log2(n)
