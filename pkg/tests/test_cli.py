import subprocess
import sys

import pytest

from zipseq.cli import ScriptError, main, run_script_lines

FIG_SCRIPT = """\
seq z a b c y d e
levels 4 6 1 2 5 3
focus 4
remove L
unfocus
print
"""


def run_cli(*argv, **kwargs):
    return subprocess.run([sys.executable, "-m", "zipseq.cli", *argv],
                          capture_output=True, text=True, **kwargs)


@pytest.fixture
def fig_script(tmp_path):
    path = tmp_path / "fig1.rz"
    path.write_text(FIG_SCRIPT)
    return str(path)


class TestDemo:
    def test_figure_script(self, fig_script):
        proc = run_cli("demo", "--script", fig_script)
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout == "z a b y d e\n"

    def test_byte_identical_across_runs(self, fig_script):
        a = run_cli("demo", "--script", fig_script)
        b = run_cli("demo", "--script", fig_script)
        assert a.stdout.encode() == b.stdout.encode()
        assert a.returncode == b.returncode == 0

    def test_seeded_mode_is_deterministic(self, tmp_path):
        path = tmp_path / "s.rz"
        path.write_text("seq a b c\nfocus 1\ninsert L x\nunfocus\nprint\n")
        a = run_cli("demo", "--script", str(path), "--seed", "5")
        b = run_cli("demo", "--script", str(path), "--seed", "5")
        assert a.stdout == b.stdout == "a x b c\n"

    def test_view_commands_print(self, tmp_path):
        path = tmp_path / "v.rz"
        path.write_text(
            "seq a b c\nlevels 2 1\nfocus 1\nview L\nview R\nview-cursor\n")
        proc = run_cli("demo", "--script", str(path))
        assert proc.stdout == "a\nc\nb\n"

    def test_script_error_exits_1(self, tmp_path):
        path = tmp_path / "bad.rz"
        path.write_text("seq a\nfocus 0\nremove L\n")
        proc = run_cli("demo", "--script", str(path))
        assert proc.returncode == 1
        assert "no elements" in proc.stderr
        assert proc.stderr.count("\n") == 1  # one-line diagnostic

    def test_missing_file_exits_1(self):
        proc = run_cli("demo", "--script", "/nonexistent/x.rz")
        assert proc.returncode == 1
        assert proc.stderr.startswith("error:")

    def test_unknown_subcommand_exits_2(self):
        proc = run_cli("frobnicate")
        assert proc.returncode == 2
        assert "usage" in proc.stderr

    def test_unknown_flag_exits_2(self, fig_script):
        proc = run_cli("demo", "--script", fig_script, "--bogus")
        assert proc.returncode == 2


class TestScriptRules:
    def test_levels_count_checked_upfront(self):
        with pytest.raises(ScriptError, match="levels supplies 3"):
            run_script_lines(["seq a b c", "levels 1 2 3", "focus 0"])

    def test_levels_must_cover_inserts(self):
        with pytest.raises(ScriptError, match="needs 3"):
            run_script_lines(
                ["seq a b c", "levels 1 2", "focus 0", "insert R x"])

    def test_surplus_levels_rejected(self):
        with pytest.raises(ScriptError, match="levels supplies 2"):
            run_script_lines(["seq a b", "levels 1 2", "focus 0"])

    def test_seq_must_come_first(self):
        with pytest.raises(ScriptError, match="start with 'seq'"):
            run_script_lines(["focus 0"])

    def test_edit_requires_focus(self):
        with pytest.raises(ScriptError, match="needs a focused"):
            run_script_lines(["seq a b", "remove L"])

    def test_double_focus_rejected(self):
        with pytest.raises(ScriptError, match="already focused"):
            run_script_lines(["seq a b", "focus 0", "focus 1"])

    def test_comments_and_blank_lines_ignored(self):
        out = run_script_lines(
            ["# header", "", "seq a b", "levels 3", "print"])
        assert out == ["a b"]

    def test_full_command_surface(self):
        out = run_script_lines([
            "seq a b c d",
            "levels 3 1 2 7",
            "focus 1",
            "replace R x",       # a 3 b 1 x 2 d, cursor b
            "replace-cursor w",  # a 3 w 1 x 2 d, cursor w
            "move L",            # cursor a
            "insert L q",        # q 7 a 3 w 1 x 2 d (level 7 from the queue)
            "remove R",          # drops level 3 and w
            "view-cursor",
            "unfocus",
            "print",
        ])
        assert out == ["a", "q a x d"]

    def test_levels_line_must_follow_seq(self):
        with pytest.raises(ScriptError, match="immediately follow"):
            run_script_lines(["seq a b", "focus 0", "levels 1"])


class TestMainInProcess:
    def test_check_summary(self, capsys):
        rc = main(["check", "--seed", "1", "--scripts", "5", "--ops", "50"])
        out = capsys.readouterr().out
        assert rc == 0
        assert out.strip() == "scripts=5 violations=0"

    def test_bench_build_csv(self, capsys):
        rc = main(["bench", "build", "--sizes", "1000", "--trials", "1",
                   "--seed", "7"])
        lines = capsys.readouterr().out.splitlines()
        assert rc == 0
        assert lines[0] == "structure,experiment,n,trial,nanos"
        assert len(lines) == 3  # raz + naive
        for line in lines[1:]:
            structure, experiment, n, trial, nanos = line.split(",")
            assert structure in ("raz", "naive")
            assert experiment == "build"
            assert int(n) == 1000
            assert int(trial) == 0
            assert int(nanos) >= 0

    def test_bench_groups_csv_and_plot(self, tmp_path, capsys):
        out = tmp_path / "g.csv"
        plot = tmp_path / "g.png"
        rc = main(["bench", "groups", "--group-size", "100", "--max", "400",
                   "--seed", "3", "--structures", "raz",
                   "--out", str(out), "--plot", str(plot)])
        assert rc == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "structure,experiment,n,trial,nanos"
        assert len(lines) == 5
        assert plot.read_bytes()[:4] == b"\x89PNG"

    def test_bad_config_exits_1(self, capsys):
        rc = main(["bench", "build", "--sizes", "100,50", "--trials", "1"])
        assert rc == 1
        assert "error:" in capsys.readouterr().err
