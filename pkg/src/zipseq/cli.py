"""Command-line interface.

Subcommands:

* ``check``  -- differential fuzzing: seeded random scripts replayed
  against the naive oracle, invariants verified; prints one line per
  violation (``seed=<u64> op=<index> invariant=<name>``) and a summary.
* ``bench build`` / ``bench groups`` -- the two insertion experiments,
  CSV to ``--out`` or stdout, optional figure via ``--plot``.
* ``demo``   -- replay an edit script from a file (one command per
  line) and print the resulting sequences.

Script files: ``seq`` must come first; an optional ``levels`` line
(immediately after ``seq``) supplies exactly one level per element gap
plus one per later insert, pinning the tree shape exactly.  Without it,
levels come from ``--seed``.  Available commands::

    seq <tok> <tok> ...      levels <int> <int> ...
    focus <int>              insert <L|R> <tok>
    remove <L|R>             replace <L|R> <tok>
    replace-cursor <tok>     move <L|R>
    view <L|R>               view-cursor
    unfocus                  print

Exit codes: 0 success, 1 invariant violation or script error, 2 usage.
"""

from __future__ import annotations

import argparse
import sys

from . import bench, checker, core
from .core import L, R, SequenceError
from .levels import LevelSourceError, ScriptedLevels, SeededLevels


class ScriptError(Exception):
    """A demo script was malformed or hit an illegal state."""


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ScriptError, SequenceError, LevelSourceError, OSError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="zipseq",
        description="persistent sequence library: checking, benchmarks, demos")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run differential fuzzing")
    p_check.add_argument("--seed", type=int, default=1)
    p_check.add_argument("--scripts", type=int, default=100)
    p_check.add_argument("--ops", type=int, default=100)
    p_check.add_argument("--value-pool", type=int, default=64)
    p_check.add_argument("--processes", type=int, default=1)
    p_check.set_defaults(func=_cmd_check)

    p_bench = sub.add_parser("bench", help="run a benchmark experiment")
    bench_sub = p_bench.add_subparsers(dest="experiment", required=True)

    p_build = bench_sub.add_parser("build", help="construct from scratch")
    p_build.add_argument("--sizes", type=_int_list, required=True,
                         help="comma-separated ascending target lengths")
    p_build.add_argument("--trials", type=int, default=5)
    p_build.add_argument("--seed", type=int, default=1)
    p_build.add_argument("--structures", type=_structure_list,
                         default=bench.STRUCTURES)
    p_build.add_argument("--out", default=None, help="CSV path (default stdout)")
    p_build.add_argument("--plot", default=None, help="figure path (png/pdf)")
    p_build.set_defaults(func=_cmd_bench_build)

    p_groups = bench_sub.add_parser("groups", help="sustained insertion groups")
    p_groups.add_argument("--group-size", type=int, default=10 ** 5)
    p_groups.add_argument("--max", type=int, default=10 ** 7, dest="max_size")
    p_groups.add_argument("--seed", type=int, default=1)
    p_groups.add_argument("--structures", type=_structure_list,
                          default=bench.STRUCTURES)
    p_groups.add_argument("--out", default=None)
    p_groups.add_argument("--plot", default=None)
    p_groups.set_defaults(func=_cmd_bench_groups)

    p_demo = sub.add_parser("demo", help="replay an edit script file")
    p_demo.add_argument("--script", required=True, help="script file path")
    p_demo.add_argument("--seed", type=int, default=1,
                        help="level seed when the script has no levels line")
    p_demo.set_defaults(func=_cmd_demo)
    return parser


def _int_list(text):
    return tuple(int(x) for x in text.split(",") if x)


def _structure_list(text):
    return tuple(x for x in text.split(",") if x)


def _cmd_check(args):
    report = checker.run_scripts(args.seed, args.scripts, args.ops,
                                 args.value_pool, processes=args.processes)
    for line in report.report_lines():
        print(line)
    print(f"scripts={report.scripts_run} violations={len(report.violations)}")
    return 0 if report.ok else 1


def _cmd_bench_build(args):
    cfg = bench.BenchConfig(experiment="build", sizes=args.sizes,
                            trials=args.trials, seed=args.seed,
                            structures=args.structures)
    records = bench.run_build(cfg)
    bench.write_csv(records, args.out)
    if args.plot:
        from . import report as report_mod
        report_mod.render_figure(records, args.plot)
    return 0


def _cmd_bench_groups(args):
    cfg = bench.BenchConfig(experiment="groups", group_size=args.group_size,
                            max_size=args.max_size, seed=args.seed,
                            structures=args.structures)
    records = bench.run_groups(cfg)
    bench.write_csv(records, args.out)
    if args.plot:
        from . import report as report_mod
        report_mod.render_figure(records, args.plot)
    return 0


# ---------------------------------------------------------------------------
# demo scripts

_DIRS = {"L": L, "R": R}


def _cmd_demo(args):
    with open(args.script) as fh:
        lines = fh.read().splitlines()
    out = run_script_lines(lines, args.seed)
    for line in out:
        print(line)
    return 0


def run_script_lines(lines, seed=1):
    """Execute script lines; returns the list of output lines."""
    commands = []
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        commands.append((lineno, text.split()))
    if not commands:
        raise ScriptError("empty script")
    if commands[0][1][0] != "seq":
        raise ScriptError("script must start with 'seq'")
    elems = commands[0][1][1:]
    if not elems:
        raise ScriptError("seq needs at least one element")
    body = commands[1:]

    src = None
    if body and body[0][1][0] == "levels":
        levels = [_parse_level(tok, body[0][0]) for tok in body[0][1][1:]]
        body = body[1:]
        inserts = sum(1 for _, toks in body if toks[0] == "insert")
        need = len(elems) - 1 + inserts
        if len(levels) != need:
            raise ScriptError(
                f"levels supplies {len(levels)} values, script needs {need} "
                f"({len(elems) - 1} gaps + {inserts} inserts)")
        src = ScriptedLevels(levels)
    else:
        src = SeededLevels(seed)

    tree, src = core.from_elements(elems, src)
    zipper = None
    out = []
    for lineno, toks in body:
        cmd = toks[0]
        try:
            if cmd == "focus":
                if zipper is not None:
                    raise ScriptError("already focused; unfocus first")
                tree, zipper = None, core.focus(tree, _parse_int(toks, 1, lineno))
            elif cmd == "unfocus":
                _need_zip(zipper, cmd)
                tree, zipper = core.unfocus(zipper), None
            elif cmd == "insert":
                _need_zip(zipper, cmd)
                zipper, src = core.insert(_parse_dir(toks, 1, lineno),
                                          _tok(toks, 2, lineno), zipper, src)
            elif cmd == "remove":
                _need_zip(zipper, cmd)
                zipper = core.remove(_parse_dir(toks, 1, lineno), zipper)
            elif cmd == "replace":
                _need_zip(zipper, cmd)
                zipper = core.replace(_parse_dir(toks, 1, lineno),
                                      _tok(toks, 2, lineno), zipper)
            elif cmd == "replace-cursor":
                _need_zip(zipper, cmd)
                zipper = core.replace_cursor(_tok(toks, 1, lineno), zipper)
            elif cmd == "move":
                _need_zip(zipper, cmd)
                zipper = core.move(_parse_dir(toks, 1, lineno), zipper)
            elif cmd == "view":
                _need_zip(zipper, cmd)
                out.append(core.view(_parse_dir(toks, 1, lineno), zipper))
            elif cmd == "view-cursor":
                _need_zip(zipper, cmd)
                out.append(core.view_cursor(zipper))
            elif cmd == "print":
                seq = (core.zip_elements(zipper) if zipper is not None
                       else core.to_elements(tree))
                out.append(" ".join(seq))
            elif cmd == "levels":
                raise ScriptError("levels must immediately follow seq")
            elif cmd == "seq":
                raise ScriptError("seq may only appear once, first")
            else:
                raise ScriptError(f"unknown command {cmd!r}")
        except (SequenceError, LevelSourceError) as exc:
            raise ScriptError(f"line {lineno}: {exc}") from exc
    return out


def _need_zip(zipper, cmd):
    if zipper is None:
        raise ScriptError(f"{cmd!r} needs a focused sequence (use focus)")


def _tok(toks, i, lineno):
    if i >= len(toks):
        raise ScriptError(f"line {lineno}: {toks[0]} missing argument")
    return toks[i]


def _parse_int(toks, i, lineno):
    try:
        return int(_tok(toks, i, lineno))
    except ValueError:
        raise ScriptError(f"line {lineno}: expected integer") from None


def _parse_dir(toks, i, lineno):
    tok = _tok(toks, i, lineno)
    try:
        return _DIRS[tok]
    except KeyError:
        raise ScriptError(f"line {lineno}: direction must be L or R") from None


def _parse_level(tok, lineno):
    try:
        v = int(tok)
    except ValueError:
        raise ScriptError(f"line {lineno}: levels must be integers") from None
    if v < 1:
        raise ScriptError(f"line {lineno}: levels must be >= 1")
    return v


if __name__ == "__main__":
    sys.exit(main())
