"""Benchmark harness: random-position insertion experiments with CSV output.

Two experiments, desk-scaled versions of the construction study:

* ``build`` -- grow a sequence from a singleton to each target size by
  repeatedly focusing at a seeded-random position, inserting, and
  unfocusing; record total wall time per (structure, size, trial).
* ``groups`` -- keep one persistent sequence and time each successive
  group of random-position insertions until a maximum size.

Both run the zipper and, optionally, the naive copy-on-edit oracle over
identical seeded position streams, so timings are comparable.  Records
are written as CSV with the exact header
``structure,experiment,n,trial,nanos``.
"""

from __future__ import annotations

import gc
import random
import sys
import time
from dataclasses import dataclass

from . import core, oracle
from .core import L
from .levels import level_stream, mix64

RAZ = "raz"
NAIVE = "naive"
STRUCTURES = (RAZ, NAIVE)

CSV_HEADER = "structure,experiment,n,trial,nanos"

# the naive oracle copies the whole sequence per insert; past this many
# elements a groups run would take unreasonably long, so it is cut off
NAIVE_GROUPS_LIMIT = 10 ** 6


@dataclass
class BenchConfig:
    experiment: str                  # "build" or "groups"
    sizes: tuple = ()                # build: ascending target lengths
    group_size: int = 10 ** 5        # groups: insertions per measurement
    max_size: int = 10 ** 7          # groups: final sequence length
    trials: int = 1
    seed: int = 0
    structures: tuple = STRUCTURES

    def __post_init__(self):
        if self.experiment not in ("build", "groups"):
            raise ValueError(f"unknown experiment: {self.experiment!r}")
        self.sizes = tuple(self.sizes)
        if any(b <= a for a, b in zip(self.sizes, self.sizes[1:])):
            raise ValueError("sizes must be ascending")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.experiment == "groups" and self.group_size > self.max_size:
            raise ValueError("group_size must be <= max_size")
        if self.experiment == "build" and not self.sizes:
            raise ValueError("build experiment needs sizes")
        for s in self.structures:
            if s not in STRUCTURES:
                raise ValueError(f"unknown structure: {s!r}")


@dataclass
class BenchRecord:
    structure: str
    experiment: str
    n: int
    trial: int
    nanos: int

    def csv_line(self):
        return f"{self.structure},{self.experiment},{self.n},{self.trial},{self.nanos}"


def _position_seed(seed, n, trial):
    # one stream per (seed, size, trial), shared by all structures
    return mix64(mix64(seed) ^ mix64(n * 0x10001 + trial))


def _build_raz(n, pos_seed):
    """Time building an n-element sequence by focus/insert/unfocus."""
    rng = random.Random(pos_seed)
    randrange = rng.randrange
    levels = level_stream(mix64(pos_seed ^ 0xA5A5A5A5))
    t = core.singleton(0)
    t = core.unfocus(t)
    start = time.perf_counter_ns()
    focus = core.focus
    unfocus = core.unfocus
    for k in range(1, n):
        z = focus(t, randrange(k))
        l, e, r = z
        t = unfocus(((core.LEVEL, next(levels), (core.CONS, k, l)), e, r))
    elapsed = time.perf_counter_ns() - start
    assert core.elm_count(t) == n
    return elapsed, t


def _build_naive(n, pos_seed):
    """Time the naive oracle under the same insertion-position stream."""
    rng = random.Random(pos_seed)
    randrange = rng.randrange
    s = oracle.NaiveSeq([0])
    apply_ = oracle.naive_apply
    start = time.perf_counter_ns()
    for k in range(1, n):
        s = apply_(s, ("focus", randrange(k)))
        s = apply_(s, ("insert", L, k))
        s = apply_(s, ("unfocus",))
    elapsed = time.perf_counter_ns() - start
    assert len(s.elems) == n
    return elapsed, s


def _replay_positions(n, pos_seed):
    """Reference contents after the same build, via plain list edits."""
    rng = random.Random(pos_seed)
    elems = [0]
    for k in range(1, n):
        elems.insert(rng.randrange(k), k)
    return elems


def run_build(cfg: BenchConfig):
    """Construction experiment; one record per (structure, size, trial).

    A warm-up build at the smallest size is discarded.  After timing,
    the zipper contents at the smallest size are checked against a
    plain-list replay of the same position stream.
    """
    records = []
    smallest = cfg.sizes[0]
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for structure in cfg.structures:
            builder = _build_raz if structure == RAZ else _build_naive
            builder(min(smallest, 2048), _position_seed(cfg.seed, 0, 0))  # warm-up
            for n in cfg.sizes:
                for trial in range(cfg.trials):
                    nanos, built = builder(n, _position_seed(cfg.seed, n, trial))
                    records.append(BenchRecord(structure, "build", n, trial, nanos))
                    if n == smallest and trial == 0:
                        got = (core.to_elements(built) if structure == RAZ
                               else built.elems)
                        expect = _replay_positions(n, _position_seed(cfg.seed, n, 0))
                        if got != expect:
                            raise AssertionError(
                                f"{structure} build diverged from position replay")
    finally:
        if gc_was_enabled:
            gc.enable()
    return records


def structures_for_size(cfg: BenchConfig, n: int):
    """Structures measured at sequence size ``n`` in a groups run.

    The naive oracle is excluded once the sequence exceeds
    ``NAIVE_GROUPS_LIMIT`` elements.
    """
    if n > NAIVE_GROUPS_LIMIT:
        return tuple(s for s in cfg.structures if s != NAIVE)
    return tuple(cfg.structures)


def run_groups(cfg: BenchConfig):
    """Sustained-insertion experiment on one persistent sequence.

    Each record's ``n`` is the sequence length at the end of its group;
    ``trial`` numbers the groups from zero.
    """
    records = []
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for structure in cfg.structures:
            rng = random.Random(_position_seed(cfg.seed, cfg.max_size, 0))
            randrange = rng.randrange
            if structure == RAZ:
                levels = level_stream(mix64(cfg.seed ^ 0x5A5A5A5A))
                t = core.unfocus(core.singleton(0))
                k = 1
                group = 0
                while k < cfg.max_size:
                    # group boundaries at multiples of group_size; the
                    # first group grows the singleton to the boundary
                    end = min((k // cfg.group_size + 1) * cfg.group_size,
                              cfg.max_size)
                    start = time.perf_counter_ns()
                    while k < end:
                        z = core.focus(t, randrange(k))
                        l, e, r = z
                        t = core.unfocus(
                            ((core.LEVEL, next(levels), (core.CONS, k, l)), e, r))
                        k += 1
                    nanos = time.perf_counter_ns() - start
                    records.append(BenchRecord(RAZ, "groups", end, group, nanos))
                    group += 1
            else:
                s = oracle.NaiveSeq([0])
                k = 1
                group = 0
                while k < cfg.max_size:
                    end = min((k // cfg.group_size + 1) * cfg.group_size,
                              cfg.max_size)
                    if NAIVE not in structures_for_size(cfg, end):
                        break
                    start = time.perf_counter_ns()
                    while k < end:
                        s = oracle.naive_apply(s, ("focus", randrange(k)))
                        s = oracle.naive_apply(s, ("insert", L, k))
                        k += 1
                    nanos = time.perf_counter_ns() - start
                    records.append(BenchRecord(NAIVE, "groups", end, group, nanos))
                    group += 1
    finally:
        if gc_was_enabled:
            gc.enable()
    return records


def write_csv(records, out=None):
    """Write records as CSV (LF line endings) to a path or stdout."""
    lines = [CSV_HEADER]
    lines.extend(r.csv_line() for r in records)
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    return text
