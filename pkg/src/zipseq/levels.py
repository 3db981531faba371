"""Tree-level generation.

A *level* is a positive integer attached to each internal tree node; the
sequence of levels between elements uniquely determines the tree shape.
Levels are drawn so that P(level = k) = 2^-k: level 1 is twice as likely
as level 2, and so on (a geometric / negative-binomial law).  Drawing is
done by hashing a counter and counting trailing zero bits, which gives
exactly that distribution for a uniform hash.

Two sources are provided: ``SeededLevels`` (deterministic pseudo-random,
same seed -> same draws) and ``ScriptedLevels`` (an explicit queue, for
reproducing exact tree shapes in tests and demo scripts).  Sources are
immutable values; drawing returns the level together with the advanced
source.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
WORD_BITS = 64

# splitmix64: golden-gamma counter increment plus a finalizer-style
# avalanche mixer (constants from Steele, Lea & Flood's SplittableRandom).
_GAMMA = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB


class LevelSourceError(Exception):
    """A scripted source was asked for more levels than it holds."""


def mix64(z: int) -> int:
    """Avalanche-mix a 64-bit value (splitmix64 output function)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX_A) & MASK64
    z = ((z ^ (z >> 27)) * _MIX_B) & MASK64
    return z ^ (z >> 31)


def level_of_hash(h: int) -> int:
    """Level for a 64-bit hash: trailing zero bits plus one.

    An odd hash gives level 1, ...1000 gives 4.  The all-zero hash maps
    to the capped sentinel ``WORD_BITS + 1`` so no input loops forever.
    """
    h &= MASK64
    if h == 0:
        return WORD_BITS + 1
    # lowest set bit isolated; its bit_length is trailing-zeros + 1
    return (h & -h).bit_length()


class LevelSource:
    """Immutable supplier of levels; ``draw`` returns (level, next source)."""

    __slots__ = ()

    def draw(self):
        raise NotImplementedError


class SeededLevels(LevelSource):
    """Deterministic pseudo-random levels from a 64-bit seed.

    Internally a splitmix64 counter stream: draw i mixes seed + i*gamma.
    """

    __slots__ = ("seed", "index")

    def __init__(self, seed: int, index: int = 0):
        object.__setattr__(self, "seed", seed & MASK64)
        object.__setattr__(self, "index", index)

    def __setattr__(self, name, value):
        raise AttributeError("SeededLevels is immutable")

    def draw(self):
        i = self.index + 1
        lv = level_of_hash(mix64(self.seed + i * _GAMMA))
        return lv, SeededLevels(self.seed, i)

    def __eq__(self, other):
        return (isinstance(other, SeededLevels)
                and self.seed == other.seed and self.index == other.index)

    def __repr__(self):
        return f"SeededLevels(seed={self.seed}, index={self.index})"


class ScriptedLevels(LevelSource):
    """Levels popped from an explicit queue; exhausting it is an error."""

    __slots__ = ("levels", "index")

    def __init__(self, levels, index: int = 0):
        object.__setattr__(self, "levels", tuple(levels))
        object.__setattr__(self, "index", index)

    def __setattr__(self, name, value):
        raise AttributeError("ScriptedLevels is immutable")

    def draw(self):
        if self.index >= len(self.levels):
            raise LevelSourceError("level source exhausted")
        return self.levels[self.index], ScriptedLevels(self.levels, self.index + 1)

    @property
    def remaining(self) -> int:
        return len(self.levels) - self.index

    def __eq__(self, other):
        return (isinstance(other, ScriptedLevels)
                and self.levels == other.levels and self.index == other.index)

    def __repr__(self):
        return f"ScriptedLevels({list(self.levels[self.index:])!r})"


def draw_level(src: LevelSource):
    """Draw one level; returns ``(level, advanced source)``."""
    return src.draw()


def level_stream(seed: int):
    """Infinite iterator over the same draws as ``SeededLevels(seed)``.

    Allocation-free fast path for bulk construction and benchmarks; the
    n-th value equals the n-th ``SeededLevels(seed)`` draw.
    """
    seed &= MASK64
    z = seed
    mask = MASK64
    while True:
        z = (z + _GAMMA) & mask
        h = ((z ^ (z >> 30)) * _MIX_A) & mask
        h = ((h ^ (h >> 27)) * _MIX_B) & mask
        h = h ^ (h >> 31)
        if h == 0:
            yield WORD_BITS + 1
        else:
            yield (h & -h).bit_length()
