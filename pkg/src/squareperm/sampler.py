"""Seeded exact-uniform random generation.

The generator contract is bit-exact so that runs reproduce across
platforms and reimplementations:

* state update: ``state = (state + 0x9E3779B97F4A7C15) mod 2^64``;
  output: the SplitMix64 finalizer
  ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
  z *= 0x94D049BB133111EB; z ^= z >> 31`` (all mod 2^64).
* initial state for (seed, stream): ``mix(mix(seed ^ 0x7C15D2E3A9B96F01)
  + stream * 0xD2B74407B1CE6E93)`` where ``mix`` is the finalizer.
* ``getrandbits(k)``: draw ceil(k/64) outputs, assemble little-endian
  (first output = least significant 64 bits), keep the low k bits.
* ``randbelow(b)``: draw ``getrandbits(b.bit_length())`` until the value
  is below b (exact uniformity, expected under two draws).

Uniform objects come from drawing one exact big integer below the family
count and decoding: a marked word is uniform by direct unranking, and a
uniform square permutation / fully indecomposable square / convex
permutomino is the first decodable word in a rejection loop.  Letters of
an unranked word use base-4 digits, least significant first, mapped
through ("UL", "UR", "DL", "DR").
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .codec import (
    DecodeMode,
    DecodeStats,
    InternalContradiction,
    MarkedWord,
    Success,
    decode,
)
from .perm import ColoredPermutation, Permutation, record_flags, standardize_tuple
from .permutomino import check_boundary, from_colored_permutation
from .series import CountFamily, DomainError, count

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_STREAM_STEP = 0xD2B74407B1CE6E93
_SEED_TWEAK = 0x7C15D2E3A9B96F01

_PAIRS = ("UL", "UR", "DL", "DR")
# four letters per byte, least significant digit first
_BYTE_PAIRS = tuple(
    tuple(_PAIRS[(b >> (2 * k)) & 3] for k in range(4)) for b in range(256)
)


def _mix(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class RngStream:
    """Counter-based deterministic generator; see the module docstring."""

    def __init__(self, seed: int, stream: int = 0):
        self.seed = seed
        self.stream = stream
        self._state = _mix(_mix((seed ^ _SEED_TWEAK) & _MASK64) + stream * _STREAM_STEP)

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix(self._state)

    def getrandbits(self, k: int) -> int:
        if k <= 0:
            return 0
        if k <= 64:
            self._state = (self._state + _GAMMA) & _MASK64
            return _mix(self._state) & ((1 << k) - 1)
        words = (k + 63) // 64
        buf = bytearray()
        for _ in range(words):
            buf += self.next_u64().to_bytes(8, "little")
        return int.from_bytes(buf, "little") & ((1 << k) - 1)

    def randbelow(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        if bound == 1:
            return 0
        k = bound.bit_length()
        while True:
            value = self.getrandbits(k)
            if value < bound:
                return value


def substream(seed: int, index: int) -> RngStream:
    """Independent stream number ``index`` for a seed; used for batches."""
    return RngStream(seed, stream=index)


def _letters_from_digits(value: int, n_digits: int) -> list[str]:
    if n_digits == 0:
        return []
    raw = value.to_bytes((n_digits + 3) // 4, "little")
    out: list[str] = []
    for b in raw:
        out.extend(_BYTE_PAIRS[b])
    return out[:n_digits]


_LAYOUT_CACHE: dict[int, tuple[int, int]] = {}


def _word_layout(n: int) -> tuple[int, int]:
    cached = _LAYOUT_CACHE.get(n)
    if cached is None:
        cached = (count(CountFamily.MARKED_WORDS, n), 2 * 4 ** (n - 2))
        _LAYOUT_CACHE[n] = cached
    return cached


def sample_marked_word(n: int, rng: RngStream) -> MarkedWord:
    """Exactly uniform marked word of length n.

    The index space splits into 2 * 4^(n-2) endpoint-marked words (mark
    1 or n, all interior letters free) followed by (n-2) * 2 * 4^(n-3)
    words marked on an interior L (position, U/D letter there, the other
    letters free).
    """
    if n < 2:
        raise DomainError("marked words start at length 2")
    total, endpoint_block = _word_layout(n)
    idx = rng.randbelow(total)
    if idx < endpoint_block:
        which_end, rest = divmod(idx, 4 ** (n - 2))
        mark = 1 if which_end == 0 else n
        interior = _letters_from_digits(rest, n - 2)
    else:
        rest = idx - endpoint_block
        per_position = 2 * 4 ** (n - 3)
        offset, rest = divmod(rest, per_position)
        mark = 2 + offset
        ud, rest = divmod(rest, 4 ** (n - 3))
        others = _letters_from_digits(rest, n - 3)
        interior = others[: mark - 2] + ["UL" if ud == 0 else "DL"] + others[mark - 2 :]
    return MarkedWord(("XY", *interior, "XY"), mark)


@dataclass
class SampleStats:
    attempts: int = 0
    row_advances: int = 0


_SAMPLE_MODES = {
    CountFamily.SQUARE: DecodeMode.SQUARE,
    CountFamily.FULLY_INDEC: DecodeMode.FULLY_INDEC,
    CountFamily.CONVEX_PERMUTOMINO: DecodeMode.PERMUTOMINO,
}


def sample_object(
    family: CountFamily,
    n: int,
    rng: RngStream,
    stats: Optional[SampleStats] = None,
):
    """Exactly uniform member of the family: draw words, decode, retry.

    Returns a ColoredPermutation for the permutation families (the
    colored set is empty there) and a Permutomino for
    CONVEX_PERMUTOMINO.  Expected number of attempts tends to 1/0.57 and
    the work per attempt is O(n).
    """
    if family not in _SAMPLE_MODES:
        raise DomainError(f"no sampler for {family}")
    if family is CountFamily.SQUARE and n == 1:
        if stats is not None:
            stats.attempts += 1
        return ColoredPermutation(Permutation((1,)), frozenset())
    if n < 2:
        raise DomainError("sampling starts at size 2")
    mode = _SAMPLE_MODES[family]
    decode_stats = DecodeStats() if stats is not None else None
    while True:
        word = sample_marked_word(n, rng)
        outcome = decode(word, mode, stats=decode_stats)
        if stats is not None:
            stats.attempts += 1
            stats.row_advances += decode_stats.row_advances
        if isinstance(outcome, Success):
            if family is CountFamily.CONVEX_PERMUTOMINO:
                return from_colored_permutation(outcome.result)
            return outcome.result
        if isinstance(outcome, InternalContradiction):
            raise AssertionError(f"decoder contradiction on {word}: {outcome}")


def _comb_unrank(rank: int, m: int, k: int) -> list[int]:
    """The rank-th k-subset of 0..m-1 in lexicographic order."""
    out = []
    x = 0
    for i in range(k):
        while comb(m - 1 - x, k - 1 - i) <= rank:
            rank -= comb(m - 1 - x, k - 1 - i)
            x += 1
        out.append(x)
        x += 1
    return out


def _sample_subset(m: int, k: int, rng: RngStream) -> list[int]:
    return _comb_unrank(rng.randbelow(comb(m, k)), m, k)


@dataclass(frozen=True)
class GridConfig:
    """n points on a cols x rows grid, no shared line, all exterior."""

    cols: int
    rows: int
    points: tuple[tuple[int, int], ...]

    def validate(self) -> None:
        xs = [x for x, _ in self.points]
        ys = [y for _, y in self.points]
        n = len(self.points)
        if len(set(xs)) < n or len(set(ys)) < n:
            raise ValueError("points share a column or row")
        if not all(0 <= x < self.cols and 0 <= y < self.rows for x, y in self.points):
            raise ValueError("point off the grid")
        values = standardize_tuple([y for _, y in sorted(self.points)])
        ul, ur, bl, br = record_flags(values)
        if not all(a or b or c or d for a, b, c, d in zip(ul, ur, bl, br)):
            raise ValueError("configuration has an interior point")

    def to_json(self) -> dict:
        return {
            "cols": self.cols,
            "rows": self.rows,
            "points": [list(p) for p in self.points],
        }


@dataclass(frozen=True)
class GridPolygon:
    """A generic convex polygon with 2n turnpoints on a cols x rows grid."""

    cols: int
    rows: int
    turnpoints: tuple[tuple[int, int], ...]

    def validate(self) -> None:
        if not all(
            0 <= x < self.cols and 0 <= y < self.rows for x, y in self.turnpoints
        ):
            raise ValueError("turnpoint off the grid")
        check_boundary(self.turnpoints, reduced=False)

    @property
    def size(self) -> int:
        return len(self.turnpoints) // 2

    def to_json(self) -> dict:
        return {
            "cols": self.cols,
            "rows": self.rows,
            "turnpoints": [list(p) for p in self.turnpoints],
        }


def exact_generic_count(cols: int, rows: int, n: int) -> int:
    """Generic all-exterior configurations: Sq_n C(cols,n) C(rows,n)."""
    if n < 1 or n > min(cols, rows):
        raise DomainError("need 1 <= n <= min(cols, rows)")
    return count(CountFamily.SQUARE, n) * comb(cols, n) * comb(rows, n)


def exact_generic_polygon_count(cols: int, rows: int, n: int) -> int:
    """Generic convex polygons with 2n turnpoints: Cp_n C(cols,n) C(rows,n)."""
    if n < 2 or n > min(cols, rows):
        raise DomainError("need 2 <= n <= min(cols, rows)")
    return count(CountFamily.CONVEX_PERMUTOMINO, n) * comb(cols, n) * comb(rows, n)


def sample_exterior_config(cols: int, rows: int, n: int, rng: RngStream) -> GridConfig:
    """Uniform generic all-exterior configuration of n points.

    Draw order is fixed: column subset, then row subset, then the square
    permutation giving the reduced shape.
    """
    if n < 1 or n > min(cols, rows):
        raise DomainError("need 1 <= n <= min(cols, rows)")
    xs = _sample_subset(cols, n, rng)
    ys = _sample_subset(rows, n, rng)
    perm = sample_object(CountFamily.SQUARE, n, rng).perm
    points = tuple((xs[i], ys[perm.values[i] - 1]) for i in range(n))
    return GridConfig(cols, rows, points)


def sample_convex_polygon(cols: int, rows: int, n: int, rng: RngStream) -> GridPolygon:
    """Uniform generic convex polygon with 2n turnpoints.

    Draw order: column subset, row subset, then the convex permutomino
    stretched over the chosen lines.
    """
    if n < 2 or n > min(cols, rows):
        raise DomainError("need 2 <= n <= min(cols, rows)")
    xs = _sample_subset(cols, n, rng)
    ys = _sample_subset(rows, n, rng)
    permutomino = sample_object(CountFamily.CONVEX_PERMUTOMINO, n, rng)
    turnpoints = tuple((xs[x], ys[y]) for x, y in permutomino.turnpoints)
    return GridPolygon(cols, rows, turnpoints)
