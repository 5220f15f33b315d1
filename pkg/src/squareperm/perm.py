"""Permutations as plane point sets: records, subclasses, symmetries.

A permutation s of {1..n} is identified with its plot, the point set
{(i, s(i))}.  Every point carries four record flags, one per diagonal
direction; a point with no flag at all is interior.  Squareness, the
triangular and parallel shapes, the profile encoding and the brute-force
oracles are all phrased in terms of these flags.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence, Union


class NotSquare(ValueError):
    """The operation needs a permutation whose plot has no interior point."""


def record_flags(
    values: Sequence[int],
) -> tuple[list[bool], list[bool], list[bool], list[bool]]:
    """Per-point record flags (ul, ur, bl, br), two O(n) sweeps per side.

    ul[i] is True when no point lies strictly above and to the left of
    point i, which for a permutation means values[i] is a left-to-right
    maximum.  ur/bl/br are the right-to-left maxima and the minima read
    from the matching corners.
    """
    n = len(values)
    ul = [False] * n
    ur = [False] * n
    bl = [False] * n
    br = [False] * n
    hi = 0
    for i, v in enumerate(values):
        if v > hi:
            hi = v
            ul[i] = True
    lo = n + 1
    for i, v in enumerate(values):
        if v < lo:
            lo = v
            bl[i] = True
    hi = 0
    for i in range(n - 1, -1, -1):
        v = values[i]
        if v > hi:
            hi = v
            ur[i] = True
    lo = n + 1
    for i in range(n - 1, -1, -1):
        v = values[i]
        if v < lo:
            lo = v
            br[i] = True
    return ul, ur, bl, br


@dataclass(frozen=True)
class Permutation:
    """One-line notation; ``values`` is a bijection on {1..n}."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n == 0:
            raise ValueError("a permutation has at least one value")
        seen = bytearray(n + 1)
        for v in values:
            if type(v) is not int or not 1 <= v <= n or seen[v]:
                raise ValueError(f"{values!r} is not a permutation of 1..{n}")
            seen[v] = 1

    @property
    def size(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """Value at position i, 1-based."""
        return self.values[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.values)
        for i, v in enumerate(self.values):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class ColoredPermutation:
    """A permutation with a subset of its free fixed points marked.

    Only free fixed points may be colored; the constructor enforces it.
    A plain permutation is the colored permutation with an empty set.
    """

    perm: Permutation
    colored: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "colored", frozenset(self.colored))
        if self.colored:
            bad = self.colored - free_fixed_points(self.perm)
            if bad:
                raise ValueError(
                    f"positions {sorted(bad)} are not free fixed points of "
                    f"{self.perm.values!r}"
                )

    @property
    def size(self) -> int:
        return self.perm.size


PermLike = Union[Permutation, ColoredPermutation]


def as_colored(obj: PermLike) -> ColoredPermutation:
    if isinstance(obj, ColoredPermutation):
        return obj
    return ColoredPermutation(obj, frozenset())


@dataclass(frozen=True)
class RecordMask:
    ul: bool
    ur: bool
    bl: bool
    br: bool

    @property
    def upper(self) -> bool:
        return self.ul or self.ur

    @property
    def left(self) -> bool:
        return self.ul or self.bl

    @property
    def exterior(self) -> bool:
        return self.ul or self.ur or self.bl or self.br


def classify_records(perm: PermLike) -> tuple[RecordMask, ...]:
    """Record mask of every point, leftmost point first.  O(n)."""
    values = as_colored(perm).perm.values
    ul, ur, bl, br = record_flags(values)
    return tuple(RecordMask(a, b, c, d) for a, b, c, d in zip(ul, ur, bl, br))


def is_square(perm: PermLike) -> bool:
    """True when every point is a record in some direction."""
    values = as_colored(perm).perm.values
    ul, ur, bl, br = record_flags(values)
    return all(a or b or c or d for a, b, c, d in zip(ul, ur, bl, br))


def free_fixed_points(perm: PermLike) -> frozenset[int]:
    """Fixed points that are neither bottom-left nor upper-right records."""
    values = perm.values if isinstance(perm, Permutation) else perm.perm.values
    ul, ur, bl, br = record_flags(values)
    return frozenset(
        i + 1
        for i, v in enumerate(values)
        if v == i + 1 and not bl[i] and not ur[i]
    )


class Corner(enum.Enum):
    """A diagonal direction; also names which record path may be empty."""

    UPPER_LEFT = "upper-left"
    UPPER_RIGHT = "upper-right"
    LOWER_LEFT = "lower-left"
    LOWER_RIGHT = "lower-right"


class Slope(enum.Enum):
    """The two parallel shapes: two chains hugging one diagonal."""

    RISING = "rising"
    FALLING = "falling"


#: The triangular orientation whose members the TRIANGULAR family counts
#: (every point on the upper-left, upper-right or lower-right path).
TRIANGULAR_COUNTED = Corner.LOWER_LEFT

#: The parallel orientation counted by the PARALLEL family (avoids 321).
PARALLEL_COUNTED = Slope.RISING


def is_triangular(perm: PermLike, missing: Corner = TRIANGULAR_COUNTED) -> bool:
    """True when every point is a record away from the ``missing`` corner.

    ``missing`` names the one record path points are not required to lie
    on; the four orientations are the rotations of one another.
    """
    values = as_colored(perm).perm.values
    ul, ur, bl, br = record_flags(values)
    flags = {
        Corner.UPPER_LEFT: ul,
        Corner.UPPER_RIGHT: ur,
        Corner.LOWER_LEFT: bl,
        Corner.LOWER_RIGHT: br,
    }
    a, b, c = (flags[c_] for c_ in Corner if c_ is not missing)
    return all(x or y or z for x, y, z in zip(a, b, c))


def is_parallel(perm: PermLike, slope: Slope = PARALLEL_COUNTED) -> bool:
    values = as_colored(perm).perm.values
    ul, ur, bl, br = record_flags(values)
    if slope is Slope.RISING:
        return all(a or b for a, b in zip(ul, br))
    return all(a or b for a, b in zip(ur, bl))


def is_decomposable(values: Sequence[int]) -> bool:
    """True when some proper prefix occupies exactly the lowest values."""
    hi = 0
    for k in range(len(values) - 1):
        if values[k] > hi:
            hi = values[k]
        if hi == k + 1:
            return True
    return False


def is_co_decomposable(values: Sequence[int]) -> bool:
    """True when some proper prefix occupies exactly the highest values."""
    n = len(values)
    lo = n + 1
    for k in range(n - 1):
        if values[k] < lo:
            lo = values[k]
        if lo == n - k:
            return True
    return False


@dataclass(frozen=True)
class SubclassReport:
    square: bool
    triangular: Mapping[Corner, bool]
    parallel: Mapping[Slope, bool]
    decomposable: bool
    co_decomposable: bool
    upper_count: int
    left_count: int


def upper_left_counts(perm: PermLike) -> tuple[int, int]:
    """Number of upper points and of left points, colored points excluded."""
    cp = as_colored(perm)
    values = cp.perm.values
    ul, ur, bl, br = record_flags(values)
    upper = sum(
        1 for i in range(len(values)) if (ul[i] or ur[i]) and i + 1 not in cp.colored
    )
    left = sum(
        1 for i in range(len(values)) if (ul[i] or bl[i]) and i + 1 not in cp.colored
    )
    return upper, left


def subclass_report(perm: PermLike) -> SubclassReport:
    cp = as_colored(perm)
    values = cp.perm.values
    upper, left = upper_left_counts(cp)
    return SubclassReport(
        square=is_square(cp),
        triangular={c: is_triangular(cp, c) for c in Corner},
        parallel={s: is_parallel(cp, s) for s in Slope},
        decomposable=is_decomposable(values),
        co_decomposable=is_co_decomposable(values),
        upper_count=upper,
        left_count=left,
    )


def standardize_tuple(values: Sequence[int]) -> tuple[int, ...]:
    """Rank replacement of distinct integers onto 1..k."""
    order = sorted(values)
    rank = {v: i + 1 for i, v in enumerate(order)}
    if len(rank) != len(values):
        raise ValueError("values must be distinct")
    return tuple(rank[v] for v in values)


def standardize(values: Sequence[int]) -> Permutation:
    """The permutation order-isomorphic to ``values``."""
    return Permutation(standardize_tuple(values))


def contains_pattern(perm: Permutation, pattern: Permutation) -> bool:
    """Naive containment scan over all subsequences; test support only."""
    values = perm.values
    target = pattern.values
    k = len(target)
    if k > len(values):
        return False
    for combo in itertools.combinations(values, k):
        if standardize_tuple(combo) == target:
            return True
    return False


class Symmetry(enum.Enum):
    INVERSE = "inverse"
    REVERSE = "reverse"
    COMPLEMENT = "complement"
    ROT90 = "rot90"
    ROT180 = "rot180"
    ROT270 = "rot270"
    ANTIDIAGONAL = "antidiagonal"


def transform(perm: Permutation, symmetry: Symmetry) -> Permutation:
    """Apply one of the dihedral symmetries to the plot of ``perm``.

    ROT90 is the clockwise quarter turn; ANTIDIAGONAL reflects along
    (x, y) -> (n+1-y, n+1-x).
    """
    values = perm.values
    n = len(values)
    if symmetry is Symmetry.REVERSE:
        return Permutation(values[::-1])
    if symmetry is Symmetry.COMPLEMENT:
        return Permutation(tuple(n + 1 - v for v in values))
    if symmetry is Symmetry.ROT180:
        return Permutation(tuple(n + 1 - v for v in values[::-1]))
    inv = [0] * (n + 1)
    for i, v in enumerate(values):
        inv[v] = i + 1
    if symmetry is Symmetry.INVERSE:
        return Permutation(tuple(inv[1:]))
    if symmetry is Symmetry.ROT90:
        return Permutation(tuple(inv[n + 1 - j] for j in range(1, n + 1)))
    if symmetry is Symmetry.ROT270:
        return Permutation(tuple(n + 1 - inv[j] for j in range(1, n + 1)))
    if symmetry is Symmetry.ANTIDIAGONAL:
        return Permutation(tuple(n + 1 - inv[n + 1 - j] for j in range(1, n + 1)))
    raise ValueError(f"unknown symmetry {symmetry!r}")


def parse_permutation_text(text: str) -> ColoredPermutation:
    """Parse comma-separated one-line notation; ``*`` marks a colored entry.

    >>> parse_permutation_text("3,5,4,1,2").perm.values
    (3, 5, 4, 1, 2)
    >>> sorted(parse_permutation_text("1,2*,3").colored)
    [2]
    """
    values = []
    colored = set()
    for pos, token in enumerate(text.strip().split(","), start=1):
        token = token.strip()
        if token.endswith("*"):
            colored.add(pos)
            token = token[:-1]
        if not token or not token.lstrip("-").isdigit():
            raise ValueError(f"bad permutation entry {token!r}")
        values.append(int(token))
    return ColoredPermutation(Permutation(tuple(values)), frozenset(colored))


def format_permutation_text(perm: PermLike) -> str:
    cp = as_colored(perm)
    return ",".join(
        f"{v}*" if i + 1 in cp.colored else str(v)
        for i, v in enumerate(cp.perm.values)
    )
