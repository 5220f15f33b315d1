"""Convex permutominoes: validation, boundary statistics, and the bijection
with colored co-indecomposable square permutations.

A permutomino of size n is a self-avoiding lattice polygon carrying
exactly one side on each of the n vertical and n horizontal lines it
meets; it is convex when every turnpoint is a record of the turnpoint
set.  Note the size convention: the unit square has two vertical lines
and therefore size 2, so size always equals half the number of
turnpoints.

Turnpoint cycles are kept in canonical form: translated so the lowest
occupied lines are x = 0 and y = 0, oriented clockwise, starting from
the highest point of the leftmost line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import (
    ColoredPermutation,
    NotSquare,
    Permutation,
    is_co_decomposable,
    record_flags,
)

Point = tuple[int, int]


class NotClosed(ValueError):
    """The boundary revisits a turnpoint or is too short to close."""


class NotAlternating(ValueError):
    """Consecutive turnpoints do not alternate horizontal/vertical moves."""


class SelfIntersecting(ValueError):
    """Two boundary sides cross or touch away from a shared turnpoint."""


class DuplicateSideOnLine(ValueError):
    def __init__(self, axis: str, line: int):
        super().__init__(f"more than one side on line {axis}={line}")
        self.axis = axis
        self.line = line


class MissingSideOnLine(ValueError):
    def __init__(self, axis: str, line: int):
        super().__init__(f"no side on line {axis}={line}")
        self.axis = axis
        self.line = line


class NotConvex(ValueError):
    def __init__(self, point: Point):
        super().__init__(f"turnpoint {point} is not a record of the boundary")
        self.point = point


class NotCoIndecomposable(ValueError):
    """The permutation splits as a skew sum, so no permutomino maps to it."""


class ReconstructionFailed(ValueError):
    """Rebuilding a permutomino from its permutation broke an invariant."""


@dataclass(frozen=True)
class BoundaryReport:
    size: int
    directed: bool
    parallelogram: bool


def _cyclic_edges(points: Sequence[Point]) -> list[tuple[Point, Point]]:
    return [(points[i], points[(i + 1) % len(points)]) for i in range(len(points))]


def _record_directions(points: Sequence[Point], p: Point) -> tuple[bool, bool, bool, bool]:
    """(ul, ur, bl, br) record flags of p within the point set."""
    x, y = p
    ul = ur = bl = br = True
    for qx, qy in points:
        if qx < x and qy > y:
            ul = False
        elif qx > x and qy > y:
            ur = False
        elif qx < x and qy < y:
            bl = False
        elif qx > x and qy < y:
            br = False
    return ul, ur, bl, br


def check_boundary(points: Sequence[Point], reduced: bool = True) -> BoundaryReport:
    """Validate a cyclic turnpoint sequence; return size and shape flags.

    With ``reduced`` every lattice line inside the bounding box must carry
    exactly one side (the permutomino condition); without it, lines may be
    skipped but no line may carry two sides (generic polygons on a grid).
    """
    pts = [tuple(p) for p in points]
    if len(pts) < 4:
        raise NotClosed("need at least four turnpoints")
    if len(pts) % 2:
        raise NotAlternating("a rectilinear cycle has an even number of turnpoints")
    if len(set(pts)) != len(pts):
        raise NotClosed("boundary revisits a turnpoint")

    edges = _cyclic_edges(pts)
    axes = []
    for (x1, y1), (x2, y2) in edges:
        dx, dy = x2 - x1, y2 - y1
        if (dx == 0) == (dy == 0):
            raise NotAlternating(f"step {(x1, y1)} -> {(x2, y2)} is not axis-aligned")
        axes.append("v" if dx == 0 else "h")
    for i in range(len(axes)):
        if axes[i] == axes[(i + 1) % len(axes)]:
            raise NotAlternating(f"two consecutive {axes[i]} steps at turnpoint {i}")

    v_edges = [e for e, a in zip(edges, axes) if a == "v"]
    h_edges = [e for e, a in zip(edges, axes) if a == "h"]
    v_lines: dict[int, tuple[Point, Point]] = {}
    for e in v_edges:
        x = e[0][0]
        if x in v_lines:
            raise DuplicateSideOnLine("x", x)
        v_lines[x] = e
    h_lines: dict[int, tuple[Point, Point]] = {}
    for e in h_edges:
        y = e[0][1]
        if y in h_lines:
            raise DuplicateSideOnLine("y", y)
        h_lines[y] = e
    if reduced:
        for x in range(min(v_lines), max(v_lines) + 1):
            if x not in v_lines:
                raise MissingSideOnLine("x", x)
        for y in range(min(h_lines), max(h_lines) + 1):
            if y not in h_lines:
                raise MissingSideOnLine("y", y)

    for (vx, vy1), (_, vy2) in v_edges:
        vlo, vhi = min(vy1, vy2), max(vy1, vy2)
        for (hx1, hy), (hx2, _) in h_edges:
            hlo, hhi = min(hx1, hx2), max(hx1, hx2)
            if not (hlo <= vx <= hhi and vlo <= hy <= vhi):
                continue
            crossing = (vx, hy)
            v_ends = {(vx, vy1), (vx, vy2)}
            h_ends = {(hx1, hy), (hx2, hy)}
            if not (crossing in v_ends and crossing in h_ends):
                raise SelfIntersecting(f"sides meet at {crossing}")

    directed = True
    parallelogram = True
    for p in pts:
        ul, ur, bl, br = _record_directions(pts, p)
        if not (ul or ur or bl or br):
            raise NotConvex(p)
        if not (ul or ur or br):
            directed = False
        if not (ul or br):
            parallelogram = False

    return BoundaryReport(len(pts) // 2, directed, parallelogram)


def canonical_cycle(points: Iterable[Point]) -> tuple[Point, ...]:
    """Translate to the origin, orient clockwise, start at the canonical
    turnpoint (highest point of the leftmost line)."""
    pts = [tuple(p) for p in points]
    area2 = sum(
        x1 * y2 - x2 * y1 for (x1, y1), (x2, y2) in _cyclic_edges(pts)
    )
    if area2 > 0:  # positive shoelace means counterclockwise
        pts.reverse()
    minx = min(x for x, _ in pts)
    miny = min(y for _, y in pts)
    pts = [(x - minx, y - miny) for x, y in pts]
    start = min(range(len(pts)), key=lambda i: (pts[i][0], -pts[i][1]))
    return tuple(pts[start:] + pts[:start])


@dataclass(frozen=True)
class Permutomino:
    """A convex permutomino held as its canonical turnpoint cycle."""

    turnpoints: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple(tuple(p) for p in self.turnpoints)
        object.__setattr__(self, "turnpoints", pts)
        check_boundary(pts)
        if pts != canonical_cycle(pts):
            raise ValueError(
                "turnpoints are not in canonical form; use Permutomino.from_turnpoints"
            )

    @classmethod
    def from_turnpoints(cls, points: Iterable[Point]) -> "Permutomino":
        pts = [tuple(p) for p in points]
        if len(pts) > 1 and pts[0] == pts[-1]:
            pts.pop()
        return cls(canonical_cycle(pts))

    @property
    def size(self) -> int:
        return len(self.turnpoints) // 2

    def report(self) -> BoundaryReport:
        return check_boundary(self.turnpoints)


def validate_permutomino(points: Iterable[Point]) -> BoundaryReport:
    """Check an arbitrary turnpoint cycle; raises the specific fault."""
    return check_boundary(canonical_cycle(points))


def parse_permutomino_text(text: str) -> Permutomino:
    """Parse ``x,y;x,y;...`` turnpoints."""
    pts = []
    for chunk in text.strip().split(";"):
        x_text, _, y_text = chunk.partition(",")
        try:
            pts.append((int(x_text), int(y_text)))
        except ValueError:
            raise ValueError(f"bad turnpoint {chunk!r}") from None
    return Permutomino.from_turnpoints(pts)


def format_permutomino_text(p: Permutomino) -> str:
    return ";".join(f"{x},{y}" for x, y in p.turnpoints)


def side_profile(p: Permutomino) -> tuple[int, int]:
    """(upper sides, left sides) of the boundary.

    Upper sides are the horizontal sides visible from above (traversed
    rightward on the clockwise cycle); left sides are the vertical sides
    traversed downward.
    """
    upper = 0
    left = 0
    for (x1, y1), (x2, y2) in _cyclic_edges(p.turnpoints):
        if y1 == y2 and x2 > x1:
            upper += 1
        elif x1 == x2 and y2 < y1:
            left += 1
    return upper, left


def to_colored_permutation(p: Permutomino) -> ColoredPermutation:
    """The colored square permutation carried by the black turnpoints.

    Walking the canonical cycle, turnpoints alternate white/black with the
    bottom of the leftmost side black; the black points form a permutation
    matrix.  A free fixed point whose black turnpoint lies strictly inside
    the upper walk is colored (fixed points that are records have no walk
    choice and stay uncolored).
    """
    cyc = p.turnpoints
    n = p.size
    blacks = sorted(cyc[1::2])
    if [x for x, _ in blacks] != list(range(n)):
        raise ReconstructionFailed(f"black turnpoints of {cyc!r} miss a column")
    values = tuple(y + 1 for _, y in blacks)
    ul, ur, bl, br = record_flags(values)
    top_right = next(i for i, (x, _) in enumerate(cyc) if x == n - 1)
    colored = frozenset(
        cyc[t][0] + 1
        for t in range(1, top_right, 2)
        if cyc[t][0] == cyc[t][1] and not bl[cyc[t][0]] and not ur[cyc[t][0]]
    )
    return ColoredPermutation(Permutation(values), colored)


def from_colored_permutation(cp: ColoredPermutation) -> Permutomino:
    """The unique convex permutomino whose black turnpoints draw ``cp``.

    The permutation's points become black turnpoints; the upper walk takes
    the upper points (with colored fixed points kept there and uncolored
    free fixed points dropped to the lower walk), and each white corner is
    the one that keeps the boundary alternating.  The result is validated
    and checked to map back to ``cp``.
    """
    values = cp.perm.values
    n = len(values)
    if n < 2:
        raise ValueError("permutominoes start at size 2")
    ul, ur, bl, br = record_flags(values)
    for i in range(n):
        if not (ul[i] or ur[i] or bl[i] or br[i]):
            raise NotSquare(f"point {i + 1} of {values!r} is interior")
    if is_co_decomposable(values):
        raise NotCoIndecomposable(f"{values!r} splits as a skew sum")

    upper_walk: list[Point] = []
    lower_walk: list[Point] = []
    for i in range(1, n + 1):
        black = (i - 1, values[i - 1] - 1)
        free_fixed = values[i - 1] == i and not bl[i - 1] and not ur[i - 1]
        if i == 1:
            lower_walk.append(black)
        elif i in cp.colored:
            upper_walk.append(black)
        elif free_fixed:
            lower_walk.append(black)
        elif ul[i - 1] or ur[i - 1]:
            upper_walk.append(black)
        else:
            lower_walk.append(black)

    blacks = upper_walk + lower_walk[::-1]
    cycle: list[Point] = []
    for t, b in enumerate(blacks):
        nxt = blacks[(t + 1) % len(blacks)]
        cycle.append(b)
        cycle.append((b[0], nxt[1]))
    try:
        permutomino = Permutomino.from_turnpoints(cycle)
    except ValueError as exc:
        raise ReconstructionFailed(
            f"no valid boundary for {values!r} with colored {sorted(cp.colored)}: {exc}"
        ) from exc
    if to_colored_permutation(permutomino) != cp:
        raise ReconstructionFailed(
            f"round trip failed for {values!r} with colored {sorted(cp.colored)}"
        )
    return permutomino
