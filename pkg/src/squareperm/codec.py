"""Marked-word encoding of colored square permutations and its decoders.

A marked word of length n is a sequence of letter pairs, framed by
``XY`` at both ends, whose interior pairs come from {U,D} x {L,R},
together with a mark m pointing at a position whose second letter is L
or Y.  ``encode`` turns a colored square permutation into the pair of
its horizontal and vertical profiles plus the mark s(1); ``decode``
rebuilds the permutation left to right and, on the words that encode
nothing, stops with a classified failure instead.

Three decoding modes share the insertion rules and differ only in extra
stopping conditions: SQUARE accepts all square permutations,
FULLY_INDEC additionally rejects decomposable and co-decomposable ones,
PERMUTOMINO rejects co-decomposable ones but accepts colored fixed
points, which makes its successes the images of convex permutominoes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .perm import (
    ColoredPermutation,
    NotSquare,
    Permutation,
    as_colored,
    record_flags,
    standardize,
)

INTERIOR_PAIRS = ("UL", "UR", "DL", "DR")
FRAME = "XY"


class WordSyntaxError(ValueError):
    """Malformed marked-word text or letter sequence."""


class BadFrame(ValueError):
    """The first or last letter pair is not XY."""


class InvalidMark(ValueError):
    """Mark out of range or pointing at a row labeled R."""


@dataclass(frozen=True)
class MarkedWord:
    """Letter pairs plus a mark; the mark is 1-based and must sit on L or Y."""

    letters: tuple[str, ...]
    mark: int

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        n = len(letters)
        if n < 2:
            raise WordSyntaxError("a marked word has at least two letters")
        if letters[0] != FRAME or letters[-1] != FRAME:
            raise BadFrame(f"endpoints must be {FRAME!r}")
        for i in range(1, n - 1):
            if letters[i] not in INTERIOR_PAIRS:
                raise WordSyntaxError(f"bad interior letter {letters[i]!r} at {i + 1}")
        if not 1 <= self.mark <= n:
            raise InvalidMark(f"mark {self.mark} out of range 1..{n}")
        if letters[self.mark - 1][1] not in "LY":
            raise InvalidMark(
                f"mark {self.mark} sits on {letters[self.mark - 1]!r}; needs L or Y"
            )

    @property
    def size(self) -> int:
        return len(self.letters)


def parse_marked_word(text: str) -> MarkedWord:
    """Parse ``pair(,pair)*@INT`` text, e.g. ``XY,UR,UL,DR,XY@3``."""
    body, sep, mark_text = text.strip().rpartition("@")
    if not sep:
        raise WordSyntaxError("missing @mark")
    try:
        mark = int(mark_text)
    except ValueError:
        raise WordSyntaxError(f"bad mark {mark_text!r}") from None
    letters = []
    for token in body.split(","):
        token = token.strip()
        if token != FRAME and token not in INTERIOR_PAIRS:
            raise WordSyntaxError(f"bad letter pair {token!r}")
        letters.append(token)
    return MarkedWord(tuple(letters), mark)


def format_marked_word(word: MarkedWord) -> str:
    return ",".join(word.letters) + f"@{word.mark}"


def marked_word_to_json(word: MarkedWord) -> dict:
    return {"letters": list(word.letters), "mark": word.mark}


def marked_word_from_json(data: dict) -> MarkedWord:
    return MarkedWord(tuple(data["letters"]), int(data["mark"]))


class DecodeMode(enum.Enum):
    SQUARE = "square"
    FULLY_INDEC = "fully-indec"
    PERMUTOMINO = "permutomino"


class FailureKind(enum.Enum):
    #: the partial permutation got confined to the bottom-left corner
    SW = "SW"
    #: the partial permutation got confined to the top-left corner
    NW = "NW"


@dataclass(frozen=True)
class Success:
    result: ColoredPermutation


@dataclass(frozen=True)
class Failure:
    stop_index: int
    kind: FailureKind
    prefix: Permutation
    pair: tuple[str, str]
    suffix_u: str
    suffix_v: str


@dataclass(frozen=True)
class InternalContradiction:
    diagnostic: str


DecodeOutcome = Union[Success, Failure, InternalContradiction]


@dataclass
class DecodeStats:
    steps: int = 0
    row_advances: int = 0


def encode(perm: ColoredPermutation | Permutation) -> MarkedWord:
    """Profiles plus mark of a colored square permutation.  O(n).

    Column i contributes U when its point is an upper point and not
    colored, else D; row j contributes L when its point is a left point
    and not colored, else R; the extremal columns and rows are the XY
    frame and the mark is s(1).
    """
    cp = as_colored(perm)
    values = cp.perm.values
    n = len(values)
    if n < 2:
        raise ValueError("marked words start at length 2")
    ul, ur, bl, br = record_flags(values)
    for i in range(n):
        if not (ul[i] or ur[i] or bl[i] or br[i]):
            raise NotSquare(f"point {i + 1} of {values!r} is interior")
    inv = [0] * (n + 1)
    for i, v in enumerate(values):
        inv[v] = i + 1
    colored = cp.colored
    letters = [FRAME]
    for idx in range(2, n):
        i = idx - 1  # 0-based column
        u = "U" if (ul[i] or ur[i]) and idx not in colored else "D"
        pos = inv[idx]  # 1-based position of the point in row idx
        p = pos - 1
        v = "L" if (ul[p] or bl[p]) and pos not in colored else "R"
        letters.append(u + v)
    letters.append(FRAME)
    return MarkedWord(tuple(letters), values[0])


def decode(
    word: MarkedWord,
    mode: DecodeMode = DecodeMode.SQUARE,
    stats: Optional[DecodeStats] = None,
) -> DecodeOutcome:
    """Left-to-right reconstruction of the permutation encoded by ``word``.

    Rows 1..n are labeled bottom to top by the second letters, columns
    left to right by the first.  The first point goes to row mark; each
    later column is placed by the first applicable rule below, where LU,
    LL, RU, RL are the rows of the most recent point on each of the four
    record paths:

    * last column: take the unique free row (plus mode checks).
    * U before the top row is used: lowest free L/Y row above LU.
    * U after: if the prefix fills the top-left block, the only legal row
      is the one just below the block and it must read L; otherwise the
      highest free R/Y row below RU.
    * D before the bottom row is used: highest free L/Y row below LL,
      refused when the prefix fills the top-left block and that row reads
      L (the word encodes nothing in that case).
    * D after: refused if the prefix fills the bottom-left block (except
      that PERMUTOMINO mode inserts a colored fixed point when row i
      reads R); otherwise the lowest free R/Y row above RL.

    FULLY_INDEC additionally stops on any bottom-left-confined prefix at
    a U-before-top step or a final point in the top row, and both
    FULLY_INDEC and PERMUTOMINO stop on any top-left-confined prefix at
    the two middle rules or a final point in the bottom row.

    The total number of row-pointer advances is O(n); pass ``stats`` to
    measure it.  A well-formed marked word never yields
    InternalContradiction (the exhaustive audits check this).
    """
    letters = word.letters
    n = len(letters)
    vlab = []
    rows_ly = []
    rows_ry = []
    for j, pair in enumerate(letters, start=1):
        v = pair[1]
        vlab.append(v)
        if v != "R":
            rows_ly.append(j)
        if v != "L":
            rows_ry.append(j)
    used = bytearray(n + 2)
    sigma = [0] * (n + 1)
    colored: list[int] = []

    m = word.mark
    sigma[1] = m
    used[m] = 1
    acc = m  # running sum of inserted rows, finds the leftover row
    min_used = max_used = m
    lu = ll = m
    max_in = m == n
    min_in = m == 1
    ru = n if max_in else 0
    rl = 1 if min_in else 0

    up_ly = 0
    dn_ly = len(rows_ly) - 1
    up_ry = 0
    dn_ry = len(rows_ry) - 1
    advances = 0

    def failure(i: int, kind: FailureKind, pair: tuple[str, str]) -> Failure:
        head = sigma[1:i]
        if kind is FailureKind.SW:
            prefix = Permutation(tuple(head))
        else:
            prefix = standardize(head)
        if i >= n:
            suffix_u = suffix_v = ""
        else:
            suffix_u = "".join(letters[k][0] for k in range(i, n))
            if kind is FailureKind.SW:
                suffix_v = "".join(letters[k][1] for k in range(i, n))
            else:
                suffix_v = "Y" + "".join(vlab[1 : n - i])
        if stats is not None:
            stats.steps = i - 1
            stats.row_advances = advances
        return Failure(i, kind, prefix, pair, suffix_u, suffix_v)

    square = mode is DecodeMode.SQUARE
    permutomino = mode is DecodeMode.PERMUTOMINO
    fully_indec = mode is DecodeMode.FULLY_INDEC

    for i in range(2, n + 1):
        ui = letters[i - 1][0]
        if i == n:
            r = n * (n + 1) // 2 - acc
            if not square and r == 1:
                return failure(n, FailureKind.NW, (ui, vlab[0]))
            if fully_indec and r == n:
                return failure(n, FailureKind.SW, (ui, vlab[n - 1]))
            sigma[n] = r
            if stats is not None:
                stats.steps = n - 1
                stats.row_advances = advances
            return Success(
                ColoredPermutation(Permutation(tuple(sigma[1:])), frozenset(colored))
            )
        if ui == "U" and not max_in:
            if fully_indec and max_used == i - 1:
                return failure(i, FailureKind.SW, (ui, vlab[i - 1]))
            while up_ly < len(rows_ly) and (
                rows_ly[up_ly] <= lu or used[rows_ly[up_ly]]
            ):
                up_ly += 1
                advances += 1
            if up_ly == len(rows_ly):
                return InternalContradiction(
                    f"no free L/Y row above {lu} at column {i}"
                )
            j = rows_ly[up_ly]
            lu = j
        elif ui == "U":
            confined = min_used == n - i + 2
            if confined and not square:
                return failure(i, FailureKind.NW, (ui, vlab[n - i]))
            if confined:
                r = n - i + 1
                if vlab[r - 1] != "L":
                    return failure(i, FailureKind.NW, (ui, vlab[r - 1]))
                j = r
                ru = r
                ll = r
            else:
                while dn_ry >= 0 and (rows_ry[dn_ry] >= ru or used[rows_ry[dn_ry]]):
                    dn_ry -= 1
                    advances += 1
                if dn_ry < 0:
                    return InternalContradiction(
                        f"no free R/Y row below {ru} at column {i}"
                    )
                j = rows_ry[dn_ry]
                ru = j
        elif not min_in:  # ui == "D", bottom row still free
            confined = min_used == n - i + 2
            if confined and not square:
                return failure(i, FailureKind.NW, (ui, vlab[n - i]))
            while dn_ly >= 0 and (rows_ly[dn_ly] >= ll or used[rows_ly[dn_ly]]):
                dn_ly -= 1
                advances += 1
            if dn_ly < 0:
                return InternalContradiction(
                    f"no free L/Y row below {ll} at column {i}"
                )
            j = rows_ly[dn_ly]
            if confined and j == n - i + 1:
                return failure(i, FailureKind.NW, (ui, "L"))
            ll = j
        else:  # ui == "D", bottom row used
            if max_used == i - 1:
                if permutomino:
                    if vlab[i - 1] == "R":
                        j = i
                        colored.append(i)
                        rl = i
                    else:
                        return failure(i, FailureKind.SW, (ui, "L"))
                else:
                    return failure(i, FailureKind.SW, (ui, vlab[i - 1]))
            else:
                while up_ry < len(rows_ry) and (
                    rows_ry[up_ry] <= rl or used[rows_ry[up_ry]]
                ):
                    up_ry += 1
                    advances += 1
                if up_ry == len(rows_ry):
                    return InternalContradiction(
                        f"no free R/Y row above {rl} at column {i}"
                    )
                j = rows_ry[up_ry]
                rl = j
        sigma[i] = j
        used[j] = 1
        acc += j
        if j < min_used:
            min_used = j
        if j > max_used:
            max_used = j
        if j == n:
            max_in = True
            ru = n
        if j == 1:
            min_in = True
            rl = 1
    raise AssertionError("unreachable: loop always returns at i == n")
