import pytest

from squareperm.oracle import brute_enumerate, enumerate_permutominoes
from squareperm.perm import ColoredPermutation, Permutation
from squareperm.permutomino import (
    DuplicateSideOnLine,
    MissingSideOnLine,
    NotAlternating,
    NotCoIndecomposable,
    NotConvex,
    Permutomino,
    SelfIntersecting,
    check_boundary,
    format_permutomino_text,
    from_colored_permutation,
    parse_permutomino_text,
    side_profile,
    to_colored_permutation,
    validate_permutomino,
)
from squareperm.series import CountFamily, count

UNIT_SQUARE = [(0, 1), (1, 1), (1, 0), (0, 0)]
# cells {(0,0),(0,1),(1,0)}
L_TROMINO = [(0, 2), (1, 2), (1, 1), (2, 1), (2, 0), (0, 0)]
# cells {(0,0),(1,0),(1,1)}; its permutation is the identity with a colored 2
STAIRCASE = [(0, 1), (1, 1), (1, 2), (2, 2), (2, 0), (0, 0)]


def test_validate_unit_square():
    report = validate_permutomino(UNIT_SQUARE)
    assert report.size == 2
    assert report.directed and report.parallelogram


def test_validate_l_tromino():
    report = validate_permutomino(L_TROMINO)
    assert report.size == 3


def test_validate_catches_missing_side():
    # boundary of the full 2x2 square: the line x=1 carries no side
    with pytest.raises(MissingSideOnLine) as info:
        validate_permutomino([(0, 2), (2, 2), (2, 0), (0, 0)])
    assert (info.value.axis, info.value.line) == ("x", 1)


def test_validate_catches_bad_boundaries():
    with pytest.raises(NotAlternating):
        validate_permutomino([(0, 0), (1, 1), (1, 0), (0, 1)])
    with pytest.raises(DuplicateSideOnLine):
        check_boundary([(0, 3), (1, 3), (1, 2), (3, 2), (3, 1), (1, 1), (1, 0), (0, 0)])
    # a zigzag revisiting a column line from the other side
    with pytest.raises((SelfIntersecting, DuplicateSideOnLine, NotConvex)):
        check_boundary(
            [(0, 2), (2, 2), (2, 1), (1, 1), (1, 0), (3, 0), (3, 3), (0, 3)],
            reduced=False,
        )


def test_not_convex():
    # a valley: every line carries one side but the bottom of the dip at
    # (2,1) has boundary points beyond it in all four directions
    points = [(0, 3), (1, 3), (1, 1), (2, 1), (2, 2), (3, 2), (3, 0), (0, 0)]
    with pytest.raises(NotConvex) as info:
        check_boundary(points)
    assert info.value.point in {(1, 1), (2, 1)}


def test_canonical_form_and_text():
    p = Permutomino.from_turnpoints([(1, 1), (1, 2), (0, 2), (0, 1)])
    assert p.turnpoints[0] == (0, 1)
    assert p.size == 2
    text = format_permutomino_text(p)
    assert parse_permutomino_text(text) == p
    with pytest.raises(ValueError):
        Permutomino(tuple(reversed(UNIT_SQUARE)))


def test_phi_examples():
    assert to_colored_permutation(Permutomino.from_turnpoints(UNIT_SQUARE)) == (
        ColoredPermutation(Permutation((1, 2)), frozenset())
    )
    assert to_colored_permutation(Permutomino.from_turnpoints(L_TROMINO)) == (
        ColoredPermutation(Permutation((1, 3, 2)), frozenset())
    )
    assert to_colored_permutation(Permutomino.from_turnpoints(STAIRCASE)) == (
        ColoredPermutation(Permutation((1, 2, 3)), frozenset({2}))
    )


def test_phi_inverse_examples():
    assert from_colored_permutation(
        ColoredPermutation(Permutation((1, 2)), frozenset())
    ) == Permutomino.from_turnpoints(UNIT_SQUARE)
    assert from_colored_permutation(
        ColoredPermutation(Permutation((1, 3, 2)), frozenset())
    ) == Permutomino.from_turnpoints(L_TROMINO)
    assert from_colored_permutation(
        ColoredPermutation(Permutation((1, 2, 3)), frozenset({2}))
    ) == Permutomino.from_turnpoints(STAIRCASE)


def test_phi_inverse_rejects_bad_inputs():
    with pytest.raises(NotCoIndecomposable):
        from_colored_permutation(ColoredPermutation(Permutation((2, 1)), frozenset()))
    from squareperm.perm import NotSquare

    with pytest.raises(NotSquare):
        from_colored_permutation(
            ColoredPermutation(Permutation((1, 4, 3, 2, 5)), frozenset())
        )


@pytest.mark.parametrize("n", range(2, 6))
def test_phi_round_trip_exhaustive(n):
    direct = enumerate_permutominoes(n)
    assert len(direct) == count(CountFamily.CONVEX_PERMUTOMINO, n)
    images = set()
    for p in direct:
        cp = to_colored_permutation(p)
        images.add(cp)
        assert from_colored_permutation(cp) == p
    assert len(images) == len(direct)
    assert images == set(brute_enumerate(CountFamily.CONVEX_PERMUTOMINO, n))


def test_phi_image_colored_points_are_free():
    for n in range(2, 6):
        for p in enumerate_permutominoes(n):
            cp = to_colored_permutation(p)
            # construction of ColoredPermutation enforces freeness; check
            # the colored points are genuine fixed points as well
            for i in cp.colored:
                assert cp.perm.values[i - 1] == i


def test_side_profile_examples():
    assert side_profile(Permutomino.from_turnpoints(UNIT_SQUARE)) == (1, 1)
    assert side_profile(Permutomino.from_turnpoints(L_TROMINO)) == (2, 2)


def test_side_profile_histogram_matches_series():
    from squareperm.oracle import boundary_refined_histogram
    from squareperm.series import refined_series_by_enumeration

    cp_series = refined_series_by_enumeration(CountFamily.CONVEX_PERMUTOMINO, 4)
    assert boundary_refined_histogram(4) == cp_series[4]


@pytest.mark.parametrize(
    "family,expected",
    [
        (CountFamily.DIRECTED_PERMUTOMINO, {2: 1, 3: 3, 4: 10}),
        (CountFamily.PARALLELOGRAM_PERMUTOMINO, {2: 1, 3: 2, 4: 5}),
    ],
)
def test_directed_and_parallelogram_counts(family, expected):
    for n, want in expected.items():
        assert len(brute_enumerate(family, n)) == want
        assert count(family, n) == want
