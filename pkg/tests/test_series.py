import pytest

from squareperm.polyxy import (
    format_poly,
    p_is_symmetric,
    poly,
    poly_from_json,
    poly_to_json,
)
from squareperm.series import (
    BivariateSeries,
    CountFamily,
    DomainError,
    count,
    free_word_series,
    marked_word_series,
    narayana_reciprocity_check,
    narayana_series,
    nw_failure_series,
    refined_series_by_enumeration,
    series_lines,
    series_to_json,
    square_refined_series,
    sw_failure_series,
)


def test_count_tables():
    assert [count(CountFamily.SQUARE, n) for n in range(1, 7)] == [1, 2, 6, 24, 104, 464]
    assert [count(CountFamily.CONVEX_PERMUTOMINO, n) for n in range(2, 7)] == [1, 4, 18, 84, 394]
    assert [count(CountFamily.FULLY_INDEC, n) for n in range(1, 5)] == [1, 0, 0, 2]
    assert count(CountFamily.MARKED_WORDS, 3) == 10
    assert count(CountFamily.TRIANGULAR, 4) == 20
    assert [count(CountFamily.DIRECTED_PERMUTOMINO, n) for n in (2, 3, 4)] == [1, 3, 10]
    assert [count(CountFamily.PARALLELOGRAM_PERMUTOMINO, n) for n in (2, 3, 4)] == [1, 2, 5]
    assert [count(CountFamily.PARALLEL, n) for n in range(1, 6)] == [1, 2, 5, 14, 42]


def test_count_domain_errors():
    with pytest.raises(DomainError):
        count(CountFamily.SQUARE, 0)
    with pytest.raises(DomainError):
        count(CountFamily.MARKED_WORDS, 1)
    with pytest.raises(DomainError):
        count(CountFamily.CONVEX_PERMUTOMINO, 1)


def test_narayana_series():
    nar = narayana_series(6)
    assert nar[1] == poly((1, 0, 0))
    assert nar[3] == poly((1, 2, 0), (3, 1, 1), (1, 0, 2))
    assert nar.values_at_ones()[1:6] == [1, 2, 5, 14, 42]
    for n in range(1, 7):
        assert p_is_symmetric(nar[n])


def test_free_and_marked_word_series():
    w = free_word_series(4)
    step = poly((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1))  # (1+x)(1+y)
    from squareperm.polyxy import p_mul

    assert w[2] == p_mul(step, step)
    m = marked_word_series(12)
    assert m[2] == poly((2, 2, 2))
    for n in range(2, 13):
        assert sum(m[n].values()) == count(CountFamily.MARKED_WORDS, n)


def test_failure_series_specialize_to_central_binomials():
    from math import comb

    nw = nw_failure_series(12)
    sw = sw_failure_series(12)
    for n in range(1, 13):
        assert sum(nw[n].values()) == comb(2 * n - 2, n - 1)
        assert sum(sw[n].values()) == comb(2 * n - 2, n - 1)
    assert nw[1] == poly((1, 1, 1))
    assert nw[2] == poly((2, 2, 2))


def test_rejected_denominator_variant_fails():
    bad = nw_failure_series(4, plus_variant=True)
    assert sum(bad[3].values()) == 4  # the correct value is C(4,2) = 6


def test_square_refined_series():
    sq = square_refined_series(8)
    assert sq[2] == poly((2, 2, 2))
    assert sq[3] == poly((3, 3, 3), (1, 3, 2), (1, 2, 3), (1, 2, 2))
    for n in range(2, 9):
        assert sum(sq[n].values()) == count(CountFamily.SQUARE, n)
        assert p_is_symmetric(sq[n])


def test_refined_series_match_brute_histograms():
    from squareperm.oracle import brute_refined_histogram

    sq = square_refined_series(6)
    for n in range(2, 7):
        assert sq[n] == brute_refined_histogram(CountFamily.SQUARE, n)


def test_enumeration_backed_series():
    cp = refined_series_by_enumeration(CountFamily.CONVEX_PERMUTOMINO, 6)
    assert cp[2] == poly((1, 1, 1))
    assert sum(cp[4].values()) == 18
    for n in range(2, 7):
        assert sum(cp[n].values()) == count(CountFamily.CONVEX_PERMUTOMINO, n)
    fi = refined_series_by_enumeration(CountFamily.FULLY_INDEC, 6)
    for n in range(1, 7):
        assert sum(fi[n].values()) == count(CountFamily.FULLY_INDEC, n)


def test_narayana_reciprocity():
    assert narayana_reciprocity_check(1)
    assert narayana_reciprocity_check(10)
    assert not narayana_reciprocity_check(3, flip_sign=True)


def test_difference_structure_matches_failure_census():
    # the words that encode nothing split by prefix length k with
    # 2 * T_k * 4^(n-k-2) words per failure kind
    from math import comb

    for n in range(3, 9):
        diff = count(CountFamily.MARKED_WORDS, n) - count(CountFamily.SQUARE, n)
        total = sum(
            4 * comb(2 * k - 2, k - 1) * 4 ** (n - k - 2) for k in range(1, n - 1)
        )
        assert diff == total


def test_truncation_stability():
    small = square_refined_series(5)
    large = square_refined_series(9)
    for n in range(6):
        assert small[n] == large[n]
    a = narayana_series(4)
    b = narayana_series(8)
    for n in range(5):
        assert a[n] == b[n]


def test_series_formatting_and_json():
    sq = square_refined_series(3)
    lines = series_lines(sq)
    assert lines[3] == "t^3: 3*x^3*y^3 + x^3*y^2 + x^2*y^3 + x^2*y^2"
    data = series_to_json(sq)
    assert data["order"] == 3
    assert data["coefficients"]["2"] == {"2,2": 2}
    assert poly_from_json(poly_to_json(sq[3])) == sq[3]
    assert format_poly({}) == "0"
    assert format_poly({(0, 0): -3, (1, 1): 1}) == "x*y - 3"


def test_bivariate_series_guard():
    with pytest.raises(ValueError):
        BivariateSeries(2, ({},))
