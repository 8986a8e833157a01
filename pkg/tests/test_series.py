from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idealization.errors import DegreeMismatchError, NotUnitNormalizedError, SeriesShapeError, TruncationError
from idealization.series import (
    BettiSeries,
    TruncatedSeries,
    add,
    b_via_determinant,
    determinant_matrix,
    divide,
    mul,
    one,
    polynomial,
    reciprocal_unit,
    series_from_b,
)


def S(*c):
    return TruncatedSeries(c)


def hand_convolution(a, b):
    """Oracle: coefficient n is sum_{i+j=n} a_i b_j, by explicit enumeration of pairs."""
    D = len(a) - 1
    out = [0] * (D + 1)
    for i in range(D + 1):
        for j in range(D + 1):
            if i + j <= D:
                out[i + j] += a[i] * b[j]
    return tuple(out)


def test_add_examples():
    assert add(S(1, 1, 0), S(0, 0, 0)) == S(1, 1, 0)
    assert add(S(1, 1, 1), S(1, 1, 1)) == S(2, 2, 2)
    assert add(S(1, 2), S(3, 4)) == S(4, 6)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        add(S(1, 2), S(1, 2, 3))
    with pytest.raises(DegreeMismatchError):
        mul(S(1), S(1, 2))


def test_mul_examples():
    assert mul(S(1, 1, 0), S(1, 1, 0)) == S(1, 2, 1)
    assert mul(polynomial([1, 1], 3), one(3)) == S(1, 1, 0, 0)
    a, b = (1, 1, 0, 0), (1, 1, 2, 3)
    assert hand_convolution(a, b) == (1, 2, 3, 5)
    assert mul(S(*a), S(*b)).coeffs == (1, 2, 3, 5)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=12), st.data())
def test_mul_matches_hand_convolution(a, data):
    b = data.draw(st.lists(st.integers(-50, 50), min_size=len(a), max_size=len(a)))
    assert mul(S(*a), S(*b)).coeffs == hand_convolution(a, b)


def test_no_padding_and_truncate_down_only():
    s = S(1, 2, 3)
    assert s.truncate(1) == S(1, 2)
    with pytest.raises(TruncationError):
        s.truncate(3)


def test_betti_series_rejects_negative():
    with pytest.raises(ValueError):
        BettiSeries((1, -1))


def test_reciprocal_examples():
    assert reciprocal_unit(polynomial([1, -1], 4), 4).coeffs == (1, 1, 1, 1, 1)
    fib = reciprocal_unit(polynomial([1, -1, -1], 6), 6)
    assert fib.coeffs == (1, 1, 2, 3, 5, 8, 13)
    assert mul(polynomial([1, -1, -1], 6), fib) == one(6)
    dbl = reciprocal_unit(polynomial([1, -2], 3), 3)
    assert dbl.coeffs == (1, 2, 4, 8)
    assert all(dbl[i] == 2 * dbl[i - 1] for i in range(1, 4))


def test_reciprocal_errors():
    with pytest.raises(NotUnitNormalizedError):
        reciprocal_unit(polynomial([2, -1], 3), 3)
    with pytest.raises(SeriesShapeError):
        reciprocal_unit(polynomial([1, 1], 3), 3)
    with pytest.raises(TruncationError):
        reciprocal_unit(polynomial([1, -1], 2), 3)


def test_divide_examples():
    q = divide(polynomial([1, 1], 5), polynomial([1, -1, -1], 5), 5)
    assert q.coeffs == (1, 2, 3, 5, 8, 13)
    assert mul(q, polynomial([1, -1, -1], 5)) == polynomial([1, 1], 5)
    assert divide(one(3), polynomial([1, -1], 3), 3).coeffs == (1, 1, 1, 1)
    q = divide(polynomial([1, 1], 3), polynomial([1, -1], 3), 3)
    assert q.coeffs == (1, 2, 2, 2)
    assert mul(q, polynomial([1, -1], 3)) == polynomial([1, 1], 3)


def test_divide_propagates_errors():
    with pytest.raises(SeriesShapeError):
        divide(one(2), polynomial([1, 0, 1], 2), 2)


tails = st.lists(st.integers(0, 9), max_size=20)


@given(tails, st.integers(0, 64))
@settings(max_examples=60)
def test_remultiplication(tail, D):
    den = polynomial([1] + [-x for x in tail], D)
    B = reciprocal_unit(den, D)
    assert mul(den, TruncatedSeries(B.coeffs)) == one(D)
    assert all(c >= 0 for c in B)


@given(tails, st.lists(st.integers(0, 9), max_size=20), st.integers(0, 30))
def test_monotone_domination(tail, extra, D):
    extra = extra + [0] * (len(tail) - len(extra))
    deeper = [x + y for x, y in zip(tail, extra)] + extra[len(tail):]
    B = reciprocal_unit(polynomial([1] + [-x for x in tail], D), D)
    B2 = reciprocal_unit(polynomial([1] + [-x for x in deeper], D), D)
    assert all(x <= y for x, y in zip(B, B2))


@given(st.lists(st.integers(-9, 0), max_size=12), st.integers(0, 12))
@settings(max_examples=60, deadline=None)
def test_determinant_matches_recurrence(tail, i):
    b = [1] + tail
    assert b_via_determinant(b, i) == reciprocal_unit(series_from_b(b, i), i)[i]


def test_determinant_examples():
    assert b_via_determinant([1], 0) == 1
    assert b_via_determinant([1, -1, -1], 2) == 2
    assert b_via_determinant([1, -1, -1], 5) == 8


def test_determinant_matrix_layout_small():
    # i = 2: rows scaled by 2, 1, then the (1, 0, 1) row
    assert determinant_matrix([1, 5, 7], 2) == [[0, 10, 14], [0, 1, 5], [1, 0, 1]]


def test_determinant_cap_and_unit():
    with pytest.raises(ValueError):
        b_via_determinant([1, -1], 17)
    assert b_via_determinant([1, -1], 17, cap=17) == 1
    with pytest.raises(NotUnitNormalizedError):
        b_via_determinant([2, -1], 3)


def test_determinant_also_valid_for_signed_b():
    # the determinant identity does not need b_j <= 0; compare with exact rational inversion
    b = [1, 3, -2, 5]
    inv = [Fraction(1)]
    for n in range(1, 7):
        inv.append(-sum(b[j] * inv[n - j] for j in range(1, min(n, 3) + 1)))
    assert [b_via_determinant(b, n) for n in range(7)] == inv
