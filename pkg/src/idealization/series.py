"""Truncated formal power series over Python integers.

A series carries its truncation degree D explicitly: ``coeffs`` has exactly
D + 1 entries and nothing is known past index D.  Operations never pad a
series out to a higher degree; they only truncate down.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .config import DEFAULT
from .errors import (
    ConsistencyError,
    DegreeMismatchError,
    NotUnitNormalizedError,
    SeriesShapeError,
    TruncationError,
)


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, D: int) -> "TruncatedSeries":
        if D > self.degree:
            raise TruncationError(f"series known to degree {self.degree}, degree {D} requested")
        return type(self)(self.coeffs[: D + 1])

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coeffs) + f"; D={self.degree})"


class BettiSeries(TruncatedSeries):
    """A truncated series with nonnegative coefficients (a Poincare series)."""

    def __post_init__(self):
        super().__post_init__()
        if any(c < 0 for c in self.coeffs):
            raise ValueError(f"Betti series coefficients must be >= 0: {self.coeffs}")


def polynomial(coeffs: Sequence[int], D: int, cls=TruncatedSeries) -> TruncatedSeries:
    """The exact polynomial ``sum coeffs[i] t^i`` truncated at degree D.

    Unlike the series constructors, a polynomial is known exactly in every
    degree, so zero-filling up to D is correct here.
    """
    coeffs = list(coeffs)[: D + 1]
    return cls(tuple(coeffs) + (0,) * (D + 1 - len(coeffs)))


def one(D: int) -> TruncatedSeries:
    return polynomial([1], D)


def _check_degrees(a: TruncatedSeries, b: TruncatedSeries):
    if a.degree != b.degree:
        raise DegreeMismatchError(f"truncation degrees differ: {a.degree} vs {b.degree}")


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_degrees(a, b)
    return TruncatedSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common degree."""
    _check_degrees(a, b)
    D = a.degree
    out = [0] * (D + 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j in range(D + 1 - i):
            out[i + j] += x * b.coeffs[j]
    return TruncatedSeries(tuple(out))


def shift(a: TruncatedSeries, D: int | None = None) -> TruncatedSeries:
    """``t * a`` truncated at D (default ``a.degree + 1``, the largest degree it is known to)."""
    if D is None:
        D = a.degree + 1
    if D - 1 > a.degree:
        raise TruncationError(f"t*P needs P to degree {D - 1}, it is known to degree {a.degree}")
    return TruncatedSeries((0,) + a.coeffs[:D])


def one_minus_t_times(p: TruncatedSeries, D: int) -> TruncatedSeries:
    """The denominator ``1 - t p(t)`` truncated at D."""
    s = shift(p, D)
    return TruncatedSeries((1,) + tuple(-c for c in s.coeffs[1:]))


def _check_denominator(den: TruncatedSeries, D: int):
    if den.degree < D:
        raise TruncationError(f"denominator known to degree {den.degree}, degree {D} requested")
    if den.coeffs[0] != 1:
        raise NotUnitNormalizedError(f"denominator constant term is {den.coeffs[0]}, expected 1")
    for j in range(1, D + 1):
        if den.coeffs[j] > 0:
            raise SeriesShapeError(
                f"denominator coefficient {j} is {den.coeffs[j]} > 0; expected shape 1 - t*P(t) with P >= 0"
            )


def reciprocal_unit(den: TruncatedSeries, D: int) -> BettiSeries:
    """Reciprocal of ``den = 1 + b_1 t + b_2 t^2 + ...`` with every b_j <= 0.

    Uses ``B_0 = 1``, ``B_i = sum_{j=1}^{i} |b_j| B_{i-j}``; every term is
    nonnegative so the result is a Betti series.
    """
    _check_denominator(den, D)
    b = den.coeffs
    B = [1]
    for i in range(1, D + 1):
        B.append(sum(-b[j] * B[i - j] for j in range(1, i + 1) if b[j]))
    return BettiSeries(tuple(B))


def divide(num: TruncatedSeries, den: TruncatedSeries, D: int) -> TruncatedSeries:
    """``num / den`` to degree D by long division.

    Solves ``q_n = num_n - sum_{j=1}^{n} den_j q_{n-j}`` directly; this
    never forms the reciprocal, so it is an independent route from
    ``mul(num, reciprocal_unit(den, D))``.
    """
    _check_denominator(den, D)
    if num.degree < D:
        raise TruncationError(f"numerator known to degree {num.degree}, degree {D} requested")
    d = den.coeffs
    q: list[int] = []
    for n in range(D + 1):
        q.append(num.coeffs[n] - sum(d[j] * q[n - j] for j in range(1, n + 1) if d[j]))
    cls = BettiSeries if all(c >= 0 for c in q) else TruncatedSeries
    return cls(tuple(q))


def _determinant(rows: list[list[Fraction]]) -> Fraction:
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        p = m[c][c]
        det *= p
        for r in range(c + 1, n):
            f = m[r][c] / p
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def determinant_matrix(b: Sequence[int], i: int) -> list[list[int]]:
    """The (i+1) x (i+1) integer matrix whose determinant is ``i! * B_i``.

    Row 0 is ``(0, i b_1, ..., i b_i)``; row r in 1..i-1 is zero up to
    column r, then ``(i - r) * (b_0, b_1, ..., b_{i-r})``; the last row is
    ``(1, 0, ..., 0, 1)``.  Entries b_j past the end of ``b`` are zero.
    """
    def coef(j):
        return b[j] if 0 <= j < len(b) else 0

    rows = []
    for r in range(i):
        scale = i - r
        lead = max(r, 1)
        row = [0] * (i + 1)
        for c in range(lead, i + 1):
            row[c] = scale * coef(c - r)
        rows.append(row)
    last = [0] * (i + 1)
    last[0] = 1
    last[i] = 1
    rows.append(last)
    return rows


def b_via_determinant(b: Sequence[int], i: int, cap: int | None = None) -> int:
    """``B_i`` from the scaled determinant, divided exactly by ``i!``.

    ``b`` is read as the polynomial ``b_0 + b_1 t + ...`` (b_0 must be 1).
    This is a cross-check for :func:`reciprocal_unit`, not the fast path.
    """
    cap = DEFAULT.determinant_cap if cap is None else cap
    if not b or b[0] != 1:
        raise NotUnitNormalizedError("b_0 must equal 1")
    if i < 0:
        raise ValueError("index must be >= 0")
    if i > cap:
        raise ValueError(f"determinant route capped at i <= {cap}, got {i}")
    if i == 0:
        return 1
    mat = [[Fraction(x) for x in row] for row in determinant_matrix(b, i)]
    value = _determinant(mat) / factorial(i)
    if value.denominator != 1:
        raise ConsistencyError(f"determinant / {i}! = {value} is not an integer")
    return value.numerator


def series_from_b(b: Iterable[int], D: int) -> TruncatedSeries:
    return polynomial(list(b), D)
