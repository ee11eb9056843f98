"""Truncated power series with coefficients in the group ring Z[e]/(e^r - 1).

A BigradedSeries stores r parallel coefficient rows: coeffs[i][n] is the
coefficient of e^i t^n.  The t-variable is truncated at a fixed order N,
the e-variable is exact (exponents live in Z/r).  With r = 1 this is an
ordinary truncated series, which is how the single-graded formulas are
represented throughout.

Coefficients are exact rationals: Hilbert series of actual varieties have
nonnegative integer entries, but the orbifold correction terms that build
them do not, so integrality is asserted by callers where it is a theorem,
never by the container.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import (
    IncompatibleSeriesError,
    NonInvertibleFactorError,
    UnnormalizedResidualError,
)
from .exact import Rational, format_rational, parse_rational

__all__ = ["Bidegree", "BigradedSeries", "geometric_factor", "one_minus"]

Scalar = Union[int, Rational]


@dataclass(frozen=True, order=True)
class Bidegree:
    """Degree (n, i) in Z >= 0 (t-degree) x Z/r (e-degree)."""

    n: int
    i: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"t-degree must be nonnegative, got {self.n}")
        if self.i < 0:
            raise ValueError(f"e-degree must be nonnegative, got {self.i}")

    def __str__(self):
        return f"({self.n},{self.i})"


class BigradedSeries:
    """Immutable truncated series in Z[[t]][e]/(e^r - 1)."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs: Iterable[Iterable[Scalar]]):
        if r < 1:
            raise IncompatibleSeriesError(f"grading modulus must be >= 1, got {r}")
        rows = tuple(tuple(Rational(c) for c in row) for row in coeffs)
        if len(rows) != r:
            raise IncompatibleSeriesError(f"expected {r} rows, got {len(rows)}")
        if not rows[0]:
            raise IncompatibleSeriesError("rows must contain the constant term")
        if any(len(row) != len(rows[0]) for row in rows):
            raise IncompatibleSeriesError("rows must have equal length")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "coeffs", rows)

    def __setattr__(self, *_):
        raise AttributeError("BigradedSeries is immutable")

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, r: int, trunc: int) -> "BigradedSeries":
        return cls(r, [[0] * (trunc + 1) for _ in range(r)])

    @classmethod
    def one(cls, r: int, trunc: int) -> "BigradedSeries":
        rows = [[0] * (trunc + 1) for _ in range(r)]
        rows[0][0] = 1
        return cls(r, rows)

    @classmethod
    def monomial(cls, r: int, trunc: int, d: Bidegree, c: Scalar = 1) -> "BigradedSeries":
        rows = [[0] * (trunc + 1) for _ in range(r)]
        if d.n <= trunc:
            rows[d.i % r][d.n] = c
        return cls(r, rows)

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[Scalar]) -> "BigradedSeries":
        """Single-graded series (r = 1) from a plain coefficient list."""
        return cls(1, [list(coefficients)])

    # -- inspection ---------------------------------------------------

    @property
    def trunc(self) -> int:
        return len(self.coeffs[0]) - 1

    def coefficient(self, n: int, i: int = 0) -> Rational:
        return self.coeffs[i % self.r][n]

    def component(self, i: int) -> tuple[Rational, ...]:
        """Coefficient row of e^i."""
        return self.coeffs[i % self.r]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for row in self.coeffs for c in row)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for row in self.coeffs for c in row)

    def __eq__(self, other):
        return (
            isinstance(other, BigradedSeries)
            and self.r == other.r
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.r, self.coeffs))

    def __repr__(self):
        return f"BigradedSeries(r={self.r}, trunc={self.trunc})"

    def __str__(self):
        terms = []
        for n in range(self.trunc + 1):
            for i in range(self.r):
                c = self.coeffs[i][n]
                if c == 0:
                    continue
                factors = []
                if c != 1 or (n == 0 and i == 0):
                    factors.append(format_rational(c))
                if i:
                    factors.append("e" if i == 1 else f"e^{i}")
                if n:
                    factors.append("t" if n == 1 else f"t^{n}")
                terms.append("*".join(factors))
        return " + ".join(terms) if terms else "0"

    # -- ring operations ----------------------------------------------

    def _check_compatible(self, other: "BigradedSeries"):
        if self.r != other.r:
            raise IncompatibleSeriesError(
                f"grading moduli differ: {self.r} vs {other.r}"
            )

    def __add__(self, other: "BigradedSeries") -> "BigradedSeries":
        self._check_compatible(other)
        n = min(self.trunc, other.trunc)
        return BigradedSeries(
            self.r,
            [
                [self.coeffs[i][m] + other.coeffs[i][m] for m in range(n + 1)]
                for i in range(self.r)
            ],
        )

    def __sub__(self, other: "BigradedSeries") -> "BigradedSeries":
        self._check_compatible(other)
        n = min(self.trunc, other.trunc)
        return BigradedSeries(
            self.r,
            [
                [self.coeffs[i][m] - other.coeffs[i][m] for m in range(n + 1)]
                for i in range(self.r)
            ],
        )

    def __neg__(self) -> "BigradedSeries":
        return BigradedSeries(
            self.r, [[-c for c in row] for row in self.coeffs]
        )

    def scale(self, c: Scalar) -> "BigradedSeries":
        q = Rational(c)
        return BigradedSeries(
            self.r, [[q * v for v in row] for row in self.coeffs]
        )

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        self._check_compatible(other)
        n = min(self.trunc, other.trunc)
        r = self.r
        rows = [[Rational(0)] * (n + 1) for _ in range(r)]
        for i in range(r):
            row_a = self.coeffs[i]
            for m in range(n + 1):
                a = row_a[m]
                if a == 0:
                    continue
                for j in range(r):
                    row_b = other.coeffs[j]
                    out = rows[(i + j) % r]
                    for k in range(n + 1 - m):
                        b = row_b[k]
                        if b:
                            out[m + k] += a * b
        return BigradedSeries(r, rows)

    __rmul__ = __mul__

    def truncate(self, trunc: int) -> "BigradedSeries":
        if trunc > self.trunc:
            raise IncompatibleSeriesError(
                f"cannot extend truncation {self.trunc} to {trunc}"
            )
        return BigradedSeries(self.r, [row[: trunc + 1] for row in self.coeffs])

    def collapse(self) -> "BigradedSeries":
        """Set e = 1: sum the rows into a single-graded series."""
        return BigradedSeries(
            1,
            [[sum(self.coeffs[i][n] for i in range(self.r))
              for n in range(self.trunc + 1)]],
        )

    # -- the operations driving inference -------------------------------

    def peel(self, d: Bidegree) -> "BigradedSeries":
        """Multiply by 1 - e^i t^n, cancelling a generator of bidegree d."""
        if d.n < 1:
            raise NonInvertibleFactorError("peel factor needs t-degree >= 1")
        return self * one_minus(self.r, self.trunc, d)

    def divide_factor(self, d: Bidegree) -> "BigradedSeries":
        """Divide by 1 - e^i t^n (exact in the truncated ring)."""
        if d.n < 1:
            raise NonInvertibleFactorError("division factor needs t-degree >= 1")
        r, nn, i = self.r, d.n, d.i % self.r
        rows = [list(row) for row in self.coeffs]
        for m in range(nn, self.trunc + 1):
            for k in range(r):
                rows[k][m] += rows[(k - i) % r][m - nn]
        return BigradedSeries(r, rows)

    def first_deviation(self) -> Optional[tuple[Bidegree, Rational]]:
        """Least (n >= 1, then i) with a nonzero coefficient, or None.

        The series must be a normalized residual: constant column
        (1, 0, ..., 0).
        """
        if self.coeffs[0][0] != 1 or any(self.coeffs[i][0] != 0 for i in range(1, self.r)):
            raise UnnormalizedResidualError(
                "residual constant column is not (1, 0, ..., 0)"
            )
        for n in range(1, self.trunc + 1):
            for i in range(self.r):
                c = self.coeffs[i][n]
                if c != 0:
                    return Bidegree(n, i), c
        return None

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "trunc": self.trunc,
            "coeffs": [[format_rational(c) for c in row] for row in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BigradedSeries":
        rows = [[parse_rational(str(c)) for c in row] for row in obj["coeffs"]]
        series = cls(obj["r"], rows)
        if series.trunc != obj.get("trunc", series.trunc):
            raise IncompatibleSeriesError("declared truncation does not match rows")
        return series


def one_minus(r: int, trunc: int, d: Bidegree) -> BigradedSeries:
    """The binomial 1 - e^i t^n as a truncated series."""
    return BigradedSeries.one(r, trunc) - BigradedSeries.monomial(r, trunc, d)


def geometric_factor(d: Bidegree, r: int, trunc: int) -> BigradedSeries:
    """1/(1 - e^i t^n) = sum_k e^(k*i mod r) t^(k*n), truncated."""
    if d.n < 1:
        raise NonInvertibleFactorError("geometric factor needs t-degree >= 1")
    rows = [[Rational(0)] * (trunc + 1) for _ in range(r)]
    k = 0
    while k * d.n <= trunc:
        rows[(k * d.i) % r][k * d.n] += 1
        k += 1
    return BigradedSeries(r, rows)
