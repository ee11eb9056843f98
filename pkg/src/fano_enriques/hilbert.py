"""Hilbert series from numerical data.

Three series builders live here:

* altinok_series -- the closed form for the anticanonical ring of a Fano
  threefold with basket B and given -K^3,

      P(t) = (1+t)/(1-t)^2 + (t+t^2)/(1-t)^4 * (-K^3/2)
             - sum_Q 1/((1-t)(1-t^r_Q)) * sum_i w_Q(i) t^i,

  with w_Q(i) = [b_Q i](r_Q - [b_Q i])/(2 r_Q) and b_Q the inverse weight.
  The polynomial Riemann-Roch part (chi(O), c2-term) is already folded
  into the first two summands, so the basket and -K^3 are the only inputs.

* torsion_delta_* -- the per-component correction h^0(-nK + i*sigma) -
  h^0(-nK) coming from a torsion divisor sigma marked into the basket.
  The per-n formula is authoritative; an equivalent closed form is built
  alongside and the two are reconciled, as a guard against sign slips in
  either route.

* wci_series / pfaffian_series -- independent oracles for covers: the
  Hilbert series a weighted complete intersection (or codimension-3
  Pfaffian model) must have, straight from weights and degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    InconsistentDataError,
    InconsistentMarkingError,
    InternalConsistencyError,
)
from .exact import Rational, format_rational, is_integer, parse_rational, residue
from .orbifold import Basket, MarkedSingularity, SingularityType, inverse_weight
from .series import Bidegree, BigradedSeries, geometric_factor, one_minus

__all__ = [
    "FanoData",
    "FanoEnriquesData",
    "parity_defect",
    "altinok_series",
    "torsion_delta_at",
    "torsion_delta_series",
    "bigraded_series",
    "wci_series",
    "pfaffian_series",
]


def parity_defect(minus_k_cubed: Rational, basket: Basket) -> Rational:
    """(-K^3 - sum_Q b_Q(r_Q - b_Q)/r_Q) / 2; an integer for genuine data."""
    total = Rational(minus_k_cubed)
    for entry in basket:
        r = entry.type.r
        b = inverse_weight(entry.type)
        total -= Rational(b * (r - b), r)
    return total / 2


@dataclass(frozen=True)
class FanoData:
    """Numerical data of a Fano threefold: -K^3 and the basket.

    Markings on basket entries, if any, are irrelevant here; only the
    underlying types enter the series.
    """

    minus_k_cubed: Rational
    basket: Basket = field(default_factory=Basket)

    def __post_init__(self):
        object.__setattr__(self, "minus_k_cubed", Rational(self.minus_k_cubed))
        if self.minus_k_cubed <= 0:
            raise InconsistentDataError(
                f"-K^3 must be positive, got {self.minus_k_cubed}"
            )
        k = parity_defect(self.minus_k_cubed, self.basket)
        if not is_integer(k):
            raise InconsistentDataError(
                f"-K^3 = {format_rational(self.minus_k_cubed)} fails the parity "
                f"constraint for basket {{{self.basket}}} (defect {k})"
            )


@dataclass(frozen=True)
class FanoEnriquesData:
    """Numerical data of a Fano threefold with a torsion divisor of order r.

    bt holds the marked part of the basket (every l nonzero, stabilizer
    order dividing r); be the unmarked remainder.
    """

    r: int
    minus_k_cubed: Rational
    bt: Basket
    be: Basket = field(default_factory=Basket)

    def __post_init__(self):
        object.__setattr__(self, "minus_k_cubed", Rational(self.minus_k_cubed))
        if self.r < 2:
            raise InconsistentDataError(f"torsion order must be >= 2, got {self.r}")
        if self.minus_k_cubed <= 0:
            raise InconsistentDataError(
                f"-K^3 must be positive, got {self.minus_k_cubed}"
            )
        for entry in self.bt:
            if entry.l == 0:
                raise InconsistentMarkingError(f"marked basket entry {entry} has l = 0")
            if self.r % entry.alpha != 0:
                raise InconsistentMarkingError(
                    f"{entry} has stabilizer order {entry.alpha}, "
                    f"incompatible with torsion order {self.r}"
                )
        for entry in self.be:
            if entry.l != 0:
                raise InconsistentMarkingError(
                    f"unmarked basket entry {entry} carries a marking"
                )
        k = parity_defect(self.minus_k_cubed, self.combined_basket)
        if not is_integer(k):
            raise InconsistentDataError(
                f"-K^3 = {format_rational(self.minus_k_cubed)} fails the parity "
                f"constraint for basket {{{self.combined_basket}}} (defect {k})"
            )

    @property
    def combined_basket(self) -> Basket:
        return self.bt + self.be

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "minusK3": format_rational(self.minus_k_cubed),
            "bt": self.bt.to_json(),
            "be": self.be.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FanoEnriquesData":
        return cls(
            r=obj["r"],
            minus_k_cubed=parse_rational(str(obj["minusK3"])),
            bt=Basket.from_json(obj["bt"]),
            be=Basket.from_json(obj.get("be", [])),
        )


def _local_weight(r: int, b: int, j: int) -> Rational:
    """w(j) = [b*j]_r (r - [b*j]_r) / (2r), the periodic correction kernel."""
    bj = (b * j) % r
    return Rational(bj * (r - bj), 2 * r)


def altinok_series(data: FanoData, trunc: int = 20) -> BigradedSeries:
    """Hilbert series sum h^0(-nK) t^n of a Fano threefold, exactly.

    Raises InconsistentDataError if the resulting coefficients are not
    nonnegative integers: the basket / -K^3 pair then belongs to no
    actual variety (a sharper sieve than the parity check).
    """
    n = trunc
    t = BigradedSeries.monomial(1, n, Bidegree(1, 0))
    t2 = BigradedSeries.monomial(1, n, Bidegree(2, 0))
    geom1 = geometric_factor(Bidegree(1, 0), 1, n)
    geom1_sq = geom1 * geom1

    total = (BigradedSeries.one(1, n) + t) * geom1_sq
    total = total + (t + t2) * geom1_sq * geom1_sq * (data.minus_k_cubed / 2)

    for entry, mult in data.basket.counts().items():
        r = entry.type.r
        b = inverse_weight(entry.type)
        poly = [Rational(0)] * (n + 1)
        for i in range(1, min(r, n + 1)):
            poly[i] = _local_weight(r, b, i)
        correction = (
            BigradedSeries(1, [poly])
            * geom1
            * geometric_factor(Bidegree(r, 0), 1, n)
        )
        total = total - correction * mult

    for m, c in enumerate(total.component(0)):
        if not is_integer(c) or c < 0:
            raise InconsistentDataError(
                f"series coefficient at t^{m} is {format_rational(c)}; "
                f"no Fano threefold has -K^3 = {format_rational(data.minus_k_cubed)} "
                f"with basket {{{data.basket}}}"
            )
    return total


def torsion_delta_at(bt: Basket, i: int, n: int) -> Rational:
    """chi(-nK + i*sigma) - chi(-nK) for the marked basket bt.

    Each entry contributes through its effective local coefficient
    l' = [i * l]_{r_Q}; entries with l' = 0 contribute nothing.
    """
    total = Rational(0)
    for entry in bt:
        r = entry.type.r
        lp = residue(i * entry.l, r)
        if lp == 0:
            continue
        b = inverse_weight(entry.type)
        total += Rational((r - lp) * (r * r - 1), 12 * r)
        for j in range(n + 1, n + r - lp + 1):
            total -= _local_weight(r, b, j)
    return total


def torsion_delta_series(bt: Basket, i: int, trunc: int = 20) -> BigradedSeries:
    """Series sum_n (chi(-nK + i*sigma) - chi(-nK)) t^n.

    Built twice: from the closed form

        sum_Q [ A_Q/(1-t) - (sum_{j<r_Q} T_Q(j) t^j) / (1-t^{r_Q}) ]

    with A_Q = (r_Q - l')(r_Q^2 - 1)/(12 r_Q) and T_Q(j) the window sum of
    the local kernel, and from the per-n formula directly.  The two must
    agree; a mismatch is an engine bug, not a data problem.
    """
    m = trunc
    geom1 = geometric_factor(Bidegree(1, 0), 1, m)
    closed = BigradedSeries.zero(1, m)
    for entry in bt:
        r = entry.type.r
        lp = residue(i * entry.l, r)
        if lp == 0:
            continue
        b = inverse_weight(entry.type)
        a_q = Rational((r - lp) * (r * r - 1), 12 * r)
        window = [Rational(0)] * (m + 1)
        for j in range(min(r, m + 1)):
            window[j] = sum(
                (_local_weight(r, b, k) for k in range(j + 1, j + r - lp + 1)),
                Rational(0),
            )
        closed = closed + geom1 * a_q
        closed = closed - BigradedSeries(1, [window]) * geometric_factor(
            Bidegree(r, 0), 1, m
        )

    oracle = BigradedSeries(
        1, [[torsion_delta_at(bt, i, n) for n in range(m + 1)]]
    )
    if closed != oracle:
        raise InternalConsistencyError(
            f"torsion delta closed form disagrees with the per-n values "
            f"for i = {i}, basket {{{bt}}}"
        )
    return oracle


def bigraded_series(data: FanoEnriquesData, trunc: int = 20) -> BigradedSeries:
    """Full bigraded Hilbert series sum h^0(-nK + i*sigma) e^i t^n.

    Component i is the untwisted series plus the torsion delta for i.
    For genuine data every coefficient is a nonnegative integer, the
    constant term sits entirely in component 0 (h^0 of a nontrivial
    torsion class vanishes); anything else raises InconsistentDataError.
    """
    base = altinok_series(
        FanoData(data.minus_k_cubed, data.combined_basket), trunc
    ).component(0)
    rows = []
    for i in range(data.r):
        delta = torsion_delta_series(data.bt, i, trunc).component(0)
        rows.append([base[n] + delta[n] for n in range(trunc + 1)])

    for i, row in enumerate(rows):
        expected_constant = 1 if i == 0 else 0
        if row[0] != expected_constant:
            raise InconsistentDataError(
                f"chi({i}*sigma) = {format_rational(row[0])}, "
                f"expected {expected_constant}: data admits no torsion divisor"
            )
        for n, c in enumerate(row):
            if not is_integer(c) or c < 0:
                raise InconsistentDataError(
                    f"component {i} coefficient at t^{n} is {format_rational(c)}; "
                    f"numerical data is inconsistent"
                )
    return BigradedSeries(data.r, rows)


def _product_series(weights: Sequence[int], numerator: BigradedSeries, trunc: int) -> BigradedSeries:
    total = numerator
    for w in weights:
        total = total * geometric_factor(Bidegree(w, 0), 1, trunc)
    return total


def wci_series(weights: Sequence[int], degrees: Sequence[int], trunc: int = 20) -> BigradedSeries:
    """prod (1 - t^d) / prod (1 - t^w), the series of a weighted complete
    intersection polarized by O(1).

    Anticanonical polarization (sum of weights minus sum of degrees = 1)
    is required; that is the only normalization the quotient search uses.
    """
    if sum(weights) - sum(degrees) != 1:
        raise InconsistentDataError(
            f"weights {tuple(weights)} and degrees {tuple(degrees)} are not "
            f"anticanonically polarized"
        )
    numerator = BigradedSeries.one(1, trunc)
    for d in degrees:
        numerator = numerator * one_minus(1, trunc, Bidegree(d, 0))
    return _product_series(weights, numerator, trunc)


def pfaffian_series(weights: Sequence[int], degrees: Sequence[int], trunc: int = 20) -> BigradedSeries:
    """Series of a codimension-3 model cut out by the five Pfaffians of a
    skew 5x5 matrix: numerator 1 - sum t^{d_k} + sum t^{e-d_k} - t^e with
    e = sum(weights) - 1 = sum(degrees)/2.
    """
    if len(degrees) != 5:
        raise InconsistentDataError(
            f"a Pfaffian model has exactly 5 relations, got {len(degrees)}"
        )
    e = sum(weights) - 1
    if sum(degrees) != 2 * e:
        raise InconsistentDataError(
            f"Pfaffian degrees {tuple(degrees)} do not satisfy "
            f"sum = 2*(sum(weights) - 1) = {2 * e}"
        )
    numerator = BigradedSeries.one(1, trunc)
    for d in degrees:
        numerator = numerator - BigradedSeries.monomial(1, trunc, Bidegree(d, 0))
        numerator = numerator + BigradedSeries.monomial(1, trunc, Bidegree(e - d, 0))
    numerator = numerator - BigradedSeries.monomial(1, trunc, Bidegree(e, 0))
    return _product_series(weights, numerator, trunc)
