"""Matching cyclic covers against candidate torsion data.

A Fano threefold X with a torsion divisor of order r has a degree-r
cyclic cover Y, again Fano, with -K_Y^3 = r * (-K_X^3).  Going the other
way: given a catalog threefold Y and a candidate marked basket bt, the
numerical data of a hypothetical quotient is forced.

  1. every marked point of X lifts to a computable number of points of a
     computable type on Y (smooth fibers drop out),
  2. those forced types must embed in Y's basket,
  3. whatever is left of Y's basket must split into free orbits of size
     r; one representative per orbit descends to an unmarked point of X,
  4. -K_X^3 = -K_Y^3 / r must satisfy the parity constraint against the
     assembled basket,
  5. the surviving data feeds the bigraded series, and
  6. presentation inference either produces a clean model or flags the
     candidate as special (a generator and relation in the same degree).

Steps 2-4 are match_cover; search drives the whole pipeline over a
catalog and every admissible bt, collecting typed rejections for the
pairs that fail.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Iterable, Optional, Sequence, Union

from .enumeration import MAX_TORSION, enumerate_bt
from .errors import (
    CatalogError,
    InconsistentDataError,
    InferenceFailureError,
    InternalConsistencyError,
)
from .exact import Rational, format_rational, is_integer, parse_rational
from .gradedrings import Presentation, action_weights, infer_presentation
from .hilbert import (
    FanoData,
    FanoEnriquesData,
    altinok_series,
    bigraded_series,
    parity_defect,
    pfaffian_series,
    wci_series,
)
from .orbifold import SMOOTH, Basket, MarkedSingularity, preimage_singularity

__all__ = [
    "CoverRecord",
    "QuotientCandidate",
    "Rejection",
    "SearchResult",
    "forced_preimage",
    "match_cover",
    "search",
    "CROSS_CODIMENSION",
]

# diagnostic flag: inferred presentation does not live in the cover's
# weighted space, so the quotient model has a different codimension
CROSS_CODIMENSION = "cross-codimension"


@dataclass(frozen=True)
class CoverRecord:
    """A catalog Fano threefold, polarized by -K.

    Complete intersections carry their equation degrees; codimension-3
    models cut out by the Pfaffians of a skew 5x5 matrix carry the five
    Pfaffian degrees instead (structure = "pfaffian").  The basket is
    stored explicitly and cross-checked against the model series rather
    than derived from equations.
    """

    name: str
    weights: tuple[int, ...]
    degrees: tuple[int, ...]
    basket: Basket
    minus_k_cubed: Rational
    structure: str = "ci"
    notes: str = ""

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        object.__setattr__(self, "minus_k_cubed", Rational(self.minus_k_cubed))
        if not isinstance(self.basket, Basket):
            object.__setattr__(self, "basket", Basket(tuple(self.basket)))
        if self.structure not in ("ci", "pfaffian"):
            raise CatalogError(
                f"{self.name}: unknown structure {self.structure!r}"
            )
        if not self.weights or any(w < 1 for w in self.weights):
            raise CatalogError(f"{self.name}: weights must be positive integers")
        if not self.degrees or any(d < 1 for d in self.degrees):
            raise CatalogError(f"{self.name}: degrees must be positive integers")

    @property
    def codimension(self) -> int:
        return len(self.weights) - 4

    def series(self, trunc: int = 20):
        """Hilbert series of the model, straight from weights and degrees."""
        if self.structure == "pfaffian":
            return pfaffian_series(self.weights, self.degrees, trunc)
        return wci_series(self.weights, self.degrees, trunc)

    def _numerator(self) -> list[int]:
        """Numerator polynomial of the model series, as a coefficient list."""
        if self.structure == "pfaffian":
            e = sum(self.degrees) // 2
            coeffs = [0] * (e + 1)
            coeffs[0] += 1
            coeffs[e] -= 1
            for d in self.degrees:
                coeffs[d] -= 1
                coeffs[e - d] += 1
            return coeffs
        coeffs = [1]
        for d in self.degrees:
            nxt = [0] * (len(coeffs) + d)
            for k, c in enumerate(coeffs):
                nxt[k] += c
                nxt[k + d] -= c
            coeffs = nxt
        return coeffs

    def implied_k_cubed(self) -> Rational:
        """-K^3 the weights and degrees force.

        The series has a pole of order 4 at t = 1 with leading coefficient
        -K^3, so divide the numerator by (1-t) once per codimension and
        evaluate at 1.  For a complete intersection this reduces to
        prod(degrees)/prod(weights).
        """
        coeffs = [Rational(c) for c in self._numerator()]
        for _ in range(self.codimension):
            if sum(coeffs) != 0:
                raise CatalogError(
                    f"{self.name}: numerator does not vanish to order "
                    f"{self.codimension} at t = 1"
                )
            # divide by (1 - t): running prefix sums
            out, acc = [], Rational(0)
            for c in coeffs[:-1]:
                acc += c
                out.append(acc)
            coeffs = out
        return sum(coeffs, Rational(0)) / prod(self.weights)

    def validate(self, trunc: int = 20) -> list[str]:
        """All invariant violations, as human-readable strings."""
        problems: list[str] = []
        if self.structure == "ci":
            if sum(self.weights) - sum(self.degrees) != 1:
                problems.append(
                    f"weights {self.weights} and degrees {self.degrees} "
                    f"are not anticanonically polarized"
                )
        else:
            if len(self.degrees) != 5:
                problems.append(
                    f"a Pfaffian model needs 5 degrees, got {len(self.degrees)}"
                )
            elif sum(self.degrees) != 2 * (sum(self.weights) - 1):
                problems.append(
                    f"Pfaffian degrees {self.degrees} incompatible with "
                    f"weights {self.weights}"
                )
        if problems:
            return problems

        try:
            implied = self.implied_k_cubed()
        except CatalogError as exc:
            return [str(exc)]
        if implied != self.minus_k_cubed:
            problems.append(
                f"declared -K^3 = {format_rational(self.minus_k_cubed)} but the "
                f"model forces {format_rational(implied)}"
            )
        defect = parity_defect(self.minus_k_cubed, self.basket)
        if not is_integer(defect):
            problems.append(
                f"basket {{{self.basket}}} fails the parity constraint "
                f"(defect {format_rational(defect)})"
            )
        if problems:
            return problems

        try:
            orbifold = altinok_series(
                FanoData(self.minus_k_cubed, self.basket), trunc
            )
        except InconsistentDataError as exc:
            return [f"declared basket admits no series: {exc}"]
        model = self.series(trunc)
        if orbifold != model:
            for n in range(trunc + 1):
                a, b = orbifold.coefficient(n, 0), model.coefficient(n, 0)
                if a != b:
                    problems.append(
                        f"series mismatch at t^{n}: basket gives "
                        f"{format_rational(a)}, model gives {format_rational(b)}"
                    )
                    break
        return problems

    def to_json(self) -> dict:
        obj = {
            "name": self.name,
            "weights": list(self.weights),
            "degrees": list(self.degrees),
            "basket": self.basket.to_json(),
            "minusK3": format_rational(self.minus_k_cubed),
        }
        if self.structure != "ci":
            obj["structure"] = self.structure
        if self.notes:
            obj["notes"] = self.notes
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "CoverRecord":
        return cls(
            name=str(obj["name"]),
            weights=tuple(obj["weights"]),
            degrees=tuple(obj["degrees"]),
            basket=Basket.from_json(obj.get("basket", [])),
            minus_k_cubed=parse_rational(str(obj["minusK3"])),
            structure=obj.get("structure", "ci"),
            notes=obj.get("notes", ""),
        )

    def __str__(self):
        w = ",".join(str(x) for x in self.weights)
        d = ",".join(str(x) for x in self.degrees)
        return f"{self.name} = ({d}) in P({w})"


@dataclass(frozen=True)
class Rejection:
    """A (cover, r, bt) triple that failed, and at which step."""

    cover: str
    r: int
    bt: Basket
    reason: str
    detail: str = ""

    REASONS = (
        "preimage-mismatch",
        "orbit-indivisible",
        "parity-fail",
        "inconsistent-data",
        "inference-failure",
        "inference-inconclusive",
    )

    def __post_init__(self):
        if self.reason not in self.REASONS:
            raise ValueError(f"unknown rejection reason {self.reason!r}")

    def to_json(self) -> dict:
        return {
            "cover": self.cover,
            "r": self.r,
            "bt": self.bt.to_json(),
            "reason": self.reason,
            "detail": self.detail,
        }

    def __str__(self):
        return f"{self.cover} | r={self.r} | {self.bt} | {self.reason}: {self.detail}"


@dataclass(frozen=True)
class QuotientCandidate:
    """Numerical data of a quotient that survived matching and inference."""

    cover: CoverRecord
    data: FanoEnriquesData
    presentation: Presentation
    diagnostics: tuple[str, ...] = ()

    def __post_init__(self):
        if self.data.minus_k_cubed * self.data.r != self.cover.minus_k_cubed:
            raise InconsistentDataError(
                f"{self.cover.name}: -K^3 = "
                f"{format_rational(self.data.minus_k_cubed)} is not "
                f"1/{self.data.r} of the cover's "
                f"{format_rational(self.cover.minus_k_cubed)}"
            )
        object.__setattr__(self, "diagnostics", tuple(self.diagnostics))

    @property
    def status(self) -> str:
        return self.presentation.status

    @property
    def cross_codimension(self) -> bool:
        return CROSS_CODIMENSION in self.diagnostics

    def matches_cover_shape(self) -> bool:
        """Do the inferred degrees reproduce the cover's weighted space?"""
        gens = sorted(g.n for g in self.presentation.generators)
        rels = sorted(q.n for q in self.presentation.relations)
        return gens == sorted(self.cover.weights) and rels == sorted(
            self.cover.degrees
        )

    def to_json(self) -> dict:
        obj = {
            "cover": self.cover.name,
            "r": self.data.r,
            "minusK3": format_rational(self.data.minus_k_cubed),
            "bt": self.data.bt.to_json(),
            "be": self.data.be.to_json(),
            "presentation": self.presentation.to_json(),
        }
        if self.presentation.status != "inconclusive":
            weights, second_degrees = action_weights(self.presentation)
            obj["action"] = [list(pair) for pair in weights]
            obj["relation_second_degrees"] = list(second_degrees)
        if self.diagnostics:
            obj["diagnostics"] = list(self.diagnostics)
        return obj

    def __str__(self):
        be = str(self.data.be) if self.data.be else "-"
        flags = f" [{', '.join(self.diagnostics)}]" if self.diagnostics else ""
        return (
            f"{self.cover.name} | r={self.data.r} | "
            f"-K^3={format_rational(self.data.minus_k_cubed)} | "
            f"bt: {self.data.bt} | be: {be} | {self.presentation}{flags}"
        )


def forced_preimage(bt: Basket, r: int) -> Counter:
    """Multiset of singularity types the cover must contain.

    Smooth fibers drop out; the rest of the cover's basket is free to be
    anything at this point.
    """
    out: Counter = Counter()
    for entry in bt:
        count, fiber = preimage_singularity(entry, r)
        if fiber is not SMOOTH:
            out[fiber] += count
    return out


def match_cover(
    cover: CoverRecord, bt: Basket, r: int
) -> Union[FanoEnriquesData, Rejection]:
    """Assemble quotient data for the cover, or say why there is none."""
    need = forced_preimage(bt, r)
    have: Counter = Counter()
    for entry, mult in cover.basket.counts().items():
        have[entry.type] += mult

    for s, m in sorted(need.items()):
        if have.get(s, 0) < m:
            return Rejection(
                cover.name, r, bt, "preimage-mismatch",
                f"needs {m} x {s}, cover has {have.get(s, 0)}",
            )

    residual = have - need
    be_entries: list[MarkedSingularity] = []
    for s, m in sorted(residual.items()):
        if m % r:
            return Rejection(
                cover.name, r, bt, "orbit-indivisible",
                f"{m} x {s} cannot split into free orbits of size {r}",
            )
        be_entries.extend([MarkedSingularity(s, 0)] * (m // r))

    try:
        return FanoEnriquesData(
            r, cover.minus_k_cubed / r, bt, Basket(tuple(be_entries))
        )
    except InconsistentDataError as exc:
        return Rejection(cover.name, r, bt, "parity-fail", str(exc))


class SearchResult(list):
    """List of accepted candidates; failures are kept on .rejections."""

    def __init__(
        self,
        candidates: Iterable[QuotientCandidate] = (),
        rejections: Iterable[Rejection] = (),
    ):
        super().__init__(candidates)
        self.rejections = list(rejections)

    def clean(self) -> list[QuotientCandidate]:
        return [c for c in self if c.status == "clean"]

    def special(self) -> list[QuotientCandidate]:
        return [c for c in self if c.status == "special"]


def search(
    catalog: Sequence[CoverRecord],
    rs: Optional[Iterable[int]] = None,
    trunc: int = 24,
    max_degree: int = 24,
    strict_chi: bool = False,
) -> SearchResult:
    """Try every (cover, r, admissible bt) triple.

    Accepted candidates get a bigraded series and an inferred
    presentation; the collapse of the series is checked against the
    cover's own series, which is an arithmetic identity for correctly
    assembled data and hence an engine guard, not a data filter.
    """
    orders = sorted(set(rs)) if rs is not None else range(2, MAX_TORSION + 1)
    candidates: list[QuotientCandidate] = []
    rejections: list[Rejection] = []
    seen: set = set()

    for r in orders:
        for bt_candidate in enumerate_bt(r, strict_chi):
            bt = bt_candidate.entries
            for cover in catalog:
                outcome = match_cover(cover, bt, r)
                if isinstance(outcome, Rejection):
                    rejections.append(outcome)
                    continue
                key = (
                    cover.name, r, bt.entries,
                    outcome.be.entries, outcome.minus_k_cubed,
                )
                if key in seen:
                    continue
                seen.add(key)

                try:
                    series = bigraded_series(outcome, trunc)
                except InconsistentDataError as exc:
                    rejections.append(
                        Rejection(cover.name, r, bt, "inconsistent-data", str(exc))
                    )
                    continue

                total = altinok_series(
                    FanoData(cover.minus_k_cubed, cover.basket), trunc
                )
                if series.collapse() != total:
                    raise InternalConsistencyError(
                        f"component sum for {cover.name} (r={r}, bt {bt}) "
                        f"does not reproduce the cover series"
                    )

                try:
                    pres = infer_presentation(series, max_degree)
                except InferenceFailureError as exc:
                    rejections.append(
                        Rejection(cover.name, r, bt, "inference-failure", str(exc))
                    )
                    continue
                if pres.status == "inconclusive":
                    rejections.append(
                        Rejection(
                            cover.name, r, bt, "inference-inconclusive",
                            f"undecided beyond degree {max_degree}",
                        )
                    )
                    continue

                diagnostics = []
                candidate = QuotientCandidate(cover, outcome, pres)
                if not candidate.matches_cover_shape():
                    diagnostics.append(CROSS_CODIMENSION)
                    candidate = QuotientCandidate(
                        cover, outcome, pres, tuple(diagnostics)
                    )
                candidates.append(candidate)

    candidates.sort(
        key=lambda c: (c.data.r, c.cover.name, c.data.bt.entries, c.data.be.entries)
    )
    return SearchResult(candidates, rejections)
