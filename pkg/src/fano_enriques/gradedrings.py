"""Presentation inference: from a Hilbert series to generators and relations.

The method walks the series degree by degree.  A positive deviation of the
residual from 1 at bidegree (n, i) means c new generators there (peel off
(1 - e^i t^n)^c); a negative one means relations (divide the residual by
the corresponding binomials).  Inference stops

* clean        -- the residual reaches 1 within the truncation,
* special      -- a generator and a relation are forced at the same
                  t-degree (with different e-degrees); the series cannot
                  decide such a model and a higher-codimension description
                  is expected, so the engine reports rather than guesses,
* inconclusive -- the next deviation lies beyond max_degree.

One wrinkle: a codimension-3 model cut out by the five Pfaffians of a
skew matrix has numerator 1 - sum t^{d_k} + sum t^{e-d_k} - t^e, whose
positive middle terms are syzygies, not generators.  After five relations
have been recorded, a positive deviation therefore first attempts to
close the numerator against that shape before anything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InconsistentDataError, InferenceFailureError
from .exact import is_integer
from .series import Bidegree, BigradedSeries, geometric_factor, one_minus

__all__ = [
    "Presentation",
    "infer_presentation",
    "action_weights",
    "presentation_series",
]


@dataclass(frozen=True)
class Presentation:
    """Inferred generator and relation bidegrees for Proj of a graded ring."""

    generators: tuple[Bidegree, ...]
    relations: tuple[Bidegree, ...]
    status: str

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(sorted(self.generators)))
        object.__setattr__(self, "relations", tuple(sorted(self.relations)))
        if self.status not in ("clean", "special", "inconclusive"):
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def codimension(self) -> int:
        return len(self.generators) - 4

    @property
    def relation_count_consistent(self) -> bool:
        """Diagnostic: the relation count expected for the codimension.

        Hypersurfaces and codimension 2 need as many relations as the
        codimension; codimension 3 admits either a complete intersection
        (3) or a Pfaffian model (5).
        """
        c = self.codimension
        if c in (1, 2):
            return len(self.relations) == c
        if c == 3:
            return len(self.relations) in (3, 5)
        return True

    def to_json(self) -> dict:
        return {
            "generators": [[g.n, g.i] for g in self.generators],
            "relations": [[q.n, q.i] for q in self.relations],
            "status": self.status,
            "codim": self.codimension,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Presentation":
        return cls(
            generators=tuple(Bidegree(n, i) for n, i in obj["generators"]),
            relations=tuple(Bidegree(n, i) for n, i in obj["relations"]),
            status=obj["status"],
        )

    def __str__(self):
        gens = " ".join(str(g) for g in self.generators) or "-"
        rels = " ".join(str(q) for q in self.relations) or "-"
        return f"generators {gens} | relations {rels} | {self.status}"


def _validate_hilbert(s: BigradedSeries):
    if s.coefficient(0, 0) != 1 or any(s.coefficient(0, i) != 0 for i in range(1, s.r)):
        raise InconsistentDataError("constant term of a Hilbert series must be 1 at e^0")
    for i in range(s.r):
        for n, c in enumerate(s.component(i)):
            if not is_integer(c) or c < 0:
                raise InconsistentDataError(
                    f"coefficient at e^{i} t^{n} is {c}; not a Hilbert series"
                )


def _pfaffian_closure(numerator: BigradedSeries, relations: Sequence[Bidegree]) -> Optional[int]:
    """Try to read `numerator` as the Pfaffian shape over the 5 relations.

    Returns the top second degree on success, None if no match.
    """
    r, trunc = numerator.r, numerator.trunc
    total = sum(q.n for q in relations)
    if total % 2:
        return None
    e = total // 2
    if e > trunc:
        return None
    for sbar in range(r):
        candidate = BigradedSeries.one(r, trunc)
        for q in relations:
            candidate = candidate - BigradedSeries.monomial(r, trunc, q)
            candidate = candidate + BigradedSeries.monomial(
                r, trunc, Bidegree(e - q.n, (sbar - q.i) % r)
            )
        candidate = candidate - BigradedSeries.monomial(r, trunc, Bidegree(e, sbar))
        if candidate == numerator:
            return sbar
    return None


def infer_presentation(s: BigradedSeries, max_degree: int = 24) -> Presentation:
    """Deduce a weighted-projective presentation from a Hilbert series.

    Relations are recorded greedily from negative deviations; status
    clean means the residual was completely resolved within the series'
    truncation.  Degrees are only trustworthy up to min(truncation,
    max_degree) -- callers must truncate generously.
    """
    _validate_hilbert(s)
    working = s
    numerator = s
    generators: list[Bidegree] = []
    relations: list[Bidegree] = []
    gen_t_degrees: set[int] = set()
    rel_t_degrees: set[int] = set()

    while True:
        deviation = working.first_deviation()
        if deviation is None:
            return Presentation(tuple(generators), tuple(relations), "clean")
        d, c = deviation
        if not is_integer(c):
            raise InferenceFailureError(
                f"deviation {c} at {d} is not an integer; no graded ring fits"
            )
        c = int(c)
        if d.n > max_degree:
            return Presentation(tuple(generators), tuple(relations), "inconclusive")

        if c > 0:
            if len(relations) == 5 and _pfaffian_closure(numerator, relations) is not None:
                return Presentation(tuple(generators), tuple(relations), "clean")
            generators.extend([d] * c)
            if d.n in rel_t_degrees:
                return Presentation(tuple(generators), tuple(relations), "special")
            gen_t_degrees.add(d.n)
            factor = one_minus(s.r, s.trunc, d)
            for _ in range(c):
                working = working * factor
                numerator = numerator * factor
        else:
            relations.extend([d] * (-c))
            if d.n in gen_t_degrees:
                return Presentation(tuple(generators), tuple(relations), "special")
            rel_t_degrees.add(d.n)
            for _ in range(-c):
                working = working.divide_factor(d)


def action_weights(p: Presentation) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
    """Ambient weights with their action exponents, plus relation second degrees.

    Read directly off the presentation: coordinate k has weight n_k and the
    torsion generator acts on it with exponent i_k; each relation carries
    the second degree of its equation.
    """
    if p.status == "inconclusive":
        raise InferenceFailureError("no action data for an inconclusive presentation")
    weights = tuple((g.n, g.i) for g in p.generators)
    second_degrees = tuple(q.i for q in p.relations)
    return weights, second_degrees


def presentation_series(
    generators: Sequence[Bidegree],
    relations: Sequence[Bidegree],
    r: int,
    trunc: int = 20,
) -> BigradedSeries:
    """The Hilbert series a presentation would have: prod(1 - e^s t^d) over
    relations times the geometric factor of every generator."""
    total = BigradedSeries.one(r, trunc)
    for q in relations:
        total = total * one_minus(r, trunc, q)
    for g in generators:
        total = total * geometric_factor(g, r, trunc)
    return total
