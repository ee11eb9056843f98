"""Terminal cyclic quotient singularity algebra.

A point of type 1/r(w1,w2,w3) is the quotient of C^3 by the diagonal
action of the r-th roots of unity with the given weights.  The isolated
terminal ones in dimension three are exactly those reducible to the
canonical shape 1/r(1, a, r-a) with gcd(a, r) = 1; everything in this
package funnels through that normal form.

Baskets are multisets of such points, optionally carrying a marking
l in [0, r): the coefficient expressing a fixed numerically trivial
divisor as l*K in the local class group at the point.  Unmarked entries
are stored with l = 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Union

from .errors import InconsistentMarkingError, NotTerminalError
from .exact import Rational, mod_inverse, units

__all__ = [
    "SingularityType",
    "MarkedSingularity",
    "SMOOTH",
    "Basket",
    "normalize_type",
    "inverse_weight",
    "contribution_cQ",
    "terminal_sum",
    "compose_actions",
    "preimage_singularity",
]


class _SmoothPoint:
    """Singleton marker for a smooth point (index-1 'singularity')."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "SMOOTH"

    def __str__(self):
        return "smooth"


SMOOTH = _SmoothPoint()


@dataclass(frozen=True, order=True)
class SingularityType:
    """Canonical terminal cyclic quotient point 1/r(1, a, r-a)."""

    r: int
    a: int

    def __post_init__(self):
        if self.r < 2:
            raise NotTerminalError(f"index must be >= 2, got {self.r}")
        # canonical weight: 1 <= a <= r/2 and a a unit mod r
        if not 1 <= self.a <= self.r // 2 or gcd(self.a, self.r) != 1:
            raise NotTerminalError(
                f"1/{self.r}(1,{self.a},{self.r - self.a}) is not in canonical terminal form"
            )

    @property
    def exponents(self) -> tuple[int, int, int]:
        return (1, self.a, self.r - self.a)

    def __str__(self):
        return f"1/{self.r}(1,{self.a},{self.r - self.a})"


@dataclass(frozen=True, order=True)
class MarkedSingularity:
    """A SingularityType plus the local torsion coefficient l in [0, r)."""

    type: SingularityType
    l: int = 0

    def __post_init__(self):
        if not 0 <= self.l < self.type.r:
            raise InconsistentMarkingError(
                f"marking {self.l} out of range for {self.type}"
            )

    @property
    def d(self) -> int:
        """gcd(r, l); the index of the covering fiber point."""
        return gcd(self.type.r, self.l)

    @property
    def alpha(self) -> int:
        """r / gcd(r, l); the order of the stabilizer character at the point."""
        return self.type.r // self.d

    def __str__(self):
        if self.l == 0:
            return str(self.type)
        return f"{self.type}_{self.l}"


PointLike = Union[SingularityType, MarkedSingularity]

_POINT_RE = re.compile(
    r"^(?:(\d+)\s*x\s*)?1/(\d+)\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)(?:_(\d+))?"
    r"(?:\s*x\s*(\d+))?$"
)


def _as_marked(entry: PointLike) -> MarkedSingularity:
    if isinstance(entry, MarkedSingularity):
        return entry
    if isinstance(entry, SingularityType):
        return MarkedSingularity(entry, 0)
    raise TypeError(f"not a singularity entry: {entry!r}")


@dataclass(frozen=True)
class Basket:
    """Sorted multiset of (possibly marked) terminal quotient points."""

    entries: tuple[MarkedSingularity, ...] = ()

    def __post_init__(self):
        normalized = tuple(sorted(_as_marked(e) for e in self.entries))
        object.__setattr__(self, "entries", normalized)

    def __iter__(self) -> Iterator[MarkedSingularity]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def __add__(self, other: "Basket") -> "Basket":
        return Basket(self.entries + tuple(other))

    @property
    def unmarked(self) -> bool:
        return all(e.l == 0 for e in self.entries)

    def types(self) -> tuple[SingularityType, ...]:
        """The underlying types with multiplicity, markings dropped."""
        return tuple(e.type for e in self.entries)

    def counts(self) -> dict[MarkedSingularity, int]:
        out: dict[MarkedSingularity, int] = {}
        for e in self.entries:
            out[e] = out.get(e, 0) + 1
        return out

    def __str__(self):
        if not self.entries:
            return "(empty)"
        parts = []
        for entry, k in self.counts().items():
            parts.append(str(entry) if k == 1 else f"{entry} x{k}")
        return ", ".join(parts)

    def to_json(self) -> list[dict]:
        out = []
        for e in self.entries:
            rec = {"r": e.type.r, "a": e.type.a}
            if e.l:
                rec["l"] = e.l
            out.append(rec)
        return out

    @classmethod
    def from_json(cls, records: Iterable[dict]) -> "Basket":
        entries = [
            MarkedSingularity(SingularityType(rec["r"], rec["a"]), rec.get("l", 0))
            for rec in records
        ]
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> "Basket":
        """Parse "1/2(1,1,1), 2x1/5(1,2,3)_1" (or "... x2" suffix) notation."""
        text = text.strip()
        if not text or text == "(empty)":
            return cls()
        # split on commas outside the exponent parentheses
        tokens = re.split(r",(?![^()]*\))", text)
        entries: list[MarkedSingularity] = []
        for token in tokens:
            token = token.strip()
            if not token:
                continue
            m = _POINT_RE.match(token)
            if m is None:
                raise NotTerminalError(f"cannot parse basket entry {token!r}")
            pre, r, w1, w2, w3, l, post = m.groups()
            count = int(pre or post or 1)
            point = normalize_type(int(r), (int(w1), int(w2), int(w3)))
            if point is SMOOTH:
                raise NotTerminalError(f"entry {token!r} reduces to a smooth point")
            entries.extend([MarkedSingularity(point, int(l or 0))] * count)
        return cls(tuple(entries))


def normalize_type(r: int, exponents: tuple[int, int, int]):
    """Bring 1/r(x, y, z) to the canonical form 1/r'(1, a, r'-a).

    First the non-faithful part of the action is divided out
    (g = gcd(r, x, y, z)); a trivial remaining action yields SMOOTH.
    Then a unit u mod r' with {ux, uy, uz} = {1, a, r'-a} is searched for;
    absence of such a unit means the point is not an isolated terminal
    singularity and raises NotTerminalError.
    """
    if r < 1:
        raise NotTerminalError(f"index must be positive, got {r}")
    if len(exponents) != 3:
        raise NotTerminalError(f"need exactly three exponents, got {exponents!r}")
    exps = tuple(e % r for e in exponents) if r > 1 else (0, 0, 0)
    if r == 1:
        return SMOOTH
    g = gcd(r, gcd(gcd(exps[0], exps[1]), exps[2]))
    r2 = r // g
    if r2 == 1:
        return SMOOTH
    exps = tuple((e // g) % r2 for e in exps)

    best = None
    for u in units(r2):
        w = [(u * e) % r2 for e in exps]
        for k in range(3):
            if w[k] != 1:
                continue
            c1, c2 = w[(k + 1) % 3], w[(k + 2) % 3]
            if c1 == 0 or (c1 + c2) % r2 != 0 or gcd(c1, r2) != 1:
                continue
            a = min(c1, c2)
            if best is None or a < best:
                best = a
    if best is None:
        raise NotTerminalError(
            f"1/{r}({exponents[0]},{exponents[1]},{exponents[2]}) is not terminal"
        )
    return SingularityType(r2, best)


def inverse_weight(s: SingularityType) -> int:
    """b with a*b = 1 mod r; the weight in the 1/r(b, 1, -1) presentation."""
    return mod_inverse(s.a, s.r)


def contribution_cQ(s: SingularityType, i: int) -> Rational:
    """Riemann-Roch correction of the point for a divisor locally i*K.

    Periodic in i with period r; zero for i = 0 mod r.
    """
    r = s.r
    iq = i % r
    if iq == 0:
        return Rational(0)
    b = inverse_weight(s)
    total = Rational(-iq * (r * r - 1), 12 * r)
    for j in range(1, iq):
        bj = (b * j) % r
        total += Rational(bj * (r - bj), 2 * r)
    return total


def terminal_sum(basket: Union[Basket, Iterable[PointLike]]) -> Rational:
    """Sum of r - 1/r over the basket; bounded by 24 for actual Fanos."""
    total = Rational(0)
    for entry in basket:
        r = _as_marked(entry).type.r
        total += Rational(r * r - 1, r)
    return total


def compose_actions(beta: int, ambient_exponents: tuple[int, int, int], point):
    """Type of the image of `point` under a further quotient of order beta.

    `ambient_exponents` are the exponents of the beta-action on the three
    local coordinates; the composed stabilizer is cyclic of order beta*d
    (d the index of `point`, with SMOOTH meaning d = 1).
    """
    if beta < 2:
        raise NotTerminalError(f"quotient order must be >= 2, got {beta}")
    if point is SMOOTH:
        d, pexps = 1, (1, 1, 1)
    else:
        d, pexps = point.r, point.exponents
    x, y, z = ambient_exponents
    return normalize_type(
        beta * d,
        (x * d + pexps[0] * beta, y * d + pexps[1] * beta, z * d + pexps[2] * beta),
    )


def preimage_singularity(m: MarkedSingularity, r: int) -> tuple[int, object]:
    """Points of the degree-r cyclic cover lying over a marked point.

    Returns (count, fiber type).  The marking determines the stabilizer
    order alpha = r_Q/gcd(r_Q, l); alpha must divide the torsion order r,
    and the fiber consists of r/alpha identical points whose type is the
    reduction of the exponent triple mod d = gcd(r_Q, l).
    """
    d = m.d
    alpha = m.alpha
    if r % alpha != 0:
        raise InconsistentMarkingError(
            f"{m} has stabilizer order {alpha}, incompatible with torsion order {r}"
        )
    count = r // alpha
    fiber = normalize_type(d, m.type.exponents) if d > 1 else SMOOTH
    return count, fiber
