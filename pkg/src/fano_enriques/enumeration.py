"""Exhaustive enumeration of admissible marked baskets.

A marked basket records where a torsion divisor of order r is non-Cartier
and how.  Five necessary conditions cut the search space down to a finite,
small list:

  R1  sum of (r_Q - 1/r_Q) over the basket is < 24,
  R2  the same bound for the forced preimage on the cyclic cover,
  R3  the covering has a fixed point: some entry has stabilizer order
      exactly r (and r <= 24),
  R4  chi(-nK + i*sigma) - chi(-nK) is an integer for every i and n,
  R5  chi(i*sigma) is a nonnegative integer for every i (h^0 of a divisor
      class; the strict variant insists on 0 for i != 0).

R1 bounds both the index of any entry and the number of entries, so a
depth-first walk over nondecreasing item sequences with a running budget
is exhaustive.  Candidates are reported up to rescaling of the torsion
generator (sigma -> u*sigma multiplies every marking by u).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from .errors import OutOfRangeError
from .exact import Rational, format_rational, is_integer, units
from .hilbert import torsion_delta_at
from .orbifold import Basket, MarkedSingularity, SingularityType, terminal_sum

__all__ = [
    "BtCandidate",
    "RestrictionReport",
    "check_restrictions",
    "canonicalize",
    "enumerate_bt",
]

# R1 forces r_Q - 1/r_Q < 24, hence r_Q <= 24; R3 caps the torsion order
MAX_INDEX = 24
MAX_TORSION = 24


@dataclass(frozen=True)
class BtCandidate:
    """A torsion order together with a fully marked basket."""

    r: int
    entries: Basket

    def __post_init__(self):
        if not isinstance(self.entries, Basket):
            object.__setattr__(self, "entries", Basket(tuple(self.entries)))
        for entry in self.entries:
            if entry.l == 0:
                raise OutOfRangeError(f"candidate entry {entry} is unmarked")
            if self.r % entry.alpha != 0:
                raise OutOfRangeError(
                    f"entry {entry} has stabilizer order {entry.alpha}, "
                    f"not a divisor of r = {self.r}"
                )

    @property
    def canonical(self) -> bool:
        return self.entries == canonicalize(self).entries

    def __str__(self):
        return f"r={self.r} | {self.entries}"


@dataclass
class RestrictionReport:
    """Pass/fail per restriction, with the offending value on failure."""

    results: dict[str, tuple[bool, str]]

    @property
    def admissible(self) -> bool:
        return all(passed for passed, _ in self.results.values())

    def __getitem__(self, key: str) -> tuple[bool, str]:
        return self.results[key]

    def failures(self) -> list[str]:
        return [k for k, (passed, _) in self.results.items() if not passed]

    def __str__(self):
        return "; ".join(
            f"{k}:{'pass' if passed else 'FAIL(' + detail + ')'}"
            for k, (passed, detail) in self.results.items()
        )


@lru_cache(maxsize=None)
def _delta_cycle(r_q: int, a: int, lp: int) -> tuple[Rational, ...]:
    """Per-entry torsion delta over one period of n, via the hilbert oracle."""
    single = Basket((MarkedSingularity(SingularityType(r_q, a), lp),))
    return tuple(torsion_delta_at(single, 1, n) for n in range(r_q))


@lru_cache(maxsize=None)
def _delta_cycle_scaled(r_q: int, a: int, lp: int) -> tuple[int, ...]:
    """The same cycle as exact integers scaled by 12*r_q (always integral)."""
    out = []
    for v in _delta_cycle(r_q, a, lp):
        scaled = v * 12 * r_q
        assert scaled.denominator == 1
        out.append(scaled.numerator)
    return tuple(out)


def _candidate_deltas(entries, i: int, length: int):
    cycles = []
    for entry in entries:
        lp = (i * entry.l) % entry.type.r
        if lp:
            cycles.append(_delta_cycle(entry.type.r, entry.type.a, lp))
    for n in range(length):
        yield sum((c[n % len(c)] for c in cycles), Rational(0))


def check_restrictions(c: BtCandidate, strict_chi: bool = False) -> RestrictionReport:
    """Evaluate R1-R5 for a candidate; all five must pass for admissibility."""
    results: dict[str, tuple[bool, str]] = {}

    s1 = terminal_sum(c.entries)
    results["R1"] = (s1 < 24, format_rational(s1))

    s2 = Rational(0)
    for entry in c.entries:
        d = entry.d
        if d > 1:
            s2 += Rational((c.r // entry.alpha) * (d * d - 1), d)
    results["R2"] = (s2 < 24, format_rational(s2))

    witness = any(entry.alpha == c.r for entry in c.entries)
    results["R3"] = (
        witness and c.r <= MAX_TORSION,
        "no entry with stabilizer order r" if not witness else f"r={c.r}",
    )

    period = lcm(*(entry.type.r for entry in c.entries))
    r4_ok, r4_detail = True, ""
    for i in range(1, c.r):
        for n, v in enumerate(_candidate_deltas(c.entries, i, period)):
            if not is_integer(v):
                r4_ok, r4_detail = False, f"delta({i},{n}) = {format_rational(v)}"
                break
        if not r4_ok:
            break
    results["R4"] = (r4_ok, r4_detail)

    r5_ok, r5_detail = True, ""
    for i in range(1, c.r):
        chi = 1 + torsion_delta_at(c.entries, i, 0)
        bad = (not is_integer(chi)) or chi < 0 or (strict_chi and chi != 0)
        if bad:
            r5_ok, r5_detail = False, f"chi({i}*sigma) = {format_rational(chi)}"
            break
    results["R5"] = (r5_ok, r5_detail)

    return RestrictionReport(results)


def canonicalize(c: BtCandidate) -> BtCandidate:
    """Least representative of the candidate under sigma -> u*sigma."""
    best = None
    for u in units(c.r):
        rescaled = tuple(
            sorted(
                MarkedSingularity(e.type, (u * e.l) % e.type.r)
                for e in c.entries
            )
        )
        if best is None or rescaled < best:
            best = rescaled
    return BtCandidate(c.r, Basket(best or ()))


def _admissible_items(r: int) -> list[MarkedSingularity]:
    """Every marked point usable for torsion order r.

    The stabilizer order alpha = r_Q/gcd(r_Q, l) of an entry must divide r
    and exceed 1 (markings are nonzero); writing r_Q = alpha*m, the valid
    markings are l = m*u with u a unit mod alpha.
    """
    items = []
    for alpha in range(2, r + 1):
        if r % alpha:
            continue
        for m in range(1, MAX_INDEX // alpha + 1):
            r_q = alpha * m
            for a in range(1, r_q // 2 + 1):
                if gcd(a, r_q) != 1:
                    continue
                for u in range(1, alpha):
                    if gcd(u, alpha) == 1:
                        items.append(
                            MarkedSingularity(SingularityType(r_q, a), m * u)
                        )
    return sorted(items)


def _passes_numeric(entries: tuple[MarkedSingularity, ...], r: int, strict_chi: bool) -> bool:
    """R4 + R5, short-circuiting.  R1-R3 are maintained by the search itself.

    Works in integers: per-entry cycles are scaled by 12*r_Q, the candidate
    total by d = 12*lcm(r_Q), so integrality is a single modulus test and
    chi(i*sigma) >= 0 becomes total >= -d.
    """
    period = lcm(*(e.type.r for e in entries))
    d = 12 * period
    for i in range(1, r):
        parts = []
        for e in entries:
            r_q = e.type.r
            lp = (i * e.l) % r_q
            if lp:
                parts.append((_delta_cycle_scaled(r_q, e.type.a, lp), r_q, d // (12 * r_q)))
        for n in range(period):
            total = sum(cycle[n % r_q] * f for cycle, r_q, f in parts)
            if total % d:
                return False
            if n == 0 and (total < -d or (strict_chi and total != -d)):
                return False
    return True


def enumerate_bt(r: int, strict_chi: bool = False) -> list[BtCandidate]:
    """All admissible marked baskets for torsion order r, canonical and sorted."""
    if not 2 <= r <= MAX_TORSION:
        raise OutOfRangeError(f"torsion order {r} outside [2, {MAX_TORSION}]")
    items = _admissible_items(r)
    # budget arithmetic in integers: costs scaled by lcm(1..24)
    scale = lcm(*range(1, MAX_INDEX + 1))
    budget = 24 * scale
    cost1 = [(it.type.r * it.type.r - 1) * (scale // it.type.r) for it in items]
    cost2 = [
        (r // it.alpha) * (it.d * it.d - 1) * (scale // it.d) if it.d > 1 else 0
        for it in items
    ]
    is_witness = [it.alpha == r for it in items]

    found: set[tuple[MarkedSingularity, ...]] = set()
    chosen: list[MarkedSingularity] = []

    def walk(start: int, s1: int, s2: int, witness: bool):
        for k in range(start, len(items)):
            n1 = s1 + cost1[k]
            if n1 >= budget:
                break  # items are sorted by index, so cost1 only grows
            n2 = s2 + cost2[k]
            if n2 >= budget:
                continue
            chosen.append(items[k])
            w = witness or is_witness[k]
            if w and _passes_numeric(tuple(chosen), r, strict_chi):
                canon = canonicalize(BtCandidate(r, Basket(tuple(chosen))))
                found.add(canon.entries.entries)
            walk(k, n1, n2, w)
            chosen.pop()

    walk(0, 0, 0, False)
    return sorted(
        (BtCandidate(r, Basket(entries)) for entries in found),
        key=lambda c: c.entries.entries,
    )
