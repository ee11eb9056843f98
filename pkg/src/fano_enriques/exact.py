"""Exact arithmetic helpers.

All computations in this package are over Q; floating point never
appears.  Rational is an alias for the stdlib Fraction, re-exported so
the rest of the code has a single import site should the representation
ever need to change.
"""

from __future__ import annotations

from fractions import Fraction as Rational
from math import gcd

from .errors import InvalidModulusError, NoInverseError

__all__ = [
    "Rational",
    "residue",
    "mod_inverse",
    "units",
    "is_integer",
    "parse_rational",
    "format_rational",
]


def residue(a: int, r: int) -> int:
    """The representative of a mod r in [0, r)."""
    if not isinstance(r, int) or r <= 0:
        raise InvalidModulusError(f"modulus must be a positive integer, got {r!r}")
    return a % r


def mod_inverse(a: int, r: int) -> int:
    """Inverse of a modulo r, in [0, r).

    For r = 1 every residue is 0, so the inverse is 0.
    """
    if not isinstance(r, int) or r <= 0:
        raise InvalidModulusError(f"modulus must be a positive integer, got {r!r}")
    if r == 1:
        return 0
    if gcd(a, r) != 1:
        raise NoInverseError(f"{a} is not a unit mod {r}")
    return pow(a, -1, r)


def units(r: int) -> list[int]:
    """Units of Z/r in increasing order."""
    if not isinstance(r, int) or r <= 0:
        raise InvalidModulusError(f"modulus must be a positive integer, got {r!r}")
    if r == 1:
        return [0]
    return [u for u in range(1, r) if gcd(u, r) == 1]


def is_integer(q: Rational) -> bool:
    return q.denominator == 1


def parse_rational(text: str) -> Rational:
    """Parse 'p/q' or 'p' into a Rational.  Whitespace around tokens is fine."""
    return Rational(text.strip())


def format_rational(q: Rational) -> str:
    """Render as 'p/q', or 'p' when integral."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
