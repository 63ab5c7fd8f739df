"""Scalar backends.

Two backends live behind one duck-typed interface:

* exact rationals -- arbitrary-precision ``p/q`` with gcd-normalised
  representation.  Every identity check in this package runs on these, so
  equality is meaningful and no tolerance ever enters an algebraic test.
* binary float64 -- plain Python floats, used only where roots are
  bracketed numerically.

The exact backend itself has two interchangeable implementations selected
once at import: ``gmpy2.mpq`` (GMP, compiled) when available, falling back
to the stdlib ``fractions.Fraction``.  Both are normalised rationals with
identical semantics; ``OPCHAIN_PURE_RATIONAL=1`` forces the pure-Python
implementation (used by the backend benchmark).
"""

from __future__ import annotations

import numbers
import os
import re

from .errors import InvalidRationalLiteral

_FORCE_PURE = os.environ.get("OPCHAIN_PURE_RATIONAL", "") not in ("", "0")

if not _FORCE_PURE:
    try:
        from gmpy2 import mpq as _ratio
        RAT_BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - exercised via env toggle instead
        from fractions import Fraction as _ratio
        RAT_BACKEND = "fractions"
else:
    from fractions import Fraction as _ratio
    RAT_BACKEND = "fractions"

#: Exact-rational constructor of the active implementation.
#: Accepts ints, 'p/q' strings, other rationals, or a (num, den) pair.
Rat = _ratio

ZERO = Rat(0)
ONE = Rat(1)

_LITERAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str):
    """Parse 'p/q' or an integer string into an exact rational.

    Zero denominators and anything outside the integer / ratio grammar
    (decimals, exponents, whitespace inside the token) are rejected.
    """
    token = text.strip()
    if not _LITERAL.match(token):
        raise InvalidRationalLiteral(f"not a rational literal: {text!r}")
    try:
        return Rat(token)
    except ZeroDivisionError:
        raise InvalidRationalLiteral(f"zero denominator: {text!r}") from None


def format_scalar(x) -> str:
    """Canonical string form: 'p/q' or 'p' for exact values, repr for floats."""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def is_exact(x) -> bool:
    """True for the exact backend (rationals and ints), False for floats."""
    return isinstance(x, numbers.Rational)


def as_float(x) -> float:
    return float(x)


def coerce_exact(x):
    """Normalise ints / Fractions / mpq onto the active exact type."""
    if isinstance(x, float):
        raise InvalidRationalLiteral(f"float {x!r} is not exact")
    if isinstance(x, str):
        return parse_rational(x)
    return Rat(x)
