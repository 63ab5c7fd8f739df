"""Dense univariate polynomials over either scalar backend.

Coefficients are stored ascending by degree with no trailing zeros; the
zero polynomial has an empty coefficient tuple.  All values are immutable.
Arithmetic never mixes backends: exact-rational and float64 polynomials
must be combined explicitly by the caller.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import BackendMismatch, NonEvenPolynomial, NonOddPolynomial
from .scalars import Rat, coerce_exact, format_scalar, parse_rational

RATIONAL = "rational"
FLOAT = "float"


def _coerce(values: Iterable, backend: str | None):
    vals = list(values)
    if backend is None:
        backend = FLOAT if any(isinstance(v, float) for v in vals) else RATIONAL
    if backend == FLOAT:
        return [float(v) for v in vals], FLOAT
    out = []
    for v in vals:
        if isinstance(v, float):
            raise BackendMismatch("float coefficient in a rational polynomial")
        out.append(coerce_exact(v))
    return out, RATIONAL


class Polynomial:
    """Immutable dense polynomial; degree is the index of the last nonzero."""

    __slots__ = ("coeffs", "backend")

    def __init__(self, coeffs: Sequence = (), backend: str | None = None):
        vals, back = _coerce(coeffs, backend)
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "coeffs", tuple(vals))
        object.__setattr__(self, "backend", back)

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, backend: str = RATIONAL) -> "Polynomial":
        return cls((), backend)

    @classmethod
    def one(cls, backend: str = RATIONAL) -> "Polynomial":
        return cls((1,), backend)

    @classmethod
    def x(cls, backend: str = RATIONAL) -> "Polynomial":
        return cls((0, 1), backend)

    @classmethod
    def constant(cls, c, backend: str | None = None) -> "Polynomial":
        return cls((c,), backend)

    @classmethod
    def from_strings(cls, coeffs: Iterable[str]) -> "Polynomial":
        return cls([parse_rational(c) for c in coeffs], RATIONAL)

    # -- basic structure ----------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0.0 if self.backend == FLOAT else Rat(0)

    def _check(self, other: "Polynomial"):
        if self.backend != other.backend:
            raise BackendMismatch(
                f"cannot combine {self.backend} and {other.backend} polynomials")

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out, self.backend)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs], self.backend)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.backend)
        zero = 0.0 if self.backend == FLOAT else Rat(0)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out, self.backend)

    def scale(self, c) -> "Polynomial":
        c = float(c) if self.backend == FLOAT else coerce_exact(c)
        return Polynomial([c * a for a in self.coeffs], self.backend)

    def shift_up(self, k: int = 1) -> "Polynomial":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        zero = 0.0 if self.backend == FLOAT else Rat(0)
        return Polynomial([zero] * k + list(self.coeffs), self.backend)

    def __call__(self, x):
        """Horner evaluation; exact when both the polynomial and x are exact."""
        if isinstance(x, float) != (self.backend == FLOAT):
            raise BackendMismatch("evaluation point backend differs from polynomial")
        acc = 0.0 if self.backend == FLOAT else Rat(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- comparison ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.backend != other.backend:
            raise BackendMismatch("equality across backends is undefined")
        if self.backend == FLOAT:
            raise BackendMismatch(
                "float polynomials compare via max_abs_diff with a tolerance")
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.backend == FLOAT:
            raise TypeError("float polynomials are unhashable")
        return hash(self.coeffs)

    def max_abs_diff(self, other: "Polynomial") -> float:
        """Largest |coefficient difference|; the float-mode comparison."""
        n = max(len(self.coeffs), len(other.coeffs))
        return max(
            (abs(float(self.coefficient(k)) - float(other.coefficient(k))) for k in range(n)),
            default=0.0,
        )

    # -- conversions ------------------------------------------------------

    def to_float(self) -> "Polynomial":
        return Polynomial([float(c) for c in self.coeffs], FLOAT)

    def to_json(self) -> dict:
        return {"coeffs": [format_scalar(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc: dict) -> "Polynomial":
        return cls.from_strings(doc["coeffs"])

    def __repr__(self):
        return f"Polynomial([{', '.join(format_scalar(c) for c in self.coeffs)}])"


def even_part(p: Polynomial) -> Polynomial:
    """Invert the square substitution: return q with q(x^2) = p(x).

    Requires every odd-degree coefficient of p to vanish.
    """
    for k in range(1, len(p.coeffs), 2):
        if p.coeffs[k] != 0:
            raise NonEvenPolynomial(f"nonzero coefficient at odd degree {k}")
    return Polynomial(p.coeffs[0::2], p.backend)


def odd_part(p: Polynomial) -> Polynomial:
    """Return q with x * q(x^2) = p(x); every even-degree coefficient must vanish."""
    for k in range(0, len(p.coeffs), 2):
        if p.coeffs[k] != 0:
            raise NonOddPolynomial(f"nonzero coefficient at even degree {k}")
    return Polynomial(p.coeffs[1::2], p.backend)


def substitute_square(p: Polynomial) -> Polynomial:
    """Return p(x^2)."""
    zero = 0.0 if p.backend == FLOAT else Rat(0)
    out = []
    for c in p.coeffs:
        out.append(c)
        out.append(zero)
    return Polynomial(out[:-1] if out else out, p.backend)
