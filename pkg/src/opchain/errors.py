"""Exception hierarchy.

Errors that point at a specific index (a recurrence step, a gamma entry,
a pivot) carry it as ``.index`` so callers and reports can name the first
offending position.
"""


class OpchainError(Exception):
    """Base class for every error raised by this package."""


class IndexedError(OpchainError):
    """An error located at a specific 1-based index."""

    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"{type(self).__name__} at index {index}")


# -- scalars / polynomials ------------------------------------------------

class InvalidRationalLiteral(OpchainError):
    """String is not an integer or 'p/q' with nonzero q."""


class BackendMismatch(OpchainError):
    """Exact-rational and float64 values mixed in one operation."""


class NonEvenPolynomial(OpchainError):
    """Polynomial has a nonzero odd-degree coefficient."""


class NonOddPolynomial(OpchainError):
    """Polynomial has a nonzero even-degree coefficient."""


class DegreeViolation(OpchainError):
    """Degree precondition broken (e.g. numerator degree >= denominator)."""


# -- coefficient streams ---------------------------------------------------

class StreamExhausted(IndexedError):
    """Requested an entry beyond a stream's declared valid range."""


# -- gamma sequences and chain sequences -----------------------------------

class NonPositiveGamma(IndexedError):
    """gamma_n <= 0 for some n >= 2 (or gamma_1 < 0)."""


class InvalidGamma1(OpchainError):
    """gamma_1 outside [0, b_1)."""


class PositivityBreak(IndexedError):
    """gamma recovery produced a nonpositive entry: the zero-argument
    ratios do not form a chain sequence for this leading parameter."""


class NotAChainSequence(IndexedError):
    """Minimal-parameter recurrence left (0,1) at this index."""


class NotMinimal(OpchainError):
    """Parameter sequence must be minimal (g_0 = 0) here."""


class ParameterOutOfRange(OpchainError):
    """Parameter sequence violates 0 <= g_0 < 1 or 0 < g_n < 1."""


class PoleAtB(IndexedError):
    """Chain-sequence evaluation point t collides with a diagonal entry b_n."""


class ZeroDenominator(IndexedError):
    """A denominator in a closed-form or polynomial ratio vanished."""


# -- perturbed families -----------------------------------------------------

class Gamma1Zero(OpchainError):
    """The pairwise-swapped construction requires gamma_1 > 0."""


class DegenerateFavard(OpchainError):
    """A recurrence was produced with some a_n^2 <= 0."""


# -- Jacobi matrices ---------------------------------------------------------

class PivotBreakdown(IndexedError):
    """LU elimination hit a nonpositive pivot."""


class NonPositiveA2(IndexedError):
    """Subdiagonal entry a_n^2 <= 0 where positivity is required."""


class LengthMismatch(OpchainError):
    """Two vectors that must have equal length do not."""


# -- closed-form families -----------------------------------------------------

class AlphaOutOfRange(OpchainError):
    """Family parameter alpha outside its orthogonality domain (alpha > -1)."""


class DegreeBeyondFamily(OpchainError):
    """Requested degree is outside a finite family's validity window."""


class NonPositiveInput(OpchainError):
    """Input required to be strictly positive is not."""
