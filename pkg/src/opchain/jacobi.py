"""Truncated monic Jacobi matrices: LU structure, spectra, interlacing.

The monic convention puts 1 on the superdiagonal, b_n on the diagonal and
a_n^2 on the subdiagonal.  LU factorisation of such a matrix reproduces the
gamma recovery entrywise: pivots are the even-indexed gammas, the unit
lower factor carries the odd ones, and the reversed product UL is the
kernel family's matrix except for a documented boundary entry.

Zeros of P_n are eigenvalues of the order-n truncation; they are found by
Sturm-sequence bisection on the symmetrised matrix, which never forms the
similarity explicitly because the pivot recurrence only needs a_n^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import gamma_from_system
from .errors import LengthMismatch, NonPositiveA2, PivotBreakdown
from .scalars import Rat, format_scalar
from .systems import ThreeTermSystem


@dataclass(frozen=True)
class TridiagonalMatrix:
    """Leading block of a monic Jacobi matrix (unit superdiagonal implied)."""

    diag: tuple   # b_1..b_n
    sub: tuple    # a_1^2..a_{n-1}^2

    def __post_init__(self):
        if len(self.sub) != max(len(self.diag) - 1, 0):
            raise LengthMismatch("sub must have length n-1")

    @property
    def n(self) -> int:
        return len(self.diag)

    def trace(self):
        return sum(self.diag)

    def entry(self, i: int, j: int):
        """1-based entry access."""
        if i == j:
            return self.diag[i - 1]
        if j == i + 1:
            return Rat(1) if not isinstance(self.diag[0], float) else 1.0
        if j == i - 1:
            return self.sub[j - 1]
        return Rat(0) if not isinstance(self.diag[0], float) else 0.0

    def to_dense(self) -> list:
        return [[self.entry(i, j) for j in range(1, self.n + 1)]
                for i in range(1, self.n + 1)]

    def to_json(self) -> dict:
        return {"diag": [format_scalar(v) for v in self.diag],
                "sub": [format_scalar(v) for v in self.sub]}


def truncate(sys: ThreeTermSystem, n: int) -> TridiagonalMatrix:
    """Leading n x n block of the system's monic Jacobi matrix."""
    return TridiagonalMatrix(
        tuple(sys.b_at(k) for k in range(1, n + 1)),
        tuple(sys.a2_at(k) for k in range(1, n)),
    )


@dataclass(frozen=True)
class BidiagonalFactors:
    """J = L.U + gamma_1 e_1 e_1^T with L unit-lower and U upper bidiagonal.

    U has the pivots on its diagonal and a unit superdiagonal; gamma_1 is
    the split of the corner entry chosen at factorisation time, zero for the
    plain LU decomposition.  ``product`` is the bare L.U; ``reconstruct``
    adds the corner term back and always reproduces the source exactly.
    """

    l_sub: tuple    # subdiagonal of L
    u_diag: tuple   # pivots
    gamma1: object = Rat(0)

    @property
    def n(self) -> int:
        return len(self.u_diag)

    def product(self) -> TridiagonalMatrix:
        """L.U as a tridiagonal matrix (unit superdiagonal preserved)."""
        u, l = self.u_diag, self.l_sub
        diag = [u[0]] + [l[i - 1] + u[i] for i in range(1, len(u))]
        sub = [l[i] * u[i] for i in range(len(l))]
        return TridiagonalMatrix(tuple(diag), tuple(sub))

    def reconstruct(self) -> TridiagonalMatrix:
        m = self.product()
        diag = (m.diag[0] + self.gamma1,) + m.diag[1:]
        return TridiagonalMatrix(diag, m.sub)

    def to_json(self) -> dict:
        return {"L_sub": [format_scalar(v) for v in self.l_sub],
                "U_diag": [format_scalar(v) for v in self.u_diag]}


def lu_factor(J: TridiagonalMatrix, gamma1=Rat(0)) -> BidiagonalFactors:
    """Factor J - gamma_1 e_1 e_1^T = L.U; with gamma_1 = 0 this is J = L.U.

    The elimination is exactly the gamma recovery: pivots u_i = gamma_{2i}
    and multipliers l_i = gamma_{2i+1} for the split b_1 = gamma_1 + gamma_2.
    PivotBreakdown(i) signals a nonpositive pivot, i.e. the zero-argument
    ratio sequence is not a chain sequence for this leading parameter.
    """
    if gamma1 < 0:
        raise PivotBreakdown(1, "gamma_1 must be >= 0")
    u = [J.diag[0] - gamma1]
    if not u[0] > 0:
        raise PivotBreakdown(1, f"pivot u_1 = {format_scalar(u[0])} <= 0")
    l = []
    for i in range(1, J.n):
        l.append(J.sub[i - 1] / u[i - 1])
        u.append(J.diag[i] - l[-1])
        if not u[-1] > 0:
            raise PivotBreakdown(i + 1, f"pivot u_{i+1} = {format_scalar(u[-1])} <= 0")
    return BidiagonalFactors(tuple(l), tuple(u), gamma1)


def ul_product(f: BidiagonalFactors) -> TridiagonalMatrix:
    """The reversed product U.L: diagonal u_i + l_i (last entry u_n bare),
    subdiagonal u_{i+1} l_i.

    For the gamma_1 = 0 factors of a system this equals the kernel family's
    truncated matrix except at the (n, n) entry, which is gamma_{2n} here
    instead of the kernel's gamma_{2n} + gamma_{2n+1}; the boundary is a
    property of truncation, reported rather than patched.
    """
    u, l = f.u_diag, f.l_sub
    diag = [u[i] + l[i] for i in range(len(l))] + [u[-1]]
    sub = [u[i + 1] * l[i] for i in range(len(l))]
    return TridiagonalMatrix(tuple(diag), tuple(sub))


def darboux_pivot_check(sys: ThreeTermSystem, gamma1, n: int) -> bool:
    """Cross-check: LU pivots equal the even-indexed entries of the gamma
    recovery and the multipliers the odd-indexed ones (exact)."""
    g = gamma_from_system(sys, gamma1, n)
    f = lu_factor(truncate(sys, n), gamma1)
    return (all(f.u_diag[i - 1] == g.at(2 * i) for i in range(1, n + 1))
            and all(f.l_sub[i - 1] == g.at(2 * i + 1) for i in range(1, n)))


# -- spectra ------------------------------------------------------------------

_PIVOT_FLOOR = 1e-300


def _count_below(diag, sub2, x: float) -> int:
    """Eigenvalues of the symmetrised matrix strictly below x.

    Standard pivot-sign recurrence q_i = (d_i - x) - e_{i-1}^2 / q_{i-1};
    the subdiagonal enters only through its square, which is a_n^2 itself,
    so no square roots are taken.  Exact-zero pivots are floored to
    +/-1e-300.
    """
    count = 0
    q = 1.0
    for i in range(len(diag)):
        q = (diag[i] - x) - (sub2[i - 1] / q if i else 0.0)
        if abs(q) < _PIVOT_FLOOR:
            q = -_PIVOT_FLOOR  # exact hit on a minor's eigenvalue counts below
        if q < 0:
            count += 1
    return count


def zeros_with_brackets(sys: ThreeTermSystem, n: int, tol: float) -> list[tuple[float, float]]:
    """Zeros of P_n as (value, bracket_width) pairs, ascending.

    The zeros are the eigenvalues of the order-n truncation; each is
    bisected inside its Gershgorin bracket until the bracket is narrower
    than tol.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if n < 1:
        return []
    diag = [float(sys.b_at(k)) for k in range(1, n + 1)]
    sub2 = []
    for k in range(1, n):
        v = float(sys.a2_at(k))
        if not v > 0:
            raise NonPositiveA2(k, f"a2[{k}] = {v} must be positive for spectra")
        sub2.append(v)
    radius = [0.0] * n
    for i in range(n):
        e_prev = sub2[i - 1] ** 0.5 if i >= 1 else 0.0
        e_next = sub2[i] ** 0.5 if i < n - 1 else 0.0
        radius[i] = e_prev + e_next
    lo = min(d - r for d, r in zip(diag, radius))
    hi = max(d + r for d, r in zip(diag, radius))
    out = []
    for j in range(n):  # j-th smallest eigenvalue
        a, b = lo, hi
        while b - a > tol:
            mid = 0.5 * (a + b)
            if mid in (a, b):  # float resolution; bracket cannot shrink further
                break
            if _count_below(diag, sub2, mid) > j:
                b = mid
            else:
                a = mid
        out.append((0.5 * (a + b), b - a))
    out.sort()
    return out


def zeros(sys: ThreeTermSystem, n: int, tol: float) -> list[float]:
    """Ascending zeros of P_n, each bracketed to width <= tol."""
    return [v for v, _ in zeros_with_brackets(sys, n, tol)]


@dataclass(frozen=True)
class InterlaceVerdict:
    interlaced: bool
    witness: int | None = None

    def tag(self) -> str:
        return "Interlaced" if self.interlaced else f"NotInterlaced({self.witness})"

    def to_json(self) -> dict:
        return {"verdict": "Interlaced" if self.interlaced else "NotInterlaced",
                "witness": self.witness}


def interlace_check(xs, ys, tol: float) -> InterlaceVerdict:
    """Mutual separation of two ascending zero sets of equal length.

    Interlaced means the merged order alternates strictly, starting from
    either side; comparisons are strict at margin tol.  The witness is the
    first 1-based position where alternation fails.
    """
    if len(xs) != len(ys):
        raise LengthMismatch(f"{len(xs)} vs {len(ys)} zeros")
    if not xs:
        return InterlaceVerdict(True)

    def less(a, b):
        return a + tol < b

    first, second = (xs, ys) if xs[0] < ys[0] else (ys, xs)
    # require first_1 < second_1 < first_2 < second_2 < ...
    for j in range(len(first)):
        if not less(first[j], second[j]):
            return InterlaceVerdict(False, j + 1)
        if j + 1 < len(first) and not less(second[j], first[j + 1]):
            return InterlaceVerdict(False, j + 1)
    return InterlaceVerdict(True)
