"""Families generated by the pairwise swap of a gamma sequence.

Swapping each pair (gamma_{2k-1}, gamma_{2k}) of the symmetric recurrence
coefficients produces a perturbed symmetric family whose even/odd split
yields two new systems: the "tilde" family attached to the complementary
chain sequence (requires gamma_1 > 0) and its kernel companion.  Running
the same tilde recurrence from index zero gives the "hat" family of the
generalised complementary chain sequence, co-recursive with tilde.  The
constructions on the associated polynomials give the Q and U families.

Every identity in this module is checked exactly; reports carry the first
violated index or the nonzero difference polynomial instead of a boolean
lost to tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import GammaSeq, IdentityReport, kernel_system, system_from_gamma
from .errors import DegenerateFavard, Gamma1Zero
from .jacobi import interlace_check, truncate, zeros
from .poly import Polynomial, even_part, odd_part
from .scalars import Rat, format_scalar
from .streams import CoeffStream
from .systems import (
    SymmetricSystem,
    ThreeTermSystem,
    associated_sequence,
    monic_sequence,
    symmetric_sequence,
)

TILDE_P = "TildeP"
TILDE_K = "TildeK"


def swapped_nu(gamma: GammaSeq, N: int) -> SymmetricSystem:
    """Symmetric coefficients nu_1..nu_{2N} with adjacent pairs interchanged.

    nu_{2j} = gamma_{2j-1} and nu_{2j+1} = gamma_{2j+2}, so the stream
    (gamma_1, gamma_2, gamma_3, gamma_4, ...) is consumed as
    (gamma_2, gamma_1, gamma_4, gamma_3, ...).
    """
    vals = []
    for n in range(1, 2 * N + 1):
        if n % 2 == 0:
            vals.append(gamma.at(n - 1))
        else:
            vals.append(gamma.at(n + 1))
    return SymmetricSystem.from_values(vals)


def tilde_system(gamma: GammaSeq) -> ThreeTermSystem:
    """System of the complementary chain sequence: b_1 = gamma_1,
    b_m = gamma_{2m-1} + gamma_{2m} for m >= 2, a_n^2 = gamma_{2n-1} gamma_{2n+2}.

    gamma_1 = 0 is a hard error: the construction's hypothesis fails and the
    leading polynomial x - gamma_1 would degenerate to x.
    """
    if gamma.at(1) == 0:
        raise Gamma1Zero("tilde construction requires gamma_1 > 0")

    def b(m: int):
        if m == 1:
            return gamma.at(1)
        return gamma.at(2 * m - 1) + gamma.at(2 * m)

    def a2(n: int):
        return gamma.at(2 * n - 1) * gamma.at(2 * n + 2)

    return ThreeTermSystem(CoeffStream.from_fn(b), CoeffStream.from_fn(a2))


def hat_system(gamma: GammaSeq, allow_degenerate: bool = False) -> ThreeTermSystem:
    """Same recurrence as tilde but started one step earlier, so
    b_m = gamma_{2m-1} + gamma_{2m} for all m >= 1.

    With gamma_1 = 0 the first subdiagonal entry a_1^2 = gamma_1 gamma_4
    vanishes; that is DegenerateFavard unless the caller opts in, in which
    case the system is emitted flagged for inspection (the recurrence itself
    never multiplies anything nonzero by the degenerate entry).
    """
    degenerate = gamma.at(1) == 0
    if degenerate and not allow_degenerate:
        raise DegenerateFavard("hat system has a_1^2 = gamma_1*gamma_4 = 0")

    return ThreeTermSystem(
        CoeffStream.from_fn(lambda m: gamma.at(2 * m - 1) + gamma.at(2 * m)),
        CoeffStream.from_fn(lambda n: gamma.at(2 * n - 1) * gamma.at(2 * n + 2)),
        validate_a2=not degenerate,
        degenerate=degenerate,
    )


def tilde_kernel_system(gamma: GammaSeq) -> ThreeTermSystem:
    """Kernel companion of the swapped family:
    b_m = gamma_{2m-1} + gamma_{2m+2}, a_n^2 = gamma_{2n+1} gamma_{2n+2}."""
    return ThreeTermSystem(
        CoeffStream.from_fn(lambda m: gamma.at(2 * m - 1) + gamma.at(2 * m + 2)),
        CoeffStream.from_fn(lambda n: gamma.at(2 * n + 1) * gamma.at(2 * n + 2)),
    )


def kernel_invariance_condition(gamma: GammaSeq, N: int) -> bool:
    """True iff gamma_{2n+1} - gamma_{2n-1} = gamma_{2n+2} - gamma_{2n} for n <= N.

    When the increments match to N, the kernel system and the swapped
    family's kernel companion have identical recurrence coefficients up to
    index N.
    """
    return all(
        gamma.at(2 * n + 1) - gamma.at(2 * n - 1) == gamma.at(2 * n + 2) - gamma.at(2 * n)
        for n in range(1, N + 1)
    )


def q_system(gamma: GammaSeq) -> ThreeTermSystem:
    """Kernel-type family from the associated polynomials of the hat family:
    b_m = gamma_{2m+1} + gamma_{2m+2}, a_n^2 = gamma_{2n+2} gamma_{2n+3}."""
    return ThreeTermSystem(
        CoeffStream.from_fn(lambda m: gamma.at(2 * m + 1) + gamma.at(2 * m + 2)),
        CoeffStream.from_fn(lambda n: gamma.at(2 * n + 2) * gamma.at(2 * n + 3)),
    )


def u_system(gamma: GammaSeq) -> ThreeTermSystem:
    """The family co-recursive with the kernel system: b_1 = gamma_3,
    b_m = gamma_{2m} + gamma_{2m+1} for m >= 2, a_n^2 = gamma_{2n+1} gamma_{2n+2}.

    Its subdiagonal is checked positive (the recurrence only defines an
    orthogonal family under that condition)."""
    if not gamma.at(3) * gamma.at(4) > 0:
        raise DegenerateFavard("u system has a_1^2 <= 0")

    def b(m: int):
        if m == 1:
            return gamma.at(3)
        return gamma.at(2 * m) + gamma.at(2 * m + 1)

    return ThreeTermSystem(
        CoeffStream.from_fn(b),
        CoeffStream.from_fn(lambda n: gamma.at(2 * n + 1) * gamma.at(2 * n + 2)),
    )


def unified_coefficients(gamma: GammaSeq, variant: str, N: int):
    """Coefficient streams (xi, eta) of the single recurrence
    T_n = (x - xi_n) T_{n-1} - eta_n T_{n-2} reproducing either perturbed family.

    variant "TildeP": xi_1 = gamma_1, later xi from the base system's
    diagonal; eta_2 = gamma_1 gamma_4 and eta_{n+1} is the ratio
    (a_{n-1}^2)'' (a_n^2)'' / (a_n^2)' of kernel and base subdiagonals.
    variant "TildeK": xi_1 = gamma_1 + gamma_4, later xi combines the base
    and kernel diagonals, and eta comes from the kernel subdiagonal.

    Returned lists are 1-indexed (position 0 is None); eta_1 multiplies
    T_{-1} = 0 and is only meaningful for TildeK where it equals
    gamma_1 gamma_2.
    """
    def base_b(m):      # diagonal of the unperturbed system, m >= 2
        return gamma.at(2 * m - 1) + gamma.at(2 * m)

    def base_a2(n):     # subdiagonal of the unperturbed system
        return gamma.at(2 * n) * gamma.at(2 * n + 1)

    def ker_b(m):       # diagonal of the kernel system
        return gamma.at(2 * m) + gamma.at(2 * m + 1)

    def ker_a2(n):      # subdiagonal of the kernel system
        return gamma.at(2 * n + 1) * gamma.at(2 * n + 2)

    xi = [None] * (N + 1)
    eta = [None] * (N + 1)
    if variant == TILDE_P:
        if gamma.at(1) == 0:
            raise Gamma1Zero("TildeP unified coefficients require gamma_1 > 0")
        xi[1] = gamma.at(1)
        for m in range(2, N + 1):
            xi[m] = base_b(m)
        if N >= 2:
            eta[2] = gamma.at(1) * gamma.at(4)
        for m in range(3, N + 1):
            n = m - 1
            eta[m] = ker_a2(n - 1) * ker_a2(n) / base_a2(n)
    elif variant == TILDE_K:
        xi[1] = gamma.at(1) + gamma.at(4)
        eta[1] = gamma.at(1) * gamma.at(2)
        for m in range(2, N + 1):
            xi[m] = base_b(m) + base_b(m + 1) - ker_b(m)
            eta[m] = ker_a2(m - 1)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return xi, eta


def unified_sequence(xi, eta, n: int) -> list[Polynomial]:
    """T_0..T_n of T_m = (x - xi_m) T_{m-1} - eta_m T_{m-2}, T_{-1} = 0, T_0 = 1."""
    prev = Polynomial.zero()
    cur = Polynomial.one()
    out = [cur]
    x = Polynomial.x()
    for m in range(1, n + 1):
        nxt = (x - Polynomial.constant(xi[m])) * cur
        if m >= 2:
            nxt = nxt - prev.scale(eta[m])
        prev, cur = cur, nxt
        out.append(cur)
    return out


# -- identity checks -------------------------------------------------------------


def swap_split_check(gamma: GammaSeq, N: int, swap: bool = True) -> IdentityReport:
    """Even/odd split of the (optionally swapped) symmetric family.

    With the swap: even_part(S_{2n}) must equal the tilde polynomial and
    odd_part(S_{2n+1}) the tilde-kernel polynomial, exactly, for n <= N.
    Without it the split lands on the unperturbed base (minimal branch) and
    kernel families instead.
    """
    if swap:
        sym = swapped_nu(gamma, N + 1)
        even_sys = tilde_system(gamma)    # raises Gamma1Zero when gamma_1 = 0
        odd_sys = tilde_kernel_system(gamma)
    else:
        sym = SymmetricSystem.from_values(gamma.window(1, 2 * N + 2))
        even_sys = system_from_gamma(gamma, minimal_branch=True)
        odd_sys = kernel_system(gamma)
    S = symmetric_sequence(sym, 2 * N + 1)
    P = monic_sequence(even_sys, N)
    K = monic_sequence(odd_sys, N)
    items = []
    for n in range(0, N + 1):
        items.append(("even_part(S_2n) == P_n", n, even_part(S[2 * n]) == P[n]))
        items.append(("odd_part(S_2n+1) == K_n", n, odd_part(S[2 * n + 1]) == K[n]))
    return IdentityReport(tuple(items), notes="swap" if swap else "no swap")


@dataclass(frozen=True)
class QuasiOrthReport:
    """Exact verdict for the order-2 quasi-orthogonality combination."""

    n: int
    ok: bool
    difference: Polynomial

    def to_json(self) -> dict:
        return {"n": self.n, "ok": self.ok, "difference": self.difference.to_json()}


def quasi_sides(gamma_lhs: GammaSeq, gamma_rhs: GammaSeq, n: int):
    """Both sides of the order-2 quasi-orthogonality identity, separately
    parameterised so negative controls can corrupt one side only."""
    x = Polynomial.x()
    g = gamma_lhs.at
    Q = monic_sequence(q_system(gamma_lhs), n)
    K1 = associated_sequence(kernel_system(gamma_lhs), n + 1)
    lhs = (x * x) * Q[n] - (x * (K1[n + 1] + K1[n].scale(g(2 * n + 3)))).scale(g(2))
    h = gamma_rhs.at
    P = monic_sequence(system_from_gamma(gamma_rhs, minimal_branch=True), n + 2)
    rhs = (P[n + 2]
           + P[n + 1].scale(h(2 * n + 3) + h(2 * n + 4))
           + P[n].scale(h(2 * n + 2) * h(2 * n + 3)))
    return lhs, rhs


def quasi_orthogonality_check(gamma: GammaSeq, n: int) -> QuasiOrthReport:
    """Check, exactly, that

        x^2 Q_n - gamma_2 * x * (K1_{n+1} + gamma_{2n+3} K1_n)
          = P_{n+2} + (gamma_{2n+3} + gamma_{2n+4}) P_{n+1}
            + gamma_{2n+2} gamma_{2n+3} P_n

    where K1 is the associated sequence of the kernel system and P the
    minimal-branch base family.  The left side is the combination that is
    quasi-orthogonal of order 2; on failure the difference polynomial is
    returned for diagnosis.
    """
    lhs, rhs = quasi_sides(gamma, gamma, n)
    diff = lhs - rhs
    return QuasiOrthReport(n, diff.is_zero(), diff)


@dataclass(frozen=True)
class InterlacingReport:
    """Zero sums, their trace cross-check, and the interlacing verdict."""

    n: int
    sum_base: object          # exact: gamma_2 + ... + gamma_{2n}
    sum_tilde: object         # exact: gamma_1 + gamma_3 + ... + gamma_{2n}
    zero_sum_base: float
    zero_sum_tilde: float
    trace_consistent: bool
    verdict: str              # excluded | observed | undetermined
    reason: str
    witnesses: tuple = ()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sum_base": format_scalar(self.sum_base),
            "sum_tilde": format_scalar(self.sum_tilde),
            "zero_sum_base": self.zero_sum_base,
            "zero_sum_tilde": self.zero_sum_tilde,
            "trace_consistent": self.trace_consistent,
            "verdict": self.verdict,
            "reason": self.reason,
            "witnesses": list(self.witnesses),
        }


def zero_sum_interlacing_report(gamma: GammaSeq, n: int, tol: float) -> InterlacingReport:
    """Compare the zeros of the base and tilde polynomials of degree n.

    The zero sums satisfy exact trace identities (gamma_2 + ... + gamma_{2n}
    and gamma_1 + gamma_3 + ... + gamma_{2n}); their difference gamma_2 -
    gamma_1 drives the obstruction: interlacing is impossible whenever
    gamma_1 - gamma_2 and some x_j - xtilde_j share a sign, and in the equal
    case the sums coincide so interlacing can never occur.  Verdicts are
    reported, not asserted: "excluded", "observed" (numerically), or
    "undetermined".
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    base = system_from_gamma(gamma, minimal_branch=True)
    til = tilde_system(gamma)
    xs = zeros(base, n, tol)
    ys = zeros(til, n, tol)
    sum_base = sum(gamma.window(2, 2 * n), Rat(0))
    sum_tilde = gamma.at(1) + (sum(gamma.window(3, 2 * n), Rat(0)) if n >= 2 else 0)
    zs_base, zs_tilde = sum(xs), sum(ys)
    trace_ok = (abs(zs_base - float(sum_base)) <= n * tol
                and abs(zs_tilde - float(sum_tilde)) <= n * tol
                and truncate(base, n).trace() == sum_base
                and truncate(til, n).trace() == sum_tilde)
    delta = gamma.at(1) - gamma.at(2)
    if delta == 0:
        return InterlacingReport(n, sum_base, sum_tilde, zs_base, zs_tilde, trace_ok,
                                 "excluded", "equal zero sums (gamma_1 = gamma_2)")
    witnesses = tuple(
        j + 1 for j in range(n)
        if abs(xs[j] - ys[j]) > tol and ((xs[j] - ys[j] > 0) == (delta > 0))
    )
    if witnesses:
        return InterlacingReport(n, sum_base, sum_tilde, zs_base, zs_tilde, trace_ok,
                                 "excluded", "sign obstruction", witnesses)
    verdict = interlace_check(xs, ys, tol)
    if verdict.interlaced:
        return InterlacingReport(n, sum_base, sum_tilde, zs_base, zs_tilde, trace_ok,
                                 "observed", "zeros interlace numerically")
    return InterlacingReport(n, sum_base, sum_tilde, zs_base, zs_tilde, trace_ok,
                             "undetermined", f"no obstruction, not interlaced "
                                             f"(witness {verdict.witness})")
