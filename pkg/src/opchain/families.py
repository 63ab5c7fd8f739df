"""Closed-form families: Laguerre, its shifted companion, a finite
inverse-Laguerre class, and the Christoffel-pair coefficient relations.

All parameters are exact rationals, so family identities (gamma recovery,
kernel shifts, complementary systems) are testable with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import GammaSeq
from .errors import (
    AlphaOutOfRange,
    DegreeBeyondFamily,
    NonPositiveInput,
    ZeroDenominator,
)
from .scalars import Rat, coerce_exact
from .streams import CoeffStream
from .systems import ThreeTermSystem


def _check_alpha(alpha):
    alpha = coerce_exact(alpha)
    if not alpha > -1:
        raise AlphaOutOfRange(f"alpha = {alpha} must exceed -1")
    return alpha


def laguerre_system(alpha) -> ThreeTermSystem:
    """Monic generalized Laguerre recurrence: b_n = 2n + alpha - 1,
    a_n^2 = n(n + alpha), valid for alpha > -1."""
    alpha = _check_alpha(alpha)
    return ThreeTermSystem(
        CoeffStream.from_fn(lambda n: 2 * n + alpha - 1),
        CoeffStream.from_fn(lambda n: n * (n + alpha)),
    )


def e_family_system(alpha) -> ThreeTermSystem:
    """The companion family with b_n = 2n + alpha and a_n^2 = (n+1)(n+alpha).

    Equivalently the gamma_1 = 1 system of ``laguerre_gamma(alpha, 1)``; its
    polynomials are the order-1 associated Laguerre family with alpha
    shifted down by one.
    """
    alpha = _check_alpha(alpha)
    return ThreeTermSystem(
        CoeffStream.from_fn(lambda n: 2 * n + alpha),
        CoeffStream.from_fn(lambda n: (n + 1) * (n + alpha)),
    )


def laguerre_gamma(alpha, gamma1: int) -> GammaSeq:
    """Closed-form gamma sequence of the Laguerre chain.

    gamma1 = 0: gamma_{2n} = n + alpha, gamma_{2n+1} = n  (the minimal
    split of ``laguerre_system``).
    gamma1 = 1: gamma_{2n} = n + alpha, gamma_{2n+1} = n + 1  (the split of
    ``e_family_system`` with leading parameter 1).

    Both must agree exactly with the generic recovery from the respective
    system, which the test-suite asserts.
    """
    alpha = _check_alpha(alpha)
    if gamma1 not in (0, 1):
        raise ValueError("gamma1 must be 0 or 1")
    shift = gamma1  # odd entries: n (+1 on the shifted branch)

    def fn(k: int):
        if k == 1:
            return Rat(gamma1)
        if k % 2 == 0:
            return Rat(k, 2) + alpha
        return Rat((k - 1) // 2 + shift)

    return GammaSeq.from_fn(fn)


# -- finite inverse-Laguerre class ------------------------------------------------


@dataclass(frozen=True)
class RRParams:
    """Parameter p of the finite family; n_max is the largest degree whose
    monic recurrence data exists (no vanishing denominator, positive a_n^2)."""

    p: object
    n_max: int = field(init=False)

    def __post_init__(self):
        p = coerce_exact(self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n_max", _rr_scan(p))


def _rr_step_denominators(p, n: int):
    return (p - 2 * n, p - (2 * n + 1), p - (2 * n + 2), p - (n + 1))


def _rr_raw(p, n: int):
    """Raw recurrence pieces (A_n, B_n, C_n) of the non-monic form
    N_{n+1} = (A_n x + B_n) N_n - C_n N_{n-1}."""
    d2n, d2n1, d2n2, dn1 = _rr_step_denominators(p, n)
    if 0 in (d2n, d2n1, d2n2, dn1):
        raise ZeroDenominator(n, f"vanishing factor at step n = {n}")
    A = d2n2 * d2n1 / dn1
    B = -p * d2n1 / (dn1 * d2n)
    C = n * d2n2 / (dn1 * d2n)
    return A, B, C


def _rr_scan(p, cap: int = 4096) -> int:
    """Largest degree m such that steps 0..m-1 have nonzero denominators and
    a_n^2 > 0 for 1 <= n < m."""
    for n in range(cap):
        if 0 in _rr_step_denominators(p, n):
            return n
        if n >= 1:
            b, a2 = _rr_monic_step(p, n)
            if not a2 > 0:
                return n
    return cap


def monicize_step(A_n, B_n, C_n, A_prev):
    """Monic recurrence data from one step of (A_n x + B_n) N_n - C_n N_{n-1}:
    b_{n+1} = -B_n/A_n and a_n^2 = C_n/(A_n A_{n-1})."""
    if A_n == 0 or A_prev == 0:
        raise ZeroDenominator(0, "leading coefficient vanishes")
    return -B_n / A_n, C_n / (A_n * A_prev)


def _rr_monic_step(p, n: int):
    A, B, C = _rr_raw(p, n)
    if n == 0:
        return -B / A, Rat(0)  # a_0^2 multiplies P_{-1} and never enters
    A_prev, _, _ = _rr_raw(p, n - 1)
    return monicize_step(A, B, C, A_prev)


def rr_monicize(params: RRParams, n: int):
    """Monic coefficients (b_{n+1}, a_n^2) of the finite family at step n.

    Steps whose denominators vanish raise ZeroDenominator; steps past the
    family's validity window raise DegreeBeyondFamily.
    """
    if n < 0:
        raise DegreeBeyondFamily("n must be >= 0")
    if n > params.n_max:
        raise DegreeBeyondFamily(
            f"step n = {n} beyond validity window (n_max = {params.n_max})")
    b, a2 = _rr_monic_step(params.p, n)  # raises ZeroDenominator at the boundary
    if n >= 1 and not a2 > 0:
        raise DegreeBeyondFamily(f"a_{n}^2 = {a2} is not positive")
    return b, a2


def rr_system(params: RRParams) -> ThreeTermSystem:
    """Finite-stream system serving degrees up to n_max."""
    b, a2 = [], []
    for n in range(params.n_max):
        bn, a2n = _rr_monic_step(params.p, n)
        b.append(bn)
        if n >= 1:
            a2.append(a2n)
    return ThreeTermSystem.from_values(b, a2)


def rr_raw_coefficients(params: RRParams, n: int):
    """Expose (A_n, B_n, C_n) for cross-checks against the monic route."""
    return _rr_raw(params.p, n)


# -- Christoffel-pair coefficient relations ------------------------------------------


@dataclass(frozen=True)
class LSequence:
    """l_0 = 1 < l_n together with the positive Christoffel constant k."""

    l: tuple
    k: object

    def __post_init__(self):
        if not self.l or self.l[0] != 1:
            raise NonPositiveInput("l_0 must be exactly 1")
        for n, v in enumerate(self.l[1:], start=1):
            if not v > 1:
                raise NonPositiveInput(f"l_{n} = {v} must exceed 1")
        if not self.k > 0:
            raise NonPositiveInput("k must be positive")

    def __len__(self):
        return len(self.l)

    def __getitem__(self, n: int):
        return self.l[n]


def l_from_gamma(gamma_phi1, k) -> LSequence:
    """Solve 4 k g_{n+1} = (l_n - 1)(l_{n-1} + 1) forward from l_0 = 1.

    ``gamma_phi1`` lists the symmetric coefficients for indices 2, 3, ...
    (the index-1 relation is boundary-ambiguous and not served).  All inputs
    must be positive, which forces every l_n > 1.
    """
    k = coerce_exact(k)
    if not k > 0:
        raise NonPositiveInput("k must be positive")
    l = [Rat(1)]
    for i, g in enumerate(gamma_phi1, start=1):
        g = coerce_exact(g)
        if not g > 0:
            raise NonPositiveInput(f"coefficient at index {i + 1} must be positive")
        l.append(1 + 4 * k * g / (l[-1] + 1))
    return LSequence(tuple(l), k)


def gamma_phi2_from_l(l: LSequence) -> list:
    """The partner coefficients 4 k g_{n+1} = (l_n - 1)(l_{n+1} + 1).

    Returns values for indices 2, 3, ..., len(l)-1; like ``l_from_gamma``
    the boundary index 1 is not served.
    """
    return [
        (l[n] - 1) * (l[n + 1] + 1) / (4 * l.k)
        for n in range(1, len(l) - 1)
    ]
