"""Chain sequences, their parameter sequences, and gamma decompositions.

A positive chain sequence is d_n = (1 - g_{n-1}) g_n with 0 <= g_0 < 1 and
0 < g_n < 1.  The minimal parameters start at m_0 = 0; the maximal ones are
the suprema over all admissible parameter sequences.  Splitting each
recurrence coefficient as

    b_{n+1} = gamma_{2n+1} + gamma_{2n+2},     a_n^2 = gamma_{2n} gamma_{2n+1}

ties a system with true interval inside [0, oo) to a gamma sequence whose
odd/even split encodes a parameter choice g_n = gamma_{2n+1}/b_{n+1}; the
complementary and generalised complementary constructions act on exactly
these parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvalidGamma1,
    NonPositiveGamma,
    NotAChainSequence,
    NotMinimal,
    ParameterOutOfRange,
    PoleAtB,
    PositivityBreak,
    ZeroDenominator,
)
from .poly import Polynomial
from .scalars import Rat, format_scalar
from .streams import CoeffStream
from .systems import ThreeTermSystem, monic_sequence

INFINITY = None  # open right endpoint sentinel for (a, oo) interval checks


@dataclass(frozen=True, eq=False)
class GammaSeq:
    """gamma_1, gamma_2, ... with gamma_1 >= 0 and gamma_n > 0 for n >= 2.

    Positivity is validated on access so closed-form streams are usable.
    """

    gamma: CoeffStream

    def at(self, k: int):
        v = self.gamma[k]
        if k == 1:
            if v < 0:
                raise NonPositiveGamma(1, f"gamma_1 = {v} is negative")
        elif not v > 0:
            raise NonPositiveGamma(k, f"gamma_{k} = {v} is not positive")
        return v

    def window(self, lo: int, hi: int) -> list:
        return [self.at(k) for k in range(lo, hi + 1)]

    @classmethod
    def from_values(cls, values) -> "GammaSeq":
        return cls(CoeffStream.from_values(values, start=1))

    @classmethod
    def from_fn(cls, fn, stop=None) -> "GammaSeq":
        return cls(CoeffStream.from_fn(fn, start=1, stop=stop))


@dataclass(frozen=True)
class ParameterSeq:
    """Finite realization g_0..g_N of a parameter sequence.

    Construction enforces 0 <= g_0 < 1 and 0 < g_n < 1; ``minimal`` is the
    derived fact g_0 = 0.  ``horizon`` is set on backward-iterated maximal
    parameters to record how far past N the iteration started.
    """

    g: tuple
    horizon: int | None = None

    def __post_init__(self):
        if not self.g:
            raise ParameterOutOfRange("empty parameter sequence")
        if not (0 <= self.g[0] < 1):
            raise ParameterOutOfRange(f"g_0 = {self.g[0]} outside [0, 1)")
        last = len(self.g) - 1
        for n, v in enumerate(self.g[1:], start=1):
            # the final entry may be exactly 1: a finite chain sequence's
            # maximal terminal parameter
            if not (0 < v < 1 or (n == last and v == 1)):
                raise ParameterOutOfRange(f"g_{n} = {v} outside (0, 1)")

    @property
    def minimal(self) -> bool:
        return self.g[0] == 0

    def __len__(self):
        return len(self.g)

    def __getitem__(self, n: int):
        return self.g[n]


@dataclass(frozen=True, eq=False)
class ChainSequence:
    """d_1, d_2, ... as a stream, optionally with a parameter sequence attached."""

    d: CoeffStream
    parameters: ParameterSeq | None = None

    def at(self, n: int):
        return self.d[n]

    def window(self, lo: int, hi: int) -> list:
        return [self.d[n] for n in range(lo, hi + 1)]

    @classmethod
    def from_values(cls, values, parameters=None) -> "ChainSequence":
        return cls(CoeffStream.from_values(values, start=1), parameters)


# -- parameter sequences -------------------------------------------------------


def minimal_parameters(d: ChainSequence, N: int) -> ParameterSeq:
    """m_0..m_N from m_0 = 0, m_n = d_n / (1 - m_{n-1}).

    Raises NotAChainSequence(n) as soon as some m_n leaves (0,1): the input
    fails to be a chain sequence by index n.
    """
    exact = not isinstance(d.at(1), float) if N >= 1 else True
    m = [Rat(0) if exact else 0.0]
    for n in range(1, N + 1):
        mn = d.at(n) / (1 - m[n - 1])
        if not (0 < mn < 1):
            raise NotAChainSequence(n, f"m_{n} = {mn} outside (0, 1)")
        m.append(mn)
    return ParameterSeq(tuple(m))


def maximal_parameters(d: ChainSequence, N: int, horizon: int) -> ParameterSeq:
    """Approximate M_0..M_N by backward iteration M_{n-1} = 1 - d_n / M_n.

    The iteration starts from the terminal value 1 at index N + horizon (or
    at the stream's end, where 1 is exact for a finite chain sequence) and
    overestimates: outputs decrease monotonically toward the true maxima as
    the horizon grows.  Entries are clamped below by the minimal parameters;
    the horizon actually used is recorded on the result.
    """
    T = N + horizon
    if d.d.is_finite():
        T = min(T, d.d.stop)
    m = minimal_parameters(d, T)  # also certifies d is a chain sequence to T
    one = 1.0 if isinstance(d.at(1), float) else Rat(1)
    cur = one
    out = {T: cur}
    for n in range(T, 0, -1):
        cur = 1 - d.at(n) / cur
        out[n - 1] = cur
    vals = [max(m[n], out[n]) for n in range(N + 1)]
    return ParameterSeq(tuple(vals), horizon=T - N)


# -- gamma decomposition --------------------------------------------------------


def gamma_from_system(sys: ThreeTermSystem, gamma1, N: int) -> GammaSeq:
    """Recover gamma_1..gamma_{2N+2} from b and a2 given the split of b_1.

    gamma_2 = b_1 - gamma_1, then alternately gamma_{2n+1} = a_n^2/gamma_{2n}
    and gamma_{2n+2} = b_{n+1} - gamma_{2n+1}.  PositivityBreak(k) signals
    that the zero-argument ratios are not a chain sequence for this choice
    of leading parameter.
    """
    b1 = sys.b_at(1)
    if not (0 <= gamma1 < b1):
        raise InvalidGamma1(f"gamma_1 = {format_scalar(gamma1)} outside [0, {format_scalar(b1)})")
    g = [gamma1, b1 - gamma1]
    for n in range(1, N + 1):
        odd = sys.a2_at(n) / g[-1]
        if not odd > 0:
            raise PositivityBreak(2 * n + 1, f"gamma_{2*n+1} = {odd} is not positive")
        even = sys.b_at(n + 1) - odd
        if not even > 0:
            raise PositivityBreak(2 * n + 2, f"gamma_{2*n+2} = {even} is not positive")
        g.extend([odd, even])
    return GammaSeq.from_values(g)


def system_from_gamma(gamma: GammaSeq, minimal_branch: bool = False) -> ThreeTermSystem:
    """The system with b_n = gamma_{2n-1} + gamma_{2n}, a_n^2 = gamma_{2n} gamma_{2n+1}.

    With ``minimal_branch`` the leading split is folded out (b_1 = gamma_2),
    which is the convention forced by the even/odd split of a symmetric
    family; it coincides with the default exactly when gamma_1 = 0.
    """
    def b(n: int):
        if n == 1 and minimal_branch:
            return gamma.at(2)
        return gamma.at(2 * n - 1) + gamma.at(2 * n)

    def a2(n: int):
        return gamma.at(2 * n) * gamma.at(2 * n + 1)

    return ThreeTermSystem(CoeffStream.from_fn(b), CoeffStream.from_fn(a2))


def parameters_from_gamma(gamma: GammaSeq, N: int) -> ParameterSeq:
    """g_n = gamma_{2n+1} / (gamma_{2n+1} + gamma_{2n+2}) for n = 0..N."""
    g = []
    for n in range(N + 1):
        odd, even = gamma.at(2 * n + 1), gamma.at(2 * n + 2)
        g.append(odd / (odd + even))
    return ParameterSeq(tuple(g))


def kernel_system(gamma: GammaSeq) -> ThreeTermSystem:
    """Recurrence data of the kernel family at the origin.

    b_n = gamma_{2n} + gamma_{2n+1} and a_n^2 = gamma_{2n+1} gamma_{2n+2};
    gamma_1 never enters.
    """
    return ThreeTermSystem(
        CoeffStream.from_fn(lambda n: gamma.at(2 * n) + gamma.at(2 * n + 1)),
        CoeffStream.from_fn(lambda n: gamma.at(2 * n + 1) * gamma.at(2 * n + 2)),
    )


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of a family of exact identities, one item per (name, index)."""

    items: tuple  # of (name, index, ok)
    notes: str = ""

    @property
    def ok(self) -> bool:
        return all(ok for _, _, ok in self.items)

    @property
    def first_failure(self):
        for name, idx, ok in self.items:
            if not ok:
                return (name, idx)
        return None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "items": [{"name": n, "index": i, "ok": ok} for n, i, ok in self.items],
            "notes": self.notes,
        }


def kernel_identity_check(gamma: GammaSeq, n: int,
                          kernel_gamma: GammaSeq | None = None) -> IdentityReport:
    """Verify x K_m = P_{m+1} + gamma_{2m+2} P_m and K_m = P_m - gamma_{2m+1} K_{m-1}.

    P is taken on the minimal branch (b_1 = gamma_2): that is the only
    convention under which the m = 0 case x = P_1 + gamma_2 closes, and the
    report records it.  Both identities hold for every admissible gamma, so
    a negative control must desynchronise one ingredient: ``kernel_gamma``
    feeds the kernel side from a different sequence.
    """
    base = system_from_gamma(gamma, minimal_branch=True)
    ker = kernel_system(kernel_gamma if kernel_gamma is not None else gamma)
    P = monic_sequence(base, n + 1)
    K = monic_sequence(ker, n)
    x = Polynomial.x()
    items = []
    for m in range(0, n + 1):
        lhs = x * K[m]
        rhs = P[m + 1] + P[m].scale(gamma.at(2 * m + 2))
        items.append(("x*K = P(+1) + gamma_even*P", m, lhs == rhs))
    for m in range(1, n + 1):
        lhs = K[m]
        rhs = P[m] - K[m - 1].scale(gamma.at(2 * m + 1))
        items.append(("K = P - gamma_odd*K(-1)", m, lhs == rhs))
    return IdentityReport(tuple(items), notes="minimal branch: leading parameter folded to zero")


# -- chain sequences from a system ------------------------------------------------


def chain_at(sys: ThreeTermSystem, t, N: int) -> ChainSequence:
    """omega_n(t) = a_n^2 / ((t - b_n)(t - b_{n+1})) for n = 1..N."""
    for n in range(1, N + 2):
        if t == sys.b_at(n):
            raise PoleAtB(n, f"t = {format_scalar(t)} equals b_{n}")
    vals = [
        sys.a2_at(n) / ((t - sys.b_at(n)) * (t - sys.b_at(n + 1)))
        for n in range(1, N + 1)
    ]
    return ChainSequence.from_values(vals)


def chain_at_via_polynomials(sys: ThreeTermSystem, t, N: int) -> ChainSequence:
    """The same d_n(t) through ratios of the monic polynomials at t.

    d_n(t) = P_n(t)/((t-b_n) P_{n-1}(t)) * [1 - P_{n+1}(t)/((t-b_{n+1}) P_n(t))];
    equality with ``chain_at`` is exact on the rational backend and serves as
    a cross-check of the recurrence itself.
    """
    if N == 0:
        return ChainSequence.from_values([])
    backend = "float" if isinstance(t, float) else "rational"
    P = monic_sequence(sys, N + 1, backend)
    pvals = [p(t) for p in P]
    vals = []
    for n in range(1, N + 1):
        tb_n, tb_n1 = t - sys.b_at(n), t - sys.b_at(n + 1)
        if pvals[n - 1] == 0 or pvals[n] == 0 or tb_n == 0 or tb_n1 == 0:
            raise ZeroDenominator(n, f"vanishing denominator at n = {n}")
        vals.append(pvals[n] / (tb_n * pvals[n - 1]) * (1 - pvals[n + 1] / (tb_n1 * pvals[n])))
    return ChainSequence.from_values(vals)


# -- complementary constructions ----------------------------------------------------


def complementary(m: ParameterSeq) -> ChainSequence:
    """Chain sequence with minimal parameters k_0 = 0, k_n = 1 - m_n.

    The input must itself be minimal (m_0 = 0).
    """
    if not m.minimal:
        raise NotMinimal("complementary construction needs minimal parameters (g_0 = 0)")
    zero = 0.0 if isinstance(m[0], float) else Rat(0)
    k = [zero] + [1 - m[n] for n in range(1, len(m))]
    params = ParameterSeq(tuple(k))
    vals = [(1 - k[n - 1]) * k[n] for n in range(1, len(k))]
    return ChainSequence.from_values(vals, parameters=params)


def generalised_complementary(g: ParameterSeq) -> ChainSequence:
    """Chain sequence with parameters k'_n = 1 - g_n.

    For a non-minimal g (g_0 > 0) this is the generalised complementary
    construction; at g_0 = 0 the leading parameter degenerates to k'_0 = 1,
    which is no parameter at all, so the complementary convention k'_0 = 0
    applies and the output coincides with ``complementary``.
    """
    if g.minimal:
        return complementary(g)
    k = [1 - g[n] for n in range(len(g))]
    params = ParameterSeq(tuple(k))
    vals = [(1 - k[n - 1]) * k[n] for n in range(1, len(k))]
    return ChainSequence.from_values(vals, parameters=params)


# -- window-qualified classification ---------------------------------------------------


@dataclass(frozen=True)
class WallVerdict:
    """Finite-window chain-sequence classification; only valid up to ``up_to``."""

    kind: str  # UniqueByWall | ComplementIsSPPCS | Inconclusive
    up_to: int
    witness: int | None = None

    def tag(self) -> str:
        w = f"(witness={self.witness})" if self.witness is not None else ""
        return f"{self.kind}{w} up to N={self.up_to}"

    def to_json(self) -> dict:
        return {"verdict": self.kind, "up_to": self.up_to, "witness": self.witness}


def wall_sppcs_test(m: ParameterSeq, N: int) -> WallVerdict:
    """Classify a chain sequence from its minimal parameters over a window.

    UniqueByWall: m_n < 1/2 and m_n/(1-m_n) > n/(n+1) strictly for all
    n <= N.  The cumulative products of m_n/(1-m_n) then dominate the
    divergent harmonic comparison series, which is the classical criterion
    for the parameters being unique.  ComplementIsSPPCS: 0 < m_n < 1/2 for
    all n <= N, under which the complementary chain sequence has a unique
    parameter sequence.  Anything else is Inconclusive with the first
    witness index.  All three are statements about the window only.
    """
    if N < 1:
        return WallVerdict("Inconclusive", N)
    half = Rat(1, 2) if not isinstance(m[min(1, len(m) - 1)], float) else 0.5
    unique = True
    for n in range(1, N + 1):
        mn = m[n]
        if not (0 < mn < half):
            return WallVerdict("Inconclusive", N, witness=n)
        if not mn * (n + 1) > (1 - mn) * n:  # m_n/(1-m_n) > n/(n+1)
            unique = False
    return WallVerdict("UniqueByWall" if unique else "ComplementIsSPPCS", N)


@dataclass(frozen=True)
class TrueIntervalVerdict:
    passed: bool
    up_to: int
    witness: str | None = None

    def tag(self) -> str:
        return f"PassUpTo({self.up_to})" if self.passed else f"Fail({self.witness})"

    def to_json(self) -> dict:
        return {"verdict": "PassUpTo" if self.passed else "Fail",
                "up_to": self.up_to, "witness": self.witness}


def true_interval_predicate(sys: ThreeTermSystem, a, b, N: int) -> TrueIntervalVerdict:
    """Window test that the true interval of orthogonality lies inside (a, b).

    Checks b_1..b_{N+1} in (a, b) and that the ratio sequences at both
    endpoints admit minimal parameters up to N.  Pass ``b = INFINITY``
    (None) for the one-sided interval (a, oo); the right-endpoint ratio
    check is then skipped.
    """
    for n in range(1, N + 2):
        bn = sys.b_at(n)
        if not (a < bn and (b is INFINITY or bn < b)):
            hi = "oo" if b is INFINITY else format_scalar(b)
            return TrueIntervalVerdict(
                False, N, witness=f"b_{n}={format_scalar(bn)} not in ({format_scalar(a)},{hi})")
    endpoints = [a] if b is INFINITY else [a, b]
    for t in endpoints:
        try:
            minimal_parameters(chain_at(sys, t, N), N)
        except (NotAChainSequence, PoleAtB) as exc:
            return TrueIntervalVerdict(
                False, N, witness=f"ratios at t={format_scalar(t)}: {exc}")
    return TrueIntervalVerdict(True, N)
