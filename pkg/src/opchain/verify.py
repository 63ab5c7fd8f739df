"""Named verification suites behind the ``verify`` command.

Each suite re-derives a family of exact identities over closed-form
families and seeded random gamma sequences and reports one line per
identity.  Randomness is a seeded generator producing uniform rationals
with denominators up to 64; every drawn sequence is recorded in the report
so a failure can be replayed.  The ``corrupt`` hook feeds deliberately
inconsistent inputs through the same checks, proving each suite can fail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import perturb
from .chains import (
    GammaSeq,
    chain_at,
    gamma_from_system,
    generalised_complementary,
    kernel_system,
    minimal_parameters,
    parameters_from_gamma,
    system_from_gamma,
)
from .families import e_family_system, laguerre_gamma, laguerre_system, RRParams, rr_system
from .jacobi import darboux_pivot_check, lu_factor, truncate, ul_product
from .poly import even_part
from .scalars import Rat, format_scalar
from .systems import (
    convergent,
    laurent_expand,
    moments,
    monic_sequence,
    symmetric_sequence,
    systems_agree,
)

SUITES = ("theorem33", "gccs", "kernel_invariance", "quasi_orth",
          "lu", "laguerre", "moments", "all")


@dataclass(frozen=True)
class IdentityResult:
    name: str
    n_range: str
    status: str               # pass | fail
    witness: str | None = None

    def to_json(self) -> dict:
        return {"name": self.name, "n_range": self.n_range,
                "status": self.status, "witness": self.witness}


@dataclass
class SuiteReport:
    suite: str
    seed: int
    samples: int
    identities: list = field(default_factory=list)
    gamma_samples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status == "pass" for r in self.identities)

    def add(self, name: str, n_range: str, ok: bool, witness=None):
        self.identities.append(IdentityResult(
            name, n_range, "pass" if ok else "fail",
            None if ok else (witness if witness is None or isinstance(witness, str)
                             else str(witness))))

    def record_gamma(self, gamma: GammaSeq, upto: int):
        self.gamma_samples.append([format_scalar(v) for v in gamma.window(1, upto)])

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "samples": self.samples,
            "ok": self.ok,
            "identities": [r.to_json() for r in self.identities],
            "gamma_samples": self.gamma_samples,
        }


def random_gamma(rng: random.Random, length: int, gamma1_positive: bool = True) -> GammaSeq:
    """Uniform rationals with denominators <= 64, values in (0, 4]."""
    vals = []
    for k in range(1, length + 1):
        q = rng.randint(1, 64)
        p = rng.randint(1, 4 * q)
        vals.append(Rat(p, q))
    if not gamma1_positive:
        vals[0] = Rat(0)
    return GammaSeq.from_values(vals)


def _bumped(gamma: GammaSeq, index: int, upto: int) -> GammaSeq:
    vals = gamma.window(1, upto)
    vals[index - 1] = vals[index - 1] + 1
    return GammaSeq.from_values(vals)


_LAGUERRE_ALPHAS = (Rat(-1, 2), Rat(0), Rat(1), Rat(7, 3))


def suite_theorem33(seed=0, samples=25, n=15, corrupt=False) -> SuiteReport:
    """Even/odd split of the pairwise-swapped symmetric family."""
    rep = SuiteReport("theorem33", seed, samples)
    rng = random.Random(seed)
    need = 2 * n + 4
    for s in range(samples):
        gamma = random_gamma(rng, need)
        rep.record_gamma(gamma, need)
        if corrupt:
            # negative control: compare the split of the original symmetric
            # family against the tilde family of a corrupted gamma
            S = symmetric_sequence(perturb.swapped_nu(gamma, n + 1), 2 * n)
            P = monic_sequence(perturb.tilde_system(_bumped(gamma, 4, need)), n)
            bad = next((m for m in range(n + 1) if even_part(S[2 * m]) != P[m]), None)
            rep.add("even/odd split equals perturbed families",
                    f"sample {s}, n<={n}", bad is None, bad)
        else:
            report = perturb.swap_split_check(gamma, n)
            rep.add("even/odd split equals perturbed families",
                    f"sample {s}, n<={n}", report.ok, report.first_failure)
    return rep


def suite_gccs(seed=0, samples=25, n=30, corrupt=False) -> SuiteReport:
    """Generalised complementary parameters and the shifted closed form."""
    rep = SuiteReport("gccs", seed, samples)
    rng = random.Random(seed)
    need = 2 * n + 4
    for s in range(samples):
        gamma = random_gamma(rng, need)
        rep.record_gamma(gamma, need)
        g = parameters_from_gamma(gamma, n)
        gcc = generalised_complementary(g)
        kprime = gcc.parameters
        rep.add("k'_n = 1 - g_n", f"sample {s}, n<={n}",
                all(kprime[j] == 1 - g[j] for j in range(n + 1)))
        src = _bumped(gamma, 4, need) if corrupt else gamma
        hat_chain = chain_at(perturb.hat_system(src), 0, n)
        same = all(hat_chain.at(j) == gcc.at(j) for j in range(1, n + 1))
        rep.add("hat-system ratios equal the GCC chain", f"sample {s}, n<={n}", same)
        if not corrupt:
            closed = all(
                gcc.at(j) == gamma.at(2 * j - 1) * gamma.at(2 * j + 2)
                / ((gamma.at(2 * j - 1) + gamma.at(2 * j)) * (gamma.at(2 * j + 1) + gamma.at(2 * j + 2)))
                for j in range(1, n + 1))
            rep.add("GCC chain closed form", f"sample {s}, n<={n}", closed)
    for alpha in (Rat(0), Rat(1, 2)):
        ghat = laguerre_gamma(alpha, 1)
        hat = perturb.hat_system(ghat)
        shifted = laguerre_system(alpha + 1)
        P_hat = monic_sequence(hat, 20)
        P_ref = monic_sequence(shifted, 20)
        rep.add(f"hat family (alpha={format_scalar(alpha)}) is the shifted family",
                "n<=20", all(P_hat[m] == P_ref[m] for m in range(21)))
    return rep


def suite_kernel_invariance(seed=0, samples=10, n=30, corrupt=False) -> SuiteReport:
    """Matching increments leave the kernel recurrence coefficients fixed."""
    rep = SuiteReport("kernel_invariance", seed, samples)
    rng = random.Random(seed)
    for alpha in (Rat(0), Rat(7, 3)):
        for g1 in (0, 1):
            gamma = laguerre_gamma(alpha, g1)
            ok = (perturb.kernel_invariance_condition(gamma, n)
                  and systems_agree(perturb.tilde_kernel_system(gamma),
                                    kernel_system(gamma), n))
            rep.add(f"laguerre gamma (alpha={format_scalar(alpha)}, g1={g1}) invariant",
                    f"n<={n}", ok)
    need = 2 * n + 6
    for s in range(samples):
        a = Rat(rng.randint(1, 64), rng.randint(1, 16))
        c = Rat(rng.randint(1, 64), rng.randint(1, 16))
        d = Rat(rng.randint(1, 32), rng.randint(1, 16))
        vals = []
        for k in range(1, need + 1):
            j = (k - 1) // 2  # arithmetic progressions with a common difference
            vals.append((a if k % 2 else c) + j * d)
        gamma = GammaSeq.from_values(vals)
        rep.record_gamma(gamma, need)
        src = _bumped(gamma, 6, need) if corrupt else gamma
        cond = perturb.kernel_invariance_condition(src, n)
        agree = systems_agree(perturb.tilde_kernel_system(src), kernel_system(src), n)
        rep.add("progression gamma invariant", f"sample {s}, n<={n}", cond and agree)
    return rep


def suite_quasi_orth(seed=0, samples=25, n=10, corrupt=False) -> SuiteReport:
    """Order-2 quasi-orthogonal combination collapses onto three base terms."""
    rep = SuiteReport("quasi_orth", seed, samples)
    rng = random.Random(seed)
    need = 2 * n + 6
    for s in range(samples):
        gamma = random_gamma(rng, need)
        rep.record_gamma(gamma, need)
        if corrupt:
            src = _bumped(gamma, 2 * n + 2, need)
            lhs, _ = perturb.quasi_sides(gamma, gamma, n)
            _, rhs = perturb.quasi_sides(src, src, n)
            rep.add("quasi-orthogonality identity", f"sample {s}, n={n}",
                    (lhs - rhs).is_zero(), "corrupted coefficient")
        else:
            bad = None
            for m in range(1, n + 1):
                r = perturb.quasi_orthogonality_check(gamma, m)
                if not r.ok:
                    bad = m
                    break
            rep.add("quasi-orthogonality identity", f"sample {s}, n<={n}", bad is None, bad)
    return rep


_LU_FAMILIES = (
    ("laguerre alpha=0", lambda: laguerre_system(Rat(0)), 25),
    ("laguerre alpha=1", lambda: laguerre_system(Rat(1)), 25),
    ("laguerre alpha=7/3", lambda: laguerre_system(Rat(7, 3)), 25),
    ("e_family alpha=0", lambda: e_family_system(Rat(0)), 25),
    ("e_family alpha=1/2", lambda: e_family_system(Rat(1, 2)), 25),
    # finite family: gamma recovery to depth n needs b_{n+1}, capping n at 3
    ("routh_romanovski p=10", lambda: rr_system(RRParams(10)), 3),
)


def suite_lu(seed=0, samples=0, n=25, corrupt=False) -> SuiteReport:
    """LU multiply-back, pivot identification, and the reversed product."""
    rep = SuiteReport("lu", seed, samples)
    for name, make, n_cap in _LU_FAMILIES:
        sys = make()
        size = min(n, n_cap)
        J = truncate(sys, size)
        f = lu_factor(J, Rat(0))
        if corrupt:
            bad = type(f)(f.l_sub, (f.u_diag[0] + 1,) + f.u_diag[1:], f.gamma1)
            rep.add(f"{name}: L.U = J", f"n={size}",
                    bad.reconstruct() == J, "corrupted pivot")
            continue
        rep.add(f"{name}: L.U = J", f"n={size}", f.reconstruct() == J and f.product() == J)
        rep.add(f"{name}: pivots are the even-index gammas", f"n={size}",
                darboux_pivot_check(sys, Rat(0), size))
        gamma = gamma_from_system(sys, Rat(0), size)
        ul = ul_product(f)
        K = truncate(kernel_system(gamma), size)
        inner = (ul.diag[:-1] == K.diag[:-1] and ul.sub == K.sub)
        boundary = (ul.diag[-1] == gamma.at(2 * size)
                    and K.diag[-1] == gamma.at(2 * size) + gamma.at(2 * size + 1))
        rep.add(f"{name}: U.L matches the kernel matrix off the boundary",
                f"n={size}", inner and boundary)
    return rep


def suite_laguerre(seed=0, samples=0, n=50, corrupt=False) -> SuiteReport:
    """Closed-form gamma recovery, minimal parameters, and the kernel shift."""
    rep = SuiteReport("laguerre", seed, samples)
    for alpha in _LAGUERRE_ALPHAS:
        sys = laguerre_system(alpha)
        shift = Rat(1, 7) if corrupt else Rat(0)
        recovered = gamma_from_system(sys, Rat(0), n)
        closed = laguerre_gamma(alpha + shift, 0)
        ok_gamma = (recovered.at(1) == 0 and all(
            recovered.at(2 * m) == closed.at(2 * m)
            and recovered.at(2 * m + 1) == closed.at(2 * m + 1)
            for m in range(1, n + 1)))
        label = f"alpha={format_scalar(alpha)}"
        rep.add(f"{label}: gamma recovery matches closed form", f"n<={n}", ok_gamma,
                "shifted closed form" if corrupt else None)
        if corrupt:
            continue
        m = minimal_parameters(chain_at(sys, Rat(0), n), n)
        rep.add(f"{label}: minimal parameters n/(2n+alpha+1)", f"n<={n}",
                all(m[k] == Rat(k) / (2 * k + alpha + 1) for k in range(n + 1)))
        rep.add(f"{label}: kernel system is the alpha+1 family", f"n<={n}",
                systems_agree(kernel_system(closed), laguerre_system(alpha + 1), n))
    return rep


_MOMENT_SYSTEMS = (
    ("laguerre alpha=0", lambda: laguerre_system(Rat(0))),
    ("laguerre alpha=1", lambda: laguerre_system(Rat(1))),
    ("e_family alpha=0", lambda: e_family_system(Rat(0))),
    ("gamma 1,2,3,...", lambda: system_from_gamma(
        GammaSeq.from_fn(lambda k: Rat(k)))),
)


def suite_moments(seed=0, samples=0, n=8, corrupt=False) -> SuiteReport:
    """Convergent expansions match matrix-power moments; factorial oracle."""
    rep = SuiteReport("moments", seed, samples)
    for name, make in _MOMENT_SYSTEMS:
        sys = make()
        ok = True
        witness = None
        for m in range(1, n + 1):
            mu = [moments(sys, k) for k in range(2 * m)]
            if corrupt:
                mu[-1] = mu[-1] + 1
            num, den = convergent(sys, m)
            series = laurent_expand(num, den, 2 * m)
            if list(series.coeffs) != mu:
                ok = False
                witness = f"n={m}"
                break
        rep.add(f"{name}: convergent matches first 2n moments", f"n<={n}", ok,
                witness or ("corrupted moment" if corrupt else None))
    if not corrupt:
        fact = Rat(1)
        ok = True
        for k in range(11):
            if k:
                fact = fact * k
            if moments(laguerre_system(Rat(0)), k) != fact:
                ok = False
                break
        rep.add("laguerre alpha=0 moments are k!", "k<=10", ok)
    return rep


_SUITE_FNS = {
    "theorem33": suite_theorem33,
    "gccs": suite_gccs,
    "kernel_invariance": suite_kernel_invariance,
    "quasi_orth": suite_quasi_orth,
    "lu": suite_lu,
    "laguerre": suite_laguerre,
    "moments": suite_moments,
}


def run_suite(name: str, seed: int = 0, samples: int | None = None,
              n: int | None = None, corrupt: bool = False) -> list[SuiteReport]:
    """Run one named suite (or 'all'); returns one report per suite."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    names = [s for s in SUITES if s != "all"] if name == "all" else [name]
    reports = []
    for nm in names:
        fn = _SUITE_FNS[nm]
        kw = {"seed": seed, "corrupt": corrupt}
        if samples is not None:
            kw["samples"] = samples
        if n is not None:
            kw["n"] = n
        reports.append(fn(**kw))
    return reports
