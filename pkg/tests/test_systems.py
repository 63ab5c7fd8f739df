import random

import pytest

from opchain import (
    GammaSeq,
    Polynomial,
    Rat,
    SymmetricSystem,
    ThreeTermSystem,
    associated_eval,
    convergent,
    even_part,
    kernel_identity_check,
    kernel_system,
    laguerre_system,
    laurent_expand,
    moments,
    monic_eval,
    monic_sequence,
    odd_part,
    symmetric_eval,
    symmetric_sequence,
    system_from_gamma,
    systems_agree,
)
from opchain.errors import DegreeViolation, NonPositiveGamma, StreamExhausted
from opchain.verify import random_gamma


def P(*coeffs):
    return Polynomial(coeffs)


LAG0 = laguerre_system(0)


# -- monic recurrence -------------------------------------------------------

def test_monic_initial_condition():
    assert monic_eval(LAG0, 0) == P(1)


def test_monic_degree_one():
    assert monic_eval(LAG0, 1) == P(-1, 1)


def test_monic_degree_two():
    # (x-3)(x-1) - 1*1
    assert monic_eval(LAG0, 2) == P(2, -4, 1)


def test_monic_sequence_is_monic_of_full_degree():
    rng = random.Random(3)
    for _ in range(5):
        sys = system_from_gamma(random_gamma(rng, 25))
        for n, p in enumerate(monic_sequence(sys, 10)):
            assert p.degree == n and p.is_monic()


# -- second solution -------------------------------------------------------------

def test_associated_initial():
    assert associated_eval(LAG0, 1) == P(1)


def test_associated_degree_two():
    assert associated_eval(LAG0, 2) == P(-3, 1)


def test_associated_degree_three():
    # (x-5)(x-3) - 4
    assert associated_eval(LAG0, 3) == P(11, -8, 1)


def test_associated_monic_one_degree_down():
    rng = random.Random(4)
    sys = system_from_gamma(random_gamma(rng, 25))
    from opchain import associated_sequence
    for n, z in enumerate(associated_sequence(sys, 10)):
        if n == 0:
            assert z.is_zero()
        else:
            assert z.degree == n - 1 and z.is_monic()


# -- symmetric recurrence ------------------------------------------------------------

def test_symmetric_swapped_worked_case():
    sym = SymmetricSystem.from_values([2, 1, 4, 3])
    assert symmetric_eval(sym, 2) == P(-1, 0, 1)
    assert symmetric_eval(sym, 3) == P(0, -5, 0, 1)
    assert symmetric_eval(sym, 4) == P(3, 0, -8, 0, 1)


def test_symmetric_first_coefficient_inert():
    # nu_1 multiplies S_{-1} = 0
    assert symmetric_eval(SymmetricSystem.from_values([99]), 1) == P(0, 1)
    assert symmetric_eval(SymmetricSystem.from_values([99]), 0) == P(1)


def test_symmetric_split_with_zero_leading_gamma():
    # S built from nu = gamma splits into the base and kernel families
    rng = random.Random(11)
    for _ in range(5):
        gamma = random_gamma(rng, 26, gamma1_positive=False)
        S = symmetric_sequence(SymmetricSystem(gamma.gamma), 11)
        Pseq = monic_sequence(system_from_gamma(gamma), 5)
        K = monic_sequence(kernel_system(gamma), 5)
        for n in range(6):
            assert even_part(S[2 * n]) == Pseq[n]
            if 2 * n + 1 <= 11:
                assert odd_part(S[2 * n + 1]) == K[n]


# -- kernel system --------------------------------------------------------------------

def test_kernel_of_laguerre_is_shifted():
    from opchain import laguerre_gamma
    for alpha in (0, 1):
        gamma = laguerre_gamma(alpha, 0)
        assert systems_agree(kernel_system(gamma), laguerre_system(alpha + 1), 20)


def test_kernel_small_case():
    g = GammaSeq.from_values([1, 2, 3, 4, 5, 6])
    k = kernel_system(g)
    assert k.b_at(1) == 5
    assert k.a2_at(1) == 12
    assert k.b_at(2) == 9


def test_kernel_rejects_nonpositive_gamma():
    g = GammaSeq.from_values([1, 2, 0, 4, 5, 6])
    with pytest.raises(NonPositiveGamma):
        kernel_system(g).b_at(1)


def test_kernel_identities_laguerre():
    from opchain import laguerre_gamma
    rep = kernel_identity_check(laguerre_gamma(0, 0), 6)
    assert rep.ok
    assert "minimal branch" in rep.notes


def test_kernel_identity_smallest_case():
    # x * K_0 = P_1 + gamma_2 * P_0 needs the minimal branch b_1 = gamma_2
    g = GammaSeq.from_values([Rat(1, 2), 2, 3, 4])
    rep = kernel_identity_check(g, 0)
    assert rep.ok


def test_kernel_identities_random_and_corrupted():
    rng = random.Random(8)
    for _ in range(3):
        assert kernel_identity_check(random_gamma(rng, 46), 20).ok
    gamma = random_gamma(rng, 46)
    vals = gamma.window(1, 46)
    vals[3] = vals[3] + 1  # corrupt gamma_4 on the kernel side only
    bad = kernel_identity_check(gamma, 20, kernel_gamma=GammaSeq.from_values(vals))
    assert not bad.ok
    name, idx = bad.first_failure
    assert idx == 2  # gamma_4 first enters the kernel recurrence at degree 2


# -- moments -----------------------------------------------------------------------------

def test_moments_factorial_oracle():
    # integral of x^k e^-x over [0, oo) is k!
    fact = 1
    for k in range(8):
        if k:
            fact *= k
        assert moments(LAG0, k) == fact


def test_moment_zero_is_normalised():
    rng = random.Random(5)
    sys = system_from_gamma(random_gamma(rng, 10))
    assert moments(sys, 0) == 1


# -- convergents and expansion at infinity -------------------------------------------------

def test_convergent_first():
    num, den = convergent(LAG0, 1)
    assert num == P(1) and den == P(-1, 1)


def test_convergent_second():
    num, den = convergent(LAG0, 2)
    assert num == P(-3, 1) and den == P(2, -4, 1)


def test_convergent_zeroth():
    num, den = convergent(LAG0, 0)
    assert num.is_zero() and den == P(1)


def test_laurent_geometric_series():
    series = laurent_expand(P(1), P(-1, 1), 3)
    assert series.coeffs == (1, 1, 1)
    assert series.order == 3


def test_laurent_zero_numerator():
    assert laurent_expand(Polynomial.zero(), P(0, 1), 5).coeffs == (0,) * 5


def test_laurent_matches_factorials():
    num, den = convergent(LAG0, 2)
    assert laurent_expand(num, den, 4).coeffs == (1, 1, 2, 6)


def test_laurent_requires_proper_ratio():
    with pytest.raises(DegreeViolation):
        laurent_expand(P(0, 1), P(0, 1), 3)
    with pytest.raises(DegreeViolation):
        laurent_expand(P(1), P(2, 2), 3)  # not monic


def test_moment_matching_through_order_2n():
    rng = random.Random(6)
    for sys in (LAG0, system_from_gamma(random_gamma(rng, 25))):
        for n in range(1, 11):
            num, den = convergent(sys, n)
            series = laurent_expand(num, den, 2 * n)
            assert list(series.coeffs) == [moments(sys, k) for k in range(2 * n)]


# -- stream discipline ----------------------------------------------------------------------

def test_finite_stream_never_extends_silently():
    sys = ThreeTermSystem.from_values([1, 3], [1])
    assert monic_eval(sys, 2) == P(2, -4, 1)
    with pytest.raises(StreamExhausted):
        monic_eval(sys, 3)
