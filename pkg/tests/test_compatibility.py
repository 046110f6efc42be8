"""Compatibility verdict and case-analysis tests."""
import math
import random

import pytest

from truncbin import (
    PARITY_BOTH_ODD,
    PARITY_ONE_EVEN,
    BinomialPair,
    InconsistentCaseError,
    PreconditionError,
    TrinomialTriple,
    Verdict,
    VerdictKind,
    binomial_equation_verdict,
    case_A_verdict,
    case_B_consistency_check,
    case_B_exponents,
    classify_divisibility_case,
    necessary_conditions_2,
    truncated2_direct,
)


def sample_case_a_triple(rng, n, bound=10**5):
    while True:
        a = rng.randint(-bound, bound)
        b = rng.randint(-bound, bound)
        c = 2 * n * rng.randint(-bound // (2 * n), bound // (2 * n)) - a - b
        if a % n == 0 or b % n == 0 or c % n == 0:
            continue
        if math.gcd(a, b, c) != 1:
            continue
        if sum(1 for x in (a, b, c) if x % 2 == 0) != 1:
            continue
        return TrinomialTriple(a, b, c, n)


# ---------------------------------------------------------------------------
# two-term equation verdict

def test_eq2_trivial_case():
    v = binomial_equation_verdict(BinomialPair(3, -3, 5))
    assert v.kind is VerdictKind.TRIVIAL_ONLY
    assert v.evidence["residual"] == 0


def test_eq2_incompatible_examples():
    v = binomial_equation_verdict(BinomialPair(1, 1, 3))
    assert v.kind is VerdictKind.INCOMPATIBLE
    assert v.evidence["residual"] == 2
    v = binomial_equation_verdict(BinomialPair(2, 4, 7))
    assert v.evidence["residual"] == 2**7 + 4**7 == 16512


def test_eq2_soundness_random():
    rng = random.Random("eq2")
    for _ in range(300):
        n = rng.choice((3, 5, 7))
        a = rng.randint(-1000, 1000)
        b = -a if rng.random() < 0.2 else rng.randint(-1000, 1000)
        v = binomial_equation_verdict(BinomialPair(a, b, n))
        assert (v.kind is VerdictKind.TRIVIAL_ONLY) == (a + b == 0)
        # residual identity: the gap between the two sides is a^n + b^n
        u = truncated2_direct(BinomialPair(a, b, n))
        assert (a + b) ** n - u == a**n + b**n == v.evidence["residual"]


def test_incompatible_verdict_requires_evidence():
    with pytest.raises(ValueError):
        Verdict(kind=VerdictKind.INCOMPATIBLE, reason="x", evidence={})


# ---------------------------------------------------------------------------
# necessary conditions

def test_conditions_examples():
    r = necessary_conditions_2(BinomialPair(5, 1, 3))
    assert r.coprime_after_normalization
    assert r.parity_class == PARITY_BOTH_ODD
    assert r.q_div_2n and r.beta == 1

    r = necessary_conditions_2(BinomialPair(1, 2, 3))
    assert r.coprime_after_normalization
    assert r.parity_class == PARITY_ONE_EVEN
    assert not r.q_div_2n and r.beta is None

    r = necessary_conditions_2(BinomialPair(7, -1, 3))
    assert r.parity_class == PARITY_BOTH_ODD
    assert r.q_div_2n and r.beta == 1


def test_conditions_normalize_first():
    # (10, 2) reduces to (5, 1): both odd afterwards, beta from the
    # reduced sum, and the report notes the pair was not coprime.
    r = necessary_conditions_2(BinomialPair(10, 2, 3))
    assert not r.coprime_after_normalization
    assert r.parity_class == PARITY_BOTH_ODD
    assert r.q_div_2n and r.beta == 1


def test_conditions_reject_zero_pair():
    with pytest.raises(PreconditionError):
        necessary_conditions_2(BinomialPair(0, 0, 3))


# ---------------------------------------------------------------------------
# case classification

def test_classify_examples():
    assert classify_divisibility_case(TrinomialTriple(1, 1, 4, 3)).kind == "A"
    cls = classify_divisibility_case(TrinomialTriple(1, 4, 9, 3))
    assert (cls.kind, cls.variable, cls.rho) == ("B", "c", 2)
    with pytest.raises(InconsistentCaseError):
        classify_divisibility_case(TrinomialTriple(3, 6, 1, 3))


def test_classify_requires_coprime_input():
    with pytest.raises(PreconditionError):
        classify_divisibility_case(TrinomialTriple(2, 4, 6, 3))


# ---------------------------------------------------------------------------
# Case A

def test_case_a_verdict_n3_example():
    v = case_A_verdict(TrinomialTriple(1, 1, 4, 3))
    assert v.kind is VerdictKind.INCOMPATIBLE
    assert v.evidence["rule_tier"] is VerdictKind.INCOMPATIBLE
    assert v.evidence["v_u_ab"].exponent == 1


def test_case_a_verdict_n7_exact_tier_decides():
    # v_7(U(1,2)) = 3 keeps the rule tier silent; the exact tier compares
    # v_7 of the sum (= 2) with the left side (= 7) and decides.
    v = case_A_verdict(TrinomialTriple(1, 2, 11, 7))
    assert v.kind is VerdictKind.INCOMPATIBLE
    assert v.evidence["rule_tier"] is VerdictKind.UNDETERMINED
    assert v.evidence["exact_tier"] is VerdictKind.INCOMPATIBLE
    assert v.evidence["v_u_ab"].exponent == 3
    assert v.evidence["v_u_qc"].exponent == 2
    assert v.evidence["v_sum"].exponent == 2
    assert v.evidence["lhs_valuation"] == 7


def test_case_a_verdict_rejects_case_b_input():
    # 3 divides b here, so the Case-A analysis must refuse the triple.
    with pytest.raises(PreconditionError, match="divides"):
        case_A_verdict(TrinomialTriple(1, 3, 2, 3))


def test_case_a_verdict_rejects_bad_sum():
    with pytest.raises(PreconditionError, match="2n"):
        case_A_verdict(TrinomialTriple(1, 1, 2, 3))


def test_case_a_rule_monotonicity():
    # Whenever the rule tier decides, the exact tier agrees.
    rng = random.Random("monotone")
    for n in (3, 5, 7):
        for _ in range(60):
            v = case_A_verdict(sample_case_a_triple(rng, n))
            if v.evidence["rule_tier"] is VerdictKind.INCOMPATIBLE:
                assert v.evidence["exact_tier"] is VerdictKind.INCOMPATIBLE


# ---------------------------------------------------------------------------
# Case B

def test_case_b_exponents_examples():
    p = case_B_exponents(1, 5)
    assert (p.rho_c, p.rho_beta, p.rho_q) == (1, 0, 4)
    p = case_B_exponents(2, 3)
    assert (p.rho_c, p.rho_beta, p.rho_q) == (2, 1, 5)
    with pytest.raises(PreconditionError):
        case_B_exponents(0, 7)


def test_case_b_exponents_satisfy_relations():
    for n in (3, 5, 7, 11):
        for rho_c in range(1, 51):
            p = case_B_exponents(rho_c, n)
            assert p.rho_beta == rho_c - 1
            assert p.rho_q == n * rho_c - 1


def test_case_b_consistency_mismatch_example():
    # q = 81 = 3^4 but the algebra wants rho_q = 3*4 - 1 = 11: mismatch,
    # while rho_beta and both U-valuations land exactly where predicted.
    r = case_B_consistency_check(TrinomialTriple(1, 80, 81, 3))
    assert r.rho_c == 4 and r.c0 == 1
    assert r.rho_q == 4 and r.q0 == 1
    assert r.expected.rho_q == 11
    assert not r.rho_q_matches
    assert r.rho_beta == 3 and r.rho_beta_matches
    assert r.u_ab_valuation == 5 and r.u_ab_matches
    assert r.u_qc_valuation == 13 and r.u_qc_matches


def test_case_b_consistency_fully_consistent_triple():
    # Found by small search: rho_c = 1, q = 9 = 3^2 as the algebra wants.
    r = case_B_consistency_check(TrinomialTriple(4, 5, 3, 3))
    assert r.rho_c == 1
    assert r.rho_q == 2 and r.rho_q_matches
    assert r.rho_beta == 0 and r.rho_beta_matches
    assert r.u_ab_valuation == 3 and r.u_ab_matches
    assert r.u_qc_valuation == 5 and r.u_qc_matches


def test_case_b_consistency_relabels_divisible_variable():
    reference = case_B_consistency_check(TrinomialTriple(1, 80, 81, 3))
    moved = case_B_consistency_check(TrinomialTriple(81, 1, 80, 3))
    assert (moved.a, moved.b, moved.c) == (reference.a, reference.b, reference.c)
    assert moved == reference


def test_case_b_consistency_rejects_case_a_input():
    with pytest.raises(PreconditionError):
        case_B_consistency_check(TrinomialTriple(1, 1, 4, 3))
