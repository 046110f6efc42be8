"""Decision procedures for equations built on truncated binomials.

Two equations are analyzed.  The two-integer equation

    (a + b)**n = U(a, b)

misses by exactly a**n + b**n, so it only holds in the trivial a = -b
case; binomial_equation_verdict settles it outright.  The three-integer
equation

    (a + b + c)**n = U(a, b) + U(a + b, c)

is attacked through divisibility by the exponent n.  After removing the
gcd the variables split into two cases: n divides none of them (Case A)
or exactly one (Case B).  Case A carries an incompatibility rule driven
by the n-adic valuation of U(a, b); Case B carries exponent bookkeeping
relating the n-adic valuations of c, q = a + b and beta = (a+b+c)/(2n).

Verdicts are reported in two tiers.  The rule tier applies only the
stated criterion (U(a, b) divisible by n**k with k < 2 forces
incompatibility).  The exact tier computes every valuation outright and
compares the two sides directly, so it can decide instances the rule
tier leaves open.  Both tiers ride along in the verdict evidence.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

from .binomial_core import (
    BinomialPair,
    TrinomialTriple,
    gcd_normalize,
    is_prime,
    truncated2_direct,
)
from .errors import DomainError, InconsistentCaseError, PreconditionError
from .valuation import padic_valuation

PARITY_BOTH_ODD = "both-odd"
PARITY_ONE_EVEN = "one-even"
PARITY_OTHER = "other"


class VerdictKind(enum.Enum):
    INCOMPATIBLE = "Incompatible"
    UNDETERMINED = "Undetermined"
    TRIVIAL_ONLY = "TrivialOnly"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a compatibility check plus the values that drove it."""

    kind: VerdictKind
    reason: str
    evidence: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind is VerdictKind.INCOMPATIBLE and not self.evidence:
            raise ValueError("an Incompatible verdict must carry evidence")


@dataclass(frozen=True)
class ConditionReport:
    """Necessary conditions for the two-integer equation.

    Parity and divisibility are evaluated on the gcd-normalized pair;
    coprime_after_normalization records whether the input already had
    gcd 1.  beta is present exactly when 2n divides the normalized sum.
    """

    coprime_after_normalization: bool
    parity_class: str
    q_div_2n: bool
    beta: Optional[int] = None

    def __post_init__(self):
        if self.q_div_2n != (self.beta is not None):
            raise ValueError("beta must be present exactly when q_div_2n holds")


@dataclass(frozen=True)
class ExponentProfile:
    """The exponent triple (rho_c, rho_beta, rho_q) of Case B."""

    rho_c: int
    rho_beta: int
    rho_q: int


@dataclass(frozen=True)
class CaseClassification:
    kind: str  # "A" or "B"
    variable: Optional[str] = None  # which of a, b, c the exponent divides
    rho: Optional[int] = None  # its exact valuation

    def __str__(self):
        if self.kind == "A":
            return "CaseA"
        return f"CaseB({self.variable}, rho={self.rho})"


@dataclass(frozen=True)
class CaseBReport:
    """Observed Case-B decomposition versus the predicted exponent algebra.

    The triple is relabeled so the divisible variable sits in position c
    (the equation is symmetric, so nothing is lost).  c0, q0, beta0 are
    the cofactors of c, q = a + b and beta once the n-power is pulled
    out; rho_q or rho_beta is INFINITE when the quantity vanishes.
    """

    a: int
    b: int
    c: int
    n: int
    rho_c: int
    c0: int
    rho_q: int | float
    q0: int
    rho_beta: int | float
    beta0: int
    expected: ExponentProfile
    rho_q_matches: bool
    rho_beta_matches: bool
    u_ab_valuation: int | float
    u_ab_expected: int | float
    u_ab_matches: bool
    u_qc_valuation: int | float
    u_qc_expected: int | float
    u_qc_matches: bool


def binomial_equation_verdict(p: BinomialPair) -> Verdict:
    """Decide (a + b)**n = U(a, b).

    The two sides differ by the residual r = a**n + b**n, which vanishes
    only when a = -b (n is odd), so the verdict is TrivialOnly in that
    case and Incompatible otherwise.
    """
    residual = p.a**p.n + p.b**p.n
    if residual == 0:
        return Verdict(
            kind=VerdictKind.TRIVIAL_ONLY,
            reason="residual-zero:a-equals-minus-b",
            evidence={"residual": residual},
        )
    return Verdict(
        kind=VerdictKind.INCOMPATIBLE,
        reason="residual-nonzero",
        evidence={"residual": residual},
    )


def necessary_conditions_2(p: BinomialPair) -> ConditionReport:
    """Parity, coprimality and 2n-divisibility checks for a pair.

    The pair is gcd-normalized first; the equation is insensitive to the
    common factor and the parity argument needs coprime values.
    """
    if p.a == 0 and p.b == 0:
        raise PreconditionError("conditions undefined for the zero pair")
    (a, b), g = gcd_normalize([p.a, p.b])

    if a % 2 != 0 and b % 2 != 0:
        parity = PARITY_BOTH_ODD
    elif (a % 2 == 0) != (b % 2 == 0):
        parity = PARITY_ONE_EVEN
    else:
        parity = PARITY_OTHER

    q = a + b
    divisible = q % (2 * p.n) == 0
    return ConditionReport(
        coprime_after_normalization=(g == 1),
        parity_class=parity,
        q_div_2n=divisible,
        beta=q // (2 * p.n) if divisible else None,
    )


def classify_divisibility_case(t: TrinomialTriple) -> CaseClassification:
    """Sort a coprime triple by how the exponent divides its variables.

    Case A: n divides none of a, b, c.  Case B: n divides exactly one,
    reported with its exact valuation.  Two or more divisible variables
    contradict coprimality-with-the-equation and raise.
    """
    if math.gcd(t.a, t.b, t.c) != 1:
        raise PreconditionError(
            f"triple must be coprime (normalize first); gcd = {math.gcd(t.a, t.b, t.c)}"
        )
    divisible = [
        (name, value)
        for name, value in (("a", t.a), ("b", t.b), ("c", t.c))
        if value % t.n == 0
    ]
    if not divisible:
        return CaseClassification(kind="A")
    if len(divisible) > 1:
        names = ", ".join(name for name, _ in divisible)
        raise InconsistentCaseError(
            f"{t.n} divides {names}; a coprime solution triple admits at most one"
        )
    name, value = divisible[0]
    return CaseClassification(
        kind="B", variable=name, rho=padic_valuation(value, t.n).exponent
    )


def case_A_verdict(t: TrinomialTriple) -> Verdict:
    """Incompatibility check for Case A triples.

    Preconditions: the triple is coprime with none of a, b, c divisible
    by n, the sum a+b+c is divisible by 2n, and exactly one of the three
    is even.  Violations raise PreconditionError naming the condition.

    Rule tier: if v_n(U(a, b)) < 2 the right side is divisible by n only
    to the first power while the left side (2*beta*n)**n carries at least
    n of them, so the equation is incompatible; otherwise the rule is
    silent (Undetermined).

    Exact tier: computes v1 = v_n(U(a, b)), v2 = v_n(U(a+b, c)) and
    v_sum = v_n of their sum, and compares v_sum against the left-side
    valuation n * (1 + v_n(beta)) (beta may itself carry powers of n).
    Incompatible whenever v_sum falls short.  This tier decides instances
    the rule tier leaves open and is labeled separately in the evidence
    so the two are distinguishable.
    """
    classification = classify_divisibility_case(t)
    if classification.kind != "A":
        raise PreconditionError(
            f"case-a: exponent {t.n} divides variable {classification.variable}"
        )
    if not t.sum_divisible_by_2n:
        raise PreconditionError(
            f"case-a: 2n = {2 * t.n} does not divide a+b+c = {t.s}"
        )
    evens = sum(1 for x in (t.a, t.b, t.c) if x % 2 == 0)
    if evens != 1:
        raise PreconditionError(
            f"case-a: exactly one of a, b, c must be even, found {evens}"
        )

    n = t.n
    beta = t.beta
    u_ab = truncated2_direct(t.pair_ab())
    u_qc = truncated2_direct(t.pair_qc())
    v1 = padic_valuation(u_ab, n)
    v2 = padic_valuation(u_qc, n)
    v_sum = padic_valuation(u_ab + u_qc, n)
    lhs_valuation = n * (1 + padic_valuation(beta, n).exponent)

    rule_kind = (
        VerdictKind.INCOMPATIBLE if v1.exponent < 2 else VerdictKind.UNDETERMINED
    )
    exact_kind = (
        VerdictKind.INCOMPATIBLE
        if v_sum.exponent < lhs_valuation
        else VerdictKind.UNDETERMINED
    )

    if rule_kind is VerdictKind.INCOMPATIBLE:
        reason = "rule:u-ab-valuation-below-2"
    elif exact_kind is VerdictKind.INCOMPATIBLE:
        reason = "exact:sum-valuation-below-left-side"
    else:
        reason = "undetermined:valuations-compatible"

    overall = (
        VerdictKind.INCOMPATIBLE
        if VerdictKind.INCOMPATIBLE in (rule_kind, exact_kind)
        else VerdictKind.UNDETERMINED
    )
    return Verdict(
        kind=overall,
        reason=reason,
        evidence={
            "rule_tier": rule_kind,
            "exact_tier": exact_kind,
            "v_u_ab": v1,
            "v_u_qc": v2,
            "v_sum": v_sum,
            "beta": beta,
            "lhs_valuation": lhs_valuation,
        },
    )


def case_B_exponents(rho_c: int, n: int) -> ExponentProfile:
    """Exponent algebra of Case B: rho_beta = rho_c - 1, rho_q = n*rho_c - 1.

    The relations only hold for rho_c >= 1, so rho_c = 0 is rejected.
    """
    if not isinstance(n, int) or not is_prime(n) or n < 3:
        raise DomainError(f"exponent must be a prime >= 3, got {n}")
    if not isinstance(rho_c, int) or rho_c < 1:
        raise PreconditionError(
            f"exponent relations require rho_c >= 1, got {rho_c}"
        )
    return ExponentProfile(rho_c=rho_c, rho_beta=rho_c - 1, rho_q=n * rho_c - 1)


def case_B_consistency_check(t: TrinomialTriple) -> CaseBReport:
    """Compare a Case-B triple's observed valuations with the predicted ones.

    The divisible variable is moved into position c, then c, q = a + b and
    beta = (a+b+c)/(2n) are decomposed as cofactor * n**rho.  The report
    states whether the observed (rho_q, rho_beta) match case_B_exponents
    and whether v_n(U(a, b)) = rho_q + 1 and
    v_n(U(q, c)) = rho_q + 1 + rho_c*(n - 1) hold for this instance.
    This is a checker, not a solver: mismatches are reported, not raised.
    """
    classification = classify_divisibility_case(t)
    if classification.kind != "B":
        raise PreconditionError("case-b: none of a, b, c is divisible by the exponent")
    if not t.sum_divisible_by_2n:
        raise PreconditionError(
            f"case-b: 2n = {2 * t.n} does not divide a+b+c = {t.s}"
        )

    order = {"a": (t.b, t.c, t.a), "b": (t.a, t.c, t.b), "c": (t.a, t.b, t.c)}
    a, b, c = order[classification.variable]
    n = t.n
    if c == 0:
        raise PreconditionError(
            "case-b: the divisible variable is zero, decomposition undefined"
        )
    relabeled = TrinomialTriple(a, b, c, n)

    vc = padic_valuation(c, n)
    vq = padic_valuation(a + b, n)
    vbeta = padic_valuation(relabeled.beta, n)
    expected = case_B_exponents(vc.exponent, n)

    u_ab = padic_valuation(truncated2_direct(relabeled.pair_ab()), n)
    u_qc = padic_valuation(truncated2_direct(relabeled.pair_qc()), n)
    u_ab_expected = vq.exponent + 1
    u_qc_expected = vq.exponent + 1 + vc.exponent * (n - 1)

    return CaseBReport(
        a=a,
        b=b,
        c=c,
        n=n,
        rho_c=vc.exponent,
        c0=vc.cofactor,
        rho_q=vq.exponent,
        q0=vq.cofactor,
        rho_beta=vbeta.exponent,
        beta0=vbeta.cofactor,
        expected=expected,
        rho_q_matches=(vq.exponent == expected.rho_q),
        rho_beta_matches=(vbeta.exponent == expected.rho_beta),
        u_ab_valuation=u_ab.exponent,
        u_ab_expected=u_ab_expected,
        u_ab_matches=(u_ab.exponent == u_ab_expected),
        u_qc_valuation=u_qc.exponent,
        u_qc_expected=u_qc_expected,
        u_qc_matches=(u_qc.exponent == u_qc_expected),
    )
