"""Exact construction of truncated binomials of two and three integers.

The truncated binomial of a pair is U(a, b) = (a + b)**n - a**n - b**n,
the Newton expansion with both pure n-th powers removed.  The three-integer
version U(a, b, c) = (a + b + c)**n - a**n - b**n - c**n decomposes as
U(a, b) + U(a + b, c).

All arithmetic is plain Python int, which is arbitrary precision, so every
value here is exact regardless of magnitude.  Exponents are restricted to
primes >= 3; everything the divisibility analysis relies on (binomial
coefficients proportional to the exponent, evenness of U) needs that.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, PreconditionError

# The three equivalent summation forms of U(a, b); see truncated2_series.
SERIES_FORMS = ("mixed", "q_minus_a", "q_minus_b")

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all machine-size integers.

    The fixed witness set is known to be correct for every n < 3.3e24,
    which covers anything that fits in 64 bits.
    """
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _validate_exponent(n) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"exponent must be an int, got {type(n).__name__}")
    if n < 3 or not is_prime(n):
        raise DomainError(f"exponent must be a prime >= 3, got {n}")


def _validate_int(name: str, value) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DomainError(f"{name} must be an int, got {type(value).__name__}")


@dataclass(frozen=True)
class BinomialPair:
    """Two integers together with a prime exponent n >= 3."""

    a: int
    b: int
    n: int

    def __post_init__(self):
        _validate_int("a", self.a)
        _validate_int("b", self.b)
        _validate_exponent(self.n)

    @property
    def q(self) -> int:
        """The sum a + b."""
        return self.a + self.b


@dataclass(frozen=True)
class TrinomialTriple:
    """Three integers together with a prime exponent n >= 3."""

    a: int
    b: int
    c: int
    n: int

    def __post_init__(self):
        _validate_int("a", self.a)
        _validate_int("b", self.b)
        _validate_int("c", self.c)
        _validate_exponent(self.n)

    @property
    def s(self) -> int:
        """The sum a + b + c."""
        return self.a + self.b + self.c

    @property
    def sum_divisible_by_2n(self) -> bool:
        return self.s % (2 * self.n) == 0

    @property
    def beta(self) -> int:
        """The cofactor in s = 2 * beta * n; only defined when 2n divides s."""
        if not self.sum_divisible_by_2n:
            raise PreconditionError(
                f"beta undefined: 2n = {2 * self.n} does not divide a+b+c = {self.s}"
            )
        return self.s // (2 * self.n)

    def pair_ab(self) -> BinomialPair:
        return BinomialPair(self.a, self.b, self.n)

    def pair_qc(self) -> BinomialPair:
        """The pair (a + b, c) appearing in the two-term decomposition."""
        return BinomialPair(self.a + self.b, self.c, self.n)


def binom_coeff(n: int, v: int) -> int:
    """Exact binomial coefficient C(n, v) for 0 <= v <= n."""
    _validate_int("n", n)
    _validate_int("v", v)
    if n < 0 or v < 0 or v > n:
        raise DomainError(f"binom_coeff requires 0 <= v <= n, got n={n}, v={v}")
    return math.comb(n, v)


def truncated2_direct(p: BinomialPair) -> int:
    """U(a, b) = (a + b)**n - a**n - b**n, evaluated directly."""
    return p.q ** p.n - p.a ** p.n - p.b ** p.n


def truncated2_series(p: BinomialPair, form: str = "mixed") -> int:
    """Evaluate U(a, b) as one of its three equivalent summations.

    ``mixed``      sum_{v=1}^{n-1} C(n,v) * a**v * b**(n-v)
    ``q_minus_a``  - sum_{v=1}^{n-1} C(n,v) * q**v * (-a)**(n-v)
    ``q_minus_b``  - sum_{v=1}^{n-1} C(n,v) * q**v * (-b)**(n-v)

    where q = a + b.  The last two arise from expanding b**n = (q - a)**n
    and a**n = (q - b)**n.  All three agree exactly with truncated2_direct
    for every integer pair; that equivalence is a library contract and is
    exercised by the test suite.
    """
    a, b, n, q = p.a, p.b, p.n, p.q
    if form == "mixed":
        return sum(math.comb(n, v) * a**v * b ** (n - v) for v in range(1, n))
    if form == "q_minus_a":
        return -sum(math.comb(n, v) * q**v * (-a) ** (n - v) for v in range(1, n))
    if form == "q_minus_b":
        return -sum(math.comb(n, v) * q**v * (-b) ** (n - v) for v in range(1, n))
    raise DomainError(f"unknown series form {form!r}; expected one of {SERIES_FORMS}")


def truncated3(t: TrinomialTriple) -> int:
    """U(a, b, c) as the sum of two pair binomials, U(a, b) + U(a+b, c).

    Algebraically identical to (a+b+c)**n - a**n - b**n - c**n; the
    identity is asserted by tests, not assumed here.
    """
    return truncated2_direct(t.pair_ab()) + truncated2_direct(t.pair_qc())


def gcd_normalize(values: list[int]) -> tuple[list[int], int]:
    """Divide a list of integers by their (positive) gcd.

    Returns the normalized list and the gcd.  Signs are preserved, so
    gcd_normalize([-4, 8, 6]) == ([-2, 4, 3], 2).  An empty or all-zero
    list has no gcd and is rejected.
    """
    for v in values:
        _validate_int("value", v)
    g = math.gcd(*values) if values else 0
    if g == 0:
        raise DomainError("gcd_normalize needs at least one nonzero value")
    return [v // g for v in values], g
