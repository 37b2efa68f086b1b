"""Primes, factorization, the Euler totient, and prime-density estimates.

Factoring here is deliberately naive (trial division only, with a divisor
cap): the point is to make the cost of inverting a multiplication
observable, not to hide it.

All randomness flows through a caller-supplied rng (anything with
randrange/getrandbits, e.g. random.Random or random.SystemRandom).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import bigmod

SIEVE_LIMIT_CAP = 10**8
TRIAL_DIVISION_BOUND = 1 << 16
DEFAULT_DIVISOR_CAP = 1 << 32

COMPOSITE = "composite"
PROBABLY_PRIME = "probably-prime"
PROVEN_PRIME = "proven-prime"


class SieveLimitError(ValueError):
    """Sieve limit above the configured cap."""


class FactorLimitError(ValueError):
    """Trial division ran out of budget; carries the partial result."""

    def __init__(self, n: int, partial: tuple[tuple[int, int], ...], cofactor: int):
        super().__init__(
            f"factoring {n} exceeded the divisor cap; "
            f"extracted {partial}, cofactor {cofactor} unresolved"
        )
        self.partial = partial
        self.cofactor = cofactor


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ((p1, e1), (p2, e2), ...) with p1 < p2 < ..."""

    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        n = 1
        for p, e in self.factors:
            n *= p**e
        return n

    def __str__(self) -> str:
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


@dataclass(frozen=True)
class PrimalityVerdict:
    """Outcome of a primality check.

    kind is one of COMPOSITE, PROBABLY_PRIME, PROVEN_PRIME.  For composites
    of at least 2, witness holds either a divisor found by trial division or
    a Miller-Rabin witness base; rounds counts the Miller-Rabin rounds run.
    """

    kind: str
    witness: int | None = None
    rounds: int = 0

    @property
    def is_prime(self) -> bool:
        return self.kind != COMPOSITE


def _default_rng():
    return random.SystemRandom()


def sieve_primes(limit: int) -> list[int]:
    """All primes strictly below limit, by the sieve of Eratosthenes."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    if limit > SIEVE_LIMIT_CAP:
        raise SieveLimitError(f"sieve limit {limit} above cap {SIEVE_LIMIT_CAP}")
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit - 1) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit, i)))
    return [i for i in range(limit) if flags[i]]


def fermat_probable_prime(n: int, base: int) -> bool:
    """Fermat test: base**(n-1) = 1 (mod n)?

    A True answer does not prove primality; plenty of composites (341 = 11*31
    to base 2, for instance) pass.  False proves compositeness.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    if not 2 <= base <= n - 2:
        raise ValueError(f"base must lie in [2, {n - 2}], got {base}")
    return bigmod.mod_pow(base, n - 1, n).value == 1


def _is_witness(n: int, a: int, d: int, s: int) -> bool:
    # n - 1 = 2**s * d with d odd; True means a proves n composite.
    x = bigmod.mod_pow(a, d, n).value
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int, rounds: int = 40, rng=None) -> PrimalityVerdict:
    """Primality verdict: trial division below 2**16, Miller-Rabin above.

    The Miller-Rabin branch uses `rounds` random bases; a composite slips
    through with probability at most 4**-rounds.
    """
    if n < 2:
        return PrimalityVerdict(COMPOSITE)
    if n < TRIAL_DIVISION_BOUND:
        for d in range(2, math.isqrt(n) + 1):
            if n % d == 0:
                return PrimalityVerdict(COMPOSITE, witness=d)
        return PrimalityVerdict(PROVEN_PRIME)
    if n % 2 == 0:
        return PrimalityVerdict(COMPOSITE, witness=2)
    rng = rng or _default_rng()
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for i in range(rounds):
        a = rng.randrange(2, n - 1)
        if _is_witness(n, a, d, s):
            return PrimalityVerdict(COMPOSITE, witness=a, rounds=i + 1)
    return PrimalityVerdict(PROBABLY_PRIME, rounds=rounds)


def factor_trial(n: int, divisor_cap: int = DEFAULT_DIVISOR_CAP) -> Factorization:
    """Complete factorization by trial division up to sqrt(n).

    Raises FactorLimitError once a divisor beyond divisor_cap would be
    needed, reporting the factors extracted so far and the cofactor left.
    """
    if n < 2:
        raise ValueError(f"cannot factor {n}")
    factors: list[tuple[int, int]] = []
    m = n
    d = 2
    while d * d <= m:
        if d > divisor_cap:
            raise FactorLimitError(n, tuple(factors), m)
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(tuple(factors))


def totient_from_factorization(f: Factorization) -> int:
    """phi from a known factorization: product of p**(e-1) * (p-1)."""
    phi = 1
    for p, e in f.factors:
        phi *= p ** (e - 1) * (p - 1)
    return phi


def totient(n: int) -> int:
    """Euler's phi: how many of 1..n are coprime to n.  phi(1) = 1."""
    if n < 1:
        raise ValueError(f"totient undefined for {n}")
    if n == 1:
        return 1
    return totient_from_factorization(factor_trial(n))


def random_prime(bits: int, rng=None) -> int:
    """A probable prime with exactly `bits` bits (top bit set, odd)."""
    if bits < 4:
        raise ValueError(f"need at least 4 bits, got {bits}")
    rng = rng or _default_rng()
    while True:
        candidate = (1 << (bits - 1)) | rng.getrandbits(bits - 1) | 1
        if is_prime(candidate, rounds=40, rng=rng).is_prime:
            return candidate


def _ln(x: int) -> float:
    # math.log takes arbitrary ints without overflowing through float(x)
    return math.log(x)


def pnt_estimate(x: int) -> float:
    """Approximate count of primes up to x as x/ln(x)."""
    if x < 3:
        raise ValueError(f"estimate needs x >= 3, got {x}")
    ln_x = _ln(x)
    if x.bit_length() < 1024:
        return x / ln_x
    try:
        return math.exp(ln_x - math.log(ln_x))
    except OverflowError:
        return math.inf


def pnt_between(lo: int, hi: int) -> float:
    """Approximate count of primes in (lo, hi]."""
    if lo >= hi:
        raise ValueError(f"need lo < hi, got {lo} >= {hi}")
    return pnt_estimate(hi) - pnt_estimate(lo)


def key_count(n_parties: int) -> int:
    """Pairwise secret keys needed by n parties: n(n-1)/2, exactly."""
    if n_parties < 1:
        raise ValueError(f"need at least one party, got {n_parties}")
    return n_parties * (n_parties - 1) // 2
