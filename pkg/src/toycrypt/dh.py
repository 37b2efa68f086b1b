"""Diffie-Hellman key agreement over a prime modulus, plus Eve's attack.

Both parties raise the shared generator to their own secret exponent; the
agreed secret is g**(a*b) mod p, reachable from either side.  The
brute-force discrete-log scan shows what the eavesdropper is up against,
at moduli small enough to watch it run.

Textbook caveats apply: the group is taken as given (no safe-prime or
subgroup-order checks), so a degenerate peer value like 1 or p-1 only
triggers a warning, not an error.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass

from . import bigmod, numtheory


class WeakPublicValueWarning(UserWarning):
    """Peer public value lies in a trivially small subgroup."""


@dataclass(frozen=True)
class DhParams:
    p: int
    g: int


@dataclass(frozen=True)
class DhKeyPair:
    secret: int
    public: int


@dataclass(frozen=True)
class DlogResult:
    """Outcome of a brute-force discrete-log scan."""

    exponent: int | None
    steps: int

    @property
    def found(self) -> bool:
        return self.exponent is not None


def make_params(p: int, g: int) -> DhParams:
    """Validate group parameters: p prime, 2 < g < p - 2."""
    if not numtheory.is_prime(p).is_prime:
        raise ValueError(f"modulus {p} is not prime")
    if not 2 < g < p - 2:
        raise ValueError(f"generator must satisfy 2 < g < {p - 2}, got {g}")
    return DhParams(p, g)


def public_of(params: DhParams, secret: int) -> int:
    """Public value g**secret mod p."""
    if not 1 <= secret <= params.p - 2:
        raise ValueError(f"secret must lie in [1, {params.p - 2}], got {secret}")
    return bigmod.mod_pow(params.g, secret, params.p).value


def gen_keypair(params: DhParams, rng=None) -> DhKeyPair:
    """Fresh secret drawn uniformly from [2, p - 2] with its public value."""
    rng = rng or random.SystemRandom()
    secret = rng.randrange(2, params.p - 1)
    return DhKeyPair(secret=secret, public=public_of(params, secret))


def shared_secret(params: DhParams, my_secret: int, their_public: int) -> int:
    """their_public**my_secret mod p; identical on both sides."""
    if not 0 < their_public < params.p:
        raise ValueError(f"peer value must lie in (0, {params.p}), got {their_public}")
    if their_public == 1 or their_public == params.p - 1:
        warnings.warn(
            f"peer value {their_public} generates a tiny subgroup; "
            "the agreed secret is guessable",
            WeakPublicValueWarning,
            stacklevel=2,
        )
    return bigmod.mod_pow(their_public, my_secret, params.p).value


def brute_force_dlog(params: DhParams, target_public: int, cap: int) -> DlogResult:
    """Smallest k <= cap with g**k = target (mod p), by linear scan."""
    if not 0 < target_public < params.p:
        raise ValueError(f"target must lie in (0, {params.p}), got {target_public}")
    acc = 1
    for k in range(1, cap + 1):
        acc = acc * params.g % params.p
        if acc == target_public:
            return DlogResult(exponent=k, steps=k)
    return DlogResult(exponent=None, steps=cap)
