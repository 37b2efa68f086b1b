"""Textbook RSA: keygen, raw block encryption, and byte-stream framing.

This is raw modular exponentiation with no padding scheme.  Deterministic,
malleable, and unsafe for real traffic by design: the goal is to make the
key mathematics visible, including the fact that knowing phi(N) gives the
factorization away (recover_primes).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import bigmod, numtheory

DEFAULT_PUBLIC_EXPONENT = 65537
MIN_MODULUS = 257  # one plaintext byte per block


@dataclass(frozen=True)
class RsaPublicKey:
    n: int
    e: int

    def __post_init__(self):
        if not 1 < self.e < self.n:
            raise ValueError(f"public exponent {self.e} out of range for modulus {self.n}")


@dataclass(frozen=True)
class RsaPrivateKey:
    n: int
    d: int
    p: int
    q: int
    phi: int


@dataclass(frozen=True)
class BlockStream:
    """Message framing: fixed-width big-endian blocks, zero right-padding.

    width is the plaintext block size in bytes; pad is how many fill bytes
    were appended to the final block.  blocks may hold plaintext values
    (below 256**width) or ciphertext values (below the modulus).
    """

    width: int
    pad: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        if self.width < 1:
            raise ValueError(f"block width must be >= 1, got {self.width}")
        if not 0 <= self.pad < self.width:
            raise ValueError(f"pad {self.pad} out of range for width {self.width}")
        if self.pad and not self.blocks:
            raise ValueError("padding recorded but no blocks present")
        if any(b < 0 for b in self.blocks):
            raise ValueError("blocks must be non-negative")


def keygen_from_primes(p: int, q: int, e: int) -> tuple[RsaPublicKey, RsaPrivateKey]:
    """Build a key pair from two distinct primes and a public exponent."""
    if p == q:
        raise ValueError("p and q must be distinct")
    for name, value in (("p", p), ("q", q)):
        if not numtheory.is_prime(value).is_prime:
            raise ValueError(f"{name} = {value} is not prime")
    n = p * q
    phi = (p - 1) * (q - 1)
    if not 1 < e < phi:
        raise ValueError(f"public exponent must satisfy 1 < e < {phi}, got {e}")
    g = bigmod.gcd(e, phi)
    if g != 1:
        raise ValueError(f"e = {e} not coprime to phi = {phi} (gcd {g})")
    d = bigmod.mod_inv(e, phi).value
    return RsaPublicKey(n, e), RsaPrivateKey(n, d, p, q, phi)


def keygen_random(
    modulus_bits: int, e: int = DEFAULT_PUBLIC_EXPONENT, rng=None
) -> tuple[RsaPublicKey, RsaPrivateKey]:
    """Random key pair whose modulus has exactly modulus_bits bits.

    Primes carry only their top bit forced, so the product sometimes falls
    one bit short; generation retries until the length and gcd(e, phi) = 1
    both hold.
    """
    if modulus_bits < 16:
        raise ValueError(f"modulus must be at least 16 bits, got {modulus_bits}")
    if e >= 1 << modulus_bits:
        raise ValueError(f"exponent {e} cannot be below phi of a {modulus_bits}-bit modulus")
    rng = rng or random.SystemRandom()
    p_bits = modulus_bits // 2
    q_bits = modulus_bits - p_bits
    while True:
        p = numtheory.random_prime(p_bits, rng)
        q = numtheory.random_prime(q_bits, rng)
        if p == q:
            continue
        if (p * q).bit_length() != modulus_bits:
            continue
        phi = (p - 1) * (q - 1)
        if not 1 < e < phi or bigmod.gcd(e, phi) != 1:
            continue
        return keygen_from_primes(p, q, e)


def _raw_op(x: int, n: int, exponent: int, what: str) -> int:
    if not 0 <= x < n:
        raise ValueError(f"{what} {x} not in [0, modulus {n})")
    return bigmod.mod_pow(x, exponent, n).value


def encrypt_block(m: int, pub: RsaPublicKey) -> int:
    """C = M**e mod N for a single block M < N."""
    return _raw_op(m, pub.n, pub.e, "plaintext block")


def decrypt_block(c: int, priv: RsaPrivateKey) -> int:
    """M = C**d mod N for a single block C < N."""
    return _raw_op(c, priv.n, priv.d, "ciphertext block")


def public_op(x: int, pub: RsaPublicKey) -> int:
    """Raw x**e mod N; verification side of the signature workflow."""
    return _raw_op(x, pub.n, pub.e, "value")


def private_op(x: int, priv: RsaPrivateKey) -> int:
    """Raw x**d mod N; signing side of the signature workflow."""
    return _raw_op(x, priv.n, priv.d, "value")


def block_width(n: int) -> int:
    """Plaintext bytes per block: the largest width with 256**w <= 2**(bits-1)."""
    if n < MIN_MODULUS:
        raise ValueError(f"modulus {n} too small to carry even one byte")
    return (n.bit_length() - 1) // 8


def encode_message(data: bytes, n: int) -> BlockStream:
    """Split bytes into numeric blocks strictly below the modulus."""
    w = block_width(n)
    pad = -len(data) % w
    padded = data + b"\x00" * pad
    blocks = tuple(
        int.from_bytes(padded[i : i + w], "big") for i in range(0, len(padded), w)
    )
    return BlockStream(width=w, pad=pad, blocks=blocks)


def decode_message(stream: BlockStream, n: int) -> bytes:
    """Reassemble bytes from a plaintext block stream; exact inverse of encode."""
    if stream.width != block_width(n):
        raise ValueError(
            f"stream width {stream.width} does not match modulus width {block_width(n)}"
        )
    out = bytearray()
    for b in stream.blocks:
        if b >= n:
            raise ValueError(f"corrupted stream: block {b} >= modulus {n}")
        if b.bit_length() > 8 * stream.width:
            raise ValueError(f"corrupted stream: block {b} wider than {stream.width} bytes")
        out += b.to_bytes(stream.width, "big")
    return bytes(out[: len(out) - stream.pad] if stream.pad else out)


def encrypt_message(data: bytes, pub: RsaPublicKey) -> BlockStream:
    """encode_message then the public operation on every block."""
    plain = encode_message(data, pub.n)
    cipher = tuple(encrypt_block(b, pub) for b in plain.blocks)
    return BlockStream(width=plain.width, pad=plain.pad, blocks=cipher)


def decrypt_message(stream: BlockStream, priv: RsaPrivateKey) -> bytes:
    """The private operation on every block, then decode_message."""
    for b in stream.blocks:
        if b >= priv.n:
            raise ValueError(f"corrupted stream: block {b} >= modulus {priv.n}")
    plain = tuple(decrypt_block(b, priv) for b in stream.blocks)
    return decode_message(
        BlockStream(width=stream.width, pad=stream.pad, blocks=plain), priv.n
    )


def recover_primes(n: int, phi: int) -> tuple[int, int]:
    """Recover {p, q} from the modulus and phi(N).

    p and q are the roots of t**2 - (N - phi + 1)t + N, so leaking phi is
    exactly as bad as leaking the factorization.
    """
    s = n - phi + 1
    disc = s * s - 4 * n
    if disc < 0:
        raise ValueError("no factorization: negative discriminant")
    r = math.isqrt(disc)
    if r * r != disc:
        raise ValueError("no factorization: discriminant not a perfect square")
    p, q = (s - r) // 2, (s + r) // 2
    if p < 2 or p * q != n:
        raise ValueError("no factorization: roots do not multiply back to N")
    return p, q


# --- text formats ----------------------------------------------------------
#
# Key files are line-oriented `field=value` with lowercase hex values.
# Ciphertext streams are a header line plus one hex block per line:
#
#   rsa-blocks v1 width=W pad=P count=K

_STREAM_MAGIC = "rsa-blocks v1"


def write_public_key(key: RsaPublicKey) -> str:
    return f"n={key.n:#x}\ne={key.e:#x}\n"


def write_private_key(key: RsaPrivateKey) -> str:
    return f"n={key.n:#x}\nd={key.d:#x}\np={key.p:#x}\nq={key.q:#x}\n"


def _parse_fields(text: str, required: tuple[str, ...]) -> dict[str, int]:
    fields: dict[str, int] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        name, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"malformed key line: {line!r}")
        fields[name.strip()] = bigmod.parse_natural(value)
    missing = [name for name in required if name not in fields]
    if missing:
        raise ValueError(f"key file missing fields: {', '.join(missing)}")
    return fields


def read_public_key(text: str) -> RsaPublicKey:
    f = _parse_fields(text, ("n", "e"))
    return RsaPublicKey(f["n"], f["e"])


def read_private_key(text: str) -> RsaPrivateKey:
    f = _parse_fields(text, ("n", "d", "p", "q"))
    return RsaPrivateKey(f["n"], f["d"], f["p"], f["q"], (f["p"] - 1) * (f["q"] - 1))


def write_block_stream(stream: BlockStream) -> str:
    lines = [f"{_STREAM_MAGIC} width={stream.width} pad={stream.pad} count={len(stream.blocks)}"]
    lines += [f"{b:#x}" for b in stream.blocks]
    return "\n".join(lines) + "\n"


def read_block_stream(text: str) -> BlockStream:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty block stream")
    header = lines[0].split()
    if " ".join(header[:2]) != _STREAM_MAGIC or len(header) != 5:
        raise ValueError(f"not a block stream header: {lines[0]!r}")
    try:
        width = int(header[2].removeprefix("width="))
        pad = int(header[3].removeprefix("pad="))
        count = int(header[4].removeprefix("count="))
    except ValueError:
        raise ValueError(f"malformed block stream header: {lines[0]!r}") from None
    if len(lines) - 1 != count:
        raise ValueError(f"block stream claims {count} blocks, found {len(lines) - 1}")
    return BlockStream(
        width=width, pad=pad, blocks=tuple(bigmod.parse_natural(b) for b in lines[1:])
    )
