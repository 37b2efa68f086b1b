"""SHA-1, implemented from scratch, bit-exact against the FIPS 180 family.

SHA-1 is cryptographically deprecated; collision weaknesses drove the
migration to longer digests.  It is kept here because this toolkit
demonstrates the hash-then-sign workflow, not because it should protect
anything.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

DIGEST_BYTES = 20
BLOCK_BYTES = 64
MAX_MESSAGE_BYTES = 1 << 61

_INITIAL_STATE = (0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0)
_MASK = 0xFFFFFFFF


@dataclass(frozen=True)
class Digest:
    """A 160-bit digest; canonical text form is 40 uppercase hex chars."""

    data: bytes

    def __post_init__(self):
        if len(self.data) != DIGEST_BYTES:
            raise ValueError(f"digest must be {DIGEST_BYTES} bytes, got {len(self.data)}")

    def as_int(self) -> int:
        return int.from_bytes(self.data, "big")

    def __str__(self) -> str:
        return hex_upper(self)


def _rotl(x: int, n: int) -> int:
    return ((x << n) | (x >> (32 - n))) & _MASK


def _compress(state: tuple[int, ...], block: bytes) -> tuple[int, ...]:
    w = list(struct.unpack(">16I", block))
    for t in range(16, 80):
        w.append(_rotl(w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16], 1))
    a, b, c, d, e = state
    for t in range(80):
        if t < 20:
            f, k = (b & c) | (~b & d), 0x5A827999
        elif t < 40:
            f, k = b ^ c ^ d, 0x6ED9EBA1
        elif t < 60:
            f, k = (b & c) | (b & d) | (c & d), 0x8F1BBCDC
        else:
            f, k = b ^ c ^ d, 0xCA62C1D6
        a, b, c, d, e = (_rotl(a, 5) + f + e + k + w[t]) & _MASK, a, _rotl(b, 30), c, d
    return tuple((s + v) & _MASK for s, v in zip(state, (a, b, c, d, e)))


class Sha1:
    """Streaming digest context: update() any number of times, then digest().

    Single-owner mutable state; do not share a live context across threads.
    digest() does not consume the context, so interleaved reads are allowed.
    """

    def __init__(self, data: bytes = b""):
        self._state = _INITIAL_STATE
        self._buffer = b""
        self._length = 0
        if data:
            self.update(data)

    def update(self, data: bytes) -> "Sha1":
        self._length += len(data)
        if self._length >= MAX_MESSAGE_BYTES:
            raise ValueError("message too long for SHA-1")
        buf = self._buffer + data
        complete = len(buf) - len(buf) % BLOCK_BYTES
        view = memoryview(buf)
        for off in range(0, complete, BLOCK_BYTES):
            self._state = _compress(self._state, bytes(view[off : off + BLOCK_BYTES]))
        self._buffer = buf[complete:]
        return self

    def digest(self) -> Digest:
        # pad: 0x80, zeros to 56 mod 64, then the bit length as 8 bytes BE
        state = self._state
        tail = self._buffer + b"\x80"
        tail += b"\x00" * ((56 - len(tail)) % BLOCK_BYTES)
        tail += struct.pack(">Q", self._length * 8)
        for off in range(0, len(tail), BLOCK_BYTES):
            state = _compress(state, tail[off : off + BLOCK_BYTES])
        return Digest(struct.pack(">5I", *state))


def sha1(message: bytes) -> Digest:
    """One-shot SHA-1 of a byte string."""
    return Sha1(message).digest()


def hex_upper(d: Digest) -> str:
    """Render a digest as 40 uppercase hex characters."""
    return d.data.hex().upper()


def parse_hex(text: str) -> Digest:
    """Parse exactly 40 hex characters (either case) into a Digest."""
    if len(text) != 2 * DIGEST_BYTES:
        raise ValueError(f"digest text must be {2 * DIGEST_BYTES} chars, got {len(text)}")
    return Digest(bytes.fromhex(text))
