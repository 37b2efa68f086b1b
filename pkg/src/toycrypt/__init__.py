"""toycrypt: an educational, from-scratch public-key cryptography toolkit.

Everything here is built for inspection, not protection: textbook RSA
without padding, Diffie-Hellman without authentication, SHA-1 despite its
deprecation, and brute-force attackers sized for a desk.  Do not use any of
it to protect real data.
"""

from . import bigmod, classical, dh, ecc, envelope, numtheory, rsa, sha1

__all__ = [
    "bigmod",
    "classical",
    "dh",
    "ecc",
    "envelope",
    "numtheory",
    "rsa",
    "sha1",
]

__version__ = "0.1.0"
