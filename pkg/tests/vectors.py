"""Shared reference data for the test suite.

The digest vectors were cross-checked against hashlib (FIPS-conformant)
before being frozen here; the first three and the million-'a' input are the
classic published SHA-1 examples.  The prime table is a verbatim
transcription of a printed table of the 168 primes below 1000.
"""

# (message, 40-char uppercase hex digest)
SHA1_REFERENCE_VECTORS = [
    (b"", "DA39A3EE5E6B4B0D3255BFEF95601890AFD80709"),
    (b"abc", "A9993E364706816ABA3E25717850C26C9CD0D89D"),
    (
        b"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
        "84983E441C3BD26EBAAE4AA1F95129E5E54670F1",
    ),
    (b"a", "86F7E437FAA5A7FCE15D1DDCB9EAEAEA377667B8"),
    (
        b"0123456701234567012345670123456701234567012345670123456701234567" * 10,
        "DEA356A2CDDD90C7A7ECEDC5EBB563934F460452",
    ),
    (b"a" * 1000000, "34AA973CD4C4DAA4F61EEB2BDBAD27316534016F"),
]

DIGEST_ITALIA_4_3 = "6CF5982ECB6BBE81882A03BC205D8857697C9AA6"
DIGEST_ITALIA_5_3 = "A3BB835E86561F172E233A8F495E75E94FE640EE"

# transcribed row by row from the printed table
PRIMES_BELOW_1000 = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
    79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
    157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229,
    233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311,
    313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397,
    401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479,
    487, 491, 499, 503, 509, 521, 523, 541, 547, 557, 563, 569, 571, 577,
    587, 593, 599, 601, 607, 613, 617, 619, 631, 641, 643, 647, 653, 659,
    661, 673, 677, 683, 691, 701, 709, 719, 727, 733, 739, 743, 751, 757,
    761, 769, 773, 787, 797, 809, 811, 821, 823, 827, 829, 839, 853, 857,
    859, 863, 877, 881, 883, 887, 907, 911, 919, 929, 937, 941, 947, 953,
    967, 971, 977, 983, 991, 997,
]

CAESAR_PLAIN = "Nel mezzo del cammin di nostra vita"
CAESAR_CIPHER = "Qho phccr gho fdpplq gl qrvwud ylwd"
