import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toycrypt import sha1
from toycrypt.sha1 import Digest, Sha1
from vectors import DIGEST_ITALIA_4_3, DIGEST_ITALIA_5_3, SHA1_REFERENCE_VECTORS


class TestDigestTable:
    def test_one_goal_apart(self):
        assert sha1.hex_upper(sha1.sha1(b"Italia-Germania 4-3")) == DIGEST_ITALIA_4_3
        assert sha1.hex_upper(sha1.sha1(b"Italia-Germania 5-3")) == DIGEST_ITALIA_5_3

    def test_inputs_differ_by_one_bit(self):
        a, b = b"Italia-Germania 4-3", b"Italia-Germania 5-3"
        assert len(a) == len(b)
        assert sum(bin(x ^ y).count("1") for x, y in zip(a, b)) == 1

    def test_digests_differ_by_at_least_sixty_bits(self):
        da = sha1.sha1(b"Italia-Germania 4-3").data
        db = sha1.sha1(b"Italia-Germania 5-3").data
        flipped = sum(bin(x ^ y).count("1") for x, y in zip(da, db))
        assert flipped >= 60


class TestReferenceVectors:
    @pytest.mark.parametrize("message,expected", SHA1_REFERENCE_VECTORS,
                             ids=[f"len{len(m)}" for m, _ in SHA1_REFERENCE_VECTORS])
    def test_vector(self, message, expected):
        assert sha1.hex_upper(sha1.sha1(message)) == expected


class TestStreaming:
    def test_split_equals_one_shot(self):
        rng = random.Random(111)
        for _ in range(200):
            data = rng.randbytes(rng.randrange(0, 400))
            cut = rng.randrange(0, len(data) + 1)
            ctx = Sha1()
            ctx.update(data[:cut])
            ctx.update(data[cut:])
            assert ctx.digest() == sha1.sha1(data)

    @given(data=st.binary(max_size=300), cuts=st.lists(st.integers(0, 300), max_size=4))
    def test_arbitrary_fragmentation(self, data, cuts):
        ctx = Sha1()
        prev = 0
        for cut in sorted(min(c, len(data)) for c in cuts):
            ctx.update(data[prev:cut])
            prev = cut
        ctx.update(data[prev:])
        assert ctx.digest() == sha1.sha1(data)

    def test_digest_does_not_consume_context(self):
        ctx = Sha1(b"ab")
        first = ctx.digest()
        assert first == sha1.sha1(b"ab")
        ctx.update(b"c")
        assert ctx.digest() == sha1.sha1(b"abc")

    def test_update_chains(self):
        assert Sha1().update(b"ab").update(b"c").digest() == sha1.sha1(b"abc")


class TestDeterminism:
    def test_repeated_calls(self):
        rng = random.Random(112)
        calls = 0
        while calls < 1000:
            data = rng.randbytes(rng.randrange(0, 200))
            reference = sha1.sha1(data)
            for _ in range(10):
                assert sha1.sha1(data) == reference
                calls += 1


class TestBirthdayBound:
    def test_truncated_collisions_near_expectation(self):
        # 2**16 samples into 2**32 bins: about half a collision expected;
        # more than two would sit outside three sigma.
        rng = random.Random(0x5EED)
        inputs = set()
        while len(inputs) < 2**16:
            inputs.add(rng.getrandbits(64).to_bytes(8, "big"))
        truncated = [sha1.sha1(v).data[:4] for v in inputs]
        collisions = len(truncated) - len(set(truncated))
        assert collisions <= 2


class TestHexForms:
    def test_round_trip_table_digests(self):
        for text in (DIGEST_ITALIA_4_3, DIGEST_ITALIA_5_3):
            assert sha1.hex_upper(sha1.parse_hex(text)) == text

    def test_all_zero(self):
        d = Digest(bytes(20))
        assert sha1.hex_upper(d) == "0" * 40
        assert sha1.parse_hex("0" * 40) == d

    def test_lowercase_accepted_uppercase_emitted(self):
        d = sha1.parse_hex(DIGEST_ITALIA_4_3.lower())
        assert sha1.hex_upper(d) == DIGEST_ITALIA_4_3

    @pytest.mark.parametrize("bad", ["", "ab", "0" * 39, "0" * 41, "g" * 40])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            sha1.parse_hex(bad)

    def test_digest_length_enforced(self):
        with pytest.raises(ValueError):
            Digest(b"\x00" * 19)

    def test_str_is_upper_hex(self):
        assert str(sha1.sha1(b"abc")) == sha1.hex_upper(sha1.sha1(b"abc"))
