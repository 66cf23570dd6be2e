import hashlib

import pytest

import hybridsettle as hs

KECCAK_EMPTY = bytes.fromhex("c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470")
KECCAK_ABC = bytes.fromhex("4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45")


def test_keccak_vectors():
    assert hs.keccak256(b"") == KECCAK_EMPTY
    assert hs.keccak256(b"abc") == KECCAK_ABC


def test_sha3_matches_hashlib():
    for msg in (b"", b"abc", bytes(range(200)), b"x" * 136):
        assert hs.sha3_256(msg) == hashlib.sha3_256(msg).digest()


def test_merkle_round_trip():
    leaves = [hs.keccak256(bytes([i])) for i in range(13)]
    root = hs.merkle_root(leaves)
    for i in range(len(leaves)):
        index, siblings, size = hs.merkle_prove(leaves, i)
        assert size == 13
        assert len(siblings) <= 4
        assert hs.merkle_verify(root, leaves[i], index, siblings, size)
        assert not hs.merkle_verify(root, leaves[(i + 1) % 13], index, siblings, size)


def _first_prime_from(n):
    def prime(k):
        if k < 2:
            return False
        # Deterministic for k < 3.3e24 with these bases.
        d, s = k - 1, 0
        while d % 2 == 0:
            d //= 2
            s += 1
        for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
            if a % k == 0:
                continue
            x = pow(a, d, k)
            if x in (1, k - 1):
                continue
            for _ in range(s - 1):
                x = x * x % k
                if x == k - 1:
                    break
            else:
                return False
        return True

    while not prime(n):
        n += 2
    return n


def test_hash_to_prime_small_inputs_are_primes():
    for i in range(20):
        p = hs.hash_to_prime(bytes([i]))
        assert hs.is_probable_prime(p)
        start = int.from_bytes(hs.keccak256(bytes([i]))[16:], "big") | 1
        assert p == _first_prime_from(start)
        assert p.bit_length() <= 129
    assert not hs.is_probable_prime(561)
    assert hs.is_probable_prime(2**61 - 1)


def test_accumulator_small_modulus():
    assert hs.acc_value(77, 2, [3, 5]) == 43 == pow(2, 15, 77)
    w = hs.acc_witness(77, 2, [3, 5], 3)
    assert w == 32
    assert hs.acc_verify(43, w, 3, 77)
    assert not hs.acc_verify(43, w, 5, 77)
    assert hs.DEFAULT_MODULUS.bit_length() == 2048


def test_record_encoding_layout():
    pid = bytes(range(16))
    enc = hs.encode_record(3600, pid, "sell", 12, 45000, "north")
    expected = (
        (3600).to_bytes(32, "big")
        + pid + bytes(16)
        + (1).to_bytes(32, "big")
        + (12).to_bytes(32, "big")
        + (45000).to_bytes(32, "big")
        + b"north" + bytes(27)
    )
    assert enc == expected
    assert hs.record_digest(3600, pid, "sell", 12, 45000, "north") == hs.keccak256(expected)
    with pytest.raises(ValueError):
        hs.encode_record(0, pid, "hold", 1, 1, "north")


def test_run_exp_smoke(tmp_path):
    r = hs.run_exp(5, out=str(tmp_path))
    assert r["passed"]
    assert r["metrics"]["authorized_true"] == r["metrics"]["authorized_requests"]
    assert (tmp_path / "exp5" / "metrics.csv").exists()
    r3 = hs.run_exp(3, seed=7)
    assert r3["passed"]
    assert r3["metrics"]["invalid_rejected"] == "30"
