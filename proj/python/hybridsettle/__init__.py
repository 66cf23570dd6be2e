"""Python bindings for the hybridsettle simulator."""

from ._core import (
    DEFAULT_MODULUS,
    acc_value,
    acc_verify,
    acc_witness,
    encode_record,
    hash_to_prime,
    is_probable_prime,
    keccak256,
    merkle_prove,
    merkle_root,
    merkle_verify,
    record_digest,
    run_all,
    run_exp,
    sha3_256,
)

__all__ = [
    "DEFAULT_MODULUS",
    "acc_value",
    "acc_verify",
    "acc_witness",
    "encode_record",
    "hash_to_prime",
    "is_probable_prime",
    "keccak256",
    "merkle_prove",
    "merkle_root",
    "merkle_verify",
    "record_digest",
    "run_all",
    "run_exp",
    "sha3_256",
]
