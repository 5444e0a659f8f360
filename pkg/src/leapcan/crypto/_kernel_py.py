"""Pure-Python kernel: the import-time fallback for the compiled extension.

Exposes the exact surface of ``_kernel`` so the dispatch layer can swap
them freely. Behavior must stay bit-identical; tests/test_backends.py
cross-checks the two.
"""

from . import aes, sha256
from .rc4 import Rc4

NAME = "pure-python"


def rc4_keystream(key: bytes, n: int) -> bytes:
    return Rc4(key).read(n)


def sha256_digest(data: bytes) -> bytes:
    return sha256.sha256(data)


def aes128_encrypt(key: bytes, block: bytes) -> bytes:
    return aes.encrypt_block(key, block)


def aes128_decrypt(key: bytes, block: bytes) -> bytes:
    return aes.decrypt_block(key, block)


def rc4_trials(prefix: bytes, count: int, known: bytes) -> int:
    """Known-plaintext trial loop: KSA + short PRGA + compare per candidate.

    Candidate keys are prefix || 64-bit big-endian counter. Returns how
    many candidates reproduced `known`.
    """
    matches = 0
    want = bytes(known)
    n = len(want)
    for c in range(count):
        if Rc4(prefix + c.to_bytes(8, "big")).read(n) == want:
            matches += 1
    return matches
