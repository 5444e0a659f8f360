"""Cryptographic primitives: RC4, AES-128, SHA-256/HMAC, key derivation.

Everything is implemented inside this package; there is no external
crypto dependency. The byte-crunching hot paths (RC4 keystream, SHA-256
digest, AES block) exist twice: a compiled Cython kernel and a pure-Python
fallback with bit-identical behavior. Whichever imported becomes the
active backend; set ``LEAPCAN_PURE=1`` to force the fallback.
"""

import os

from ..errors import KeyLengthError, LeapcanError
from . import _kernel_py
from .rc4 import MAX_KEY_BYTES, MIN_KEY_BYTES, Rc4, check_key_length
from .sha256 import hmac_sha256 as _hmac_impl

try:
    from . import _kernel
except ImportError:
    _kernel = None

_active = _kernel_py if (_kernel is None or os.environ.get("LEAPCAN_PURE")) else _kernel

KEY_BYTES = 16
BLOCK_BYTES = 16
MAC_BYTES = 4

def backend_name() -> str:
    """Name of the kernel serving the hot paths."""
    return _active.NAME


def available_backends() -> tuple[str, ...]:
    return tuple(m.NAME for m in ([_kernel] if _kernel is not None else []) + [_kernel_py])


def get_kernel(name: str | None = None):
    """Resolve a kernel module by name; None means the active one."""
    if name is None:
        return _active
    for mod in (_kernel, _kernel_py):
        if mod is not None and mod.NAME == name:
            return mod
    raise LeapcanError(f"unknown crypto backend {name!r}; have {available_backends()}")


def check_key128(key) -> bytes:
    if len(key) != KEY_BYTES:
        raise KeyLengthError(f"expected a 16-byte key, got {len(key)} bytes")
    return bytes(key)


def rc4_keystream(key: bytes, n: int, kernel=None) -> bytes:
    """n keystream bytes from KSA + PRGA. Key must be 5..64 bytes."""
    check_key_length(key)
    if n < 0:
        raise LeapcanError("negative keystream length")
    return (kernel or _active).rc4_keystream(bytes(key), n)


def sha256(data: bytes) -> bytes:
    return _active.sha256_digest(bytes(data))


def hmac_sha256(key: bytes, msg: bytes) -> bytes:
    return _hmac_impl(bytes(key), bytes(msg), digest=_active.sha256_digest)


def keyed_hash(key: bytes, data: bytes) -> bytes:
    """32-bit MAC: the first four bytes of HMAC-SHA256(key, data)."""
    return hmac_sha256(key, data)[:MAC_BYTES]


def kdf(lk_i: bytes, lk_j: bytes, seed: bytes) -> bytes:
    """Derive a 128-bit session key: first half of SHA-256(lk_i||lk_j||seed).

    Order-sensitive in the two long-term keys; seed is a fresh 16-byte
    random value per derivation.
    """
    check_key128(lk_i)
    check_key128(lk_j)
    if len(seed) != KEY_BYTES:
        raise KeyLengthError(f"seed must be 16 bytes, got {len(seed)}")
    return sha256(bytes(lk_i) + bytes(lk_j) + bytes(seed))[:KEY_BYTES]


def block_encrypt(key: bytes, block: bytes) -> bytes:
    """AES-128 encryption of a single 16-byte block."""
    check_key128(key)
    if len(block) != BLOCK_BYTES:
        raise KeyLengthError(f"block must be 16 bytes, got {len(block)}")
    return _active.aes128_encrypt(bytes(key), bytes(block))


def block_decrypt(key: bytes, block: bytes) -> bytes:
    """Inverse of :func:`block_encrypt`."""
    check_key128(key)
    if len(block) != BLOCK_BYTES:
        raise KeyLengthError(f"block must be 16 bytes, got {len(block)}")
    return _active.aes128_decrypt(bytes(key), bytes(block))
