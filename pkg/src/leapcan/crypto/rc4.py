"""RC4 stream cipher: key scheduling (KSA) plus output generation (PRGA).

This is the readable reference implementation; its state is a plain list
so tests can watch the permutation evolve. Bulk keystream requests go
through the compiled kernel when one is installed (see package __init__).
"""

from ..errors import KeyLengthError

MIN_KEY_BYTES = 5
MAX_KEY_BYTES = 64


def check_key_length(key) -> bytes:
    if not MIN_KEY_BYTES <= len(key) <= MAX_KEY_BYTES:
        raise KeyLengthError(
            f"RC4 key of {len(key)} bytes outside {MIN_KEY_BYTES}..{MAX_KEY_BYTES}"
        )
    return bytes(key)


class Rc4:
    """Mutable RC4 state: the 256-byte permutation and the i/j indices.

    Consecutive read() calls continue the same stream, so
    ``Rc4(k).read(a) + Rc4_state.read(b)`` equals one read of a+b bytes.
    """

    def __init__(self, key):
        check_key_length(key)
        s = list(range(256))
        j = 0
        for i in range(256):
            j = (j + s[i] + key[i % len(key)]) & 0xFF
            s[i], s[j] = s[j], s[i]
        self.s = s
        self.i = 0
        self.j = 0

    def read(self, n: int) -> bytes:
        """Emit the next n keystream bytes, one PRGA step per byte."""
        s = self.s
        i = self.i
        j = self.j
        out = bytearray(n)
        for t in range(n):
            i = (i + 1) & 0xFF
            j = (j + s[i]) & 0xFF
            s[i], s[j] = s[j], s[i]
            out[t] = s[(s[i] + s[j]) & 0xFF]
        self.i = i
        self.j = j
        return bytes(out)
