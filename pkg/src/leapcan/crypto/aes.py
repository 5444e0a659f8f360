"""AES-128 single-block encryption/decryption (FIPS 197), pure Python.

Only the one-block ECB-style primitive is provided; every protected value
in the protocol is exactly one 128-bit block, so no mode machinery exists
here. State is kept flat in input-byte order (state[r][c] == flat[r+4c]).
"""

from ..errors import KeyLengthError

SBOX = bytes.fromhex(
    "637c777bf26b6fc53001672bfed7ab76"
    "ca82c97dfa5947f0add4a2af9ca472c0"
    "b7fd9326363ff7cc34a5e5f171d83115"
    "04c723c31896059a071280e2eb27b275"
    "09832c1a1b6e5aa0523bd6b329e32f84"
    "53d100ed20fcb15b6acbbe394a4c58cf"
    "d0efaafb434d338545f9027f503c9fa8"
    "51a3408f929d38f5bcb6da2110fff3d2"
    "cd0c13ec5f974417c4a77e3d645d1973"
    "60814fdc222a908846eeb814de5e0bdb"
    "e0323a0a4906245cc2d3ac629195e479"
    "e7c8376d8dd54ea96c56f4ea657aae08"
    "ba78252e1ca6b4c6e8dd741f4bbd8b8a"
    "703eb5664803f60e613557b986c11d9e"
    "e1f8981169d98e949b1e87e9ce5528df"
    "8ca1890dbfe6426841992d0fb054bb16"
)

INV_SBOX = bytearray(256)
for _i, _v in enumerate(SBOX):
    INV_SBOX[_v] = _i
INV_SBOX = bytes(INV_SBOX)

RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)

ROUNDS = 10
BLOCK_BYTES = 16


def _mul(a, b):
    # GF(2^8) multiply, reduction polynomial x^8+x^4+x^3+x+1
    p = 0
    for _ in range(8):
        if b & 1:
            p ^= a
        hi = a & 0x80
        a = (a << 1) & 0xFF
        if hi:
            a ^= 0x1B
        b >>= 1
    return p


_M2 = bytes(_mul(x, 2) for x in range(256))
_M3 = bytes(_mul(x, 3) for x in range(256))
_M9 = bytes(_mul(x, 9) for x in range(256))
_M11 = bytes(_mul(x, 11) for x in range(256))
_M13 = bytes(_mul(x, 13) for x in range(256))
_M14 = bytes(_mul(x, 14) for x in range(256))


def expand_key(key: bytes) -> list[bytes]:
    """Expand a 16-byte key into the 11 round keys."""
    if len(key) != BLOCK_BYTES:
        raise KeyLengthError(f"AES-128 key must be 16 bytes, got {len(key)}")
    words = [key[4 * i:4 * i + 4] for i in range(4)]
    for i in range(4, 4 * (ROUNDS + 1)):
        tw = words[i - 1]
        if i % 4 == 0:
            tw = bytes(
                (SBOX[tw[1]] ^ RCON[i // 4 - 1], SBOX[tw[2]], SBOX[tw[3]], SBOX[tw[0]])
            )
        words.append(bytes(a ^ b for a, b in zip(words[i - 4], tw)))
    return [b"".join(words[4 * r:4 * r + 4]) for r in range(ROUNDS + 1)]


def _sub_shift(s, box):
    # SubBytes and ShiftRows fused: row r rotates left by r columns
    return bytearray(
        box[s[(i + 4 * (i & 3)) & 15]] for i in range(16)
    )


def _inv_shift_sub(s, box):
    # InvShiftRows then InvSubBytes: row r rotates right by r columns
    return bytearray(
        box[s[(i - 4 * (i & 3)) & 15]] for i in range(16)
    )


def _mix(s):
    out = bytearray(16)
    for c in range(0, 16, 4):
        a0, a1, a2, a3 = s[c], s[c + 1], s[c + 2], s[c + 3]
        out[c] = _M2[a0] ^ _M3[a1] ^ a2 ^ a3
        out[c + 1] = a0 ^ _M2[a1] ^ _M3[a2] ^ a3
        out[c + 2] = a0 ^ a1 ^ _M2[a2] ^ _M3[a3]
        out[c + 3] = _M3[a0] ^ a1 ^ a2 ^ _M2[a3]
    return out


def _inv_mix(s):
    out = bytearray(16)
    for c in range(0, 16, 4):
        a0, a1, a2, a3 = s[c], s[c + 1], s[c + 2], s[c + 3]
        out[c] = _M14[a0] ^ _M11[a1] ^ _M13[a2] ^ _M9[a3]
        out[c + 1] = _M9[a0] ^ _M14[a1] ^ _M11[a2] ^ _M13[a3]
        out[c + 2] = _M13[a0] ^ _M9[a1] ^ _M14[a2] ^ _M11[a3]
        out[c + 3] = _M11[a0] ^ _M13[a1] ^ _M9[a2] ^ _M14[a3]
    return out


def _xor(s, rk):
    return bytearray(a ^ b for a, b in zip(s, rk))


def _check_block(block):
    if len(block) != BLOCK_BYTES:
        raise KeyLengthError(f"AES block must be 16 bytes, got {len(block)}")
    return bytes(block)


def encrypt_block(key: bytes, block: bytes) -> bytes:
    rk = expand_key(key)
    s = _xor(_check_block(block), rk[0])
    for r in range(1, ROUNDS):
        s = _xor(_mix(_sub_shift(s, SBOX)), rk[r])
    return bytes(_xor(_sub_shift(s, SBOX), rk[ROUNDS]))


def decrypt_block(key: bytes, block: bytes) -> bytes:
    rk = expand_key(key)
    s = _xor(_check_block(block), rk[ROUNDS])
    for r in range(ROUNDS - 1, 0, -1):
        s = _inv_mix(_xor(_inv_shift_sub(s, INV_SBOX), rk[r]))
    return bytes(_xor(_inv_shift_sub(s, INV_SBOX), rk[0]))
