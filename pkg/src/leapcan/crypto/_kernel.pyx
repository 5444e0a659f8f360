# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled crypto kernel: RC4, SHA-256, and AES-128 hot paths.

Mirrors the surface of ``_kernel_py``; the dispatch layer in
``leapcan.crypto`` picks whichever imported. The S-box and round
constants are shared with the pure implementation so there is a single
source of truth.
"""

from libc.stdint cimport uint8_t, uint32_t, uint64_t
from libc.string cimport memcmp, memcpy

from .aes import INV_SBOX as _INV_SBOX_PY, SBOX as _SBOX_PY
from .sha256 import _H0 as _H0_PY, _K as _K_PY

NAME = "compiled"


# ---------------------------------------------------------------- RC4

cdef void _ksa(const uint8_t *key, Py_ssize_t klen, uint8_t *s) noexcept nogil:
    cdef int i
    cdef int j = 0
    cdef uint8_t tmp
    for i in range(256):
        s[i] = <uint8_t> i
    for i in range(256):
        j = (j + s[i] + key[i % klen]) & 0xFF
        tmp = s[i]
        s[i] = s[j]
        s[j] = tmp


cdef void _prga(uint8_t *s, uint8_t *out, Py_ssize_t n) noexcept nogil:
    cdef int i = 0
    cdef int j = 0
    cdef Py_ssize_t t
    cdef uint8_t tmp
    for t in range(n):
        i = (i + 1) & 0xFF
        j = (j + s[i]) & 0xFF
        tmp = s[i]
        s[i] = s[j]
        s[j] = tmp
        out[t] = s[(s[i] + s[j]) & 0xFF]


def rc4_keystream(key, Py_ssize_t n):
    cdef const uint8_t[::1] kv = key
    cdef uint8_t s[256]
    if kv.shape[0] <= 0:
        raise ValueError("empty RC4 key")
    if n <= 0:
        return b""
    out = bytearray(n)
    cdef uint8_t[::1] ov = out
    with nogil:
        _ksa(&kv[0], kv.shape[0], s)
        _prga(s, &ov[0], n)
    return bytes(out)


def rc4_trials(prefix, Py_ssize_t count, known):
    """Known-plaintext trial loop over candidate keys prefix||counter."""
    cdef const uint8_t[::1] pv = prefix
    cdef const uint8_t[::1] wv = known
    cdef Py_ssize_t plen = pv.shape[0]
    cdef Py_ssize_t wlen = wv.shape[0]
    cdef uint8_t keybuf[72]
    cdef uint8_t outbuf[64]
    cdef uint8_t s[256]
    cdef Py_ssize_t c, b
    cdef uint64_t ctr
    cdef Py_ssize_t matches = 0
    if plen <= 0 or plen + 8 > 72 or wlen <= 0 or wlen > 64:
        raise ValueError("trial buffer sizes out of range")
    memcpy(keybuf, &pv[0], plen)
    with nogil:
        for c in range(count):
            ctr = <uint64_t> c
            for b in range(8):
                keybuf[plen + b] = <uint8_t> (ctr >> (56 - 8 * b))
            _ksa(keybuf, plen + 8, s)
            _prga(s, outbuf, wlen)
            if memcmp(outbuf, &wv[0], wlen) == 0:
                matches += 1
    return matches


# ---------------------------------------------------------------- SHA-256

cdef uint32_t _K[64]
cdef uint32_t _H0[8]
for _idx in range(64):
    _K[_idx] = _K_PY[_idx]
for _idx in range(8):
    _H0[_idx] = _H0_PY[_idx]


cdef inline uint32_t _rotr(uint32_t x, int n) noexcept nogil:
    return (x >> n) | (x << (32 - n))


cdef void _sha_compress(uint32_t *h, const uint8_t *block) noexcept nogil:
    cdef uint32_t w[64]
    cdef uint32_t a, b, c, d, e, f, g, hh, t1, t2, s0, s1
    cdef int t
    for t in range(16):
        w[t] = (<uint32_t> block[4 * t] << 24) | (<uint32_t> block[4 * t + 1] << 16) | \
               (<uint32_t> block[4 * t + 2] << 8) | <uint32_t> block[4 * t + 3]
    for t in range(16, 64):
        s0 = _rotr(w[t - 15], 7) ^ _rotr(w[t - 15], 18) ^ (w[t - 15] >> 3)
        s1 = _rotr(w[t - 2], 17) ^ _rotr(w[t - 2], 19) ^ (w[t - 2] >> 10)
        w[t] = w[t - 16] + s0 + w[t - 7] + s1
    a = h[0]; b = h[1]; c = h[2]; d = h[3]
    e = h[4]; f = h[5]; g = h[6]; hh = h[7]
    for t in range(64):
        t1 = hh + (_rotr(e, 6) ^ _rotr(e, 11) ^ _rotr(e, 25)) + ((e & f) ^ (~e & g)) + _K[t] + w[t]
        t2 = (_rotr(a, 2) ^ _rotr(a, 13) ^ _rotr(a, 22)) + ((a & b) ^ (a & c) ^ (b & c))
        hh = g; g = f; f = e; e = d + t1
        d = c; c = b; b = a; a = t1 + t2
    h[0] += a; h[1] += b; h[2] += c; h[3] += d
    h[4] += e; h[5] += f; h[6] += g; h[7] += hh


def sha256_digest(data):
    cdef uint64_t bitlen = <uint64_t> len(data) * 8
    # pad to a whole number of 64-byte blocks: 0x80, zeros, 64-bit length
    # (cdivision is on, so keep the remainder math non-negative)
    cdef Py_ssize_t padlen = 55 - (len(data) % 64)
    if padlen < 0:
        padlen += 64
    padded = bytes(data) + b"\x80" + b"\x00" * padlen + bitlen.to_bytes(8, "big")
    cdef const uint8_t[::1] dv = padded
    cdef uint32_t h[8]
    cdef Py_ssize_t off, total = dv.shape[0]
    cdef int k
    for k in range(8):
        h[k] = _H0[k]
    with nogil:
        for off in range(0, total, 64):
            _sha_compress(h, &dv[off])
    out = bytearray(32)
    for k in range(8):
        out[4 * k] = (h[k] >> 24) & 0xFF
        out[4 * k + 1] = (h[k] >> 16) & 0xFF
        out[4 * k + 2] = (h[k] >> 8) & 0xFF
        out[4 * k + 3] = h[k] & 0xFF
    return bytes(out)


# ---------------------------------------------------------------- AES-128

cdef uint8_t _SBOX[256]
cdef uint8_t _ISBOX[256]
for _idx in range(256):
    _SBOX[_idx] = _SBOX_PY[_idx]
    _ISBOX[_idx] = _INV_SBOX_PY[_idx]

cdef uint8_t _RCON[10]
for _idx, _rc in enumerate((0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)):
    _RCON[_idx] = _rc


cdef inline uint8_t _xt(uint8_t a) noexcept nogil:
    return <uint8_t> ((a << 1) ^ (0x1B if a & 0x80 else 0))


cdef void _expand(const uint8_t *key, uint8_t *rk) noexcept nogil:
    cdef int i
    cdef uint8_t t0, t1, t2, t3, tmp
    memcpy(rk, key, 16)
    for i in range(16, 176, 4):
        t0 = rk[i - 4]; t1 = rk[i - 3]; t2 = rk[i - 2]; t3 = rk[i - 1]
        if i % 16 == 0:
            tmp = t0
            t0 = _SBOX[t1] ^ _RCON[i / 16 - 1]
            t1 = _SBOX[t2]
            t2 = _SBOX[t3]
            t3 = _SBOX[tmp]
        rk[i] = rk[i - 16] ^ t0
        rk[i + 1] = rk[i - 15] ^ t1
        rk[i + 2] = rk[i - 14] ^ t2
        rk[i + 3] = rk[i - 13] ^ t3


cdef void _enc_block(const uint8_t *rk, uint8_t *st) noexcept nogil:
    cdef uint8_t tmp[16]
    cdef uint8_t a0, a1, a2, a3
    cdef int r, i, c
    for i in range(16):
        st[i] ^= rk[i]
    for r in range(1, 10):
        # SubBytes + ShiftRows (row i&3 rotates left by i&3 columns)
        for i in range(16):
            tmp[i] = _SBOX[st[(i + 4 * (i & 3)) & 15]]
        # MixColumns + AddRoundKey
        for c in range(0, 16, 4):
            a0 = tmp[c]; a1 = tmp[c + 1]; a2 = tmp[c + 2]; a3 = tmp[c + 3]
            st[c] = _xt(a0) ^ _xt(a1) ^ a1 ^ a2 ^ a3 ^ rk[16 * r + c]
            st[c + 1] = a0 ^ _xt(a1) ^ _xt(a2) ^ a2 ^ a3 ^ rk[16 * r + c + 1]
            st[c + 2] = a0 ^ a1 ^ _xt(a2) ^ _xt(a3) ^ a3 ^ rk[16 * r + c + 2]
            st[c + 3] = _xt(a0) ^ a0 ^ a1 ^ a2 ^ _xt(a3) ^ rk[16 * r + c + 3]
    for i in range(16):
        tmp[i] = _SBOX[st[(i + 4 * (i & 3)) & 15]]
    for i in range(16):
        st[i] = tmp[i] ^ rk[160 + i]


cdef void _dec_block(const uint8_t *rk, uint8_t *st) noexcept nogil:
    cdef uint8_t tmp[16]
    cdef uint8_t a0, a1, a2, a3, x2, x4, x8
    cdef uint8_t m9, m11, m13, m14
    cdef int r, i, c
    for i in range(16):
        st[i] ^= rk[160 + i]
    for r in range(9, 0, -1):
        # InvShiftRows + InvSubBytes + AddRoundKey
        for i in range(16):
            tmp[i] = _ISBOX[st[(i - 4 * (i & 3)) & 15]] ^ rk[16 * r + i]
        # InvMixColumns
        for c in range(0, 16, 4):
            a0 = tmp[c]; a1 = tmp[c + 1]; a2 = tmp[c + 2]; a3 = tmp[c + 3]
            st[c] = _gm14(a0) ^ _gm11(a1) ^ _gm13(a2) ^ _gm9(a3)
            st[c + 1] = _gm9(a0) ^ _gm14(a1) ^ _gm11(a2) ^ _gm13(a3)
            st[c + 2] = _gm13(a0) ^ _gm9(a1) ^ _gm14(a2) ^ _gm11(a3)
            st[c + 3] = _gm11(a0) ^ _gm13(a1) ^ _gm9(a2) ^ _gm14(a3)
    for i in range(16):
        tmp[i] = _ISBOX[st[(i - 4 * (i & 3)) & 15]] ^ rk[i]
    for i in range(16):
        st[i] = tmp[i]


cdef inline uint8_t _gm9(uint8_t a) noexcept nogil:
    return _xt(_xt(_xt(a))) ^ a


cdef inline uint8_t _gm11(uint8_t a) noexcept nogil:
    return _xt(_xt(_xt(a))) ^ _xt(a) ^ a


cdef inline uint8_t _gm13(uint8_t a) noexcept nogil:
    return _xt(_xt(_xt(a))) ^ _xt(_xt(a)) ^ a


cdef inline uint8_t _gm14(uint8_t a) noexcept nogil:
    return _xt(_xt(_xt(a))) ^ _xt(_xt(a)) ^ _xt(a)


def aes128_encrypt(key, block):
    cdef const uint8_t[::1] kv = key
    cdef const uint8_t[::1] bv = block
    cdef uint8_t rk[176]
    if kv.shape[0] != 16 or bv.shape[0] != 16:
        raise ValueError("AES-128 key and block must be 16 bytes")
    out = bytearray(16)
    cdef uint8_t[::1] ov = out
    memcpy(&ov[0], &bv[0], 16)
    with nogil:
        _expand(&kv[0], rk)
        _enc_block(rk, &ov[0])
    return bytes(out)


def aes128_decrypt(key, block):
    cdef const uint8_t[::1] kv = key
    cdef const uint8_t[::1] bv = block
    cdef uint8_t rk[176]
    if kv.shape[0] != 16 or bv.shape[0] != 16:
        raise ValueError("AES-128 key and block must be 16 bytes")
    out = bytearray(16)
    cdef uint8_t[::1] ov = out
    memcpy(&ov[0], &bv[0], 16)
    with nogil:
        _expand(&kv[0], rk)
        _dec_block(rk, &ov[0])
    return bytes(out)
