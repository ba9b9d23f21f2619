#!/usr/bin/env python3
"""Independent reference model of the chaoskey pipeline.

Written straight from the algorithm definitions using Python big integers and a
table-free AES, sharing no code with the C++ library. Used to generate the
frozen golden vectors in src/golden_vectors.inc and re-run by ctest to make
sure the frozen file still matches.
"""

import sys

ONE = 1 << 63
MOD_SEED = ONE - 2
BURN_IN = 100
PERTURB = 1 << 39


# ---------------------------------------------------------------- chaos

def step(m):
    x = (m * (ONE - m)) // ONE
    return (39999 * x) // 10000


def burn_in(m):
    perturbed = False
    i = 0
    while i < BURN_IN:
        n = step(m)
        if n == m and not perturbed:
            m = (m + PERTURB) % ONE
            perturbed = True
            i = 0
            continue
        m = n
        i += 1
    return m


def tag_word(tag):
    return int.from_bytes(bytes([tag]) * 8, "big")


M64 = (1 << 64) - 1


def mix64(x):
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & M64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & M64
    return x ^ (x >> 31)


def spread(u):
    # 72-bit seed word -> well-mixed 64-bit word; spread(0) == 0.
    return mix64((u & M64) ^ mix64(u >> 64))


def seed_prefix(prefix, tag):
    prefix = bytes(prefix[:9]) + bytes(max(0, 9 - len(prefix)))
    u = int.from_bytes(prefix, "big") ^ tag_word(tag)
    return burn_in(spread(u) % MOD_SEED + 1)


def keyed_state(key1, tag):
    m = seed_prefix(key1[:9], tag)
    rest = bytes(key1[9:])
    for off in range(0, len(rest), 9):
        chunk = rest[off:off + 9]
        chunk = chunk + bytes(9 - len(chunk))
        u = int.from_bytes(chunk, "big") ^ tag_word(tag)
        m = burn_in(spread(m ^ u) % MOD_SEED + 1)
    return m


class Chaos:
    def __init__(self, m):
        self.m = m
        self.iterations = 0

    def byte(self):
        for _ in range(4):
            self.m = step(self.m)
        self.iterations += 4
        m = self.m
        return ((m >> 8) ^ (m >> 16) ^ (m >> 24) ^ (m >> 32)) & 0xFF


# ---------------------------------------------------------------- matrix

def cell(p, r, c):
    return (7 * p + 13 * r + 31 * c) % 60


def encode_byte(b):
    p, r, c = b >> 6, (b >> 3) & 7, b & 7
    return (cell(p, r, c), cell(p, c, r), cell((p + 1) % 4, r, c))


def key1_of(master):
    out = []
    for b in master:
        out.extend(encode_byte(b))
    return bytes(out)


# ---------------------------------------------------------------- keyschedule

def rotl(x, n):
    return ((x << n) | (x >> (8 - n))) & 0xFF


def rotr(x, n):
    return ((x >> n) | (x << (8 - n))) & 0xFF


def lfsr_stream(seed, count):
    s = seed
    out = []
    for _ in range(count):
        for _ in range(8):
            fb = ((s >> 7) ^ (s >> 5) ^ (s >> 4) ^ (s >> 3)) & 1
            s = ((s << 1) | fb) & 0xFF
        out.append(s)
    return out


def key2_of(key1):
    ch = Chaos(keyed_state(key1, 0x01))
    out = []
    for k in key1:
        for _ in range(3):
            ch.byte()
        out.append(ch.byte() ^ k)
    return bytes(out)


def key3_of(key2, seed=0x5C):
    ls = lfsr_stream(seed, len(key2))
    return bytes(rotr(rotl(k, 1) ^ l, 1) for k, l in zip(key2, ls))


def keystream(key1, final, n):
    ch = Chaos(keyed_state(key1, 0x5A))
    return bytes(ch.byte() ^ final[t % len(final)] for t in range(n))


def round_keys(key1):
    ch = Chaos(keyed_state(key1, 0xA5))
    return bytes(ch.byte() for _ in range(176))


def baseline(key1, n):
    s = 0
    out = []
    for t in range(n):
        c = encode_byte(key1[t % len(key1)] ^ s)
        o = c[0] ^ rotl(c[1], 3) ^ rotr(c[2], 2)
        out.append(o)
        s = o
    return bytes(out)


# ---------------------------------------------------------------- AES (no tables)

def gmul(a, b):
    p = 0
    while b:
        if b & 1:
            p ^= a
        a = ((a << 1) ^ (0x1B if a & 0x80 else 0)) & 0xFF
        b >>= 1
    return p


def ginv(a):
    if a == 0:
        return 0
    # a^254 in GF(2^8)
    r, e, base = 1, 254, a
    while e:
        if e & 1:
            r = gmul(r, base)
        base = gmul(base, base)
        e >>= 1
    return r


def sbox(a):
    x = ginv(a)
    s = x
    for i in range(1, 5):
        s ^= rotl(x, i)
    return s ^ 0x63


def aes_encrypt(block, rk):
    st = [b ^ k for b, k in zip(block, rk[0:16])]
    for rnd in range(1, 11):
        st = [sbox(b) for b in st]
        # state is column-major: byte (row r, column c) lives at r + 4c
        sh = [0] * 16
        for c in range(4):
            for r in range(4):
                sh[r + 4 * c] = st[r + 4 * ((c + r) % 4)]
        st = sh
        if rnd != 10:
            mixed = [0] * 16
            for c in range(4):
                a = st[4 * c:4 * c + 4]
                mixed[4 * c + 0] = gmul(a[0], 2) ^ gmul(a[1], 3) ^ a[2] ^ a[3]
                mixed[4 * c + 1] = a[0] ^ gmul(a[1], 2) ^ gmul(a[2], 3) ^ a[3]
                mixed[4 * c + 2] = a[0] ^ a[1] ^ gmul(a[2], 2) ^ gmul(a[3], 3)
                mixed[4 * c + 3] = gmul(a[0], 3) ^ a[1] ^ a[2] ^ gmul(a[3], 2)
            st = mixed
        st = [b ^ k for b, k in zip(st, rk[16 * rnd:16 * rnd + 16])]
    return bytes(st)


def rijndael_expand(key):
    w = [list(key[4 * i:4 * i + 4]) for i in range(4)]
    rcon = 1
    for i in range(4, 44):
        t = list(w[i - 1])
        if i % 4 == 0:
            t = t[1:] + t[:1]
            t = [sbox(b) for b in t]
            t[0] ^= rcon
            rcon = gmul(rcon, 2)
        w.append([a ^ b for a, b in zip(w[i - 4], t)])
    return bytes(b for word in w for b in word)


# ---------------------------------------------------------------- LZ78 + envelope

def lz78_compress(data):
    d = {}
    tokens = []
    cur = 0
    for b in data:
        if (cur, b) in d:
            cur = d[(cur, b)]
        else:
            tokens.append((cur, b))
            d[(cur, b)] = len(d) + 1
            cur = 0
    if cur:
        tokens.append((cur, None))
    return tokens


def lz78_encode(tokens):
    out = bytearray()
    for idx, sym in tokens:
        while True:
            b = idx & 0x7F
            idx >>= 7
            if idx:
                out.append(b | 0x80)
            else:
                out.append(b)
                break
        if sym is None:
            out.append(0)
        else:
            out += bytes([1, sym])
    return bytes(out)


def encrypt_message(master, nonce, plaintext, compress):
    data = lz78_encode(lz78_compress(plaintext)) if compress else bytes(plaintext)
    k1 = key1_of(master)
    k2 = key2_of(k1)
    k3 = key3_of(k2)
    fk = bytes(a ^ b ^ c for a, b, c in zip(k1, k2, k3))
    ks = keystream(k1, fk, len(data))
    white = bytes(a ^ b for a, b in zip(data, ks))
    rk = round_keys(k1)
    payload = bytearray()
    for i in range(0, len(white), 16):
        ctr = aes_encrypt(bytes(nonce) + (i // 16).to_bytes(4, "big"), rk)
        chunk = white[i:i + 16]
        payload += bytes(a ^ b for a, b in zip(chunk, ctr))
    header = b"CLAES" + bytes([1, 1 if compress else 0]) + bytes(nonce)
    header += len(plaintext).to_bytes(8, "big")
    return header + bytes(payload)


# ---------------------------------------------------------------- output

MASTER_KEYS = [
    ("zero16", bytes(16)),
    ("counting16", bytes(range(16))),
    ("ascii24", b"smart-home-gateway-key-1"),
]


def cxx_array(name, data):
    body = ", ".join(f"0x{b:02x}" for b in data)
    return f"inline constexpr std::array<std::uint8_t, {len(data)}> {name}{{{body}}};"


def emit():
    lines = [
        "// Generated by tests/oracle/reference.py. Do not edit.",
        "// clang-format off",
    ]
    for name, mk in MASTER_KEYS:
        k1 = key1_of(mk)
        k2 = key2_of(k1)
        k3 = key3_of(k2)
        fk = bytes(a ^ b ^ c for a, b, c in zip(k1, k2, k3))
        lines.append(f"namespace {name} {{")
        lines.append(cxx_array("master", mk))
        lines.append(cxx_array("key1", k1[:64]))
        lines.append(cxx_array("key2", k2[:64]))
        lines.append(cxx_array("key3", k3[:64]))
        lines.append(cxx_array("final_key", fk[:64]))
        lines.append(cxx_array("keystream", keystream(k1, fk, 64)))
        lines.append(cxx_array("round_keys", round_keys(k1)[:64]))
        lines.append(cxx_array("baseline", baseline(k1, 64)))
        lines.append(f"}}  // namespace {name}")

    m = 0x0FEDCBA987654321
    for _ in range(10):
        m = step(m)
    lines.append(f"inline constexpr std::uint64_t step10_from_0fedcba987654321 = 0x{m:016x}ULL;")
    lines.append(f"inline constexpr std::uint64_t seeded_zero_prefix = 0x{seed_prefix(bytes(9), 0):016x}ULL;")
    lines.append("inline constexpr std::uint64_t seeded_counting_prefix_5a = "
                 f"0x{seed_prefix(bytes(range(1, 10)), 0x5A):016x}ULL;")
    ch = Chaos(seed_prefix(bytes(9), 0))
    lines.append(f"inline constexpr std::uint8_t first_byte_zero_prefix = 0x{ch.byte():02x};")

    lines.append(cxx_array("lfsr_from_01", lfsr_stream(0x01, 8)))
    lines.append(cxx_array("key3_of_aa55", key3_of(bytes([0xAA, 0x55]))))
    lines.append(cxx_array("key1_of_0001", key1_of(bytes([0, 1]))))
    lines.append(cxx_array("baseline_262626", baseline(bytes([26, 26, 26]), 4)))

    lines.append(cxx_array("aes_zero_block_zero_keys", aes_encrypt(bytes(16), bytes(176))))
    lines.append(cxx_array("rijndael_zero_key", rijndael_expand(bytes(16))))
    std_rk = rijndael_expand(bytes(range(16)))
    lines.append(cxx_array("aes_fips197_c1",
                           aes_encrypt(bytes.fromhex("00112233445566778899aabbccddeeff"), std_rk)))

    nonce = bytes(range(0xA0, 0xAC))
    pt = bytes((i * 7 + 3) & 0xFF for i in range(64))
    lines.append(cxx_array("envelope_nonce", nonce))
    lines.append(cxx_array("envelope_plaintext", pt))
    lines.append(cxx_array("envelope_plain", encrypt_message(bytes(range(16)), nonce, pt, False)))
    lines.append(cxx_array("envelope_lz78", encrypt_message(bytes(range(16)), nonce, pt, True)))
    lines.append("// clang-format on")
    return "\n".join(lines) + "\n"


def self_check():
    # FIPS-197 appendix C.1
    rk = rijndael_expand(bytes(range(16)))
    ct = aes_encrypt(bytes.fromhex("00112233445566778899aabbccddeeff"), rk)
    assert ct.hex() == "69c4e0d86a7b0430d8cdb78070b4c55a", ct.hex()
    try:
        from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes
        import os
        for _ in range(32):
            key, blk = os.urandom(16), os.urandom(16)
            enc = Cipher(algorithms.AES(key), modes.ECB()).encryptor()
            assert enc.update(blk) + enc.finalize() == aes_encrypt(blk, rijndael_expand(key))
    except ImportError:
        pass
    # LFSR maximal length
    for seed in range(1, 256):
        assert len(set(lfsr_stream(seed, 255))) == 255
    assert mix64(0x9E3779B97F4A7C15) == 0xE220A8397B1DCDAF  # first splitmix64 output, seed 0
    assert step(1 << 62) == (39999 * (1 << 61)) // 10000
    assert len(lz78_compress(b"A" * 10000)) == 141


if __name__ == "__main__":
    self_check()
    text = emit()
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
