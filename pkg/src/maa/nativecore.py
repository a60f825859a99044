"""A second, independent MAA implementation on host-machine integers.

Same algorithm as maaops/maacore, re-expressed over plain ints with
64-bit intermediate products.  It serves two purposes: a fast core for
real use, and a differential oracle for the gate-level construction
(and vice versa; neither shares code with the other beyond this module's
boundary conversions).

The carry folds are written out literally, step for step, rather than as
% reductions: a remainder would agree with the fold almost everywhere
but may pick the other representative of a degenerate residue, and the
published vectors pin the fold's pick.
"""

from .maacore import (
    EmptyMessageError, Key, MESSAGE_BLOCK_LIMIT, MessageLimitError,
)
from .wordcore import Block

MASK32 = 0xFFFFFFFF

FIX1_OR = 0x02040801
FIX1_AND = 0xBFEF7FDF
FIX2_OR = 0x00804021
FIX2_AND = 0x7DFEFBFF


def cyc(w):
    return (w << 1 | w >> 31) & MASK32


def fix1(w):
    return (w | FIX1_OR) & FIX1_AND


def fix2(w):
    return (w | FIX2_OR) & FIX2_AND


def _bytes_of(w1, w2):
    return ((w1 >> 24) & 0xFF, (w1 >> 16) & 0xFF, (w1 >> 8) & 0xFF, w1 & 0xFF,
            (w2 >> 24) & 0xFF, (w2 >> 16) & 0xFF, (w2 >> 8) & 0xFF, w2 & 0xFF)


def pat(w1, w2):
    p = 0
    for b in _bytes_of(w1, w2):
        p = p << 1 | (b == 0x00 or b == 0xFF)
    return p


def byt(w1, w2):
    p = pat(w1, w2)
    out = []
    for j, b in enumerate(_bytes_of(w1, w2)):
        if b == 0x00 or b == 0xFF:
            b ^= p >> (7 - j) & 0xFF
        out.append(b)
    a = out[0] << 24 | out[1] << 16 | out[2] << 8 | out[3]
    b = out[4] << 24 | out[5] << 16 | out[6] << 8 | out[7]
    return a, b


def mul1(a, b):
    p = a * b
    u, l = p >> 32, p & MASK32
    s = u + l
    c, s = s >> 32, s & MASK32
    return (s + c) & MASK32


def mul2(a, b):
    p = a * b
    u, l = p >> 32, p & MASK32
    d = u + u
    c1, s1 = d >> 32, d & MASK32
    w3 = (s1 + 2 * c1) & MASK32
    f = w3 + l
    c2, s2 = f >> 32, f & MASK32
    return (s2 + 2 * c2) & MASK32


def mul2a(a, b):
    p = a * b
    u, l = p >> 32, p & MASK32
    w3 = (u + u) & MASK32
    f = w3 + l
    c, s = f >> 32, f & MASK32
    return (s + 2 * c) & MASK32


def q(o):
    return (o + 1) * (o + 1)


def power_chain(j1, k1, p):
    """Prelude power ladders and H blocks, keyed like the gate-level
    intermediates record."""
    im = {"J1": j1, "K1": k1, "P": p}
    im["J12"] = mul1(j1, j1)
    im["J14"] = mul1(im["J12"], im["J12"])
    im["J16"] = mul1(im["J12"], im["J14"])
    im["J18"] = mul1(im["J12"], im["J16"])
    im["J22"] = mul2(j1, j1)
    im["J24"] = mul2(im["J22"], im["J22"])
    im["J26"] = mul2(im["J22"], im["J24"])
    im["J28"] = mul2(im["J22"], im["J26"])
    im["K12"] = mul1(k1, k1)
    im["K14"] = mul1(im["K12"], im["K12"])
    im["K15"] = mul1(k1, im["K14"])
    im["K17"] = mul1(im["K12"], im["K15"])
    im["K19"] = mul1(im["K12"], im["K17"])
    im["K22"] = mul2(k1, k1)
    im["K24"] = mul2(im["K22"], im["K22"])
    im["K25"] = mul2(k1, im["K24"])
    im["K27"] = mul2(im["K22"], im["K25"])
    im["K29"] = mul2(im["K22"], im["K27"])
    im["H4"] = im["J14"] ^ im["J24"]
    im["H6"] = im["J16"] ^ im["J26"]
    im["H8"] = im["J18"] ^ im["J28"]
    im["H0"] = im["K15"] ^ im["K25"]
    im["H5"] = mul2(im["H0"], q(p))
    im["H7"] = im["K17"] ^ im["K27"]
    im["H9"] = im["K19"] ^ im["K29"]
    return im


def prelude(j, k):
    j1, k1 = byt(j, k)
    im = power_chain(j1, k1, pat(j, k))
    x0, y0 = byt(im["H4"], im["H5"])
    v0, w = byt(im["H6"], im["H7"])
    s, t = byt(im["H8"], im["H9"])
    return x0, y0, v0, w, s, t


def main_loop(x, y, v, w, block):
    v = cyc(v)
    e = v ^ w
    xm = x ^ block
    ym = y ^ block
    x2 = mul1(xm, fix1((ym + e) & MASK32))
    y2 = mul2a(ym, fix2((xm + e) & MASK32))
    return x2, y2, v


def loop_trace(x, y, v, w, block, masks=(FIX1_OR, FIX1_AND, FIX2_OR, FIX2_AND)):
    """Instrumented iteration; masks is (or1, and1, or2, and2)."""
    or1, and1, or2, and2 = masks
    vp = cyc(v)
    e = vp ^ w
    xm = x ^ block
    ym = y ^ block
    f = (e + ym) & MASK32
    g = (e + xm) & MASK32
    fpp = (f | or1) & and1
    gpp = (g | or2) & and2
    xp = mul1(xm, fpp)
    yp = mul2a(ym, gpp)
    return {"Vp": vp, "E": e, "X": xm, "Y": ym, "F": f, "G": g,
            "Fp": f | or1, "Gp": g | or2, "Fpp": fpp, "Gpp": gpp,
            "Xp": xp, "Yp": yp, "Z": xp ^ yp}


def coda(x, y, v, w, s, t):
    x, y, v = main_loop(x, y, v, w, s)
    x, y, _ = main_loop(x, y, v, w, t)
    return x ^ y


def mac_values(j, k, values, limit=MESSAGE_BLOCK_LIMIT):
    """MAC over a sequence of 32-bit block values, segmented mode."""
    x0, y0, v0, w, s, t = prelude(j, k)
    x = y = v = None
    count = 0
    for m in values:
        if count >= limit:
            raise MessageLimitError(
                f"message exceeds the {limit}-block limit "
                f"(ISO 8731-2 default is {MESSAGE_BLOCK_LIMIT})")
        if count == 0:
            x, y, v = main_loop(x0, y0, v0, w, m)
        elif count % 256 == 0:
            z = coda(x, y, v, w, s, t)
            x, y, v = main_loop(x0, y0, v0, w, z)
            x, y, v = main_loop(x, y, v, w, m)
        else:
            x, y, v = main_loop(x, y, v, w, m)
        count += 1
    if count == 0:
        raise EmptyMessageError("no blocks; the MAC of an empty message is "
                                "undefined")
    return coda(x, y, v, w, s, t)


def native_mac(key, blocks, limit=MESSAGE_BLOCK_LIMIT):
    """Block-typed front door, bit-identical to the gate-level stream."""
    z = mac_values(key.J.value, key.K.value, (b.value for b in blocks), limit)
    return Block.from_int(z)


native_mul1 = mul1
native_mul2 = mul2
native_mul2a = mul2a
