"""Gate-level machine words: bits, octets, half-words, blocks, 64-bit pairs.

Everything is built upward from single-bit gates: ripple-carry adders,
shift-and-add multipliers, bitwise logic applied position by position.
Host integers appear only as labels (for rendering, hashing, and conversion
at the package boundary); no arithmetic result is ever produced by a native
+ or *.  The big-endian convention holds throughout: bit index 0 of an
octet is its most significant bit, octet o1 of a block is its most
significant byte.

Pure single-octet operations are memoized.  Memoizing a pure function is
lookup-table reuse; each table entry is still computed once through the
full gate construction.
"""

from functools import cache
from typing import NamedTuple

ZERO = 0
ONE = 1


def and_bit(a, b):
    return a & b


def or_bit(a, b):
    return a | b


def xor_bit(a, b):
    return a ^ b


def not_bit(a):
    return a ^ 1


def add_bit(a, b, c):
    """Sum output of a one-bit full adder."""
    return xor_bit(xor_bit(a, b), c)


def car_bit(a, b, c):
    """Carry output of a one-bit full adder."""
    return or_bit(and_bit(and_bit(a, b), not_bit(c)),
                  and_bit(or_bit(a, b), c))


class Octet:
    """An 8-bit word held as a tuple of eight bits, most significant first.

    Instances are interned: exactly 256 exist, so identity, equality and
    hashing coincide.  `value` is the integer label of the bit pattern.
    """

    __slots__ = ("bits", "value")

    def __init__(self, bits, value):
        self.bits = bits
        self.value = value

    @classmethod
    def from_bits(cls, bits):
        v = 0
        for b in bits:
            v = v << 1 | b
        return _OCTETS[v]

    @classmethod
    def from_int(cls, v):
        if not 0 <= v <= 0xFF:
            raise ValueError(f"octet value out of range: {v}")
        return _OCTETS[v]

    @classmethod
    def from_hex(cls, s):
        return cls.from_int(_parse_hex(s, 2))

    def hex(self):
        return f"{self.value:02X}"

    def __repr__(self):
        return f"Octet({self.hex()})"


_OCTETS = tuple(
    Octet(tuple(v >> (7 - i) & 1 for i in range(8)), v) for v in range(256)
)

X00 = _OCTETS[0x00]
X01 = _OCTETS[0x01]
XFF = _OCTETS[0xFF]


def _parse_hex(s, width):
    if len(s) != width:
        raise ValueError(f"expected {width} hex digits, got {s!r}")
    try:
        return int(s, 16)
    except ValueError:
        raise ValueError(f"not a hex string: {s!r}") from None


class Half:
    """A 16-bit word as two octets, most significant first."""

    __slots__ = ("o1", "o2", "value")

    def __init__(self, o1, o2):
        self.o1 = o1
        self.o2 = o2
        self.value = o1.value << 8 | o2.value

    @classmethod
    def from_int(cls, v):
        if not 0 <= v <= 0xFFFF:
            raise ValueError(f"half value out of range: {v}")
        return cls(_OCTETS[v >> 8], _OCTETS[v & 0xFF])

    @classmethod
    def from_hex(cls, s):
        return cls.from_int(_parse_hex(s, 4))

    def hex(self):
        return f"{self.value:04X}"

    def __eq__(self, other):
        return isinstance(other, Half) and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"Half({self.hex()})"


class Block:
    """A 32-bit word as four octets, most significant first.

    The MAA's fundamental unit: message blocks, key halves, the working
    registers and the result are all blocks.
    """

    __slots__ = ("o1", "o2", "o3", "o4", "value")

    def __init__(self, o1, o2, o3, o4):
        self.o1 = o1
        self.o2 = o2
        self.o3 = o3
        self.o4 = o4
        self.value = o1.value << 24 | o2.value << 16 | o3.value << 8 | o4.value

    @classmethod
    def from_int(cls, v):
        if not 0 <= v <= 0xFFFFFFFF:
            raise ValueError(f"block value out of range: {v}")
        return cls(_OCTETS[v >> 24], _OCTETS[v >> 16 & 0xFF],
                   _OCTETS[v >> 8 & 0xFF], _OCTETS[v & 0xFF])

    @classmethod
    def from_hex(cls, s):
        return cls.from_int(_parse_hex(s, 8))

    def hex(self):
        return f"{self.value:08X}"

    def octets(self):
        return (self.o1, self.o2, self.o3, self.o4)

    def __eq__(self, other):
        return isinstance(other, Block) and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"Block({self.hex()})"


class Pair:
    """A 64-bit word as two blocks: w1 holds the upper 32 bits, w2 the lower."""

    __slots__ = ("w1", "w2", "value")

    def __init__(self, w1, w2):
        self.w1 = w1
        self.w2 = w2
        self.value = w1.value << 32 | w2.value

    @classmethod
    def from_int(cls, v):
        if not 0 <= v <= 0xFFFFFFFFFFFFFFFF:
            raise ValueError(f"pair value out of range: {v}")
        return cls(Block.from_int(v >> 32), Block.from_int(v & 0xFFFFFFFF))

    @classmethod
    def from_hex(cls, s):
        return cls.from_int(_parse_hex(s, 16))

    def hex(self):
        return f"{self.value:016X}"

    def __eq__(self, other):
        return isinstance(other, Pair) and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"Pair({self.hex()})"


class CarrySum(NamedTuple):
    """A width+1 bit addition result: carry * 2**width + sum."""
    carry: int
    sum: object


# ---------------------------------------------------------------- octet logic

@cache
def and_octet(a, b):
    return Octet.from_bits(tuple(map(and_bit, a.bits, b.bits)))


@cache
def or_octet(a, b):
    return Octet.from_bits(tuple(map(or_bit, a.bits, b.bits)))


@cache
def xor_octet(a, b):
    return Octet.from_bits(tuple(map(xor_bit, a.bits, b.bits)))


@cache
def not_octet(a):
    return Octet.from_bits(tuple(map(not_bit, a.bits)))


def octet_logic(op, a, b=None):
    """Apply a named bitwise operation across all eight positions.

    op is one of "AND", "OR", "XOR", "NOT"; b must be omitted exactly
    when op is "NOT".
    """
    if op == "NOT":
        if b is not None:
            raise ValueError("NOT takes a single operand")
        return not_octet(a)
    if b is None:
        raise ValueError(f"{op} takes two operands")
    try:
        f = {"AND": and_octet, "OR": or_octet, "XOR": xor_octet}[op]
    except KeyError:
        raise ValueError(f"unknown octet operation: {op!r}") from None
    return f(a, b)


def shift_octet(a, n, direction):
    """Logical shift by n in {1..7}, vacated positions filled with ZERO."""
    if not 1 <= n <= 7:
        raise ValueError(f"shift distance must be 1..7, got {n}")
    if direction == "left":
        return Octet.from_bits(a.bits[n:] + (ZERO,) * n)
    if direction == "right":
        return Octet.from_bits((ZERO,) * n + a.bits[:8 - n])
    raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")


# ------------------------------------------------------------- octet addition

@cache
def add_octet_carry(a, b, cin=ZERO):
    """Ripple-carry 8-bit adder: carry * 256 + sum = a + b + cin."""
    bits = [ZERO] * 8
    carry = cin
    for i in range(7, -1, -1):
        bits[i] = add_bit(a.bits[i], b.bits[i], carry)
        carry = car_bit(a.bits[i], b.bits[i], carry)
    return CarrySum(carry, Octet.from_bits(tuple(bits)))


def add_octet(a, b):
    return add_octet_carry(a, b, ZERO).sum


# ------------------------------------------------------- octet multiplication

def _mul_octet_step(acc, hi, lo):
    # Accumulates one shifted copy of the multiplicand; a carry out of the
    # low octet feeds the high octet as +1.
    o3 = add_octet(acc.o1, hi)
    cs = add_octet_carry(acc.o2, lo, ZERO)
    if cs.carry == ONE:
        o3 = add_octet(o3, X01)
    return Half(o3, cs.sum)


@cache
def mul_octet(a, b):
    """16-bit product by shift-and-add over the bits of a, MSB first.

    Bit i of a (i = 0 is the MSB) contributes b << (7 - i), presented to
    the accumulator as a high/low octet pair.
    """
    acc = Half(X00, X00)
    for i in range(7):
        if a.bits[i] == ONE:
            acc = _mul_octet_step(acc, shift_octet(b, i + 1, "right"),
                                  shift_octet(b, 7 - i, "left"))
    if a.bits[7] == ONE:
        acc = _mul_octet_step(acc, X00, b)
    return acc


# ------------------------------------------------------ half-word arithmetic

def half_from_octet(o):
    """Zero-extend an octet to a half-word."""
    return Half(X00, o)


def add_half_carry(a, b):
    cs2 = add_octet_carry(a.o2, b.o2, ZERO)
    cs1 = add_octet_carry(a.o1, b.o1, cs2.carry)
    return CarrySum(cs1.carry, Half(cs1.sum, cs2.sum))


def add_half(a, b):
    return add_half_carry(a, b).sum


def mul_half(a, b):
    """32-bit product of two half-words from four 8-bit partial products.

    The cross terms are accumulated column by column through the octet
    adders; each hN below is one column of the schoolbook layout.
    """
    h3 = mul_octet(a.o1, b.o1)
    h4 = mul_octet(a.o1, b.o2)
    h5 = mul_octet(a.o2, b.o1)
    h6 = mul_octet(a.o2, b.o2)
    h7 = add_half(half_from_octet(h4.o2),
                  add_half(half_from_octet(h5.o2), half_from_octet(h6.o1)))
    h8 = add_half(half_from_octet(h7.o1),
                  add_half(half_from_octet(h3.o2),
                           add_half(half_from_octet(h4.o1),
                                    half_from_octet(h5.o1))))
    h9 = add_half(half_from_octet(h8.o1), half_from_octet(h3.o1))
    return Block(h9.o2, h8.o2, h7.o2, h6.o2)


# ----------------------------------------------------------- block arithmetic

def and_block(a, b):
    return Block(and_octet(a.o1, b.o1), and_octet(a.o2, b.o2),
                 and_octet(a.o3, b.o3), and_octet(a.o4, b.o4))


def or_block(a, b):
    return Block(or_octet(a.o1, b.o1), or_octet(a.o2, b.o2),
                 or_octet(a.o3, b.o3), or_octet(a.o4, b.o4))


def xor_block(a, b):
    return Block(xor_octet(a.o1, b.o1), xor_octet(a.o2, b.o2),
                 xor_octet(a.o3, b.o3), xor_octet(a.o4, b.o4))


def add_block_carry(a, b):
    """32-bit adder chained through four octet adders, low octet first."""
    cs4 = add_octet_carry(a.o4, b.o4, ZERO)
    cs3 = add_octet_carry(a.o3, b.o3, cs4.carry)
    cs2 = add_octet_carry(a.o2, b.o2, cs3.carry)
    cs1 = add_octet_carry(a.o1, b.o1, cs2.carry)
    return CarrySum(cs1.carry, Block(cs1.sum, cs2.sum, cs3.sum, cs4.sum))


def add_block(a, b):
    return add_block_carry(a, b).sum


def upper_half(w):
    return Half(w.o1, w.o2)


def lower_half(w):
    return Half(w.o3, w.o4)


def block_from_half(h):
    """Zero-extend a half-word to a block."""
    return Block(X00, X00, h.o1, h.o2)


def mul_block(a, b):
    """Exact 64-bit product as Pair(upper, lower).

    Four 16x16 partial products; the middle columns are gathered into w3
    and w4 whose upper halves carry into the next column up, and w5 closes
    the top.  The result pair is assembled from the low halves of w5, w4,
    w3 and w22.
    """
    au, al = upper_half(a), lower_half(a)
    bu, bl = upper_half(b), lower_half(b)
    w11 = mul_half(au, bu)
    w12 = mul_half(au, bl)
    w21 = mul_half(al, bu)
    w22 = mul_half(al, bl)
    w3 = add_block(block_from_half(lower_half(w12)),
                   add_block(block_from_half(lower_half(w21)),
                             block_from_half(upper_half(w22))))
    w4 = add_block(block_from_half(upper_half(w3)),
                   add_block(block_from_half(lower_half(w11)),
                             add_block(block_from_half(upper_half(w12)),
                                       block_from_half(upper_half(w21)))))
    w5 = add_block(block_from_half(upper_half(w4)),
                   block_from_half(upper_half(w11)))
    return Pair(Block(w5.o3, w5.o4, w4.o3, w4.o4),
                Block(w3.o3, w3.o4, w22.o3, w22.o4))
