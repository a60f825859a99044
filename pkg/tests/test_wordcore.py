"""The bit-level layer against plain integer arithmetic."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from maa.wordcore import (
    Block, CarrySum, Half, Octet, Pair, ONE, ZERO,
    add_bit, add_block, add_block_carry, add_half, add_half_carry,
    add_octet, add_octet_carry, and_block, and_octet, block_from_half,
    car_bit, half_from_octet, lower_half, mul_block, mul_half, mul_octet,
    not_octet, octet_logic, or_block, or_octet, shift_octet, upper_half,
    xor_block, xor_octet,
)

octets = st.integers(0, 255)
halves = st.integers(0, 0xFFFF)
words = st.integers(0, 0xFFFFFFFF)


def test_bit_adder_truth_table():
    for a in (ZERO, ONE):
        for b in (ZERO, ONE):
            for c in (ZERO, ONE):
                total = a + b + c
                assert add_bit(a, b, c) == total & 1
                assert car_bit(a, b, c) == total >> 1


def test_octet_interning():
    for v in range(256):
        assert Octet.from_int(v) is Octet.from_int(v)
    assert Octet.from_hex("ff") is Octet.from_hex("FF")
    a = Octet.from_int(0xA5)
    assert Octet.from_bits(a.bits) is a
    assert a.hex() == "A5"
    assert a.bits[0] == 1 and a.bits[7] == 1 and a.bits[1] == 0


def test_octet_logic_exhaustive():
    for a in range(256):
        oa = Octet.from_int(a)
        assert not_octet(oa).value == a ^ 0xFF
        for b in range(0, 256, 7):
            ob = Octet.from_int(b)
            assert and_octet(oa, ob).value == a & b
            assert or_octet(oa, ob).value == a | b
            assert xor_octet(oa, ob).value == a ^ b


def test_octet_logic_dispatch():
    a, b = Octet.from_int(0x3C), Octet.from_int(0x55)
    assert octet_logic("AND", a, b) is and_octet(a, b)
    assert octet_logic("OR", a, b) is or_octet(a, b)
    assert octet_logic("XOR", a, b) is xor_octet(a, b)
    assert octet_logic("NOT", a) is not_octet(a)
    with pytest.raises(ValueError):
        octet_logic("NOT", a, b)
    with pytest.raises(ValueError):
        octet_logic("AND", a)
    with pytest.raises(ValueError):
        octet_logic("NAND", a, b)


def test_shift_octet_exhaustive():
    for a in range(256):
        oa = Octet.from_int(a)
        for n in range(1, 8):
            assert shift_octet(oa, n, "left").value == (a << n) & 0xFF
            assert shift_octet(oa, n, "right").value == a >> n


def test_shift_octet_rejects_bad_arguments():
    a = Octet.from_int(1)
    for n in (0, 8, -1):
        with pytest.raises(ValueError):
            shift_octet(a, n, "left")
    with pytest.raises(ValueError):
        shift_octet(a, 1, "up")


@given(octets, octets, st.integers(0, 1))
def test_octet_adder(a, b, cin):
    carry, total = add_octet_carry(Octet.from_int(a), Octet.from_int(b), cin)
    assert carry == (a + b + cin) >> 8
    assert total.value == (a + b + cin) & 0xFF
    assert add_octet(Octet.from_int(a), Octet.from_int(b)).value == (a + b) & 0xFF


@given(octets, octets)
def test_octet_multiplier(a, b):
    assert mul_octet(Octet.from_int(a), Octet.from_int(b)).value == a * b


def test_octet_multiplier_edges():
    for a, b in [(0, 0), (0, 255), (255, 0), (255, 255), (1, 255), (128, 2)]:
        assert mul_octet(Octet.from_int(a), Octet.from_int(b)).value == a * b


def test_hex_round_trips():
    assert Half.from_hex("BEEF").hex() == "BEEF"
    assert Half.from_hex("beef").value == 0xBEEF
    assert Block.from_hex("DeadBeef").hex() == "DEADBEEF"
    assert Pair.from_hex("0123456789ABCDEF").hex() == "0123456789ABCDEF"
    with pytest.raises(ValueError):
        Block.from_hex("123")
    with pytest.raises(ValueError):
        Block.from_hex("123456789")
    with pytest.raises(ValueError):
        Half.from_hex("XYZW")


def test_value_equality_and_hash():
    a = Block.from_hex("00000005")
    b = Block.from_int(5)
    assert a == b and hash(a) == hash(b)
    assert a != Block.from_int(6)
    assert a != 5
    assert Pair.from_int(7) == Pair(Block.from_int(0), Block.from_int(7))


def test_block_octet_structure():
    w = Block.from_hex("01020304")
    assert [o.value for o in w.octets()] == [1, 2, 3, 4]
    assert upper_half(w).hex() == "0102"
    assert lower_half(w).hex() == "0304"
    assert block_from_half(lower_half(w)).hex() == "00000304"
    assert half_from_octet(Octet.from_int(9)).hex() == "0009"


@given(halves, halves)
def test_half_adder(a, b):
    carry, total = add_half_carry(Half.from_int(a), Half.from_int(b))
    assert carry == (a + b) >> 16
    assert total.value == (a + b) & 0xFFFF
    assert add_half(Half.from_int(a), Half.from_int(b)).value == (a + b) & 0xFFFF


@given(words, words)
def test_block_adder(a, b):
    carry, total = add_block_carry(Block.from_int(a), Block.from_int(b))
    assert carry == (a + b) >> 32
    assert total.value == (a + b) & 0xFFFFFFFF
    assert add_block(Block.from_int(a), Block.from_int(b)).value == (a + b) & 0xFFFFFFFF


@given(words, words)
def test_block_logic(a, b):
    wa, wb = Block.from_int(a), Block.from_int(b)
    assert and_block(wa, wb).value == a & b
    assert or_block(wa, wb).value == a | b
    assert xor_block(wa, wb).value == a ^ b


@given(halves, halves)
def test_half_multiplier(a, b):
    # 16 x 16 bits fits a block exactly, so the oracle is plain *
    assert mul_half(Half.from_int(a), Half.from_int(b)).value == a * b


@given(words, words)
def test_block_multiplier(a, b):
    product = mul_block(Block.from_int(a), Block.from_int(b))
    assert product.value == a * b
    assert product.w1.value == a * b >> 32
    assert product.w2.value == a * b & 0xFFFFFFFF


def test_block_multiplier_edges():
    top = 0xFFFFFFFF
    for a, b in [(0, 0), (top, top), (top, 1), (1, top), (0x80000000, 2)]:
        assert mul_block(Block.from_int(a), Block.from_int(b)).value == a * b


def test_carry_sum_shape():
    cs = add_octet_carry(Octet.from_int(200), Octet.from_int(100), ONE)
    assert isinstance(cs, CarrySum)
    assert cs.carry == 1 and cs.sum.value == 45
