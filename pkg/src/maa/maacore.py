"""The three MAA phases and the streaming per-block MAC state machine.

A 64-bit key (J, K) is expanded once by the prelude into six blocks:
starting values X0, Y0, V0, a per-block constant W, and two coda blocks
S, T.  The main loop consumes one message block per step, updating X, Y
and a rotating V.  The coda runs the main loop twice more, on S then T,
and the MAC is XOR(X, Y).

Messages longer than 256 blocks are processed in segments: the MAC of
each segment is fed as the leading block of the next one, restarting the
registers from their prelude values, and the last segment's result is
the overall MAC.  MacStream reproduces this cycle by cycle.
"""

from dataclasses import dataclass

from .wordcore import (
    Block, Octet, add_block, and_block, or_block, xor_block,
)
from .maaops import (
    FIX1_AND_MASK, FIX1_OR_MASK, FIX2_AND_MASK, FIX2_OR_MASK,
    byt, cyc, fix1, fix2, mul1, mul2, mul2a, pat, q,
)

# ISO's bound on message length, in 32-bit blocks.  Not inherent to the
# algorithm, so callers may raise or lower it per stream.
MESSAGE_BLOCK_LIMIT = 1_000_000

SEGMENT_BLOCKS = 256


class EmptyMessageError(ValueError):
    """The MAC of a zero-block message is undefined; we reject it."""


class MessageLimitError(ValueError):
    pass


@dataclass(frozen=True)
class Key:
    """The 64-bit key as two blocks.  J seeds X/Y, K seeds V/W/S/T."""
    J: Block
    K: Block

    @classmethod
    def from_hex(cls, j, k):
        return cls(Block.from_hex(j), Block.from_hex(k))


@dataclass(frozen=True)
class PreludeOut:
    X0: Block
    Y0: Block
    V0: Block
    W: Block
    S: Block
    T: Block


@dataclass(frozen=True)
class PreludeIntermediates:
    """Every intermediate of the key expansion, for vector checks.

    J1/K1 are the byte-adjusted key halves and P the pattern octet of the
    raw key.  J1n/J2n are the MUL1/MUL2 power ladders of J1 (exponents 2,
    4, 6, 8), K1n/K2n those of K1 (exponents 2, 4, 5, 7, 9), and the H
    blocks combine them pairwise before the final byte adjustment.
    """
    J1: Block
    K1: Block
    P: Octet
    J12: Block
    J14: Block
    J16: Block
    J18: Block
    J22: Block
    J24: Block
    J26: Block
    J28: Block
    K12: Block
    K14: Block
    K15: Block
    K17: Block
    K19: Block
    K22: Block
    K24: Block
    K25: Block
    K27: Block
    K29: Block
    H0: Block
    H4: Block
    H5: Block
    H6: Block
    H7: Block
    H8: Block
    H9: Block


@dataclass(frozen=True)
class LoopMasks:
    """The OR/AND mask pairs applied ahead of the two multiplications.

    The vector tables exercise the loop with small substitute masks, so
    the instrumented iteration takes them as a parameter; TRUE_MASKS are
    the algorithm's own.
    """
    or1: Block
    and1: Block
    or2: Block
    and2: Block


TRUE_MASKS = LoopMasks(FIX1_OR_MASK, FIX1_AND_MASK, FIX2_OR_MASK, FIX2_AND_MASK)


@dataclass(frozen=True)
class LoopTrace:
    """All intermediates of one instrumented main-loop iteration."""
    Vp: Block
    E: Block
    X: Block
    Y: Block
    F: Block
    G: Block
    Fp: Block
    Gp: Block
    Fpp: Block
    Gpp: Block
    Xp: Block
    Yp: Block
    Z: Block


def power_chain(j1, k1, p):
    """The prelude's multiplicative core, from adjusted key halves.

    Raises J1 and K1 through both multiplier ladders and combines the
    powers into the H blocks.  Split out from prelude() because the
    vector tables drive it with hand-picked J1/K1/P directly.
    """
    j12 = mul1(j1, j1)
    j14 = mul1(j12, j12)
    j16 = mul1(j12, j14)
    j18 = mul1(j12, j16)
    j22 = mul2(j1, j1)
    j24 = mul2(j22, j22)
    j26 = mul2(j22, j24)
    j28 = mul2(j22, j26)
    k12 = mul1(k1, k1)
    k14 = mul1(k12, k12)
    k15 = mul1(k1, k14)
    k17 = mul1(k12, k15)
    k19 = mul1(k12, k17)
    k22 = mul2(k1, k1)
    k24 = mul2(k22, k22)
    k25 = mul2(k1, k24)
    k27 = mul2(k22, k25)
    k29 = mul2(k22, k27)
    h4 = xor_block(j14, j24)
    h6 = xor_block(j16, j26)
    h8 = xor_block(j18, j28)
    h0 = xor_block(k15, k25)
    h5 = mul2(h0, q(p))
    h7 = xor_block(k17, k27)
    h9 = xor_block(k19, k29)
    return PreludeIntermediates(
        J1=j1, K1=k1, P=p,
        J12=j12, J14=j14, J16=j16, J18=j18,
        J22=j22, J24=j24, J26=j26, J28=j28,
        K12=k12, K14=k14, K15=k15, K17=k17, K19=k19,
        K22=k22, K24=k24, K25=k25, K27=k27, K29=k29,
        H0=h0, H4=h4, H5=h5, H6=h6, H7=h7, H8=h8, H9=h9,
    )


def prelude(key):
    """Expand the key into (X0, Y0, V0, W, S, T), plus all intermediates.

    The pattern octet P comes from the raw key blocks; the power ladders
    run on the byte-adjusted ones.
    """
    j1, k1 = byt(key.J, key.K)
    p = pat(key.J, key.K)
    im = power_chain(j1, k1, p)
    x0, y0 = byt(im.H4, im.H5)
    v0, w = byt(im.H6, im.H7)
    s, t = byt(im.H8, im.H9)
    return PreludeOut(x0, y0, v0, w, s, t), im


def main_loop(x, y, v, w, block):
    """One iteration: rotate V, mix the block in, cross-multiply X and Y."""
    v2 = cyc(v)
    e = xor_block(v2, w)
    xm = xor_block(x, block)
    ym = xor_block(y, block)
    x2 = mul1(xm, fix1(add_block(ym, e)))
    y2 = mul2a(ym, fix2(add_block(xm, e)))
    return x2, y2, v2


def main_loop2(x0, y0, v0, w, z, block):
    """Segment-boundary step: absorb the previous segment's MAC, then the
    block, restarting from the prelude registers."""
    x, y, v = main_loop(x0, y0, v0, w, z)
    return main_loop(x, y, v, w, block)


def loop_trace(x, y, v, w, block, masks=TRUE_MASKS):
    """One main-loop iteration with every intermediate exposed.

    Identical arithmetic to main_loop, decomposed to the granularity of
    the published tables, with the conditioning masks substitutable.
    The trailing Z is simply XOR(Xp, Yp).
    """
    vp = cyc(v)
    e = xor_block(vp, w)
    xm = xor_block(x, block)
    ym = xor_block(y, block)
    f = add_block(e, ym)
    g = add_block(e, xm)
    fp = or_block(f, masks.or1)
    gp = or_block(g, masks.or2)
    fpp = and_block(fp, masks.and1)
    gpp = and_block(gp, masks.and2)
    xp = mul1(xm, fpp)
    yp = mul2a(ym, gpp)
    return LoopTrace(Vp=vp, E=e, X=xm, Y=ym, F=f, G=g, Fp=fp, Gp=gp,
                     Fpp=fpp, Gpp=gpp, Xp=xp, Yp=yp, Z=xor_block(xp, yp))


def coda(x, y, v, w, s, t):
    """Finalize: two more main-loop iterations on S then T, MAC = XOR(X, Y)."""
    x1, y1, v1 = main_loop(x, y, v, w, s)
    x2, y2, _ = main_loop(x1, y1, v1, w, t)
    return xor_block(x2, y2)


class StepResult:
    """Registers after one pushed block.

    z is the per-cycle MAC (the coda applied to this state); it is
    computed on first access and only then, so callers that ignore it pay
    nothing.  The snapshot is immutable: z stays valid after the stream
    moves on.
    """

    __slots__ = ("x", "y", "v", "_ws", "_z")

    def __init__(self, x, y, v, ws):
        self.x = x
        self.y = y
        self.v = v
        self._ws = ws
        self._z = None

    @property
    def z(self):
        if self._z is None:
            w, s, t = self._ws
            self._z = coda(self.x, self.y, self.v, w, s, t)
        return self._z


class MacStream:
    """Per-block MAC computation with the segmented mode of operation.

    Push blocks one at a time; mac() is the MAC of everything pushed so
    far.  Internally n counts 0..255 within the current segment, and the
    push after n reaches 255 starts a new segment: the previous segment's
    MAC is absorbed first, with the registers restarted from their
    prelude values.  The key is consulted only at construction.
    """

    def __init__(self, key, limit=MESSAGE_BLOCK_LIMIT):
        if limit < 1:
            raise ValueError("block limit must be at least 1")
        self.key = key
        self.limit = limit
        self.prelude, _ = prelude(key)
        self.X = None
        self.Y = None
        self.V = None
        self.last_z = None
        self.n = 0
        self.total_blocks = 0
        self.started = False

    def push(self, block):
        if self.total_blocks >= self.limit:
            raise MessageLimitError(
                f"message exceeds the {self.limit}-block limit "
                f"(ISO 8731-2 default is {MESSAGE_BLOCK_LIMIT})")
        pre = self.prelude
        if not self.started:
            self.started = True
            self.n = 0
            x, y, v = main_loop(pre.X0, pre.Y0, pre.V0, pre.W, block)
        elif self.n == 255:
            self.n = 0
            x, y, v = main_loop2(pre.X0, pre.Y0, pre.V0, pre.W,
                                 self._coda(), block)
        else:
            self.n += 1
            x, y, v = main_loop(self.X, self.Y, self.V, pre.W, block)
        self.X, self.Y, self.V = x, y, v
        self.last_z = None
        self.total_blocks += 1
        return StepResult(x, y, v, (pre.W, pre.S, pre.T))

    def _coda(self):
        if self.last_z is None:
            pre = self.prelude
            self.last_z = coda(self.X, self.Y, self.V, pre.W, pre.S, pre.T)
        return self.last_z

    def mac(self):
        """MAC of all blocks pushed so far."""
        if not self.started:
            raise EmptyMessageError("no blocks pushed; the MAC of an empty "
                                    "message is undefined")
        return self._coda()


def mac_stream_new(key, limit=MESSAGE_BLOCK_LIMIT):
    return MacStream(key, limit)


def mac_stream_push(stream, block):
    return stream.push(block)


def mac_blocks(key, blocks, limit=MESSAGE_BLOCK_LIMIT):
    """MAC of a block sequence."""
    stream = MacStream(key, limit)
    for b in blocks:
        stream.push(b)
    return stream.mac()


def message_blocks(payload):
    """Split bytes into blocks: zero-pad to a multiple of 4, group
    big-endian."""
    if not payload:
        raise EmptyMessageError("message must contain at least one byte")
    padded = bytes(payload) + b"\x00" * (-len(payload) % 4)
    return [Block.from_int(int.from_bytes(padded[i:i + 4], "big"))
            for i in range(0, len(padded), 4)]


def mac_message(key, payload, limit=MESSAGE_BLOCK_LIMIT):
    """MAC of a byte string."""
    return mac_blocks(key, message_blocks(payload), limit)
