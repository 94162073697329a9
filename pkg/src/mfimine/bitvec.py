"""Fixed-width-word bit vectors backed by Python's arbitrary precision ints.

One bit per transaction (or per stored pattern).  The underlying int gives
C-speed AND and popcount; the word() accessors expose the vector as a
sequence of W-bit machine words for the indexing layers.
"""

from __future__ import annotations


class BitVec:
    """A bit vector of fixed length ``nbits`` viewed as W-bit words.

    Bit j of item i's vector corresponds to transaction (or pattern) j;
    bit 0 is the lowest index (little-endian within a word).  Bits at
    positions >= nbits are always zero.
    """

    __slots__ = ("_v", "nbits", "width")

    def __init__(self, nbits: int, width: int = 64):
        if nbits < 0:
            raise ValueError("nbits must be >= 0")
        if width <= 0:
            raise ValueError("width must be positive")
        self._v = 0
        self.nbits = nbits
        self.width = width

    @classmethod
    def from_indices(cls, nbits: int, indices, width: int = 64) -> "BitVec":
        v = cls(nbits, width)
        acc = 0
        for i in indices:
            if not 0 <= i < nbits:
                raise IndexError(f"bit index {i} out of range for nbits={nbits}")
            acc |= 1 << i
        v._v = acc
        return v

    @classmethod
    def from_string(cls, s: str, width: int = 64) -> "BitVec":
        """Parse "10110" style strings; the first character is bit 0."""
        v = cls(len(s), width)
        acc = 0
        for pos, ch in enumerate(s):
            if ch == "1":
                acc |= 1 << pos
            elif ch != "0":
                raise ValueError(f"invalid bit character {ch!r}")
        v._v = acc
        return v

    @property
    def value(self) -> int:
        """The underlying integer; bit j set iff position j is set."""
        return self._v

    def set(self, i: int) -> None:
        if not 0 <= i < self.nbits:
            raise IndexError(f"bit index {i} out of range for nbits={self.nbits}")
        self._v |= 1 << i

    def test(self, i: int) -> bool:
        if not 0 <= i < self.nbits:
            raise IndexError(f"bit index {i} out of range for nbits={self.nbits}")
        return (self._v >> i) & 1 == 1

    def popcount(self) -> int:
        return self._v.bit_count()

    def is_zero(self) -> bool:
        return self._v == 0

    def word_count(self) -> int:
        return (self.nbits + self.width - 1) // self.width

    def word(self, w: int) -> int:
        """The w-th W-bit word, padding included (always zero past nbits)."""
        return (self._v >> (w * self.width)) & ((1 << self.width) - 1)

    def words(self) -> list:
        return [self.word(w) for w in range(self.word_count())]

    def to_indices(self) -> list:
        out = []
        v = self._v
        while v:
            low = v & -v
            out.append(low.bit_length() - 1)
            v ^= low
        return out

    def __len__(self) -> int:
        return self.nbits

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVec):
            return NotImplemented
        return self.nbits == other.nbits and self._v == other._v

    def __repr__(self) -> str:
        return f"BitVec(nbits={self.nbits}, popcount={self.popcount()})"


def and_into(dst: BitVec, a: BitVec, b: BitVec) -> int:
    """dst = a AND b, returning popcount(dst) in the same pass.

    All three vectors must have equal nbits; a length mismatch is a
    programming bug, not a data error.
    """
    if a.nbits != b.nbits or dst.nbits != a.nbits:
        raise ValueError(
            f"nbits mismatch: dst={dst.nbits} a={a.nbits} b={b.nbits}"
        )
    r = a._v & b._v
    dst._v = r
    return r.bit_count()
