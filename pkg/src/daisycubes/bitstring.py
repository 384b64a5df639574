"""Fixed-length binary words with the coordinatewise order.

A :class:`BitString` packs its bits into a Python int.  The textual form is
written left to right, bit 1 first, so ``"0011"`` has its ones in positions
3 and 4.  Internally position 1 is the most significant bit, which makes
numeric order agree with the textual (lexicographic) order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

WORD_WIDTH = 64


@dataclass(frozen=True, order=True)
class BitString:
    length: int
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.length <= WORD_WIDTH:
            raise ValueError(f"length {self.length} outside 0..{WORD_WIDTH}")
        if not 0 <= self.value < (1 << self.length):
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def parse(cls, text: str) -> BitString:
        if any(c not in "01" for c in text):
            raise ValueError(f"not a binary string: {text!r}")
        return cls(len(text), int(text, 2) if text else 0)

    @classmethod
    def zeros(cls, n: int) -> BitString:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> BitString:
        return cls(n, (1 << n) - 1)

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    def __repr__(self) -> str:
        return f"BitString({str(self)!r})"

    def __len__(self) -> int:
        return self.length

    def _mask(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(f"position {i} outside 1..{self.length}")
        return 1 << (self.length - i)

    def bit(self, i: int) -> int:
        """Bit at 1-based position ``i`` (position 1 is the leftmost)."""
        return 1 if self.value & self._mask(i) else 0

    def flip(self, i: int) -> BitString:
        return BitString(self.length, self.value ^ self._mask(i))

    def drop(self, i: int) -> BitString:
        """Remove position ``i``, shortening the word by one."""
        self._mask(i)
        s = str(self)
        return BitString.parse(s[: i - 1] + s[i:])

    def prepend(self, b: int) -> BitString:
        return BitString(self.length + 1, (b << self.length) | self.value)

    def weight(self) -> int:
        return bin(self.value).count("1")

    def ones_positions(self) -> list[int]:
        return [i for i in range(1, self.length + 1) if self.value & (1 << (self.length - i))]


def _same_length(u: BitString, v: BitString) -> None:
    if u.length != v.length:
        raise ValueError(f"length mismatch: {u.length} vs {v.length}")


def uniform_length(xs: Iterable[BitString], n: int | None = None) -> int | None:
    """Common length of ``xs``; raises on mixed lengths or a mismatch with ``n``."""
    for x in xs:
        if n is None:
            n = x.length
        elif x.length != n:
            raise ValueError(f"mixed lengths: {x.length} vs {n}")
    return n


def leq(u: BitString, v: BitString) -> bool:
    _same_length(u, v)
    return u.value & ~v.value == 0


def hamming_distance(u: BitString, v: BitString) -> int:
    _same_length(u, v)
    return bin(u.value ^ v.value).count("1")


def lower_covers(u: BitString) -> list[BitString]:
    """Words obtained from ``u`` by clearing a single 1."""
    out = []
    x = u.value
    while x:
        low = x & -x
        out.append(BitString(u.length, u.value ^ low))
        x ^= low
    return out


def downward_closure(xs: Iterable[BitString], n: int) -> set[BitString]:
    """All words of length ``n`` below some member of ``xs``.

    Walks down from the generators one cleared bit at a time, so the cost is
    proportional to the size of the result rather than to ``2**n``.
    """
    xs = list(xs)
    uniform_length(xs, n)
    seen = set(xs)
    queue = deque(seen)
    while queue:
        for y in lower_covers(queue.popleft()):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def reduce_generators(xs: Iterable[BitString]) -> set[BitString]:
    """Maximal elements of ``xs``; they generate the same down-set."""
    xs = set(xs)
    uniform_length(xs)
    return {x for x in xs if not any(x != y and leq(x, y) for y in xs)}


def is_downward_closed(labels: Iterable[BitString], n: int) -> bool:
    s = set(labels)
    uniform_length(s, n)
    # closed under clearing single bits is enough: every u <= v is reached
    # from v by a chain of single-bit clears
    return all(y in s for x in s for y in lower_covers(x))


def is_antichain(xs: Iterable[BitString]) -> bool:
    xs = list(xs)
    uniform_length(xs)
    return all(not leq(x, y) for x in xs for y in xs if x != y)
