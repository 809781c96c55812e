"""Finite frames of discernment and bitmask subsets.

Subsets of an ``n``-element frame are integers in ``[0, 2**n)``: bit ``i`` is
set when element ``i`` belongs to the subset.  :class:`Subset` pairs such a
mask with its frame so that mixing frames is caught early; the numeric
modules work on the raw masks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BadName, DuplicateElement, FrameMismatch, ParseError, TooManyElements

MAX_ELEMENTS = 16

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class Frame:
    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise BadName("a frame needs at least one element")
        if len(self.elements) > MAX_ELEMENTS:
            raise TooManyElements(
                f"{len(self.elements)} elements; at most {MAX_ELEMENTS} are supported"
            )
        seen = set()
        for name in self.elements:
            if not isinstance(name, str) or not _NAME.match(name):
                raise BadName(f"invalid element name {name!r}")
            if name in seen:
                raise DuplicateElement(f"element {name!r} appears twice")
            seen.add(name)

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def size(self) -> int:
        """Number of subsets, ``2**n``."""
        return 1 << len(self.elements)

    @property
    def full(self) -> int:
        """Bitmask of the whole frame."""
        return (1 << len(self.elements)) - 1

    @property
    def empty(self) -> Subset:
        return Subset(self, 0)

    @property
    def omega(self) -> Subset:
        return Subset(self, self.full)

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise BadName(f"{name!r} is not an element of the frame") from None

    def subset(self, *names: str) -> Subset:
        bits = 0
        for name in names:
            bits |= 1 << self.index(name)
        return Subset(self, bits)

    def mask(self, bits: int) -> Subset:
        return Subset(self, bits)

    def subsets(self) -> Iterator[Subset]:
        """All subsets in increasing bitmask order."""
        for bits in range(self.size):
            yield Subset(self, bits)

    def members(self, bits: int) -> list[str]:
        return [name for i, name in enumerate(self.elements) if bits >> i & 1]

    def format_subset(self, bits: int) -> str:
        return "{" + " ".join(self.members(bits)) + "}"

    def parse_subset(self, text: str) -> Subset:
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ParseError(f"subset must be written as {{name ...}}, got {text!r}")
        names = text[1:-1].split()
        bits = 0
        for name in names:
            bit = 1 << self.index(name)
            if bits & bit:
                raise ParseError(f"element {name!r} listed twice in {text!r}")
            bits |= bit
        return Subset(self, bits)

    def __str__(self):
        return "frame: " + " ".join(self.elements)


def make_frame(names: Sequence[str]) -> Frame:
    return Frame(tuple(names))


@dataclass(frozen=True)
class Subset:
    """A subset of ``frame`` encoded as the bitmask ``bits``."""

    frame: Frame
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < self.frame.size:
            raise ValueError(f"mask {self.bits} out of range for a {self.frame.n}-element frame")

    def _same(self, other: Subset) -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.frame != self.frame:
            raise FrameMismatch("subsets belong to different frames")

    def __and__(self, other: Subset) -> Subset:
        self._same(other)
        return Subset(self.frame, self.bits & other.bits)

    def __or__(self, other: Subset) -> Subset:
        self._same(other)
        return Subset(self.frame, self.bits | other.bits)

    def __invert__(self) -> Subset:
        return Subset(self.frame, self.frame.full & ~self.bits)

    def __le__(self, other: Subset) -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: Subset) -> bool:
        return other <= self

    def __lt__(self, other: Subset) -> bool:
        return self <= other and self.bits != other.bits

    def __gt__(self, other: Subset) -> bool:
        return other < self

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[str]:
        return iter(self.frame.members(self.bits))

    def __str__(self) -> str:
        return self.frame.format_subset(self.bits)


def intersect(a: Subset, b: Subset) -> Subset:
    return a & b


def union(a: Subset, b: Subset) -> Subset:
    return a | b


def complement(a: Subset) -> Subset:
    return ~a


def contains(a: Subset, b: Subset) -> bool:
    """True when ``b`` is a subset of ``a``."""
    return b <= a


def cardinality(a: Subset) -> int:
    return len(a)


def popcount(bits: int) -> int:
    return bits.bit_count()


def as_mask(frame: Frame, x: Subset | int) -> int:
    """Raw bitmask of ``x``, checking that it lives on ``frame``."""
    if isinstance(x, Subset):
        if x.frame != frame:
            raise FrameMismatch("subset belongs to a different frame")
        return x.bits
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected Subset or int mask, got {type(x).__name__}")
    if not 0 <= x < frame.size:
        raise ValueError(f"mask {x} out of range for a {frame.n}-element frame")
    return x


def same_frame(*frames: Frame) -> Frame:
    first = frames[0]
    for other in frames[1:]:
        if other != first:
            raise FrameMismatch("operands are defined on different frames")
    return first


def supersets(frame: Frame, bits: int) -> Iterable[int]:
    """Masks containing ``bits``, in increasing order."""
    rest = frame.full & ~bits
    sub = 0
    while True:
        yield bits | sub
        if sub == rest:
            return
        sub = (sub - rest) & rest
