"""Mass distributions and their set-function transforms.

Masses are stored densely: ``values[x]`` is the mass of the subset with
bitmask ``x``.  All arithmetic is exact (:class:`fractions.Fraction`).

The transforms use the O(n 2^n) zeta recurrences over the subset lattice:

* ``bel(A) = sum of m(X) over nonempty X contained in A``
* ``pl(A)  = sum of m(X) over X meeting A``
* ``q(A)   = sum of m(X) over X containing A``
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DuplicateEntry,
    FrameMismatch,
    NotAValidTransform,
    OutOfRange,
    ParseError,
    SumNotOne,
)
from .frames import Frame, Subset, as_mask

Rational = Fraction
RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)

KINDS = ("bel", "pl", "q")

_RATIONAL = re.compile(r"(\d+)(?:/(\d+))?\Z")
_DECIMAL = re.compile(r"(\d*)\.(\d{1,9})\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q``, an integer, or a decimal with at most nine fractional digits.

    Decimals are read as exact fractions over a power of ten.
    """
    text = text.strip()
    m = _RATIONAL.match(text)
    if m:
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den) if den is not None else 1)
    m = _DECIMAL.match(text)
    if m:
        whole, frac = m.groups()
        return Fraction(int(whole or "0") * 10 ** len(frac) + int(frac), 10 ** len(frac))
    raise ParseError(f"not a nonnegative rational: {text!r}")


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not masses")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational; floats are rejected")


def format_rational(x: Fraction) -> str:
    return str(x)


# Zeta / Moebius recurrences on dense lists (in place).


def subset_zeta(f: list, n: int) -> list:
    for i in range(n):
        bit = 1 << i
        for x in range(1 << n):
            if x & bit:
                f[x] += f[x ^ bit]
    return f


def subset_moebius(f: list, n: int) -> list:
    for i in range(n):
        bit = 1 << i
        for x in range(1 << n):
            if x & bit:
                f[x] -= f[x ^ bit]
    return f


def superset_zeta(f: list, n: int) -> list:
    for i in range(n):
        bit = 1 << i
        for x in range(1 << n):
            if not x & bit:
                f[x] += f[x | bit]
    return f


def superset_moebius(f: list, n: int) -> list:
    for i in range(n):
        bit = 1 << i
        for x in range(1 << n):
            if not x & bit:
                f[x] -= f[x | bit]
    return f


@dataclass(frozen=True)
class MassDistribution:
    frame: Frame
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.frame.size:
            raise ValueError(f"expected {self.frame.size} values, got {len(self.values)}")

    def __getitem__(self, x: Subset | int) -> Fraction:
        return self.values[as_mask(self.frame, x)]

    @property
    def normalized(self) -> bool:
        """True when the empty set carries no mass."""
        return self.values[0] == 0

    @property
    def conflict(self) -> Fraction:
        return self.values[0]

    def focal(self) -> list[tuple[int, Fraction]]:
        """Nonzero entries as ``(mask, mass)`` in increasing mask order."""
        return [(x, v) for x, v in enumerate(self.values) if v]

    def items(self) -> Iterable[tuple[Subset, Fraction]]:
        for x, v in self.focal():
            yield Subset(self.frame, x), v

    def __str__(self):
        body = ", ".join(f"{self.frame.format_subset(x)}: {v}" for x, v in self.focal())
        return f"m({body})"


def _checked(frame: Frame, values: Sequence[Fraction]) -> MassDistribution:
    total = ZERO
    for v in values:
        if not ZERO <= v <= ONE:
            raise OutOfRange(f"mass {v} outside [0, 1]")
        total += v
    if total != 1:
        raise SumNotOne(f"masses sum to {total}, not 1")
    return MassDistribution(frame, tuple(values))


def make_mass(frame: Frame, entries: Iterable[tuple[Subset | int, RationalLike]]) -> MassDistribution:
    """Build a mass distribution from ``(subset, value)`` pairs.

    Unlisted subsets get mass 0.  Raises :class:`DuplicateEntry`,
    :class:`OutOfRange`, :class:`SumNotOne` or :class:`FrameMismatch`.
    """
    values = [ZERO] * frame.size
    seen = set()
    for x, v in entries:
        bits = as_mask(frame, x)
        if bits in seen:
            raise DuplicateEntry(f"subset {frame.format_subset(bits)} listed twice")
        seen.add(bits)
        values[bits] = as_rational(v)
    return _checked(frame, values)


def from_values(frame: Frame, values: Sequence[RationalLike]) -> MassDistribution:
    """Build a mass distribution from a dense sequence indexed by bitmask."""
    if len(values) != frame.size:
        raise ValueError(f"expected {frame.size} values, got {len(values)}")
    return _checked(frame, [as_rational(v) for v in values])


def categorical(frame: Frame, x: Subset | int) -> MassDistribution:
    """The mass giving 1 to ``x``: vacuous for the whole frame, total contradiction for the empty set."""
    values = [ZERO] * frame.size
    values[as_mask(frame, x)] = ONE
    return MassDistribution(frame, tuple(values))


def vacuous(frame: Frame) -> MassDistribution:
    return categorical(frame, frame.full)


def contradiction(frame: Frame) -> MassDistribution:
    return categorical(frame, 0)


def simple_support(frame: Frame, x: Subset | int, weight: RationalLike) -> MassDistribution:
    """Mass ``weight`` on ``x`` and ``1 - weight`` on the whole frame."""
    bits = as_mask(frame, x)
    w = as_rational(weight)
    if not ZERO <= w <= ONE:
        raise OutOfRange(f"weight {w} outside [0, 1]")
    values = [ZERO] * frame.size
    values[frame.full] += 1 - w
    values[bits] += w
    return MassDistribution(frame, tuple(values))


@dataclass(frozen=True)
class SetFunction:
    frame: Frame
    kind: str
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown set-function kind {self.kind!r}")
        if len(self.values) != self.frame.size:
            raise ValueError(f"expected {self.frame.size} values, got {len(self.values)}")

    def __getitem__(self, x: Subset | int) -> Fraction:
        return self.values[as_mask(self.frame, x)]


def commonality(m: MassDistribution) -> list[Fraction]:
    return superset_zeta(list(m.values), m.frame.n)


def transform(m: MassDistribution, kind: str) -> SetFunction:
    """Belief, plausibility or commonality of ``m``.

    Belief excludes the empty set from its sum, so ``bel(frame) = 1 - m(empty)``
    for unnormalized masses.
    """
    frame, n = m.frame, m.frame.n
    if kind == "q":
        return SetFunction(frame, kind, tuple(commonality(m)))
    cumulative = subset_zeta(list(m.values), n)
    empty = m.values[0]
    if kind == "bel":
        values = [c - empty for c in cumulative]
    elif kind == "pl":
        # X meets A unless X lies inside the complement of A.
        values = [1 - cumulative[frame.full ^ a] for a in range(frame.size)]
    else:
        raise ValueError(f"unknown set-function kind {kind!r}")
    return SetFunction(frame, kind, tuple(values))


def mass_from_transform(f: SetFunction) -> MassDistribution:
    """Recover the mass distribution whose transform is ``f``.

    Raises :class:`NotAValidTransform` if the recovered values are not a mass
    distribution or do not reproduce ``f``.
    """
    frame, n = f.frame, f.frame.n
    if f.kind == "q":
        values = superset_moebius(list(f.values), n)
    elif f.kind in ("bel", "pl"):
        if f.kind == "bel":
            bel = list(f.values)
        else:
            # bel(complement A) = pl(frame) - pl(A)
            bel = [f.values[frame.full] - f.values[frame.full ^ a] for a in range(frame.size)]
        if bel[0] != 0:
            raise NotAValidTransform(f"{f.kind} of the empty set must be 0")
        empty = 1 - bel[frame.full]
        values = subset_moebius([b + empty for b in bel], n)
    else:
        raise ValueError(f"unknown set-function kind {f.kind!r}")
    try:
        m = _checked(frame, values)
    except (OutOfRange, SumNotOne) as exc:
        raise NotAValidTransform(f"not the {f.kind} of any mass distribution: {exc}") from None
    if transform(m, f.kind).values != f.values:
        raise NotAValidTransform(f"not the {f.kind} of any mass distribution")
    return m


def require_same_frame(*masses: MassDistribution) -> Frame:
    frame = masses[0].frame
    for other in masses[1:]:
        if other.frame != frame:
            raise FrameMismatch("mass distributions are defined on different frames")
    return frame
