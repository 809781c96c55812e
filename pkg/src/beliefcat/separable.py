"""Separable belief functions as weight vectors.

A separable mass is the conjunctive combination of simple supports
``X^a`` (mass ``a`` on ``X``, ``1 - a`` on the frame), one per proper subset
``X``.  The weight vector stores those exponents; the whole frame has no
weight.  On weight vectors

* Dempster's rule is the pointwise t-conorm ``a + b - a b``,
* the cautious conjunction is the pointwise maximum,
* the bold disjunction is the pointwise minimum.

Weight vectors with some weight equal to 1 are dogmatic: several vectors
expand to the same mass (all-ones and ``{}^1`` both give the total
contradiction).  Nothing here re-canonicalizes; compare masses with
:func:`expand` when belief-level equality is meant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .errors import (
    DuplicateEntry,
    FrameMismatch,
    NotDecomposable,
    NotSeparable,
    OutOfRange,
    ValidationError,
)
from .frames import Frame, Subset, as_mask
from .mass import (
    ONE,
    ZERO,
    MassDistribution,
    RationalLike,
    as_rational,
    commonality,
    superset_moebius,
)


@dataclass(frozen=True)
class WeightVector:
    """Exponents of the simple supports, indexed by every mask except the full frame."""

    frame: Frame
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != self.frame.full:
            raise ValueError(f"expected {self.frame.full} weights, got {len(self.weights)}")

    def __getitem__(self, x: Subset | int) -> Fraction:
        bits = as_mask(self.frame, x)
        if bits == self.frame.full:
            return ZERO
        return self.weights[bits]

    @property
    def dogmatic(self) -> bool:
        return any(w == 1 for w in self.weights)

    def support(self) -> list[tuple[int, Fraction]]:
        return [(x, w) for x, w in enumerate(self.weights) if w]

    def __str__(self):
        body = ", ".join(f"{self.frame.format_subset(x)}: {w}" for x, w in self.support())
        return f"w({body})"


class NotAWeight(ValidationError):
    pass


def make_weights(frame: Frame, entries: Iterable[tuple[Subset | int, RationalLike]] = ()) -> WeightVector:
    weights = [ZERO] * frame.full
    seen = set()
    for x, v in entries:
        bits = as_mask(frame, x)
        if bits == frame.full:
            raise NotAWeight("the whole frame carries no weight")
        if bits in seen:
            raise DuplicateEntry(f"subset {frame.format_subset(bits)} listed twice")
        seen.add(bits)
        w = as_rational(v)
        if not ZERO <= w <= ONE:
            raise OutOfRange(f"weight {w} outside [0, 1]")
        weights[bits] = w
    return WeightVector(frame, tuple(weights))


def zero_weights(frame: Frame) -> WeightVector:
    """The vacuous belief."""
    return WeightVector(frame, (ZERO,) * frame.full)


def one_weights(frame: Frame) -> WeightVector:
    """Top of the pointwise order; expands to the total contradiction."""
    return WeightVector(frame, (ONE,) * frame.full)


def _same(w1: WeightVector, w2: WeightVector) -> Frame:
    if w1.frame != w2.frame:
        raise FrameMismatch("weight vectors are defined on different frames")
    return w1.frame


def _pointwise(op: Callable[[Fraction, Fraction], Fraction], w1: WeightVector, w2: WeightVector) -> WeightVector:
    frame = _same(w1, w2)
    return WeightVector(frame, tuple(op(a, b) for a, b in zip(w1.weights, w2.weights)))


def expand(w: WeightVector) -> MassDistribution:
    """The mass of the combination of all simple supports in ``w``.

    The commonality of ``X^a`` at ``A`` is 1 when ``A`` lies inside ``X`` and
    ``1 - a`` otherwise, so the combined commonality is a product of those
    factors; one inverse transform gives the mass.
    """
    frame = w.frame
    q = [ONE] * frame.size
    for x, a in w.support():
        keep = 1 - a
        for s in range(frame.size):
            if s & ~x:
                q[s] *= keep
    return MassDistribution(frame, tuple(superset_moebius(q, frame.n)))


def combine_weights(w1: WeightVector, w2: WeightVector) -> WeightVector:
    """Dempster's rule on exponents: ``a + b - a b``."""
    return _pointwise(lambda a, b: a + b - a * b, w1, w2)


def conjoin_weights(w1: WeightVector, w2: WeightVector) -> WeightVector:
    """Cautious conjunction: pointwise maximum."""
    return _pointwise(max, w1, w2)


def disjoin_weights(w1: WeightVector, w2: WeightVector) -> WeightVector:
    """Bold disjunction: pointwise minimum."""
    return _pointwise(min, w1, w2)


def leq_weights(w1: WeightVector, w2: WeightVector) -> bool:
    """True when separable evidence updates ``w1`` into ``w2``, i.e. ``w1 <= w2`` pointwise."""
    _same(w1, w2)
    return all(a <= b for a, b in zip(w1.weights, w2.weights))


def weight_witness(w1: WeightVector, w2: WeightVector) -> WeightVector | None:
    """Separable evidence ``e`` with ``combine_weights(w1, e) == w2``, or None.

    Solving ``a + e - a e = b`` gives ``e = (b - a) / (1 - a)``; where ``a`` is
    already 1 the evidence weight is taken to be 0.
    """
    if not leq_weights(w1, w2):
        return None
    return WeightVector(
        w1.frame,
        tuple(ZERO if a == 1 else (b - a) / (1 - a) for a, b in zip(w1.weights, w2.weights)),
    )


def canonical_weights(m: MassDistribution) -> tuple[Fraction, ...]:
    """Canonical exponents of ``m``, possibly outside [0, 1].

    ``1 - a_A`` is the product of ``q(B) ** (-1) ** (|B| - |A| + 1)`` over the
    supersets ``B`` of ``A``, computed with a multiplicative superset
    Moebius recurrence.  Needs ``m(frame) > 0``.
    """
    frame = m.frame
    if m.values[frame.full] == 0:
        raise NotDecomposable("m(frame) = 0: dogmatic masses have no canonical decomposition")
    g = commonality(m)
    for i in range(frame.n):
        bit = 1 << i
        for x in range(frame.size):
            if not x & bit:
                g[x] /= g[x | bit]
    return tuple(1 - 1 / g[x] for x in range(frame.full))


def decompose(m: MassDistribution) -> WeightVector:
    """Weight vector whose expansion is ``m``.

    Raises :class:`NotDecomposable` when ``m(frame) == 0`` and
    :class:`NotSeparable` when some canonical weight is negative.
    """
    alphas = canonical_weights(m)
    bad = [(x, a) for x, a in enumerate(alphas) if not ZERO <= a <= ONE]
    if bad:
        x, a = bad[0]
        raise NotSeparable(
            f"canonical weight {a} on {m.frame.format_subset(x)} is outside [0, 1]",
            weights=alphas,
        )
    return WeightVector(m.frame, alphas)
