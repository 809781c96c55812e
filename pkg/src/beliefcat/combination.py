"""Dempster's rule of combination, unnormalized and normalized, and conditioning."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotNormalizedInput, TotalConflict
from .frames import Subset
from .mass import (
    MassDistribution,
    categorical,
    commonality,
    require_same_frame,
    superset_moebius,
)


@dataclass(frozen=True)
class ConflictReport:
    conflict: Fraction

    @property
    def total_conflict(self) -> bool:
        return self.conflict == 1


def combine_unnormalized(m1: MassDistribution, m2: MassDistribution) -> MassDistribution:
    """Conjunctive combination: mass of ``A`` is the sum of ``m1(X) m2(Y)`` over ``X & Y == A``.

    Computed as the pointwise product of commonalities followed by the
    inverse superset transform.
    """
    frame = require_same_frame(m1, m2)
    q = [a * b for a, b in zip(commonality(m1), commonality(m2))]
    return MassDistribution(frame, tuple(superset_moebius(q, frame.n)))


def renormalize(u: MassDistribution) -> tuple[MassDistribution, ConflictReport]:
    """Move the mass of the empty set out by rescaling the rest."""
    k = u.values[0]
    if k == 1:
        raise TotalConflict("combined evidence is totally conflicting (K = 1)")
    scale = 1 - k
    values = (Fraction(0),) + tuple(v / scale for v in u.values[1:])
    return MassDistribution(u.frame, values), ConflictReport(k)


def combine_normalized(
    m1: MassDistribution, m2: MassDistribution
) -> tuple[MassDistribution, ConflictReport]:
    """Dempster's normalized rule; both inputs must give zero mass to the empty set."""
    require_same_frame(m1, m2)
    if not (m1.normalized and m2.normalized):
        raise NotNormalizedInput("normalized combination needs m(empty) = 0 on both inputs")
    return renormalize(combine_unnormalized(m1, m2))


def condition(m: MassDistribution, x: Subset | int, normalized: bool = False) -> MassDistribution:
    """Combine ``m`` with the categorical evidence that the answer lies in ``x``.

    Unlike :func:`combine_normalized`, the normalized variant accepts a prior
    with mass on the empty set and discards it.
    """
    u = combine_unnormalized(m, categorical(m.frame, x))
    if not normalized:
        return u
    return renormalize(u)[0]
