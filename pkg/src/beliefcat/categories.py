"""Boolean, Bayesian and Dempster categories of beliefs.

An arrow ``source -> target`` is a piece of evidence that updates the source
into the target:

* Boolean: a subset ``X`` with ``X & source == target``;
* Bayesian: a subset ``X`` with ``target == source conditioned on X``;
* Dempster: a mass ``e`` with ``e (x) source == target`` (normalized or not).

Deciding whether a Dempster arrow exists is a linear feasibility problem in
the ``2**n`` unknowns ``e(X)`` and is answered exactly with the rational
simplex in :mod:`beliefcat.simplex`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence, Union

from .combination import combine_normalized, combine_unnormalized
from .errors import (
    EndpointMismatch,
    FrameMismatch,
    FrameTooLarge,
    KindMismatch,
    NotNormalizedInput,
    OutOfRange,
    SumNotOne,
    TotalConflict,
    ZeroProbabilityEvidence,
)
from .frames import Frame, Subset, as_mask
from .mass import ONE, ZERO, MassDistribution, RationalLike, as_rational, require_same_frame, vacuous
from .simplex import OPTIMAL, linprog

MAX_EXACT_N = 4


class Category(str, enum.Enum):
    DEMPSTER = "dempster"
    DEMPSTER_NORMALIZED = "dempster-normalized"
    BOOLEAN = "boolean"
    BAYES = "bayes"


@dataclass(frozen=True)
class ProbabilityDistribution:
    frame: Frame
    atoms: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.atoms) != self.frame.n:
            raise ValueError(f"expected {self.frame.n} atom probabilities, got {len(self.atoms)}")

    def prob(self, x: Subset | int) -> Fraction:
        bits = as_mask(self.frame, x)
        return sum((p for i, p in enumerate(self.atoms) if bits >> i & 1), ZERO)

    def support(self) -> int:
        return sum(1 << i for i, p in enumerate(self.atoms) if p)

    def __str__(self):
        body = ", ".join(f"{name}: {p}" for name, p in zip(self.frame.elements, self.atoms))
        return f"P({body})"


def make_probability(frame: Frame, atoms: Sequence[RationalLike] | dict) -> ProbabilityDistribution:
    """Probability from per-element values, given in frame order or as a name -> value mapping."""
    if isinstance(atoms, dict):
        values = [ZERO] * frame.n
        for name, p in atoms.items():
            values[frame.index(name)] = as_rational(p)
    else:
        values = [as_rational(p) for p in atoms]
        if len(values) != frame.n:
            raise ValueError(f"expected {frame.n} atom probabilities, got {len(values)}")
    if any(not ZERO <= p <= ONE for p in values):
        raise OutOfRange("atom probabilities must lie in [0, 1]")
    if sum(values, ZERO) != 1:
        raise SumNotOne(f"probabilities sum to {sum(values, ZERO)}, not 1")
    return ProbabilityDistribution(frame, tuple(values))


def uniform(frame: Frame) -> ProbabilityDistribution:
    return ProbabilityDistribution(frame, (Fraction(1, frame.n),) * frame.n)


def point_mass(frame: Frame, name: str) -> ProbabilityDistribution:
    i = frame.index(name)
    return ProbabilityDistribution(frame, tuple(ONE if j == i else ZERO for j in range(frame.n)))


BeliefObject = Union[MassDistribution, Subset, ProbabilityDistribution]


@dataclass(frozen=True)
class ArrowWitness:
    category: Category
    source: Any
    target: Any
    evidence: Any

    def apply(self):
        """Result of updating the source with the evidence."""
        if self.category is Category.DEMPSTER:
            return combine_unnormalized(self.evidence, self.source)
        if self.category is Category.DEMPSTER_NORMALIZED:
            return combine_normalized(self.evidence, self.source)[0]
        if self.category is Category.BOOLEAN:
            return self.evidence & self.source
        return bayes_condition(self.source, self.evidence)

    def is_valid(self) -> bool:
        try:
            return self.apply() == self.target
        except (TotalConflict, ZeroProbabilityEvidence, NotNormalizedInput):
            return False


def identity(category: Category, obj: BeliefObject) -> ArrowWitness:
    category = Category(category)
    if category in (Category.DEMPSTER, Category.DEMPSTER_NORMALIZED):
        return ArrowWitness(category, obj, obj, vacuous(obj.frame))
    return ArrowWitness(category, obj, obj, obj.frame.omega)


def compose_witnesses(e1: ArrowWitness, e2: ArrowWitness) -> ArrowWitness:
    """Composite of ``e1: a -> b`` followed by ``e2: b -> c``."""
    if e1.category is not e2.category:
        raise KindMismatch(f"cannot compose a {e1.category.value} arrow with a {e2.category.value} arrow")
    if e1.target != e2.source:
        raise EndpointMismatch("target of the first arrow is not the source of the second")
    cat = e1.category
    if cat is Category.DEMPSTER:
        evidence = combine_unnormalized(e1.evidence, e2.evidence)
    elif cat is Category.DEMPSTER_NORMALIZED:
        evidence = combine_normalized(e1.evidence, e2.evidence)[0]
    else:
        evidence = e1.evidence & e2.evidence
    composite = ArrowWitness(cat, e1.source, e2.target, evidence)
    if not composite.is_valid():
        raise AssertionError("composite witness failed revalidation")
    return composite


# Dempster categories.


def _check_size(frame: Frame) -> None:
    if frame.n > MAX_EXACT_N:
        raise FrameTooLarge(
            f"exact arrow decisions are limited to frames of at most {MAX_EXACT_N} elements"
        )


def _transfer_matrix(m1: MassDistribution) -> list[list[Fraction]]:
    """``t[a][x]`` = mass that evidence focused on ``x`` sends to ``a`` when combined with ``m1``."""
    size = m1.frame.size
    t = [[ZERO] * size for _ in range(size)]
    for y, v in enumerate(m1.values):
        if v:
            for x in range(size):
                t[x & y][x] += v
    return t


@dataclass(frozen=True)
class _DempsterLP:
    columns: tuple[int, ...]  # mask of the evidence focal set behind each variable
    a_eq: list
    b_eq: list
    objective: tuple[Fraction, ...] | None  # nonconflicting mass, normalized case only


def _dempster_lp(m1: MassDistribution, m2: MassDistribution, normalized: bool) -> _DempsterLP:
    frame = require_same_frame(m1, m2)
    _check_size(frame)
    t = _transfer_matrix(m1)
    size = frame.size
    if not normalized:
        cols = tuple(range(size))
        a_eq = [list(t[a]) for a in range(size)]
        b_eq = list(m2.values)
        a_eq.append([ONE] * size)
        b_eq.append(ONE)
        return _DempsterLP(cols, a_eq, b_eq, None)
    if not (m1.normalized and m2.normalized):
        raise NotNormalizedInput("normalized arrows need m(empty) = 0 at both ends")
    # e(empty) = 0; u = e (x) m1 must be proportional to m2 off the empty set:
    # u(A) - m2(A) * (1 - u(empty)) = 0, which is homogeneous linear in e.
    cols = tuple(range(1, size))
    kept = [sum((t[a][x] for a in range(1, size)), ZERO) for x in cols]
    a_eq = [[t[a][x] - m2.values[a] * k for x, k in zip(cols, kept)] for a in range(1, size)]
    b_eq = [ZERO] * (size - 1)
    a_eq.append([ONE] * len(cols))
    b_eq.append(ONE)
    return _DempsterLP(cols, a_eq, b_eq, tuple(kept))


def _evidence(frame: Frame, lp: _DempsterLP, x: Sequence[Fraction]) -> MassDistribution:
    values = [ZERO] * frame.size
    for col, v in zip(lp.columns, x):
        values[col] = v
    return MassDistribution(frame, tuple(values))


def arrow_exists_dempster(
    m1: MassDistribution, m2: MassDistribution, normalized: bool = False
) -> ArrowWitness | None:
    """Decide exactly whether some evidence updates ``m1`` into ``m2``.

    Returns one witness, or None.  When ``m1 == m2`` the identity witness
    (the vacuous mass) is returned.
    """
    lp = _dempster_lp(m1, m2, normalized)
    cat = Category.DEMPSTER_NORMALIZED if normalized else Category.DEMPSTER
    if m1 == m2:
        return identity(cat, m1)
    frame = m1.frame
    if lp.objective is None:
        res = linprog([ZERO] * len(lp.columns), lp.a_eq, lp.b_eq)
        if res.status != OPTIMAL:
            return None
    else:
        res = linprog(lp.objective, lp.a_eq, lp.b_eq)
        if res.status != OPTIMAL or res.value <= 0:
            return None
    witness = ArrowWitness(cat, m1, m2, _evidence(frame, lp, res.x))
    if not witness.is_valid():
        raise AssertionError("arrow witness failed revalidation")
    return witness


def dempster_witness_bounds(
    m1: MassDistribution, m2: MassDistribution, normalized: bool = False
) -> list[tuple[Fraction, Fraction]] | None:
    """Per-focal-set ``(min, max)`` of ``e(X)`` over all witnesses, or None if there is none.

    In the normalized case the bounds are taken over the closure of the
    witness set; that closure is a single point exactly when the witness set
    is, so uniqueness can still be read off.
    """
    if arrow_exists_dempster(m1, m2, normalized) is None:
        return None
    lp = _dempster_lp(m1, m2, normalized)
    nvars = len(lp.columns)
    bounds = [(ZERO, ZERO)] * m1.frame.size
    for j, col in enumerate(lp.columns):
        c = [ONE if i == j else ZERO for i in range(nvars)]
        lo = linprog(c, lp.a_eq, lp.b_eq, maximize=False)
        hi = linprog(c, lp.a_eq, lp.b_eq, maximize=True)
        bounds[col] = (lo.value, hi.value)
    return bounds


def dempster_arrow_unique(m1: MassDistribution, m2: MassDistribution, normalized: bool = False) -> bool:
    bounds = dempster_witness_bounds(m1, m2, normalized)
    return bounds is not None and all(lo == hi for lo, hi in bounds)


# Boolean category.


def boolean_hom(a: Subset, b: Subset) -> ArrowWitness | None:
    """Arrow ``a -> b`` exists iff ``b`` is contained in ``a``; ``b`` itself is a witness."""
    if a.frame != b.frame:
        raise FrameMismatch("subsets belong to different frames")
    if not b <= a:
        return None
    return ArrowWitness(Category.BOOLEAN, a, b, b)


def boolean_witnesses(a: Subset, b: Subset) -> list[Subset]:
    """Every ``X`` with ``X & a == b``, by enumeration."""
    if a.frame != b.frame:
        raise FrameMismatch("subsets belong to different frames")
    return [x for x in a.frame.subsets() if (x & a) == b]


def boolean_meet_join(a: Subset, b: Subset) -> tuple[Subset, Subset]:
    """Coproduct and product in the Boolean logic: ``(a & b, a | b)``."""
    return a & b, a | b


# Bayesian category.


def bayes_condition(p: ProbabilityDistribution, x: Subset | int) -> ProbabilityDistribution:
    bits = as_mask(p.frame, x)
    px = p.prob(bits)
    if px == 0:
        raise ZeroProbabilityEvidence(f"P({p.frame.format_subset(bits)}) = 0")
    return ProbabilityDistribution(
        p.frame, tuple(v / px if bits >> i & 1 else ZERO for i, v in enumerate(p.atoms))
    )


def bayes_witnesses(p: ProbabilityDistribution, q: ProbabilityDistribution) -> list[Subset]:
    if p.frame != q.frame:
        raise FrameMismatch("distributions belong to different frames")
    found = []
    for x in p.frame.subsets():
        if p.prob(x) > 0 and bayes_condition(p, x) == q:
            found.append(x)
    return found


def bayes_arrow_exists(p: ProbabilityDistribution, q: ProbabilityDistribution) -> ArrowWitness | None:
    """Search every subset of positive probability for one that conditions ``p`` into ``q``."""
    found = bayes_witnesses(p, q)
    if not found:
        return None
    return ArrowWitness(Category.BAYES, p, q, found[0])


# Initial and terminal objects.


@dataclass
class ExtremalReport:
    category: Category
    direction: str
    candidate: Any
    cases: int = 0
    failures: list = field(default_factory=list)
    uniqueness_checked: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        what = f"{self.direction} object in the {self.category.value} category"
        if self.passed:
            extra = ", unique arrows" if self.uniqueness_checked else ""
            return f"PASS {what} (passed on {self.cases} samples{extra})"
        sample, reason = self.failures[0]
        return f"FAIL {what}: {reason} for {sample}"


def _is_object(category: Category, obj: Any) -> bool:
    if category is Category.DEMPSTER:
        return isinstance(obj, MassDistribution)
    if category is Category.DEMPSTER_NORMALIZED:
        return isinstance(obj, MassDistribution) and obj.normalized
    if category is Category.BOOLEAN:
        return isinstance(obj, Subset)
    return isinstance(obj, ProbabilityDistribution)


def check_extremal(
    candidate: BeliefObject,
    samples: Iterable[BeliefObject],
    direction: str,
    category: Category | str,
) -> ExtremalReport:
    """Sampled check that ``candidate`` is initial (or terminal).

    Initial checks also count the arrows out of the candidate and fail when
    more than one exists.  Terminal checks are made in the logic of the
    category, where parallel arrows are identified, so only existence is
    tested.  Passing says nothing about objects outside ``samples``.
    """
    category = Category(category)
    if direction not in ("initial", "terminal"):
        raise ValueError(f"direction must be 'initial' or 'terminal', not {direction!r}")
    initial = direction == "initial"
    report = ExtremalReport(category, direction, candidate, uniqueness_checked=initial)
    if not _is_object(category, candidate):
        report.failures.append((candidate, "candidate is not an object of the category"))
        return report
    normalized = category is Category.DEMPSTER_NORMALIZED
    for sample in samples:
        if not _is_object(category, sample):
            raise NotNormalizedInput(f"{sample} is not an object of the {category.value} category")
        if candidate.frame != sample.frame:
            raise FrameMismatch("candidate and sample belong to different frames")
        report.cases += 1
        src, dst = (candidate, sample) if initial else (sample, candidate)
        if category in (Category.DEMPSTER, Category.DEMPSTER_NORMALIZED):
            if not initial:
                ok = arrow_exists_dempster(src, dst, normalized) is not None
                count_ok = True
            else:
                bounds = dempster_witness_bounds(src, dst, normalized)
                ok = bounds is not None
                count_ok = ok and all(lo == hi for lo, hi in bounds)
        else:
            if category is Category.BOOLEAN:
                found = boolean_witnesses(src, dst)
            else:
                found = bayes_witnesses(src, dst)
            ok = bool(found)
            count_ok = len(found) == 1 or not initial
        if not ok:
            report.failures.append((sample, "no arrow"))
        elif not count_ok:
            report.failures.append((sample, "arrow not unique"))
    return report
