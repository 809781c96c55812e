"""Independent oracles and law checkers.

The oracles here deliberately avoid the fast zeta-transform code paths: the
combination oracle is the literal double sum over focal pairs, and the
commonality oracle sums over supersets directly.  Every check returns a
:class:`LawReport` naming the law, the number of cases examined and any
counterexamples; a pass is a statement about those cases only.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from . import kernels
from .combination import combine_normalized, combine_unnormalized, renormalize
from .errors import FrameMismatch
from .frames import Frame, make_frame, popcount
from .mass import (
    ONE,
    ZERO,
    MassDistribution,
    categorical,
    contradiction,
    mass_from_transform,
    simple_support,
    transform,
    vacuous,
)
from .separable import (
    WeightVector,
    combine_weights,
    conjoin_weights,
    decompose,
    disjoin_weights,
    expand,
)


@dataclass(frozen=True)
class Counterexample:
    inputs: tuple
    lhs: Any = None
    rhs: Any = None
    note: str = ""

    def __str__(self):
        parts = [", ".join(str(x) for x in self.inputs)]
        if self.note:
            parts.append(self.note)
        if self.lhs is not None or self.rhs is not None:
            parts.append(f"{self.lhs} != {self.rhs}")
        return "; ".join(parts)


@dataclass
class LawReport:
    law: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, *inputs, lhs=None, rhs=None, note=""):
        self.failures.append(Counterexample(tuple(inputs), lhs, rhs, note))

    def check_equal(self, lhs, rhs, *inputs, note=""):
        self.cases += 1
        if lhs != rhs:
            self.fail(*inputs, lhs=lhs, rhs=rhs, note=note)

    def render(self) -> str:
        if self.passed:
            return f"PASS {self.law} ({self.cases} cases)"
        more = f" (+{len(self.failures) - 1} more)" if len(self.failures) > 1 else ""
        return f"FAIL {self.law}: {self.failures[0]}{more}"


def render(reports: Iterable[LawReport]) -> str:
    return "\n".join(r.render() for r in reports)


# Oracles.


def _same_frame(m1: MassDistribution, m2: MassDistribution) -> Frame:
    if m1.frame != m2.frame:
        raise FrameMismatch("mass distributions are defined on different frames")
    return m1.frame


def oracle_combine(m1: MassDistribution, m2: MassDistribution) -> MassDistribution:
    """Unnormalized Dempster combination as the literal sum over all pairs ``(X, Y)``."""
    frame = _same_frame(m1, m2)
    out = [ZERO] * frame.size
    for x, a in enumerate(m1.values):
        for y, b in enumerate(m2.values):
            out[x & y] += a * b
    return MassDistribution(frame, tuple(out))


def naive_transform(m: MassDistribution, kind: str) -> list[Fraction]:
    """Belief, plausibility or commonality by direct summation, O(4^n)."""
    size = m.frame.size
    out = []
    for a in range(size):
        if kind == "bel":
            out.append(sum((m.values[x] for x in range(1, size) if x & ~a == 0), ZERO))
        elif kind == "pl":
            out.append(sum((m.values[x] for x in range(size) if x & a), ZERO))
        elif kind == "q":
            out.append(sum((m.values[x] for x in range(size) if a & ~x == 0), ZERO))
        else:
            raise ValueError(f"unknown kind {kind!r}")
    return out


def naive_mass_from_commonality(frame: Frame, q: Sequence[Fraction]) -> list[Fraction]:
    """Alternating-sign inversion ``m(A) = sum over B containing A of (-1)^|B - A| q(B)``."""
    out = []
    for a in range(frame.size):
        total = ZERO
        for b in range(frame.size):
            if a & ~b == 0:
                sign = -1 if popcount(b ^ a) % 2 else 1
                total += sign * q[b]
        out.append(total)
    return out


def oracle_q_product(m1: MassDistribution, m2: MassDistribution) -> MassDistribution:
    """Combination through pointwise products of directly summed commonalities."""
    frame = _same_frame(m1, m2)
    q = [a * b for a, b in zip(naive_transform(m1, "q"), naive_transform(m2, "q"))]
    return MassDistribution(frame, tuple(naive_mass_from_commonality(frame, q)))


def oracle_expand(w: WeightVector) -> MassDistribution:
    """Separable mass by folding :func:`oracle_combine` over the simple supports."""
    frame = w.frame
    return reduce(
        oracle_combine,
        (simple_support(frame, x, a) for x, a in w.support()),
        vacuous(frame),
    )


# Random objects.


def random_mass(frame: Frame, rng: random.Random, high: int = 12, zero_rate: float = 0.3) -> MassDistribution:
    """Draw ``2**n`` nonnegative integers (some forced to zero) and normalize."""
    while True:
        raw = [0 if rng.random() < zero_rate else rng.randint(0, high) for _ in range(frame.size)]
        total = sum(raw)
        if total:
            return MassDistribution(frame, tuple(Fraction(v, total) for v in raw))


def random_normalized_mass(frame: Frame, rng: random.Random, **kw) -> MassDistribution:
    while True:
        m = random_mass(frame, rng, **kw)
        if m.values[0] != 1:
            return renormalize(m)[0] if m.values[0] else m


def mass_samples(frame: Frame, count: int, rng: random.Random, normalized: bool = False) -> list[MassDistribution]:
    """``count`` masses: vacuous, total contradiction and categorical ones first, then random."""
    full = frame.full
    injected = [vacuous(frame)]
    if not normalized:
        injected.append(contradiction(frame))
    for x in rng.sample(range(1, full), min(3, full - 1)) if full > 1 else []:
        injected.append(categorical(frame, x))
    draw = random_normalized_mass if normalized else random_mass
    out = injected[:count]
    while len(out) < count:
        out.append(draw(frame, rng))
    return out


def random_weights(
    frame: Frame,
    rng: random.Random,
    zero_rate: float = 0.3,
    dogmatic_rate: float = 0.0,
    max_denominator: int = 12,
) -> WeightVector:
    weights = []
    for _ in range(frame.full):
        u = rng.random()
        if u < zero_rate:
            weights.append(ZERO)
        elif u < zero_rate + dogmatic_rate:
            weights.append(ONE)
        else:
            den = rng.randint(2, max_denominator)
            weights.append(Fraction(rng.randint(1, den - 1), den))
    return WeightVector(frame, tuple(weights))


def weight_grid(frame: Frame, grid: Sequence[Fraction]) -> list[WeightVector]:
    """Every weight vector with coordinates drawn from ``grid``."""
    return [WeightVector(frame, tuple(ws)) for ws in itertools.product(grid, repeat=frame.full)]


def rational_grid(denominator: int) -> list[Fraction]:
    return [Fraction(k, denominator) for k in range(denominator + 1)]


def default_frame(n: int) -> Frame:
    return make_frame([chr(ord("a") + i) for i in range(n)])


# Universal properties in the separable preorder.

_INT64_LIMIT = 2**62


def _integerize(vectors: Sequence[WeightVector]) -> np.ndarray | None:
    den = 1
    for w in vectors:
        for a in w.weights:
            den = lcm(den, a.denominator)
            if den > _INT64_LIMIT:
                return None
    return np.array(
        [[a.numerator * (den // a.denominator) for a in w.weights] for w in vectors],
        dtype=np.int64,
    ).reshape(len(vectors), -1)


def _python_sweep(pairs, candidates, sample, direction):
    def below(lo, hi):
        return all(x <= y for x, y in zip(lo.weights, hi.weights))

    if direction == "product":
        le = lambda u, v: below(v, u)  # noqa: E731
    else:
        le = below
    bounds_ok, counts, first = [], [], []
    for (a, b), cand in zip(pairs, candidates):
        bounds_ok.append(le(a, cand) and le(b, cand))
        bad = [i for i, c in enumerate(sample) if le(a, c) and le(b, c) and not le(cand, c)]
        counts.append(len(bad))
        first.append(bad[0] if bad else -1)
    return bounds_ok, counts, first


def universal_sweep(pairs, candidates, sample, direction, backend=None):
    """Per-pair results of the least-upper-bound (or greatest-lower-bound) check.

    ``backend`` is ``"numba"``, ``"numpy"``, ``"python"`` or None for the
    default compiled path.  Vectors whose common denominator overflows int64
    always take the exact Python path.
    """
    if direction not in ("coproduct", "product"):
        raise ValueError(f"direction must be 'coproduct' or 'product', not {direction!r}")
    vectors = [w for pair in pairs for w in pair] + list(candidates) + list(sample)
    frames = {w.frame for w in vectors}
    if len(frames) > 1:
        raise FrameMismatch("weight vectors are defined on different frames")
    if backend == "python" or not vectors:
        return _python_sweep(pairs, candidates, sample, direction)
    ints = _integerize(vectors)
    if ints is None:
        return _python_sweep(pairs, candidates, sample, direction)
    p = len(pairs)
    if direction == "product":
        ints = -ints
    a, b = ints[0 : 2 * p : 2], ints[1 : 2 * p : 2]
    cand, smp = ints[2 * p : 3 * p], ints[3 * p :]
    bounds_ok, counts, first = kernels.dominance_sweep(a, b, cand, smp, backend)
    return [bool(x) for x in bounds_ok], [int(x) for x in counts], [int(x) for x in first]


def check_universal_many(
    pairs: Sequence[tuple[WeightVector, WeightVector]],
    candidates: Sequence[WeightVector],
    sample: Sequence[WeightVector],
    direction: str,
    law: str | None = None,
    backend: str | None = None,
) -> LawReport:
    if len(pairs) != len(candidates):
        raise ValueError("one candidate per pair is required")
    bound = "upper" if direction == "coproduct" else "lower"
    report = LawReport(law or f"{direction} universal property")
    bounds_ok, counts, first = universal_sweep(pairs, candidates, sample, direction, backend)
    for (a, b), cand, ok, count, idx in zip(pairs, candidates, bounds_ok, counts, first):
        report.cases += len(sample) + 1
        if not ok:
            report.fail(a, b, cand, note=f"candidate is not a common {bound} bound")
        if count:
            report.fail(
                a,
                b,
                cand,
                sample[idx],
                note=f"candidate is not {'below' if bound == 'upper' else 'above'} the common "
                f"{bound} bound {sample[idx]} ({count} such in sample)",
            )
    return report


def check_universal(
    pair: tuple[WeightVector, WeightVector],
    candidate: WeightVector,
    sample: Sequence[WeightVector],
    direction: str,
    backend: str | None = None,
) -> LawReport:
    """Check ``candidate`` as the coproduct (least upper bound) or product of ``pair``.

    In a preorder the arrows are unique when they exist, so the universal
    property reduces to: the candidate bounds both members, and it is below
    (above, for products) every common bound found in ``sample``.
    """
    return check_universal_many([pair], [candidate], sample, direction, backend=backend)


# t-norms and t-conorms.


def check_norm_axioms(
    op: Callable[[Fraction, Fraction], Fraction],
    kind: str,
    grid: Sequence[Fraction],
    name: str | None = None,
) -> LawReport:
    """Exhaustive grid check of the t-conorm (neutral 0) or t-norm (neutral 1) axioms."""
    if kind not in ("t-conorm", "t-norm"):
        raise ValueError(f"kind must be 't-conorm' or 't-norm', not {kind!r}")
    grid = sorted(set(Fraction(g) for g in grid))
    if grid[0] != 0 or grid[-1] != 1 or any(not ZERO <= g <= ONE for g in grid):
        raise ValueError("grid must lie in [0, 1] and contain both 0 and 1")
    neutral, corner = (ZERO, ONE) if kind == "t-conorm" else (ONE, ZERO)
    report = LawReport(f"{name or getattr(op, '__name__', 'op')} is a {kind}")
    table = {(x, y): op(x, y) for x in grid for y in grid}
    for (x, y), v in table.items():
        report.cases += 1
        if not ZERO <= v <= ONE:
            report.fail(x, y, note=f"value {v} outside [0, 1]")
        report.check_equal(v, table[y, x], x, y, note="commutativity")
    for x, y, z in itertools.product(grid, repeat=3):
        report.check_equal(op(table[x, y], z), op(x, table[y, z]), x, y, z, note="associativity")
    for x in grid:
        report.check_equal(table[x, neutral], x, x, note=f"{neutral} neutral")
    for x, x2, y in itertools.product(grid, repeat=3):
        if x <= x2:
            report.cases += 2
            if table[x, y] > table[x2, y]:
                report.fail(x, x2, y, note="monotone in the first argument")
            if table[y, x] > table[y, x2]:
                report.fail(y, x, x2, note="monotone in the second argument")
    report.check_equal(table[corner, corner], corner, corner, corner, note="corner condition")
    return report


def probabilistic_sum(a: Fraction, b: Fraction) -> Fraction:
    return a + b - a * b


# Suites.


def law_suite(n: int = 3, seed: int = 0, count: int = 200) -> list[LawReport]:
    """Dempster-rule and separable laws on seeded random samples."""
    frame = default_frame(n)
    rng = random.Random(seed)
    xs = mass_samples(frame, count, rng)
    ys = mass_samples(frame, count, rng)
    rng.shuffle(ys)
    zs = mass_samples(frame, count, rng)
    rng.shuffle(zs)
    tag = f"n={n}"
    comm = LawReport(f"dempster commutative [{tag}]")
    assoc = LawReport(f"dempster associative [{tag}]")
    neutral = LawReport(f"vacuous neutral [{tag}]")
    absorb = LawReport(f"contradiction absorbing [{tag}]")
    double = LawReport(f"fast rule = double-sum oracle [{tag}]")
    qprod = LawReport(f"fast rule = commonality-product oracle [{tag}]")
    norm = LawReport(f"normalized rule = renormalized unnormalized rule [{tag}]")
    omega, empty = vacuous(frame), contradiction(frame)
    for x, y, z in zip(xs, ys, zs):
        xy = combine_unnormalized(x, y)
        comm.check_equal(xy, combine_unnormalized(y, x), x, y)
        assoc.check_equal(
            combine_unnormalized(xy, z), combine_unnormalized(x, combine_unnormalized(y, z)), x, y, z
        )
        neutral.check_equal(combine_unnormalized(x, omega), x, x)
        absorb.check_equal(combine_unnormalized(x, empty), empty, x)
        double.check_equal(xy, oracle_combine(x, y), x, y)
        qprod.check_equal(xy, oracle_q_product(x, y), x, y)
        if x.normalized and y.normalized and xy.values[0] != 1:
            nm, k = combine_normalized(x, y)
            norm.check_equal(nm, renormalize(xy)[0], x, y)
            norm.check_equal(k.conflict, xy.values[0], x, y, note="conflict")
    roundtrip = LawReport(f"transform roundtrips bel/pl/q [{tag}]")
    for x in xs:
        for kind in ("bel", "pl", "q"):
            f = transform(x, kind)
            roundtrip.check_equal(list(f.values), naive_transform(x, kind), x, note=f"{kind} vs direct sum")
            roundtrip.check_equal(mass_from_transform(f), x, x, note=f"{kind} inverse")
    homo = LawReport(f"weight combination homomorphism [{tag}]")
    decomp = LawReport(f"decompose(expand(w)) = w, non-dogmatic [{tag}]")
    for _ in range(count):
        w1 = random_weights(frame, rng, dogmatic_rate=0.1)
        w2 = random_weights(frame, rng, dogmatic_rate=0.1)
        homo.check_equal(expand(combine_weights(w1, w2)), combine_unnormalized(expand(w1), expand(w2)), w1, w2)
        homo.check_equal(expand(w1), oracle_expand(w1), w1, note="expand vs folded simple supports")
        w = random_weights(frame, rng)
        decomp.check_equal(decompose(expand(w)), w, w)
    return [comm, assoc, neutral, absorb, double, qprod, norm, roundtrip, homo, decomp]


def _upper_bound_near(w: WeightVector, rng: random.Random, up: bool) -> WeightVector:
    """A vector comparable to ``w`` (above it when ``up``), on the same rational grid style."""
    out = []
    for a in w.weights:
        if rng.random() < 0.5:
            out.append(a)
        else:
            t = Fraction(rng.randint(0, 6), 6)
            out.append(a + (1 - a) * t if up else a * t)
    return WeightVector(w.frame, tuple(out))


def random_universal_triples(frame: Frame, count: int, rng: random.Random, direction: str):
    """Seeded ``(A, B, C)`` triples; half of the ``C`` are forced to be common bounds of ``A`` and ``B``."""
    triples = []
    join = conjoin_weights if direction == "coproduct" else disjoin_weights
    for i in range(count):
        a = random_weights(frame, rng, dogmatic_rate=0.1)
        b = random_weights(frame, rng, dogmatic_rate=0.1)
        if i % 2:
            c = _upper_bound_near(join(a, b), rng, up=direction == "coproduct")
        else:
            c = random_weights(frame, rng, dogmatic_rate=0.1)
        triples.append((a, b, c))
    return triples


def universal_suite(n: int = 2, grid: int = 4, seed: int = 0, count: int = 1000, backend=None) -> list[LawReport]:
    """Conjunction/disjunction as least upper / greatest lower bounds of weight vectors.

    On two-element frames every pair from the weight grid is checked against
    the whole grid; on larger frames ``count`` seeded triples are used.
    """
    frame = default_frame(n)
    reports = []
    for direction, op, name in (("coproduct", conjoin_weights, "conjoin"), ("product", disjoin_weights, "disjoin")):
        if n <= 2:
            sample = weight_grid(frame, rational_grid(grid))
            pairs = list(itertools.combinations(sample, 2))
            reports.append(
                check_universal_many(
                    pairs,
                    [op(a, b) for a, b in pairs],
                    sample,
                    direction,
                    law=f"{name} is the {direction} [n={n}, grid 1/{grid}, {len(sample)} vectors]",
                    backend=backend,
                )
            )
        else:
            rng = random.Random(seed)
            report = LawReport(f"{name} is the {direction} [n={n}, {count} seeded triples]")
            triples = random_universal_triples(frame, count, rng, direction)
            for a, b, c in triples:
                r = check_universal((a, b), op(a, b), [c], direction, backend=backend)
                report.cases += r.cases
                report.failures.extend(r.failures)
            reports.append(report)
    # Dempster's rule is not idempotent, so it cannot be the coproduct.
    a = WeightVector(frame, tuple(Fraction(1, 2) if x == 1 else ZERO for x in range(frame.full)))
    r = check_universal((a, a), combine_weights(a, a), [a], "coproduct", backend=backend)
    witness = LawReport("dempster rule fails coproduct minimality", cases=r.cases)
    if r.passed:
        witness.fail(a, note="expected a minimality violation, none found")
    reports.append(witness)
    return reports


def norm_suite(grid: int = 4) -> list[LawReport]:
    g = rational_grid(grid)
    return [
        check_norm_axioms(probabilistic_sum, "t-conorm", g, name="a+b-ab"),
        check_norm_axioms(max, "t-conorm", g, name="max"),
        check_norm_axioms(min, "t-norm", g, name="min"),
    ]
