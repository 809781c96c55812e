import itertools
import random
from fractions import Fraction as F

import pytest

from beliefcat.categories import (
    ArrowWitness,
    Category,
    arrow_exists_dempster,
    bayes_arrow_exists,
    bayes_condition,
    boolean_hom,
    boolean_meet_join,
    boolean_witnesses,
    check_extremal,
    compose_witnesses,
    dempster_arrow_unique,
    dempster_witness_bounds,
    identity,
    make_probability,
    point_mass,
    uniform,
)
from beliefcat.combination import combine_unnormalized
from beliefcat.errors import (
    EndpointMismatch,
    FrameMismatch,
    FrameTooLarge,
    KindMismatch,
    NotNormalizedInput,
    ZeroProbabilityEvidence,
)
from beliefcat.frames import make_frame
from beliefcat.mass import categorical, contradiction, make_mass, simple_support, vacuous
from beliefcat.separable import (
    conjoin_weights,
    disjoin_weights,
    expand,
    leq_weights,
    make_weights,
    weight_witness,
)
from beliefcat.verify import mass_samples, random_mass, random_weights

from tests.strategies import FRAMES


@pytest.fixture
def masses_ab(ab):
    a, b = ab.subset("a"), ab.subset("b")
    m_a = simple_support(ab, a, F(1, 2))
    m_ab = combine_unnormalized(m_a, simple_support(ab, b, F(1, 3)))
    return m_a, m_ab


def test_dempster_arrow_examples(ab, masses_ab):
    m_a, m_ab = masses_ab
    wit = arrow_exists_dempster(vacuous(ab), m_ab)
    assert wit.evidence == m_ab and wit.is_valid()
    assert dempster_arrow_unique(vacuous(ab), m_ab)
    assert arrow_exists_dempster(m_ab, m_ab).evidence == vacuous(ab)
    assert arrow_exists_dempster(m_a, vacuous(ab)) is None


def test_commonality_obstruction(ab, masses_ab):
    # q of the target is 1 at {b}, but any update of m_a has q({b}) <= 1/2.
    m_a, _ = masses_ab
    rng = random.Random(0)
    for _ in range(200):
        e = random_mass(ab, rng)
        assert combine_unnormalized(e, m_a) != vacuous(ab)


def test_non_unique_witness(ab):
    # every evidence sends the total contradiction to itself
    bounds = dempster_witness_bounds(contradiction(ab), contradiction(ab))
    assert bounds == [(0, 1)] * 4
    assert not dempster_arrow_unique(contradiction(ab), contradiction(ab))


def test_normalized_arrows(ab):
    a, b = ab.subset("a"), ab.subset("b")
    m = simple_support(ab, a, F(1, 2))
    target = make_mass(ab, [(a, F(2, 5)), (b, F(1, 5)), (ab.omega, F(2, 5))])
    wit = arrow_exists_dempster(m, target, normalized=True)
    assert wit is not None and wit.is_valid() and wit.evidence.normalized
    assert wit.category is Category.DEMPSTER_NORMALIZED
    assert arrow_exists_dempster(categorical(ab, a), categorical(ab, b), normalized=True) is None
    assert arrow_exists_dempster(vacuous(ab), target, normalized=True).evidence == target
    with pytest.raises(NotNormalizedInput):
        arrow_exists_dempster(m, contradiction(ab), normalized=True)


def test_normalized_can_reach_what_unnormalized_cannot(ab):
    # renormalization lets 1{a} become the target after discarding conflict
    a, b = ab.subset("a"), ab.subset("b")
    m = make_mass(ab, [(a, F(1, 2)), (b, F(1, 2))])
    assert arrow_exists_dempster(m, categorical(ab, a)) is None
    wit = arrow_exists_dempster(m, categorical(ab, a), normalized=True)
    assert wit is not None and wit.is_valid()


def test_frame_checks(ab):
    big = make_frame("abcde")
    with pytest.raises(FrameTooLarge):
        arrow_exists_dempster(vacuous(big), vacuous(big))
    with pytest.raises(FrameMismatch):
        arrow_exists_dempster(vacuous(ab), vacuous(make_frame("xy")))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_witness_soundness_random(n):
    rng = random.Random(21 + n)
    frame = FRAMES[n]
    for _ in range(40):
        m1 = random_mass(frame, rng)
        e = random_mass(frame, rng)
        m2 = combine_unnormalized(e, m1)
        wit = arrow_exists_dempster(m1, m2)
        assert wit is not None and wit.is_valid()
        assert combine_unnormalized(wit.evidence, m1) == m2


def test_decision_matches_exhaustive_on_coarse_grid(ab):
    # Independent check: enumerate all evidence with masses in multiples of 1/4.
    grid = [F(k, 4) for k in range(5)]
    evidences = [make_mass(ab, list(enumerate(vals))) for vals in itertools.product(grid, repeat=4) if sum(vals) == 1]
    m1 = make_mass(ab, [(ab.subset("a"), F(1, 2)), (ab.omega, F(1, 2))])
    reachable = {combine_unnormalized(e, m1) for e in evidences}
    for m2 in reachable:
        assert arrow_exists_dempster(m1, m2) is not None
    assert arrow_exists_dempster(m1, vacuous(ab)) is None
    assert arrow_exists_dempster(m1, categorical(ab, ab.subset("b"))) is None


def test_composition_examples(ab, masses_ab):
    m_a, m_ab = masses_ab
    a, b = ab.subset("a"), ab.subset("b")
    e1 = ArrowWitness(Category.DEMPSTER, vacuous(ab), m_a, simple_support(ab, a, F(1, 2)))
    e2 = ArrowWitness(Category.DEMPSTER, m_a, m_ab, simple_support(ab, b, F(1, 3)))
    assert e1.is_valid() and e2.is_valid()
    comp = compose_witnesses(e1, e2)
    assert comp.source == vacuous(ab) and comp.target == m_ab
    assert comp.evidence == m_ab
    assert compose_witnesses(identity(Category.DEMPSTER, vacuous(ab)), e1) == e1
    assert compose_witnesses(e1, identity(Category.DEMPSTER, m_a)) == e1
    x1 = ArrowWitness(Category.BOOLEAN, ab.omega, a, a)
    x2 = ArrowWitness(Category.BOOLEAN, a, a, ab.omega)
    assert compose_witnesses(x1, x2).evidence == a
    with pytest.raises(EndpointMismatch):
        compose_witnesses(e2, e1)
    with pytest.raises(KindMismatch):
        compose_witnesses(e1, x2)


@pytest.mark.parametrize("normalized", [False, True])
def test_category_axioms_random(normalized):
    rng = random.Random(99)
    cat = Category.DEMPSTER_NORMALIZED if normalized else Category.DEMPSTER
    for i in range(100):
        frame = FRAMES[rng.choice([1, 2, 3])]
        m0, f, g, h = mass_samples(frame, 4, random.Random(i), normalized=normalized)[:1] + [
            random_mass(frame, rng) for _ in range(3)
        ]
        if normalized:
            f, g, h = (simple_support(frame, rng.randrange(1, frame.size), F(rng.randint(0, 5), 6)) for _ in range(3))
        try:
            arrows = []
            src = m0
            for e in (f, g, h):
                w = ArrowWitness(cat, src, None, e)
                tgt = w.apply()
                arrows.append(ArrowWitness(cat, src, tgt, e))
                src = tgt
        except Exception:
            continue
        a1, a2, a3 = arrows
        left = compose_witnesses(compose_witnesses(a1, a2), a3)
        right = compose_witnesses(a1, compose_witnesses(a2, a3))
        assert left.evidence == right.evidence and left.is_valid()
        assert compose_witnesses(identity(cat, a1.source), a1) == a1
        assert compose_witnesses(a1, identity(cat, a1.target)) == a1


def test_boolean_hom_examples(ab):
    a = ab.subset("a")
    assert boolean_hom(ab.omega, a).evidence == a
    assert boolean_hom(a, ab.omega) is None
    for s in ab.subsets():
        assert boolean_hom(s, ab.empty).evidence == ab.empty


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_boolean_logic_is_inclusion_exhaustive(n):
    frame = FRAMES[n]
    for s, t in itertools.product(frame.subsets(), repeat=2):
        found = boolean_witnesses(s, t)
        assert bool(found) == (t <= s)
        assert (boolean_hom(s, t) is not None) == bool(found)
        if found:
            assert boolean_hom(s, t).is_valid()


def test_boolean_meet_join(ab):
    a, b = ab.subset("a"), ab.subset("b")
    assert boolean_meet_join(a, b) == (ab.empty, ab.omega)
    for s in ab.subsets():
        assert boolean_meet_join(s, s) == (s, s)
        assert boolean_meet_join(s, ab.omega) == (s, ab.omega)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_boolean_meet_join_universal_exhaustive(n):
    frame = FRAMES[n]
    subsets = list(frame.subsets())
    for s, t in itertools.product(subsets, repeat=2):
        meet, join = boolean_meet_join(s, t)
        # coproduct: arrows s -> meet, t -> meet, and meet -> c whenever s -> c and t -> c
        assert boolean_hom(s, meet) and boolean_hom(t, meet)
        assert boolean_hom(join, s) and boolean_hom(join, t)
        for c in subsets:
            if boolean_hom(s, c) and boolean_hom(t, c):
                assert boolean_hom(meet, c)
            if boolean_hom(c, s) and boolean_hom(c, t):
                assert boolean_hom(c, join)


def test_bayes_condition(abc):
    u = uniform(abc)
    assert bayes_condition(u, abc.omega) == u
    assert bayes_condition(u, abc.subset("a", "b")).atoms == (F(1, 2), F(1, 2), 0)
    with pytest.raises(ZeroProbabilityEvidence):
        bayes_condition(u, abc.empty)


def test_bayes_arrows(abc):
    u = uniform(abc)
    assert bayes_arrow_exists(u, point_mass(abc, "a")).evidence == abc.subset("a")
    assert bayes_arrow_exists(point_mass(abc, "a"), u) is None
    skewed = make_probability(abc, [F(1, 2), F(1, 4), F(1, 4)])
    assert bayes_arrow_exists(u, skewed) is None
    # conditioning on {a} gives the same point mass whatever else is in the evidence
    wit = bayes_arrow_exists(point_mass(abc, "a"), point_mass(abc, "a"))
    assert wit.is_valid()
    x = ArrowWitness(Category.BAYES, u, bayes_condition(u, abc.subset("a", "b")), abc.subset("a", "b"))
    y = ArrowWitness(Category.BAYES, x.target, point_mass(abc, "b"), abc.subset("b", "c"))
    assert compose_witnesses(x, y).evidence == abc.subset("b")


def test_check_extremal_dempster(ab):
    rng = random.Random(4)
    samples = mass_samples(ab, 30, rng)
    rep = check_extremal(vacuous(ab), samples, "initial", "dempster")
    assert rep.passed and rep.cases == 30 and rep.uniqueness_checked
    assert check_extremal(contradiction(ab), samples, "terminal", "dempster").passed
    bad = check_extremal(simple_support(ab, ab.subset("a"), F(1, 2)), samples, "initial", "dempster")
    assert not bad.passed
    assert "FAIL" in bad.summary()


def test_check_extremal_normalized(ab):
    rng = random.Random(8)
    samples = mass_samples(ab, 20, rng, normalized=True)
    assert all(s.normalized for s in samples)
    assert check_extremal(vacuous(ab), samples, "initial", Category.DEMPSTER_NORMALIZED).passed
    rep = check_extremal(contradiction(ab), samples, "terminal", Category.DEMPSTER_NORMALIZED)
    assert not rep.passed
    assert rep.failures[0][1] == "candidate is not an object of the category"


def test_check_extremal_uniqueness_failure(ab):
    # 1{a} reaches itself through many evidences (anything with q(a) = 1), so it is not initial.
    rep = check_extremal(categorical(ab, ab.subset("a")), [categorical(ab, ab.subset("a"))], "initial", "dempster")
    assert rep.failures and rep.failures[0][1] == "arrow not unique"


def test_check_extremal_boolean_and_bayes(abc):
    subsets = list(abc.subsets())
    assert check_extremal(abc.omega, subsets, "initial", "boolean").passed
    assert check_extremal(abc.empty, subsets, "terminal", "boolean").passed
    assert not check_extremal(abc.subset("a"), subsets, "initial", "boolean").passed
    skewed = make_probability(abc, [F(1, 2), F(1, 4), F(1, 4)])
    rep = check_extremal(uniform(abc), [point_mass(abc, "a"), skewed], "initial", "bayes")
    assert not rep.passed and rep.failures[0] == (skewed, "no arrow")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_separable_order_implies_arrow(n):
    rng = random.Random(50 + n)
    frame = FRAMES[n]
    for _ in range(40):
        w1 = random_weights(frame, rng, dogmatic_rate=0.1)
        w2 = conjoin_weights(w1, random_weights(frame, rng, dogmatic_rate=0.1))
        assert leq_weights(w1, w2)
        wit = arrow_exists_dempster(expand(w1), expand(w2))
        assert wit is not None and wit.is_valid()
        # the separable witness works too
        assert combine_unnormalized(expand(weight_witness(w1, w2)), expand(w1)) == expand(w2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_strictly_lower_weights_have_no_arrow(n):
    rng = random.Random(60 + n)
    frame = FRAMES[n]
    for _ in range(40):
        w1 = random_weights(frame, rng, zero_rate=0.1)
        w2 = disjoin_weights(w1, random_weights(frame, rng))
        if w2 == w1:
            continue
        assert arrow_exists_dempster(expand(w1), expand(w2)) is None


def test_arrow_can_lower_a_weight_through_non_separable_evidence(ab):
    a, b = ab.subset("a"), ab.subset("b")
    w1 = make_weights(ab, [(ab.empty, F(1, 2))])
    w2 = make_weights(ab, [(ab.empty, F(1, 10)), (a, F(2, 3)), (b, F(2, 3))])
    assert not leq_weights(w1, w2)
    wit = arrow_exists_dempster(expand(w1), expand(w2))
    assert wit is not None and wit.is_valid()
    assert wit.evidence == make_mass(ab, [(a, F(2, 5)), (b, F(2, 5)), (ab.omega, F(1, 5))])
