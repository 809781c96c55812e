"""Exact Dempster-Shafer belief-function algebra.

Dempster's rules of combination, separable belief functions as weight
vectors with cautious conjunction (pointwise max) and bold disjunction
(pointwise min), and exact decisions about evidence arrows between belief
states in the Boolean, Bayesian and Dempster categories.
"""

from .categories import (
    ArrowWitness,
    Category,
    ProbabilityDistribution,
    arrow_exists_dempster,
    bayes_arrow_exists,
    bayes_condition,
    boolean_hom,
    boolean_meet_join,
    check_extremal,
    compose_witnesses,
    make_probability,
)
from .combination import ConflictReport, combine_normalized, combine_unnormalized, condition
from .errors import *  # noqa: F401,F403
from .frames import Frame, Subset, make_frame
from .mass import (
    MassDistribution,
    SetFunction,
    categorical,
    contradiction,
    make_mass,
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
    leq_weights,
    make_weights,
)

__version__ = "0.1.0"
