"""Exact laws, bijections and samplers for adjacency statistics of random permutations."""

from .bijections import (
    CanonicalCycleForm,
    build_circular,
    canonical_cycle_form,
    circular_delete,
    circular_insert,
    fixed_to_shifted,
    fundamental_transform,
    inverse_fundamental,
    peel_circular,
    shifted_to_fixed,
)
from .commutator import (
    CommutatorReport,
    ExchangeablePairSample,
    exact_commutator_pmf,
    exchangeable_pair_sample,
    expectation_formula,
    mc_commutator_pmf,
    two_cycle_factorial_moment,
)
from .exact import (
    ExactPmf,
    TvReport,
    check_derangement_identity,
    circular_pmf,
    derangement_count,
    fixed_point_pmf,
    poisson_reference,
    shifted_pmf,
    theta_empty_count,
    tv_distance,
    unseparated_pmf,
    whitworth_zero_prob,
)
from .generators import RandomSource, RestaurantState, exact_chain_law, uniform_permutation
from .perm import (
    CircularPermutation,
    CyclePartition,
    Permutation,
    circular_successions,
    commutator,
    compose,
    conjugate,
    cycle_partition,
    fixed_points,
    inverse,
    shifted_successions,
    unseparated_pairs,
)

__version__ = "0.1.0"
