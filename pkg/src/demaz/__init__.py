"""Demazure products and adjoints for eventually periodic integer permutations."""

from .errors import (
    AsymptoteMismatch,
    ClosureVerification,
    DemazError,
    InconsistentSlipface,
    InfiniteInversions,
    InternalInconsistency,
    InvalidGeneratorSet,
    InvalidPermutation,
    NotASlipface,
    NotDominated,
    NotSubmodular,
    OracleExtremum,
    ParseError,
    ResourceLimit,
)
from .grammar import format_perm, parse_perm
from .perm import (
    Permutation,
    ResidueClass,
    Violation,
    apply,
    canonicalize,
    compose,
    delta_s,
    diff_bound,
    eval_s,
    from_window,
    get_max_window,
    has_inversion,
    identity,
    inv_count,
    inverse,
    inversions_in,
    is_finitary,
    make_affine,
    make_from_one_line,
    make_gamma,
    make_shift,
    make_sigma_set,
    set_max_window,
    shift_of,
    validate,
)
from .slipface import (
    EssPoint,
    EssSet,
    Slipface,
    ess_set,
    read_slipface,
    sf_dual,
    sf_equal,
    sf_eval,
    sf_eval_grid,
    sf_from_perm,
    sf_from_rank_grid,
    sf_is_submodular,
    sf_leq,
    sf_leq_ess,
    sf_leq_grid,
    sf_star,
    sf_tll,
    sf_tlr,
    sf_to_perm,
    sf_validate,
    write_slipface,
)
from .order import (
    bruhat_leq,
    bruhat_leq_witness,
    leq_chi,
    weak_left_leq,
    weak_left_leq_witness,
    weak_right_leq,
    weak_right_leq_witness,
)
from .demazure import (
    ReducedTuple,
    ReductionWitness,
    greedy_witness,
    is_reduced_pair,
    is_reduced_pair_witness,
    is_reduced_tuple,
    reduce,
    reduce_tuple,
    star,
    star_sigma,
    stingy_witness,
    tll,
    tll_sigma,
    tlr,
)
from .render import RenderSpec, render

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
