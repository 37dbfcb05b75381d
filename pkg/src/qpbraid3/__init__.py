"""
Exact computation in the 3-strand braid group: normal forms, quasipositivity,
quasipositive factorizations and their Hurwitz orbits.
"""

from .bands import is_band, validate_factorization
from .factorsearch import (
    Candidate,
    build_W_I,
    count_orbits,
    enumerate_index_sets,
    is_minimal,
    is_quasipositive,
    minimalize,
    orbit_representatives,
)
from .garside import (
    CLASSICAL,
    DUAL,
    CanonicalBraid,
    conjugate,
    equal,
    is_garside_power,
    is_prefix_divisor,
    normalize,
    to_dual_positive_form,
    to_positive_form,
)
from .hurwitz import (
    CapExceeded,
    Factorization,
    InfiniteOrbit,
    Move,
    apply_moves,
    canonical_key,
    equivalent,
    orbit,
    orbit_partition,
    sigma_move,
)
from .polygon import (
    ExcludedClass,
    RightNormalForm,
    antisymmetries,
    closed_representative,
    orbit_count_e2,
    right_normal_form,
)
from .rewrite import MatchResult, lemma5_match, lemma6_shift
from .words import (
    ARTIN,
    BKL,
    Word,
    bkl_to_artin,
    exponent_sum,
    format_word,
    free_reduce,
    invert,
    parse_word,
    remove,
    tau_delta,
    tau_Delta,
)

__version__ = "0.1.0"
