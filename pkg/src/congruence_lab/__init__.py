"""congruence-lab: congruence lattices, commutators, spectra, reticulations
and Boolean lifting for finite algebras given by operation tables."""

from .algebra import (
    FiniteAlgebra,
    Operation,
    dump_algebra,
    find_isomorphism,
    is_isomorphic,
    load_algebra,
    parse_algebra,
    product,
    quotient,
    serialize_algebra,
)
from .builders import (
    boolean_lattice,
    chain_lattice,
    diamond as diamond_lattice,
    kite,
    lattice_from_order,
    mv_chain,
    pentagon,
    pointed_pair,
    ring_congruence,
    ring_zn,
    standard_corpus,
)
from .commutator import (
    MatrixSubalgebra,
    SurrogateReport,
    annihilator,
    commutator,
    commutator_stabilization,
    iterated_commutator,
    matrix_subalgebra,
    residuation,
    surrogate_checks,
)
from .congruences import (
    Congruence,
    CongruenceLattice,
    all_congruences,
    brute_force_congruences,
    con_lattice,
    congruence_from_blocks,
    congruence_from_pairs,
    delta,
    interval_above,
    is_congruence,
    join,
    join_irreducibles,
    meet,
    nabla,
    principal_congruence,
)
from .errors import (
    CongruenceLabError,
    EntryRange,
    HypothesisNotMet,
    InputError,
    MalformedDoc,
    NoCBLP,
    NotACongruence,
    NotALattice,
    NotOrthogonal,
    ParentMismatch,
    SignatureMismatch,
    SizeBudgetExceeded,
    TableShape,
    TheoryHypothesisFailed,
)
from .lattices import (
    FiniteLattice,
    LatticeIdeal,
    all_ideals,
    lattice_from_leq,
    maximal_ideals,
    parse_lattice,
    prime_ideals,
    principal_ideal,
    quotient_by_ideal,
    serialize_lattice,
)
from .lifting import (
    BooleanCenter,
    LiftingReport,
    boolean_center_of_congruences,
    cblp_characterization,
    cblp_star_transfer,
    diamond,
    diamond_star_commute,
    has_cblp,
    has_id_blp,
    hyperarchimedean_cblp,
    is_b_normal,
    is_regular,
    lift_orthogonal,
    max_interval_transfer,
    noncoprime_meet_transfer,
    orthogonal_uniqueness_and_atoms,
    projection_image,
    quotient_cblp_descent,
    radical_invariance,
    rad_cblp_criterion,
    regular_join_transfer,
)
from .reticulation import (
    Reticulation,
    build_reticulation,
    check_spec_homeomorphism,
    costar,
    ideal_spectra,
    lambda_,
    preserves_boolean_center,
    star,
)
from .spectrum import (
    OpenSet,
    SpectrumData,
    clopens_of_max,
    d_set,
    is_hyperarchimedean,
    is_prime,
    is_semiprime,
    radical,
    radical_oracle,
    spectrum,
    v_set,
)
from .verify import verify_algebra, verify_corpus

__version__ = "0.1.0"
