"""Exhaustive computations in small finite groups, organized around one
question: which normal subgroups contain their own centralizer.

The package builds groups as dense multiplication tables (catalog
constructors, direct and central products, corpus files), computes the
classical structural objects (conjugacy classes, normal subgroups, series,
radicals and residuals), and verifies a family of claims stating that
various canonical subgroups are self-centralizing.  The cli module exposes
the same machinery as the `largesub` command.
"""

from .catalog import (
    CATALOG_KEYS,
    alternating_group,
    dihedral_group,
    klein_four_group,
    named_group,
    quaternion_group,
    special_linear_2_3,
    symmetric_group,
    trivial_group,
)
from .classes import (
    BUILTIN_CLASS_KEYS,
    ClassPredicate,
    ClosureFlags,
    builtin_class,
    derived_length,
    has_minimal_supersoluble_residual,
    has_normal_hall_pi_prime,
    in_extension_closure,
    is_abelian,
    is_nilpotent,
    is_pi_group,
    is_pi_separable,
    is_quasinilpotent,
    is_quasisimple,
    is_soluble,
    is_supersoluble,
    nilpotency_class,
)
from .corpus import (
    CorpusRecord,
    dump_record,
    iter_records,
    read_corpus,
    read_records,
    record_for_group,
    write_corpus,
)
from .errors import (
    BadBound,
    BadClassBound,
    ClosureFlagsMissing,
    ClosureNotDeclared,
    CorpusFormatError,
    GroupError,
    HypothesisFailed,
    NotAbelian,
    NotAFittingClassWitness,
    NotAFormationWitness,
    NotAGroup,
    NotCentral,
    NotClosed,
    NotIsomorphism,
    NotNormal,
    NotSoluble,
    OrderCapExceeded,
    TrivialGroup,
    UnknownClass,
    UnknownName,
)
from .groups import (
    DEFAULT_ORDER_CAP,
    ORDER_CAP_ENV,
    AbelianInvariants,
    FiniteGroup,
    Subgroup,
    abelian_basis,
    abelian_invariants,
    abelian_isomorphism,
    central_product,
    central_product_with_embeddings,
    cyclic_group,
    direct_product,
    frattini_cover_abelian,
    from_multiplication_table,
    from_permutation_generators,
    order_cap,
    quotient_group,
    subgroup_as_group,
    validate_axioms,
)
from .largeness import (
    CLAIMS,
    CentralCoverWitness,
    ScanRecord,
    VerificationReport,
    WitnessRecord,
    central_cover_witness,
    is_large,
    scan_exceptional,
    verify_derived_length_bound_large,
    verify_fitting_large,
    verify_formation_member_large,
    verify_generalized_fitting_large,
    verify_maximal_abelian_large,
    verify_maximal_member_large,
    verify_nilpotent_class_bound_large,
    verify_selector,
    verify_two_step_core_large,
)
from .radicals import (
    RadicalResult,
    class_radical,
    class_residual,
    components,
    fitting_subgroup,
    generalized_fitting_subgroup,
    layer,
    maximal_normal_members,
    pi_core,
    pi_prime_pi_core,
    soluble_radical,
    supersoluble_residual,
)
from .reference import named_reference_groups, reference_corpus
from .structure import (
    FactorTag,
    SeriesReport,
    center,
    centralizer,
    chief_series,
    closure,
    commutator_subgroup,
    composition_factors,
    composition_series,
    conjugacy_classes,
    derived_series,
    frattini_of_abelian,
    generating_subset,
    intersect,
    is_simple,
    join,
    lower_central_series,
    maximal_normal_subgroups,
    minimal_normal_subgroups,
    normal_closure,
    normal_subgroups,
    prime_factors,
    socle,
    subnormal_subgroups,
)

__version__ = "0.1.0"
