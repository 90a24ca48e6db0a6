"""radical_lab: exhaustive verification of radicals, prime-type
submodules and 2-primality over finite rings and finite left modules."""

from .core import (
    LEFT_IDEAL,
    SUBMODULE,
    TWO_SIDED_IDEAL,
    FiniteModule,
    FiniteRing,
    ModuleElement,
    ModuleHom,
    RingElement,
    Substructure,
    build_ring_from_tables,
    direct_product,
    identity_hom,
    module_from_action,
    quotient_module,
    quotient_ring,
    regular_module,
)
from .errors import (
    AxiomViolation,
    CharacterizationMismatch,
    ConfigError,
    EmptyList,
    InvariantBreach,
    KernelNotContained,
    KindMismatch,
    NotEpimorphism,
    NotProper,
    ParentMismatch,
    RadicalLabError,
    RingMismatch,
    SizeGuardExceeded,
    UnknownSuite,
)
from .limits import Limits, default_limits
from .substructures import (
    all_substructures,
    annihilator,
    as_submodule,
    generated_substructure,
    intersect,
    intersect_family,
    sum_substructures,
)
from .radicals import (
    FLAG_ORDER,
    RadicalReport,
    RingProperties,
    SubdirectDecomposition,
    Verdict,
    beta,
    beta_co,
    beta_co_ring,
    beta_co_s,
    beta_ring,
    beta_s,
    completely_prime_ideals,
    completely_prime_submodules,
    envelope,
    envelope_submodule,
    envelope_zero_ring,
    hom_transfer_check,
    is_completely_prime_ideal,
    is_completely_prime_submodule,
    is_completely_semiprime_submodule,
    is_eventually_annihilating,
    is_nil_left_ideal,
    is_prime_ideal,
    is_prime_submodule,
    is_semiprime_submodule,
    is_two_primal_ideal,
    is_two_primal_module,
    is_two_primal_ring,
    is_two_primal_submodule,
    module_class_flags,
    nil_elements,
    prime_ideals,
    prime_submodules,
    quotient_ideal_torsion_free,
    quotient_torsion_free,
    radical_report,
    ring_properties,
    satisfies_crf,
    satisfies_rf,
    strongly_nilpotent_submodule,
    subdirect_decomposition,
    submodule_lattice,
    submodule_satisfies_crf,
    submodule_satisfies_rf,
)
from .catalog import (
    Catalog,
    Candidate,
    SearchResult,
    catalog_from_rings,
    compile_predicate,
    default_catalog,
    default_rings,
    iter_candidates,
    module_abelian_with_action,
    module_cyclic,
    module_example_exx,
    module_free,
    module_regular,
    ring_matrix,
    ring_product,
    ring_upper_triangular,
    ring_Zn,
    search_counterexample,
)
from .suites import CheckResult, SuiteReport, run_suite, suite_names

__version__ = "0.1.0"
