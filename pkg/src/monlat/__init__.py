"""Kernels, cokernels and normal-subobject lattices of finite commutative
monoids and monoidal semilattices, with per-object verifiers for homological
self-duality, preservation of normal maps by dinversion, and di-exactness."""

from .census import brute_force_lattices, lattices_of_size, lattices_up_to
from .checks import (
    CheckReport,
    CheckWitness,
    DecompositionDisagreement,
    DiExtensionGrid,
    FormulationDisagreement,
    build_diextension,
    diexact_check,
    dpn_check,
    objects_at_depth,
    pullback_stability_check,
    run_check,
    second_iso_check,
    subquotient_closure,
    third_iso_check,
)
from .context import (
    CmonContext,
    SesContext,
    SesHom,
    SesObject,
    antinormal_composite,
    cmon_context,
    context_at_depth,
    is_normal_map_in,
    make_ses,
    normal_decomposition_in,
    ses_context,
    ses_hom_from_beta,
)
from .monoid import (
    FinMonoid,
    InvalidMonoid,
    MonoidError,
    MonoidHom,
    NormalDecomposition,
    NotNormal,
    Subset,
    cokernel_by_submonoid,
    is_normal_submonoid,
    kernel_subset,
    normal_closure,
    normal_decomposition,
    syntactic_quotient,
    validate_monoid,
)
from .nsub import (
    GaloisReport,
    LatticeMethodDisagreement,
    LatticeWitness,
    NSubLattice,
    cokersquare_check,
    enumerate_nsub,
    is_distributive,
    is_modular,
    join_agreement_check,
    join_via_uniinter,
    lattice_of_semilattice,
    phi_psi,
)
from .semilattice import (
    CoverGraph,
    bool2,
    chain,
    diamond,
    fixture,
    klein_four,
    pentagon,
    principal_downset,
    principal_upset,
    quotient_by_downset,
    semilattice_from_covers,
    six_lattice,
)

__version__ = "0.1.0"
