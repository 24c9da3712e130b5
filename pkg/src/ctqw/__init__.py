"""Transport efficiency of continuous-time quantum walks with one
absorbing trap, on structured graph families, with cross-checked
closed-form, subspace, spectral, and dynamical routes."""

from .connectivity import (
    ConnectivityReport,
    CorrelationRow,
    algebraic_connectivity,
    connectivity_report,
    correlation_table,
    edge_connectivity,
    normalized_algebraic_connectivity,
    normalized_laplacian,
    vertex_connectivity,
)
from .graphs import (
    Complete,
    CompleteBipartite,
    FamilySpec,
    Graph,
    JoinedComplete,
    PaleyPrime,
    Petersen,
    Rook,
    Simplex,
    SrgParams,
    build,
    build_complete,
    build_complete_bipartite,
    build_joined_complete,
    build_paley_prime,
    build_petersen,
    build_rook,
    build_simplex,
    family_name,
    graph_from_json,
    graph_to_json,
    laplacian,
    srg_parameters,
    validate_srg,
)
from .numerics import (
    EigenSystem,
    TrappedEvolution,
    evolve_trapped,
    orthonormalize_against,
    sym_eig,
)
from .reduction import (
    ReducedHamiltonian,
    SubspaceBasis,
    UnsupportedFamilyError,
    closed_form_basis,
    closed_form_reduced_hamiltonian,
    krylov_basis,
    reduced_hamiltonian,
    subspace_equal,
)
from .transport import (
    EfficiencyReport,
    Explicit,
    InitialState,
    Localized,
    Superposition,
    TrapSpec,
    UnsupportedCaseError,
    class_representative,
    class_uniform_state,
    class_vertices,
    efficiency_closed_form,
    efficiency_dynamic,
    efficiency_lambda,
    efficiency_report,
    efficiency_subspace,
    initial_state_vector,
    lambda_subspace,
    superposition_rule,
)

__version__ = "0.1.0"
