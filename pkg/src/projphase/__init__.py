"""Geometric phases between arbitrary quantum states, including orthogonal
pairs, computed through projective measurement.

Library layers: :mod:`projphase.statekit` (state algebra and geodesics),
:mod:`projphase.phases` (phase functionals and transition functions),
:mod:`projphase.bloch` (two-state sphere specialization),
:mod:`projphase.dynamics` (spin systems and unitary evolution),
:mod:`projphase.topology` (winding/Chern numbers and jump classification),
:mod:`projphase.offdiag` (off-diagonal phases),
:mod:`projphase.interferometer` (fringe simulation and phase extraction).
The ``projphase`` console script runs reproducible scenarios over all of it.
"""

from .bloch import BlochConnection, BlochPoint, curvature_flux, from_state, solid_angle, to_state
from .dynamics import (
    DynamicalPhaseRecord,
    EvolutionPath,
    HermitianOperator,
    UnitaryOperator,
    dynamical_phase,
    evolve,
    evolve_exact,
    near_orthogonal_loop,
    remove_dynamical_phase,
    rotation_y,
    spin_operators,
)
from .errors import (
    CoveringViolationError,
    DimensionMismatchError,
    GeometricPhaseError,
    MultipleCrossingsError,
    NoCrossingError,
    OrthogonalStatesError,
    PhaseUnidentifiableError,
    PreconditionError,
    ReferenceSearchError,
    RefinementNeededError,
    StepSizeError,
    WindingUndefinedError,
)
from .interferometer import (
    Interferogram,
    PoissonNoise,
    default_chi_grid,
    extract_phase,
    simulate_fringe,
    with_extraction,
)
from .offdiag import (
    EigenpathPair,
    OffDiagResult,
    off_diagonal_direct,
    off_diagonal_reconstructed,
    phase_relations_direct,
    phase_relations_reconstructed,
    reference_state_search,
)
from .phases import (
    PhaseValue,
    UnitPhasor,
    bargmann_invariant,
    compose_segments,
    pancharatnam_phase,
    phasor_gap,
    projective_phase,
    switch_covering,
    transition_function,
    wrap_principal,
)
from .statekit import (
    ORTHO_EPS,
    Geodesic,
    StateVector,
    basis_state,
    connection_increment,
    geodesic_point,
    inner,
    parallel_transport,
    random_state,
)
from .topology import (
    ChernReport,
    JumpClassification,
    UnwrappedPhase,
    WindingReport,
    accumulate_projective_phase,
    chern_number_finite_loop,
    classify_orthogonal_crossing,
    winding_number,
)

__version__ = "0.1.0"

__all__ = [
    "ORTHO_EPS",
    "BlochConnection",
    "BlochPoint",
    "ChernReport",
    "CoveringViolationError",
    "DimensionMismatchError",
    "DynamicalPhaseRecord",
    "EigenpathPair",
    "EvolutionPath",
    "Geodesic",
    "GeometricPhaseError",
    "HermitianOperator",
    "Interferogram",
    "JumpClassification",
    "MultipleCrossingsError",
    "NoCrossingError",
    "OffDiagResult",
    "OrthogonalStatesError",
    "PhaseUnidentifiableError",
    "PhaseValue",
    "PoissonNoise",
    "PreconditionError",
    "ReferenceSearchError",
    "RefinementNeededError",
    "StateVector",
    "StepSizeError",
    "UnitPhasor",
    "UnitaryOperator",
    "UnwrappedPhase",
    "WindingReport",
    "WindingUndefinedError",
    "accumulate_projective_phase",
    "bargmann_invariant",
    "basis_state",
    "chern_number_finite_loop",
    "classify_orthogonal_crossing",
    "compose_segments",
    "connection_increment",
    "curvature_flux",
    "default_chi_grid",
    "dynamical_phase",
    "evolve",
    "evolve_exact",
    "extract_phase",
    "from_state",
    "geodesic_point",
    "inner",
    "near_orthogonal_loop",
    "off_diagonal_direct",
    "off_diagonal_reconstructed",
    "pancharatnam_phase",
    "parallel_transport",
    "phase_relations_direct",
    "phase_relations_reconstructed",
    "phasor_gap",
    "projective_phase",
    "random_state",
    "reference_state_search",
    "remove_dynamical_phase",
    "rotation_y",
    "simulate_fringe",
    "solid_angle",
    "spin_operators",
    "switch_covering",
    "to_state",
    "transition_function",
    "winding_number",
    "with_extraction",
    "wrap_principal",
]
