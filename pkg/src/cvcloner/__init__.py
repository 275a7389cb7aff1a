"""Gaussian cloning machines for coherent states.

Simulates asymmetric 1->2 and symmetric N->M optical cloners as Bogoliubov
transforms, extracts clone fidelities and added-noise figures, and
cross-validates everything against closed forms and an independent
truncated-Fock-space oracle.
"""

from .analysis import (
    CloneReport,
    chaotic_photons,
    chaotic_photons_from_state,
    clone_output_state,
    clone_report,
    expected_chaotic_photons,
    expected_fidelities,
    fidelity_coherent,
    noise_product,
    phase_covariance_defect,
    q_function,
)
from .circuits import (
    AsymSpec,
    ClonerSpec,
    CloningMachine,
    FactorizationParams,
    SymSpec,
    asym_direct,
    asym_factorized,
    asym_params,
    build_cloner,
    sym_1_to_m,
    sym_n_to_m,
)
from .elements import beam_splitter, collect_chain, distribute_chain, nopa
from .fock import (
    FockSpace,
    FockState,
    TruncationError,
    apply_cloning_fock,
    cloning_unitary_fock,
    coherent_fock,
    fidelity_fock,
    mixing_generator,
    mode_expectation,
    reduced_density_matrix,
    squeezing_generator,
)
from .gaussian import (
    BogoliubovTransform,
    GaussianState,
    ModeLabel,
    SymplecticCheck,
    apply_to_gaussian,
    check_symplectic,
    coherent_vacuum_input,
    compose,
    embed,
    identity_transform,
    reduce_mode,
    symplectic_form,
    uncertainty_defect,
)

__all__ = [
    "AsymSpec",
    "BogoliubovTransform",
    "CloneReport",
    "ClonerSpec",
    "CloningMachine",
    "FactorizationParams",
    "FockSpace",
    "FockState",
    "GaussianState",
    "ModeLabel",
    "SymSpec",
    "SymplecticCheck",
    "TruncationError",
    "apply_cloning_fock",
    "apply_to_gaussian",
    "asym_direct",
    "asym_factorized",
    "asym_params",
    "beam_splitter",
    "build_cloner",
    "chaotic_photons",
    "chaotic_photons_from_state",
    "check_symplectic",
    "clone_output_state",
    "clone_report",
    "cloning_unitary_fock",
    "coherent_fock",
    "coherent_vacuum_input",
    "collect_chain",
    "compose",
    "distribute_chain",
    "embed",
    "expected_chaotic_photons",
    "expected_fidelities",
    "fidelity_coherent",
    "fidelity_fock",
    "identity_transform",
    "mixing_generator",
    "mode_expectation",
    "noise_product",
    "nopa",
    "phase_covariance_defect",
    "q_function",
    "reduce_mode",
    "reduced_density_matrix",
    "squeezing_generator",
    "sym_1_to_m",
    "sym_n_to_m",
    "symplectic_form",
    "uncertainty_defect",
]

__version__ = "0.1.0"
