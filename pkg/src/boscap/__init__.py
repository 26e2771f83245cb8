"""Classical information capacities of bosonic optical channels.

Closed-form Gaussian-channel capacities under input and transmitter
constraints, photon-number channel capacities, binary discretizations of the
coherent-state channel, and independent brute-force oracles cross-checking
every closed form.
"""

from .capacity_discrete import (
    BinaryEnsemble,
    ClassicalChannel,
    CovariantEnsemble,
    accessible_info_binary,
    binary_c1,
    binary_error_probability,
    covariant_pure_capacity,
    mutual_information,
)
from .capacity_gaussian import (
    CapacityResult,
    InputConstraint,
    TransmitterConstraint,
    capacity_input_constrained,
    capacity_transmitter_constrained,
    regime_condition_input,
)
from .channels import (
    AttenuationChannel,
    PhotonChannel,
    apply_attenuation,
    binomial_transition,
    lambda_noise,
)
from .discretization import (
    BinarySolution,
    EnergyBudget,
    c2_binary,
    c12_binary,
    c_be,
    verify_c2_optimality,
)
from .exceptions import (
    ConvergenceError,
    DomainError,
    InfeasibleConstraintError,
    SpectrumError,
    TruncationWarning,
    UnphysicalStateError,
    UnsupportedParameterError,
)
from .gaussian_core import (
    DEFAULT_CONSTANTS,
    MultimodeCorrelation,
    OneModeGaussianState,
    PhysicalConstants,
    coherent_state,
    entropy_multimode,
    entropy_one_mode,
    g_function,
    mean_photon_number,
    multimode_from_modes,
    squeezed_state,
    thermal_state,
    vacuum_state,
)
from .number_channel import (
    OptimizerSettings,
    PhotonDistribution,
    attenuated_number_holevo,
    bose_einstein,
    hyo_asymptote,
    noiseless_number_capacity,
    optimize_number_capacity,
)
from .oracle import (
    CoherentEnsemble,
    ConstellationGrid,
    FockTruncation,
    beta_maximization,
    brute_force_constellation_capacity,
    coherent_overlap,
    fock_thermal_entropy,
    gram_mixture_entropy,
)

__version__ = "0.1.0"
