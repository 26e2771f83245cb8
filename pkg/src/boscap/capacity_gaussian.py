"""Closed-form capacities of constrained one-mode Gaussian channels.

Two settings are covered: a mean-energy constraint on the displacement prior
of a fixed zero-mean carrier (input constraint), and a mean-photon budget on
the states leaving the transmitter of an attenuated noisy line (transmitter
constraint).  Both split into a regime A, where the optimal output is a
thermal (Bose-Einstein) mixture, and a regime B, where the budget is too
small to thermalize the output and the prior variance water-fills into the
cheaper quadrature.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .channels import AttenuationChannel, apply_attenuation, lambda_noise
from .exceptions import InfeasibleConstraintError, UnsupportedParameterError
from .gaussian_core import (
    DEFAULT_CONSTANTS,
    OneModeGaussianState,
    PhysicalConstants,
    check_state,
    g_function,
    mean_photon_number,
    squeezed_state,
)


@dataclass(frozen=True)
class InputConstraint:
    """Mean displacement-energy bound E (units of hbar*omega per letter)."""

    energy_e: float

    def __post_init__(self):
        if self.energy_e < 0.0:
            raise ValueError(f"energy_e must be nonnegative, got {self.energy_e}")


@dataclass(frozen=True)
class TransmitterConstraint:
    """Mean photon budget N_tr on the states leaving the transmitter."""

    n_tr: float

    def __post_init__(self):
        if self.n_tr < 0.0:
            raise ValueError(f"n_tr must be nonnegative, got {self.n_tr}")


@dataclass(frozen=True, eq=False)
class CapacityResult:
    """Capacity value (nats) with the active regime and optimizer data.

    condition_margin is RHS - LHS of the active regime inequality (so regime
    is "A" exactly when it is nonnegative); optimal_beta is the covariance of
    the maximizing Gaussian prior over displacements.
    """

    value: float
    regime: str
    condition_margin: float
    optimal_beta: np.ndarray


def _gordon(n: float) -> float:
    """(n+1) ln(n+1) - n ln(n), the entropy of a thermal level n."""
    return float(xlogy(n + 1.0, n + 1.0) - xlogy(n, n))


def _energy_matrix(state: OneModeGaussianState, omega: float) -> np.ndarray:
    """Energy-weighted correlation matrix [[w^2 a_qq, w a_qp], [w a_qp, a_pp]]."""
    return np.array(
        [
            [omega**2 * state.alpha_qq, omega * state.alpha_qp],
            [omega * state.alpha_qp, state.alpha_pp],
        ]
    )


def regime_condition_input(
    state0: OneModeGaussianState,
    c: InputConstraint,
    consts: PhysicalConstants = DEFAULT_CONSTANTS,
) -> tuple[bool, float]:
    """Whether the budget E admits a thermal optimal output, with the margin.

    The test is [ (omega a_qq - a_pp/omega)/2 ]^2 + a_qp^2 <= (E/omega)^2;
    the returned margin is RHS - LHS.
    """
    check_state(state0, consts)
    omega = consts.omega
    lhs = (0.5 * (omega * state0.alpha_qq - state0.alpha_pp / omega)) ** 2
    lhs += state0.alpha_qp**2
    margin = (c.energy_e / omega) ** 2 - lhs
    return margin >= 0.0, margin


def _optimal_prior_covariance(
    state0: OneModeGaussianState, energy: float, consts: PhysicalConstants
) -> np.ndarray:
    """Prior covariance beta maximizing the output entropy at budget energy.

    In regime A the optimum fills alpha up to an isotropic (thermal) energy
    matrix; otherwise all budget goes to the soft eigendirection of the
    energy matrix.  Either way Sp(eps beta) = energy exactly.
    """
    omega = consts.omega
    m_alpha = _energy_matrix(state0, omega)
    evals, evecs = np.linalg.eigh(m_alpha)
    half_spread = 0.5 * (evals[1] - evals[0])
    if energy >= half_spread:
        m_gamma = (0.5 * (evals[0] + evals[1]) + energy) * np.eye(2)
    else:
        m_gamma = evecs @ np.diag([evals[0] + 2.0 * energy, evals[1]]) @ evecs.T
    m_beta = m_gamma - m_alpha
    scale = np.diag([1.0 / omega, 1.0])
    return scale @ m_beta @ scale


def capacity_input_constrained(
    state0: OneModeGaussianState,
    c: InputConstraint,
    consts: PhysicalConstants = DEFAULT_CONSTANTS,
) -> CapacityResult:
    """Capacity (nats) for displacements of a fixed zero-mean Gaussian carrier.

    The displacement prior is constrained to mean energy at most E.  The
    carrier's mean vector is ignored: only alpha enters the formulas.
    """
    check_state(state0, consts)
    hbar, omega = consts.hbar, consts.omega
    energy = c.energy_e
    in_a, margin = regime_condition_input(state0, c, consts)

    # Sp(eps alpha): carrier energy above/below the vacuum floor plus hbar w/2
    half_trace = 0.5 * (omega**2 * state0.alpha_qq + state0.alpha_pp)
    second = g_function(state0.det_alpha / hbar**2)
    if in_a:
        first = g_function(((energy + half_trace) / (hbar * omega)) ** 2)
    else:
        spread = np.hypot(
            0.5 * (omega**2 * state0.alpha_qq - state0.alpha_pp),
            omega * state0.alpha_qp,
        )
        arg = (energy + half_trace) ** 2 - (spread - energy) ** 2
        first = g_function(arg / (hbar * omega) ** 2)

    beta = _optimal_prior_covariance(state0, energy, consts)
    return CapacityResult(
        value=max(first - second, 0.0),
        regime="A" if in_a else "B",
        condition_margin=margin,
        optimal_beta=beta,
    )


def attenuated_carrier(
    gamma: float,
    theta: float,
    channel: AttenuationChannel,
    consts: PhysicalConstants = DEFAULT_CONSTANTS,
) -> OneModeGaussianState:
    """Squeezed carrier after the attenuation channel (zero mean)."""
    return apply_attenuation(squeezed_state(gamma, theta, consts), channel, consts)


def transmitter_effective_energy(
    carrier: OneModeGaussianState,
    channel: AttenuationChannel,
    c: TransmitterConstraint,
    consts: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Displacement budget at the channel output implied by the photon budget.

    Equals k^2 [hbar omega (N_tr + 1/2) - Sp(eps alpha_carrier)]; raises if
    the carrier alone already exceeds the transmitter budget.
    """
    n_carrier = mean_photon_number(carrier, consts)
    slack = c.n_tr - n_carrier
    if slack < -1e-12 * max(1.0, n_carrier):
        raise InfeasibleConstraintError(
            f"transmitter budget N_tr={c.n_tr} is below the carrier's own mean "
            f"photon number {n_carrier}; no displacement prior is admissible"
        )
    return consts.hbar * consts.omega * channel.k**2 * max(slack, 0.0)


def capacity_transmitter_constrained(
    squeeze: tuple[float, float],
    channel: AttenuationChannel,
    c: TransmitterConstraint,
    consts: PhysicalConstants = DEFAULT_CONSTANTS,
) -> CapacityResult:
    """Capacity (nats) of the attenuated noisy channel under a photon budget.

    The transmitter displaces a pure squeezed carrier (gamma, theta); the
    mean energy of the emitted states is capped at hbar omega (N_tr + 1/2).
    The closed forms cover omega = 1 and theta in {0, pi} (no q-p cross
    correlation); other parameters raise UnsupportedParameterError, and the
    numerical route (oracle.beta_maximization) remains available for them.
    """
    gamma, theta = squeeze
    if consts.omega != 1.0:
        raise UnsupportedParameterError(
            f"closed form requires omega = 1, got {consts.omega}"
        )
    carrier = squeezed_state(gamma, theta, consts)
    if abs(carrier.alpha_qp) > 1e-12 * consts.hbar * max(1.0, np.cosh(2.0 * gamma)):
        raise UnsupportedParameterError(
            f"closed form requires alpha_qp = 0 (theta in {{0, pi}}), got theta={theta}"
        )

    hbar = consts.hbar
    k, n_c = channel.k, channel.n_c
    n_sq = mean_photon_number(carrier, consts)
    energy = transmitter_effective_energy(carrier, channel, c, consts)
    out = apply_attenuation(carrier, channel, consts)

    in_a, margin = regime_condition_input(out, InputConstraint(energy), consts)
    # The budget form of the same condition: max alpha entry <= hbar (N_tr + 1/2).
    # Algebraically equivalent for a pure carrier; disagreement can only be
    # floating-point rounding at the boundary.
    alpha_max = max(carrier.alpha_qq, carrier.alpha_pp)
    in_a_budget = alpha_max <= hbar * (c.n_tr + 0.5)
    if in_a != in_a_budget:
        warnings.warn(
            "regime conditions (substituted-energy vs budget form) disagree at "
            "rounding level; using the substituted-energy verdict",
            RuntimeWarning,
            stacklevel=2,
        )

    second_arg = (n_c + 0.5) ** 2 + k**2 * n_sq * ((1.0 - k**2) + 2.0 * n_c)
    if in_a:
        value = _gordon(k**2 * c.n_tr + n_c) - g_function(second_arg)
    else:
        lam = lambda_noise(channel)
        a_max = alpha_max / hbar
        first_arg = (
            k**2 * (2.0 * c.n_tr + 1.0) * (lam + k**2 * a_max)
            + lam**2
            - k**4 * a_max**2
        )
        value = g_function(first_arg) - g_function(second_arg)

    beta = _optimal_prior_covariance(out, energy, consts)
    return CapacityResult(
        value=max(value, 0.0),
        regime="A" if in_a else "B",
        condition_margin=margin,
        optimal_beta=beta,
    )
