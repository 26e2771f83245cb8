"""One-mode and multimode Gaussian states and their von Neumann entropies.

Correlation matrices are second moments of the quadratures (q, p) in units
carrying hbar; a one-mode state is physical iff det(alpha) >= hbar^2/4,
with equality exactly for pure states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .exceptions import DomainError, UnphysicalStateError

# Relative slack on the uncertainty bound; squeezed-state purity holds only
# to rounding, so exact comparisons would reject valid states.
VALIDITY_RTOL = 1e-9


@dataclass(frozen=True)
class PhysicalConstants:
    """Unit system for the quadratures (defaults hbar = omega = 1)."""

    hbar: float = 1.0
    omega: float = 1.0

    def __post_init__(self):
        if self.hbar <= 0.0 or self.omega <= 0.0:
            raise ValueError("hbar and omega must be positive")


DEFAULT_CONSTANTS = PhysicalConstants()


@dataclass(frozen=True)
class OneModeGaussianState:
    """Mean quadrature vector plus the 2x2 correlation matrix entries."""

    mean: tuple[float, float]
    alpha_qq: float
    alpha_pp: float
    alpha_qp: float = 0.0

    def __post_init__(self):
        if not (self.alpha_qq > 0.0 and self.alpha_pp > 0.0):
            raise UnphysicalStateError(
                "diagonal correlation entries must be positive, got "
                f"alpha_qq={self.alpha_qq}, alpha_pp={self.alpha_pp}"
            )

    @property
    def det_alpha(self) -> float:
        return self.alpha_qq * self.alpha_pp - self.alpha_qp**2

    def alpha_matrix(self) -> np.ndarray:
        return np.array(
            [[self.alpha_qq, self.alpha_qp], [self.alpha_qp, self.alpha_pp]]
        )


@dataclass(frozen=True, eq=False)
class MultimodeCorrelation:
    """Real symmetric 2s x 2s correlation matrix in (q1..qs, p1..ps) order."""

    alpha: np.ndarray
    s: int

    def __post_init__(self):
        a = np.array(self.alpha, dtype=float)
        object.__setattr__(self, "alpha", a)
        if self.s < 1 or a.shape != (2 * self.s, 2 * self.s):
            raise ValueError(f"alpha must be {2*self.s}x{2*self.s}, got {a.shape}")
        scale = max(1.0, float(np.abs(a).max()))
        if np.abs(a - a.T).max() > 1e-10 * scale:
            raise ValueError("correlation matrix must be symmetric")


def check_state(
    state: OneModeGaussianState, consts: PhysicalConstants = DEFAULT_CONSTANTS
) -> None:
    """Raise UnphysicalStateError unless det(alpha) >= hbar^2/4 (with slack)."""
    bound = 0.25 * consts.hbar**2
    if state.det_alpha < bound * (1.0 - VALIDITY_RTOL):
        raise UnphysicalStateError(
            f"det(alpha) = {state.det_alpha} below uncertainty bound {bound}"
        )


def g_function(d_squared, rtol: float = VALIDITY_RTOL):
    """Entropy (nats) of a Gaussian mode from its squared symplectic invariant.

    g(d^2) = (d + 1/2) ln(d + 1/2) - (d - 1/2) ln(d - 1/2), continuous at the
    pure-state boundary d = 1/2 where the second term is taken as 0.  Accepts
    scalars or arrays; the domain is d^2 >= 1/4 up to a relative slack.
    """
    x = np.asarray(d_squared, dtype=float)
    if np.any(x < 0.25 * (1.0 - rtol)):
        raise DomainError(f"g_function argument below 1/4: {d_squared}")
    d = np.sqrt(np.maximum(x, 0.25))
    out = xlogy(d + 0.5, d + 0.5) - xlogy(d - 0.5, d - 0.5)
    if np.ndim(d_squared) == 0:
        return float(out)
    return out


def entropy_one_mode(
    state: OneModeGaussianState, consts: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Von Neumann entropy in nats; depends on alpha only, not the mean."""
    check_state(state, consts)
    return g_function(state.det_alpha / consts.hbar**2)


def symplectic_form(s: int, consts: PhysicalConstants = DEFAULT_CONSTANTS) -> np.ndarray:
    """Commutator matrix of (q1..qs, p1..ps): [[0, hbar I], [-hbar I, 0]]."""
    eye = np.eye(s)
    zero = np.zeros((s, s))
    return np.block([[zero, consts.hbar * eye], [-consts.hbar * eye, zero]])


def symplectic_invariants(
    corr: MultimodeCorrelation, consts: PhysicalConstants = DEFAULT_CONSTANTS
) -> np.ndarray:
    """Squared symplectic eigenvalues of alpha in units of hbar (>= 1/4 each).

    Computed from the singular values of alpha^(1/2) Delta^(-1) alpha^(1/2),
    which is numerically stable for near-pure states; each invariant appears
    twice in the returned length-2s vector.
    """
    w, v = np.linalg.eigh(corr.alpha)
    if w[0] <= 0.0:
        raise UnphysicalStateError(f"correlation matrix not positive definite: {w[0]}")
    root = (v * np.sqrt(w)) @ v.T
    s, hbar = corr.s, consts.hbar
    eye = np.eye(s)
    zero = np.zeros((s, s))
    delta_inv = np.block([[zero, -eye / hbar], [eye / hbar, zero]])
    sigma = np.linalg.svd(root @ delta_inv @ root, compute_uv=False)
    invariants = (sigma / hbar) ** 2
    if invariants.min() < 0.25 * (1.0 - VALIDITY_RTOL):
        raise UnphysicalStateError(
            f"symplectic eigenvalue below hbar/2: min invariant {invariants.min()}"
        )
    return invariants


def entropy_multimode(
    corr: MultimodeCorrelation, consts: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Von Neumann entropy (nats) of an s-mode Gaussian state."""
    invariants = symplectic_invariants(corr, consts)
    return 0.5 * float(np.sum(g_function(invariants)))


def mean_photon_number(
    state: OneModeGaussianState, consts: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Mean occupation of the zero-mean state with the same alpha.

    Uses only the correlation matrix: (omega^2 a_qq + a_pp)/(2 hbar omega) - 1/2.
    Displacement energy |mean|^2 is deliberately not included; callers that
    need total energy add it themselves.
    """
    check_state(state, consts)
    hbar, omega = consts.hbar, consts.omega
    return (omega**2 * state.alpha_qq + state.alpha_pp) / (2.0 * hbar * omega) - 0.5


def squeezed_state(
    gamma: float, theta: float, consts: PhysicalConstants = DEFAULT_CONSTANTS
) -> OneModeGaussianState:
    """Pure squeezed vacuum with amplitude gamma and angle theta.

    det(alpha) = hbar^2/4 holds identically; the mean photon number is
    sinh^2(gamma) for every theta.
    """
    hbar, omega = consts.hbar, consts.omega
    ch, sh = math.cosh(2.0 * gamma), math.sinh(2.0 * gamma)
    return OneModeGaussianState(
        mean=(0.0, 0.0),
        alpha_qq=hbar / (2.0 * omega) * (ch - sh * math.cos(theta)),
        alpha_pp=hbar * omega / 2.0 * (ch + sh * math.cos(theta)),
        alpha_qp=hbar / 2.0 * sh * math.sin(theta),
    )


def vacuum_state(consts: PhysicalConstants = DEFAULT_CONSTANTS) -> OneModeGaussianState:
    return squeezed_state(0.0, 0.0, consts)


def coherent_state(
    mean: tuple[float, float], consts: PhysicalConstants = DEFAULT_CONSTANTS
) -> OneModeGaussianState:
    """Displaced vacuum: vacuum-shaped alpha with the given mean."""
    vac = vacuum_state(consts)
    return OneModeGaussianState(
        mean=(float(mean[0]), float(mean[1])),
        alpha_qq=vac.alpha_qq,
        alpha_pp=vac.alpha_pp,
        alpha_qp=0.0,
    )


def thermal_state(
    n_bar: float, consts: PhysicalConstants = DEFAULT_CONSTANTS
) -> OneModeGaussianState:
    """Thermal state with mean occupation n_bar."""
    if n_bar < 0.0:
        raise DomainError(f"n_bar must be nonnegative, got {n_bar}")
    hbar, omega = consts.hbar, consts.omega
    level = n_bar + 0.5
    return OneModeGaussianState(
        mean=(0.0, 0.0),
        alpha_qq=hbar * level / omega,
        alpha_pp=hbar * omega * level,
        alpha_qp=0.0,
    )


def multimode_from_modes(states: list[OneModeGaussianState]) -> MultimodeCorrelation:
    """Embed independent one-mode states into (q1..qs, p1..ps) ordering."""
    s = len(states)
    alpha = np.zeros((2 * s, 2 * s))
    for i, st in enumerate(states):
        alpha[i, i] = st.alpha_qq
        alpha[s + i, s + i] = st.alpha_pp
        alpha[i, s + i] = alpha[s + i, i] = st.alpha_qp
    return MultimodeCorrelation(alpha=alpha, s=s)
