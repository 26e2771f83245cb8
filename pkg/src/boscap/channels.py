"""Attenuation of Gaussian states and binomial thinning of photon numbers.

The amplitude coefficient k of the Gaussian attenuator and the per-photon
survival probability eta of the thinning channel are kept as distinct named
parameters throughout; physically eta = k^2, but the identification is never
made implicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import binom

from .exceptions import DomainError
from .gaussian_core import (
    DEFAULT_CONSTANTS,
    OneModeGaussianState,
    PhysicalConstants,
    check_state,
)


@dataclass(frozen=True)
class AttenuationChannel:
    """Linear attenuator with amplitude transmission k and classical noise N_c."""

    k: float
    n_c: float = 0.0

    def __post_init__(self):
        if not (0.0 < self.k <= 1.0):
            raise DomainError(f"k must lie in (0, 1], got {self.k}")
        if self.n_c < 0.0:
            raise DomainError(f"n_c must be nonnegative, got {self.n_c}")


@dataclass(frozen=True)
class PhotonChannel:
    """Photon-number channel: each photon survives independently with prob eta."""

    eta: float
    n_max: int

    def __post_init__(self):
        if not (0.0 < self.eta <= 1.0):
            raise DomainError(f"eta must lie in (0, 1], got {self.eta}")
        if self.n_max < 1:
            raise DomainError(f"n_max must be a positive integer, got {self.n_max}")


def lambda_noise(channel: AttenuationChannel) -> float:
    """Added quadrature noise (1 - k^2)/2 + N_c of the attenuator."""
    return 0.5 * (1.0 - channel.k**2) + channel.n_c


def apply_attenuation(
    state: OneModeGaussianState,
    channel: AttenuationChannel,
    consts: PhysicalConstants = DEFAULT_CONSTANTS,
) -> OneModeGaussianState:
    """Push a one-mode state through the attenuator.

    The mean scales by k and alpha maps to k^2 alpha + hbar lambda(k, N_c) I;
    the output always satisfies the uncertainty bound.
    """
    check_state(state, consts)
    k2 = channel.k**2
    add = consts.hbar * lambda_noise(channel)
    return OneModeGaussianState(
        mean=(channel.k * state.mean[0], channel.k * state.mean[1]),
        alpha_qq=k2 * state.alpha_qq + add,
        alpha_pp=k2 * state.alpha_pp + add,
        alpha_qp=k2 * state.alpha_qp,
    )


def binomial_transition(channel: PhotonChannel) -> np.ndarray:
    """Row-stochastic matrix T[n_x, n_y] = Binomial(n_x, eta) pmf at n_y.

    Entries with n_y > n_x are zero.  Evaluated through scipy's saddle-point
    pmf, which stays accurate (rows sum to 1 within 1e-12) for n_max of at
    least a few thousand, far beyond what naive factorials would allow.
    """
    n = np.arange(channel.n_max + 1)
    t = binom.pmf(n[None, :], n[:, None], channel.eta)
    row_err = np.abs(t.sum(axis=1) - 1.0).max()
    if row_err > 1e-12:
        raise FloatingPointError(
            f"binomial transition rows deviate from stochasticity by {row_err}"
        )
    return t
