"""Finite-alphabet information quantities for quantum letter states.

Shannon mutual information of a measurement-induced classical channel, the
Holevo capacity of a cyclic (covariant) pure-state ensemble, and the exact
single-shot quantities for binary pure states: minimum-error probability,
C1, and accessible information.

Internals work in nats; the binary single-shot results are reported in bits
(so orthogonal letters give C1 = 1) with a single conversion point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import entr, rel_entr, xlogy

from .exceptions import SpectrumError

LN2 = float(np.log(2.0))

# DFT rounding on near-degenerate Gram spectra produces eigenvalues slightly
# below zero; anything worse than this signals invalid input data.
NEGATIVE_EIGENVALUE_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class ClassicalChannel:
    """Prior over inputs plus a row-stochastic conditional matrix P(j|i)."""

    prior: np.ndarray
    conditional: np.ndarray

    def __post_init__(self):
        pi = np.array(self.prior, dtype=float)
        cond = np.array(self.conditional, dtype=float)
        object.__setattr__(self, "prior", pi)
        object.__setattr__(self, "conditional", cond)
        if pi.ndim != 1 or cond.ndim != 2 or cond.shape[0] != pi.size:
            raise ValueError("prior and conditional shapes are inconsistent")
        if pi.min() < 0.0 or abs(pi.sum() - 1.0) > 1e-12:
            raise ValueError("prior must be a probability vector")
        if cond.min() < 0.0 or np.abs(cond.sum(axis=1) - 1.0).max() > 1e-12:
            raise ValueError("conditional rows must be probability vectors")


@dataclass(frozen=True, eq=False)
class CovariantEnsemble:
    """Orbit of a pure state under a cyclic unitary, described by overlaps.

    overlaps[k-1] is the inner product of the seed state with its k-th orbit
    image; overlaps[0] must be 1.
    """

    m_size: int
    overlaps: np.ndarray

    def __post_init__(self):
        c = np.array(self.overlaps, dtype=complex)
        object.__setattr__(self, "overlaps", c)
        if self.m_size < 1 or c.shape != (self.m_size,):
            raise ValueError(f"need {self.m_size} overlaps, got shape {c.shape}")
        if abs(c[0] - 1.0) > 1e-12:
            raise ValueError(f"first overlap must be 1, got {c[0]}")


@dataclass(frozen=True)
class BinaryEnsemble:
    """Two pure letters with overlap magnitude kappa and prior (q, 1-q)."""

    kappa: float
    q: float

    def __post_init__(self):
        if not (0.0 <= self.kappa <= 1.0):
            raise ValueError(f"kappa must lie in [0, 1], got {self.kappa}")
        if not (0.0 <= self.q <= 1.0):
            raise ValueError(f"q must lie in [0, 1], got {self.q}")


def binary_entropy_nats(p: float) -> float:
    """H(p) in nats, accurate for p within ~1e-300 of either endpoint."""
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"probability out of range: {p}")
    ps = min(p, 1.0 - p)
    if ps == 0.0:
        return 0.0
    return float(-xlogy(ps, ps) - (1.0 - ps) * np.log1p(-ps))


def shannon_entropy_nats(probs: np.ndarray) -> float:
    """Shannon entropy of a probability vector, with 0 ln 0 = 0."""
    return float(entr(np.asarray(probs, dtype=float)).sum())


def mutual_information(ch: ClassicalChannel) -> float:
    """Shannon mutual information (nats) of prior and conditional."""
    marginal = ch.prior @ ch.conditional
    per_input = rel_entr(ch.conditional, marginal[None, :]).sum(axis=1)
    return float(ch.prior @ per_input)


def covariant_pure_capacity(ens: CovariantEnsemble) -> float:
    """Holevo capacity (nats) of a cyclic pure-state orbit at uniform prior.

    The mixture's spectrum is the DFT of the overlap sequence divided by M;
    eigenvalues within -1e-8 of zero are clamped and the spectrum is
    renormalized, anything more negative raises SpectrumError.
    """
    lam_complex = np.fft.fft(ens.overlaps) / ens.m_size
    if np.abs(lam_complex.imag).max() > 1e-10:
        raise SpectrumError(
            f"overlap sequence yields non-real spectrum: max imag "
            f"{np.abs(lam_complex.imag).max()}"
        )
    lam = lam_complex.real
    if lam.min() < -NEGATIVE_EIGENVALUE_TOL:
        raise SpectrumError(f"Gram spectrum has negative eigenvalue {lam.min()}")
    lam = np.clip(lam, 0.0, None)
    lam /= lam.sum()
    return shannon_entropy_nats(lam)


def binary_error_probability(kappa: float) -> float:
    """Minimum error probability for equiprobable binary pure states."""
    if not (0.0 <= kappa <= 1.0):
        raise ValueError(f"kappa must lie in [0, 1], got {kappa}")
    return 0.5 * (1.0 - np.sqrt(1.0 - kappa**2))


def binary_c1(kappa: float) -> float:
    """Single-shot capacity (bits) of binary pure states: 1 - H2(P_e)."""
    return 1.0 - binary_entropy_nats(binary_error_probability(kappa)) / LN2


def accessible_info_binary_nats(kappa: float, q: float) -> float:
    """Accessible information (nats) of binary pure states at prior (q, 1-q).

    I_a = H(q) - H(f) with f = [1 - sqrt(1 - 4 kappa^2 q (1-q))]/2, evaluated
    in a cancellation-free form so that priors as small as 1e-12 stay exact.
    """
    x = 4.0 * kappa**2 * q * (1.0 - q)
    f = 0.5 * x / (1.0 + np.sqrt(max(1.0 - x, 0.0)))
    return max(binary_entropy_nats(q) - binary_entropy_nats(f), 0.0)


def accessible_info_binary(ens: BinaryEnsemble) -> float:
    """Accessible information in bits."""
    return accessible_info_binary_nats(ens.kappa, ens.q) / LN2
