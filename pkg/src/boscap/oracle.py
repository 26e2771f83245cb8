"""Independent brute-force checks for the closed-form capacities.

Everything here deliberately avoids the analytic shortcuts used elsewhere:
thermal entropies come from truncated Fock spectra, Holevo quantities of
coherent ensembles from Gram-matrix eigenvalues, and constrained capacities
from direct numerical maximization (exponentiated-gradient ascent over
priors, grid-plus-golden search over prior covariances).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import entr

from .capacity_gaussian import (
    InputConstraint,
    TransmitterConstraint,
    transmitter_effective_energy,
)
from .channels import AttenuationChannel, apply_attenuation
from .exceptions import (
    ConvergenceError,
    DomainError,
    InfeasibleConstraintError,
    SpectrumError,
    TruncationWarning,
)
from .gaussian_core import (
    DEFAULT_CONSTANTS,
    OneModeGaussianState,
    PhysicalConstants,
    check_state,
    g_function,
)
from .number_channel import OptimizerSettings
from .scalar_opt import golden_max


@dataclass(frozen=True)
class FockTruncation:
    """Fock cutoff for spectrum-based entropies, with escaped-mass diagnostic."""

    n_max: int
    escaped_mass: float = 0.0

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError(f"n_max must be positive, got {self.n_max}")
        if self.escaped_mass < 0.0:
            raise ValueError("escaped_mass must be nonnegative")


@dataclass(frozen=True, eq=False)
class CoherentEnsemble:
    """Finitely many coherent amplitudes with prior probabilities."""

    amplitudes: np.ndarray
    priors: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        pri = np.array(self.priors, dtype=float)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "priors", pri)
        if amps.ndim != 1 or pri.shape != amps.shape:
            raise ValueError("amplitudes and priors must be 1-D of equal length")
        if pri.min() < 0.0 or abs(pri.sum() - 1.0) > 1e-12:
            raise ValueError("priors must be a probability vector")


@dataclass(frozen=True)
class ConstellationGrid:
    """Ring grid: radii_count equispaced radii up to max_radius, phases_count phases."""

    radii_count: int
    phases_count: int
    max_radius: float

    def __post_init__(self):
        if self.radii_count < 1 or self.phases_count < 1:
            raise ValueError("radii_count and phases_count must be positive")
        if self.max_radius < 0.0:
            raise ValueError("max_radius must be nonnegative")

    def points(self) -> np.ndarray:
        radii = self.max_radius * np.arange(1, self.radii_count + 1) / self.radii_count
        phases = np.exp(2j * np.pi * np.arange(self.phases_count) / self.phases_count)
        return np.unique((radii[:, None] * phases[None, :]).ravel())


def coherent_overlap(a, b):
    """<a|b> = exp[-(|a|^2 + |b|^2)/2 + conj(a) b]; |<a|b>|^2 = e^{-|a-b|^2}.

    Accepts scalars or broadcastable arrays of complex amplitudes.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    out = np.exp(-(np.abs(a) ** 2 + np.abs(b) ** 2) / 2.0 + np.conj(a) * b)
    if out.ndim == 0:
        return complex(out)
    return out


def fock_thermal_entropy(n_bar: float, trunc: FockTruncation) -> float:
    """Shannon entropy of the truncated, renormalized thermal Fock spectrum.

    Independent check of the closed form g_function((n_bar + 1/2)^2); agrees
    within 1e-8 for n_max >= 200 and n_bar <= 2.
    """
    if n_bar < 0.0:
        raise DomainError(f"n_bar must be nonnegative, got {n_bar}")
    if n_bar == 0.0:
        return 0.0
    n = np.arange(trunc.n_max + 1)
    log_p = n * np.log(n_bar / (1.0 + n_bar)) - np.log1p(n_bar)
    p = np.exp(log_p)
    captured = p.sum()
    escaped = max(1.0 - captured, 0.0)
    if escaped > 1e-10:
        warnings.warn(
            f"thermal spectrum loses mass {escaped:.3e} at n_max={trunc.n_max}",
            TruncationWarning,
            stacklevel=2,
        )
    return float(entr(p / captured).sum())


def _weighted_gram(ens: CoherentEnsemble) -> np.ndarray:
    overlaps = coherent_overlap(ens.amplitudes[:, None], ens.amplitudes[None, :])
    weights = np.sqrt(ens.priors)
    return weights[:, None] * overlaps * weights[None, :]


def gram_mixture_entropy(ens: CoherentEnsemble) -> tuple[float, float]:
    """Holevo quantity and mixture entropy (nats) of a pure coherent ensemble.

    Both equal the entropy of the weighted Gram matrix's spectrum because the
    letters are pure.  Eigenvalues within -1e-8 of zero are clamped and the
    spectrum renormalized; anything more negative raises SpectrumError.
    """
    lam = np.linalg.eigvalsh(_weighted_gram(ens))
    if lam.min() < -1e-8:
        raise SpectrumError(f"Gram matrix has negative eigenvalue {lam.min()}")
    lam = np.clip(lam, 0.0, None)
    lam /= lam.sum()
    chi = float(entr(lam).sum())
    return chi, chi


def _information_scores(ens: CoherentEnsemble) -> tuple[float, np.ndarray]:
    """chi and the per-letter relative entropies D(rho_i || mixture).

    For pure letters D_i = -<a_i| ln(mixture) |a_i>, evaluated in the span of
    the ensemble through the weighted Gram eigendecomposition.
    """
    overlaps = coherent_overlap(ens.amplitudes[:, None], ens.amplitudes[None, :])
    weights = np.sqrt(ens.priors)
    gram = weights[:, None] * overlaps * weights[None, :]
    lam, vecs = np.linalg.eigh(gram)
    if lam.min() < -1e-8:
        raise SpectrumError(f"Gram matrix has negative eigenvalue {lam.min()}")
    chi = float(entr(np.clip(lam, 0.0, None)).sum())
    keep = lam > lam.max() * 1e-14
    lam_k = lam[keep]
    # components of each letter on the mixture eigenvectors
    comp = overlaps @ (weights[:, None] * vecs[:, keep]) / np.sqrt(lam_k)[None, :]
    scores = -(np.abs(comp) ** 2) @ np.log(lam_k)
    return chi, scores


def _feasible_start(energies: np.ndarray, budget: float) -> np.ndarray:
    """Uniform prior, blended toward the cheapest points if over budget.

    The blend keeps support as wide as feasibility allows: multiplicative
    updates never revive a zero-mass letter, so starting on a single point
    would freeze the ascent.
    """
    n = energies.size
    uniform = np.full(n, 1.0 / n)
    mean = float(uniform @ energies)
    if mean <= budget:
        return uniform
    e_min = float(energies.min())
    if e_min > budget:
        raise InfeasibleConstraintError(
            f"every constellation point exceeds the energy budget {budget}"
        )
    cheapest = np.zeros(n)
    min_set = energies <= e_min * (1.0 + 1e-12) + 1e-300
    cheapest[min_set] = 1.0 / min_set.sum()
    t = (budget - e_min) / (mean - e_min)
    return t * uniform + (1.0 - t) * cheapest


def constrained_ensemble_capacity(
    amplitudes: np.ndarray,
    budget_m: float,
    settings: OptimizerSettings = OptimizerSettings(),
) -> tuple[float, np.ndarray]:
    """Maximize the Holevo quantity over priors with mean energy <= budget_m.

    Exponentiated-gradient ascent (multiplicative updates by the per-letter
    relative-entropy scores) with the energy multiplier re-solved by
    bisection each step, keeping every iterate feasible; the objective is
    concave so the ascent converges to the constrained maximum.
    """
    amps = np.asarray(amplitudes, dtype=complex)
    energies = np.abs(amps) ** 2
    prior = _feasible_start(energies, budget_m)
    chi_prev = -np.inf
    mu_lo, mu_hi = settings.multiplier_bracket
    for _ in range(settings.max_iters):
        chi, scores = _information_scores(CoherentEnsemble(amps, prior))
        if chi - chi_prev < settings.tol:
            return chi, prior
        chi_prev = chi
        log_weights = np.log(np.clip(prior, 1e-300, None)) + scores

        def candidate(mu: float) -> tuple[float, np.ndarray]:
            lw = log_weights - mu * energies
            lw -= lw.max()
            w = np.exp(lw)
            w /= w.sum()
            return float(w @ energies), w

        mean0, cand = candidate(max(mu_lo, 0.0))
        if mean0 <= budget_m:
            prior = cand
            continue
        hi = 1.0
        while candidate(hi)[0] > budget_m:
            hi *= 2.0
            if hi > mu_hi:
                raise InfeasibleConstraintError(
                    f"no multiplier in bracket {settings.multiplier_bracket} "
                    f"meets the energy budget {budget_m}"
                )
        lo = max(mu_lo, 0.0)
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if candidate(mid)[0] > budget_m:
                lo = mid
            else:
                hi = mid
        prior = candidate(hi)[1]
    raise ConvergenceError(
        f"Holevo ascent still improving by more than tol={settings.tol} "
        f"after {settings.max_iters} iterations"
    )


def brute_force_constellation_capacity(
    grid_spec: ConstellationGrid,
    budget_m: float,
    settings: OptimizerSettings = OptimizerSettings(),
) -> float:
    """Best Holevo quantity over priors on a fixed ring-grid constellation.

    Realizes the discrete-support supremum at desk scale: never exceeds the
    continuous-input capacity and increases monotonically under grid
    refinement.
    """
    if budget_m < 0.0:
        raise DomainError(f"budget must be nonnegative, got {budget_m}")
    points = grid_spec.points()
    if points.size == 1:
        return 0.0
    chi, _ = constrained_ensemble_capacity(points, budget_m, settings)
    return chi


def beta_maximization(
    state0: OneModeGaussianState,
    channel: AttenuationChannel | None,
    constraint: InputConstraint | TransmitterConstraint,
    grid: int = 200,
    consts: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Directly maximize the entropy gain over diagonal prior covariances.

    Works at the channel output: the carrier state0 is pushed through the
    channel (identity when None), the constraint is converted to the output
    displacement budget, and G(det(alpha + beta)) - G(det alpha) is maximized
    over beta = diag(b_qq, b_pp) >= 0 with Sp(eps beta) <= budget.  For
    carriers with alpha_qp = 0 the diagonal restriction is lossless, and the
    budget always binds because the objective grows with either entry.
    """
    check_state(state0, consts)
    hbar, omega = consts.hbar, consts.omega
    k2 = channel.k**2 if channel is not None else 1.0
    out = apply_attenuation(state0, channel, consts) if channel is not None else state0

    if isinstance(constraint, TransmitterConstraint):
        ch = channel if channel is not None else AttenuationChannel(k=1.0, n_c=0.0)
        energy = transmitter_effective_energy(state0, ch, constraint, consts)
    else:
        # displacement prior scales by k^2 through the channel, and so does
        # its admissible energy
        energy = k2 * constraint.energy_e
    if energy == 0.0:
        return 0.0

    base = g_function(out.det_alpha / hbar**2)

    def gain(beta_qq: float) -> float:
        beta_pp = 2.0 * energy - omega**2 * beta_qq
        det = (out.alpha_qq + beta_qq) * (out.alpha_pp + beta_pp) - out.alpha_qp**2
        return g_function(det / hbar**2) - base

    upper = 2.0 * energy / omega**2
    grid_points = np.linspace(0.0, upper, max(grid, 3))
    values = [gain(b) for b in grid_points]
    best = int(np.argmax(values))
    lo = grid_points[max(best - 1, 0)]
    hi = grid_points[min(best + 1, len(grid_points) - 1)]
    _, best_val = golden_max(gain, lo, hi, tol=1e-13)
    return max(best_val, 0.0)
