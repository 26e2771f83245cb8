"""Photon-number channel capacities: closed forms, Holevo quantity, optimizer.

Number-diagonal inputs stay number-diagonal under binomial thinning, so all
von Neumann entropies here reduce to Shannon entropies of photon-count
distributions.  The photon budget is imposed on the channel INPUT mean
(transmitter side); asymptote comparisons convert via <n_y> = eta <n_x>.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import entr

from .channels import PhotonChannel, binomial_transition
from .exceptions import ConvergenceError, DomainError, InfeasibleConstraintError, TruncationWarning

EULER_GAMMA = float(np.euler_gamma)


@dataclass(frozen=True, eq=False)
class PhotonDistribution:
    """Probability vector over Fock occupations 0..n_max."""

    probs: np.ndarray
    n_max: int
    escaped_mass: float = 0.0

    def __post_init__(self):
        p = np.array(self.probs, dtype=float)
        object.__setattr__(self, "probs", p)
        if p.shape != (self.n_max + 1,):
            raise ValueError(f"need {self.n_max + 1} entries, got shape {p.shape}")
        if p.min() < 0.0 or abs(p.sum() - 1.0) > 1e-10:
            raise ValueError("probs must be a normalized probability vector")

    def mean(self) -> float:
        return float(self.probs @ np.arange(self.n_max + 1))

    def entropy(self) -> float:
        return float(entr(self.probs).sum())


@dataclass(frozen=True)
class OptimizerSettings:
    tol: float = 1e-9
    max_iters: int = 20000
    multiplier_bracket: tuple[float, float] = (0.0, 1e6)

    def __post_init__(self):
        if self.tol <= 0.0 or self.max_iters < 1:
            raise ValueError("tol must be positive and max_iters >= 1")


@dataclass(frozen=True, eq=False)
class NumberCapacityResult:
    """Converged capacity with the attaining input and the ascent trace."""

    capacity: float
    optimum: PhotonDistribution
    ascent: np.ndarray
    multiplier: float
    iterations: int


def bose_einstein(n_bar: float, n_max: int) -> PhotonDistribution:
    """Geometric (maximum-entropy) photon distribution with mean n_bar.

    Truncated at n_max and renormalized; the escaped tail mass is recorded
    on the result and a TruncationWarning is raised when it exceeds 1e-6.
    """
    if n_bar < 0.0:
        raise DomainError(f"n_bar must be nonnegative, got {n_bar}")
    n = np.arange(n_max + 1)
    if n_bar == 0.0:
        probs = np.zeros(n_max + 1)
        probs[0] = 1.0
        return PhotonDistribution(probs=probs, n_max=n_max, escaped_mass=0.0)
    ratio = n_bar / (1.0 + n_bar)
    log_p = n * np.log(ratio) - np.log1p(n_bar)
    probs = np.exp(log_p)
    captured = probs.sum()
    escaped = max(1.0 - captured, 0.0)
    if escaped > 1e-6:
        warnings.warn(
            f"Bose-Einstein(n_bar={n_bar}) loses mass {escaped:.3e} at n_max={n_max}",
            TruncationWarning,
            stacklevel=2,
        )
    return PhotonDistribution(probs=probs / captured, n_max=n_max, escaped_mass=escaped)


def noiseless_number_capacity(n_bar: float) -> float:
    """ln(1 + n) + n ln(1 + 1/n) in nats, extended continuously to 0 at n = 0."""
    if n_bar < 0.0:
        raise DomainError(f"n_bar must be nonnegative, got {n_bar}")
    if n_bar == 0.0:
        return 0.0
    return float(np.log1p(n_bar) + n_bar * np.log1p(1.0 / n_bar))


def attenuated_number_holevo(dist: PhotonDistribution, ch: PhotonChannel) -> float:
    """Holevo quantity (nats) of the thinning channel for a fixed input.

    H(output) minus the mean conditional entropy of the binomial rows; all
    entropies are Shannon entropies of count distributions.
    """
    if dist.n_max != ch.n_max:
        raise ValueError(
            f"input n_max={dist.n_max} and channel n_max={ch.n_max} must match"
        )
    transition = binomial_transition(ch)
    output = dist.probs @ transition
    conditional = entr(transition).sum(axis=1)
    return float(entr(output).sum() - dist.probs @ conditional)


def default_n_max(budget: float) -> int:
    """Fock cutoff leaving < 1e-8 geometric tail mass for desk-scale budgets."""
    return int(np.ceil(budget * 20.0 + 50.0))


def optimize_number_capacity(
    eta: float,
    n_bar_budget: float,
    n_max: int | None = None,
    settings: OptimizerSettings = OptimizerSettings(),
) -> NumberCapacityResult:
    """Maximize the thinning-channel Holevo quantity at a mean-photon budget.

    Alternating (Blahut-Arimoto style) ascent on the mutual information of
    the binomial transition matrix, with the energy multiplier re-solved by
    bisection at every step so each iterate satisfies the budget exactly.
    The objective is concave, the iterates are feasible, and the recorded
    ascent is non-decreasing; iteration stops when the capacity increment
    falls below settings.tol.
    """
    if not (0.0 < eta <= 1.0):
        raise DomainError(f"eta must lie in (0, 1], got {eta}")
    if n_bar_budget < 0.0:
        raise DomainError(f"budget must be nonnegative, got {n_bar_budget}")
    if n_max is None:
        n_max = default_n_max(n_bar_budget)
    if n_bar_budget == 0.0:
        vacuum = bose_einstein(0.0, n_max)
        return NumberCapacityResult(0.0, vacuum, np.zeros(1), 0.0, 0)

    channel = PhotonChannel(eta=eta, n_max=n_max)
    transition = binomial_transition(channel)
    counts = np.arange(n_max + 1, dtype=float)
    conditional = entr(transition).sum(axis=1)
    log_transition = np.log(np.where(transition > 0.0, transition, 1.0))

    prior = bose_einstein(n_bar_budget, n_max).probs  # feasible start
    mu_lo, mu_hi = settings.multiplier_bracket
    mu = 0.0
    trace = []
    capacity_prev = -np.inf
    iterations = settings.max_iters
    for it in range(settings.max_iters):
        output = prior @ transition
        log_output = np.log(np.where(output > 0.0, output, 1.0))
        # per-letter information score D(row_x || output)
        scores = (transition * (log_transition - log_output[None, :])).sum(axis=1)
        capacity = float(prior @ scores)
        trace.append(capacity)
        if capacity - capacity_prev < settings.tol and it > 0:
            iterations = it
            break
        capacity_prev = capacity

        log_weights = np.log(np.clip(prior, 1e-300, None)) + scores

        def mean_at(mu_try: float) -> tuple[float, np.ndarray]:
            lw = log_weights - mu_try * counts
            lw -= lw.max()
            w = np.exp(lw)
            w /= w.sum()
            return float(w @ counts), w

        mean0, cand = mean_at(max(mu_lo, 0.0))
        if mean0 <= n_bar_budget:
            mu = max(mu_lo, 0.0)
            prior = cand
            continue
        hi = max(1.0, mu)
        while mean_at(hi)[0] > n_bar_budget:
            hi *= 2.0
            if hi > mu_hi:
                raise InfeasibleConstraintError(
                    f"no multiplier in bracket {settings.multiplier_bracket} "
                    f"meets the photon budget {n_bar_budget}"
                )
        lo = max(mu_lo, 0.0)
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if mean_at(mid)[0] > n_bar_budget:
                lo = mid
            else:
                hi = mid
        mu = hi
        prior = mean_at(mu)[1]
    else:
        raise ConvergenceError(
            f"capacity increment still above tol={settings.tol} after "
            f"{settings.max_iters} iterations"
        )

    optimum = PhotonDistribution(probs=prior, n_max=n_max, escaped_mass=0.0)
    return NumberCapacityResult(
        capacity=trace[-1],
        optimum=optimum,
        ascent=np.asarray(trace),
        multiplier=mu,
        iterations=iterations,
    )


def hyo_asymptote(n_y_bar: float, regime: str) -> float:
    """Holevo-Yuen-Ozawa asymptotes (nats) at output mean photon number n_y.

    regime="large" is meant for n_y >> 1, regime="small" for n_y << 1; the
    applicability windows are documented, not enforced.
    """
    if n_y_bar < 0.0:
        raise DomainError(f"n_y_bar must be nonnegative, got {n_y_bar}")
    if regime == "large":
        return 0.5 * (np.log(n_y_bar) - np.log(2.0 * np.pi) + 1.0 + EULER_GAMMA)
    if regime == "small":
        return (1.0 - EULER_GAMMA) * n_y_bar
    raise ValueError(f"regime must be 'large' or 'small', got {regime!r}")
