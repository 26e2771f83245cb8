"""Binary discretization of the noiseless coherent-state channel.

Compares three quantities at a mean-photon budget m: the continuous-input
capacity c_be, the best two-letter Holevo quantity c2_binary, and the best
two-letter single-measurement mutual information c12_binary.  Small budgets
are the interesting regime, so the expressions are written in
cancellation-free (expm1/log1p) form down to m ~ 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .capacity_discrete import LN2, accessible_info_binary_nats, binary_entropy_nats
from .exceptions import DomainError
from .number_channel import OptimizerSettings
from .oracle import CoherentEnsemble, gram_mixture_entropy
from .scalar_opt import golden_max


@dataclass(frozen=True)
class EnergyBudget:
    """Mean photon-number cap m on the prior over coherent amplitudes."""

    m: float

    def __post_init__(self):
        if self.m < 0.0:
            raise DomainError(f"m must be nonnegative, got {self.m}")


@dataclass(frozen=True)
class BinarySolution:
    """Two amplitudes with prior q on amp_a and the attained value."""

    amp_a: complex
    amp_b: complex
    q: float
    value_nats: float
    value_bits: float

    def energy(self) -> float:
        return self.q * abs(self.amp_a) ** 2 + (1.0 - self.q) * abs(self.amp_b) ** 2


def c_be(budget: EnergyBudget) -> float:
    """Continuous-input capacity (m+1) ln(m+1) - m ln(m) in nats."""
    m = budget.m
    if m == 0.0:
        return 0.0
    return float((m + 1.0) * np.log1p(m) - m * math.log(m))


def pair_overlap(amp_a: complex, amp_b: complex) -> float:
    """kappa = e^{-|a-b|^2/2}, the overlap magnitude of two coherent states."""
    return float(np.exp(-abs(amp_a - amp_b) ** 2 / 2.0))


def c2_binary(budget: EnergyBudget) -> tuple[float, BinarySolution]:
    """Best two-letter Holevo quantity (nats) and the attaining signals.

    The optimum is the symmetric antipodal pair {+sqrt(m), -sqrt(m)} at
    prior 1/2, giving the binary entropy of (1 - e^{-2m})/2.
    """
    m = budget.m
    p = -np.expm1(-2.0 * m) / 2.0
    value = binary_entropy_nats(p)
    root = math.sqrt(m)
    solution = BinarySolution(
        amp_a=complex(root),
        amp_b=complex(-root),
        q=0.5,
        value_nats=value,
        value_bits=value / LN2,
    )
    return value, solution


def verify_c2_optimality(budget: EnergyBudget, grid: int) -> float:
    """Grid-search the two-letter Holevo quantity under the energy budget.

    Sweeps priors q, first-amplitude radii, and the relative phase sign, with
    the second radius saturating the budget (interior points are dominated);
    the symmetric antipodal candidate is always included, so the returned
    maximum should match c2_binary up to grid resolution and never exceed it.
    """
    m = budget.m
    if m <= 0.0:
        raise DomainError(f"m must be positive, got {m}")
    if grid < 1:
        raise ValueError(f"grid must be a positive integer, got {grid}")
    root = math.sqrt(m)
    if grid == 1:
        qs, radii = np.array([0.5]), np.array([root])
    else:
        qs = np.unique(np.concatenate([np.linspace(0.02, 0.98, grid), [0.5]]))
        radii = np.unique(np.concatenate([np.linspace(0.0, 3.0 * root, grid), [root]]))
    best = 0.0
    for q in qs:
        for r_a in radii:
            residual = m - q * r_a**2
            if residual < 0.0:
                continue
            r_b = math.sqrt(residual / (1.0 - q))
            for sign in (1.0, -1.0):
                ens = CoherentEnsemble(
                    amplitudes=np.array([r_a, sign * r_b]),
                    priors=np.array([q, 1.0 - q]),
                )
                chi, _ = gram_mixture_entropy(ens)
                best = max(best, chi)
    return best


def approximate_optimal_prior(m: float) -> float:
    """Leading-order seed (-m ln m - m)/3 for the c12 prior, clipped to (0, 1/2].

    The formula is only a starting point: it turns negative for m >= 1/e,
    where the optimum sits at the symmetric prior instead.
    """
    seed = (-m * math.log(m) - m) / 3.0
    if seed <= 0.0:
        return 0.25
    return min(seed, 0.5)


def _c12_inner(m: float, q: float) -> tuple[float, float]:
    """Best accessible information at prior q over collinear pairs b = k a.

    k runs over [-1, 0]; the energy budget is saturated, which fixes
    |a|^2 = m / (q + (1-q) k^2).  Returns (value_nats, k).
    """

    def value(k: float) -> float:
        amp_sq = m / (q + (1.0 - q) * k * k)
        kappa = math.exp(-amp_sq * (1.0 - k) ** 2 / 2.0)
        return accessible_info_binary_nats(kappa, q)

    k_best, v_best = golden_max(value, -1.0, 0.0, tol=1e-12)
    return v_best, k_best


def c12_binary(
    budget: EnergyBudget, settings: OptimizerSettings = OptimizerSettings()
) -> tuple[float, BinarySolution]:
    """Best two-letter single-measurement information, in bits.

    Nested derivative-free maximization: an outer golden-section search on
    ln(q) (seeded by the leading-order prior and bracketed by a coarse scan)
    and an inner search over the collinear geometry b = k a, k in [-1, 0].
    Separation is what matters for two coherent letters, and antipodal
    placement maximizes it at fixed moduli, so the collinear family is
    lossless.  The budget is saturated by construction.
    """
    m = budget.m
    if m <= 0.0:
        raise DomainError(f"m must be positive, got {m}")

    def outer(log_q: float) -> float:
        return _c12_inner(m, math.exp(log_q))[0]

    seed = approximate_optimal_prior(m)
    lo = math.log(min(seed, m, 0.25) / 64.0)
    hi = math.log(0.5)
    scan = np.linspace(lo, hi, 80)
    values = [outer(t) for t in scan]
    best = int(np.argmax(values))
    bracket_lo = scan[max(best - 1, 0)]
    bracket_hi = scan[min(best + 1, len(scan) - 1)]
    log_q, _ = golden_max(outer, bracket_lo, bracket_hi, tol=1e-12,
                          max_iters=settings.max_iters)
    q = math.exp(log_q)
    value, k = _c12_inner(m, q)

    amp = math.sqrt(m / (q + (1.0 - q) * k * k))
    solution = BinarySolution(
        amp_a=complex(amp),
        amp_b=complex(k * amp),
        q=q,
        value_nats=value,
        value_bits=value / LN2,
    )
    return value / LN2, solution
