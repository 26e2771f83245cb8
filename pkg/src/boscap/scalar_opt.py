"""Derivative-free scalar maximization and root bracketing helpers."""

from __future__ import annotations

import math

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(f, lo: float, hi: float, tol: float = 1e-10, max_iters: int = 200):
    """Golden-section maximization of a unimodal f on [lo, hi].

    Returns (x, f(x)).  The endpoints are also evaluated so a boundary
    maximum is never missed.
    """
    a, b = float(lo), float(hi)
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iters):
        if b - a <= tol * (1.0 + abs(a) + abs(b)):
            break
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
    candidates = [(lo, f(lo)), (hi, f(hi)), (x1, f1), (x2, f2)]
    return max(candidates, key=lambda t: t[1])


def bisect_root(g, lo: float, hi: float, tol: float = 0.0, max_iters: int = 100) -> float:
    """Bisection for g(lo) >= 0 >= g(hi); returns the midpoint estimate."""
    glo, ghi = g(lo), g(hi)
    if glo < 0.0 or ghi > 0.0:
        raise ValueError(f"root not bracketed: g({lo})={glo}, g({hi})={ghi}")
    for _ in range(max_iters):
        mid = 0.5 * (lo + hi)
        if g(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)
