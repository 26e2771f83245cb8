"""Command-line front end emitting deterministic CSV.

Subcommands: ``capacity gaussian``, ``capacity input``, ``capacity number``,
``discretize``, ``sweep`` and ``verify``.  Exit codes: 0 success, 1 failed
verification, 2 usage error, 3 infeasible parameters, 4 partial sweep.
Defaults can be set in a flat key=value config file pointed to by the
BOSCAP_CONFIG environment variable; explicit flags always win.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .capacity_discrete import LN2, binary_c1
from .capacity_gaussian import (
    InputConstraint,
    TransmitterConstraint,
    capacity_input_constrained,
    capacity_transmitter_constrained,
)
from .channels import AttenuationChannel
from .discretization import EnergyBudget, c2_binary, c12_binary, c_be
from .exceptions import (
    ConvergenceError,
    DomainError,
    InfeasibleConstraintError,
    UnsupportedParameterError,
)
from .gaussian_core import PhysicalConstants, g_function, squeezed_state, thermal_state
from .number_channel import OptimizerSettings, optimize_number_capacity
from .oracle import (
    ConstellationGrid,
    FockTruncation,
    CoherentEnsemble,
    beta_maximization,
    brute_force_constellation_capacity,
    fock_thermal_entropy,
    gram_mixture_entropy,
)

CONFIG_ENV_VAR = "BOSCAP_CONFIG"

SWEEP_VARIABLES = ("gamma", "m", "k", "n_c", "n_tr", "eta", "budget")


@dataclass(frozen=True)
class RunConfig:
    """Run-wide defaults; file values override these, flags override both."""

    hbar: float = 1.0
    omega: float = 1.0
    log_base: str = "e"
    tol: float = 1e-9
    n_max: int = 200
    output_path: str = ""

    def __post_init__(self):
        if self.hbar <= 0 or self.omega <= 0 or self.tol <= 0 or self.n_max < 1:
            raise ValueError("hbar, omega, tol must be positive and n_max >= 1")
        if self.log_base not in ("e", "two"):
            raise ValueError(f"log_base must be 'e' or 'two', got {self.log_base!r}")


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    start: float
    stop: float
    points: int
    scale: str = "linear"

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(f"unknown sweep variable {self.variable!r}")
        if not self.start < self.stop:
            raise ValueError("sweep requires start < stop")
        if self.points < 2:
            raise ValueError("sweep requires points >= 2")
        if self.scale not in ("linear", "log"):
            raise ValueError(f"scale must be 'linear' or 'log', got {self.scale!r}")
        if self.scale == "log" and self.start <= 0:
            raise ValueError("log scale requires start > 0")

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, self.points)
        return np.linspace(self.start, self.stop, self.points)


def load_config(path: str) -> dict:
    """Parse a flat key=value file (# starts a comment line)."""
    allowed = {"hbar", "omega", "log_base", "tol", "n_max", "output_path"}
    values: dict = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if key not in allowed:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            if key in ("hbar", "omega", "tol"):
                values[key] = float(value)
            elif key == "n_max":
                values[key] = int(value)
            else:
                values[key] = value
    return values


def build_config(args: argparse.Namespace) -> RunConfig:
    overrides: dict = {}
    path = getattr(args, "config", None) or os.environ.get(CONFIG_ENV_VAR)
    if path:
        overrides.update(load_config(path))
    for key in ("hbar", "omega", "log_base", "tol", "n_max"):
        flag = getattr(args, key, None)
        if flag is not None:
            overrides[key] = flag
    if getattr(args, "output", None):
        overrides["output_path"] = args.output
    return RunConfig(**overrides)


def fmt(value: float) -> str:
    """9 significant digits, '.' decimal separator, no locale dependence."""
    return f"{value:.9g}"


def in_base(value_nats: float, cfg: RunConfig) -> float:
    return value_nats / LN2 if cfg.log_base == "two" else value_nats


def emit(lines: list[str], cfg: RunConfig) -> None:
    text = "\n".join(lines) + "\n"
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- capacity

def _transmitter_row(
    gamma: float, theta: float, k: float, n_c: float, n_tr: float, cfg: RunConfig
) -> str:
    consts = PhysicalConstants(cfg.hbar, cfg.omega)
    channel = AttenuationChannel(k=k, n_c=n_c)
    result = capacity_transmitter_constrained(
        (gamma, theta), channel, TransmitterConstraint(n_tr), consts
    )
    fields = [fmt(gamma), fmt(theta), fmt(k), fmt(n_c), fmt(n_tr), result.regime,
              fmt(in_base(result.value, cfg))]
    return ",".join(fields)


def cmd_capacity_gaussian(args: argparse.Namespace, cfg: RunConfig) -> int:
    lines = ["gamma,theta,k,n_c,n_tr,regime,capacity",
             _transmitter_row(args.gamma, args.theta, args.k, args.nc, args.ntr, cfg)]
    emit(lines, cfg)
    return 0


def cmd_capacity_input(args: argparse.Namespace, cfg: RunConfig) -> int:
    consts = PhysicalConstants(cfg.hbar, cfg.omega)
    if args.thermal_n is not None:
        state = thermal_state(args.thermal_n, consts)
        gamma_col, theta_col, thermal_col = "", "", fmt(args.thermal_n)
    else:
        state = squeezed_state(args.gamma, args.theta, consts)
        gamma_col, theta_col, thermal_col = fmt(args.gamma), fmt(args.theta), ""
    result = capacity_input_constrained(state, InputConstraint(args.energy), consts)
    row = ",".join([gamma_col, theta_col, thermal_col, fmt(args.energy),
                    result.regime, fmt(in_base(result.value, cfg))])
    emit(["gamma,theta,thermal_n,energy,regime,capacity", row], cfg)
    return 0


def cmd_capacity_number(args: argparse.Namespace, cfg: RunConfig) -> int:
    settings = OptimizerSettings(tol=cfg.tol)
    result = optimize_number_capacity(args.eta, args.budget, args.number_nmax, settings)
    row = ",".join([fmt(args.eta), fmt(args.budget), str(result.optimum.n_max),
                    fmt(in_base(result.capacity, cfg))])
    emit(["eta,budget,n_max,capacity", row], cfg)
    return 0


# -------------------------------------------------------------- discretize

def _discretize_row(m: float, cfg: RunConfig) -> str:
    budget = EnergyBudget(m)
    be = c_be(budget)
    c2, _ = c2_binary(budget)
    _, c12_solution = c12_binary(budget)
    c12 = c12_solution.value_nats
    return ",".join([
        fmt(m), fmt(in_base(be, cfg)), fmt(in_base(c2, cfg)),
        fmt(c2 / be if be > 0 else 0.0),
        fmt(in_base(c12, cfg)), fmt(c12 / be if be > 0 else 0.0),
    ])


def cmd_discretize(args: argparse.Namespace, cfg: RunConfig) -> int:
    emit(["m,c_be,c2,c2_ratio,c12,c12_ratio", _discretize_row(args.m, cfg)], cfg)
    return 0


# ------------------------------------------------------------------- sweep

FIGURE2_SERIES = ((1.0, 0.0), (0.9, 0.0), (0.9, 0.1))


def cmd_sweep(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.figure == 2:
        variable, default_range = "gamma", (0.0, 1.5)
    elif args.figure == 3:
        variable, default_range = "m", (1e-10, 1.0)
    else:
        if args.variable is None:
            raise ValueError("sweep needs either --figure or --variable")
        variable, default_range = args.variable, None

    start = args.start if args.start is not None else (default_range or (0.0, 1.0))[0]
    stop = args.stop if args.stop is not None else (default_range or (0.0, 1.0))[1]
    scale = args.scale or ("log" if variable == "m" else "linear")
    spec = SweepSpec(variable=variable, start=start, stop=stop,
                     points=args.points, scale=scale)

    partial = False
    lines: list[str] = []

    def guarded(row_fn, error_fields: int, prefix: list[str]) -> str:
        nonlocal partial
        try:
            return row_fn()
        except (InfeasibleConstraintError, UnsupportedParameterError, DomainError,
                ConvergenceError, ValueError):
            partial = True
            return ",".join(prefix + ["error"] * error_fields)

    if variable in ("gamma", "k", "n_c", "n_tr"):
        fixed = {"gamma": args.gamma, "theta": args.theta, "k": args.k,
                 "n_c": args.nc, "n_tr": args.ntr}
        lines.append("gamma,theta,k,n_c,n_tr,regime,capacity")
        series = FIGURE2_SERIES if args.figure == 2 else (None,)
        for pair in series:
            for value in spec.values():
                point = dict(fixed)
                point[variable] = float(value)
                if pair is not None:
                    point["k"], point["n_c"] = pair
                prefix = [fmt(point["gamma"]), fmt(point["theta"]), fmt(point["k"]),
                          fmt(point["n_c"]), fmt(point["n_tr"])]
                lines.append(guarded(
                    lambda p=point: _transmitter_row(
                        p["gamma"], p["theta"], p["k"], p["n_c"], p["n_tr"], cfg),
                    2, prefix))
    elif variable == "m":
        lines.append("m,c_be,c2,c2_ratio,c12,c12_ratio")
        for value in spec.values():
            lines.append(guarded(lambda v=value: _discretize_row(float(v), cfg),
                                 5, [fmt(float(value))]))
    else:  # eta or budget
        lines.append("eta,budget,n_max,capacity")
        settings = OptimizerSettings(tol=cfg.tol)
        for value in spec.values():
            eta = float(value) if variable == "eta" else args.eta
            budget = float(value) if variable == "budget" else args.budget

            def row(eta=eta, budget=budget):
                result = optimize_number_capacity(eta, budget, None, settings)
                return ",".join([fmt(eta), fmt(budget), str(result.optimum.n_max),
                                 fmt(in_base(result.capacity, cfg))])

            lines.append(guarded(row, 2, [fmt(eta), fmt(budget)]))

    emit(lines, cfg)
    return 4 if partial else 0


# ------------------------------------------------------------------ verify

def _verify_lines(args: argparse.Namespace, cfg: RunConfig):
    """Yield (name, computed, target, tol, passed) tuples for each check."""
    selected = args.check

    def wanted(name: str) -> bool:
        return selected is None or selected == name

    if wanted("thermal-entropy"):
        n_bars = [args.nbar] if args.nbar is not None else [0.1, 0.5, 1.0, 2.0]
        for n_bar in n_bars:
            computed = fock_thermal_entropy(n_bar, FockTruncation(n_max=cfg.n_max))
            target = g_function((n_bar + 0.5) ** 2)
            yield (f"thermal-entropy[n={n_bar:g}]", computed, target, 1e-8,
                   abs(computed - target) < 1e-8)

    if wanted("gram-c2"):
        ms = [args.m] if args.m is not None else [1e-4, 0.01, 0.25, 1.0, 5.0]
        for m in ms:
            root = math.sqrt(m)
            ens = CoherentEnsemble(amplitudes=np.array([root, -root]),
                                   priors=np.array([0.5, 0.5]))
            computed, _ = gram_mixture_entropy(ens)
            target, _ = c2_binary(EnergyBudget(m))
            yield (f"gram-c2[m={m:g}]", computed, target, 1e-10,
                   abs(computed - target) < 1e-10)

    if wanted("beta-gaussian"):
        points = [
            ("coherent", (0.0, 0.0), (1.0, 0.0), 1.0),
            ("regimeA", (0.5, 0.0), (0.9, 0.1), 2.5),
            ("regimeB", (1.2, 0.0), (0.9, 0.0), 3.0),
        ]
        for label, (gamma, theta), (k, n_c), n_tr in points:
            channel = AttenuationChannel(k=k, n_c=n_c)
            closed = capacity_transmitter_constrained(
                (gamma, theta), channel, TransmitterConstraint(n_tr)).value
            numeric = beta_maximization(squeezed_state(gamma, theta), channel,
                                        TransmitterConstraint(n_tr))
            yield (f"beta-gaussian[{label}]", numeric, closed, 1e-4,
                   abs(numeric - closed) < 1e-4)

    if wanted("constellation-monotone"):
        m = args.m if args.m is not None else 0.25
        coarse = brute_force_constellation_capacity(
            ConstellationGrid(2, 6, 2.0 * math.sqrt(m)), m,
            OptimizerSettings(tol=1e-8))
        fine = brute_force_constellation_capacity(
            ConstellationGrid(4, 12, 2.0 * math.sqrt(m)), m,
            OptimizerSettings(tol=1e-8))
        bound = c_be(EnergyBudget(m))
        yield (f"constellation-monotone[m={m:g}]", fine, coarse, 1e-6,
               fine >= coarse - 1e-6 and fine <= bound + 1e-9)


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    all_pass = True
    for name, computed, target, tol, passed in _verify_lines(args, cfg):
        all_pass &= passed
        status = "PASS" if passed else "FAIL"
        print(f"{name:32s} computed={fmt(computed):>15s} target={fmt(target):>15s} "
              f"tol={tol:g} {status}")
    if args.check is None or args.check == "trine-c1":
        recomputed = binary_c1(0.5)
        print(f"{'trine-c1 (note)':32s} computed={fmt(recomputed):>15s} "
              f"cited={0.6698:>15} tol=n/a NOTE")
        print("# note: three equal-angle letter states are often quoted at 0.6698 "
              "bits; recomputing C1 from the pairwise overlap kappa=1/2 gives "
              f"{recomputed:.4f} bits. The conventions differ; informational only.")
    return 0 if all_pass else 1


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="path to key=value config "
                        f"file (default: ${CONFIG_ENV_VAR})")
    common.add_argument("--hbar", type=float, default=None)
    common.add_argument("--omega", type=float, default=None)
    common.add_argument("--log-base", dest="log_base", choices=("e", "two"),
                        default=None, help="unit of reported capacities")
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--n-max", dest="n_max", type=int, default=None)
    common.add_argument("--output", default=None,
                        help="write CSV here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="boscap",
        description="Capacities of bosonic optical channels (CSV output).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cap = sub.add_parser("capacity", help="single-point capacity queries")
    cap_sub = cap.add_subparsers(dest="target", required=True)

    gauss = cap_sub.add_parser("gaussian", parents=[common],
                               help="attenuated noisy channel, photon budget")
    gauss.add_argument("--gamma", type=float, default=0.0)
    gauss.add_argument("--theta", type=float, default=0.0)
    gauss.add_argument("--k", type=float, default=1.0)
    gauss.add_argument("--nc", type=float, default=0.0)
    gauss.add_argument("--ntr", type=float, required=True)
    gauss.set_defaults(func=cmd_capacity_gaussian)

    inp = cap_sub.add_parser("input", parents=[common],
                             help="fixed Gaussian carrier, displacement energy")
    inp.add_argument("--gamma", type=float, default=0.0)
    inp.add_argument("--theta", type=float, default=0.0)
    inp.add_argument("--thermal-n", dest="thermal_n", type=float, default=None)
    inp.add_argument("--energy", type=float, required=True)
    inp.set_defaults(func=cmd_capacity_input)

    num = cap_sub.add_parser("number", parents=[common],
                             help="binomially thinned photon-number channel")
    num.add_argument("--eta", type=float, required=True)
    num.add_argument("--budget", type=float, required=True)
    num.add_argument("--nmax", dest="number_nmax", type=int, default=None)
    num.set_defaults(func=cmd_capacity_number)

    disc = sub.add_parser("discretize", parents=[common],
                          help="binary discretization at one budget")
    disc.add_argument("--m", type=float, required=True)
    disc.set_defaults(func=cmd_discretize)

    sweep = sub.add_parser("sweep", parents=[common],
                           help="parameter sweeps (CSV file or stdout)")
    sweep.add_argument("--figure", type=int, choices=(2, 3), default=None)
    sweep.add_argument("--variable", choices=SWEEP_VARIABLES, default=None)
    sweep.add_argument("--start", type=float, default=None)
    sweep.add_argument("--stop", type=float, default=None)
    sweep.add_argument("--points", type=int, default=30)
    sweep.add_argument("--scale", choices=("linear", "log"), default=None)
    sweep.add_argument("--gamma", type=float, default=0.0)
    sweep.add_argument("--theta", type=float, default=0.0)
    sweep.add_argument("--k", type=float, default=1.0)
    sweep.add_argument("--nc", type=float, default=0.0)
    sweep.add_argument("--ntr", type=float, default=1.0)
    sweep.add_argument("--eta", type=float, default=1.0)
    sweep.add_argument("--budget", type=float, default=1.0)
    sweep.set_defaults(func=cmd_sweep)

    verify = sub.add_parser("verify", parents=[common],
                            help="run the brute-force oracle suite")
    verify.add_argument("--check", choices=("thermal-entropy", "gram-c2",
                                            "beta-gaussian", "constellation-monotone",
                                            "trine-c1"), default=None)
    verify.add_argument("--nbar", type=float, default=None)
    verify.add_argument("--m", type=float, default=None)
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        return args.func(args, cfg)
    except (InfeasibleConstraintError, UnsupportedParameterError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
