"""Command-line front end: ``ga-grover {simulate,phase,validate}``."""

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import io as traj_io
from . import statevector as sv
from .compare import compare_engines
from .errors import GroverError
from .search import (
    SearchSpec,
    iterations_standard,
    k_min,
    phase_matched_axis,
    solve_exact_phase,
)
from .validate import report, run_validation

MODES = ("standard", "exact", "general")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    n: int | None = None
    m: int | None = None
    mode: str = "standard"
    phi1: float | None = None
    phi2: float | None = None
    theta0: float | None = None
    phi0: float | None = None
    steps: int | None = None
    k: int | None = None
    fmt: str = "csv"
    out: str | None = None
    seed: int = 0
    max_n: int = 64
    check: bool = True

    @classmethod
    def from_args(cls, args):
        scale = math.pi / 180.0 if getattr(args, "degrees", False) else 1.0

        def angle(name):
            value = getattr(args, name, None)
            return None if value is None else value * scale

        return cls(
            subcommand=args.command,
            n=getattr(args, "n", None),
            m=getattr(args, "m", None),
            mode=getattr(args, "mode", "standard"),
            phi1=angle("phi1"),
            phi2=angle("phi2"),
            theta0=angle("theta0"),
            phi0=angle("phi0"),
            steps=getattr(args, "steps", None),
            k=getattr(args, "k", None),
            fmt=getattr(args, "format", "csv"),
            out=getattr(args, "out", None),
            seed=getattr(args, "seed", 0),
            max_n=getattr(args, "max_n", 64),
            check=not getattr(args, "no_check", False),
        )

    def validate(self):
        if self.subcommand in ("simulate", "phase"):
            if self.n is None or self.m is None:
                raise GroverError("--n and --m are required")
            if not 1 <= self.m < self.n:
                raise GroverError(f"M must satisfy 1 ≤ M < N (got N={self.n}, M={self.m})")
        if self.mode not in MODES:
            raise GroverError(f"unknown mode {self.mode!r}")
        if self.mode == "general" and self.theta0 is None:
            raise GroverError("general mode requires --theta0")
        if self.mode != "general" and (self.theta0 is not None or self.phi0 is not None):
            raise GroverError("--theta0/--phi0 are only valid in general mode")
        if self.steps is not None and self.steps < 0:
            raise GroverError("--steps must be non-negative")
        if self.k is not None and self.k < 1:
            raise GroverError("--k must be a positive integer")
        if self.subcommand == "validate" and self.max_n < 4:
            raise GroverError("--max-n must be at least 4")


def _fmt(x):
    return repr(float(x)) if isinstance(x, float) else str(x)


def _print_report(rows, stream=None):
    stream = sys.stdout if stream is None else stream
    for key, value in rows:
        print(f"{key}: {_fmt(value)}", file=stream)


def cmd_simulate(config, stream=None):
    config.validate()
    theta = SearchSpec(config.n, config.m).theta
    k_opt = iterations_standard(theta)
    km = k_min(theta)
    phi1 = math.pi if config.phi1 is None else config.phi1
    phi2 = math.pi if config.phi2 is None else config.phi2
    steps = config.steps
    if config.mode == "exact":
        km = km if steps is None else steps
        if config.phi1 is None and config.phi2 is None:
            phi1 = phi2 = solve_exact_phase(theta, km)
        steps = km
    elif steps is None:
        steps = max(1, round(k_opt))
    spec = SearchSpec(config.n, config.m, phi1, phi2, config.theta0, config.phi0)
    sol = sv.SolutionSet.sample(config.n, config.m, np.random.default_rng(config.seed))
    result = compare_engines(spec, steps, sol=sol, check=config.check)
    rotor_final = result.rotor_probs[-1]
    sv_final = result.statevector_probs[-1]
    rows = [
        ("mode", config.mode),
        ("N", config.n),
        ("M", config.m),
        ("theta", theta),
        ("k_optimal", k_opt),
        ("k_m", km),
        ("phi1", phi1),
        ("phi2", phi2),
    ]
    if config.mode == "general":
        rows += [("theta0", spec.theta0), ("phi0", spec.phi0)]
    rows += [
        ("steps", steps),
        ("final_success_rotor", rotor_final),
        ("final_success_statevector", sv_final),
        ("abs_diff", abs(rotor_final - sv_final)),
    ]
    if config.out:
        text = traj_io.dumps(traj_io.trajectory_records(result.trajectory), config.fmt)
        with open(config.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        rows.append(("output", config.out))
    _print_report(rows, stream)
    return 0


def cmd_phase(config, stream=None):
    config.validate()
    theta = SearchSpec(config.n, config.m).theta
    km = k_min(theta) if config.k is None else config.k
    phi = solve_exact_phase(theta, km)
    precession = phase_matched_axis(theta, phi)
    axis = precession.axis
    _print_report(
        [
            ("theta", theta),
            ("k_real", iterations_standard(theta)),
            ("k_m", km),
            ("phi", phi),
            ("beta", precession.beta_rot),
            ("axis_alpha", precession.axis_alpha),
            ("axis", f"({_fmt(axis.x)}, {_fmt(axis.y)}, {_fmt(axis.z)})"),
        ],
        stream,
    )
    return 0


def cmd_validate(config, stream=None):
    config.validate()
    rep = report(run_validation(config.max_n, config.seed))
    text = json.dumps(rep, indent=1)
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text, file=sys.stdout if stream is None else stream)
    return 0 if rep["passed"] else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="ga-grover", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def counts(p):
        p.add_argument("--n", type=int, required=True, help="database size N")
        p.add_argument("--m", type=int, required=True, help="number of solutions M")

    sim = sub.add_parser("simulate", help="run a search through both engines")
    counts(sim)
    sim.add_argument("--mode", choices=MODES, default="standard")
    sim.add_argument("--phi1", type=float, help="diffusion phase")
    sim.add_argument("--phi2", type=float, help="oracle phase")
    sim.add_argument("--theta0", type=float, help="general start polar angle")
    sim.add_argument("--phi0", type=float, help="general start azimuth")
    sim.add_argument("--steps", type=int, help="iterations (exact mode: target k_m)")
    sim.add_argument("--format", choices=("csv", "json"), default="csv")
    sim.add_argument("--out", help="trajectory output path")
    sim.add_argument("--seed", type=int, default=0, help="seed for solution-index sampling")
    sim.add_argument("--degrees", action="store_true", help="angles are given in degrees")
    sim.add_argument("--no-check", action="store_true", help="skip the closed-form trajectory check")

    ph = sub.add_parser("phase", help="print exact-search parameters")
    counts(ph)
    ph.add_argument("--k", type=int, help="iteration count to solve for (default k_m)")

    val = sub.add_parser("validate", help="run the invariant suite")
    val.add_argument("--max-n", type=int, default=64)
    val.add_argument("--seed", type=int, default=0)
    val.add_argument("--out", help="also write the JSON report here")
    return parser


COMMANDS = {"simulate": cmd_simulate, "phase": cmd_phase, "validate": cmd_validate}


def main(argv=None):
    args = build_parser().parse_args(argv)
    config = RunConfig.from_args(args)
    try:
        return COMMANDS[config.subcommand](config)
    except GroverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
