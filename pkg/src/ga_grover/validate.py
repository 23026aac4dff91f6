"""Cross-module invariant suite behind ``ga-grover validate``.

Each family returns its worst residual against a tolerance.  Tolerances can
be replaced for testing through ``GA_GROVER_TOLERANCE_OVERRIDE``: either one
number for every family or ``family=value`` pairs separated by commas.
"""

import math
import os
from dataclasses import asdict, dataclass

import numpy as np

from . import statevector as sv
from .cl3 import Multivector, exp_bivector, geometric_product, reverse, rotate_vector, to_pauli, Vector3
from .errors import InvalidInputError
from .search import (
    SearchSpec,
    canonical_vectors,
    exact_rotor,
    general_exact_rotor,
    iterations_for_phase,
    k_min,
    run_trajectory,
    solve_exact_phase,
    standard_rotor,
)
from .su2 import build_generators, overlap_from_counts, weight_states

OVERRIDE_ENV = "GA_GROVER_TOLERANCE_OVERRIDE"

TOLERANCES = {
    "algebra": 1e-12,
    "su2": 1e-12,
    "reduction_chain": 1e-12,
    "phase_minimum": 1e-12,
    "oracle_equivalence": 1e-10,
    "two_dimensionality": 1e-12,
    "exact_certainty": 1e-9,
}


@dataclass(frozen=True)
class FamilyResult:
    family: str
    passed: bool
    worst_residual: float
    tolerance: float
    checks: int


def tolerances(env=None):
    """Tolerance table with any override from the environment applied."""
    env = os.environ if env is None else env
    table = dict(TOLERANCES)
    raw = env.get(OVERRIDE_ENV, "").strip()
    if not raw:
        return table
    try:
        if "=" not in raw:
            value = float(raw)
            return {k: value for k in table}
        for part in raw.split(","):
            name, _, value = part.partition("=")
            name = name.strip()
            if name not in table:
                raise InvalidInputError(f"unknown invariant family {name!r} in {OVERRIDE_ENV}")
            table[name] = float(value)
    except ValueError as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"cannot parse {OVERRIDE_ENV}={raw!r}") from exc
    return table


def _random_mv(rng):
    return Multivector(rng.normal(size=8))


def check_algebra(rng, samples=2000):
    worst, checks = 0.0, 0
    for _ in range(samples):
        a, b, c = _random_mv(rng), _random_mv(rng), _random_mv(rng)
        ab = geometric_product(a, b)
        worst = max(
            worst,
            geometric_product(ab, c).max_abs_diff(geometric_product(a, geometric_product(b, c))),
            float(np.max(np.abs(to_pauli(ab) - to_pauli(a) @ to_pauli(b)))),
            reverse(ab).max_abs_diff(geometric_product(reverse(b), reverse(a))),
        )
        bivector = Multivector([0, 0, 0, 0, *rng.normal(size=3), 0])
        v = Vector3.from_array(rng.normal(size=3))
        worst = max(worst, abs(rotate_vector(exp_bivector(bivector), v).norm() - v.norm()))
        checks += 4
    return worst, checks


def _su2_residuals(g):
    gen = build_generators(g)
    J = (gen.J1, gen.J2, gen.J3)
    P = gen.P
    res = []
    eps = {(0, 1): 2, (1, 2): 0, (2, 0): 1}
    for (i, j), k in eps.items():
        res.append(J[i] @ J[j] - J[j] @ J[i] - 1j * J[k])
    for i in range(3):
        for j in range(3):
            res.append(J[i] @ J[j] + J[j] @ J[i] - (P / 2.0 if i == j else 0.0))
        res.append(gen.K @ J[i] - J[i] @ gen.K)
        res.append(J[i] @ J[i] - P / 4.0)
        res.append(J[i] - J[i].conj().T)
    res.append(gen.casimir - 0.75 * P)
    res.append(P @ P - P)
    up, down = weight_states(g)
    res.append(gen.J_plus @ up)
    res.append(gen.J_minus @ down)
    res.append(gen.J3 @ up - 0.5 * up)
    res.append(gen.J3 @ down + 0.5 * down)
    return max(float(np.max(np.abs(r))) for r in res), len(res)


def check_su2(rng, max_n, samples=100):
    worst, checks = 0.0, 0
    for _ in range(samples):
        n = int(rng.integers(2, max_n + 1))
        m = int(rng.integers(1, n))
        delta = float(rng.uniform(-math.pi, math.pi))
        r, c = _su2_residuals(overlap_from_counts(n, m, delta))
        worst, checks = max(worst, r), checks + c
    return worst, checks


def check_reduction_chain(rng, samples=200):
    worst, checks = 0.0, 0
    for _ in range(samples):
        n = int(rng.integers(2, 4097))
        spec = SearchSpec(n, int(rng.integers(1, n)))
        theta = spec.theta
        phi1, phi2 = rng.uniform(0.0, 2 * math.pi, size=2)
        general = general_exact_rotor(SearchSpec(n, spec.n_solutions, phi1, phi2, theta, 0.0))
        worst = max(
            worst,
            general.max_abs_diff(exact_rotor(theta, phi1, phi2)),
            exact_rotor(theta, math.pi, math.pi).max_abs_diff(standard_rotor(theta)),
            general_exact_rotor(spec).max_abs_diff(standard_rotor(theta)),
        )
        checks += 3
    return worst, checks


def check_phase_minimum(rng, thetas=20, points=100):
    worst, checks = 0.0, 0
    phis = np.linspace(math.pi / points, math.pi, points)
    for theta in rng.uniform(1e-3, math.pi - 1e-3, size=thetas):
        k_pi = iterations_for_phase(theta, math.pi)
        for phi in phis:
            worst = max(worst, k_pi - iterations_for_phase(theta, float(phi)))
            checks += 1
    return worst, checks


def check_oracle_equivalence(max_n):
    """Standard search, every (N, M) with 4 <= N <= max_n, every k <= 2 k_min."""
    worst, checks = 0.0, 0
    for n in range(4, max_n + 1):
        for m in range(1, n):
            spec = SearchSpec(n, m)
            steps = 2 * k_min(spec.theta)
            ga = run_trajectory(spec, steps).success_probabilities()
            ref = sv.run_search(n, sv.SolutionSet.first(n, m), math.pi, math.pi, steps)
            worst = max(worst, max(abs(a - b) for a, b in zip(ga, ref)))
            checks += steps + 1
    return worst, checks


def check_two_dimensionality(rng, max_n, samples=50):
    worst, checks = 0.0, 0
    for _ in range(samples):
        n = int(rng.integers(4, max_n + 1))
        sol = sv.SolutionSet.sample(n, int(rng.integers(1, n)), rng)
        phi1, phi2 = rng.uniform(0.0, 2 * math.pi, size=2)
        s = sv.uniform_state(n)
        for _ in range(10):
            s = sv.grover_step(s, sol, phi1, phi2)
            worst = max(worst, sv.subspace_residual(s, sol), abs(s.norm() - 1.0))
            checks += 1
    return worst, checks


def check_exact_certainty(rng, max_n, samples=200):
    worst, checks = 0.0, 0
    for _ in range(samples):
        n = int(rng.integers(4, max_n + 1))
        m = int(rng.integers(1, n))
        theta = SearchSpec(n, m).theta
        km = k_min(theta)
        phi = solve_exact_phase(theta, km)
        probs = sv.run_search(n, sv.SolutionSet.sample(n, m, rng), phi, phi, km)
        worst = max(worst, 1.0 - probs[-1])
        checks += 1
    return worst, checks


def run_validation(max_n=64, seed=0, env=None):
    """Run every invariant family; returns a list of :class:`FamilyResult`."""
    if int(max_n) != max_n or max_n < 4:
        raise InvalidInputError(f"max_n must be an integer ≥ 4, got {max_n!r}")
    tol = tolerances(env)
    rng = np.random.default_rng(seed)
    runs = {
        "algebra": lambda: check_algebra(rng),
        "su2": lambda: check_su2(rng, max_n),
        "reduction_chain": lambda: check_reduction_chain(rng),
        "phase_minimum": lambda: check_phase_minimum(rng),
        "oracle_equivalence": lambda: check_oracle_equivalence(max_n),
        "two_dimensionality": lambda: check_two_dimensionality(rng, max_n),
        "exact_certainty": lambda: check_exact_certainty(rng, max_n),
    }
    results = []
    for name, run in runs.items():
        worst, checks = run()
        results.append(FamilyResult(name, worst < tol[name], worst, tol[name], checks))
    return results


def report(results):
    return {
        "passed": all(r.passed for r in results),
        "families": [asdict(r) for r in results],
    }
