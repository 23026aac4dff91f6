"""Run a search through both engines and line up the results."""

import math
from dataclasses import dataclass

import numpy as np

from . import statevector as sv
from .search import run_trajectory
from .su2 import WeightSpinor, from_weight_basis, overlap_from_counts


def start_spinor(theta0, phi0):
    """Weight spinor whose polarization is the general start vector."""
    q = theta0 / 4.0
    return WeightSpinor(
        -complex(math.cos(phi0 / 2.0), -math.sin(phi0 / 2.0)) * math.cos(q),
        complex(math.cos(phi0 / 2.0), math.sin(phi0 / 2.0)) * math.sin(q),
    )


def statevector_start(spec, sol):
    """Bra-ket start state matching ``spec.start_vector``.

    Rotor phases act as the conjugate bra-ket phases, so the state is the
    complex conjugate of the weight spinor carried into ``{|m>, |m_perp>}``.
    The uniform state is returned exactly for the canonical start.
    """
    if spec.has_canonical_start:
        return sv.uniform_state(spec.n_items)
    g = overlap_from_counts(spec.n_items, spec.n_solutions)
    c_m, c_perp = np.conj(from_weight_basis(g, start_spinor(spec.theta0, spec.phi0)))
    return sv.subspace_state(sol, c_m, c_perp)


@dataclass(frozen=True)
class EngineComparison:
    trajectory: object
    statevector_probs: list

    @property
    def rotor_probs(self):
        return self.trajectory.success_probabilities()

    @property
    def max_abs_diff(self):
        return max(abs(a - b) for a, b in zip(self.rotor_probs, self.statevector_probs))


def compare_engines(spec, k_steps, sol=None, check=True):
    sol = sv.SolutionSet.first(spec.n_items, spec.n_solutions) if sol is None else sol
    trajectory = run_trajectory(spec, k_steps, check=check)
    probs = sv.run_search(spec.n_items, sol, spec.phi1, spec.phi2, k_steps, start=statevector_start(spec, sol))
    return EngineComparison(trajectory, probs)
