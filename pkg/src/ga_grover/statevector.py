"""Brute-force bra-ket reference: Grover iteration on an explicit N-dim statevector.

Nothing here touches the geometric-algebra code; it exists to check it.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import DegenerateSearchError, InvalidInputError

NORM_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class StateVector:
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1:
            raise InvalidInputError("amplitudes must be one-dimensional")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def __len__(self):
        return self.amplitudes.shape[0]

    def norm(self):
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class SolutionSet:
    """Marked indices among ``n_items``; stored sorted and unique."""

    n_items: int
    indices: tuple

    def __post_init__(self):
        idx = tuple(sorted(set(int(i) for i in self.indices)))
        if len(idx) != len(self.indices):
            raise InvalidInputError("solution indices must be distinct")
        if idx and (idx[0] < 0 or idx[-1] >= self.n_items):
            raise InvalidInputError(f"solution indices must lie in 0..{self.n_items - 1}")
        if not 1 <= len(idx) < self.n_items:
            raise DegenerateSearchError(
                f"M must satisfy 1 ≤ M < N (got N={self.n_items}, M={len(idx)})"
            )
        object.__setattr__(self, "indices", idx)

    @classmethod
    def first(cls, n_items, n_solutions):
        return cls(n_items, tuple(range(n_solutions)))

    @classmethod
    def sample(cls, n_items, n_solutions, rng):
        if not 1 <= n_solutions < n_items:
            raise DegenerateSearchError(
                f"M must satisfy 1 ≤ M < N (got N={n_items}, M={n_solutions})"
            )
        return cls(n_items, tuple(rng.choice(n_items, size=n_solutions, replace=False).tolist()))

    @property
    def count(self):
        return len(self.indices)

    def mask(self):
        out = np.zeros(self.n_items, dtype=bool)
        out[list(self.indices)] = True
        return out


def _check_dims(s, sol):
    if len(s) != sol.n_items:
        raise InvalidInputError(f"state has dimension {len(s)} but the solution set expects {sol.n_items}")


def uniform_state(n_items):
    if int(n_items) != n_items or n_items < 2:
        raise InvalidInputError(f"N must be an integer ≥ 2, got {n_items!r}")
    return StateVector(np.full(int(n_items), 1.0 / math.sqrt(n_items), dtype=np.complex128))


def subspace_state(sol, c_m, c_perp):
    """``c_m |m> + c_perp |m_perp>`` with ``|m>``, ``|m_perp>`` uniform over (non-)solutions."""
    mask = sol.mask()
    m_count = sol.count
    amps = np.where(mask, c_m / math.sqrt(m_count), c_perp / math.sqrt(sol.n_items - m_count))
    return StateVector(amps.astype(np.complex128))


def grover_step(s, sol, phi1, phi2, axis=None):
    """One generalized iteration ``-(I - (1 - e^{i phi1})|a><a|)(I - (1 - e^{i phi2})|m><m|)``.

    ``axis`` is the diffusion state ``|a>``; the uniform superposition by default.
    """
    _check_dims(s, sol)
    axis = uniform_state(sol.n_items) if axis is None else axis
    _check_dims(axis, sol)
    out, _ = kernels.grover_run(s.amplitudes, sol.mask(), axis.amplitudes, phi1, phi2, 1)
    return StateVector(out)


def success_probability(s, sol):
    _check_dims(s, sol)
    amps = s.amplitudes[list(sol.indices)]
    return float(np.sum(amps.real**2 + amps.imag**2))


def run_search(n_items, sol, phi1, phi2, k_steps, start=None):
    """Success probabilities after 0..k_steps iterations.

    Starts from (and diffuses about) the uniform state unless ``start`` is given,
    in which case ``start`` plays both roles.
    """
    if sol.n_items != n_items:
        raise InvalidInputError(f"solution set is for N={sol.n_items}, not N={n_items}")
    if int(k_steps) != k_steps or k_steps < 0:
        raise InvalidInputError(f"k_steps must be a non-negative integer, got {k_steps!r}")
    start = uniform_state(n_items) if start is None else start
    _check_dims(start, sol)
    _, probs = kernels.grover_run(start.amplitudes, sol.mask(), start.amplitudes, phi1, phi2, int(k_steps))
    return [float(p) for p in probs]


def subspace_residual(s, sol):
    """Norm of the part of ``s`` outside span{|m>, |m_perp>}."""
    _check_dims(s, sol)
    mask = sol.mask()
    amps = s.amplitudes
    residual = amps.copy()
    residual[mask] -= amps[mask].mean()
    residual[~mask] -= amps[~mask].mean()
    return float(np.linalg.norm(residual))
