"""The su(2) structure of the two-dimensional search subspace.

Operators are 2x2 complex matrices in the orthonormal basis
``{|m>, |m_perp>}``: ``|m> = (1, 0)`` and the start state
``|sigma> = (conj(alpha), beta)`` where ``alpha = <sigma|m> = |alpha| e^{i delta}``.

The weight basis ``{|up>, |down>}`` diagonalizes ``J3``.  Spinors in that
basis map onto the even subalgebra of Cl(3,0) and from there to unit
three-space (Bloch) vectors.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .cl3 import Multivector, Vector3, geometric_product, reverse
from .errors import DegenerateSearchError, InvalidInputError

SPINOR_TOLERANCE = 1e-9

_E3 = Multivector.from_vector(0.0, 0.0, 1.0)


def _check_counts(n_items, n_solutions):
    if int(n_items) != n_items or int(n_solutions) != n_solutions:
        raise InvalidInputError("N and M must be integers")
    if not 1 <= n_solutions < n_items:
        raise DegenerateSearchError(
            f"M must satisfy 1 ≤ M < N (got N={n_items}, M={n_solutions})"
        )


@dataclass(frozen=True)
class OverlapGeometry:
    """Overlap ``alpha = <sigma|m>`` of start and solution states.

    ``alpha_mag`` is ``|alpha|`` and ``delta`` its phase.  ``theta`` is the
    per-iteration rotation angle, ``sin(theta/2) = |alpha|``.
    """

    alpha_mag: float
    delta: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.alpha_mag < 1.0:
            raise DegenerateSearchError(
                f"|alpha| must lie strictly between 0 and 1, got {self.alpha_mag!r}"
            )
        if not math.isfinite(self.delta):
            raise InvalidInputError("delta must be finite")

    @property
    def alpha(self):
        return self.alpha_mag * complex(math.cos(self.delta), math.sin(self.delta))

    @property
    def beta(self):
        return math.sqrt(1.0 - self.alpha_mag**2)

    @property
    def theta(self):
        return 2.0 * math.asin(self.alpha_mag)


def overlap_from_counts(n_items, n_solutions, delta=0.0):
    """Geometry of the uniform start state for ``M`` solutions among ``N`` items."""
    _check_counts(n_items, n_solutions)
    return OverlapGeometry(math.sqrt(n_solutions / n_items), delta)


class WeightSpinor(NamedTuple):
    """Complex amplitudes on ``|up>`` and ``|down>``."""

    up: complex
    down: complex

    @classmethod
    def from_array(cls, arr):
        return cls(complex(arr[0]), complex(arr[1]))

    def as_array(self):
        return np.array([self.up, self.down], dtype=np.complex128)

    def norm(self):
        return math.sqrt(abs(self.up) ** 2 + abs(self.down) ** 2)

    def inner(self, other):
        """``<self|other>``."""
        return self.up.conjugate() * other.up + self.down.conjugate() * other.down


class Generators(NamedTuple):
    K: np.ndarray
    J1: np.ndarray
    J2: np.ndarray
    J3: np.ndarray
    P: np.ndarray

    @property
    def J_plus(self):
        return self.J1 + 1j * self.J2

    @property
    def J_minus(self):
        return self.J1 - 1j * self.J2

    @property
    def casimir(self):
        return self.J1 @ self.J1 + self.J2 @ self.J2 + self.J3 @ self.J3


class WeightStates(NamedTuple):
    sigma: WeightSpinor
    m: WeightSpinor
    m_perp: WeightSpinor


def defining_states(g):
    """``(|sigma>, |m>)`` as arrays in the ``{|m>, |m_perp>}`` basis."""
    sigma = np.array([g.alpha.conjugate(), g.beta], dtype=np.complex128)
    m = np.array([1.0, 0.0], dtype=np.complex128)
    return sigma, m


def build_generators(g):
    """``K, J1, J2, J3`` and the projector ``P`` on the search subspace."""
    sigma, m = defining_states(g)
    alpha, a, b = g.alpha, g.alpha_mag, g.beta
    ss = np.outer(sigma, sigma.conj())
    mm = np.outer(m, m.conj())
    diff = ss - mm
    P = diff @ diff / b**2
    K = -(b**2 / 2.0) * P
    J1 = (P - ss - mm) / (2.0 * a)
    J2 = -1j * (alpha.conjugate() * np.outer(m, sigma.conj()) - alpha * np.outer(sigma, m.conj())) / (2.0 * a * b)
    J3 = diff / (2.0 * b)
    return Generators(K, J1, J2, J3, P)


def weight_states(g):
    """Highest and lowest weight states ``(|up>, |down>)`` in the ``{|m>, |m_perp>}`` basis.

    Phases are those of the closed form ``sec(theta/2) (sin(theta/4)|m> - e^{i delta}
    cos(theta/4)|sigma>)``; in coordinates ``|up> = (-sin(theta/4), ...)``.
    """
    sigma, m = defining_states(g)
    q = g.theta / 4.0
    sec = 1.0 / math.cos(g.theta / 2.0)
    phase = complex(math.cos(g.delta), math.sin(g.delta))
    up = sec * (math.sin(q) * m - phase * math.cos(q) * sigma)
    down = sec * (math.cos(q) * m - phase * math.sin(q) * sigma)
    return up, down


def weight_basis(g):
    """Unitary whose columns are ``|up>`` and ``|down>`` in the ``{|m>, |m_perp>}`` basis."""
    up, down = weight_states(g)
    return np.column_stack([up, down])


def to_weight_basis(g, state):
    """Re-express a ``{|m>, |m_perp>}`` state vector as a :class:`WeightSpinor`."""
    return WeightSpinor.from_array(weight_basis(g).conj().T @ np.asarray(state, dtype=np.complex128))


def from_weight_basis(g, spinor):
    return weight_basis(g) @ spinor.as_array()


def states_in_weight_basis(g):
    """``sigma``, ``m`` and ``m_perp`` written on ``|up>, |down>``.

    ``m_perp`` is returned in its conventional form ``(cos(theta/4), sin(theta/4))``;
    the change-of-basis image of the ``|m_perp>`` basis vector differs from it by
    the global phase ``-exp(-i delta)``.
    """
    q = g.theta / 4.0
    c, s = math.cos(q), math.sin(q)
    phase = complex(math.cos(g.delta), -math.sin(g.delta))
    return WeightStates(
        sigma=WeightSpinor(-c * phase, s * phase),
        m=WeightSpinor(complex(-s), complex(c)),
        m_perp=WeightSpinor(complex(c), complex(s)),
    )


def grover_weight_matrix(g):
    """Standard Grover operator on ``|up>, |down>``: a real rotation by ``theta``."""
    c, s = math.cos(g.theta), math.sin(g.theta)
    return np.array([[c, s], [-s, c]])


def spinor_to_even(s):
    """Map ``(a0 + i a3, -a2 + i a1)`` to ``a0 + a1 iota e1 + a2 iota e2 + a3 iota e3``.

    In stored blades: ``iota e1 = e23``, ``iota e2 = -e13``, ``iota e3 = e12``.
    """
    a0, a3 = s.up.real, s.up.imag
    a2, a1 = -s.down.real, s.down.imag
    return Multivector([a0, 0.0, 0.0, 0.0, a3, -a2, a1, 0.0])


def even_to_spinor(psi):
    """Inverse of :func:`spinor_to_even`; rejects multivectors with odd grades."""
    c = psi.coefficients
    if np.any(np.abs(c[[1, 2, 3, 7]]) > 1e-12):
        raise InvalidInputError("spinor images are even-grade")
    a0, a3, a2, a1 = c[0], c[4], -c[5], c[6]
    return WeightSpinor(complex(a0, a3), complex(-a2, a1))


def polarization(psi):
    """Three-space image ``psi e3 psi~`` of a unit even multivector."""
    if isinstance(psi, WeightSpinor):
        psi = spinor_to_even(psi)
    drift = abs(geometric_product(psi, reverse(psi)).scalar - 1.0)
    if drift > SPINOR_TOLERANCE or any(abs(psi.coefficients[i]) > 1e-12 for i in (1, 2, 3, 7)):
        raise InvalidInputError(f"polarization needs a unit even multivector (norm drift {drift:.3g})")
    return Vector3.from_multivector(psi * _E3 * reverse(psi))
