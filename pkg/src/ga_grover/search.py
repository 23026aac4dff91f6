"""Grover search operators as Cl(3,0) rotors.

The search state lives on the unit sphere: the start state ``sigma`` and the
solution ``m`` are the vectors returned by :func:`canonical_vectors`, and each
Grover iteration conjugates the current polarization by a fixed rotor.  The
probability of measuring a solution is ``(1 + P.m) / 2``.

Three operators are provided:

* :func:`standard_rotor` - ``exp(iota e2 theta)``, the textbook iteration;
* :func:`exact_rotor` - diffusion and oracle phases ``phi1``, ``phi2``;
* :func:`general_exact_rotor` - as above with an arbitrary start vector.

Rotors are returned as the product ``G_sigma G_m``.  The overall sign in the
bra-ket form ``-G_sigma G_m`` is a global phase and does not act on vectors.
"""

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._backend import kernels
from .cl3 import ROTOR_TOLERANCE, Rotor, Vector3, exp_iota, geometric_product
from .errors import InfeasiblePhaseError, InvalidInputError, TrajectoryCheckError
from .su2 import _check_counts

log = logging.getLogger(__name__)

TRAJECTORY_TOLERANCE = 1e-9
# k_min snaps values within this distance of an integer before taking the ceiling
_INTEGER_SNAP = 1e-9


def _check_theta(theta):
    if not 0.0 < theta < math.pi:
        raise InvalidInputError(f"theta must lie in (0, pi), got {theta!r}")


def _check_phi(phi):
    if not 0.0 < phi <= math.pi + 1e-15:
        raise InvalidInputError(f"phi must lie in (0, pi], got {phi!r}")


@dataclass(frozen=True)
class SearchSpec:
    """A search over ``n_items`` with ``n_solutions`` marked items.

    ``phi1`` is the diffusion phase and ``phi2`` the oracle phase (both ``pi``
    for the standard search).  ``start_theta0``/``start_phi0`` select a general
    start vector; left as ``None`` the uniform superposition is used.
    """

    n_items: int
    n_solutions: int
    phi1: float = math.pi
    phi2: float = math.pi
    start_theta0: float | None = None
    start_phi0: float | None = None

    def __post_init__(self):
        _check_counts(self.n_items, self.n_solutions)
        for name in ("phi1", "phi2", "start_theta0", "start_phi0"):
            value = getattr(self, name)
            if value is not None and not math.isfinite(value):
                raise InvalidInputError(f"{name} must be finite, got {value!r}")

    @property
    def theta(self):
        return 2.0 * math.asin(math.sqrt(self.n_solutions / self.n_items))

    @property
    def theta0(self):
        return self.theta if self.start_theta0 is None else self.start_theta0

    @property
    def phi0(self):
        return 0.0 if self.start_phi0 is None else self.start_phi0

    @property
    def has_canonical_start(self):
        return self.theta0 == self.theta and self.phi0 == 0.0

    @property
    def start_vector(self):
        if self.has_canonical_start:
            return canonical_vectors(self.theta)[0]
        return general_start_vector(self.theta0, self.phi0)


class PrecessionAxis(NamedTuple):
    """Phase-matched precession: rotor ``exp(iota beta (sin a e1 + cos a e2))``.

    ``axis_alpha`` is the azimuth ``a`` of the axis in the e1-e2 plane and
    ``beta_rot`` the rotor half-angle; one iteration turns the polarization
    by ``2 * beta_rot``.
    """

    axis_alpha: float
    beta_rot: float

    @property
    def axis(self):
        return Vector3(math.sin(self.axis_alpha), math.cos(self.axis_alpha), 0.0)

    def rotor(self):
        return exp_iota(self.axis, self.beta_rot)


class TrajectoryPoint(NamedTuple):
    k: int
    polarization: Vector3
    success_probability: float


@dataclass(frozen=True)
class Trajectory:
    points: tuple

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, k):
        return self.points[k]

    @property
    def final(self):
        return self.points[-1]

    def success_probabilities(self):
        return [p.success_probability for p in self.points]


def canonical_vectors(theta):
    """Polarizations ``(sigma, m, m_perp)`` of start, solution and non-solution states."""
    _check_theta(theta)
    s, c = math.sin(theta / 2.0), math.cos(theta / 2.0)
    return Vector3(-s, 0.0, c), Vector3(-s, 0.0, -c), Vector3(s, 0.0, c)


def success_from_polarization(p, m):
    return min(1.0, max(0.0, 0.5 * (1.0 + p.dot(m))))


def standard_rotor(theta):
    """``exp(iota e2 theta)``; each conjugation turns the polarization by ``2 theta``."""
    _check_theta(theta)
    return Rotor.from_even(math.cos(theta), e13=-math.sin(theta))


def oracle_reflect(v, theta):
    """Reflect ``v`` through the solution axis: ``m v m``."""
    m = canonical_vectors(theta)[1].to_multivector()
    return Vector3.from_multivector(m * v.to_multivector() * m)


def oracle_rotor(theta, phi2):
    """``G_m = exp(iota phi2/2 (sin(theta/2) e1 + cos(theta/2) e3))``."""
    return exp_iota(Vector3(math.sin(theta / 2.0), 0.0, math.cos(theta / 2.0)), phi2 / 2.0)


def diffusion_rotor(start, phi1):
    """``exp(-iota phi1/2 start)``: rotation by ``phi1`` about the start vector."""
    return exp_iota(start, -phi1 / 2.0)


def iterations_standard(theta):
    """Real-valued iteration count ``pi/(2 theta) - 1/2`` that lands on ``m``."""
    _check_theta(theta)
    return math.pi / (2.0 * theta) - 0.5


def exact_rotor(theta, phi1, phi2):
    """Grover rotor with diffusion phase ``phi1`` and oracle phase ``phi2``."""
    _check_theta(theta)
    sigma = canonical_vectors(theta)[0]
    return geometric_product(diffusion_rotor(sigma, phi1), oracle_rotor(theta, phi2))


def phase_matched_axis(theta, phi):
    """Axis and angle of the rotor for ``phi1 = phi2 = phi``.

    ``sin(beta/2) = sin(theta/2) sin(phi/2)``; the axis points along
    ``cos(phi/2) e1 + cos(theta/2) sin(phi/2) e2``, which is ``e2`` at ``phi = pi``.
    """
    _check_theta(theta)
    _check_phi(phi)
    beta = 2.0 * math.asin(math.sin(theta / 2.0) * math.sin(phi / 2.0))
    # cot(alpha) = cos(theta/2) tan(phi/2), branch fixed by the axis direction
    alpha = math.atan2(math.cos(phi / 2.0), math.cos(theta / 2.0) * math.sin(phi / 2.0))
    return PrecessionAxis(alpha, beta)


def _arccot(x):
    # principal branch (0, pi)
    return math.pi / 2.0 - math.atan(x)


def iterations_for_phase(theta, phi):
    """Real iteration count to reach ``m`` with matched phases ``phi``."""
    _check_theta(theta)
    _check_phi(phi)
    s, c = math.sin(theta / 2.0), math.cos(theta / 2.0)
    cot_half_phi = math.cos(phi / 2.0) / math.sin(phi / 2.0)
    numerator = _arccot(s / math.sqrt(c * c + cot_half_phi**2))
    return numerator / (2.0 * math.asin(s * math.sin(phi / 2.0)))


def k_min(theta):
    """Smallest integer iteration count admitting an exact search (at least 1)."""
    k = iterations_standard(theta)
    nearest = round(k)
    if abs(k - nearest) < _INTEGER_SNAP:
        k = nearest
    return max(1, math.ceil(k))


def solve_exact_phase(theta, km):
    """Matched phase ``phi`` that reaches ``m`` in exactly ``km`` iterations.

    Raises :class:`InfeasiblePhaseError` when ``km`` is below :func:`k_min`.
    """
    _check_theta(theta)
    if int(km) != km or km < 1:
        raise InvalidInputError(f"k_m must be a positive integer, got {km!r}")
    ratio = math.sin(math.pi / (4 * km + 2)) / math.sin(theta / 2.0)
    if ratio > 1.0 + 1e-12:
        minimal = k_min(theta)
        raise InfeasiblePhaseError(
            f"no real phase reaches the solution in k_m={km} iterations; "
            f"minimal feasible k_m is {minimal}",
            minimal,
        )
    return 2.0 * math.asin(min(1.0, ratio))


def general_start_vector(theta0, phi0):
    """Start polarization ``(-sin(t/2) cos p, -sin(t/2) sin p, cos(t/2))``."""
    if not (math.isfinite(theta0) and math.isfinite(phi0)):
        raise InvalidInputError("start angles must be finite")
    s = math.sin(theta0 / 2.0)
    return Vector3(-s * math.cos(phi0), -s * math.sin(phi0), math.cos(theta0 / 2.0))


def general_exact_rotor(spec):
    """``G_gamma G_m`` with ``G_gamma`` rotating by ``phi1`` about the start vector."""
    return geometric_product(diffusion_rotor(spec.start_vector, spec.phi1), oracle_rotor(spec.theta, spec.phi2))


def phase_matched_polarization(theta, precession, k):
    """Closed-form polarization after ``k`` phase-matched iterations from ``sigma``."""
    a, b = precession
    s, c = math.sin(theta / 2.0), math.cos(theta / 2.0)
    sa, ca = math.sin(a), math.cos(a)
    c2, s2 = math.cos(2.0 * b * k), math.sin(2.0 * b * k)
    return Vector3(
        -(sa * sa * s + s * ca * ca * c2 + ca * c * s2),
        -0.5 * s * math.sin(2.0 * a) + 0.5 * math.sin(2.0 * a) * s * c2 + c * sa * s2,
        c * c2 - ca * s * s2,
    )


def _axis_angle(rotor):
    # rotor = cos(B) + iota n sin(B)
    c = rotor.coefficients
    n = np.array([c[6], -c[5], c[4]])
    sin_b = float(np.linalg.norm(n))
    if sin_b == 0.0:
        return np.array([0.0, 0.0, 1.0]), 0.0
    return n / sin_b, math.atan2(sin_b, c[0])


def rotor_polarization(start, rotor, k):
    """Closed-form ``R^k v R~^k`` via the axis-angle form of ``R``."""
    n, b = _axis_angle(rotor)
    v = start.as_array()
    angle = -2.0 * b * k
    out = v * math.cos(angle) + np.cross(n, v) * math.sin(angle) + n * (n @ v) * (1.0 - math.cos(angle))
    return Vector3.from_array(out)


def run_trajectory(spec, k_steps, check=True):
    """Iterate the spec's Grover rotor ``k_steps`` times from its start vector.

    With ``check`` the stepwise orbit is compared against the closed form at
    every step and :class:`TrajectoryCheckError` is raised on disagreement.
    """
    if int(k_steps) != k_steps or k_steps < 0:
        raise InvalidInputError(f"k_steps must be a non-negative integer, got {k_steps!r}")
    k_steps = int(k_steps)
    theta = spec.theta
    rotor = general_exact_rotor(spec)
    drift = rotor.drift()
    if drift > ROTOR_TOLERANCE:
        log.warning("renormalizing Grover rotor (drift %.3g)", drift)
        rotor = rotor.normalized()
    start = spec.start_vector
    m = canonical_vectors(theta)[1]
    orbit = kernels.conjugate_orbit(rotor.coefficients, start.to_multivector().coefficients, k_steps)

    matched = spec.has_canonical_start and spec.phi1 == spec.phi2 and 0.0 < spec.phi1 <= math.pi
    precession = phase_matched_axis(theta, spec.phi1) if matched else None
    points = []
    for k in range(k_steps + 1):
        p = Vector3(float(orbit[k, 1]), float(orbit[k, 2]), float(orbit[k, 3]))
        if check:
            if matched:
                expected = phase_matched_polarization(theta, precession, k)
            else:
                expected = rotor_polarization(start, rotor, k)
            err = p.max_abs_diff(expected)
            if err > TRAJECTORY_TOLERANCE:
                raise TrajectoryCheckError(
                    f"step {k}: stepwise and closed-form polarizations differ by {err:.3g}"
                )
        points.append(TrajectoryPoint(k, p, success_from_polarization(p, m)))
    return Trajectory(tuple(points))
