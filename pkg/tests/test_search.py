import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ga_grover import search
from ga_grover import statevector as sv
from ga_grover.cl3 import Multivector, Rotor, Vector3, exp_iota, rotate_vector
from ga_grover.errors import DegenerateSearchError, InfeasiblePhaseError, InvalidInputError, TrajectoryCheckError
from ga_grover.search import (
    PrecessionAxis,
    SearchSpec,
    canonical_vectors,
    diffusion_rotor,
    exact_rotor,
    general_exact_rotor,
    general_start_vector,
    iterations_for_phase,
    iterations_standard,
    k_min,
    oracle_reflect,
    oracle_rotor,
    phase_matched_axis,
    phase_matched_polarization,
    run_trajectory,
    solve_exact_phase,
    standard_rotor,
)

from oracles import dense_success, rodrigues

# frozen with mpmath at 30 digits
THETA16 = 0.505360510284157306971314873987
K_STD16 = 2.60826883943040843550660992493
PHI16 = 2.19505769909011497975743775031
BETA_AT_219506 = 0.448799219442136050845416525083
PHI_HALF_K2 = 0.904556894302381364127316795662

GOLDEN_N16 = [
    (-0.25, 0.0, 0.9682),
    (-0.8456, 0.315, 0.4309),
    (-0.8456, 0.315, -0.4309),
    (-0.25, 0.0, -0.9682),
]

thetas = st.floats(1e-3, math.pi - 1e-3)
phases = st.floats(1e-2, math.pi)


def test_canonical_vectors_n16():
    sigma, m, m_perp = canonical_vectors(THETA16)
    assert sigma.max_abs_diff(Vector3(-0.25, 0, 0.9682)) < 1e-4
    assert sigma.x == pytest.approx(-0.25, abs=1e-15)
    assert m.max_abs_diff(Vector3(-0.25, 0, -0.9682)) < 1e-4
    for v in (sigma, m, m_perp):
        assert v.norm() == pytest.approx(1, abs=1e-15)


@given(thetas)
def test_sigma_dot_m(theta):
    sigma, m, _ = canonical_vectors(theta)
    assert sigma.dot(m) == pytest.approx(-math.cos(theta), abs=1e-15)


@pytest.mark.parametrize("n,m", [(4, 1), (16, 1), (37, 5), (64, 63)])
def test_start_success_equals_fraction(n, m):
    spec = SearchSpec(n, m)
    sigma, mv, _ = canonical_vectors(spec.theta)
    ga = (1 + sigma.dot(mv)) / 2
    ref = sv.success_probability(sv.uniform_state(n), sv.SolutionSet.first(n, m))
    assert ga == pytest.approx(m / n, abs=1e-14)
    assert ga == pytest.approx(ref, abs=1e-14)


@pytest.mark.parametrize("theta", [0.0, math.pi, -0.1, 4.0])
def test_theta_range_checked(theta):
    with pytest.raises(InvalidInputError):
        canonical_vectors(theta)


def test_standard_rotor_is_minus_sigma_m(rng):
    for theta in rng.uniform(0.01, math.pi - 0.01, size=50):
        sigma, m, _ = canonical_vectors(theta)
        assert standard_rotor(theta).isclose(-(sigma.to_multivector() * m.to_multivector()), atol=1e-12)
        assert standard_rotor(theta).isclose(exp_iota((0, 1, 0), theta), atol=1e-15)


def test_standard_rotor_unit():
    g = standard_rotor(0.7)
    assert (g * ~g).isclose(Multivector.from_scalar(1.0), atol=1e-15)


@pytest.mark.parametrize("k", range(6))
def test_standard_rotor_powers_on_sigma(k):
    theta = 0.41
    g = standard_rotor(theta)
    v = canonical_vectors(theta)[0]
    for _ in range(k):
        v = rotate_vector(g, v)
    angle = 2 * k * theta + theta / 2
    assert v.max_abs_diff(Vector3(-math.sin(angle), 0, math.cos(angle))) < 1e-13


def test_standard_single_step_reaches_m_n4():
    theta = math.pi / 3
    sigma, m, _ = canonical_vectors(theta)
    assert rotate_vector(standard_rotor(theta), sigma).max_abs_diff(m) < 1e-15


def test_oracle_fixes_m():
    theta = 0.9
    m = canonical_vectors(theta)[1]
    assert oracle_reflect(m, theta).max_abs_diff(m) < 1e-15


def test_oracle_on_sigma_n16_theta():
    got = oracle_reflect(canonical_vectors(THETA16)[0], THETA16)
    expected = Vector3(math.sin(1.5 * THETA16), 0, math.cos(1.5 * THETA16))
    assert got.max_abs_diff(expected) < 1e-15


@given(thetas, st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1))
def test_oracle_reflection_axis_equivalence(theta, x, y, z):
    v = Vector3(x, y, z)
    _, m, m_perp = canonical_vectors(theta)
    via_perp = Vector3.from_multivector(m_perp.to_multivector() * v.to_multivector() * m_perp.to_multivector())
    assert oracle_reflect(v, theta).max_abs_diff(via_perp) < 1e-12
    # oracle rotor at phi2 = pi acts identically
    assert oracle_reflect(v, theta).max_abs_diff(rotate_vector(oracle_rotor(theta, math.pi), v)) < 1e-12


def test_oracle_rotor_at_pi_is_iota_m():
    theta = 1.1
    expected = Multivector.blade("e123") * Vector3(math.sin(theta / 2), 0, math.cos(theta / 2)).to_multivector()
    assert oracle_rotor(theta, math.pi).isclose(expected, atol=1e-15)


def test_iterations_standard_values():
    assert iterations_standard(math.pi / 3) == pytest.approx(1.0, abs=1e-15)
    assert iterations_standard(THETA16) == pytest.approx(K_STD16, abs=1e-14)
    assert iterations_standard(THETA16) == pytest.approx(2.608, abs=1e-3)


@pytest.mark.parametrize("ratio", [100, 10**4, 10**6])
def test_iterations_standard_asymptotics(ratio):
    theta = 2 * math.asin(math.sqrt(1 / ratio))
    approx = math.pi / 4 * math.sqrt(ratio)
    assert abs(iterations_standard(theta) + 0.5 - approx) / approx < 0.01


def test_exact_rotor_reduces_to_standard(rng):
    for theta in rng.uniform(0.01, math.pi - 0.01, size=50):
        assert exact_rotor(theta, math.pi, math.pi).isclose(standard_rotor(theta), atol=1e-12)


def expansion(theta, p1, p2):
    # four-component expansion of the generalized rotor
    c1, s1, c2, s2 = math.cos(p1 / 2), math.sin(p1 / 2), math.cos(p2 / 2), math.sin(p2 / 2)
    scalar = c1 * c2 + math.cos(theta) * s1 * s2
    i1 = math.sin((p1 + p2) / 2) * math.sin(theta / 2)
    i2 = s1 * s2 * math.sin(theta)
    i3 = -math.cos(theta / 2) * math.sin((p1 - p2) / 2)
    # iota e1 = e23, iota e2 = -e13, iota e3 = e12
    return Rotor.from_even(scalar, e12=i3, e13=-i2, e23=i1)


@settings(max_examples=300)
@given(thetas, st.floats(-7, 7), st.floats(-7, 7))
def test_exact_rotor_matches_expansion(theta, p1, p2):
    assert exact_rotor(theta, p1, p2).isclose(expansion(theta, p1, p2), atol=1e-12)


def test_unmatched_phases_tilt_axis_out_of_plane():
    theta, p1, p2 = 0.8, 2.0, 1.2
    g = exact_rotor(theta, p1, p2)
    assert g["e12"] == pytest.approx(-math.cos(theta / 2) * math.sin((p1 - p2) / 2), abs=1e-15)
    assert abs(g["e12"]) > 0.1
    assert exact_rotor(theta, 1.7, 1.7)["e12"] == pytest.approx(0, abs=1e-15)


def test_phase_matched_axis_at_pi():
    for theta in (0.2, 1.0, 2.5):
        p = phase_matched_axis(theta, math.pi)
        assert p.beta_rot == pytest.approx(theta, abs=1e-14)
        assert p.axis.max_abs_diff(Vector3(0, 1, 0)) < 1e-15


def test_phase_matched_axis_n16():
    p = phase_matched_axis(THETA16, 2.19506)
    assert p.beta_rot == pytest.approx(BETA_AT_219506, abs=1e-14)
    assert p.beta_rot == pytest.approx(0.450, abs=2e-3)


@given(thetas, phases)
def test_phase_matched_axis_forms(theta, phi):
    p = phase_matched_axis(theta, phi)
    assert p.axis.norm() == pytest.approx(1, abs=1e-15)
    assert math.sin(p.beta_rot / 2) == pytest.approx(math.sin(theta / 2) * math.sin(phi / 2), abs=1e-14)
    z_form = Vector3(math.cos(phi / 2), math.cos(theta / 2) * math.sin(phi / 2), 0).normalized()
    assert p.axis.max_abs_diff(z_form) < 1e-12
    if phi < math.pi - 1e-6:
        cot_alpha = math.cos(p.axis_alpha) / math.sin(p.axis_alpha)
        assert cot_alpha == pytest.approx(math.cos(theta / 2) * math.tan(phi / 2), rel=1e-9)


@given(thetas, phases)
def test_phase_matched_rotor_equals_exact_rotor(theta, phi):
    assert phase_matched_axis(theta, phi).rotor().isclose(exact_rotor(theta, phi, phi), atol=1e-12)


@given(thetas, phases, st.integers(0, 50))
def test_rotor_product_scalar_identity(theta, phi, k):
    # scalar part of exp(iota k beta axis) exp(iota e2 theta/2)
    a, b = phase_matched_axis(theta, phi)
    axis = PrecessionAxis(a, b).axis
    prod = exp_iota(axis, k * b) * exp_iota((0, 1, 0), theta / 2)
    expected = math.cos(k * b) * math.cos(theta / 2) - math.sin(k * b) * math.sin(theta / 2) * math.cos(a)
    assert prod.scalar == pytest.approx(expected, abs=1e-12)


def test_iterations_for_phase_values():
    assert iterations_for_phase(math.pi / 3, math.pi) == pytest.approx(1.0, abs=1e-14)
    assert iterations_for_phase(THETA16, 2.19506) == pytest.approx(3.0, abs=1e-4)


@given(thetas)
def test_iterations_for_phase_reduces_to_standard(theta):
    assert iterations_for_phase(theta, math.pi) == pytest.approx(iterations_standard(theta), abs=1e-12)


@given(thetas)
def test_iterations_minimum_at_pi(theta):
    k_pi = iterations_for_phase(theta, math.pi)
    for phi in np.linspace(math.pi / 100, math.pi, 100):
        assert iterations_for_phase(theta, float(phi)) >= k_pi - 1e-12


def test_iterations_for_phase_rejects_bad_phi():
    with pytest.raises(InvalidInputError):
        iterations_for_phase(1.0, 0.0)


def test_k_min_values():
    assert k_min(math.pi / 3) == 1
    assert k_min(2 * math.asin(0.5)) == 1
    assert k_min(THETA16) == 3
    assert k_min(math.pi / 2) == 1
    assert k_min(math.pi - 1e-6) == 1


def test_solve_exact_phase_values():
    assert solve_exact_phase(math.pi / 3, 1) == pytest.approx(math.pi, abs=1e-7)
    assert solve_exact_phase(THETA16, 3) == pytest.approx(2.19506, abs=1e-4)
    assert solve_exact_phase(THETA16, 3) == pytest.approx(PHI16, abs=1e-14)
    assert solve_exact_phase(math.pi / 2, 2) == pytest.approx(PHI_HALF_K2, abs=1e-14)


def test_solve_exact_phase_half_k2_reaches_certainty():
    phi = solve_exact_phase(math.pi / 2, 2)
    probs = sv.run_search(16, sv.SolutionSet.first(16, 8), phi, phi, 2)
    assert probs[-1] == pytest.approx(1.0, abs=1e-12)
    assert dense_success(16, range(8), phi, phi, 2)[-1] == pytest.approx(1.0, abs=1e-12)


def test_solve_exact_phase_infeasible():
    with pytest.raises(InfeasiblePhaseError, match="minimal feasible k_m is 3") as info:
        solve_exact_phase(THETA16, 2)
    assert info.value.minimal_k == 3


@pytest.mark.parametrize("km", [0, -2, 1.5])
def test_solve_exact_phase_rejects_bad_k(km):
    with pytest.raises(InvalidInputError):
        solve_exact_phase(1.0, km)


@settings(max_examples=300)
@given(st.integers(2, 10**6), st.data())
def test_solved_phase_round_trips_through_iteration_count(n, data):
    m = data.draw(st.integers(1, n - 1))
    theta = SearchSpec(n, m).theta
    km = k_min(theta) + data.draw(st.integers(0, 3))
    phi = solve_exact_phase(theta, km)
    assert 0 < phi <= math.pi
    assert iterations_for_phase(theta, phi) == pytest.approx(km, abs=1e-9)


def test_general_start_reduces_to_sigma():
    for theta in (0.3, 1.2, 2.9):
        assert general_start_vector(theta, 0.0).max_abs_diff(canonical_vectors(theta)[0]) < 1e-15


def test_general_start_equatorial():
    v = general_start_vector(math.pi, 0.7)
    assert v.max_abs_diff(Vector3(-math.cos(0.7), -math.sin(0.7), 0)) < 1e-15


@given(st.floats(-10, 10), st.floats(-10, 10))
def test_general_start_unit(t0, p0):
    assert general_start_vector(t0, p0).norm() == pytest.approx(1, abs=1e-15)


@given(thetas, st.floats(-7, 7), st.floats(-7, 7))
def test_general_rotor_reduces_to_exact(theta, p1, p2):
    n = 1000
    m = max(1, min(n - 1, round(n * math.sin(theta / 2) ** 2)))
    spec = SearchSpec(n, m, p1, p2, SearchSpec(n, m).theta, 0.0)
    assert general_exact_rotor(spec).isclose(exact_rotor(spec.theta, p1, p2), atol=1e-12)


def test_general_rotor_double_reduction():
    spec = SearchSpec(16, 1)
    assert general_exact_rotor(spec).isclose(standard_rotor(spec.theta), atol=1e-12)


@given(st.floats(0.01, 3.1), st.floats(-7, 7), st.floats(-7, 7), st.floats(-7, 7))
def test_general_rotor_unit_and_diffusion_fixed_point(theta0, phi0, p1, p2):
    spec = SearchSpec(20, 3, p1, p2, theta0, phi0)
    assert general_exact_rotor(spec).drift() < 1e-12
    gamma = spec.start_vector
    assert rotate_vector(diffusion_rotor(gamma, p1), gamma).max_abs_diff(gamma) < 1e-12


def test_search_spec_validation():
    with pytest.raises(DegenerateSearchError, match="1 ≤ M < N"):
        SearchSpec(4, 4)
    with pytest.raises(DegenerateSearchError):
        SearchSpec(4, 0)
    with pytest.raises(InvalidInputError):
        SearchSpec(4, 1, phi1=float("nan"))
    spec = SearchSpec(16, 1)
    assert spec.phi1 == spec.phi2 == math.pi
    assert spec.has_canonical_start


def test_golden_trajectory_n16():
    spec = SearchSpec(16, 1, PHI16, PHI16)
    traj = run_trajectory(spec, 3)
    for point, expected in zip(traj, GOLDEN_N16):
        assert point.polarization.max_abs_diff(Vector3(*expected)) < 1e-3
    assert traj.final.success_probability == pytest.approx(1.0, abs=1e-12)


def test_golden_numeric_coefficients_n16():
    # P(k) = -(0.0546434 + 0.195357 c + 0.855913 s) e1 + (-0.10332 + 0.10332 c + 0.452673 s) e2
    #        + (0.968246 c - 0.220996 s) e3, with c = cos 2 beta k, s = sin 2 beta k
    prec = phase_matched_axis(THETA16, PHI16)
    for k in range(4):
        c, s = math.cos(2 * prec.beta_rot * k), math.sin(2 * prec.beta_rot * k)
        expected = Vector3(
            -(0.0546434 + 0.195357 * c + 0.855913 * s),
            -0.10332 + 0.10332 * c + 0.452673 * s,
            0.968246 * c - 0.220996 * s,
        )
        assert phase_matched_polarization(THETA16, prec, k).max_abs_diff(expected) < 1e-5


def test_trajectory_start():
    traj = run_trajectory(SearchSpec(37, 5), 0)
    assert len(traj) == 1
    assert traj[0].polarization == canonical_vectors(SearchSpec(37, 5).theta)[0]
    assert traj[0].success_probability == pytest.approx(5 / 37, abs=1e-15)


@pytest.mark.parametrize("n,m", [(16, 1), (50, 3), (64, 17), (7, 6)])
def test_standard_success_matches_statevector(n, m):
    spec = SearchSpec(n, m)
    steps = 2 * k_min(spec.theta) + 3
    ga = run_trajectory(spec, steps).success_probabilities()
    ref = sv.run_search(n, sv.SolutionSet.first(n, m), math.pi, math.pi, steps)
    closed = [math.sin((2 * k + 1) * spec.theta / 2) ** 2 for k in range(steps + 1)]
    np.testing.assert_allclose(ga, ref, atol=1e-10)
    np.testing.assert_allclose(ga, closed, atol=1e-12)


@settings(max_examples=100)
@given(st.integers(3, 10**5), st.data())
def test_exact_terminal_certainty(n, data):
    m = data.draw(st.integers(1, n - 1))
    theta = SearchSpec(n, m).theta
    km = k_min(theta)
    phi = solve_exact_phase(theta, km)
    traj = run_trajectory(SearchSpec(n, m, phi, phi), km)
    assert traj.final.success_probability == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("n,m", [(16, 1), (100, 1), (1000, 7), (4096, 3)])
def test_standard_success_increases_until_optimum(n, m):
    spec = SearchSpec(n, m)
    kmax = math.floor(iterations_standard(spec.theta))
    probs = run_trajectory(spec, kmax).success_probabilities()
    assert all(b > a for a, b in zip(probs, probs[1:]))


def test_norm_preserved_over_long_trajectory():
    spec = SearchSpec(1000, 3, 1.3, 2.1, 0.7, 0.4)
    traj = run_trajectory(spec, 10**5, check=False)
    norms = np.array([p.polarization.norm() for p in traj])
    assert np.max(np.abs(norms - 1)) < 1e-9


def test_long_trajectory_agrees_with_rodrigues():
    spec = SearchSpec(1000, 3, 1.3, 2.1, 0.7, 0.4)
    traj = run_trajectory(spec, 10**4)
    g = general_exact_rotor(spec)
    axis = np.array([g["e23"], -g["e13"], g["e12"]])
    half = math.atan2(np.linalg.norm(axis), g.scalar)
    expected = rodrigues(axis, -2 * half * 10**4, spec.start_vector.as_array())
    np.testing.assert_allclose(traj.final.polarization.as_array(), expected, atol=1e-9)


def test_trajectory_check_detects_mismatch(monkeypatch):
    monkeypatch.setattr(search, "phase_matched_polarization", lambda theta, prec, k: Vector3(0, 0, 1))
    with pytest.raises(TrajectoryCheckError):
        run_trajectory(SearchSpec(16, 1), 2)
    run_trajectory(SearchSpec(16, 1), 2, check=False)


def test_trajectory_renormalizes_drifting_rotor(monkeypatch, caplog):
    monkeypatch.setattr(search, "general_exact_rotor", lambda spec: Rotor.from_even(1.001))
    with caplog.at_level("WARNING"):
        traj = run_trajectory(SearchSpec(16, 1), 3, check=False)
    assert "renormalizing" in caplog.text
    assert traj.final.polarization.norm() == pytest.approx(1, abs=1e-12)


@pytest.mark.parametrize("k", [-1, 1.5])
def test_trajectory_rejects_bad_steps(k):
    with pytest.raises(InvalidInputError):
        run_trajectory(SearchSpec(16, 1), k)
