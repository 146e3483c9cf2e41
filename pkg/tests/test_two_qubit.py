"""Two-qubit elements, concurrence families, optima and sudden death."""

import numpy as np
import pytest

from pbgqubit import (
    GridSpec,
    ReservoirParams,
    TwoQubitInit,
    amplitude_U,
    amplitude_u,
    concurrence_phi,
    concurrence_psi,
    concurrence_trace,
    optimal_alpha,
    optimal_alpha_at,
    steady_concurrence,
    steady_probability,
    sudden_death_time,
    two_qubit_elements,
    x_state_concurrence,
)
from conftest import damped_pair_state, family_vector, wootters_concurrence

# Frozen from the high-resolution closed-form scans done before this suite:
# psi-family steady optimum and sudden-death times at delta/beta = -5.
PSI_OPTIMUM = 0.7724440438644011
DEATH_TIMES = {
    (2.0, 0.20): 0.046037706,
    (-5.0, 0.20): 0.058073762,
    (-5.0, 0.28): 0.157029184,
}


def reduced_concurrence(init, m):
    if init.family == "phi":
        return concurrence_phi(init, m)
    return concurrence_psi(init, m)


def test_elements_match_tensor_channel(rng):
    for _ in range(150):
        family = "phi" if rng.uniform() < 0.5 else "psi"
        init = TwoQubitInit(
            family, rng.uniform(0.0, 1.0), rng.uniform(-np.pi, np.pi)
        )
        m = rng.uniform(0.0, 1.0)
        elements = two_qubit_elements(init, m)
        ref = damped_pair_state(
            family_vector(family, init.alpha, init.gamma_phase), np.sqrt(m)
        )
        assert np.max(np.abs(elements.as_matrix() - ref)) <= 1e-12


def test_elements_along_actual_trajectory():
    params = ReservoirParams(-5.0)
    init = TwoQubitInit("psi", np.sqrt(0.3), 0.4)
    for t in (0.0, 0.2, 1.0, 7.5, 30.0):
        m = abs(amplitude_U(params, t)) ** 2
        elements = two_qubit_elements(init, m)
        ref = damped_pair_state(
            family_vector("psi", init.alpha, 0.4), np.sqrt(m)
        )
        assert np.max(np.abs(elements.as_matrix() - ref)) <= 1e-12


def test_elements_array_input():
    init = TwoQubitInit("phi", 0.6)
    m = np.array([1.0, 0.5, 0.1])
    elements = two_qubit_elements(init, m)
    assert elements.rho22.shape == (3,)
    total = elements.rho11 + elements.rho22 + elements.rho33 + elements.rho44
    assert np.max(np.abs(total - 1.0)) < 1e-15


def test_elements_validation():
    init = TwoQubitInit("phi", 0.6)
    with pytest.raises(ValueError):
        two_qubit_elements(init, -0.1)
    with pytest.raises(ValueError):
        two_qubit_elements(init, 1.1)
    with pytest.raises(ValueError):
        TwoQubitInit("chi", 0.5)
    with pytest.raises(ValueError):
        TwoQubitInit("phi", 1.5)


def test_reduced_formulas_match_generic(rng):
    for _ in range(200):
        family = "phi" if rng.uniform() < 0.5 else "psi"
        init = TwoQubitInit(
            family, rng.uniform(0.0, 1.0), rng.uniform(-np.pi, np.pi)
        )
        m = rng.uniform(0.0, 1.0)
        generic = x_state_concurrence(two_qubit_elements(init, m))
        assert abs(generic - reduced_concurrence(init, m)) <= 1e-12


def test_concurrence_matches_wootters(rng):
    # the spin-flip spectrum route on the full matrix, including the
    # physical channel whose outer coherence keeps the amplitude phase
    params = ReservoirParams(-5.0)
    for _ in range(40):
        family = "phi" if rng.uniform() < 0.5 else "psi"
        init = TwoQubitInit(
            family, rng.uniform(0.05, 0.95), rng.uniform(-np.pi, np.pi)
        )
        t = rng.uniform(0.0, 20.0)
        u = amplitude_u(params, t)
        vec = family_vector(family, init.alpha, init.gamma_phase)
        stripped = wootters_concurrence(damped_pair_state(vec, abs(u)))
        phased = wootters_concurrence(damped_pair_state(vec, u))
        reduced = float(reduced_concurrence(init, abs(u) ** 2))
        # the spin-flip route takes square roots of eigenvalues of a
        # non-Hermitian product, which costs several digits; observed
        # noise floor is around 2e-9
        assert abs(stripped - reduced) <= 2e-7
        assert abs(phased - reduced) <= 2e-7  # local phases cannot move it


def test_bell_reductions():
    params = ReservoirParams(-5.0)
    grid = GridSpec(30.0, 600)
    m = np.abs(amplitude_U(params, grid.times)) ** 2
    bell_phi = TwoQubitInit("phi", np.sqrt(0.5))
    bell_psi = TwoQubitInit("psi", np.sqrt(0.5))
    assert np.max(np.abs(concurrence_phi(bell_phi, m) - m)) <= 1e-12
    assert np.max(np.abs(concurrence_psi(bell_psi, m) - m * m)) <= 1e-12


def test_concurrence_family_mismatch():
    with pytest.raises(ValueError):
        concurrence_phi(TwoQubitInit("psi", 0.5), 0.5)
    with pytest.raises(ValueError):
        concurrence_psi(TwoQubitInit("phi", 0.5), 0.5)


def test_state_positivity(rng):
    for _ in range(50):
        family = "phi" if rng.uniform() < 0.5 else "psi"
        init = TwoQubitInit(family, rng.uniform(0.0, 1.0))
        mat = two_qubit_elements(init, rng.uniform(0.0, 1.0)).as_matrix()
        assert np.min(np.linalg.eigvalsh(mat)) >= -1e-12


def test_phi_concurrence_monotone_in_m(rng):
    # phi decays in lockstep with the population factor; psi's clamped
    # value is monotone too, though its unclamped argument dips below
    # zero first when alpha^2 < 1/2
    m = np.linspace(0.0, 1.0, 200)
    for _ in range(20):
        a = rng.uniform(0.05, 0.95)
        phi_vals = concurrence_phi(TwoQubitInit("phi", a), m)
        psi_vals = concurrence_psi(TwoQubitInit("psi", a), m)
        assert np.all(np.diff(phi_vals) >= -1e-15)
        assert np.all(np.diff(psi_vals) >= -1e-15)


def test_psi_unclamped_argument_dips_for_small_alpha():
    # alpha^2 = 0.2: the argument leaves zero downward before recovering
    init = TwoQubitInit("psi", np.sqrt(0.2))
    g = np.sqrt(1.0 - 0.2)
    arg_small = 2.0 * g * 0.1 * (init.alpha - g * 0.9)
    assert arg_small < 0.0
    assert concurrence_psi(init, 0.1) == 0.0


def test_steady_concurrence_frozen_values():
    params = ReservoirParams(-5.0)
    p_inf = steady_probability(params)
    assert steady_concurrence(params, TwoQubitInit("phi", np.sqrt(0.5))) == (
        pytest.approx(p_inf, abs=1e-12)
    )
    assert steady_concurrence(params, TwoQubitInit("psi", np.sqrt(0.5))) == (
        pytest.approx(p_inf * p_inf, abs=1e-12)
    )
    outside = ReservoirParams(1.0)
    assert steady_concurrence(outside, TwoQubitInit("phi", np.sqrt(0.5))) == 0.0
    assert steady_concurrence(outside, TwoQubitInit("psi", np.sqrt(0.5))) == 0.0


def test_optimal_alpha_phi_is_balanced():
    assert optimal_alpha(ReservoirParams(-5.0), "phi") == 0.5
    assert optimal_alpha_at("phi", 0.123) == 0.5


def test_optimal_alpha_psi():
    found = optimal_alpha(ReservoirParams(-5.0), "psi")
    assert abs(found - PSI_OPTIMUM) <= 1e-6
    # full trapping pushes the optimum back to the balanced state
    assert abs(optimal_alpha_at("psi", 1.0) - 0.5) <= 1e-6


def test_optimal_alpha_matches_analytic_stationarity(rng):
    # the maximizer solves (2x-1) / (2 sqrt(x(1-x))) = 1 - p
    for _ in range(15):
        p = rng.uniform(0.05, 1.0)
        g = 1.0 - p
        analytic = 0.5 * (1.0 + g / np.sqrt(1.0 + g * g))
        assert abs(optimal_alpha_at("psi", p) - analytic) <= 1e-6


def test_optimal_alpha_validation():
    with pytest.raises(ValueError):
        optimal_alpha(ReservoirParams(2.0), "psi")  # no trapped population
    with pytest.raises(ValueError):
        optimal_alpha_at("psi", 0.0)
    with pytest.raises(ValueError):
        optimal_alpha_at("chi", 0.5)


def test_sudden_death_frozen_times():
    grid = GridSpec(30.0, 600)
    for (delta, alpha2), ref in DEATH_TIMES.items():
        found = sudden_death_time(
            ReservoirParams(delta), TwoQubitInit("psi", np.sqrt(alpha2)), grid
        )
        assert found == pytest.approx(ref, abs=2e-6)


def test_sudden_death_absent_above_crossover():
    # trapping threshold alpha^2 > g^2/(1+g^2) = 0.2969 at delta/beta = -5
    grid = GridSpec(30.0, 600)
    params = ReservoirParams(-5.0)
    for alpha2 in (0.31, 0.36, 0.5):
        assert sudden_death_time(params, TwoQubitInit("psi", np.sqrt(alpha2)), grid) is None


def test_sudden_death_revival_window():
    # alpha^2 = 0.30 sits between the population dip and the trapped
    # plateau: the argument goes negative transiently but the plateau
    # revives the entanglement, so no death time exists
    grid = GridSpec(30.0, 3000)
    params = ReservoirParams(-5.0)
    init = TwoQubitInit("psi", np.sqrt(0.30))
    m = np.abs(amplitude_U(params, grid.times)) ** 2
    g = np.sqrt(1.0 - 0.30)
    argument = init.alpha - g * (1.0 - m)
    assert np.min(argument) < 0.0
    assert argument[-1] > 0.0
    assert sudden_death_time(params, init, grid) is None


def test_sudden_death_edge_cases():
    grid = GridSpec(30.0, 600)
    params = ReservoirParams(-5.0)
    assert sudden_death_time(params, TwoQubitInit("psi", 0.0), grid) == 0.0
    assert sudden_death_time(params, TwoQubitInit("psi", 1.0), grid) == 0.0
    assert sudden_death_time(params, TwoQubitInit("phi", 0.0), grid) == 0.0
    assert sudden_death_time(params, TwoQubitInit("phi", 0.7), grid) is None


def test_concurrence_trace_shapes():
    grid = GridSpec(30.0, 600)
    times, values = concurrence_trace(
        ReservoirParams(-5.0), TwoQubitInit("phi", np.sqrt(0.5)), grid
    )
    assert times.shape == values.shape == (601,)
    assert values[0] == pytest.approx(1.0, abs=1e-15)
    assert np.all(values >= 0.0)
