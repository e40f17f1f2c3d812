import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.domain.entities import (
    Coupling,
    DensityMatrix,
    DickeState,
    EnvironmentKind,
    OperatorScheme,
    Representation,
    SurvivalSeries,
)
from src.domain.services.dynamics import (
    build_closed_model,
    build_dephasing_model,
    build_thermal_model,
    check_bins,
    dephasing_decay_rate,
    ensemble_average,
    fit_decay_rate,
    integrate_master,
    lattice_steps,
    magnetization_distribution,
    max_decay_law_error,
    qsd_step_size,
    qsd_trajectory,
    support_leakage,
    survival_closed_form,
    survival_recurrence,
    toy_evolve,
    toy_step,
    toy_survival_series,
    unit_width_bins,
)
from src.domain.services.spin_core import build_spin_operators, embed_density, make_coherent_state, restrict_operator
from src.domain.value_objects import SphericalAngle, SpinQuantumNumber, ToyModelParams
from src.shared.constants import Tolerances
from src.shared.exceptions import DecayFitError, SupportLeakageError


class TestToyModel:
    @pytest.mark.parametrize("c", [0.0, 0.3, 0.9, 1.0])
    def test_recurrence_matches_closed_form(self, c):
        for n in range(12):
            assert survival_recurrence(c, n) == pytest.approx(survival_closed_form(c, n), abs=1e-14)

    def test_recurrence_rejects_invalid_c(self):
        with pytest.raises(ValueError):
            survival_recurrence(1.5, 3)

    def test_simulated_series_matches_recurrence(self, spin_five):
        params = ToyModelParams(omega=1.0, delta_t=0.2, n_steps=40)
        series = toy_survival_series(spin_five, params)
        expected = [survival_closed_form(params.c, n) for n in range(41)]
        assert_allclose(series.values, expected, atol=1e-12)
        assert_allclose(series.times, params.times())

    @pytest.mark.parametrize("phase", [0.1, 0.5, math.pi / 4, math.pi / 2])
    def test_repeated_steps_follow_the_recurrence(self, spin_five, phase):
        params = ToyModelParams(omega=1.0, delta_t=phase)
        states = toy_evolve(DickeState.north(spin_five).to_density_matrix(), params, 20)
        for n, state in enumerate(states):
            assert state.population(spin_five.j) == pytest.approx(survival_recurrence(params.c, n), abs=1e-12)

    def test_step_removes_pointer_coherences(self, spin_five):
        params = ToyModelParams(omega=1.0, delta_t=0.3)
        north = DickeState.north(spin_five).to_density_matrix()
        stepped = toy_step(north, params)
        assert stepped.entries[spin_five.north_index, spin_five.south_index] == 0
        assert stepped.population(spin_five.j) == pytest.approx(math.cos(0.3) ** 2)

    def test_states_outside_the_pointer_block_are_rejected(self, spin_five):
        params = ToyModelParams(omega=1.0, delta_t=0.2)
        middle = DickeState.basis(spin_five, 0).to_density_matrix()
        assert support_leakage(middle) == pytest.approx(1.0)
        with pytest.raises(SupportLeakageError):
            toy_step(middle, params)

    def test_evolve_returns_every_step(self, spin_one):
        params = ToyModelParams(omega=1.0, delta_t=0.2)
        states = toy_evolve(DickeState.north(spin_one).to_density_matrix(), params, 5)
        assert len(states) == 6

    def test_lattice_steps(self):
        params = ToyModelParams(omega=1.0, delta_t=0.2)
        assert lattice_steps(params, 0.2, 1.0) == 4
        assert lattice_steps(params, 0.6, 0.6) == 0
        with pytest.raises(ValueError):
            lattice_steps(params, 0.0, 0.3)
        with pytest.raises(ValueError):
            lattice_steps(params, 1.0, 0.2)


class TestDecayFit:
    def test_recovers_exponential_rate(self):
        times = np.linspace(0, 10, 41)
        series = SurvivalSeries(times=times, values=0.5 * (1 + np.exp(-0.37 * times)))
        fit = fit_decay_rate(series)
        assert fit.nu == pytest.approx(0.37, rel=1e-9)
        assert fit.rms_residual < 1e-9
        assert max_decay_law_error(series, fit.nu) < 1e-9

    def test_toy_series_decays_at_lattice_rate(self, spin_five):
        params = ToyModelParams(omega=1.0, delta_t=0.2, n_steps=61)
        fit = fit_decay_rate(toy_survival_series(spin_five, params))
        assert fit.nu == pytest.approx(params.exact_rate, rel=1e-8)
        assert abs(fit.nu - params.small_step_rate) / params.small_step_rate < 0.05

    def test_too_few_points(self):
        series = SurvivalSeries(times=np.arange(4.0), values=np.full(4, 0.9))
        with pytest.raises(DecayFitError, match="at least"):
            fit_decay_rate(series)

    def test_constant_survival_is_rejected(self):
        series = SurvivalSeries(times=np.linspace(0, 2, 9), values=np.ones(9))
        with pytest.raises(DecayFitError, match="not positive"):
            fit_decay_rate(series)

    def test_oscillating_survival_is_rejected(self):
        times = np.linspace(0, 3, 20)
        series = SurvivalSeries(times=times, values=np.cos(times) ** 2)
        with pytest.raises(DecayFitError):
            fit_decay_rate(series)

    def test_increasing_survival_is_rejected(self):
        times = np.linspace(0, 1, 6)
        values = np.array([1.0, 0.9, 0.8, 0.85, 0.7, 0.6])
        with pytest.raises(DecayFitError, match="increases"):
            fit_decay_rate(SurvivalSeries(times=times, values=values))


class TestLindbladModels:
    def test_closed_model(self):
        model = build_closed_model(4, 1.0)
        assert model.is_closed
        assert model.environment is EnvironmentKind.NONE
        assert model.dimension == 5

    def test_dephasing_operator_in_dicke_basis(self, spin_five):
        model = build_dephasing_model(10, 1.0, gamma_dp=0.5)
        (operator,) = model.lindblad_ops
        jz = build_spin_operators(spin_five).jz.entries
        assert_allclose(operator.entries, 2.0 * (jz + 5 * np.eye(11)))

    @pytest.mark.parametrize("builder, kwargs", [
        (build_dephasing_model, {"gamma_dp": 0.7}),
        (build_thermal_model, {"gamma_th": 0.3, "n_bar": 2.0}),
    ])
    def test_collective_full_space_operator_restricts_to_dicke_operator(self, builder, kwargs):
        n_qubits = 3
        dicke = builder(n_qubits, 1.0, **kwargs)
        full = builder(n_qubits, 1.0, representation=Representation.FULL, **kwargs)
        assert full.dimension == 8
        assert_allclose(
            restrict_operator(full.lindblad_ops[0].entries, n_qubits),
            dicke.lindblad_ops[0].entries,
            atol=1e-12,
        )

    def test_local_operators(self):
        model = build_thermal_model(
            3, 1.0, gamma_th=0.1, n_bar=1.0, representation=Representation.FULL, operators=OperatorScheme.LOCAL
        )
        assert len(model.lindblad_ops) == 3

    def test_local_operators_need_full_space(self):
        with pytest.raises(ValueError):
            build_dephasing_model(3, 1.0, gamma_dp=0.1, operators=OperatorScheme.LOCAL)

    def test_product_coupling_balances_hamiltonian_and_dissipator(self):
        balanced = build_dephasing_model(10, 1.0, gamma_dp=1.0, coupling=Coupling.PRODUCT)
        ratio = 0.5 * balanced.dissipation_norm() / balanced.hamiltonian_norm()
        assert 1.0 < ratio < 2.0

        precessing = build_dephasing_model(10, 1.0, gamma_dp=1.0)
        assert 0.5 * precessing.dissipation_norm() / precessing.hamiltonian_norm() > 100

    def test_dephasing_rate_branches(self, spin_five):
        overdamped = dephasing_decay_rate(spin_five, 1.0, 1.0)
        gamma = 32 * 25
        assert overdamped == pytest.approx((gamma - math.sqrt(gamma**2 - 16)) / 2, rel=1e-9)
        underdamped = dephasing_decay_rate(spin_five, 100.0, 0.01)
        assert underdamped == pytest.approx(32 * 1e-4 * 25 / 2)


class TestMasterEquation:
    def test_closed_model_reproduces_precession(self, spin_one):
        model = build_closed_model(2, 1.0)
        times = np.linspace(0, 2, 11)
        result = integrate_master(model, DickeState.north(spin_one).to_density_matrix(), times)
        assert_allclose(result.survival_series().values, np.cos(times) ** 2, atol=1e-8)

    def test_dephasing_survival_decays_at_predicted_rate(self):
        model = build_dephasing_model(4, 1.0, gamma_dp=0.5)
        rho0 = DickeState.north(model.spin).to_density_matrix()
        result = integrate_master(model, rho0, np.linspace(0, 20, 41))
        fit = fit_decay_rate(result.survival_series())
        assert fit.nu == pytest.approx(dephasing_decay_rate(model.spin, 1.0, 0.5), rel=0.02)

    def test_thermal_evolution_preserves_trace_and_positivity(self, spin_one):
        model = build_thermal_model(2, 1.0, gamma_th=0.5, n_bar=1.0)
        result = integrate_master(model, DickeState.north(spin_one).to_density_matrix(), np.linspace(0, 2, 11))
        assert result.diagnostics.max_trace_drift < 1e-8
        assert result.diagnostics.min_eigenvalue > -1e-6
        assert result.diagnostics.step_count > 0
        for state in result.states:
            assert abs(np.trace(state.entries) - 1) < 1e-8

    def test_dephasing_never_populates_intermediate_levels(self, spin_five):
        model = build_dephasing_model(10, 1.0, gamma_dp=0.2)
        result = integrate_master(model, DickeState.north(spin_five).to_density_matrix(), np.linspace(0, 5, 11))
        populations = result.magnetization_populations()
        assert_allclose(populations[:, 1:-1], 0.0, atol=1e-12)

    def test_full_space_integration_agrees_with_dicke(self, spin_one):
        times = np.linspace(0, 2, 9)
        rho0 = make_coherent_state(spin_one, SphericalAngle(0.4, 1.0)).to_density_matrix()
        dicke = integrate_master(build_thermal_model(2, 1.0, gamma_th=0.4, n_bar=1.0), rho0, times)
        full = integrate_master(
            build_thermal_model(2, 1.0, gamma_th=0.4, n_bar=1.0, representation=Representation.FULL), rho0, times
        )
        for small, large in zip(dicke.states, full.states):
            assert large.representation is Representation.FULL
            assert_allclose(small.magnetization_populations(), large.magnetization_populations(), atol=1e-7)

    def test_rejects_unsorted_grid(self, spin_one):
        with pytest.raises(ValueError):
            integrate_master(build_closed_model(2, 1.0), DensityMatrix.maximally_mixed(spin_one), np.array([1.0, 0.0]))


class TestStateDiffusion:
    def test_step_size_rule(self):
        model = build_thermal_model(2, 2.0, gamma_th=0.5, n_bar=1.0)
        expected = min(0.01 / 2.0, math.sqrt(1e-3) / 4 / model.hamiltonian_norm(), 2.5e-4 / model.dissipation_norm())
        assert qsd_step_size(model) == pytest.approx(expected)
        assert qsd_step_size(model, max_step=1e-5) == 1e-5

    def test_product_coupling_step_is_bounded_by_hamiltonian(self):
        model = build_dephasing_model(10, 1.0, gamma_dp=0.01, coupling=Coupling.PRODUCT)
        assert model.hamiltonian_norm() == pytest.approx(512.0)
        assert qsd_step_size(model) == pytest.approx(math.sqrt(1e-3) / 4 / 512.0)

    @pytest.mark.parametrize(
        "model",
        [
            build_thermal_model(2, 1.0, gamma_th=0.5, n_bar=1.0),
            build_thermal_model(2, 1.0, gamma_th=0.1, n_bar=10.0),
            build_dephasing_model(2, 1.0, gamma_dp=0.3),
            build_dephasing_model(10, 1.0, gamma_dp=0.01, coupling=Coupling.PRODUCT),
        ],
        ids=["thermal", "hot_thermal", "dephasing", "product_coupling"],
    )
    def test_default_step_keeps_norm_drift_within_tolerance(self, model):
        psi0 = DickeState.north(model.spin)
        ensemble = ensemble_average(model, psi0, np.linspace(0, 0.05, 3), count=200, master_seed=17)
        assert 0 < ensemble.max_norm_drift <= Tolerances.NORM_DRIFT_PER_STEP

    def test_closed_trajectory_is_schrodinger_evolution(self, spin_one):
        model = build_closed_model(2, 1.0)
        times = np.linspace(0, 1.5, 4)
        trajectory = qsd_trajectory(model, DickeState.north(spin_one), times, seed=3)
        north_population = np.abs(trajectory.states[:, spin_one.north_index]) ** 2
        assert_allclose(north_population, np.cos(times) ** 2, atol=1e-12)

    def test_trajectories_stay_normalized(self, spin_one):
        model = build_thermal_model(2, 1.0, gamma_th=0.5, n_bar=1.0)
        trajectory = qsd_trajectory(model, DickeState.north(spin_one), np.linspace(0, 0.5, 6), seed=11, max_step=1e-3)
        assert_allclose(np.sum(np.abs(trajectory.states) ** 2, axis=1), 1.0, atol=1e-12)
        assert trajectory.mean_norm_drift <= Tolerances.NORM_DRIFT_PER_STEP

    def test_ensemble_is_reproducible_and_thread_independent(self, spin_one):
        model = build_thermal_model(2, 1.0, gamma_th=0.5, n_bar=1.0)
        times = np.linspace(0, 0.4, 5)
        arguments = dict(count=300, master_seed=42)
        single = ensemble_average(model, DickeState.north(spin_one), times, threads=1, **arguments)
        pooled = ensemble_average(model, DickeState.north(spin_one), times, threads=3, **arguments)
        assert np.array_equal(single.magnetization_mean, pooled.magnetization_mean)
        for first, second in zip(single.states, pooled.states):
            assert np.array_equal(first.entries, second.entries)

    def test_different_seeds_differ(self, spin_one):
        model = build_thermal_model(2, 1.0, gamma_th=0.5, n_bar=1.0)
        times = np.linspace(0, 0.4, 3)
        first = ensemble_average(model, DickeState.north(spin_one), times, count=20, master_seed=1)
        second = ensemble_average(model, DickeState.north(spin_one), times, count=20, master_seed=2)
        assert not np.array_equal(first.magnetization_mean, second.magnetization_mean)

    def test_ensemble_tracks_master_equation(self, spin_one):
        model = build_thermal_model(2, 1.0, gamma_th=0.5, n_bar=1.0)
        times = np.linspace(0, 0.5, 6)
        ensemble = ensemble_average(model, DickeState.north(spin_one), times, count=400, master_seed=5)
        exact = integrate_master(model, DickeState.north(spin_one).to_density_matrix(), times)
        expected = exact.magnetization_populations() @ spin_one.m_values()

        deviation = np.abs(ensemble.magnetization_mean - expected)
        assert deviation[0] < 1e-12
        assert np.all(deviation[1:] <= 3 * ensemble.magnetization_stderr[1:])

    def test_rejects_empty_ensemble(self, spin_one):
        with pytest.raises(ValueError):
            ensemble_average(build_closed_model(2, 1.0), DickeState.north(spin_one), np.array([0.0, 1.0]), 0, 1)


class TestMagnetization:
    def test_unit_width_bins(self, spin_one):
        assert_allclose(unit_width_bins(spin_one), [-1.5, -0.5, 0.5, 1.5])

    def test_distribution_of_mixed_state(self, spin_one):
        rho = DensityMatrix.diagonal(spin_one, np.array([0.2, 0.3, 0.5]))
        histogram = magnetization_distribution(rho, unit_width_bins(spin_one), time=1.5)
        assert histogram.time == 1.5
        assert_allclose(histogram.probabilities, [0.2, 0.3, 0.5])

    def test_coarse_bins_and_upper_edge(self, spin_one):
        rho = DensityMatrix.diagonal(spin_one, np.array([0.2, 0.3, 0.5]))
        histogram = magnetization_distribution(rho, np.array([-1.0, 0.0, 1.0]))
        # m = 0 falls in [0, 1); m = +1 sits on the last edge and stays in the last bin
        assert_allclose(histogram.probabilities, [0.2, 0.8])

    def test_bins_must_cover_the_spectrum(self, spin_one):
        with pytest.raises(ValueError):
            check_bins(spin_one, np.array([-0.5, 0.5, 1.5]))

    def test_full_space_distribution(self):
        spin = SpinQuantumNumber.from_qubits(2)
        rho = embed_density(DensityMatrix.diagonal(spin, np.array([0.25, 0.25, 0.5])))
        histogram = magnetization_distribution(rho, unit_width_bins(spin))
        assert_allclose(histogram.probabilities, [0.25, 0.25, 0.5], atol=1e-12)
