import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.domain.entities import EnvironmentKind, Representation
from src.shared.exceptions import GridResolutionError, ScenarioValidationException


class TestToyScenario:
    def test_lattice_times(self, scenario_factory, scenario_builder):
        built = scenario_builder.build(scenario_factory())
        assert built.times.size == 31
        assert built.times[-1] == pytest.approx(6.0)
        assert built.model is None
        assert built.toy_params.delta_t == 0.2
        assert built.snapshots == pytest.approx((0.0, 2.0))

    def test_north_initial_state(self, scenario_factory, scenario_builder):
        built = scenario_builder.build(scenario_factory())
        assert built.rho0.population(built.spin.j) == pytest.approx(1.0)

    def test_zeno_warning(self, scenario_factory, scenario_builder):
        built = scenario_builder.build(scenario_factory(toy={"delta_t": 0.01, "n_steps": 10}))
        assert any("Zeno regime" in warning for warning in built.warnings)

    def test_snapshot_off_the_lattice(self, scenario_factory, scenario_builder):
        with pytest.raises(ScenarioValidationException) as e:
            scenario_builder.build(scenario_factory(toy={"delta_t": 0.2, "n_steps": 10, "snapshots": [0.3]}))
        assert e.value.errors == ["snapshots: 0.3 is not a grid time"]

    def test_mr_pair_off_the_lattice(self, scenario_factory, scenario_builder):
        scenario = scenario_factory(
            partition={"preset": "hemispheres"}, analysis={"mr_check": {"pairs": [[0.1, 0.4]]}}
        )
        with pytest.raises(ScenarioValidationException, match="toy lattice"):
            scenario_builder.build(scenario)

    def test_coarse_continuity_grid_is_flagged(self, scenario_factory, scenario_builder):
        built = scenario_builder.build(scenario_factory(analysis={"continuity": {}}))
        assert any("unreliable" in warning for warning in built.warnings)

    def test_product_coupling_rescales_omega(self, scenario_factory, scenario_builder):
        built = scenario_builder.build(
            scenario_factory(system={"n_qubits": 4, "omega": 0.05, "coupling": "product"})
        )
        assert built.effective_omega == pytest.approx(0.4)
        assert built.toy_params.phase == pytest.approx(0.08)


class TestLindbladScenario:
    def test_closed_model(self, scenario_factory, scenario_builder, closed_document):
        built = scenario_builder.build(scenario_factory(closed_document))
        assert built.model.is_closed
        assert built.toy_params is None
        assert_allclose(built.times, np.linspace(0, 3, 31))
        assert_allclose(built.bin_edges, [-1.5, -0.5, 0.5, 1.5])

    def test_thermal_model(self, scenario_factory, scenario_builder, closed_document):
        closed_document["engine"] = "master"
        built = scenario_builder.build(
            scenario_factory(closed_document, environment={"kind": "thermal", "gamma_th": 0.2, "n_bar": 1.0})
        )
        assert built.model.environment is EnvironmentKind.THERMAL
        assert built.model.n_bar == 1.0

    def test_full_representation(self, scenario_factory, scenario_builder, closed_document):
        built = scenario_builder.build(
            scenario_factory(closed_document, system={"n_qubits": 3, "omega": 1.0, "representation": "full"})
        )
        assert built.model.representation is Representation.FULL
        assert built.model.dimension == 8

    def test_coherent_initial_state(self, scenario_factory, scenario_builder, closed_document):
        system = {"spin": 1, "omega": 1.0, "initial_state": {"kind": "coherent", "theta": math.pi, "phi": -1.0}}
        built = scenario_builder.build(scenario_factory(closed_document, system=system))
        assert built.rho0.population(-1) == pytest.approx(1.0)

    def test_custom_bins(self, scenario_factory, scenario_builder, closed_document):
        built = scenario_builder.build(scenario_factory(closed_document, bins={"edges": [-1.0, 0.0, 1.0]}))
        assert_allclose(built.bin_edges, [-1.0, 0.0, 1.0])

    def test_bins_must_cover_spectrum(self, scenario_factory, scenario_builder, closed_document):
        with pytest.raises(ValueError):
            scenario_builder.build(scenario_factory(closed_document, bins={"edges": [0.0, 1.0]}))

    def test_multiplicativity_needs_three_times(self, scenario_factory, scenario_builder, closed_document):
        scenario = scenario_factory(
            closed_document,
            time_grid={"stop": 1.0, "points": 2},
            analysis={"multiplicativity": True},
        )
        with pytest.raises(ScenarioValidationException, match="at least 3"):
            scenario_builder.build(scenario)


class TestMeasurement:
    def test_bands_partition_warns_when_fine(self, scenario_factory, scenario_builder):
        built = scenario_builder.build(scenario_factory(partition={"preset": "bands", "band_width": math.pi / 4}))
        assert built.partition.names == ("north", "band_1", "band_2", "south")
        assert built.povm.completeness_residual() < 1e-8
        assert any("coarse-graining ratio" in warning for warning in built.warnings)

    def test_povm_is_cached(self, scenario_factory, scenario_builder, povm_cache):
        scenario = scenario_factory(partition={"preset": "hemispheres"})
        first = scenario_builder.build(scenario)
        second = scenario_builder.build(scenario)
        assert second.povm is first.povm
        assert len(povm_cache) == 1

    def test_custom_grid_too_coarse(self, scenario_factory, scenario_builder):
        scenario = scenario_factory(
            system={"n_qubits": 20, "omega": 1.0},
            partition={"preset": "hemispheres", "grid": {"n_theta": 8, "n_phi": 8}},
        )
        with pytest.raises(GridResolutionError):
            scenario_builder.build(scenario)

    def test_continuity_partition_needs_poles(self, scenario_factory, scenario_builder):
        scenario = scenario_factory(
            partition={"preset": "whole"}, analysis={"continuity": {"source": "partition"}}
        )
        with pytest.raises(ScenarioValidationException, match="north and south"):
            scenario_builder.build(scenario)

    def test_rectangle_slots(self, scenario_factory, scenario_builder):
        slots = {
            "north": [{"theta_lo": 0.0, "theta_hi": 1.0}],
            "rest": [{"theta_lo": 1.0, "theta_hi": math.pi}],
        }
        built = scenario_builder.build(scenario_factory(partition={"slots": slots}))
        assert built.partition.names == ("north", "rest")
        assert built.grid.signature == scenario_builder.build(scenario_factory(partition={"slots": slots})).grid.signature
