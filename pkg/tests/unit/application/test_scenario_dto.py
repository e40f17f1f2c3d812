import pytest
from pydantic import ValidationError

from src.application.dto.run_dto import RunRequestDTO
from src.application.dto.scenario_dto import EngineKind, InitialStateSpec, Scenario


class TestScenario:
    def test_toy_document(self, scenario_factory):
        scenario = scenario_factory()
        assert scenario.engine is EngineKind.TOY
        assert scenario.system.qubits == 4
        assert scenario.snapshots == [0.0, 2.0]
        assert scenario.outputs.histogram == "histogram.csv"

    def test_spin_gives_qubits(self, scenario_factory, closed_document):
        scenario = scenario_factory(closed_document)
        assert scenario.system.qubits == 2

    def test_unknown_keys_are_rejected(self, toy_document):
        toy_document["colour"] = "blue"
        with pytest.raises(ValidationError):
            Scenario.model_validate(toy_document)

    def test_toy_engine_forbids_time_grid(self, scenario_factory):
        with pytest.raises(ValidationError, match="time_grid"):
            scenario_factory(time_grid={"stop": 1.0, "points": 11})

    def test_toy_engine_needs_toy_section(self, scenario_factory):
        with pytest.raises(ValidationError, match="toy section"):
            scenario_factory(toy=None)

    def test_closed_engine_needs_time_grid(self, scenario_factory, closed_document):
        with pytest.raises(ValidationError):
            scenario_factory(closed_document, time_grid=None)

    def test_closed_engine_has_no_environment(self, scenario_factory, closed_document):
        with pytest.raises(ValidationError, match="environment kind none"):
            scenario_factory(closed_document, environment={"kind": "dephasing", "gamma_dp": 0.1})

    def test_spin_and_qubits_are_exclusive(self, scenario_factory):
        with pytest.raises(ValidationError, match="exactly one"):
            scenario_factory(system={"spin": 1, "n_qubits": 2, "omega": 1.0})

    def test_spin_must_be_half_integer(self, scenario_factory, closed_document):
        with pytest.raises(ValidationError):
            scenario_factory(closed_document, system={"spin": 0.3, "omega": 1.0})

    def test_full_representation_size_limit(self, scenario_factory, closed_document):
        with pytest.raises(ValidationError, match="limit"):
            scenario_factory(closed_document, system={"n_qubits": 14, "omega": 1.0, "representation": "full"})

    def test_environment_parameters(self, scenario_factory, closed_document):
        base = {**closed_document, "engine": "master"}
        with pytest.raises(ValidationError, match="n_bar"):
            scenario_factory(base, environment={"kind": "thermal", "gamma_th": 0.1})
        with pytest.raises(ValidationError, match="do not apply"):
            scenario_factory(base, environment={"kind": "dephasing", "gamma_dp": 0.1, "n_bar": 1.0})

    def test_qsd_needs_trajectories(self, scenario_factory, closed_document):
        base = {**closed_document, "engine": "qsd", "environment": {"kind": "thermal", "gamma_th": 0.5, "n_bar": 1.0}}
        with pytest.raises(ValidationError, match="trajectories"):
            scenario_factory(base)
        scenario = scenario_factory(base, trajectories={"count": 10, "seed": 7})
        assert scenario.trajectories.seed == 7

    def test_mr_check_is_not_run_on_trajectories(self, scenario_factory, closed_document):
        base = {
            **closed_document,
            "engine": "qsd",
            "environment": {"kind": "thermal", "gamma_th": 0.5, "n_bar": 1.0},
            "trajectories": {"count": 10, "seed": 7},
            "partition": {"preset": "hemispheres"},
        }
        with pytest.raises(ValidationError, match="mr_check"):
            scenario_factory(base, analysis={"mr_check": {"pairs": [[0.1, 0.2]]}})

    def test_mr_check_needs_partition(self, scenario_factory):
        with pytest.raises(ValidationError, match="partition"):
            scenario_factory(analysis={"mr_check": {}})

    def test_closed_mr_check_needs_explicit_pairs(self, scenario_factory, closed_document):
        with pytest.raises(ValidationError, match="explicit pairs"):
            scenario_factory(closed_document, partition={"preset": "hemispheres"}, analysis={"mr_check": {}})

    def test_mr_pairs_must_be_ordered(self, scenario_factory):
        with pytest.raises(ValidationError, match="t_i <= t_j"):
            scenario_factory(
                partition={"preset": "hemispheres"}, analysis={"mr_check": {"pairs": [[0.4, 0.2]]}}
            )

    def test_partition_source(self, scenario_factory):
        with pytest.raises(ValidationError, match="exactly one of preset or slots"):
            scenario_factory(partition={})
        with pytest.raises(ValidationError, match="band_width"):
            scenario_factory(partition={"preset": "bands"})

    def test_outputs_are_plain_distinct_names(self, scenario_factory):
        with pytest.raises(ValidationError, match="plain file name"):
            scenario_factory(outputs={"histogram": "../escape.csv"})
        with pytest.raises(ValidationError, match="distinct"):
            scenario_factory(outputs={"histogram": "same.csv", "survival": "same.csv"})

    def test_toy_engine_starts_at_a_pole(self, scenario_factory):
        with pytest.raises(ValidationError, match="north or south"):
            scenario_factory(system={"n_qubits": 4, "omega": 1.0, "initial_state": {"kind": "coherent", "theta": 1.0, "phi": 0.0}})

    def test_scenario_is_immutable(self, scenario_factory):
        scenario = scenario_factory()
        with pytest.raises(ValidationError):
            scenario.name = "other"


class TestInitialStateSpec:
    def test_shorthand(self):
        assert InitialStateSpec.model_validate("south").kind == "south"

    def test_coherent_needs_angles(self):
        with pytest.raises(ValidationError, match="theta and phi"):
            InitialStateSpec(kind="coherent", theta=1.0)

    def test_angles_only_for_coherent(self):
        with pytest.raises(ValidationError):
            InitialStateSpec(kind="north", theta=1.0)


class TestRunRequest:
    def test_defaults(self):
        request = RunRequestDTO(scenario="toy_decay")
        assert request.threads == 1
        assert request.seed is None

    @pytest.mark.parametrize("kwargs", [{"threads": 0}, {"seed": -1}, {"seed": 2**64}])
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(ValueError):
            RunRequestDTO(scenario="toy_decay", **kwargs)
