import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.domain.value_objects import SphericalAngle, SpinQuantumNumber, ToyModelParams


class TestSpinQuantumNumber:
    @pytest.mark.parametrize("j, two_j", [(0.5, 1), (1, 2), (2.5, 5), (10, 20)])
    def test_from_j(self, j, two_j):
        spin = SpinQuantumNumber.from_j(j)
        assert spin.two_j == two_j
        assert spin.j == j
        assert spin.dimension == two_j + 1
        assert spin.n_qubits == two_j

    @pytest.mark.parametrize("j", [0.3, 1.25, 2.1])
    def test_from_j_rejects_non_half_integers(self, j):
        with pytest.raises(ValueError):
            SpinQuantumNumber.from_j(j)

    @pytest.mark.parametrize("two_j", [0, -2, 21])
    def test_rejects_out_of_range(self, two_j):
        with pytest.raises(ValueError):
            SpinQuantumNumber(two_j)

    def test_rejects_non_integers(self):
        with pytest.raises(ValueError):
            SpinQuantumNumber(2.0)
        with pytest.raises(ValueError):
            SpinQuantumNumber(True)

    def test_basis_order_runs_from_south_to_north(self):
        spin = SpinQuantumNumber(3)
        assert_allclose(spin.m_values(), [-1.5, -0.5, 0.5, 1.5])
        assert spin.south_index == 0
        assert spin.north_index == 3
        assert spin.index_of(0.5) == 2

    def test_index_of_rejects_invalid_projection(self):
        spin = SpinQuantumNumber(2)
        with pytest.raises(ValueError):
            spin.index_of(0.5)
        with pytest.raises(ValueError):
            spin.index_of(2)

    def test_str_uses_fractions(self):
        assert str(SpinQuantumNumber(5)) == "j=5/2"
        assert str(SpinQuantumNumber(4)) == "j=2"


class TestSphericalAngle:
    def test_validation(self):
        with pytest.raises(ValueError):
            SphericalAngle(-0.1, 0.0)
        with pytest.raises(ValueError):
            SphericalAngle(1.0, 2 * math.pi)

    def test_wrapped_reduces_phi(self):
        angle = SphericalAngle.wrapped(1.0, -math.pi / 2)
        assert angle.phi == pytest.approx(3 * math.pi / 2)

    def test_angle_between_poles(self):
        assert SphericalAngle.north().angle_to(SphericalAngle.south()) == pytest.approx(math.pi)
        assert_allclose(SphericalAngle.north().unit_vector(), [0.0, 0.0, 1.0])

    def test_angle_on_equator(self):
        first = SphericalAngle(math.pi / 2, 0.0)
        second = SphericalAngle(math.pi / 2, math.pi / 3)
        assert first.angle_to(second) == pytest.approx(math.pi / 3)


class TestToyModelParams:
    def test_rates(self):
        params = ToyModelParams(omega=1.0, delta_t=0.2, n_steps=10)
        assert params.phase == pytest.approx(0.2)
        assert params.c == pytest.approx(math.cos(0.2) ** 2)
        assert params.small_step_rate == pytest.approx(2 * math.sin(0.2) ** 2 / 0.2)
        assert params.exact_rate == pytest.approx(-math.log(math.cos(0.4)) / 0.2)

    def test_small_step_rate_is_close_to_lattice_rate(self):
        params = ToyModelParams(omega=1.0, delta_t=0.2)
        assert abs(params.exact_rate - params.small_step_rate) / params.small_step_rate < 0.05

    def test_exact_rate_is_infinite_past_quarter_turn(self):
        assert ToyModelParams(omega=1.0, delta_t=1.0).exact_rate == math.inf

    def test_times_lie_on_the_lattice(self):
        times = ToyModelParams(omega=1.0, delta_t=0.5, n_steps=4).times()
        assert_allclose(times, np.arange(5) * 0.5)

    @pytest.mark.parametrize(
        "delta_t, fragment",
        [(0.01, "Zeno regime"), (2.0, "dynamical timescale")],
    )
    def test_validity_warnings(self, delta_t, fragment):
        warnings = ToyModelParams(omega=1.0, delta_t=delta_t).validity_warnings()
        assert len(warnings) == 1
        assert fragment in warnings[0]

    def test_no_warnings_inside_window(self):
        assert ToyModelParams(omega=1.0, delta_t=0.2).validity_warnings() == []

    @pytest.mark.parametrize(
        "kwargs", [{"omega": 0.0, "delta_t": 0.1}, {"omega": 1.0, "delta_t": -0.1}, {"omega": 1.0, "delta_t": 0.1, "n_steps": -1}]
    )
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(ValueError):
            ToyModelParams(**kwargs)
