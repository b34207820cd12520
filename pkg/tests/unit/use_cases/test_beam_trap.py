import math

import numpy as np
import pytest

from domain.entities.beam import BeamModel, TrapAWGModel, Zone
from domain.exceptions.custom_exceptions import (
    CalibrationError,
    PreconditionError,
    RangeError,
    UncoverableSpreadError,
)
from domain.use_cases.beam_trap import (
    base_rotation,
    calibrate_pulse_duration,
    check_zone_budget,
    displacement_to_phase,
    effective_phase_bits,
    phase_to_displacement,
    quantization_report,
    quantize_displacement,
    quantize_phase,
    rabi_at,
    rayleigh_range,
    usable_span,
    zone_rabi,
)
PI = math.pi
OMEGA_Z1 = 2 * PI * 166e3
OMEGA_Z2 = 2 * PI * 159e3


def test_rayleigh_range(beam):
    """Testa z_R = pi w^2 / lambda para 25 um e 674 nm."""
    assert rayleigh_range(beam) == pytest.approx(PI * (25e-6) ** 2 / 674e-9)


def test_rabi_profile(beam):
    z_r = rayleigh_range(beam)

    assert rabi_at(beam, 0.0) == pytest.approx(beam.omega0_rad_s)
    assert rabi_at(beam, z_r) == pytest.approx(beam.omega0_rad_s / math.sqrt(2))
    np.testing.assert_allclose(rabi_at(beam, np.array([-z_r, z_r])), beam.omega0_rad_s / math.sqrt(2))


def test_zone_rabi_override(beam, zone_z1):
    assert zone_rabi(beam, zone_z1) == OMEGA_Z1
    assert zone_rabi(beam, Zone("Z0")) == pytest.approx(beam.omega0_rad_s)


def test_base_rotation_measured_zones(beam, zone_z1, zone_z2):
    """Testa 166 kHz e 159 kHz com pulsos de 1.5 us: 0.498pi e 0.477pi."""
    assert base_rotation(beam, zone_z1, 1.5e-6) == pytest.approx(1.5645, abs=1e-4)
    assert base_rotation(beam, zone_z2, 1.5e-6) == pytest.approx(1.4986, abs=1e-4)


def test_base_rotation_rejects_negative_duration(beam, zone_z1):
    with pytest.raises(PreconditionError):
        base_rotation(beam, zone_z1, -1e-6)


def test_calibrate_pulse_duration(beam, two_zones):
    """Testa t_p = pi/(2 Omega_min) e a rotação da zona mais intensa na janela."""
    t_p = calibrate_pulse_duration(beam, two_zones)

    assert t_p == pytest.approx(PI / (2 * OMEGA_Z2))
    assert t_p == pytest.approx(1.5723e-6, rel=1e-4)
    assert base_rotation(beam, two_zones[0], t_p) == pytest.approx(0.522 * PI, abs=1e-3)


def test_calibrate_uncoverable_spread(beam):
    zones = [Zone("A", rabi_override_rad_s=1.0e6), Zone("B", rabi_override_rad_s=2.0e6)]

    with pytest.raises(UncoverableSpreadError):
        calibrate_pulse_duration(beam, zones)


def test_calibrate_rejects_empty(beam):
    with pytest.raises(PreconditionError):
        calibrate_pulse_duration(beam, [])


def test_uncoverable_is_calibration_error():
    assert issubclass(UncoverableSpreadError, CalibrationError)


def test_usable_span(beam):
    """Testa a extensão útil de 2.117 z_R para a janela [pi/2, 0.728pi]."""
    assert usable_span(beam) / rayleigh_range(beam) == pytest.approx(2.11654, abs=1e-4)


def test_phase_displacement_conversion():
    assert displacement_to_phase(674e-9, 674e-9 / 4) == pytest.approx(PI / 2)
    assert phase_to_displacement(674e-9, PI) == pytest.approx(337e-9)


def test_zone_budget():
    with pytest.raises(RangeError):
        check_zone_budget(Zone("Z1", displacement_m=2 * 674e-9), 674e-9)
    check_zone_budget(Zone("Z1", displacement_m=600e-9), 674e-9)


def test_quantize_displacement_codes(trap):
    """Testa os códigos DAC a partir do meio da escala."""
    step = trap.displacement_per_lsb()

    assert quantize_displacement(trap, 0.0) == (0.0, 2 ** 19)
    actual, code = quantize_displacement(trap, 3.4 * step)
    assert actual == pytest.approx(3 * step)
    assert code == 2 ** 19 + 3


def test_quantize_displacement_out_of_range(trap):
    with pytest.raises(RangeError):
        quantize_displacement(trap, 1e-3)


def test_quantize_phase_error_bound(trap):
    """Testa o erro de fase de no máximo meio passo (pi/4096 no modo calibrado)."""
    for phase in np.linspace(-PI, PI, 37):
        actual, _ = quantize_phase(trap, 674e-9, phase)
        assert abs(actual - phase) <= PI / 4096 + 1e-12


def test_effective_bits(trap):
    assert effective_phase_bits(trap, 674e-9) == pytest.approx(12.0)
    assert effective_phase_bits(trap.with_mode("physics"), 674e-9) == pytest.approx(12.96, abs=0.01)


def test_quantization_report(trap):
    """Testa o relatório nos dois modos e a comparação com a escala lambda/2^12."""
    report = quantization_report(trap, 674e-9)

    assert report["selected_mode"] == "calibrated"
    assert set(report["modes"]) == {"calibrated", "physics"}
    physics = report["modes"]["physics"]
    assert physics["displacement_per_volt_m"] == pytest.approx(4.448e-6, rel=1e-3)
    assert physics["displacement_per_lsb_m"] == pytest.approx(84.8e-12, rel=2e-3)
    assert physics["ratio_to_calibrated_step"] == pytest.approx(0.515, abs=0.005)
    assert physics["consistent_with_calibrated_scale"] is False
    assert "inconsistente" in physics["note"]
    calibrated = report["modes"]["calibrated"]
    assert calibrated["displacement_per_volt_m"] is None
    assert calibrated["ratio_to_calibrated_step"] == pytest.approx(1.0)
    assert calibrated["consistent_with_calibrated_scale"] is True


def test_quantization_report_inconsistent_override():
    model = TrapAWGModel(displacement_per_volt_m=4.45e-9)
    physics = quantization_report(model, 674e-9)["modes"]["physics"]

    assert physics["effective_bits"] == pytest.approx(22.9, abs=0.05)
    assert physics["consistent_with_calibrated_scale"] is False


def test_beam_model_default_instance():
    assert BeamModel().omega0_rad_s == pytest.approx(2 * PI * 166e3)
