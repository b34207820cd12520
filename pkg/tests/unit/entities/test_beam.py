import pytest

from domain.entities.beam import BeamModel, TrapAWGModel, Zone
from domain.exceptions.custom_exceptions import DomainError


def test_beam_defaults(beam):
    """Testa os parâmetros padrão do feixe."""
    assert beam.wavelength_m == pytest.approx(674e-9)
    assert beam.waist_m == pytest.approx(25e-6)


@pytest.mark.parametrize("field", ["wavelength_m", "waist_m", "omega0_rad_s"])
def test_beam_rejects_non_positive(field):
    with pytest.raises(DomainError):
        BeamModel(**{field: 0.0})


def test_trap_lsb_voltage(trap):
    """Testa o LSB de 20 bits sobre +-10 V."""
    assert trap.lsb_voltage == pytest.approx(19.07e-6, rel=1e-3)
    assert trap.mid_scale_code == 2 ** 19


def test_trap_physics_displacement_per_volt(trap):
    """Testa q E/(m w^2) para o 88Sr+ com os valores padrão."""
    assert trap.displacement_per_volt == pytest.approx(4.448e-6, rel=1e-3)
    assert trap.displacement_per_lsb("physics") == pytest.approx(84.8e-12, rel=2e-3)


def test_trap_calibrated_step(trap):
    assert trap.displacement_per_lsb("calibrated") == pytest.approx(674e-9 / 4096)


def test_trap_override_displacement_per_volt():
    model = TrapAWGModel(displacement_per_volt_m=1e-9, quantization_mode="physics")

    assert model.displacement_per_volt == 1e-9


def test_trap_rejects_unknown_mode():
    with pytest.raises(DomainError):
        TrapAWGModel(quantization_mode="exact")


def test_trap_with_mode(trap):
    assert trap.with_mode("physics").quantization_mode == "physics"
    assert trap.quantization_mode == "calibrated"


def test_zone_with_displacement():
    zone = Zone("Z1", position_m=1e-4)
    moved = zone.with_displacement(1e-7)

    assert moved.displacement_m == 1e-7
    assert zone.displacement_m == 0.0
    assert moved.to_dict()["label"] == "Z1"
