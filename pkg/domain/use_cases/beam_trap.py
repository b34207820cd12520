"""
Modelo físico: intensidade do feixe gaussiano ao longo do eixo, rotação
base por zona, conversão deslocamento/fase e quantização pelo DAC.
"""
import math
from typing import Any, Dict, Sequence, Tuple

import numpy as np

from domain.entities.beam import QUANTIZATION_MODES, BeamModel, TrapAWGModel, Zone
from domain.exceptions.custom_exceptions import (
    CalibrationError,
    PreconditionError,
    RangeError,
    UncoverableSpreadError,
)
from shared.constants.config import Config
from shared.constants.texts import Texts
from shared.utils.logger import Logger

logger = Logger(__name__)


def rayleigh_range(beam: BeamModel) -> float:
    return math.pi * beam.waist_m ** 2 / beam.wavelength_m


def rabi_at(beam: BeamModel, z):
    """
    Amplitude no eixo: Omega(z) = Omega0 / sqrt(1 + ((z - z_w)/z_R)^2).
    Aceita escalar ou array.
    """
    offset = (np.asarray(z, dtype=float) - beam.waist_position_m) / rayleigh_range(beam)
    value = beam.omega0_rad_s / np.sqrt(1.0 + offset ** 2)
    return float(value) if np.ndim(value) == 0 else value


def zone_rabi(beam: BeamModel, zone: Zone) -> float:
    if zone.rabi_override_rad_s is not None:
        return float(zone.rabi_override_rad_s)
    return rabi_at(beam, zone.position_m)


def base_rotation(beam: BeamModel, zone: Zone, t_p: float) -> float:
    """theta_z = Omega_z * t_p para pulso de amplitude constante."""
    if not math.isfinite(t_p) or t_p < 0:
        raise PreconditionError(Texts.format(Texts.ERROR_PULSE_DURATION, t_p))
    return zone_rabi(beam, zone) * t_p


def calibrate_pulse_duration(
    beam: BeamModel,
    zones: Sequence[Zone],
    theta_floor: float = Config.FULL_RANGE_MIN,
    theta_ceiling: float = Config.FULL_RANGE_MAX,
) -> float:
    """
    Escolhe t_p de modo que a menor rotação base entre as zonas seja
    theta_floor; as demais ficam acima.

    Raises:
        CalibrationError: zona com Rabi não positivo ou fora da janela
        UncoverableSpreadError: razão de Rabi maior que theta_ceiling/theta_floor
    """
    if not zones:
        raise PreconditionError(Texts.format(Texts.ERROR_UNKNOWN_ZONE, "[]"))
    rabis = [zone_rabi(beam, zone) for zone in zones]
    for zone, rabi in zip(zones, rabis):
        if not rabi > 0:
            raise CalibrationError(Texts.format(Texts.ERROR_ZONE_RABI, zone.label))
    window = theta_ceiling / theta_floor
    ratio = max(rabis) / min(rabis)
    if ratio > window + Config.TOL_CALIBRATION:
        raise UncoverableSpreadError(ratio, window)

    t_p = theta_floor / min(rabis)
    for zone in zones:
        theta = base_rotation(beam, zone, t_p)
        if not theta_floor - Config.TOL_CALIBRATION <= theta <= theta_ceiling + Config.TOL_CALIBRATION:
            raise CalibrationError(
                Texts.format(Texts.ERROR_OUTSIDE_WINDOW, zone.label, theta, theta_floor, theta_ceiling)
            )
    logger.info(Texts.format(Texts.LOG_CALIBRATION, t_p, len(zones)))
    return t_p


def usable_span(
    beam: BeamModel,
    theta_min: float = Config.FULL_RANGE_MIN,
    theta_max: float = Config.FULL_RANGE_MAX,
) -> float:
    """
    Extensão axial, centrada na cintura, onde a rotação base fica dentro
    da janela quando a cintura recebe theta_max: 2 z_R sqrt((theta_max/theta_min)^2 - 1).
    """
    if not 0 < theta_min <= theta_max:
        raise PreconditionError(Texts.format(Texts.ERROR_THETA0_RANGE, (theta_min, theta_max)))
    return 2 * rayleigh_range(beam) * math.sqrt((theta_max / theta_min) ** 2 - 1)


def displacement_to_phase(wavelength_m: float, displacement_m):
    """phi = 2 pi dz / lambda."""
    value = 2 * math.pi * np.asarray(displacement_m, dtype=float) / wavelength_m
    return float(value) if np.ndim(value) == 0 else value


def phase_to_displacement(wavelength_m: float, phase):
    value = np.asarray(phase, dtype=float) * wavelength_m / (2 * math.pi)
    return float(value) if np.ndim(value) == 0 else value


def check_zone_budget(zone: Zone, wavelength_m: float) -> None:
    """Um comprimento de onda de deslocamento por zona."""
    if abs(zone.displacement_m) > wavelength_m * (1 + 1e-12):
        raise RangeError(Texts.format(Texts.ERROR_ZONE_BUDGET, zone.displacement_m, zone.label))


def quantize_displacement(model: TrapAWGModel, displacement_m: float) -> Tuple[float, int]:
    """
    Arredonda para o código DAC mais próximo (códigos deslocados a partir
    do meio da escala).

    Returns:
        (deslocamento obtido, código DAC)

    Raises:
        RangeError: fora da escala cheia do modelo
    """
    step = model.displacement_per_lsb()
    if not step > 0:
        raise PreconditionError(Texts.format(Texts.ERROR_BEAM_PARAMETER, f"displacement_per_lsb={step}"))
    offset = int(round(displacement_m / step))
    code = model.mid_scale_code + offset
    if not math.isfinite(displacement_m) or not 0 <= code <= 2 ** model.dac_bits - 1:
        raise RangeError(
            Texts.format(Texts.ERROR_DISPLACEMENT_RANGE, displacement_m, model.full_scale_displacement())
        )
    return offset * step, code


def quantize_phase(model: TrapAWGModel, wavelength_m: float, phase: float) -> Tuple[float, int]:
    """Fase realizada por um deslocamento quantizado; devolve (fase obtida, código)."""
    actual, code = quantize_displacement(model, phase_to_displacement(wavelength_m, phase))
    return displacement_to_phase(wavelength_m, actual), code


def effective_phase_bits(model: TrapAWGModel, wavelength_m: float) -> float:
    """log2(lambda / deslocamento por LSB)."""
    step = model.displacement_per_lsb()
    if not step > 0:
        raise PreconditionError(Texts.format(Texts.ERROR_BEAM_PARAMETER, f"displacement_per_lsb={step}"))
    return math.log2(wavelength_m / step)


def _mode_report(model: TrapAWGModel, wavelength_m: float) -> Dict[str, Any]:
    step = model.displacement_per_lsb()
    bits = effective_phase_bits(model, wavelength_m)
    calibrated_step = wavelength_m / 2 ** Config.CALIBRATED_PHASE_BITS
    ratio = step / calibrated_step
    consistent = abs(math.log2(ratio)) <= Config.CALIBRATED_SCALE_TOLERANCE_BITS
    if consistent:
        note = Texts.format(Texts.REPORT_CONSISTENT, Config.CALIBRATED_PHASE_BITS)
    else:
        note = Texts.format(Texts.REPORT_INCONSISTENT, Config.CALIBRATED_PHASE_BITS, ratio)
        logger.warning(note)
    return {
        "lsb_voltage_v": model.lsb_voltage,
        "displacement_per_volt_m": model.displacement_per_volt if model.quantization_mode == "physics" else None,
        "displacement_per_lsb_m": step,
        "phase_step_rad": 2 * math.pi * step / wavelength_m,
        "effective_bits": bits,
        "full_scale_displacement_m": model.full_scale_displacement(),
        "ratio_to_calibrated_step": ratio,
        "consistent_with_calibrated_scale": consistent,
        "note": note,
    }


def quantization_report(model: TrapAWGModel, wavelength_m: float) -> Dict[str, Any]:
    """
    Relatório de quantização para os dois modos; `selected_mode` indica o
    modo configurado no modelo.
    """
    return {
        "selected_mode": model.quantization_mode,
        "wavelength_m": wavelength_m,
        "dac_bits": model.dac_bits,
        "modes": {mode: _mode_report(model.with_mode(mode), wavelength_m) for mode in QUANTIZATION_MODES},
    }
