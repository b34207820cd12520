import math
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

from scipy import constants

from domain.exceptions.custom_exceptions import DomainError
from shared.constants.config import Config
from shared.constants.texts import Texts

QUANTIZATION_MODES = ("calibrated", "physics")


def _require_positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0):
        raise DomainError(Texts.format(Texts.ERROR_BEAM_PARAMETER, f"{name}={value}"))


@dataclass(frozen=True)
class BeamModel:
    """
    Feixe gaussiano ao longo do eixo da armadilha.
    """
    wavelength_m: float = Config.WAVELENGTH_M
    waist_m: float = Config.WAIST_M
    omega0_rad_s: float = Config.OMEGA0_RAD_S
    waist_position_m: float = Config.WAIST_POSITION_M

    def __post_init__(self):
        _require_positive("wavelength_m", self.wavelength_m)
        _require_positive("waist_m", self.waist_m)
        _require_positive("omega0_rad_s", self.omega0_rad_s)
        if not math.isfinite(self.waist_position_m):
            raise DomainError(Texts.format(Texts.ERROR_BEAM_PARAMETER, f"waist_position_m={self.waist_position_m}"))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "wavelength_m": self.wavelength_m,
            "waist_m": self.waist_m,
            "omega0_rad_s": self.omega0_rad_s,
            "waist_position_m": self.waist_position_m,
        }


@dataclass(frozen=True)
class TrapAWGModel:
    """
    Eletrodos e AWG que deslocam o íon: faixa +-vmax_v com dac_bits bits.

    Modo "calibrated": deslocamento por LSB = lambda / 2^calibrated_phase_bits.
    Modo "physics": deslocamento por volt q*E_v/(m*omega_z^2), salvo se
    displacement_per_volt_m for informado.
    """
    vmax_v: float = Config.VMAX_V
    dac_bits: int = Config.DAC_BITS
    field_per_volt: float = Config.FIELD_PER_VOLT
    ion_mass_u: float = Config.ION_MASS_U
    omega_z_rad_s: float = Config.OMEGA_Z_RAD_S
    quantization_mode: str = Config.QUANTIZATION_MODE
    displacement_per_volt_m: Optional[float] = None
    calibrated_phase_bits: int = Config.CALIBRATED_PHASE_BITS
    wavelength_m: float = Config.WAVELENGTH_M

    def __post_init__(self):
        for name in ("vmax_v", "field_per_volt", "ion_mass_u", "omega_z_rad_s", "wavelength_m"):
            _require_positive(name, getattr(self, name))
        if int(self.dac_bits) != self.dac_bits or self.dac_bits < 1:
            raise DomainError(Texts.format(Texts.ERROR_BEAM_PARAMETER, f"dac_bits={self.dac_bits}"))
        if self.quantization_mode not in QUANTIZATION_MODES:
            raise DomainError(Texts.format(Texts.ERROR_QUANTIZATION_MODE, self.quantization_mode))
        if self.displacement_per_volt_m is not None:
            _require_positive("displacement_per_volt_m", self.displacement_per_volt_m)

    @property
    def lsb_voltage(self) -> float:
        return 2 * self.vmax_v / 2 ** self.dac_bits

    @property
    def ion_mass_kg(self) -> float:
        return self.ion_mass_u * constants.atomic_mass

    @property
    def displacement_per_volt(self) -> float:
        if self.displacement_per_volt_m is not None:
            return self.displacement_per_volt_m
        return constants.elementary_charge * self.field_per_volt / (self.ion_mass_kg * self.omega_z_rad_s ** 2)

    @property
    def mid_scale_code(self) -> int:
        return 2 ** (self.dac_bits - 1)

    def displacement_per_lsb(self, mode: Optional[str] = None) -> float:
        mode = mode or self.quantization_mode
        if mode == "calibrated":
            return self.wavelength_m / 2 ** self.calibrated_phase_bits
        if mode == "physics":
            return self.lsb_voltage * self.displacement_per_volt
        raise DomainError(Texts.format(Texts.ERROR_QUANTIZATION_MODE, mode))

    def full_scale_displacement(self, mode: Optional[str] = None) -> float:
        return self.mid_scale_code * self.displacement_per_lsb(mode)

    def with_mode(self, mode: str) -> "TrapAWGModel":
        return replace(self, quantization_mode=mode)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vmax_v": self.vmax_v,
            "dac_bits": self.dac_bits,
            "field_per_volt": self.field_per_volt,
            "ion_mass_u": self.ion_mass_u,
            "omega_z_rad_s": self.omega_z_rad_s,
            "quantization_mode": self.quantization_mode,
            "displacement_per_volt_m": self.displacement_per_volt_m,
            "calibrated_phase_bits": self.calibrated_phase_bits,
        }


@dataclass(frozen=True)
class Zone:
    """
    Zona de interação: posição axial, deslocamento atual e, opcionalmente,
    a frequência de Rabi medida diretamente.
    """
    label: str
    position_m: float = 0.0
    displacement_m: float = 0.0
    rabi_override_rad_s: Optional[float] = None

    def with_displacement(self, displacement_m: float) -> "Zone":
        return replace(self, displacement_m=displacement_m)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "position_m": self.position_m,
            "displacement_m": self.displacement_m,
            "rabi_override_rad_s": self.rabi_override_rad_s,
        }
