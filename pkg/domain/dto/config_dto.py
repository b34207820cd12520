"""
Esquemas dos documentos de configuração JSON (modelo físico, experimentos
e corpos das requisições HTTP). Chaves desconhecidas são rejeitadas.
"""
from typing import Annotated, Any, Dict, List, Literal, Optional, Type, TypeVar, Union

import numpy as np
from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, ValidationError, model_validator

from domain.entities.beam import BeamModel, TrapAWGModel, Zone
from domain.entities.experiment import SPAMModel
from domain.entities.gate import GateVariant
from domain.exceptions.custom_exceptions import ConfigError, DomainError
from shared.constants.config import Config
from shared.constants.texts import Texts
from shared.utils.angles import parse_angle

Angle = Annotated[float, BeforeValidator(parse_angle)]

T = TypeVar("T", bound=BaseModel)


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ModelConfig(StrictModel):
    """Parâmetros de feixe, armadilha e DAC."""

    wavelength_m: float = Field(default=Config.WAVELENGTH_M, gt=0, description="Comprimento de onda")
    waist_m: float = Field(default=Config.WAIST_M, gt=0, description="Cintura do feixe")
    omega0_rad_s: float = Field(default=Config.OMEGA0_RAD_S, gt=0, description="Rabi na cintura")
    waist_position_m: float = Field(default=Config.WAIST_POSITION_M, description="Posição da cintura")
    vmax_v: float = Field(default=Config.VMAX_V, gt=0, description="Faixa de saída +-V")
    dac_bits: int = Field(default=Config.DAC_BITS, ge=1, le=32, description="Bits do DAC")
    field_per_volt: float = Field(default=Config.FIELD_PER_VOLT, gt=0, description="Campo no íon por volt")
    ion_mass_u: float = Field(default=Config.ION_MASS_U, gt=0, description="Massa do íon em u")
    omega_z_rad_s: float = Field(default=Config.OMEGA_Z_RAD_S, gt=0, description="Frequência secular axial")
    quantization_mode: Literal["calibrated", "physics"] = Config.QUANTIZATION_MODE
    displacement_per_volt_m: Optional[float] = Field(default=None, gt=0, description="Sobrescreve q E/(m w^2)")
    calibrated_phase_bits: int = Field(default=Config.CALIBRATED_PHASE_BITS, ge=1, le=32)

    def to_beam(self) -> BeamModel:
        return BeamModel(self.wavelength_m, self.waist_m, self.omega0_rad_s, self.waist_position_m)

    def to_trap(self) -> TrapAWGModel:
        return TrapAWGModel(
            vmax_v=self.vmax_v,
            dac_bits=self.dac_bits,
            field_per_volt=self.field_per_volt,
            ion_mass_u=self.ion_mass_u,
            omega_z_rad_s=self.omega_z_rad_s,
            quantization_mode=self.quantization_mode,
            displacement_per_volt_m=self.displacement_per_volt_m,
            calibrated_phase_bits=self.calibrated_phase_bits,
            wavelength_m=self.wavelength_m,
        )


class SPAMConfig(StrictModel):
    prep_fidelity: float = Field(default=Config.PREP_FIDELITY, ge=0.5, le=1.0)
    readout_fidelity: float = Field(default=Config.READOUT_FIDELITY, ge=0.5, le=1.0)

    def to_entity(self) -> SPAMModel:
        return SPAMModel(self.prep_fidelity, self.readout_fidelity)


class ZoneConfig(StrictModel):
    label: str
    position_m: float = 0.0
    rabi_override_rad_s: Optional[float] = Field(default=None, gt=0)

    def to_entity(self) -> Zone:
        return Zone(self.label, self.position_m, 0.0, self.rabi_override_rad_s)


class AngleRange(StrictModel):
    """Grade uniforme de `points` ângulos entre start e stop, inclusive."""

    start: Angle
    stop: Angle
    points: int = Field(ge=1)

    def values(self) -> List[float]:
        return np.linspace(self.start, self.stop, self.points).tolist()


AngleGrid = Union[AngleRange, List[Angle]]


def grid_values(grid: AngleGrid) -> List[float]:
    return grid.values() if isinstance(grid, AngleRange) else [parse_angle(v) for v in grid]


class TwoZoneScanConfig(StrictModel):
    scanned: str
    constant: Angle


class ExperimentConfig(StrictModel):
    """
    Experimento simulado. Campos exigidos por tipo:
    ramsey -> delta_phi; composite -> theta0, thetaT; two_zone -> thetaT, scans.
    """

    kind: Literal["ramsey", "composite", "two_zone"]
    zones: List[ZoneConfig] = Field(min_length=1)
    shots: int = Field(default=Config.DEFAULT_SHOTS, ge=0)
    seed: int = Field(default=Config.DEFAULT_SEED, ge=0)
    spam: Optional[SPAMConfig] = Field(default_factory=SPAMConfig)
    pulse_duration_s: Optional[float] = Field(default=None, gt=0)
    delta_phi: Optional[AngleGrid] = None
    theta0: Optional[List[Angle]] = None
    thetaT: Optional[AngleGrid] = None
    variant: Optional[str] = None
    scans: Optional[List[TwoZoneScanConfig]] = None
    quantize: bool = True
    fit: bool = True

    @model_validator(mode="after")
    def check_kind_fields(self):
        required = {
            "ramsey": ("delta_phi",),
            "composite": ("theta0", "thetaT"),
            "two_zone": ("thetaT", "scans"),
        }[self.kind]
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ValueError(Texts.format(Texts.ERROR_CONFIG_KEYS, missing))
        if self.kind == "two_zone" and len(self.zones) != 2:
            raise ValueError(Texts.format(Texts.ERROR_UNKNOWN_ZONE, [z.label for z in self.zones]))
        if self.variant is not None:
            try:
                GateVariant.parse(self.variant)
            except DomainError as error:
                raise ValueError(error.message) from None
        return self

    def gate_variant(self) -> Optional[GateVariant]:
        return GateVariant.parse(self.variant) if self.variant else None


class SimulateConfig(StrictModel):
    model: ModelConfig = Field(default_factory=ModelConfig)
    experiment: ExperimentConfig


class SynthesisRequestDTO(StrictModel):
    theta0: Angle
    thetaT: Angle
    variant: Optional[str] = None


def _offending_keys(error: ValidationError) -> List[str]:
    keys = []
    for item in error.errors():
        key = ".".join(str(part) for part in item.get("loc", ())) or "<root>"
        if key not in keys:
            keys.append(key)
    return keys


def parse_config(schema: Type[T], data: Any) -> T:
    """
    Valida um documento contra o esquema.

    Raises:
        ConfigError: com a lista de chaves ofensoras
    """
    if not isinstance(data, dict):
        raise ConfigError(Texts.format(Texts.ERROR_CONFIG, type(data).__name__))
    try:
        return schema.model_validate(data)
    except ValidationError as error:
        keys = _offending_keys(error)
        raise ConfigError(Texts.format(Texts.ERROR_CONFIG_KEYS, keys), keys) from None


def config_as_dict(config: BaseModel) -> Dict[str, Any]:
    return config.model_dump(mode="json")


class RobustnessRequestDTO(SynthesisRequestDTO):
    """Pedido de perfil de robustez: desvios relativos em theta0, em radianos."""

    offsets: List[float] = Field(default_factory=lambda: [-0.1, -0.05, 0.0, 0.05, 0.1], min_length=3)
