import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from domain.exceptions.custom_exceptions import DomainError
from shared.constants.config import Config
from shared.constants.texts import Texts

PULSE = "pulse"
MOVE = "move"


@dataclass(frozen=True)
class SPAMModel:
    """
    Erros de preparação e leitura como mapa afim sobre a população ideal:
    p_obs = f_prep * f_read * p + (1 - f_read) / 2.

    Uma falha de preparação deixa o íon fora da transição (lido como |0>);
    uma falha de leitura produz um resultado sem viés.
    """
    prep_fidelity: float = Config.PREP_FIDELITY
    readout_fidelity: float = Config.READOUT_FIDELITY

    def __post_init__(self):
        for value in (self.prep_fidelity, self.readout_fidelity):
            if not (math.isfinite(value) and 0.5 <= value <= 1.0):
                raise DomainError(Texts.format(Texts.ERROR_SPAM_RANGE, value))

    @classmethod
    def ideal(cls) -> "SPAMModel":
        return cls(1.0, 1.0)

    @property
    def contrast(self) -> float:
        return self.prep_fidelity * self.readout_fidelity

    @property
    def offset(self) -> float:
        return (1.0 - self.readout_fidelity) / 2

    def apply(self, population):
        value = self.contrast * np.asarray(population, dtype=float) + self.offset
        return float(value) if np.ndim(value) == 0 else value

    def to_dict(self) -> Dict[str, float]:
        return {"prep_fidelity": self.prep_fidelity, "readout_fidelity": self.readout_fidelity}


@dataclass(frozen=True)
class TimingSequence:
    """
    Agenda de pulsos e movimentos. Os movimentos são atualizações
    instantâneas de fase na simulação; a agenda é apenas metadado.
    """
    pulse_duration_s: float
    move_duration_s: float
    steps: Tuple[Tuple[str, float], ...]

    def __post_init__(self):
        kinds = [kind for kind, _ in self.steps]
        expected = [PULSE if index % 2 == 0 else MOVE for index in range(len(kinds))]
        if not kinds or kinds != expected or kinds[-1] != PULSE:
            raise DomainError(Texts.format(Texts.ERROR_TIMING, kinds))
        if any(not math.isfinite(d) or d < 0 for _, d in self.steps):
            raise DomainError(Texts.format(Texts.ERROR_TIMING, self.steps))

    @classmethod
    def composite(
        cls,
        pulse_duration_s: float = Config.PULSE_DURATION_S,
        move_duration_s: float = Config.MOVE_DURATION_S,
        n_pulses: int = 4,
    ) -> "TimingSequence":
        steps: List[Tuple[str, float]] = []
        for index in range(n_pulses):
            if index:
                steps.append((MOVE, move_duration_s))
            steps.append((PULSE, pulse_duration_s))
        return cls(pulse_duration_s, move_duration_s, tuple(steps))

    @classmethod
    def ramsey(
        cls,
        pulse_duration_s: float = Config.PULSE_DURATION_S,
        move_duration_s: float = Config.MOVE_DURATION_S,
    ) -> "TimingSequence":
        return cls.composite(pulse_duration_s, move_duration_s, n_pulses=2)

    @property
    def total_duration_s(self) -> float:
        return float(sum(duration for _, duration in self.steps))

    @property
    def pulse_count(self) -> int:
        return sum(1 for kind, _ in self.steps if kind == PULSE)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pulse_duration_s": self.pulse_duration_s,
            "move_duration_s": self.move_duration_s,
            "steps": [list(step) for step in self.steps],
            "total_duration_s": self.total_duration_s,
        }


@dataclass
class ScanResult:
    """
    Resultado de uma varredura: valores da variável independente e, por
    zona, populações observadas, curva ideal e contagens de disparos.
    """
    kind: str
    label: str
    x_values: np.ndarray
    populations: Dict[str, np.ndarray]
    ideal: Dict[str, np.ndarray]
    shots: int
    seed: int
    counts: Dict[str, Optional[np.ndarray]] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def zone_labels(self) -> List[str]:
        return list(self.populations.keys())

    def population(self, zone: Optional[str] = None) -> np.ndarray:
        return self.populations[self._zone(zone)]

    def ideal_curve(self, zone: Optional[str] = None) -> np.ndarray:
        return self.ideal[self._zone(zone)]

    def residuals(self, zone: Optional[str] = None) -> np.ndarray:
        key = self._zone(zone)
        return self.populations[key] - self.ideal[key]

    def _zone(self, zone: Optional[str]) -> str:
        key = self.zone_labels[0] if zone is None else zone
        if key not in self.populations:
            raise DomainError(Texts.format(Texts.ERROR_UNKNOWN_ZONE, key))
        return key

    def to_rows(self) -> List[Tuple[float, str, str, float, int, int]]:
        """Linhas x,zone,label,population,shots,seed, zona a zona."""
        rows = []
        for zone in self.zone_labels:
            for x, population in zip(self.x_values, self.populations[zone]):
                rows.append((float(x), zone, self.label, float(population), self.shots, self.seed))
        return rows

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "label": self.label,
            "x": np.asarray(self.x_values).tolist(),
            "populations": {k: np.asarray(v).tolist() for k, v in self.populations.items()},
            "shots": self.shots,
            "seed": self.seed,
            "metadata": self.metadata,
        }


@dataclass(frozen=True)
class ContrastFit:
    """
    Ajuste p(x) = offset + (contrast/2)(1 - cos(x + phase_offset)).
    """
    contrast: float
    offset: float
    phase_offset: float
    uncertainty: float
    offset_uncertainty: float
    residual_rms: float
    points: int
    weighted: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "contrast": self.contrast,
            "offset": self.offset,
            "phase_offset_rad": self.phase_offset,
            "uncertainty": self.uncertainty,
            "offset_uncertainty": self.offset_uncertainty,
            "residual_rms": self.residual_rms,
            "points": self.points,
            "weighted": self.weighted,
        }


def as_float_array(values: Sequence[float]) -> np.ndarray:
    array = np.asarray(list(values), dtype=float)
    if not np.all(np.isfinite(array)):
        raise DomainError(Texts.format(Texts.ERROR_NON_FINITE, array.tolist()))
    return array
