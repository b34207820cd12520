import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

from domain.entities.gate import GateVariant
from shared.constants.texts import Texts


@dataclass
class ValidityGrid:
    """
    Mapa booleano de realizabilidade de uma variante sobre (theta0, thetaT).

    cells[i, j] refere-se a (theta0_axis[i], thetaT_axis[j]); full_range_columns[i]
    indica se a coluna theta0_axis[i] realiza todo thetaT em [-2pi, 2pi].
    """
    variant: GateVariant
    theta0_axis: np.ndarray
    thetaT_axis: np.ndarray
    cells: np.ndarray
    full_range_columns: np.ndarray
    resolution_pi: float
    warnings: List[str] = field(default_factory=list)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.cells.shape

    def valid_count(self) -> int:
        return int(np.count_nonzero(self.cells))

    def valid_cells(self) -> List[Tuple[float, float]]:
        rows, cols = np.nonzero(self.cells)
        return [(float(self.theta0_axis[i]), float(self.thetaT_axis[j])) for i, j in zip(rows, cols)]

    def iter_rows(self) -> Iterator[Tuple[float, float, bool, bool]]:
        """Linhas do CSV em ordem row-major (theta0 externo)."""
        for i, theta0 in enumerate(self.theta0_axis):
            column = bool(self.full_range_columns[i])
            for j, target in enumerate(self.thetaT_axis):
                yield float(theta0), float(target), bool(self.cells[i, j]), column

    def to_rows(self) -> List[Tuple[float, float, bool, bool]]:
        return list(self.iter_rows())

    def summary(self) -> Dict[str, Any]:
        return {
            "variant": self.variant.value,
            "resolution_pi": self.resolution_pi,
            "theta0_points": int(self.theta0_axis.size),
            "thetaT_points": int(self.thetaT_axis.size),
            "valid_cells": self.valid_count(),
            "full_range_columns": int(np.count_nonzero(self.full_range_columns)),
        }


@dataclass(frozen=True)
class FullRangeInterval:
    """
    Intervalo contíguo máximo de theta0 cujas colunas realizam todo o alcance.
    """
    variant: GateVariant
    theta_min: Optional[float]
    theta_max: Optional[float]
    resolution_pi: float

    @property
    def found(self) -> bool:
        return self.theta_min is not None

    @property
    def intensity_ratio(self) -> Optional[float]:
        if not self.found:
            return None
        return (self.theta_max / self.theta_min) ** 2

    def to_dict(self) -> Dict[str, Any]:
        if not self.found:
            return {
                "variant": self.variant.value,
                "found": False,
                "full_range_interval": Texts.INTERVAL_NONE_FOUND,
                "intensity_ratio": None,
                "resolution_pi": self.resolution_pi,
            }
        return {
            "variant": self.variant.value,
            "found": True,
            "full_range_interval": [self.theta_min, self.theta_max],
            "full_range_interval_pi": [self.theta_min / math.pi, self.theta_max / math.pi],
            "intensity_ratio": self.intensity_ratio,
            "resolution_pi": self.resolution_pi,
        }
