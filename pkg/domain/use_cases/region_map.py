"""
Mapas de validade sobre (theta0, thetaT) e intervalos de alcance completo.
"""
import math
from typing import Dict, List, Optional, Tuple

import numpy as np

from domain.entities.gate import GateRequest, GateVariant
from domain.entities.region import FullRangeInterval, ValidityGrid
from domain.exceptions.custom_exceptions import PreconditionError
from domain.use_cases.synthesis import map_target, synthesize, variant_verdict
from shared.constants.config import Config
from shared.constants.texts import Texts
from shared.utils.logger import Logger

logger = Logger(__name__)

_NODE_TOL = 1e-9


def grid_divisions(resolution_pi: float) -> int:
    """
    Número de divisões de pi para a resolução pedida; pi/2 é sempre nó
    quando 1/resolução é par.

    Raises:
        PreconditionError: resolução abaixo de 0.001pi
    """
    if not math.isfinite(resolution_pi) or resolution_pi < Config.MIN_RESOLUTION_PI - 1e-15:
        raise PreconditionError(Texts.format(Texts.ERROR_RESOLUTION, resolution_pi, Config.MIN_RESOLUTION_PI))
    return max(2, int(round(1.0 / resolution_pi)))


def resolution_warnings(resolution_pi: float) -> List[str]:
    if resolution_pi > Config.COARSE_RESOLUTION_PI:
        message = Texts.format(Texts.WARNING_COARSE_RESOLUTION, resolution_pi, Config.COARSE_RESOLUTION_PI)
        logger.warning(message)
        return [message]
    return []


def _axis(low: float, high: float, divisions: int, open_ends: bool) -> Tuple[np.ndarray, np.ndarray]:
    first = math.ceil(low * divisions / math.pi - _NODE_TOL)
    last = math.floor(high * divisions / math.pi + _NODE_TOL)
    if open_ends:
        first, last = max(first, 1), min(last, divisions - 1)
    indices = np.arange(first, last + 1)
    return indices, math.pi * indices / divisions


class _VerdictCache:
    """Veredictos por (coluna, |thetaT|) compartilhados entre grade e colunas."""

    def __init__(self, variant: GateVariant, divisions: int):
        self.variant = variant
        self.divisions = divisions
        self._cells: Dict[Tuple[int, int], bool] = {}

    def valid(self, i: int, j: int) -> bool:
        target = math.pi * j / self.divisions
        _, magnitude, _ = map_target(target)
        key = (i, int(round(magnitude * self.divisions / math.pi)))
        if key not in self._cells:
            theta0 = math.pi * i / self.divisions
            self._cells[key] = bool(variant_verdict(self.variant, theta0, magnitude)["valid"])
        return self._cells[key]

    def column_full_range(self, i: int) -> bool:
        # alvos negativos equivalem a |thetaT|, então basta [0, 2pi]
        return all(self.valid(i, j) for j in range(2 * self.divisions, -1, -1))


def validity_grid(
    variant: GateVariant,
    theta0_range: Tuple[float, float] = (0.0, math.pi),
    thetaT_range: Tuple[float, float] = (-2 * math.pi, 2 * math.pi),
    resolution_pi: float = Config.DEFAULT_RESOLUTION_PI,
) -> ValidityGrid:
    """
    Avalia o predicado de validade da variante em cada nó da grade.

    Nós theta0 = pi*i/n (i = 1..n-1) e thetaT = pi*j/n com n = round(1/resolução);
    L3 e simétrica usam g <= 1e-9, a anti-simétrica usa check_achievable.

    Raises:
        PreconditionError: resolução < 0.001pi
    """
    divisions = grid_divisions(resolution_pi)
    warnings = resolution_warnings(resolution_pi)
    i_axis, theta0_axis = _axis(theta0_range[0], theta0_range[1], divisions, open_ends=True)
    j_axis, thetaT_axis = _axis(thetaT_range[0], thetaT_range[1], divisions, open_ends=False)

    cache = _VerdictCache(variant, divisions)
    cells = np.zeros((i_axis.size, j_axis.size), dtype=bool)
    for row, i in enumerate(i_axis):
        for col, j in enumerate(j_axis):
            cells[row, col] = cache.valid(int(i), int(j))
    columns = np.array([cache.column_full_range(int(i)) for i in i_axis], dtype=bool)

    grid = ValidityGrid(
        variant=variant,
        theta0_axis=theta0_axis,
        thetaT_axis=thetaT_axis,
        cells=cells,
        full_range_columns=columns,
        resolution_pi=resolution_pi,
        warnings=warnings,
    )
    logger.log_region(variant.value, cells.size, grid.valid_count())
    return grid


def _longest_run(flags: np.ndarray) -> Optional[Tuple[int, int]]:
    best: Optional[Tuple[int, int]] = None
    start = None
    for index, flag in enumerate(list(flags) + [False]):
        if flag and start is None:
            start = index
        elif not flag and start is not None:
            if best is None or index - start > best[1] - best[0] + 1:
                best = (start, index - 1)
            start = None
    return best


def full_range_interval(
    variant: GateVariant, resolution_pi: float = Config.DEFAULT_RESOLUTION_PI
) -> FullRangeInterval:
    """
    Intervalo contíguo máximo de theta0 cujas colunas realizam todo
    thetaT em [-2pi, 2pi], com precisão de uma célula da grade.
    """
    divisions = grid_divisions(resolution_pi)
    cache = _VerdictCache(variant, divisions)
    indices = np.arange(1, divisions)
    flags = np.array([cache.column_full_range(int(i)) for i in indices], dtype=bool)
    run = _longest_run(flags)
    if run is None:
        interval = FullRangeInterval(variant, None, None, resolution_pi)
    else:
        interval = FullRangeInterval(
            variant,
            math.pi * indices[run[0]] / divisions,
            math.pi * indices[run[1]] / divisions,
            resolution_pi,
        )
    logger.info(Texts.format(Texts.LOG_INTERVAL, variant.value, interval.to_dict()["full_range_interval"]))
    return interval


def intensity_ratio(theta_min: float, theta_max: float) -> float:
    """(theta_max/theta_min)^2, já que theta é proporcional a sqrt(I)."""
    if not 0 < theta_min <= theta_max:
        raise PreconditionError(Texts.format(Texts.ERROR_THETA0_RANGE, (theta_min, theta_max)))
    return (theta_max / theta_min) ** 2


def spot_check(grid: ValidityGrid, fraction: float = 0.01, seed: int = Config.DEFAULT_SEED) -> int:
    """
    Sintetiza uma amostra aleatória das células válidas; qualquer falha
    propaga a exceção da síntese. Devolve o número de células verificadas.
    """
    cells = grid.valid_cells()
    if not cells:
        return 0
    rng = np.random.default_rng(seed)
    count = max(1, int(round(fraction * len(cells))))
    for index in sorted(rng.choice(len(cells), size=min(count, len(cells)), replace=False)):
        theta0, target = cells[int(index)]
        synthesize(GateRequest(theta0, target, grid.variant))
    return count
