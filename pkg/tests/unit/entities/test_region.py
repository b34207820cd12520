import math

import numpy as np
import pytest

from domain.entities.gate import GateVariant
from domain.entities.region import FullRangeInterval, ValidityGrid


def test_interval_not_found():
    """Testa o relatório de intervalo vazio."""
    interval = FullRangeInterval(GateVariant.L3, None, None, 0.005)

    assert not interval.found
    assert interval.intensity_ratio is None
    assert interval.to_dict()["full_range_interval"] == "nenhum encontrado"


def test_interval_ratio():
    interval = FullRangeInterval(GateVariant.L4_ANTISYMMETRIC, 0.5 * math.pi, 0.728 * math.pi, 0.005)

    assert interval.intensity_ratio == pytest.approx(2.12, abs=0.005)
    assert interval.to_dict()["full_range_interval_pi"] == pytest.approx([0.5, 0.728])


def test_grid_rows_and_summary():
    grid = ValidityGrid(
        variant=GateVariant.L4_SYMMETRIC,
        theta0_axis=np.array([0.5, 1.0]),
        thetaT_axis=np.array([0.0, 1.0, 2.0]),
        cells=np.array([[True, True, False], [True, False, False]]),
        full_range_columns=np.array([False, False]),
        resolution_pi=0.5,
    )

    assert grid.shape == (2, 3)
    assert grid.valid_count() == 3
    assert grid.valid_cells() == [(0.5, 0.0), (0.5, 1.0), (1.0, 0.0)]
    assert grid.to_rows()[2] == (0.5, 2.0, False, False)
    assert grid.summary()["valid_cells"] == 3
