import math

import numpy as np
import pytest

from domain.entities.experiment import MOVE, PULSE, ScanResult, SPAMModel, TimingSequence
from domain.exceptions.custom_exceptions import DomainError


def test_spam_affine_map(spam):
    """Testa o mapa SPAM: contraste f_prep*f_read e piso (1 - f_read)/2."""
    assert spam.contrast == pytest.approx(0.995 * 0.999)
    assert spam.offset == pytest.approx(0.0005)
    assert spam.apply(1.0) == pytest.approx(0.994005 + 0.0005)
    np.testing.assert_allclose(spam.apply(np.array([0.0, 0.5])), [0.0005, 0.4975025])


def test_spam_ideal_is_identity():
    assert SPAMModel.ideal().apply(0.3) == pytest.approx(0.3)


@pytest.mark.parametrize("prep, read", [(0.4, 1.0), (1.0, 1.1), (float("nan"), 1.0)])
def test_spam_rejects_out_of_range(prep, read):
    with pytest.raises(DomainError):
        SPAMModel(prep, read)


def test_composite_timing_total():
    """Testa a agenda de 4 pulsos de 1.5 us e 3 movimentos de 8 us: 30 us."""
    timing = TimingSequence.composite(1.5e-6, 8e-6)

    assert timing.total_duration_s == pytest.approx(30e-6)
    assert timing.pulse_count == 4
    assert [kind for kind, _ in timing.steps] == [PULSE, MOVE, PULSE, MOVE, PULSE, MOVE, PULSE]


def test_ramsey_timing_total():
    assert TimingSequence.ramsey(1.5e-6, 8e-6).total_duration_s == pytest.approx(11e-6)


def test_timing_rejects_broken_alternation():
    with pytest.raises(DomainError):
        TimingSequence(1e-6, 1e-6, ((PULSE, 1e-6), (PULSE, 1e-6)))
    with pytest.raises(DomainError):
        TimingSequence(1e-6, 1e-6, ((PULSE, 1e-6), (MOVE, 1e-6)))


def _scan():
    x = np.linspace(0, 2 * math.pi, 4)
    return ScanResult(
        kind="ramsey",
        label="ramsey_Z1",
        x_values=x,
        populations={"Z1": np.array([1.0, 0.25, 0.25, 1.0])},
        ideal={"Z1": np.array([1.0, 0.25, 0.25, 0.9])},
        shots=100,
        seed=3,
    )


def test_scan_rows_and_residuals():
    """Testa as linhas CSV e os resíduos de uma varredura."""
    scan = _scan()
    rows = scan.to_rows()

    assert scan.zone_labels == ["Z1"]
    assert len(rows) == 4
    assert rows[0] == (0.0, "Z1", "ramsey_Z1", 1.0, 100, 3)
    np.testing.assert_allclose(scan.residuals(), [0.0, 0.0, 0.0, 0.1], atol=1e-12)


def test_scan_unknown_zone():
    with pytest.raises(DomainError):
        _scan().population("Z9")
