import math

import numpy as np
import pytest

from shared.utils.angles import in_pi_units, parse_angle, wrap_phase


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0.7pi", 0.7 * math.pi),
        ("pi", math.pi),
        ("-1.5pi", -1.5 * math.pi),
        ("2*pi", 2 * math.pi),
        (" 0.25 PI ", 0.25 * math.pi),
        ("1.5708", 1.5708),
        ("-0.5", -0.5),
        (2, 2.0),
    ],
)
def test_parse_angle(text, expected):
    """Testa literais em radianos e em múltiplos de pi."""
    assert parse_angle(text) == pytest.approx(expected)


@pytest.mark.parametrize("text", ["", "abc", "pipi", "1.2.3pi", "nan", "inf"])
def test_parse_angle_rejects(text):
    with pytest.raises(ValueError):
        parse_angle(text)


def test_wrap_phase_scalar_and_array():
    assert wrap_phase(3 * math.pi) == pytest.approx(math.pi)
    assert wrap_phase(-math.pi) == pytest.approx(math.pi)
    assert wrap_phase(0.25) == pytest.approx(0.25)
    np.testing.assert_allclose(wrap_phase([2 * math.pi + 0.1, -0.1]), [0.1, -0.1])


def test_in_pi_units():
    assert in_pi_units(0.7 * math.pi) == pytest.approx(0.7)
