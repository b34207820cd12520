import math

import numpy as np
import pytest

from domain.entities.response import ResponseCoefficients, AchievabilityCondition
from domain.entities.su2 import PhaseSequence
from domain.exceptions.custom_exceptions import ExtractionError, PreconditionError
from domain.use_cases.response import (
    check_achievable,
    coefficients_from_phases,
    evaluate,
    phases_from_coefficients,
)
from domain.use_cases.su2 import compose_sequence, pauli_decompose


@pytest.mark.parametrize(
    "phases",
    [
        [0.4],
        [0.1, -1.2, 2.2],
        [-0.955317, 0.275643, 0.275643, -0.955317],
        [0.3, 1.1, -0.7, 2.5],
    ],
)
def test_forward_map_matches_matrix_product(phases):
    """Testa que os coeficientes reproduzem A e C do produto de matrizes."""
    s = PhaseSequence(phases)
    rc = coefficients_from_phases(s)
    for theta in np.linspace(0.1, 3.0, 7):
        d = pauli_decompose(compose_sequence(s, theta), canonical=False)
        A, C = evaluate(rc, theta)
        assert A == pytest.approx(d.A, abs=1e-9)
        assert C == pytest.approx(d.C, abs=1e-9)


def test_forward_map_a_at_zero_is_one():
    rc = coefficients_from_phases(PhaseSequence([0.2, 0.9, -1.4, 0.5]))

    assert rc.a_at_zero() == pytest.approx(1.0, abs=1e-9)


def test_check_achievable_accepts_identity():
    rc = ResponseCoefficients(4, [1.0, 0.0, 0.0], [0.0, 0.0])

    assert check_achievable(rc).achievable


def test_check_achievable_rejects_norm_violation():
    """Testa a falha da condição |A|^2 + |C|^2 <= 1."""
    rc = ResponseCoefficients(4, [-1.0, 0.0, 2.0], [0.0, 0.0])
    report = check_achievable(rc)

    assert not report.achievable
    assert AchievabilityCondition.NORM_BOUND in report.condition_failures
    assert report.max_norm == pytest.approx(9.0)


def test_check_achievable_rejects_a_at_zero():
    rc = ResponseCoefficients(4, [0.5, 0.0, 0.0], [0.0, 0.0])

    assert AchievabilityCondition.A_AT_ZERO in check_achievable(rc).condition_failures


def test_extraction_round_trip():
    """Testa que as fases extraídas reproduzem os coeficientes pedidos."""
    original = PhaseSequence([0.3, 1.1, -0.7, 2.5])
    rc = coefficients_from_phases(original)
    phases = phases_from_coefficients(rc)

    assert coefficients_from_phases(phases).max_abs_difference(rc) <= 1e-8


def test_extraction_antisymmetric_structure():
    original = PhaseSequence([0.4, -1.3, 1.3, -0.4])
    rc = coefficients_from_phases(original)
    phases = phases_from_coefficients(rc, structure="antisymmetric")

    assert coefficients_from_phases(phases).max_abs_difference(rc) <= 1e-8


def test_extraction_keeps_requested_structure():
    """Testa que coeficientes fora da família anti-simétrica não caem numa busca livre."""
    rc = coefficients_from_phases(PhaseSequence([0.3, 1.1, -0.7, 2.5]))

    with pytest.raises(ExtractionError):
        phases_from_coefficients(rc, structure="antisymmetric", starts=8)


def test_extraction_rejects_unachievable():
    rc = ResponseCoefficients(4, [-1.0, 0.0, 2.0], [0.0, 0.0])

    with pytest.raises(ExtractionError):
        phases_from_coefficients(rc)


def test_extraction_rejects_structure_for_odd_length():
    rc = coefficients_from_phases(PhaseSequence([0.1, 0.2, 0.3]))

    with pytest.raises(PreconditionError):
        phases_from_coefficients(rc, structure="symmetric")


def test_length3_coefficients_at_half_pi():
    """Testa os coeficientes de L=3 para a sequência de fases nulas em theta = pi/2."""
    rc = coefficients_from_phases(PhaseSequence([0.0, 0.0, 0.0]))
    A, C = evaluate(rc, math.pi / 2)

    assert A == pytest.approx(math.cos(3 * math.pi / 4))
    assert C == pytest.approx(-math.sin(3 * math.pi / 4))
