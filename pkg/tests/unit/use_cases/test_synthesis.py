import math

import numpy as np
import pytest

from domain.entities.gate import GateRequest, GateVariant
from domain.entities.su2 import PhaseSequence
from domain.exceptions.custom_exceptions import (
    NoVariantCoversError,
    PreconditionError,
    RegionError,
    SingularityError,
)
from domain.use_cases.response import check_achievable, coefficients_from_phases
from domain.use_cases.su2 import compose_sequence, fidelity
from domain.use_cases.synthesis import (
    IDENTITY_ANTISYMMETRIC,
    antisymmetric_coefficients,
    antisymmetric_constraint,
    extend_negative_target,
    g3,
    g4,
    map_target,
    phases_length4_symmetric,
    robustness_profile,
    solve_length3,
    solve_length4_antisymmetric,
    solve_length4_symmetric,
    symmetric_coefficients,
    synthesize,
    variant_diagnostics,
    variant_verdict,
    verify_phases,
)

PI = math.pi


def _assert_robust(solution):
    assert solution.verified
    assert solution.fidelity_at_theta0 >= 1 - 1e-8
    assert abs(solution.fidelity_derivative_at_theta0) <= 1e-6


# Predicados e mapeamento de alvo

def test_g3_and_g4_values():
    """Testa os predicados de validade em pontos conhecidos."""
    assert g3(PI / 2, PI) == pytest.approx(-0.5)
    assert g4(PI / 3, PI) == pytest.approx(-0.5)
    assert g4(PI / 4, PI / 2) == pytest.approx(-math.sqrt(2) / 2)
    assert g4(PI / 8, PI / 2) == pytest.approx(0.0, abs=1e-15)


def test_map_target_wraps_upper_range():
    effective, magnitude, negative = map_target(3 * PI)
    assert effective == pytest.approx(-PI)
    assert magnitude == pytest.approx(PI)
    assert negative is True
    assert map_target(PI) == (PI, PI, False)


# Comprimento 3

def test_length3_half_pi_to_pi():
    """Testa (pi/2, pi) em L=3: coeficientes exatos e fases verificadas."""
    solution = solve_length3(PI / 2, PI)

    np.testing.assert_allclose(solution.coefficients.a, [-1.0, 2.0], atol=1e-9)
    np.testing.assert_allclose(solution.coefficients.c, [-1.5 * math.sqrt(2), math.sqrt(2)], atol=1e-9)
    _assert_robust(solution)


def test_length3_outside_region():
    """Testa L=3 fora da região (g3 > 0) com o diagnóstico da variante."""
    with pytest.raises(RegionError) as error:
        solve_length3(0.1 * PI, 2 * PI)

    assert error.value.diagnostics
    assert error.value.diagnostics[0]["variant"] == "l3"


def test_length3_zero_target_is_region_error():
    with pytest.raises(RegionError):
        solve_length3(PI / 2, 0.0)


# Comprimento 4 simétrico

def test_symmetric_closed_form_phases():
    """Testa as fases em forma fechada para (pi/3, pi)."""
    phases = phases_length4_symmetric(PI / 3, PI)

    np.testing.assert_allclose(phases.as_array(), [-0.955317, 0.275643, 0.275643, -0.955317], atol=1e-6)
    assert phases.is_symmetric()


def test_symmetric_closed_form_coefficients():
    rc = symmetric_coefficients(PI / 3, PI)

    np.testing.assert_allclose(rc.a, [1 / 3, 0.0, 2 / 3], atol=1e-12)
    np.testing.assert_allclose(rc.c, [-0.769800, -0.384900], atol=1e-6)


def test_symmetric_coefficients_match_forward_map():
    """Testa a concordância entre a forma fechada e o mapa direto."""
    for theta0, target in [(PI / 3, PI), (0.4 * PI, 0.3 * PI), (PI / 2, 2 * PI), (0.45 * PI, 1.7 * PI)]:
        closed = symmetric_coefficients(theta0, target)
        forward = coefficients_from_phases(phases_length4_symmetric(theta0, target))
        assert forward.max_abs_difference(closed) <= 1e-9


def test_symmetric_zero_target_is_identity():
    phases = phases_length4_symmetric(PI / 3, 0.0)

    np.testing.assert_allclose(phases.as_array(), [-PI / 2, PI / 2, PI / 2, -PI / 2], atol=1e-12)
    assert fidelity(0.0, compose_sequence(phases, PI / 3)) == pytest.approx(1.0)


def test_symmetric_all_equal_phases_at_half_pi():
    """Testa o caso 0/0 em (pi/2, 2pi): quatro pulsos de mesma fase."""
    solution = solve_length4_symmetric(PI / 2, 2 * PI)

    _assert_robust(solution)
    assert np.ptp(solution.phases.as_array()) == pytest.approx(0.0, abs=1e-9)


def test_symmetric_rejects_negative_target():
    with pytest.raises(PreconditionError):
        phases_length4_symmetric(PI / 3, -PI / 2)


def test_symmetric_outside_region():
    """Testa g4 > 0 com o valor do predicado no diagnóstico."""
    with pytest.raises(RegionError) as error:
        solve_length4_symmetric(PI / 8, PI)

    assert "g4=" in error.value.message


def test_symmetric_validity_matches_achievability():
    """Testa sign(g4) <= 0 se e somente se os coeficientes são realizáveis."""
    for theta0 in np.linspace(0.05 * PI, 0.95 * PI, 10):
        for target in np.linspace(0.1 * PI, 2 * PI, 10):
            value = g4(theta0, target)
            if abs(value) < 1e-3:
                continue
            achievable = check_achievable(symmetric_coefficients(theta0, target)).achievable
            assert achievable == (value <= 0), (theta0, target)


# Comprimento 4 anti-simétrico

def test_antisymmetric_constraint_value():
    """Testa 2c1 + 4c2 em pontos conhecidos."""
    assert antisymmetric_constraint(PI / 2, PI / 2) == pytest.approx(-0.282562, abs=1e-6)
    assert antisymmetric_constraint(0.7 * PI, 0.3 * PI) == pytest.approx(0.67031, abs=1e-4)
    assert antisymmetric_constraint(0.7 * PI, 0.9 * PI) == pytest.approx(1.39716, abs=1e-4)


@pytest.mark.parametrize("target", [0.3 * PI, 0.9 * PI, 1.3 * PI])
def test_antisymmetric_constraint_matches_realized_sequence(target):
    """Testa que 2c1 + 4c2 das fases sintetizadas, recalculado pelo produto de rotações, bate com a restrição."""
    solution = solve_length4_antisymmetric(0.7 * PI, target)
    realized = coefficients_from_phases(solution.phases)

    assert 2 * realized.c[0] + 4 * realized.c[1] == pytest.approx(
        antisymmetric_constraint(0.7 * PI, target), abs=1e-6
    )


@pytest.mark.parametrize("theta0", [0.55 * PI, 0.6 * PI, 0.65 * PI, 0.7 * PI])
def test_antisymmetric_columns_cover_full_range(theta0):
    """Testa que colunas dentro de [pi/2, 0.728pi] realizam todo thetaT em (0, 2pi]."""
    for target in np.linspace(0.02 * PI, 2 * PI, 100):
        rc, _ = antisymmetric_coefficients(theta0, target)
        assert check_achievable(rc).achievable, (theta0, target)


def test_antisymmetric_negative_radicand_verdict():
    """Testa o veredicto fora da janela, onde o radicando é negativo."""
    verdict = variant_verdict(GateVariant.L4_ANTISYMMETRIC, 0.73 * PI, 1.085 * PI)

    assert verdict["valid"] is False
    assert verdict["reason"] == "REGION_ERROR"
    assert verdict["radicand"] < 0


def test_antisymmetric_negative_radicand_synthesis():
    with pytest.raises(RegionError) as error:
        synthesize(GateRequest(0.73 * PI, 1.085 * PI, GateVariant.L4_ANTISYMMETRIC))

    antisymmetric = [d for d in error.value.diagnostics if d["variant"] == "antisym4"]
    assert antisymmetric[0]["valid"] is False


@pytest.mark.parametrize("target", [PI, 2 * PI])
def test_antisymmetric_constraint_singular(target):
    with pytest.raises(SingularityError):
        antisymmetric_constraint(0.6 * PI, target)


def test_antisymmetric_constraint_precondition():
    with pytest.raises(PreconditionError):
        antisymmetric_constraint(0.2 * PI, PI)


@pytest.mark.parametrize("target", [0.3 * PI, PI / 2, 1.3 * PI, PI, 2 * PI, PI + 1e-7, 2 * PI - 5e-7])
def test_antisymmetric_solutions_in_window(target):
    """Testa a síntese anti-simétrica em 0.7pi, incluindo alvos singulares."""
    solution = solve_length4_antisymmetric(0.7 * PI, target)

    _assert_robust(solution)


def test_antisymmetric_phase_structure():
    solution = solve_length4_antisymmetric(0.7 * PI, 1.3 * PI)

    assert solution.phases.is_antisymmetric(1e-6)


def test_antisymmetric_singular_limit_note():
    _, notes = antisymmetric_coefficients(0.6 * PI, PI)

    assert "singular_limit" in notes


def test_antisymmetric_zero_target_identity():
    solution = solve_length4_antisymmetric(0.6 * PI, 0.0)

    assert solution.phases == IDENTITY_ANTISYMMETRIC
    _assert_robust(solution)


def test_antisymmetric_target_above_four_theta0():
    with pytest.raises(PreconditionError):
        solve_length4_antisymmetric(0.2 * PI, 0.9 * PI)


# Alvos negativos e síntese automática

def test_extend_negative_target():
    """Testa que deslocar todas as fases de pi implementa -thetaT."""
    phases = phases_length4_symmetric(PI / 3, PI / 2)
    negated = extend_negative_target(phases)

    assert fidelity(-PI / 2, compose_sequence(negated, PI / 3)) == pytest.approx(1.0, abs=1e-12)


def test_synthesize_negative_target():
    solution = synthesize(GateRequest(PI / 3, -PI / 2, GateVariant.L4_SYMMETRIC))

    _assert_robust(solution)
    assert "negative_target" in solution.notes
    assert solution.effective_target == pytest.approx(-PI / 2)


def test_synthesize_upper_range_target():
    """Testa thetaT = 3pi em 0.7pi: mapeado para -pi."""
    solution = synthesize(GateRequest(0.7 * PI, 3 * PI, GateVariant.L4_ANTISYMMETRIC))

    _assert_robust(solution)
    assert solution.effective_target == pytest.approx(-PI)


def test_synthesize_auto_prefers_symmetric():
    solution = synthesize(GateRequest(PI / 3, PI))

    assert solution.variant is GateVariant.L4_SYMMETRIC


def test_synthesize_auto_uses_antisymmetric():
    """Testa a seleção automática quando só a anti-simétrica cobre."""
    solution = synthesize(GateRequest(0.7 * PI, 2 * PI))

    assert solution.variant is GateVariant.L4_ANTISYMMETRIC
    _assert_robust(solution)


def test_synthesize_no_variant_covers():
    with pytest.raises(NoVariantCoversError) as error:
        synthesize(GateRequest(0.1 * PI, 2 * PI))

    assert {d["variant"] for d in error.value.diagnostics} == {"l3", "sym4", "antisym4"}
    assert not any(d["valid"] for d in error.value.diagnostics)


def test_synthesize_explicit_variant_region_error():
    """Testa que a variante explícita fora da região devolve os diagnósticos."""
    with pytest.raises(RegionError) as error:
        synthesize(GateRequest(0.1 * PI, 2 * PI, GateVariant.L4_SYMMETRIC))

    assert len(error.value.diagnostics) == 3


def test_variant_diagnostics_keys():
    diagnostics = variant_diagnostics(PI / 2, PI)
    by_variant = {d["variant"]: d for d in diagnostics}

    assert by_variant["l3"]["g"] == pytest.approx(-0.5)
    assert by_variant["sym4"]["valid"] is True
    assert "max_norm" in by_variant["antisym4"]


def test_verify_phases_rejects_wrong_rotation():
    """Testa que um pulso pi/2 não é aceito como porta pi."""
    value, _, ok = verify_phases(PhaseSequence([0.0]), PI / 2, PI)

    assert not ok
    assert value == pytest.approx(math.cos(PI / 4))


def test_robustness_profile_is_quadratic():
    solution = synthesize(GateRequest(PI / 3, PI, GateVariant.L4_SYMMETRIC))
    profile = robustness_profile(solution, [-0.02, -0.01, 0.0, 0.01, 0.02])

    assert profile["infidelity"][2] == pytest.approx(0.0, abs=1e-9)
    assert profile["curvature"] >= 0
    assert profile["infidelity"][4] == pytest.approx(4 * profile["infidelity"][3], rel=0.05)
