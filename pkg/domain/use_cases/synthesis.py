"""
Síntese de portas compostas de comprimento 3 e 4 a partir dos sistemas
lineares de restrições sobre os coeficientes de A[theta] e C[theta].
"""
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from domain.entities.gate import GateRequest, GateSolution, GateVariant
from domain.entities.response import ResponseCoefficients
from domain.entities.su2 import PhaseSequence
from domain.exceptions.custom_exceptions import (
    DegenerateSystemError,
    ExtractionError,
    InternalConsistencyError,
    NoVariantCoversError,
    PreconditionError,
    RegionError,
    SingularityError,
)
from domain.use_cases.response import check_achievable, coefficients_from_phases, phases_from_coefficients
from domain.use_cases.su2 import compose_sequence, fidelity
from shared.constants.config import Config
from shared.constants.texts import Texts
from shared.utils.logger import Logger

logger = Logger(__name__)

TWO_PI = 2 * math.pi
_SINGULAR_TOL = 1e-12
_HARD_DEGENERATE = 1e14


def g3(theta0: float, theta_target: float) -> float:
    """Predicado de validade de comprimento 3; válido quando <= 0."""
    half = math.cos(theta_target / 2)
    return (math.cos(theta0 / 2) - half) * (math.cos(3 * theta0 / 2) - half)


def g4(theta0: float, theta_target: float) -> float:
    """Predicado de validade da construção simétrica de comprimento 4; válido quando <= 0."""
    return math.cos(2 * theta0) - math.cos(theta_target / 2)


def map_target(theta_target: float) -> Tuple[float, float, bool]:
    """
    Mapeia o alvo para (alvo efetivo, magnitude, negativo).

    Alvos em (2pi, 4pi] viram -(4pi - thetaT), pois R_0[4pi] = I.
    """
    effective = theta_target - 2 * TWO_PI if theta_target > TWO_PI else theta_target
    return effective, abs(effective), effective < 0


def _solve_linear(matrix: np.ndarray, rhs: np.ndarray, notes: List[str]) -> np.ndarray:
    condition = float(np.linalg.cond(matrix))
    if not math.isfinite(condition) or condition > _HARD_DEGENERATE:
        raise DegenerateSystemError(condition)
    if condition > Config.COND_DEGENERATE:
        logger.warning(Texts.format(Texts.LOG_NEAR_DEGENERATE, condition))
        notes.append("near_degenerate")
    return np.linalg.solve(matrix, rhs)


def verify_phases(phases: PhaseSequence, theta0: float, theta_target: float) -> Tuple[float, float, bool]:
    """
    Verifica a sequência no oráculo SU(2).

    Returns:
        (fidelidade em theta0, derivada central com passo 1e-5, aprovado)
    """
    h = Config.FD_STEP
    value = fidelity(theta_target, compose_sequence(phases, theta0))
    forward = fidelity(theta_target, compose_sequence(phases, theta0 + h))
    backward = fidelity(theta_target, compose_sequence(phases, theta0 - h))
    derivative = (forward - backward) / (2 * h)
    ok = value >= 1 - Config.TOL_FIDELITY and abs(derivative) <= Config.TOL_DERIVATIVE
    return float(value), float(derivative), bool(ok)


def _build_solution(
    request: GateRequest,
    variant: GateVariant,
    rc: ResponseCoefficients,
    phases: PhaseSequence,
    target: float,
    notes: List[str],
) -> GateSolution:
    value, derivative, ok = verify_phases(phases, request.theta0, target)
    if not ok:
        raise InternalConsistencyError(Texts.format(Texts.ERROR_VERIFICATION, value, derivative))
    return GateSolution(
        request=request,
        variant=variant,
        coefficients=rc,
        phases=phases,
        fidelity_at_theta0=value,
        fidelity_derivative_at_theta0=derivative,
        verified=ok,
        achievability=check_achievable(rc),
        effective_target=target,
        notes=notes,
    )


def _region_error(
    variant: GateVariant, theta0: float, theta_target: float, reason: str, verdict: Optional[Dict] = None
) -> RegionError:
    # caminhos alcançáveis a partir de variant_verdict passam o veredicto pronto
    if verdict is None:
        verdict = variant_verdict(variant, theta0, theta_target)
    return RegionError(
        Texts.format(Texts.ERROR_REGION, theta0, theta_target, variant.value, reason),
        [verdict],
    )


def _antisymmetric_failure(theta0: float, theta_target: float, **details) -> Dict:
    verdict = {
        "variant": GateVariant.L4_ANTISYMMETRIC.value,
        "theta0_rad": theta0,
        "thetaT_rad": theta_target,
        "valid": False,
    }
    verdict.update(details)
    return verdict


# Comprimento 3

def length3_system(theta0: float, theta_target: float) -> Tuple[np.ndarray, np.ndarray]:
    """Sistema 4x4 nas incógnitas (a1, a3, c1, c3)."""
    x0, y0 = math.cos(theta0 / 2), math.sin(theta0 / 2)
    cT, sT = math.cos(theta_target / 2), math.sin(theta_target / 2)
    matrix = np.array([
        [1.0, 1.0, 0.0, 0.0],
        [x0, x0 ** 3, 0.0, 0.0],
        [0.0, 0.0, y0, y0 ** 3],
        [cT * y0, 3 * cT * y0 * x0 ** 2, sT * x0, 3 * sT * x0 * y0 ** 2],
    ])
    rhs = np.array([1.0, cT, -sT, 0.0])
    return matrix, rhs


def solve_length3(theta0: float, theta_target: float) -> GateSolution:
    """
    Porta de comprimento 3 para thetaT em [0, 2pi].

    Raises:
        RegionError: g3 > 0
        InternalConsistencyError: coeficientes não realizáveis em ponto declarado válido
    """
    request = GateRequest(theta0, theta_target, GateVariant.L3)
    value = g3(theta0, theta_target)
    if value > Config.TOL_BOUNDARY:
        raise _region_error(GateVariant.L3, theta0, theta_target, f"g3={value:.9g}")
    notes: List[str] = []
    matrix, rhs = length3_system(theta0, theta_target)
    a1, a3, c1, c3 = _solve_linear(matrix, rhs, notes)
    rc = ResponseCoefficients(3, [a1, a3], [c1, c3])
    report = check_achievable(rc)
    if not report.achievable:
        if value > -Config.TOL_BOUNDARY:
            raise _region_error(GateVariant.L3, theta0, theta_target, f"max_norm={report.max_norm:.12g}")
        raise InternalConsistencyError(
            Texts.format(Texts.ERROR_INCONSISTENT, theta0, theta_target, f"max_norm={report.max_norm}")
        )
    phases = phases_from_coefficients(rc)
    return _build_solution(request, GateVariant.L3, rc, phases, theta_target, notes)


# Comprimento 4 simétrico

def symmetric_coefficients(theta0: float, theta_target: float) -> ResponseCoefficients:
    """
    Coeficientes em forma fechada: A = 1 + k(cos 2theta - 1) com
    k = sin^2(thetaT/4)/sin^2(theta0), e C = c1 sin(theta) + c2 sin(2theta).
    """
    q, p = math.sin(theta_target / 4), math.cos(theta_target / 4)
    S, Ct = math.sin(theta0), math.cos(theta0)
    k = q * q / (S * S)
    ratio = 0.0 if abs(p) < _SINGULAR_TOL else max(-1.0, min(1.0, Ct / p))
    c1 = (2 * q / S ** 3) * (Ct * ratio - p)
    c2 = -(q ** 3) * ratio / S ** 3
    return ResponseCoefficients(4, [1 - k, 0.0, k], [c1, c2])


def phases_length4_symmetric(theta0: float, theta_target: float) -> PhaseSequence:
    """
    Fases em forma fechada (phi0, phi1, phi1, phi0) com
    phi0 = -pi/2 + gamma, phi1 = pi/2 + gamma + chi,
    chi = -arccos(1 - 2 sin^2(thetaT/4)/sin^2(theta0)) e
    gamma = atan2(-cos(theta0) sin(chi/2), cos(chi/2)).

    Raises:
        PreconditionError: thetaT < 0 (use extend_negative_target)
        RegionError: g4 > 0
    """
    if theta_target < 0:
        raise PreconditionError(Texts.format(Texts.ERROR_TARGET_RANGE, theta_target))
    value = g4(theta0, theta_target)
    if value > Config.TOL_BOUNDARY:
        raise _region_error(GateVariant.L4_SYMMETRIC, theta0, theta_target, f"g4={value:.9g}")
    k = math.sin(theta_target / 4) ** 2 / math.sin(theta0) ** 2
    chi = -math.acos(max(-1.0, min(1.0, 1 - 2 * k)))
    y = -math.cos(theta0) * math.sin(chi / 2)
    x = math.cos(chi / 2)
    # 0/0: quatro pulsos de mesma fase, qualquer gamma serve
    gamma = 0.0 if abs(x) < _SINGULAR_TOL and abs(y) < _SINGULAR_TOL else math.atan2(y, x)
    phi0 = -math.pi / 2 + gamma
    phi1 = math.pi / 2 + gamma + chi
    return PhaseSequence([phi0, phi1, phi1, phi0])


def solve_length4_symmetric(theta0: float, theta_target: float) -> GateSolution:
    """
    Porta simétrica de comprimento 4 com coeficientes e fases em forma fechada.
    """
    request = GateRequest(theta0, theta_target, GateVariant.L4_SYMMETRIC)
    phases = phases_length4_symmetric(theta0, theta_target)
    rc = symmetric_coefficients(theta0, theta_target)
    notes: List[str] = []
    mismatch = coefficients_from_phases(phases).max_abs_difference(rc)
    if mismatch > Config.TOL_EXTRACTION:
        notes.append("numeric_extraction")
        phases = phases_from_coefficients(rc, hint=phases, structure="symmetric")
    return _build_solution(request, GateVariant.L4_SYMMETRIC, rc, phases, theta_target, notes)


# Comprimento 4 anti-simétrico

def _constraint_value(theta0: float, theta_target: float) -> float:
    """
    Valor de 2c1 + 4c2 na forma sem cancelamento
    v = cot(theta0/2) sin(thetaT/2) K / (1 + sqrt(R)).

    Raiz de (c1 + 2c2)^2 = a1 + 4a2, ou seja, 1 - A^2 - C^2 com raiz dupla
    em theta = 0; a outra raiz deixa max(A^2 + C^2) acima de 1.
    """
    sec2_base = 1.0 / math.cos(theta0 / 2) ** 2
    sec2_target = 1.0 / math.cos(theta_target / 4) ** 2
    K = sec2_base * (sec2_base - 2 * sec2_target)
    R = 1.0 + math.cos(theta_target / 2) * K
    if R < 0:
        raise _region_error(
            GateVariant.L4_ANTISYMMETRIC,
            theta0,
            theta_target,
            Texts.format(Texts.ERROR_NEGATIVE_RADICAND, R),
            _antisymmetric_failure(theta0, theta_target, reason="NEGATIVE_RADICAND", radicand=R),
        )
    return (1.0 / math.tan(theta0 / 2)) * math.sin(theta_target / 2) * K / (1.0 + math.sqrt(R))


def antisymmetric_constraint(theta0: float, theta_target: float) -> float:
    """
    Quinta equação da construção anti-simétrica: valor de 2c1 + 4c2.

    Raises:
        PreconditionError: thetaT fora de (0, 4 theta0]
        SingularityError: thetaT em {pi, 2pi}; use solve_length4_antisymmetric
        RegionError: radicando negativo
    """
    if not 0 < theta_target <= 4 * theta0 + 1e-12:
        raise PreconditionError(Texts.format(Texts.ERROR_PRECONDITION_4THETA0, theta_target, 4 * theta0))
    for singular in (math.pi, TWO_PI):
        if abs(theta_target - singular) <= _SINGULAR_TOL:
            raise SingularityError(theta_target)
    return _constraint_value(theta0, theta_target)


def length4_system(theta0: float, theta_target: float) -> Tuple[np.ndarray, np.ndarray]:
    """As quatro restrições comuns, nas incógnitas (a0, a1, a2, c1, c2)."""
    cT, sT = math.cos(theta_target / 2), math.sin(theta_target / 2)
    s1, s2 = math.sin(theta0), math.sin(2 * theta0)
    k1, k2 = math.cos(theta0), math.cos(2 * theta0)
    matrix = np.array([
        [1.0, 1.0, 1.0, 0.0, 0.0],
        [1.0, k1, k2, 0.0, 0.0],
        [0.0, 0.0, 0.0, s1, s2],
        [0.0, cT * s1, 2 * cT * s2, sT * k1, 2 * sT * k2],
    ])
    rhs = np.array([1.0, cT, -sT, 0.0])
    return matrix, rhs


def _antisymmetric_direct(theta0: float, theta_target: float, notes: List[str]) -> np.ndarray:
    base, rhs = length4_system(theta0, theta_target)
    matrix = np.vstack([base, [0.0, 0.0, 0.0, 2.0, 4.0]])
    vector = np.append(rhs, _constraint_value(theta0, theta_target))
    return _solve_linear(matrix, vector, notes)


def _project_onto_constraints(theta0: float, theta_target: float, x: np.ndarray) -> np.ndarray:
    matrix, rhs = length4_system(theta0, theta_target)
    return x - np.linalg.pinv(matrix) @ (matrix @ x - rhs)


def _antisymmetric_limit(theta0: float, theta_target: float, notes: List[str]) -> np.ndarray:
    eps1, eps2 = Config.SINGULAR_EPSILONS
    if abs(theta_target - math.pi) <= eps2:
        center = math.pi
        offsets = np.array([-eps2, -eps1, eps1, eps2])
    else:
        center = TWO_PI
        offsets = np.array([-eps2, -eps1])
    logger.debug(Texts.format(Texts.LOG_SYNTHESIS_LIMIT, theta_target, (center + offsets).tolist()))
    samples = np.array([_antisymmetric_direct(theta0, center + o, []) for o in offsets])
    degree = len(offsets) - 1
    where = theta_target - center
    extrapolated = np.array([np.polyval(np.polyfit(offsets, samples[:, j], degree), where) for j in range(5)])
    notes.append("singular_limit")
    return _project_onto_constraints(theta0, theta_target, extrapolated)


def antisymmetric_coefficients(theta0: float, theta_target: float) -> Tuple[ResponseCoefficients, List[str]]:
    """
    Resolve o sistema 5x5 (quatro restrições e a equação anti-simétrica)
    para thetaT em [0, 2pi], usando o procedimento de limite perto de pi e 2pi.
    """
    notes: List[str] = []
    if theta_target <= _SINGULAR_TOL:
        return ResponseCoefficients(4, [1.0, 0.0, 0.0], [0.0, 0.0]), ["identity"]
    if theta_target > 4 * theta0 + 1e-12:
        raise PreconditionError(Texts.format(Texts.ERROR_PRECONDITION_4THETA0, theta_target, 4 * theta0))
    eps1, eps2 = Config.SINGULAR_EPSILONS
    near_pi = abs(theta_target - math.pi) <= eps2
    near_two_pi = theta_target >= TWO_PI - eps1
    if near_pi or near_two_pi:
        x = _antisymmetric_limit(theta0, theta_target, notes)
    else:
        x = _antisymmetric_direct(theta0, theta_target, notes)
    return ResponseCoefficients(4, x[:3], x[3:]), notes


IDENTITY_ANTISYMMETRIC = PhaseSequence([math.pi / 2, -math.pi / 2, math.pi / 2, -math.pi / 2])


def solve_length4_antisymmetric(theta0: float, theta_target: float) -> GateSolution:
    """
    Porta anti-simétrica de comprimento 4 (phi2 = -phi1, phi3 = -phi0).

    Raises:
        PreconditionError: thetaT > 4 theta0
        RegionError: coeficientes não realizáveis
    """
    request = GateRequest(theta0, theta_target, GateVariant.L4_ANTISYMMETRIC)
    rc, notes = antisymmetric_coefficients(theta0, theta_target)
    if "identity" in notes:
        return _build_solution(request, GateVariant.L4_ANTISYMMETRIC, rc, IDENTITY_ANTISYMMETRIC, 0.0, notes)
    report = check_achievable(rc)
    try:
        if not report.achievable:
            raise _region_error(
                GateVariant.L4_ANTISYMMETRIC,
                theta0,
                theta_target,
                f"max_norm={report.max_norm:.12g}",
                _antisymmetric_failure(theta0, theta_target, max_norm=float(report.max_norm)),
            )
        phases = phases_from_coefficients(rc, structure="antisymmetric")
        return _build_solution(request, GateVariant.L4_ANTISYMMETRIC, rc, phases, theta_target, notes)
    except (RegionError, ExtractionError, InternalConsistencyError):
        if "singular_limit" in notes and g4(theta0, theta_target) <= Config.TOL_BOUNDARY:
            solution = solve_length4_symmetric(theta0, theta_target)
            solution.notes.append("fallback_symmetric")
            return solution
        raise


def extend_negative_target(s: PhaseSequence) -> PhaseSequence:
    """
    Soma pi a todas as fases: R_{phi+pi}[theta] = R_phi[-theta], logo a
    sequência passa a implementar R_0[-thetaT].
    """
    return s.shifted(math.pi)


# Fachada

_SOLVERS = {
    GateVariant.L3: solve_length3,
    GateVariant.L4_SYMMETRIC: solve_length4_symmetric,
    GateVariant.L4_ANTISYMMETRIC: solve_length4_antisymmetric,
}


def variant_verdict(variant: GateVariant, theta0: float, theta_target: float) -> Dict:
    """
    Veredicto de validade de uma variante em (theta0, thetaT), avaliado em |thetaT|
    após o mapeamento de (2pi, 4pi].
    """
    _, magnitude, _ = map_target(theta_target)
    verdict: Dict = {"variant": variant.value, "theta0_rad": theta0, "thetaT_rad": theta_target}
    if variant is GateVariant.L3:
        value = g3(theta0, magnitude)
        verdict.update(g=value, valid=value <= Config.TOL_BOUNDARY)
    elif variant is GateVariant.L4_SYMMETRIC:
        value = g4(theta0, magnitude)
        verdict.update(g=value, valid=value <= Config.TOL_BOUNDARY)
    else:
        try:
            rc, _ = antisymmetric_coefficients(theta0, magnitude)
        except (PreconditionError, RegionError, DegenerateSystemError) as error:
            verdict.update(valid=False, reason=error.error_code)
            if isinstance(error, RegionError) and error.diagnostics and "radicand" in error.diagnostics[0]:
                verdict["radicand"] = error.diagnostics[0]["radicand"]
            return verdict
        report = check_achievable(rc)
        verdict.update(valid=bool(report.achievable), max_norm=float(report.max_norm))
    return verdict


def variant_diagnostics(theta0: float, theta_target: float) -> List[Dict]:
    return [variant_verdict(variant, theta0, theta_target) for variant in GateVariant]


def _auto_order(theta0: float, magnitude: float) -> Sequence[GateVariant]:
    order = [GateVariant.L4_ANTISYMMETRIC, GateVariant.L3]
    if g4(theta0, magnitude) <= Config.TOL_BOUNDARY:
        order.insert(0, GateVariant.L4_SYMMETRIC)
    return order


def synthesize(req: GateRequest) -> GateSolution:
    """
    Despacha para o resolvedor da variante, aplica a identidade de alvo
    negativo e verifica o resultado no oráculo. Uma solução não verificada
    nunca é devolvida.

    Raises:
        RegionError: fora da região da variante pedida (com diagnósticos por variante)
        NoVariantCoversError: seleção automática sem variante válida
    """
    effective, magnitude, negative = map_target(req.theta_target)
    if req.variant is not None:
        try:
            solution = _SOLVERS[req.variant](req.theta0, magnitude)
        except (RegionError, PreconditionError) as error:
            raise RegionError(error.message, variant_diagnostics(req.theta0, req.theta_target)) from error
    else:
        solution = None
        for variant in _auto_order(req.theta0, magnitude):
            try:
                solution = _SOLVERS[variant](req.theta0, magnitude)
                break
            except (RegionError, PreconditionError, DegenerateSystemError, ExtractionError):
                continue
        if solution is None:
            raise NoVariantCoversError(req.theta0, req.theta_target, variant_diagnostics(req.theta0, req.theta_target))

    phases = extend_negative_target(solution.phases) if negative else solution.phases
    notes = list(solution.notes) + (["negative_target"] if negative else [])
    final = _build_solution(req, solution.variant, solution.coefficients, phases, effective, notes)
    logger.log_synthesis(final.variant.value, req.theta0, req.theta_target, final.fidelity_at_theta0)
    return final


def robustness_profile(solution: GateSolution, offsets: Sequence[float]) -> Dict:
    """
    Infidelidade 1 - F em theta0 + delta e o coeficiente quadrático ajustado.
    A derivada primeira se anula no ponto de projeto, então a infidelidade
    cresce como kappa * delta^2.
    """
    deltas = np.asarray(offsets, dtype=float)
    theta0 = solution.request.theta0
    infidelity = np.array([
        1.0 - fidelity(solution.effective_target, compose_sequence(solution.phases, theta0 + d)) for d in deltas
    ])
    weight = float(np.sum(deltas ** 4))
    curvature = float(np.sum(deltas ** 2 * infidelity) / weight) if weight > 0 else 0.0
    return {"offsets_rad": deltas.tolist(), "infidelity": infidelity.tolist(), "curvature": curvature}
