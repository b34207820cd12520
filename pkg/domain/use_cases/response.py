"""
Funções de resposta A[theta], C[theta]: mapa direto a partir das fases,
verificação de realizabilidade e extração numérica de fases.
"""
import math
from typing import Callable, List, Optional, Sequence

import numpy as np
from scipy.optimize import least_squares, minimize_scalar

from domain.entities.response import AchievabilityReport, ResponseCoefficients, AchievabilityCondition
from domain.entities.su2 import PhaseSequence
from domain.exceptions.custom_exceptions import (
    ExtractionError,
    InternalConsistencyError,
    PreconditionError,
)
from domain.use_cases.su2 import compose_sequence_batch, pauli_components
from shared.constants.config import Config
from shared.constants.texts import Texts
from shared.utils.logger import Logger

logger = Logger(__name__)

STRUCTURES = (None, "symmetric", "antisymmetric")


def evaluate(rc: ResponseCoefficients, theta):
    """Avalia (A, C) na base apropriada à paridade de L."""
    return rc.evaluate(theta)


def interpolation_nodes(count: int) -> np.ndarray:
    """Nós theta_j = pi (j + 1/2) / count, todos em (0, pi)."""
    return math.pi * (np.arange(count) + 0.5) / count


def _response_samples(phases: np.ndarray, thetas: np.ndarray):
    A, _, C, _ = pauli_components(compose_sequence_batch(phases, thetas))
    return A, C


def coefficients_from_phases(s: PhaseSequence) -> ResponseCoefficients:
    """
    Mapa direto: amostra A e C da sequência e resolve os sistemas
    quadrados de interpolação para os coeficientes.

    Raises:
        InternalConsistencyError: sistema singular ou resíduo > 1e-9 nos pontos de checagem
    """
    phases = s.as_array()
    length = s.length
    template = ResponseCoefficients(length, np.zeros(_a_count(length)), np.zeros(_c_count(length)))

    a_nodes = interpolation_nodes(_a_count(length))
    c_nodes = interpolation_nodes(_c_count(length))
    A_samples, _ = _response_samples(phases, a_nodes)
    _, C_samples = _response_samples(phases, c_nodes)
    try:
        a = np.linalg.solve(template.a_basis(a_nodes), A_samples)
        c = np.linalg.solve(template.c_basis(c_nodes), C_samples)
    except np.linalg.LinAlgError:
        raise InternalConsistencyError(Texts.format(Texts.ERROR_FORWARD_SINGULAR, length)) from None
    rc = ResponseCoefficients(length, a, c)

    checks = 2 * math.pi * (np.arange(4 * length) + 0.3141) / (4 * length)
    A_check, C_check = _response_samples(phases, checks)
    A_fit, C_fit = rc.evaluate(checks)
    residual = float(max(np.max(np.abs(A_fit - A_check)), np.max(np.abs(C_fit - C_check))))
    if residual > Config.TOL_FORWARD_RESIDUAL:
        raise InternalConsistencyError(Texts.format(Texts.ERROR_FORWARD_RESIDUAL, residual))
    return rc


def _a_count(length: int) -> int:
    return (length + 1) // 2 if length % 2 else length // 2 + 1


def _c_count(length: int) -> int:
    return (length + 1) // 2 if length % 2 else length // 2


def check_achievable(rc: ResponseCoefficients) -> AchievabilityReport:
    """
    Avalia A^2 + C^2 numa grade densa de [0, 2pi) e refina o máximo
    localmente. A paridade vale por construção da base, então só as
    condições A[0] = 1 e a cota da norma podem falhar.
    """
    count = max(4096, 64 * rc.length)
    grid = 2 * math.pi * np.arange(count) / count
    A, C = rc.evaluate(grid)
    norms = A ** 2 + C ** 2
    index = int(np.argmax(norms))
    max_norm = float(norms[index])
    argmax = float(grid[index])

    step = 2 * math.pi / count
    refined = minimize_scalar(
        lambda t: -_norm_at(rc, t),
        bounds=(argmax - step, argmax + step),
        method="bounded",
        options={"xatol": Config.TOL_ANGLE_REFINE},
    )
    if refined.success and -refined.fun > max_norm:
        max_norm = float(-refined.fun)
        argmax = float(refined.x) % (2 * math.pi)

    failures: List[AchievabilityCondition] = []
    a0 = rc.a_at_zero()
    if abs(a0 - 1.0) > Config.TOL_ACHIEVABLE:
        failures.append(AchievabilityCondition.A_AT_ZERO)
    if max_norm > 1.0 + Config.TOL_ACHIEVABLE:
        failures.append(AchievabilityCondition.NORM_BOUND)
    return AchievabilityReport(
        achievable=not failures,
        max_norm=max_norm,
        argmax_theta=argmax,
        a_at_zero=a0,
        condition_failures=failures,
    )


def _norm_at(rc: ResponseCoefficients, theta: float) -> float:
    A, C = rc.evaluate(theta)
    return A * A + C * C


def _expand(structure: Optional[str], length: int) -> Callable[[np.ndarray], np.ndarray]:
    if structure == "antisymmetric":
        return lambda x: np.array([x[0], x[1], -x[1], -x[0]])
    if structure == "symmetric":
        return lambda x: np.array([x[0], x[1], x[1], x[0]])
    return lambda x: np.asarray(x, dtype=float)


def _free_count(structure: Optional[str], length: int) -> int:
    return 2 if structure in ("symmetric", "antisymmetric") else length


def _reduce(structure: Optional[str], phases: np.ndarray) -> np.ndarray:
    if structure in ("symmetric", "antisymmetric"):
        return np.array([phases[0], phases[1]])
    return np.asarray(phases, dtype=float)


def _search(
    rc: ResponseCoefficients,
    structure: Optional[str],
    seeds: Sequence[np.ndarray],
    starts: int,
    seed: int,
):
    length = rc.length
    expand = _expand(structure, length)
    thetas = interpolation_nodes(2 * length + 2)
    A_target, C_target = rc.evaluate(thetas)

    def residual(x: np.ndarray) -> np.ndarray:
        A, C = _response_samples(expand(x), thetas)
        return np.concatenate([A - A_target, C - C_target])

    rng = np.random.default_rng(seed)
    random_starts = rng.uniform(-math.pi, math.pi, size=(starts, _free_count(structure, length)))
    candidates = [_reduce(structure, np.asarray(s, dtype=float)) for s in seeds] + list(random_starts)

    best_error = math.inf
    best_phases = None
    best_index = -1
    for index, x0 in enumerate(candidates):
        result = least_squares(residual, x0, xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=400)
        candidate = PhaseSequence(expand(result.x))
        error = coefficients_from_phases(candidate).max_abs_difference(rc)
        if error < best_error:
            best_error, best_phases, best_index = error, candidate, index
        if error <= Config.TOL_EXTRACTION:
            break
    return best_phases, best_error, best_index


def phases_from_coefficients(
    rc: ResponseCoefficients,
    hint: Optional[PhaseSequence] = None,
    structure: Optional[str] = None,
    seeds: Sequence[PhaseSequence] = (),
    starts: int = Config.EXTRACTION_STARTS,
    seed: int = Config.EXTRACTION_SEED,
) -> PhaseSequence:
    """
    Extrai uma sequência de fases cujos coeficientes reproduzem rc.

    Mínimos quadrados sobre o resíduo de A e C em nós de interpolação,
    com múltiplos inícios em ordem fixa: a dica, as sementes fornecidas e
    `starts` inícios aleatórios semeados. O primeiro início com erro de
    coeficientes <= 1e-8 é devolvido; sem sucesso, lança ExtractionError
    com o melhor resíduo (empates resolvidos pelo menor índice). Com
    `structure`, a busca fica restrita à família pedida.

    Args:
        rc: Coeficientes alvo (L <= 4)
        hint: Sequência inicial opcional
        structure: None, "symmetric" ou "antisymmetric" (apenas L = 4)
        seeds: Inícios adicionais, tentados após a dica
        starts: Número de inícios aleatórios
        seed: Semente do gerador dos inícios aleatórios
    """
    if rc.length > Config.MAX_SEQUENCE_LENGTH:
        raise PreconditionError(Texts.format(Texts.ERROR_EXTRACTION_TOO_LONG, Config.MAX_SEQUENCE_LENGTH))
    if structure not in STRUCTURES or (structure is not None and rc.length != 4):
        raise PreconditionError(Texts.format(Texts.ERROR_BAD_LENGTH, rc.length))

    report = check_achievable(rc)
    if not report.achievable:
        raise ExtractionError(
            report.max_norm - 1.0,
            Texts.format(Texts.ERROR_EXTRACTION_NOT_ACHIEVABLE, report.max_norm),
        )

    initial = ([hint.as_array()] if hint is not None else []) + [s.as_array() for s in seeds]
    phases, error, index = _search(rc, structure, initial, starts, seed)
    if error > Config.TOL_EXTRACTION:
        raise ExtractionError(error)
    logger.debug(Texts.format(Texts.LOG_EXTRACTION_DONE, rc.length, index, error))
    return phases
