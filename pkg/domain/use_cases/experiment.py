"""
Simulação dos experimentos: varredura Ramsey de deslocamento, varreduras
compostas de uma zona e portas paralelas em duas zonas, com erros SPAM e
ruído binomial de disparos. Inclui ajuste de contraste e correlação de
resíduos entre zonas.
"""
import math
import warnings
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import OptimizeWarning, curve_fit

from domain.entities.beam import BeamModel, TrapAWGModel, Zone
from domain.entities.experiment import ContrastFit, ScanResult, SPAMModel, TimingSequence, as_float_array
from domain.entities.gate import GateRequest, GateSolution, GateVariant
from domain.entities.su2 import PhaseSequence
from domain.exceptions.custom_exceptions import (
    CalibrationError,
    DomainError,
    FitError,
    PreconditionError,
    RegionError,
    UndefinedCorrelationError,
)
from domain.use_cases.beam_trap import (
    base_rotation,
    calibrate_pulse_duration,
    check_zone_budget,
    phase_to_displacement,
    quantize_phase,
    zone_rabi,
)
from domain.use_cases.su2 import compose_sequence, excited_population
from domain.use_cases.synthesis import synthesize
from shared.constants.config import Config
from shared.constants.texts import Texts
from shared.utils.logger import Logger

logger = Logger(__name__)


def point_rng(seed: int, zone_index: int, point_index: int) -> np.random.Generator:
    """Fluxo contador por (semente, zona, ponto): independe da ordem de avaliação."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, zone_index, point_index])))


def _check_shots(shots: int) -> int:
    if isinstance(shots, bool) or int(shots) != shots or shots < 0:
        raise DomainError(Texts.format(Texts.ERROR_SHOTS, shots))
    return int(shots)


def observe(
    ideal: np.ndarray, spam: SPAMModel, shots: int, seed: int, zone_index: int = 0
) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """
    Aplica o mapa SPAM e amostra binomialmente; shots = 0 é o modo sem ruído.

    Returns:
        (populações médias, contagens ou None)
    """
    shots = _check_shots(shots)
    probabilities = np.clip(spam.apply(ideal), 0.0, 1.0)
    if shots == 0:
        return np.atleast_1d(probabilities).astype(float), None
    counts = np.array(
        [point_rng(seed, zone_index, i).binomial(shots, p) for i, p in enumerate(np.atleast_1d(probabilities))]
    )
    return counts / shots, counts


def _population(phases: Sequence[float], theta: float) -> float:
    return excited_population(compose_sequence(phases, theta))


def ramsey_scan(
    beam: BeamModel,
    zone: Zone,
    delta_phis: Sequence[float],
    spam: Optional[SPAMModel] = None,
    shots: int = 0,
    seed: int = Config.DEFAULT_SEED,
    pulse_duration: Optional[float] = None,
) -> ScanResult:
    """
    Dois pulsos pi/2 com o segundo deslocado em fase: U = R_dphi[pi/2] R_0[pi/2].

    Sem duração informada, o pulso é calibrado para pi/2 na zona.

    Raises:
        CalibrationError: rotação base da zona diferente de pi/2 (tolerância 1e-9)
    """
    spam = spam or SPAMModel.ideal()
    x = as_float_array(delta_phis)
    t_p = pulse_duration if pulse_duration is not None else (math.pi / 2) / zone_rabi(beam, zone)
    theta = base_rotation(beam, zone, t_p)
    if abs(theta - math.pi / 2) > Config.TOL_CALIBRATION:
        raise CalibrationError(Texts.format(Texts.ERROR_RAMSEY_CALIBRATION, theta, zone.label))

    ideal = np.array([_population([0.0, phi], theta) for phi in x])
    observed, counts = observe(ideal, spam, shots, seed)
    logger.log_scan("ramsey", x.size, shots, seed)
    return ScanResult(
        kind="ramsey",
        label=f"ramsey_{zone.label}",
        x_values=x,
        populations={zone.label: observed},
        ideal={zone.label: ideal},
        shots=shots,
        seed=seed,
        counts={zone.label: counts},
        metadata={
            "x": "delta_phi_rad",
            "pulse_duration_s": t_p,
            "base_rotation_rad": theta,
            "spam": spam.to_dict(),
            "timing": TimingSequence.ramsey(t_p).to_dict(),
        },
    )


def _synthesize_at(theta0: float, target: float, variant: Optional[GateVariant]) -> GateSolution:
    try:
        return synthesize(GateRequest(theta0, target, variant))
    except RegionError as error:
        raise RegionError(
            Texts.format(Texts.ERROR_SCAN_TARGET, target, error.message), error.diagnostics, error.error_code
        ) from error


def composite_scan(
    beam: BeamModel,
    zone: Zone,
    theta0: float,
    thetaT_values: Sequence[float],
    variant: Optional[GateVariant] = None,
    spam: Optional[SPAMModel] = None,
    shots: int = 0,
    seed: int = Config.DEFAULT_SEED,
    pulse_duration: Optional[float] = None,
) -> ScanResult:
    """
    Para cada thetaT sintetiza a porta no theta0 de projeto e a compõe na
    rotação base real da zona. Sem duração informada, t_p = theta0/Omega_zona.

    Raises:
        RegionError: alvo fora da região, com o thetaT ofensor na mensagem
    """
    spam = spam or SPAMModel.ideal()
    targets = as_float_array(thetaT_values)
    t_p = pulse_duration if pulse_duration is not None else theta0 / zone_rabi(beam, zone)
    actual = base_rotation(beam, zone, t_p)

    solutions: Dict[float, GateSolution] = {}
    ideal = np.empty(targets.size)
    for index, target in enumerate(targets):
        key = float(target)
        if key not in solutions:
            solutions[key] = _synthesize_at(theta0, key, variant)
        ideal[index] = _population(solutions[key].phases.as_array(), actual)
    observed, counts = observe(ideal, spam, shots, seed)
    logger.log_scan("composite", targets.size, shots, seed, {"theta0": theta0, "zone": zone.label})
    return ScanResult(
        kind="composite",
        label=f"theta0={theta0 / math.pi:.4g}pi",
        x_values=targets,
        populations={zone.label: observed},
        ideal={zone.label: np.sin(targets / 2) ** 2},
        shots=shots,
        seed=seed,
        counts={zone.label: counts},
        metadata={
            "x": "thetaT_rad",
            "theta0_rad": theta0,
            "base_rotation_rad": actual,
            "pulse_duration_s": t_p,
            "variants": sorted({s.variant.value for s in solutions.values()}),
            "spam": spam.to_dict(),
            "timing": TimingSequence.composite(t_p).to_dict(),
        },
    )


def realize_phases(
    phases: PhaseSequence, trap: Optional[TrapAWGModel], wavelength_m: float, zone: Zone
) -> Tuple[np.ndarray, List[int]]:
    """
    Fases efetivamente aplicadas: cada fase vira um deslocamento da zona,
    arredondado pelo DAC quando há modelo de armadilha.
    """
    realized: List[float] = []
    codes: List[int] = []
    for phase in phases:
        check_zone_budget(zone.with_displacement(phase_to_displacement(wavelength_m, phase)), wavelength_m)
        if trap is None:
            realized.append(phase)
            continue
        actual, code = quantize_phase(trap, wavelength_m, phase)
        realized.append(actual)
        codes.append(code)
    return np.array(realized), codes


def two_zone_scan(
    beam: BeamModel,
    zones: Sequence[Zone],
    scanned_zone: str,
    constant_target: float,
    thetaT_values: Sequence[float],
    spam: Optional[SPAMModel] = None,
    shots: int = 0,
    seed: int = Config.DEFAULT_SEED,
    pulse_duration: Optional[float] = None,
    trap: Optional[TrapAWGModel] = None,
    quantize: bool = True,
    variant: Optional[GateVariant] = None,
) -> ScanResult:
    """
    Duas zonas sob os mesmos pulsos: a zona varrida percorre thetaT e a
    outra implementa um alvo constante. Cada zona usa sua própria sequência
    de fases, sintetizada na sua rotação base (seleção automática de variante
    quando nenhuma é dada). Por padrão as fases passam pelo modelo de DAC;
    quantize=False usa as fases ideais.

    Raises:
        CalibrationError: rotações base fora da janela de alcance completo
    """
    if len(zones) != 2:
        raise PreconditionError(Texts.format(Texts.ERROR_UNKNOWN_ZONE, [z.label for z in zones]))
    labels = [zone.label for zone in zones]
    if scanned_zone not in labels:
        raise DomainError(Texts.format(Texts.ERROR_UNKNOWN_ZONE, scanned_zone))
    spam = spam or SPAMModel.ideal()
    trap = trap or (TrapAWGModel(wavelength_m=beam.wavelength_m) if quantize else None)
    targets = as_float_array(thetaT_values)

    if pulse_duration is None:
        t_p = calibrate_pulse_duration(beam, zones)
    else:
        t_p = pulse_duration
    thetas = {zone.label: base_rotation(beam, zone, t_p) for zone in zones}
    for zone in zones:
        theta = thetas[zone.label]
        if not Config.FULL_RANGE_MIN - Config.TOL_CALIBRATION <= theta <= Config.FULL_RANGE_MAX + Config.TOL_CALIBRATION:
            raise CalibrationError(
                Texts.format(
                    Texts.ERROR_OUTSIDE_WINDOW, zone.label, theta, Config.FULL_RANGE_MIN, Config.FULL_RANGE_MAX
                )
            )

    populations: Dict[str, np.ndarray] = {}
    ideal: Dict[str, np.ndarray] = {}
    counts: Dict[str, Optional[np.ndarray]] = {}
    max_phase_error = 0.0
    for zone_index, zone in enumerate(zones):
        theta = thetas[zone.label]
        scanned = zone.label == scanned_zone
        zone_targets = targets if scanned else np.full(targets.size, constant_target)
        cache: Dict[float, np.ndarray] = {}
        values = np.empty(targets.size)
        for index, target in enumerate(zone_targets):
            key = float(target)
            if key not in cache:
                solution = _synthesize_at(theta, key, variant)
                realized, _ = realize_phases(solution.phases, trap if quantize else None, beam.wavelength_m, zone)
                max_phase_error = max(max_phase_error, float(np.max(np.abs(realized - solution.phases.as_array()))))
                cache[key] = realized
            values[index] = _population(cache[key], theta)
        populations[zone.label], counts[zone.label] = observe(values, spam, shots, seed, zone_index)
        ideal[zone.label] = np.sin(zone_targets / 2) ** 2

    logger.log_scan("two_zone", targets.size, shots, seed, {"scanned": scanned_zone, "constant": constant_target})
    return ScanResult(
        kind="two_zone",
        label=f"scan_{scanned_zone}_constant={constant_target / math.pi:.4g}pi",
        x_values=targets,
        populations=populations,
        ideal=ideal,
        shots=shots,
        seed=seed,
        counts=counts,
        metadata={
            "x": "thetaT_rad",
            "scanned_zone": scanned_zone,
            "constant_target_rad": constant_target,
            "pulse_duration_s": t_p,
            "base_rotations_rad": thetas,
            "quantized": quantize,
            "max_phase_error_rad": max_phase_error,
            "spam": spam.to_dict(),
            "timing": TimingSequence.composite(t_p).to_dict(),
        },
    )


def _fringe(x, offset, contrast, phase_offset):
    return offset + (contrast / 2) * (1 - np.cos(x + phase_offset))


def _weights(population: np.ndarray, counts: Optional[np.ndarray], shots: int) -> Optional[np.ndarray]:
    if not shots:
        return None
    k = counts if counts is not None else np.round(population * shots)
    estimate = (k + 0.5) / (shots + 1)
    return np.sqrt(estimate * (1 - estimate) / shots)


def fit_contrast(scan: ScanResult, zone: Optional[str] = None) -> ContrastFit:
    """
    Ajusta p(x) = offset + (contrast/2)(1 - cos(x + delta)).

    O problema é linear em (alpha, beta, gamma) com p = alpha + beta cos x + gamma sin x;
    a solução linear inicia um curve_fit com pesos binomiais, cuja covariância
    dá a incerteza. Dados sem ruído são ajustados sem pesos.

    Raises:
        FitError: menos de 8 pontos, menos de uma franja ou ajuste sem convergência
    """
    x = np.asarray(scan.x_values, dtype=float)
    y = scan.population(zone)
    key = scan.zone_labels[0] if zone is None else zone
    if x.size < Config.MIN_FIT_POINTS or np.ptp(x) < 2 * math.pi * (1 - 1e-9):
        raise FitError(Texts.format(Texts.ERROR_FIT_POINTS, Config.MIN_FIT_POINTS))
    sigma = _weights(y, scan.counts.get(key), scan.shots)

    design = np.column_stack([np.ones_like(x), np.cos(x), np.sin(x)])
    scale = np.ones_like(x) if sigma is None else 1.0 / sigma
    linear, _, rank, _ = np.linalg.lstsq(design * scale[:, None], y * scale, rcond=None)
    if rank < 3:
        raise FitError(Texts.format(Texts.ERROR_FIT_FAILED, "rank"))
    alpha, beta, gamma = linear
    contrast0 = 2 * math.hypot(beta, gamma)
    start = [alpha - contrast0 / 2, contrast0, math.atan2(gamma, -beta)]

    try:
        with warnings.catch_warnings():
            warnings.simplefilter("error", OptimizeWarning)
            params, covariance = curve_fit(
                _fringe, x, y, p0=start, sigma=sigma, absolute_sigma=sigma is not None, maxfev=2000
            )
    except (RuntimeError, OptimizeWarning, ValueError):
        residual = float(np.sqrt(np.mean((design @ linear - y) ** 2)))
        raise FitError(Texts.format(Texts.ERROR_FIT_FAILED, residual), residual) from None

    offset, contrast, phase_offset = (float(p) for p in params)
    if contrast < 0:
        contrast, phase_offset = -contrast, phase_offset + math.pi
        offset = offset - contrast
    residual = float(np.sqrt(np.mean((_fringe(x, *params) - y) ** 2)))
    errors = np.sqrt(np.clip(np.diag(covariance), 0.0, None))
    fit = ContrastFit(
        contrast=contrast,
        offset=offset,
        phase_offset=float(math.remainder(phase_offset, 2 * math.pi)),
        uncertainty=float(errors[1]),
        offset_uncertainty=float(errors[0]),
        residual_rms=residual,
        points=int(x.size),
        weighted=sigma is not None,
    )
    logger.info(Texts.format(Texts.LOG_FIT, f"{fit.contrast:.6f}", f"{fit.uncertainty:.2g}"))
    return fit


def residual_correlation(residuals_a: Sequence[float], residuals_b: Sequence[float]) -> float:
    """
    Correlação de Pearson entre dois vetores de resíduos.

    Raises:
        PreconditionError: comprimentos diferentes
        UndefinedCorrelationError: variância nula
    """
    a = np.asarray(residuals_a, dtype=float)
    b = np.asarray(residuals_b, dtype=float)
    if a.shape != b.shape:
        raise PreconditionError(Texts.format(Texts.ERROR_CORRELATION_LENGTH, a.size, b.size))
    da, db = a - a.mean(), b - b.mean()
    norm = math.sqrt(float(np.dot(da, da)) * float(np.dot(db, db)))
    if norm == 0.0:
        raise UndefinedCorrelationError()
    return float(np.clip(np.dot(da, db) / norm, -1.0, 1.0))


def residual_covariance(
    scan_a: ScanResult,
    scan_b: ScanResult,
    zone_a: Optional[str] = None,
    zone_b: Optional[str] = None,
    ideal_a: Optional[Sequence[float]] = None,
    ideal_b: Optional[Sequence[float]] = None,
) -> float:
    """
    Covariância normalizada dos resíduos (observado - ideal) de duas zonas.
    Sem curvas ideais explícitas usa as armazenadas nas varreduras.
    """
    a = scan_a.population(zone_a) - (scan_a.ideal_curve(zone_a) if ideal_a is None else np.asarray(ideal_a))
    b = scan_b.population(zone_b) - (scan_b.ideal_curve(zone_b) if ideal_b is None else np.asarray(ideal_b))
    return residual_correlation(a, b)


def miscalibration_scan(
    theta0: float,
    theta_target: float,
    actual_rotations: Sequence[float],
    variant: Optional[GateVariant] = None,
) -> ScanResult:
    """
    População em thetaT fixo contra a rotação base real, para a porta
    composta projetada em theta0 e para um pulso único de duração ajustada
    a thetaT no ponto de projeto.
    """
    rotations = as_float_array(actual_rotations)
    solution = synthesize(GateRequest(theta0, theta_target, variant))
    composite = np.array([_population(solution.phases.as_array(), theta) for theta in rotations])
    single = np.sin(theta_target * rotations / theta0 / 2) ** 2
    ideal = np.full(rotations.size, math.sin(theta_target / 2) ** 2)
    return ScanResult(
        kind="miscalibration",
        label=f"thetaT={theta_target / math.pi:.4g}pi",
        x_values=rotations,
        populations={"composite": composite, "single": single},
        ideal={"composite": ideal, "single": ideal.copy()},
        shots=0,
        seed=0,
        counts={"composite": None, "single": None},
        metadata={"x": "base_rotation_rad", "theta0_rad": theta0, "variant": solution.variant.value},
    )
