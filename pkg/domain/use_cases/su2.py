"""
Álgebra exata de SU(2): rotações primitivas, composição de sequências,
decomposição de Pauli e fidelidade. Serve de oráculo para os demais módulos.
"""
import math
from typing import Sequence, Tuple, Union

import numpy as np

from domain.entities.su2 import PauliDecomposition, PhaseSequence, Rotation, Unitary2
from domain.exceptions.custom_exceptions import ContractViolationError, DomainError
from shared.constants.config import Config
from shared.constants.texts import Texts

PhasesLike = Union[PhaseSequence, Sequence[float], np.ndarray]


def rotation_array(phase: float, angle: float) -> np.ndarray:
    c = math.cos(angle / 2)
    s = math.sin(angle / 2)
    return np.array(
        [[c, -1j * s * np.exp(-1j * phase)], [-1j * s * np.exp(1j * phase), c]],
        dtype=complex,
    )


def rotation_matrix(r: Rotation) -> Unitary2:
    """
    Matriz de R_phi[theta] = cos(theta/2) I - i sin(theta/2)(cos(phi) X + sin(phi) Y).
    """
    return Unitary2(rotation_array(r.phase, r.angle))


def _phase_array(s: PhasesLike) -> np.ndarray:
    phases = s.as_array() if isinstance(s, PhaseSequence) else np.asarray(s, dtype=float)
    if phases.size == 0:
        raise DomainError(Texts.ERROR_EMPTY_SEQUENCE)
    if not np.all(np.isfinite(phases)):
        raise DomainError(Texts.format(Texts.ERROR_NON_FINITE, phases.tolist()))
    return phases


def compose_sequence(s: PhasesLike, theta: float) -> Unitary2:
    """
    Compõe R_{phi_{L-1}}[theta] ... R_{phi_1}[theta] R_{phi_0}[theta].

    Args:
        s: Sequência de fases (phi_0 atua primeiro)
        theta: Rotação base de cada pulso

    Raises:
        DomainError: sequência vazia ou entradas não finitas
    """
    if not math.isfinite(theta):
        raise DomainError(Texts.format(Texts.ERROR_NON_FINITE, theta))
    phases = _phase_array(s)
    product = np.eye(2, dtype=complex)
    for phase in phases:
        product = rotation_array(float(phase), theta) @ product
    return Unitary2(product)


def compose_sequence_batch(s: PhasesLike, thetas: np.ndarray) -> np.ndarray:
    """
    Versão vetorizada de compose_sequence; devolve um array (N, 2, 2).
    """
    phases = _phase_array(s)
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    c = np.cos(thetas / 2)
    s_half = np.sin(thetas / 2)
    product = np.broadcast_to(np.eye(2, dtype=complex), (thetas.size, 2, 2)).copy()
    for phase in phases:
        factor = np.empty((thetas.size, 2, 2), dtype=complex)
        factor[:, 0, 0] = c
        factor[:, 1, 1] = c
        factor[:, 0, 1] = -1j * s_half * np.exp(-1j * phase)
        factor[:, 1, 0] = -1j * s_half * np.exp(1j * phase)
        product = np.matmul(factor, product)
    return product


def pauli_components(matrices: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Componentes (A, B, C, D) sem escolha de ramo, para pilhas de matrizes SU(2).
    """
    u00 = matrices[..., 0, 0]
    u01 = matrices[..., 0, 1]
    u10 = matrices[..., 1, 0]
    u11 = matrices[..., 1, 1]
    A = ((u00 + u11) / 2).real
    B = ((u00 - u11) / 2j).real
    C = ((u01 + u10) / 2j).real
    D = ((u01 - u10) / 2).real
    return A, B, C, D


def _canonical_branch(values: Tuple[float, float, float, float]) -> Tuple[float, float, float, float]:
    for value in values:
        if abs(value) > Config.TOL_ALGEBRAIC:
            if value < 0:
                return tuple(-v for v in values)  # type: ignore[return-value]
            break
    return values


def pauli_decompose(u: Unitary2, canonical: bool = True) -> PauliDecomposition:
    """
    Decompõe u = A I + i(B Z + C X + D Y).

    Uma matriz unitária com determinante diferente de 1 é primeiro dividida
    por sqrt(det u). Com canonical=True devolve o ramo com A >= 0 (ou B >= 0
    quando A se anula, e assim por diante).

    Raises:
        ContractViolationError: se u não for unitária a 1e-9
    """
    error = u.unitarity_error()
    if error > Config.TOL_CONTRACT:
        raise ContractViolationError(Texts.format(Texts.ERROR_NOT_UNITARY, error))
    matrix = u.matrix
    det = np.linalg.det(matrix)
    if abs(det - 1.0) > Config.TOL_ALGEBRAIC:
        matrix = matrix / np.sqrt(det)
    A, B, C, D = (float(x) for x in pauli_components(matrix))
    values = (A, B, C, D)
    if canonical:
        values = _canonical_branch(values)
    return PauliDecomposition(*values)


def fidelity(theta_target: float, u: Unitary2) -> float:
    """
    |cos(thetaT/2) A - sin(thetaT/2) C|, a fidelidade em relação a R_0[thetaT].
    """
    d = pauli_decompose(u, canonical=False)
    value = abs(math.cos(theta_target / 2) * d.A - math.sin(theta_target / 2) * d.C)
    return min(1.0, float(value))


def trace_fidelity(theta_target: float, u: Unitary2) -> float:
    """Forma equivalente (1/2)|tr(R_0[thetaT] u^dagger)|."""
    target = rotation_array(0.0, theta_target)
    return min(1.0, float(abs(np.trace(target @ u.matrix.conj().T)) / 2))


def excited_population(u: Unitary2) -> float:
    """
    |<1|u|0>|^2: população do estado excitado após aplicar u a |0>.
    """
    return float(min(1.0, max(0.0, abs(u[1, 0]) ** 2)))

