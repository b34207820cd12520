import math
from dataclasses import dataclass
from typing import Any, Dict, Iterator, Sequence, Tuple

import numpy as np

from domain.exceptions.custom_exceptions import DomainError
from shared.constants.texts import Texts
from shared.utils.angles import wrap_phase


@dataclass(frozen=True)
class Rotation:
    """
    Rotação primitiva R_phi[theta] = exp(-i (theta/2)(cos(phi) X + sin(phi) Y)).
    """
    phase: float
    angle: float

    def __post_init__(self):
        if not (math.isfinite(self.phase) and math.isfinite(self.angle)):
            raise DomainError(Texts.format(Texts.ERROR_NON_FINITE, (self.phase, self.angle)))


@dataclass(frozen=True)
class PauliDecomposition:
    """
    Componentes reais de u = A*I + i(B*Z + C*X + D*Y).
    """
    A: float
    B: float
    C: float
    D: float

    def norm_squared(self) -> float:
        return self.A ** 2 + self.B ** 2 + self.C ** 2 + self.D ** 2

    def negated(self) -> "PauliDecomposition":
        return PauliDecomposition(-self.A, -self.B, -self.C, -self.D)

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.A, self.B, self.C, self.D)

    def to_dict(self) -> Dict[str, float]:
        return {"A": self.A, "B": self.B, "C": self.C, "D": self.D}


class Unitary2:
    """
    Matriz complexa 2x2 imutável usada como oráculo exato de SU(2).
    A unitaridade não é exigida na construção; as operações que dependem
    dela verificam o contrato explicitamente.
    """

    def __init__(self, matrix: Any):
        """
        Inicializa a matriz.

        Args:
            matrix: Qualquer objeto conversível em array complexo 2x2
        """
        array = np.array(matrix, dtype=complex)
        if array.shape != (2, 2):
            raise DomainError(Texts.format(Texts.ERROR_BAD_SHAPE, array.shape))
        if not np.all(np.isfinite(array)):
            raise DomainError(Texts.format(Texts.ERROR_NON_FINITE, array.tolist()))
        array.setflags(write=False)
        self._matrix = array

    @classmethod
    def identity(cls) -> "Unitary2":
        return cls(np.eye(2, dtype=complex))

    @classmethod
    def reconstruct(cls, decomposition: PauliDecomposition) -> "Unitary2":
        """Reconstrói u = A*I + i(B*Z + C*X + D*Y)."""
        A, B, C, D = decomposition.as_tuple()
        return cls([[A + 1j * B, 1j * C + D], [1j * C - D, A - 1j * B]])

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def __getitem__(self, index):
        return self._matrix[index]

    def __matmul__(self, other: "Unitary2") -> "Unitary2":
        return Unitary2(self._matrix @ other.matrix)

    def dagger(self) -> "Unitary2":
        return Unitary2(self._matrix.conj().T)

    def det(self) -> complex:
        return complex(np.linalg.det(self._matrix))

    def unitarity_error(self) -> float:
        """Maior desvio absoluto de U U^dagger em relação à identidade."""
        return float(np.max(np.abs(self._matrix @ self._matrix.conj().T - np.eye(2))))

    def is_unitary(self, tolerance: float) -> bool:
        return self.unitarity_error() <= tolerance and abs(abs(self.det()) - 1.0) <= tolerance

    def allclose(self, other: "Unitary2", tolerance: float, up_to_sign: bool = False) -> bool:
        """
        Compara duas matrizes entrada a entrada.

        Args:
            other: Matriz de referência
            tolerance: Desvio absoluto máximo
            up_to_sign: Aceita também -other (dupla cobertura de SU(2))
        """
        distance = np.max(np.abs(self._matrix - other.matrix))
        if up_to_sign:
            distance = min(distance, np.max(np.abs(self._matrix + other.matrix)))
        return bool(distance <= tolerance)

    def to_dict(self) -> Dict[str, Any]:
        return {"real": self._matrix.real.tolist(), "imag": self._matrix.imag.tolist()}

    def __repr__(self) -> str:
        return f"Unitary2({self._matrix.tolist()})"


class PhaseSequence:
    """
    Sequência ordenada de fases de pulso; phi_0 é aplicada primeiro.
    As fases são armazenadas reduzidas a (-pi, pi].
    """

    def __init__(self, phases: Sequence[float]):
        """
        Inicializa a sequência.

        Args:
            phases: Fases em radianos, comprimento L >= 1
        """
        values = np.asarray(list(phases), dtype=float)
        if values.size == 0:
            raise DomainError(Texts.ERROR_EMPTY_SEQUENCE)
        if not np.all(np.isfinite(values)):
            raise DomainError(Texts.format(Texts.ERROR_NON_FINITE, values.tolist()))
        reduced = np.atleast_1d(wrap_phase(values))
        reduced.setflags(write=False)
        self._phases = reduced

    @property
    def phases(self) -> Tuple[float, ...]:
        return tuple(float(p) for p in self._phases)

    @property
    def length(self) -> int:
        return int(self._phases.size)

    def as_array(self) -> np.ndarray:
        return self._phases

    def shifted(self, delta: float) -> "PhaseSequence":
        """Soma delta a todas as fases (deslocamento global)."""
        return PhaseSequence(self._phases + delta)

    def is_symmetric(self, tolerance: float = 1e-12) -> bool:
        return all(_same_phase(self._phases[k], self._phases[-1 - k], tolerance) for k in range(self.length))

    def is_antisymmetric(self, tolerance: float = 1e-12) -> bool:
        return all(_same_phase(self._phases[k], -self._phases[-1 - k], tolerance) for k in range(self.length))

    def __len__(self) -> int:
        return self.length

    def __iter__(self) -> Iterator[float]:
        return iter(self.phases)

    def __getitem__(self, index: int) -> float:
        return float(self._phases[index])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhaseSequence):
            return NotImplemented
        return self.length == other.length and bool(np.all(self._phases == other.as_array()))

    def __hash__(self) -> int:
        return hash(self.phases)

    def __repr__(self) -> str:
        return f"PhaseSequence({list(self.phases)})"

    def to_dict(self) -> Dict[str, Any]:
        return {"phases_rad": list(self.phases), "length": self.length}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PhaseSequence":
        return cls(data["phases_rad"])


def _same_phase(a: float, b: float, tolerance: float) -> bool:
    return abs(wrap_phase(a - b)) <= tolerance
