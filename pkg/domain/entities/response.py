from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from domain.exceptions.custom_exceptions import DomainError
from shared.constants.texts import Texts


class AchievabilityCondition(Enum):
    """
    Condições de realizabilidade de um par (A[theta], C[theta]).
    """
    A_AT_ZERO = "a_at_zero"      # A[0] = 1
    NORM_BOUND = "norm_bound"    # A^2 + C^2 <= 1 para todo theta
    A_PARITY = "a_parity"        # A par, na base correta para a paridade de L
    C_PARITY = "c_parity"        # C ímpar, na base correta para a paridade de L


class ResponseCoefficients:
    """
    Coeficientes das funções de resposta A[theta], C[theta] de uma sequência
    de comprimento L.

    L ímpar: A = sum a_k cos^k(theta/2), C = sum c_k sin^k(theta/2), k ímpar <= L.
    L par:   A = sum_{k=0}^{L/2} a_k cos(k theta), C = sum_{k=1}^{L/2} c_k sin(k theta).

    As condições de paridade valem por construção da base.
    """

    def __init__(self, length: int, a: Sequence[float], c: Sequence[float]):
        """
        Inicializa o conjunto de coeficientes.

        Args:
            length: Comprimento L da sequência (L >= 1)
            a: Coeficientes de A na ordem crescente de k
            c: Coeficientes de C na ordem crescente de k
        """
        if int(length) != length or length < 1:
            raise DomainError(Texts.format(Texts.ERROR_BAD_LENGTH, length))
        self.length = int(length)
        self.a = np.asarray(list(a), dtype=float)
        self.c = np.asarray(list(c), dtype=float)
        expected = (len(self.a_orders), len(self.c_orders))
        if (self.a.size, self.c.size) != expected:
            raise DomainError(
                Texts.format(Texts.ERROR_COEFFICIENT_COUNT, self.length, (self.a.size, self.c.size))
            )
        if not (np.all(np.isfinite(self.a)) and np.all(np.isfinite(self.c))):
            raise DomainError(Texts.format(Texts.ERROR_NON_FINITE, self.to_dict()))

    @property
    def parity(self) -> str:
        return "odd" if self.length % 2 else "even"

    @property
    def a_orders(self) -> Tuple[int, ...]:
        if self.length % 2:
            return tuple(range(1, self.length + 1, 2))
        return tuple(range(0, self.length // 2 + 1))

    @property
    def c_orders(self) -> Tuple[int, ...]:
        if self.length % 2:
            return tuple(range(1, self.length + 1, 2))
        return tuple(range(1, self.length // 2 + 1))

    def a_basis(self, theta) -> np.ndarray:
        """Matriz (N, len(a)) com as funções de base de A avaliadas em theta."""
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        orders = np.asarray(self.a_orders)
        if self.length % 2:
            return np.cos(theta / 2)[:, None] ** orders[None, :]
        return np.cos(np.outer(theta, orders))

    def c_basis(self, theta) -> np.ndarray:
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        orders = np.asarray(self.c_orders)
        if self.length % 2:
            return np.sin(theta / 2)[:, None] ** orders[None, :]
        return np.sin(np.outer(theta, orders))

    def evaluate(self, theta):
        """
        Avalia (A, C) em theta (escalar ou array).
        """
        A = self.a_basis(theta) @ self.a
        C = self.c_basis(theta) @ self.c
        if np.ndim(theta) == 0:
            return float(A[0]), float(C[0])
        return A, C

    def derivative(self, theta):
        """
        Derivadas (A', C') em theta.
        """
        theta_arr = np.atleast_1d(np.asarray(theta, dtype=float))
        a_orders = np.asarray(self.a_orders, dtype=float)
        c_orders = np.asarray(self.c_orders, dtype=float)
        if self.length % 2:
            half_cos = np.cos(theta_arr / 2)[:, None]
            half_sin = np.sin(theta_arr / 2)[:, None]
            dA = (-(a_orders / 2) * half_cos ** (a_orders - 1) * half_sin) @ self.a
            dC = ((c_orders / 2) * half_sin ** (c_orders - 1) * half_cos) @ self.c
        else:
            dA = (-a_orders * np.sin(np.outer(theta_arr, a_orders))) @ self.a
            dC = (c_orders * np.cos(np.outer(theta_arr, c_orders))) @ self.c
        if np.ndim(theta) == 0:
            return float(dA[0]), float(dC[0])
        return dA, dC

    def a_at_zero(self) -> float:
        return float(np.sum(self.a))

    def as_vector(self) -> np.ndarray:
        return np.concatenate([self.a, self.c])

    def max_abs_difference(self, other: "ResponseCoefficients") -> float:
        if other.length != self.length:
            return float("inf")
        return float(np.max(np.abs(self.as_vector() - other.as_vector())))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "length": self.length,
            "parity": self.parity,
            "a": self.a.tolist(),
            "c": self.c.tolist(),
            "a_orders": list(self.a_orders),
            "c_orders": list(self.c_orders),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ResponseCoefficients":
        return cls(data["length"], data["a"], data["c"])

    def __repr__(self) -> str:
        return f"ResponseCoefficients(L={self.length}, a={self.a.tolist()}, c={self.c.tolist()})"


@dataclass
class AchievabilityReport:
    """
    Resultado da verificação de realizabilidade de um conjunto de coeficientes.
    """
    achievable: bool
    max_norm: float
    argmax_theta: float
    a_at_zero: float
    condition_failures: List[AchievabilityCondition] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "achievable": self.achievable,
            "max_norm": self.max_norm,
            "argmax_theta_rad": self.argmax_theta,
            "a_at_zero": self.a_at_zero,
            "condition_failures": [c.value for c in self.condition_failures],
        }
