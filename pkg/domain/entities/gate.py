import math
from enum import Enum
from typing import Any, Dict, List, Optional

from domain.entities.response import AchievabilityReport, ResponseCoefficients
from domain.entities.su2 import PhaseSequence
from domain.exceptions.custom_exceptions import DomainError, PreconditionError
from shared.constants.texts import Texts


class GateVariant(Enum):
    """
    Famílias de sequências compostas suportadas.
    """
    L3 = "l3"
    L4_SYMMETRIC = "sym4"
    L4_ANTISYMMETRIC = "antisym4"

    @property
    def length(self) -> int:
        return 3 if self is GateVariant.L3 else 4

    @classmethod
    def parse(cls, name: str) -> "GateVariant":
        """
        Converte o nome usado no CLI/API ("l3", "sym4", "antisym4") ou o nome
        do membro ("L4_SYMMETRIC") na variante.
        """
        key = name.strip()
        for variant in cls:
            if key.lower() == variant.value or key.upper() == variant.name:
                return variant
        raise DomainError(Texts.format(Texts.ERROR_UNKNOWN_VARIANT, name))


class GateRequest:
    """
    Pedido de síntese: rotação base theta0, alvo thetaT e variante.
    """

    def __init__(self, theta0: float, theta_target: float, variant: Optional[GateVariant] = None):
        """
        Inicializa o pedido.

        Args:
            theta0: Rotação base de cada pulso, em (0, pi)
            theta_target: Rotação alvo em [-2pi, 4pi]; (2pi, 4pi] é mapeado para
                -(4pi - thetaT)
            variant: Variante desejada; None seleciona automaticamente
        """
        if not (math.isfinite(theta0) and math.isfinite(theta_target)):
            raise DomainError(Texts.format(Texts.ERROR_NON_FINITE, (theta0, theta_target)))
        if not 0.0 < theta0 < math.pi:
            raise PreconditionError(Texts.format(Texts.ERROR_THETA0_RANGE, theta0))
        if not -2 * math.pi - 1e-12 <= theta_target <= 4 * math.pi + 1e-12:
            raise PreconditionError(Texts.format(Texts.ERROR_TARGET_RANGE, theta_target))
        self.theta0 = float(theta0)
        self.theta_target = float(theta_target)
        self.variant = variant

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theta0_rad": self.theta0,
            "thetaT_rad": self.theta_target,
            "variant": self.variant.value if self.variant else None,
        }


class GateSolution:
    """
    Porta composta sintetizada e verificada pelo oráculo SU(2).
    """

    def __init__(
        self,
        request: GateRequest,
        variant: GateVariant,
        coefficients: ResponseCoefficients,
        phases: PhaseSequence,
        fidelity_at_theta0: float,
        fidelity_derivative_at_theta0: float,
        verified: bool,
        achievability: Optional[AchievabilityReport] = None,
        effective_target: Optional[float] = None,
        notes: Optional[List[str]] = None,
    ):
        """
        Inicializa a solução.

        Args:
            request: Pedido original
            variant: Variante efetivamente usada
            coefficients: Coeficientes de A e C do alvo efetivo (|thetaT| em [0, 2pi])
            phases: Fases finais (já com pi somado para alvos negativos)
            fidelity_at_theta0: Fidelidade em theta0 em relação ao alvo pedido
            fidelity_derivative_at_theta0: dF/dtheta em theta0 (diferença central)
            verified: Se as tolerâncias de fidelidade e derivada foram atendidas
            achievability: Relatório de realizabilidade dos coeficientes
            effective_target: Alvo após o mapeamento (2pi, 4pi] -> [-2pi, 0)
            notes: Observações (extrapolação, sistema quase degenerado, ...)
        """
        self.request = request
        self.variant = variant
        self.coefficients = coefficients
        self.phases = phases
        self.fidelity_at_theta0 = fidelity_at_theta0
        self.fidelity_derivative_at_theta0 = fidelity_derivative_at_theta0
        self.verified = verified
        self.achievability = achievability
        self.effective_target = request.theta_target if effective_target is None else effective_target
        self.notes = notes or []

    def to_dict(self) -> Dict[str, Any]:
        return {
            "request": self.request.to_dict(),
            "variant": self.variant.value,
            "effective_thetaT_rad": self.effective_target,
            "phases_rad": list(self.phases.phases),
            "coefficients": self.coefficients.to_dict(),
            "fidelity_at_theta0": self.fidelity_at_theta0,
            "fidelity_derivative_at_theta0": self.fidelity_derivative_at_theta0,
            "verified": self.verified,
            "achievability": self.achievability.to_dict() if self.achievability else None,
            "notes": list(self.notes),
        }
