from fastapi import APIRouter
from fastapi.responses import JSONResponse

from domain.dto.config_dto import RobustnessRequestDTO, SynthesisRequestDTO
from domain.entities.gate import GateRequest, GateVariant
from domain.use_cases.synthesis import robustness_profile, synthesize, variant_diagnostics
from shared.utils.logger import Logger

# Inicializa logger e APIRouter
logger = Logger(__name__)
router = APIRouter()


def _request(body: SynthesisRequestDTO) -> GateRequest:
    variant = None
    if body.variant and body.variant.lower() != "auto":
        variant = GateVariant.parse(body.variant)
    return GateRequest(body.theta0, body.thetaT, variant)


@router.post("", tags=["Síntese"], summary="Sintetiza as fases de uma porta composta")
def synthesize_gate(body: SynthesisRequestDTO):
    """
    Sintetiza a sequência de fases para (theta0, thetaT). Ângulos aceitam
    radianos ou literais em pi ("0.7pi"). Sem variante, a seleção é automática.
    Fora da região de validade responde 422 com os diagnósticos por variante.
    """
    solution = synthesize(_request(body))
    data = solution.to_dict()
    data["diagnostics"] = variant_diagnostics(body.theta0, body.thetaT)
    return JSONResponse(content={"success": True, "data": data})


@router.post("/profile", tags=["Síntese"], summary="Perfil de robustez a erro de amplitude")
def profile_gate(body: RobustnessRequestDTO):
    solution = synthesize(_request(body))
    data = {"solution": solution.to_dict(), "profile": robustness_profile(solution, body.offsets)}
    return JSONResponse(content={"success": True, "data": data})
