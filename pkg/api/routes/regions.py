from fastapi import APIRouter, Query
from fastapi.responses import JSONResponse

from domain.entities.gate import GateVariant
from domain.use_cases.region_map import full_range_interval
from domain.use_cases.synthesis import variant_verdict
from shared.constants.config import Config
from shared.utils.angles import parse_angle
from shared.utils.logger import Logger

# Inicializa logger e APIRouter
logger = Logger(__name__)
router = APIRouter()


@router.get("/{variant}/interval", tags=["Regiões"], summary="Intervalo de alcance completo")
def get_full_range_interval(
    variant: str,
    resolution: float = Query(Config.DEFAULT_RESOLUTION_PI, description="Passo da grade em unidades de pi"),
):
    """
    Maior intervalo contíguo de theta0 em que a variante realiza todo
    thetaT em [0, 2pi], com a razão de intensidade correspondente.
    """
    interval = full_range_interval(GateVariant.parse(variant), resolution)
    return JSONResponse(content={"success": True, "data": interval.to_dict()})


@router.get("/{variant}/verdict", tags=["Regiões"], summary="Veredicto de validade em um ponto")
def get_verdict(variant: str, theta0: str, thetaT: str):
    try:
        point = parse_angle(theta0), parse_angle(thetaT)
    except ValueError as error:
        return JSONResponse(status_code=400, content={"success": False, "error": str(error)})
    verdict = variant_verdict(GateVariant.parse(variant), *point)
    return JSONResponse(content={"success": True, "data": verdict})
