from datetime import datetime, timezone

from fastapi import APIRouter
from fastapi.responses import JSONResponse

from shared.constants.config import Config
from shared.constants.texts import Texts
from shared.utils.logger import Logger

# Inicializa logger e APIRouter
logger = Logger(__name__)
router = APIRouter()


@router.get("/health", tags=["Saúde"], summary="Verifica o status da API")
async def health():
    """
    Retorna o status da API, a versão e as tolerâncias numéricas em uso.
    """
    response = {
        "status": "ok",
        "version": Config.VERSION,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "tolerances": Config.get_tolerance_settings(),
    }
    logger.info(Texts.LOG_HEALTH)
    return JSONResponse(content=response)
