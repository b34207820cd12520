from fastapi import APIRouter
from fastapi.responses import JSONResponse

from domain.dto.config_dto import ModelConfig
from domain.use_cases.beam_trap import quantization_report
from shared.utils.logger import Logger

# Inicializa logger e APIRouter
logger = Logger(__name__)
router = APIRouter()


@router.post("", tags=["Quantização"], summary="Relatório de quantização do DAC")
def report(body: ModelConfig):
    """
    Passo de fase por LSB e bits efetivos nos modos calibrado e físico.
    Campos omitidos assumem o modelo padrão.
    """
    data = quantization_report(body.to_trap(), body.wavelength_m)
    return JSONResponse(content={"success": True, "data": data})
