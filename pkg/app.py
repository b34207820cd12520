import time

import uvicorn
from fastapi import FastAPI, Request, status
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.middleware.base import BaseHTTPMiddleware

from domain.exceptions.custom_exceptions import (
    CompositeGateException,
    ConfigError,
    DomainError,
    PreconditionError,
    RegionError,
    SingularityError,
)
from shared.constants.config import Config
from shared.constants.texts import Texts
from shared.utils.logger import Logger

# Inicializa o logger
logger = Logger(__name__)

app = FastAPI(
    title="API de Portas Compostas",
    description="Síntese de portas compostas robustas a erro de amplitude, mapas de validade e quantização do DAC.",
    version=Config.VERSION,
    docs_url="/docs",
    redoc_url="/redoc",
)

# Middleware de CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=Config.CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Middleware de logging
class LoggingMiddleware(BaseHTTPMiddleware):
    async def dispatch(self, request: Request, call_next):
        start = time.perf_counter()
        response = await call_next(request)
        logger.log_request(
            method=request.method,
            endpoint=request.url.path,
            status=response.status_code,
            duration=round(time.perf_counter() - start, 4),
        )
        return response


app.add_middleware(LoggingMiddleware)


def _error_response(status_code: int, exc: CompositeGateException) -> JSONResponse:
    content = {"success": False, "error": exc.message, "error_code": exc.error_code}
    if isinstance(exc, RegionError):
        content["diagnostics"] = exc.diagnostics
    if isinstance(exc, ConfigError) and exc.offending_keys:
        content["offending_keys"] = exc.offending_keys
    return JSONResponse(status_code=status_code, content=content)


# Handlers de erro
@app.exception_handler(RequestValidationError)
async def validation_exception_handler(request, exc):
    return JSONResponse(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        content={"success": False, "error": Texts.VALIDATION_ERROR, "details": str(exc)},
    )


@app.exception_handler(CompositeGateException)
async def domain_exception_handler(request, exc):
    logger.log_error(exc, {"path": request.url.path})
    if isinstance(exc, RegionError):
        return _error_response(status.HTTP_422_UNPROCESSABLE_ENTITY, exc)
    if isinstance(exc, (ConfigError, DomainError, PreconditionError, SingularityError)):
        return _error_response(status.HTTP_400_BAD_REQUEST, exc)
    return _error_response(status.HTTP_500_INTERNAL_SERVER_ERROR, exc)


@app.exception_handler(Exception)
async def generic_exception_handler(request, exc):
    logger.error(f"Erro interno: {str(exc)}")
    return JSONResponse(
        status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
        content={"success": False, "error": Texts.ERROR_INTERNAL},
    )


# Importa e registra os routers (rotas)
from api.routes.health import router as health_router  # noqa: E402
from api.routes.quantization import router as quantization_router  # noqa: E402
from api.routes.regions import router as regions_router  # noqa: E402
from api.routes.synthesis import router as synthesis_router  # noqa: E402

app.include_router(health_router, prefix=f"{Config.API_PREFIX}")
app.include_router(synthesis_router, prefix=f"{Config.API_PREFIX}/synthesis")
app.include_router(regions_router, prefix=f"{Config.API_PREFIX}/regions")
app.include_router(quantization_router, prefix=f"{Config.API_PREFIX}/quantization")

if __name__ == "__main__":
    settings = Config.get_api_settings()
    uvicorn.run("app:app", host=settings["host"], port=settings["port"], reload=settings["debug"])
