import logging
import sys
from datetime import datetime
from typing import Optional

from shared.constants.colors import Colors
from shared.constants.config import Config
from shared.constants.texts import Texts


class CustomFormatter(logging.Formatter):
    """
    Formatador personalizado para logs com cores e timestamps.
    """

    def __init__(self, use_colors: bool = True):
        super().__init__(Config.LOG_FORMAT)
        self.use_colors = use_colors
        self.colors = {
            logging.DEBUG: Colors.LOG_DEBUG,
            logging.INFO: Colors.LOG_INFO,
            logging.WARNING: Colors.LOG_WARNING,
            logging.ERROR: Colors.LOG_ERROR,
            logging.CRITICAL: Colors.LOG_CRITICAL,
        }

    def format(self, record):
        """
        Formata o registro de log com cores e timestamp.
        """
        record.asctime = datetime.fromtimestamp(record.created).strftime("%Y-%m-%d %H:%M:%S")
        original = record.levelname
        if self.use_colors and record.levelno in self.colors:
            record.levelname = f"{self.colors[record.levelno]}{original}{Colors.RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


class Logger:
    """
    Utilitário de logging centralizado para a aplicação.
    Implementa o padrão Singleton para garantir uma única instância do logger.
    """

    _instance = None

    def __new__(cls, name: str):
        """
        Implementa o padrão Singleton.
        """
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._initialize(name)
        return cls._instance

    def _initialize(self, name: str):
        """
        Inicializa o logger com handler de console e, opcionalmente, de arquivo.
        """
        self.logger = logging.getLogger(Config.APP_NAME)
        self.logger.setLevel(getattr(logging, Config.LOG_LEVEL.upper(), logging.INFO))
        self.logger.propagate = False

        # Handler para console (stderr, para não misturar com o JSON do CLI)
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(CustomFormatter())
        self.logger.addHandler(console_handler)

        # Handler para arquivo
        if Config.LOG_TO_FILE:
            Config.LOG_DIR.mkdir(parents=True, exist_ok=True)
            log_file = Config.LOG_DIR / f"composite_gates_{datetime.now().strftime('%Y%m%d')}.log"
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(CustomFormatter(use_colors=False))
            self.logger.addHandler(file_handler)

    def log_request(self, method: str, endpoint: str, status: int, duration: float):
        """
        Registra uma requisição HTTP.
        """
        self.logger.info(Texts.format(Texts.LOG_REQUEST, method, endpoint, status, duration))

    def log_synthesis(self, variant: str, theta0: float, theta_target: float, fidelity: float):
        """
        Registra uma porta composta sintetizada.
        """
        self.logger.info(
            Texts.format(Texts.LOG_SYNTHESIS, variant, f"{theta0:.6g}", f"{theta_target:.6g}", f"{fidelity:.12g}")
        )

    def log_region(self, variant: str, cells: int, valid: int):
        self.logger.info(Texts.format(Texts.LOG_REGION, variant, cells, valid))

    def log_scan(self, kind: str, points: int, shots: int, seed: int, details: Optional[dict] = None):
        """
        Registra uma varredura simulada.
        """
        message = Texts.format(Texts.LOG_SCAN, kind, points, shots, seed)
        if details:
            message += f" - Detalhes: {details}"
        self.logger.info(message)

    def log_artifact(self, path: str):
        self.logger.info(Texts.format(Texts.LOG_ARTIFACT, path))

    def log_error(self, error: Exception, context: Optional[dict] = None):
        """
        Registra um erro com contexto opcional.
        """
        if context:
            self.logger.error(Texts.format(Texts.LOG_ERROR_CONTEXT, str(error), context))
        else:
            self.logger.error(Texts.format(Texts.LOG_ERROR, str(error)))

    def debug(self, msg):
        self.logger.debug(msg)

    def info(self, msg):
        self.logger.info(msg)

    def warning(self, msg):
        self.logger.warning(msg)

    def error(self, msg):
        self.logger.error(msg)
