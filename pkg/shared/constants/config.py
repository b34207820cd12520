import math
import os
from pathlib import Path
from typing import Any, Dict

from dotenv import load_dotenv

# Carrega variáveis de ambiente
load_dotenv()


class Config:
    """
    Configurações do toolkit de portas compostas.
    Valores ajustáveis por ambiente são lidos via variáveis de ambiente;
    constantes numéricas e físicas ficam centralizadas aqui.
    """

    VERSION = "1.0.0"
    APP_NAME = "composite-gates"

    # Diretórios
    BASE_DIR = Path(__file__).parent.parent.parent
    OUTPUT_DIR = Path(os.getenv("OUTPUT_DIR", str(BASE_DIR / "output")))

    # API
    API_HOST = os.getenv("API_HOST", "0.0.0.0")
    API_PORT = int(os.getenv("API_PORT", "5000"))
    API_DEBUG = os.getenv("API_DEBUG", "False").lower() == "true"
    API_PREFIX = "/api/v1"
    CORS_ORIGINS = os.getenv("CORS_ORIGINS", "*").split(",")

    # Logging
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
    LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_DIR = Path(os.getenv("LOG_DIR", str(BASE_DIR / "logs")))
    LOG_TO_FILE = os.getenv("LOG_TO_FILE", "False").lower() == "true"

    # Tolerâncias numéricas
    TOL_ALGEBRAIC = 1e-12
    TOL_CONTRACT = 1e-9
    TOL_ACHIEVABLE = 1e-9
    TOL_EXTRACTION = 1e-8
    TOL_FIDELITY = 1e-8
    TOL_DERIVATIVE = 1e-6
    TOL_FORWARD_RESIDUAL = 1e-9
    TOL_ANGLE_REFINE = 1e-10
    TOL_BOUNDARY = 1e-9
    TOL_CALIBRATION = 1e-9
    FD_STEP = 1e-5
    COND_DEGENERATE = 1e10
    SINGULAR_EPSILONS = (1e-6, 2e-6)

    # Extração de fases
    EXTRACTION_STARTS = int(os.getenv("EXTRACTION_STARTS", "64"))
    EXTRACTION_SEED = int(os.getenv("EXTRACTION_SEED", "20240601"))
    MAX_SEQUENCE_LENGTH = 4

    # Janela de alcance completo (anti-simétrica de comprimento 4)
    FULL_RANGE_MIN = math.pi / 2
    FULL_RANGE_MAX = 0.728 * math.pi

    # Mapas de validade
    DEFAULT_RESOLUTION_PI = float(os.getenv("DEFAULT_RESOLUTION_PI", "0.005"))
    MIN_RESOLUTION_PI = 0.001
    COARSE_RESOLUTION_PI = 0.05

    # Modelo físico padrão (88Sr+, 674 nm)
    WAVELENGTH_M = 674e-9
    WAIST_M = 25e-6
    OMEGA0_RAD_S = 2 * math.pi * 166e3
    WAIST_POSITION_M = 0.0
    VMAX_V = 10.0
    DAC_BITS = 20
    FIELD_PER_VOLT = 250.0
    ION_MASS_U = 87.905
    OMEGA_Z_RAD_S = 2 * math.pi * 1.25e6
    QUANTIZATION_MODE = "calibrated"
    CALIBRATED_PHASE_BITS = 12
    CALIBRATED_SCALE_TOLERANCE_BITS = 0.25

    # Experimentos
    PULSE_DURATION_S = 1.5e-6
    MOVE_DURATION_S = 8e-6
    PREP_FIDELITY = 0.995
    READOUT_FIDELITY = 0.999
    DEFAULT_SHOTS = 500
    DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "1234"))
    MIN_FIT_POINTS = 8

    @classmethod
    def get_api_settings(cls) -> Dict[str, Any]:
        """
        Retorna as configurações da API.
        """
        return {
            "host": cls.API_HOST,
            "port": cls.API_PORT,
            "debug": cls.API_DEBUG,
            "prefix": cls.API_PREFIX,
        }

    @classmethod
    def get_tolerance_settings(cls) -> Dict[str, float]:
        """
        Retorna as tolerâncias numéricas usadas nas verificações.
        """
        return {
            "algebraic": cls.TOL_ALGEBRAIC,
            "contract": cls.TOL_CONTRACT,
            "achievable": cls.TOL_ACHIEVABLE,
            "extraction": cls.TOL_EXTRACTION,
            "fidelity": cls.TOL_FIDELITY,
            "derivative": cls.TOL_DERIVATIVE,
            "fd_step": cls.FD_STEP,
        }

    @classmethod
    def get_model_defaults(cls) -> Dict[str, Any]:
        """
        Retorna o documento de modelo físico padrão, com as mesmas chaves
        aceitas pelo esquema de configuração JSON.
        """
        return {
            "wavelength_m": cls.WAVELENGTH_M,
            "waist_m": cls.WAIST_M,
            "omega0_rad_s": cls.OMEGA0_RAD_S,
            "waist_position_m": cls.WAIST_POSITION_M,
            "vmax_v": cls.VMAX_V,
            "dac_bits": cls.DAC_BITS,
            "field_per_volt": cls.FIELD_PER_VOLT,
            "ion_mass_u": cls.ION_MASS_U,
            "omega_z_rad_s": cls.OMEGA_Z_RAD_S,
            "quantization_mode": cls.QUANTIZATION_MODE,
            "displacement_per_volt_m": None,
            "calibrated_phase_bits": cls.CALIBRATED_PHASE_BITS,
        }
