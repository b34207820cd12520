"""
Linha de comando do toolkit: subcomandos synth, region, simulate e quantize.

Códigos de saída:
    0  sucesso
    2  fora da região de validade, pré-condição, singularidade ou calibração
    3  falha ao gravar artefatos
    4  configuração inválida (inclui argumentos inválidos)
    1  qualquer outro erro
"""
import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from adapters.config.json_config_adapter import JsonConfigAdapter
from adapters.storage.filesystem_adapter import FileSystemAdapter, dumps_json
from domain.entities.gate import GateVariant
from domain.exceptions.custom_exceptions import (
    ArtifactIOError,
    CalibrationError,
    CompositeGateException,
    ConfigError,
    DomainError,
    PreconditionError,
    RegionError,
    SingularityError,
)
from domain.use_cases.runs import RunUseCase
from shared.constants.colors import Colors
from shared.constants.config import Config
from shared.constants.texts import Texts
from shared.utils.angles import parse_angle
from shared.utils.logger import Logger

logger = Logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_REGION = 2
EXIT_ARTIFACT = 3
EXIT_CONFIG = 4

VARIANT_CHOICES = ("auto",) + tuple(variant.value for variant in GateVariant)


class _ArgumentParser(argparse.ArgumentParser):
    """Erros de uso viram ConfigError em vez de encerrar com código 2."""

    def error(self, message):
        raise ConfigError(Texts.format(Texts.ERROR_CONFIG, message))


def _angle(text: str) -> float:
    try:
        return parse_angle(text)
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error)) from None


def _variant(text: str) -> Optional[GateVariant]:
    if text.lower() == "auto":
        return None
    try:
        return GateVariant.parse(text)
    except DomainError as error:
        raise argparse.ArgumentTypeError(error.message) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="composite-gates", description="Portas compostas robustas a erro de amplitude")
    parser.add_argument("--no-color", action="store_true", help="Desativa cores ANSI")
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="Sintetiza as fases de uma porta composta")
    synth.add_argument("--theta0", type=_angle, required=True, help='Rotação base ("0.7pi" ou radianos)')
    synth.add_argument("--thetaT", type=_angle, required=True, help="Rotação alvo")
    synth.add_argument("--variant", type=_variant, default=None, metavar="{" + ",".join(VARIANT_CHOICES) + "}")
    synth.add_argument("--out", type=Path, default=None, help="Diretório para synth.json e manifesto")

    region = sub.add_parser("region", help="Mapa de validade e intervalo de alcance completo")
    region.add_argument("--variant", type=_variant, required=True)
    region.add_argument("--theta0-min", type=_angle, default=0.0)
    region.add_argument("--theta0-max", type=_angle, default=parse_angle("pi"))
    region.add_argument("--thetaT-min", type=_angle, default=parse_angle("-2pi"))
    region.add_argument("--thetaT-max", type=_angle, default=parse_angle("2pi"))
    region.add_argument("--resolution", type=float, default=Config.DEFAULT_RESOLUTION_PI, help="Passo em unidades de pi")
    region.add_argument("--out", type=Path, default=Config.OUTPUT_DIR)

    simulate = sub.add_parser("simulate", help="Simula um experimento descrito em JSON")
    simulate.add_argument("--config", type=Path, required=True)
    simulate.add_argument("--out", type=Path, default=Config.OUTPUT_DIR)

    quantize = sub.add_parser("quantize", help="Relatório de quantização do DAC")
    quantize.add_argument("--config", type=Path, default=None, help="Documento de modelo (opcional)")
    quantize.add_argument("--out", type=Path, default=Config.OUTPUT_DIR)
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def exit_code_for(error: Exception) -> int:
    if isinstance(error, (RegionError, PreconditionError, SingularityError, CalibrationError)):
        return EXIT_REGION
    if isinstance(error, ArtifactIOError):
        return EXIT_ARTIFACT
    if isinstance(error, ConfigError):
        return EXIT_CONFIG
    return EXIT_FAILURE


def _print_diagnostics(diagnostics: List[Dict[str, Any]]) -> None:
    for item in diagnostics:
        color = Colors.VERDICT_VALID if item.get("valid") else Colors.VERDICT_INVALID
        verdict = "válida" if item.get("valid") else "inválida"
        details = {k: v for k, v in item.items() if k not in ("variant", "valid")}
        print(f"  {item['variant']}: {Colors.paint(verdict, color)} {details}", file=sys.stderr)


def error_payload(error: Exception) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"success": False, "error": str(error)}
    if isinstance(error, CompositeGateException):
        payload["error_code"] = error.error_code
    if isinstance(error, RegionError):
        payload["diagnostics"] = error.diagnostics
    if isinstance(error, ConfigError) and error.offending_keys:
        payload["offending_keys"] = error.offending_keys
    return payload


def dispatch(args: argparse.Namespace, runs: RunUseCase) -> Dict[str, Any]:
    if args.command == "synth":
        return runs.synth(args.theta0, args.thetaT, args.variant, args.out)
    if args.command == "region":
        if args.variant is None:
            raise ConfigError(Texts.format(Texts.ERROR_UNKNOWN_VARIANT, "auto"), ["variant"])
        return runs.region(
            args.variant,
            args.out,
            (args.theta0_min, args.theta0_max),
            (args.thetaT_min, args.thetaT_max),
            args.resolution,
        )
    if args.command == "simulate":
        return runs.simulate(args.config, args.out)
    return runs.quantize(args.out, args.config)


def main(argv: Optional[Sequence[str]] = None, runs: Optional[RunUseCase] = None) -> int:
    """
    Ponto de entrada do CLI. O resultado vai em JSON para stdout; logs e
    diagnósticos vão para stderr.
    """
    command = "?"
    try:
        args = parse_args(argv)
        command = args.command
        if args.no_color or not sys.stderr.isatty():
            Colors.disable()
        result = dispatch(args, runs or RunUseCase(FileSystemAdapter(), JsonConfigAdapter()))
        print(dumps_json(result))
        code = EXIT_OK
    except Exception as error:
        code = exit_code_for(error)
        logger.log_error(error, {"command": command, "exit_code": code})
        print(dumps_json(error_payload(error)))
        if isinstance(error, RegionError) and error.diagnostics:
            _print_diagnostics(error.diagnostics)
    logger.info(Texts.format(Texts.LOG_RUN, command, code))
    return code
