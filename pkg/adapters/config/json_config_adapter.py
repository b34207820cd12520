import json
from pathlib import Path
from typing import Any, Dict, Tuple

from domain.exceptions.custom_exceptions import ConfigError
from domain.ports.config_port import ConfigPort
from shared.constants.texts import Texts
from shared.utils.digest import stable_hash
from shared.utils.logger import Logger


class JsonConfigAdapter(ConfigPort):
    """
    Adaptador que lê documentos de configuração JSON e calcula o digest
    sha256 da forma canônica.
    """

    def __init__(self):
        self.logger = Logger(__name__)

    def load(self, path: Path) -> Tuple[Dict[str, Any], str]:
        """
        Lê o documento.

        Raises:
            ConfigError: arquivo ilegível, JSON inválido ou raiz que não é objeto
        """
        path = Path(path)
        try:
            with open(path, "r", encoding="utf-8") as handle:
                data = json.load(handle)
        except (OSError, json.JSONDecodeError) as e:
            self.logger.log_error(e, {"path": str(path)})
            raise ConfigError(Texts.format(Texts.ERROR_CONFIG_READ, path, e)) from e
        if not isinstance(data, dict):
            raise ConfigError(Texts.format(Texts.ERROR_CONFIG, type(data).__name__))
        digest = stable_hash(data)
        self.logger.info(Texts.format(Texts.LOG_CONFIG_LOADED, path, digest))
        return data, digest
