import csv
import json
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from domain.exceptions.custom_exceptions import ArtifactIOError
from domain.ports.artifact_port import ArtifactPort
from shared.utils.logger import Logger


def format_cell(value: Any) -> str:
    """Formata uma célula CSV: reais com 9 algarismos significativos, booleanos em minúsculas."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.9g}"
    return str(value)


def _json_default(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"{type(value).__name__} não serializável")


def dumps_json(data: Any) -> str:
    """Serializa com chaves ordenadas e indentação 2, o formato dos artefatos."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False, default=_json_default)


class FileSystemAdapter(ArtifactPort):
    """
    Adaptador de sistema de arquivos que implementa a interface ArtifactPort.
    Grava JSON e CSV com fim de linha LF, criando diretórios quando preciso.
    """

    def __init__(self):
        self.logger = Logger(__name__)

    def write_json(self, path: Path, data: Any) -> str:
        """
        Grava um documento JSON indentado.

        Raises:
            ArtifactIOError: se o arquivo não puder ser gravado
        """
        path = Path(path)
        try:
            text = dumps_json(data)
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(text + "\n")
        except (OSError, TypeError, ValueError) as e:
            self.logger.log_error(e, {"path": str(path)})
            raise ArtifactIOError(str(path), str(e)) from e
        self.logger.log_artifact(str(path))
        return str(path)

    def write_csv(self, path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        """
        Grava um CSV com cabeçalho.

        Raises:
            ArtifactIOError: se o arquivo não puder ser gravado
        """
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="") as handle:
                writer = csv.writer(handle, lineterminator="\n")
                writer.writerow(header)
                for row in rows:
                    writer.writerow([format_cell(value) for value in row])
        except OSError as e:
            self.logger.log_error(e, {"path": str(path)})
            raise ArtifactIOError(str(path), str(e)) from e
        self.logger.log_artifact(str(path))
        return str(path)
