from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Iterable, Sequence


class ArtifactPort(ABC):
    """Porta de abstração para gravação de artefatos (JSON e CSV)."""

    @abstractmethod
    def write_json(self, path: Path, data: Any) -> str:
        """Grava um documento JSON e devolve o caminho gravado."""
        pass

    @abstractmethod
    def write_csv(self, path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        """Grava um CSV com cabeçalho e devolve o caminho gravado."""
        pass
