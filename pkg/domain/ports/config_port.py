from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Tuple


class ConfigPort(ABC):
    """Porta de abstração para leitura de documentos de configuração."""

    @abstractmethod
    def load(self, path: Path) -> Tuple[Dict[str, Any], str]:
        """Lê o documento e devolve (conteúdo, sha256 da forma canônica)."""
        pass
