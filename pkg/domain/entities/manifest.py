from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from shared.constants.config import Config


@dataclass
class RunManifest:
    """
    Registro de uma execução: subcomando, parâmetros resolvidos, digest da
    configuração de entrada, artefatos gerados, semente e versão.
    Reexecutar com os mesmos parâmetros reproduz os artefatos.
    """
    subcommand: str
    parameters: Dict[str, Any]
    config_digest: Optional[str] = None
    outputs: List[str] = field(default_factory=list)
    seed: Optional[int] = None
    version: str = Config.VERSION
    warnings: List[str] = field(default_factory=list)

    def add_output(self, path: str) -> None:
        self.outputs.append(path)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subcommand": self.subcommand,
            "parameters": self.parameters,
            "config_digest": self.config_digest,
            "outputs": list(self.outputs),
            "seed": self.seed,
            "version": self.version,
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunManifest":
        return cls(
            subcommand=data["subcommand"],
            parameters=dict(data.get("parameters", {})),
            config_digest=data.get("config_digest"),
            outputs=list(data.get("outputs", [])),
            seed=data.get("seed"),
            version=data.get("version", Config.VERSION),
            warnings=list(data.get("warnings", [])),
        )
