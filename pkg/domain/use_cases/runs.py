"""
Orquestração das execuções do CLI: síntese, mapas de validade, simulação e
quantização, gravando artefatos e manifestos pelas portas.
"""
import math
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from domain.dto.config_dto import (
    ExperimentConfig,
    ModelConfig,
    SimulateConfig,
    config_as_dict,
    grid_values,
    parse_config,
)
from domain.entities.experiment import ScanResult
from domain.entities.gate import GateRequest, GateVariant
from domain.entities.manifest import RunManifest
from domain.exceptions.custom_exceptions import FitError, UndefinedCorrelationError
from domain.ports.artifact_port import ArtifactPort
from domain.ports.config_port import ConfigPort
from domain.use_cases.beam_trap import quantization_report, rayleigh_range, usable_span
from domain.use_cases.experiment import (
    composite_scan,
    fit_contrast,
    ramsey_scan,
    residual_covariance,
    two_zone_scan,
)
from domain.use_cases.region_map import full_range_interval, validity_grid
from domain.use_cases.synthesis import synthesize, variant_diagnostics
from shared.constants.config import Config
from shared.utils.digest import stable_hash
from shared.utils.logger import Logger

logger = Logger(__name__)

REGION_HEADER = ("theta0_rad", "thetaT_rad", "achievable", "full_range_column")
SCAN_HEADER = ("x", "zone", "label", "population", "shots", "seed")


def _slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", text).strip("_")


class RunUseCase:
    """
    Caso de uso das execuções reprodutíveis. Cada método grava seus
    artefatos em out_dir e um manifesto `<subcomando>.manifest.json` ao lado.
    """

    def __init__(self, artifacts: ArtifactPort, configs: ConfigPort):
        self.artifacts = artifacts
        self.configs = configs

    def _finish(self, manifest: RunManifest, out_dir: Path) -> Dict[str, Any]:
        path = Path(out_dir) / f"{manifest.subcommand}.manifest.json"
        manifest.add_output(str(path))
        self.artifacts.write_json(path, manifest.to_dict())
        return manifest.to_dict()

    def synth(
        self, theta0: float, theta_target: float, variant: Optional[GateVariant], out_dir: Optional[Path] = None
    ) -> Dict[str, Any]:
        """Sintetiza e devolve a solução com diagnósticos por variante."""
        solution = synthesize(GateRequest(theta0, theta_target, variant))
        result = solution.to_dict()
        result["diagnostics"] = variant_diagnostics(theta0, theta_target)
        if out_dir is not None:
            manifest = RunManifest(
                "synth",
                {"theta0_rad": theta0, "thetaT_rad": theta_target, "variant": variant.value if variant else None},
            )
            manifest.add_output(self.artifacts.write_json(Path(out_dir) / "synth.json", result))
            result["manifest"] = self._finish(manifest, out_dir)
        return result

    def region(
        self,
        variant: GateVariant,
        out_dir: Path,
        theta0_range: Tuple[float, float] = (0.0, math.pi),
        thetaT_range: Tuple[float, float] = (-2 * math.pi, 2 * math.pi),
        resolution_pi: float = Config.DEFAULT_RESOLUTION_PI,
    ) -> Dict[str, Any]:
        """Grade CSV e resumo JSON com intervalo de alcance completo e razão de intensidade."""
        grid = validity_grid(variant, theta0_range, thetaT_range, resolution_pi)
        interval = full_range_interval(variant, resolution_pi)
        summary = {**grid.summary(), **interval.to_dict(), "warnings": list(grid.warnings)}

        manifest = RunManifest(
            "region",
            {
                "variant": variant.value,
                "theta0_range_rad": list(theta0_range),
                "thetaT_range_rad": list(thetaT_range),
                "resolution_pi": resolution_pi,
            },
            warnings=list(grid.warnings),
        )
        out_dir = Path(out_dir)
        csv_path = out_dir / f"region_{variant.value}.csv"
        manifest.add_output(self.artifacts.write_csv(csv_path, REGION_HEADER, grid.iter_rows()))
        manifest.add_output(self.artifacts.write_json(out_dir / f"region_{variant.value}_summary.json", summary))
        summary["manifest"] = self._finish(manifest, out_dir)
        return summary

    def quantize(self, out_dir: Path, config_path: Optional[Path] = None) -> Dict[str, Any]:
        """Relatório de quantização nos dois modos, mais a geometria do feixe."""
        data, digest = self.configs.load(config_path) if config_path else (Config.get_model_defaults(), None)
        model = parse_config(ModelConfig, data)
        beam = model.to_beam()
        report = quantization_report(model.to_trap(), model.wavelength_m)
        z_r = rayleigh_range(beam)
        report["beam"] = {
            "rayleigh_range_m": z_r,
            "usable_span_m": usable_span(beam),
            "usable_span_over_rayleigh": usable_span(beam) / z_r,
        }

        manifest = RunManifest(
            "quantize",
            config_as_dict(model),
            config_digest=digest or stable_hash(config_as_dict(model)),
        )
        manifest.add_output(self.artifacts.write_json(Path(out_dir) / "quantize.json", report))
        report["manifest"] = self._finish(manifest, out_dir)
        return report

    def simulate(self, config_path: Path, out_dir: Path) -> Dict[str, Any]:
        """
        Executa o experimento do documento: uma CSV por varredura e um
        relatório JSON com contrastes ajustados e, em duas zonas, a correlação
        de resíduos.
        """
        data, digest = self.configs.load(config_path)
        config = parse_config(SimulateConfig, data)
        experiment = config.experiment
        scans = self._run_experiment(config.model, experiment)

        out_dir = Path(out_dir)
        manifest = RunManifest("simulate", config_as_dict(config), config_digest=digest, seed=experiment.seed)
        report: Dict[str, Any] = {"kind": experiment.kind, "scans": []}
        for scan in scans:
            path = out_dir / f"{_slug(scan.label)}.csv"
            manifest.add_output(self.artifacts.write_csv(path, SCAN_HEADER, scan.to_rows()))
            entry = self._scan_report(scan, experiment, manifest)
            entry["csv"] = str(path)
            report["scans"].append(entry)
        manifest.add_output(self.artifacts.write_json(out_dir / "simulate_report.json", report))
        report["manifest"] = self._finish(manifest, out_dir)
        return report

    def _run_experiment(self, model: ModelConfig, experiment: ExperimentConfig) -> List[ScanResult]:
        beam = model.to_beam()
        zones = [zone.to_entity() for zone in experiment.zones]
        spam = experiment.spam.to_entity() if experiment.spam else None
        shots, seed = experiment.shots, experiment.seed

        if experiment.kind == "ramsey":
            values = grid_values(experiment.delta_phi)
            return [
                ramsey_scan(beam, zone, values, spam, shots, seed + k, experiment.pulse_duration_s)
                for k, zone in enumerate(zones)
            ]
        if experiment.kind == "composite":
            targets = grid_values(experiment.thetaT)
            return [
                composite_scan(
                    beam, zones[0], theta0, targets, experiment.gate_variant(), spam, shots, seed + k,
                    experiment.pulse_duration_s,
                )
                for k, theta0 in enumerate(experiment.theta0)
            ]
        targets = grid_values(experiment.thetaT)
        variant = experiment.gate_variant()
        return [
            two_zone_scan(
                beam, zones, item.scanned, item.constant, targets, spam, shots, seed + k,
                experiment.pulse_duration_s, model.to_trap(), experiment.quantize, variant,
            )
            for k, item in enumerate(experiment.scans)
        ]

    def _scan_report(self, scan: ScanResult, experiment: ExperimentConfig, manifest: RunManifest) -> Dict[str, Any]:
        entry: Dict[str, Any] = {"label": scan.label, "seed": scan.seed, "metadata": scan.metadata, "zones": {}}
        scanned = scan.metadata.get("scanned_zone")
        for zone in scan.zone_labels:
            zone_entry: Dict[str, Any] = {"mean_population": float(np.mean(scan.population(zone)))}
            constant = scan.kind == "two_zone" and zone != scanned
            if experiment.fit and not constant:
                try:
                    zone_entry["fit"] = fit_contrast(scan, zone).to_dict()
                except FitError as error:
                    zone_entry["fit"] = {"error": error.message}
                    manifest.warnings.append(f"{scan.label}/{zone}: {error.message}")
            entry["zones"][zone] = zone_entry
        if scan.kind == "two_zone":
            first, second = scan.zone_labels
            try:
                entry["residual_correlation"] = residual_covariance(scan, scan, first, second)
            except UndefinedCorrelationError as error:
                entry["residual_correlation"] = None
                manifest.warnings.append(f"{scan.label}: {error.message}")
        return entry
