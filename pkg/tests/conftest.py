import math
from unittest.mock import Mock

import pytest

from domain.entities.beam import BeamModel, TrapAWGModel, Zone
from domain.entities.experiment import SPAMModel
from domain.ports.artifact_port import ArtifactPort
from domain.ports.config_port import ConfigPort

# Frequências de Rabi medidas nas duas zonas (2pi x 166 kHz e 2pi x 159 kHz)
OMEGA_Z1 = 2 * math.pi * 166e3
OMEGA_Z2 = 2 * math.pi * 159e3


# Fixtures para entidades
@pytest.fixture
def beam():
    """Fixture que retorna o feixe padrão (674 nm, cintura de 25 um)."""
    return BeamModel()


@pytest.fixture
def trap():
    """Fixture que retorna o modelo de armadilha/DAC padrão."""
    return TrapAWGModel()


@pytest.fixture
def zone_z1():
    return Zone("Z1", position_m=-350e-6, rabi_override_rad_s=OMEGA_Z1)


@pytest.fixture
def zone_z2():
    return Zone("Z2", position_m=350e-6, rabi_override_rad_s=OMEGA_Z2)


@pytest.fixture
def two_zones(zone_z1, zone_z2):
    return [zone_z1, zone_z2]


@pytest.fixture
def spam():
    """Fixture que retorna o modelo SPAM padrão (0.995 / 0.999)."""
    return SPAMModel()


# Fixtures para portas
@pytest.fixture
def mock_artifact_port():
    """Fixture que retorna um mock da porta de artefatos que devolve o caminho gravado."""
    mock = Mock(spec=ArtifactPort)
    mock.write_json.side_effect = lambda path, data: str(path)
    mock.write_csv.side_effect = lambda path, header, rows: (list(rows), str(path))[1]
    return mock


@pytest.fixture
def mock_config_port():
    """Fixture que retorna um mock da porta de configuração."""
    mock = Mock(spec=ConfigPort)
    mock.load.return_value = ({}, "0" * 64)
    return mock


# Fixtures para documentos de configuração
@pytest.fixture
def ramsey_document():
    """Documento de simulação Ramsey sem ruído."""
    return {
        "experiment": {
            "kind": "ramsey",
            "zones": [{"label": "Z1", "rabi_override_rad_s": OMEGA_Z1}],
            "shots": 0,
            "seed": 7,
            "delta_phi": {"start": 0, "stop": "2pi", "points": 24},
        }
    }


@pytest.fixture
def two_zone_document():
    """Documento de simulação em duas zonas com poucos pontos."""
    return {
        "experiment": {
            "kind": "two_zone",
            "zones": [
                {"label": "Z1", "position_m": -350e-6, "rabi_override_rad_s": OMEGA_Z1},
                {"label": "Z2", "position_m": 350e-6, "rabi_override_rad_s": OMEGA_Z2},
            ],
            "shots": 200,
            "seed": 11,
            "thetaT": {"start": 0, "stop": "2pi", "points": 9},
            "scans": [{"scanned": "Z2", "constant": "0.5pi"}],
        }
    }
