import inspect
import math

import pytest
from fastapi.testclient import TestClient

from api.routes.quantization import report
from api.routes.regions import get_full_range_interval, get_verdict
from api.routes.synthesis import profile_gate, synthesize_gate
from app import app
from shared.constants.config import Config

PREFIX = Config.API_PREFIX


@pytest.fixture
def client():
    """Fixture que cria um cliente de teste da API."""
    return TestClient(app)


def test_health(client):
    """Testa o endpoint de saúde."""
    response = client.get(f"{PREFIX}/health")

    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert body["version"] == Config.VERSION
    assert "tolerances" in body


def test_synthesize(client):
    response = client.post(f"{PREFIX}/synthesis", json={"theta0": "0.7pi", "thetaT": "pi"})

    assert response.status_code == 200
    data = response.json()["data"]
    assert data["verified"] is True
    assert data["request"]["thetaT_rad"] == pytest.approx(math.pi)


def test_synthesize_outside_region(client):
    """Testa o 422 com diagnósticos por variante."""
    response = client.post(f"{PREFIX}/synthesis", json={"theta0": "0.1pi", "thetaT": "2pi"})

    assert response.status_code == 422
    body = response.json()
    assert body["success"] is False
    assert len(body["diagnostics"]) == 3


def test_synthesize_rejects_unknown_key(client):
    response = client.post(f"{PREFIX}/synthesis", json={"theta0": 1.0, "thetaT": 1.0, "colour": "red"})

    assert response.status_code == 422


def test_synthesize_unknown_variant(client):
    response = client.post(f"{PREFIX}/synthesis", json={"theta0": 1.0, "thetaT": 1.0, "variant": "g9"})

    assert response.status_code == 400


def test_profile(client):
    response = client.post(f"{PREFIX}/synthesis/profile", json={"theta0": "0.5pi", "thetaT": "0.5pi"})

    assert response.status_code == 200
    profile = response.json()["data"]["profile"]
    assert len(profile["infidelity"]) == 5
    assert max(profile["infidelity"]) < 1e-2


def test_interval(client):
    response = client.get(f"{PREFIX}/regions/l3/interval", params={"resolution": 0.1})

    assert response.status_code == 200
    assert response.json()["data"]["found"] is False


@pytest.mark.parametrize(
    "endpoint", [get_full_range_interval, get_verdict, synthesize_gate, profile_gate, report]
)
def test_compute_endpoints_run_in_threadpool(endpoint):
    """Testa que as rotas de cálculo são síncronas e rodam fora do event loop."""
    assert not inspect.iscoroutinefunction(endpoint)


def test_verdict(client):
    response = client.get(f"{PREFIX}/regions/sym4/verdict", params={"theta0": "0.5pi", "thetaT": "pi"})

    assert response.status_code == 200
    assert response.json()["data"]["valid"] is True


def test_verdict_bad_angle(client):
    response = client.get(f"{PREFIX}/regions/sym4/verdict", params={"theta0": "abc", "thetaT": "pi"})

    assert response.status_code == 400


def test_quantization(client):
    response = client.post(f"{PREFIX}/quantization", json={"quantization_mode": "physics"})

    assert response.status_code == 200
    data = response.json()["data"]
    assert data["selected_mode"] == "physics"
    assert data["modes"]["physics"]["effective_bits"] == pytest.approx(12.96, abs=0.01)
