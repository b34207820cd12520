from domain.entities.manifest import RunManifest
from shared.constants.config import Config


def test_manifest_round_trip():
    """Testa a serialização do manifesto e a versão padrão."""
    manifest = RunManifest("region", {"variant": "l3"}, config_digest="f" * 64, seed=3)
    manifest.add_output("out/region_l3.csv")
    data = manifest.to_dict()

    assert data["version"] == Config.VERSION
    assert data["outputs"] == ["out/region_l3.csv"]
    assert RunManifest.from_dict(data).to_dict() == data
