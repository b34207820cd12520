from shared.utils.digest import canonical_json, stable_hash


def test_canonical_json_sorted_and_compact():
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'


def test_stable_hash_independent_of_key_order():
    """Testa que o digest depende só do conteúdo."""
    assert stable_hash({"a": 1, "b": 2}) == stable_hash({"b": 2, "a": 1})
    assert stable_hash({"a": 1}) != stable_hash({"a": 2})
    assert len(stable_hash({})) == 64
