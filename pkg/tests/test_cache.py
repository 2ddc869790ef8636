import os

import pytest

import hramsey.cache as cache_mod
from hramsey.cache import ResultCache, cache_key


def test_key_is_stable_and_sensitive():
    k1 = cache_key("ramsey", ("claw",), 3, 3, 8)
    k2 = cache_key("ramsey", ("claw",), 3, 3, 8)
    k3 = cache_key("ramsey", ("claw",), 3, 4, 8)
    assert k1 == k2
    assert k1 != k3
    assert len(k1) == 64
    assert all(c in "0123456789abcdef" for c in k1)


def test_key_depends_on_engine_version(monkeypatch):
    before = cache_key("x")
    monkeypatch.setattr(cache_mod, "ENGINE_VERSION", "999.0.0")
    after = cache_key("x")
    assert before != after


def test_disabled_cache_is_inert(monkeypatch):
    monkeypatch.delenv("RAMSEY_CACHE", raising=False)
    cache = ResultCache.from_options(None)
    assert not cache.enabled
    assert cache.load("0" * 64) is None
    cache.store("0" * 64, {"v": 1})  # no-op, no error


def test_env_var_enables_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("RAMSEY_CACHE", str(tmp_path))
    cache = ResultCache.from_options(None)
    assert cache.enabled
    assert cache.root == str(tmp_path)
    # Explicit option wins over the environment.
    other = ResultCache.from_options(str(tmp_path / "sub"))
    assert other.root == str(tmp_path / "sub")


def test_store_load_roundtrip(tmp_path):
    cache = ResultCache(str(tmp_path))
    key = cache_key("anything")
    assert cache.load(key) is None
    payload = {"value": 7, "counts": {"1": 1}}
    cache.store(key, payload)
    assert cache.load(key) == payload
    assert os.path.exists(tmp_path / (key + ".json"))


def test_corrupted_entry_recovers(tmp_path, capsys):
    cache = ResultCache(str(tmp_path))
    key = cache_key("broken")
    (tmp_path / (key + ".json")).write_text("{nope")
    assert cache.load(key) is None
    assert "warning" in capsys.readouterr().err
    # Non-object JSON is rejected too.
    (tmp_path / (key + ".json")).write_text("[1, 2]")
    assert cache.load(key) is None


def test_unwritable_root_degrades_to_off(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    cache = ResultCache(str(blocker / "sub"))  # cannot mkdir under a file
    cache.store(cache_key("k"), {"v": 1})
    assert "warning" in capsys.readouterr().err
    assert not cache.enabled
