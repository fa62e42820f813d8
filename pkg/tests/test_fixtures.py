import gzip
import hashlib
import json

from tforge import fixtures
from tforge.covariants import hermite_covariant
from tforge.domains import ZZ
from tforge.polyring import from_json, to_json
from tforge.transform import hermite_form, tschirnhaus_extract


def test_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("TFORGE_CACHE", str(tmp_path))
    payload = {"values": [1, 2, 3], "name": "demo"}
    fixtures.cache_put("demo", payload)
    assert fixtures.cache_get("demo") == payload


def test_cache_is_content_addressed(tmp_path, monkeypatch):
    monkeypatch.setenv("TFORGE_CACHE", str(tmp_path))
    fixtures.cache_put("a", {"k": 1})
    fixtures.cache_put("b", {"k": 1})
    blobs = sorted(tmp_path.glob("*.json.gz"))
    assert len(blobs) == 1
    raw = gzip.decompress(blobs[0].read_bytes())
    assert blobs[0].name == hashlib.sha256(raw).hexdigest() + ".json.gz"


def test_corrupted_blob_is_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv("TFORGE_CACHE", str(tmp_path))
    fixtures.cache_put("x", {"k": 1})
    blob = next(tmp_path.glob("*.json.gz"))
    blob.write_bytes(gzip.compress(json.dumps({"k": 2}).encode()))
    assert fixtures.cache_get("x") is None
    calls = []

    def compute():
        calls.append(1)
        return {"k": 1}

    assert fixtures.load_or_compute("x", compute, lambda v: v, lambda v: v,
                                    packaged=False) == {"k": 1}
    assert calls == [1]


def test_no_cache_directory_means_no_writes(monkeypatch):
    monkeypatch.delenv("TFORGE_CACHE", raising=False)
    assert fixtures.cache_get("anything") is None
    fixtures.cache_put("anything", {"k": 1})  # silently skipped


def test_packaged_fixtures_load():
    for name in ("s4", "hermite_form", "joubert_image"):
        assert fixtures.load_packaged(name) is not None


def test_packaged_hermite_form_matches_fresh_extraction():
    fresh = tschirnhaus_extract(hermite_covariant())
    assert fresh == hermite_form()


def test_polynomial_json_roundtrip_of_s4():
    s4 = fixtures.load_s4()
    assert from_json(to_json(s4), ZZ) == s4
    assert s4.is_homogeneous() and s4.degree() == 40
