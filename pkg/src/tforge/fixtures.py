"""Derived polynomials that are expensive enough to archive.

Archived fixtures ship in ``tforge/data``.  ``TFORGE_CACHE`` names an optional
directory for anything computed on the fly; files there are keyed by a hash
of their content, written atomically, and safe for concurrent readers.
"""

from __future__ import annotations

import gzip
import hashlib
import json
import os
import tempfile
from importlib import resources
from pathlib import Path

from .domains import ZZ
from .polyring import MultiPoly, from_json, to_json

FORMAT_VERSION = 1


def _data_path(name: str):
    return resources.files("tforge").joinpath("data", name)


def cache_dir():
    d = os.environ.get("TFORGE_CACHE")
    return Path(d) if d else None


def _index_path(d: Path, name: str) -> Path:
    return d / f"{name}.v{FORMAT_VERSION}.ref"


def cache_get(name: str):
    d = cache_dir()
    if d is None:
        return None
    ref = _index_path(d, name)
    try:
        digest = ref.read_text().strip()
        raw = gzip.decompress((d / f"{digest}.json.gz").read_bytes())
    except (OSError, EOFError):
        return None
    if hashlib.sha256(raw).hexdigest() != digest:
        return None
    return json.loads(raw)


def _atomic_write(path: Path, data: bytes):
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
    with os.fdopen(fd, "wb") as fh:
        fh.write(data)
    os.chmod(tmp, 0o644)
    os.replace(tmp, path)


def cache_put(name: str, payload) -> None:
    d = cache_dir()
    if d is None:
        return
    d.mkdir(parents=True, exist_ok=True)
    raw = json.dumps(payload, sort_keys=True).encode()
    digest = hashlib.sha256(raw).hexdigest()
    blob = d / f"{digest}.json.gz"
    if not blob.exists():
        _atomic_write(blob, gzip.compress(raw, mtime=0))
    _atomic_write(_index_path(d, name), digest.encode())


def load_packaged(name: str):
    path = _data_path(f"{name}.json.gz")
    try:
        raw = path.read_bytes()
    except (FileNotFoundError, OSError):
        return None
    return json.loads(gzip.decompress(raw))


def write_packaged(name: str, payload, directory=None) -> Path:
    """Write a fixture into the package data directory (used when regenerating)."""
    directory = Path(directory) if directory else Path(str(_data_path("")))
    directory.mkdir(parents=True, exist_ok=True)
    out = directory / f"{name}.json.gz"
    raw = json.dumps(payload, sort_keys=True).encode()
    _atomic_write(out, gzip.compress(raw, mtime=0))
    return out


def load_or_compute(name, compute, encode, decode, packaged=True):
    """Packaged copy, then the cache, then ``compute()`` (stored in the cache)."""
    payload = load_packaged(name) if packaged else None
    if payload is None:
        payload = cache_get(name)
    if payload is not None:
        return decode(payload)
    value = compute()
    cache_put(name, encode(value))
    return value


# -- concrete fixtures ---------------------------------------------------------

def load_s4(recompute=False) -> MultiPoly:
    """S4 = s4(phi_1..phi_5) / Delta^6 for the Hermite covariant (degree 40)."""
    from .covariants import compute_s4_quotient

    if recompute:
        return compute_s4_quotient()
    return load_or_compute("s4", compute_s4_quotient, to_json, lambda d: from_json(d, ZZ))


def load_hermite_form(recompute=False):
    from .covariants import hermite_covariant
    from .transform import TschirnhausForm, tschirnhaus_extract

    def compute():
        return tschirnhaus_extract(hermite_covariant())

    def encode(tf):
        return {"n": tf.n, "twist": tf.twist, "pj": [to_json(p) for p in tf.pj]}

    def decode(d):
        return TschirnhausForm(d["n"], tuple(from_json(p, ZZ) for p in d["pj"]), d["twist"])

    if recompute:
        return compute()
    return load_or_compute("hermite_form", compute, encode, decode)


def load_joubert_image(recompute=False):
    from .transform import JoubertImage, compute_joubert_image

    def encode(ji):
        return {"E2": to_json(ji.E2), "E4": to_json(ji.E4), "E6": to_json(ji.E6),
                "e5_const": ji.e5_const}

    def decode(d):
        return JoubertImage(from_json(d["E2"], ZZ), from_json(d["E4"], ZZ),
                            from_json(d["E6"], ZZ), d["e5_const"])

    if recompute:
        return compute_joubert_image()
    return load_or_compute("joubert_image", compute_joubert_image, encode, decode)


def regenerate_all(directory=None):
    """Recompute every archived fixture and write it to the package data directory."""
    from .transform import compute_joubert_image, tschirnhaus_extract
    from .covariants import compute_s4_quotient, hermite_covariant

    s4 = compute_s4_quotient()
    write_packaged("s4", to_json(s4), directory)
    tf = tschirnhaus_extract(hermite_covariant())
    write_packaged("hermite_form",
                   {"n": tf.n, "twist": tf.twist, "pj": [to_json(p) for p in tf.pj]}, directory)
    ji = compute_joubert_image()
    write_packaged("joubert_image",
                   {"E2": to_json(ji.E2), "E4": to_json(ji.E4), "E6": to_json(ji.E6),
                    "e5_const": ji.e5_const}, directory)
