"""Shipped data: structure constants of L and the 20 basis cocycles over GF(2).

The file carries a SHA-256 of its canonical payload; ``load_tables``
refuses a file whose checksum does not match.
"""
from __future__ import annotations

import hashlib
import json
from pathlib import Path

from . import rootsys
from .chevalley import build_L
from .cohomology import basis_cocycle
from .jsonio import algebra_to_json, cochain_from_json, cochain_to_json

TABLES_PATH = Path(__file__).with_name("data") / "tables.json"


class TableChecksumError(RuntimeError):
    pass


def _digest(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def generate_tables() -> dict:
    L = build_L(1)
    payload = {
        "algebra": algebra_to_json(L),
        "cocycles": [{"weight": list(mu), "cochain": cochain_to_json(basis_cocycle(mu, L))}
                     for mu in rootsys.h2_weights()],
    }
    return {"sha256": _digest(payload), "payload": payload}


def write_tables(path=None) -> str:
    path = path or TABLES_PATH
    doc = generate_tables()
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(json.dumps(doc, indent=1) + "\n")
    return doc["sha256"]


def load_tables(path=None) -> dict:
    path = path or TABLES_PATH
    doc = json.loads(Path(path).read_text())
    if _digest(doc.get("payload")) != doc.get("sha256"):
        raise TableChecksumError(f"{path}: checksum mismatch, regenerate with --rebuild-tables")
    return doc["payload"]


def tables_status(path=None) -> dict:
    """Checksum state and agreement of the shipped tables with a fresh build."""
    path = path or TABLES_PATH
    if not Path(path).exists():
        return {"present": False, "checksum_ok": None, "matches_build": None}
    try:
        payload = load_tables(path)
    except TableChecksumError:
        return {"present": True, "checksum_ok": False, "matches_build": False}
    return {"present": True, "checksum_ok": True,
            "matches_build": payload == generate_tables()["payload"]}


def shipped_cocycles(path=None) -> dict:
    L = build_L(1)
    payload = load_tables(path)
    return {tuple(ent["weight"]): cochain_from_json(ent["cochain"], L) for ent in payload["cocycles"]}
