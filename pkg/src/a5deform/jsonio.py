"""JSON encodings of weights, cochains, trivectors and deformations.

Field elements are lowercase hex strings of their bit pattern.  Basis
labels follow the grammar ``H<i>`` (i in 1..4 for L, 1..5 for sl(6)) and
``E+<i>-<j>`` for E_{eps_i - eps_j}.

Cochain::

    {"degree": 2, "field_degree": 1,
     "entries": [{"args": ["E+2-1", "E+4-3"], "value": {"E+5-6": "1"}}, ...]}

Trivector::

    {"field_degree": 1, "coeffs": [{"triple": [1, 2, 3], "value": "1"}, ...]}

Deformation (b0, the bracket of L, is implicit)::

    {"name": "A5bar(III)", "field_degree": 1,
     "terms": [{"t_degree": 1, "cochain": {...}}, {"t_degree": 2, "cochain": {...}}]}
"""
from __future__ import annotations

import json

from .chevalley import LieAlgebra, build_L
from .cochain import Cochain
from .deform import DeformedBracket
from .field_linalg import field, from_hex, to_hex
from .trivector import Trivector


class JSONFormatError(ValueError):
    """Malformed document; ``path`` names the offending field."""

    def __init__(self, path: str, msg: str):
        super().__init__(f"{path}: {msg}")
        self.path = path


def _get(doc, key, path, kind=None):
    if not isinstance(doc, dict):
        raise JSONFormatError(path, "expected an object")
    if key not in doc:
        raise JSONFormatError(f"{path}.{key}", "missing field")
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise JSONFormatError(f"{path}.{key}", f"expected {kind.__name__ if isinstance(kind, type) else kind}")
    return v


def _hex(s, path, F) -> int:
    if not isinstance(s, str):
        raise JSONFormatError(path, "field element must be a hex string")
    try:
        return from_hex(s, F)
    except ValueError as exc:
        raise JSONFormatError(path, str(exc)) from None


def _field_degree(doc, path) -> int:
    e = doc.get("field_degree", 1) if isinstance(doc, dict) else 1
    if e not in (1, 2, 4, 8):
        raise JSONFormatError(f"{path}.field_degree", f"unsupported value {e!r}")
    return e


# -- weights ---------------------------------------------------------------

def weight_to_json(w) -> list[int]:
    return [int(c) for c in w]


def weight_from_json(doc, path="weight") -> tuple:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError:
            raise JSONFormatError(path, "not a JSON array") from None
    if not isinstance(doc, list) or len(doc) != 6 or not all(isinstance(c, int) for c in doc):
        raise JSONFormatError(path, "expected an array of 6 integers")
    return tuple(doc)


# -- cochains --------------------------------------------------------------

def cochain_to_json(c: Cochain) -> dict:
    labels = c.alg.labels
    return {
        "degree": c.degree,
        "field_degree": c.F.e,
        "entries": [
            {"args": [labels[a] for a in args],
             "value": {labels[m]: to_hex(x) for m, x in sorted(v.items())}}
            for args, v in sorted(c.entries.items())
        ],
    }


def cochain_from_json(doc, alg: LieAlgebra | None = None, path="cochain") -> Cochain:
    e = _field_degree(doc, path)
    alg = alg or build_L(e)
    if alg.F.e != e:
        raise JSONFormatError(f"{path}.field_degree", f"document is over GF(2^{e}), algebra over GF(2^{alg.F.e})")
    degree = _get(doc, "degree", path, int)
    if not 0 <= degree <= 4:
        raise JSONFormatError(f"{path}.degree", "must be in 0..4")
    entries = _get(doc, "entries", path, list)
    terms = []
    for n, ent in enumerate(entries):
        p = f"{path}.entries[{n}]"
        args = _get(ent, "args", p, list)
        if len(args) != degree:
            raise JSONFormatError(f"{p}.args", f"expected {degree} labels")
        try:
            idx = [alg.index(a) for a in args]
        except (KeyError, TypeError) as exc:
            raise JSONFormatError(f"{p}.args", str(exc)) from None
        if len(set(idx)) < len(idx):
            raise JSONFormatError(f"{p}.args", "repeated argument")
        value = _get(ent, "value", p, dict)
        for lab, x in value.items():
            try:
                m = alg.index(lab)
            except KeyError as exc:
                raise JSONFormatError(f"{p}.value", str(exc)) from None
            terms.append((idx, m, _hex(x, f"{p}.value.{lab}", alg.F)))
    return Cochain.from_terms(alg, degree, terms)


# -- trivectors ------------------------------------------------------------

def trivector_to_json(w: Trivector) -> dict:
    return {
        "field_degree": w.F.e,
        "coeffs": [{"triple": list(t), "value": to_hex(c)} for t, c in sorted(w.coeffs.items())],
    }


def trivector_from_json(doc, path="trivector") -> Trivector:
    F = field(_field_degree(doc, path))
    coeffs = {}
    for n, ent in enumerate(_get(doc, "coeffs", path, list)):
        p = f"{path}.coeffs[{n}]"
        t = _get(ent, "triple", p, list)
        if len(t) != 3 or not all(isinstance(i, int) and 1 <= i <= 6 for i in t) or len(set(t)) != 3:
            raise JSONFormatError(f"{p}.triple", "expected three distinct indices in 1..6")
        key = tuple(sorted(t))
        coeffs[key] = coeffs.get(key, 0) ^ _hex(_get(ent, "value", p), f"{p}.value", F)
    return Trivector(coeffs, F)


# -- deformations ----------------------------------------------------------

def deformation_to_json(f: DeformedBracket) -> dict:
    return {
        "name": f.name,
        "field_degree": f.alg.F.e,
        "terms": [{"t_degree": i, "cochain": cochain_to_json(b)}
                  for i, b in enumerate(f.terms) if i >= 1],
    }


def deformation_from_json(doc, path="deformation") -> DeformedBracket:
    e = _field_degree(doc, path)
    alg = build_L(e)
    terms = _get(doc, "terms", path, list)
    by_degree = {}
    for n, ent in enumerate(terms):
        p = f"{path}.terms[{n}]"
        d = _get(ent, "t_degree", p, int)
        if d < 1:
            raise JSONFormatError(f"{p}.t_degree", "must be >= 1 (the t^0 term is the bracket of L)")
        c = cochain_from_json(_get(ent, "cochain", p), alg, f"{p}.cochain")
        if c.degree != 2:
            raise JSONFormatError(f"{p}.cochain.degree", "deformation terms are 2-cochains")
        by_degree[d] = by_degree[d] + c if d in by_degree else c
    top = max(by_degree, default=0)
    higher = [by_degree.get(d, Cochain.zero(alg, 2)) for d in range(1, top + 1)]
    return DeformedBracket(alg, higher, name=doc.get("name", ""))


def algebra_to_json(alg: LieAlgebra) -> dict:
    return {
        "name": alg.name,
        "dim": alg.dim,
        "field_degree": alg.F.e,
        "labels": alg.labels,
        "brackets": [
            {"args": [a, b], "value": {k: to_hex(c) for k, c in sorted(v.items())}}
            for (a, b), v in alg.structure_constants().items()
        ],
    }


def load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise JSONFormatError(path, f"invalid JSON ({exc.msg} at line {exc.lineno})") from None


def dump(obj, path: str | None = None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=False)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text
