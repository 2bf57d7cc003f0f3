"""JSON spec files describing a homogeneous space and a metric family.

Example::

    {
      "n": 2,
      "metric": [[1, 0], [0, 1]],
      "brackets": [{"i": 1, "j": 2, "k": 2, "coef": 1.0}],
      "v": [0.5, 0],
      "phi": {"family": "kropina", "m": 2}
    }

``metric`` may be nested rows or a flat row-major list.  Bracket records are
1-indexed with ``i < j``; ``[e_j, e_i]`` is filled in by antisymmetry.
``phi`` is one of ``{"family": "kropina", "m": <real>}``,
``{"family": "randers"}`` or ``{"family": "polynomial", "coeffs": [...]}``.
Unknown fields are rejected.
"""

from __future__ import annotations

import json
import numbers
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .algebra import HomogeneousSpec
from .errors import FinslerError, SpecParseError
from .phi import Kropina, PhiModel, Polynomial, Randers

TOP_FIELDS = {"n", "metric", "brackets", "v", "phi"}
BRACKET_FIELDS = {"i", "j", "k", "coef"}
PHI_FIELDS = {"kropina": {"family", "m"}, "randers": {"family"},
              "polynomial": {"family", "coeffs"}}


@dataclass(frozen=True)
class SpecFile:
    spec: HomogeneousSpec
    phi: PhiModel


def _real(x, where: str) -> float:
    if isinstance(x, bool) or not isinstance(x, numbers.Real):
        raise SpecParseError(f"field '{where}': expected a number, got {x!r}")
    return float(x)


def _int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SpecParseError(f"field '{where}': expected an integer, got {x!r}")
    return x


def _reject_unknown(obj: dict, allowed: set, where: str):
    extra = sorted(set(obj) - allowed)
    if extra:
        raise SpecParseError(f"field '{where}': unknown field(s) {', '.join(extra)}")
    missing = sorted(allowed - set(obj))
    if missing:
        raise SpecParseError(f"field '{where}': missing field(s) {', '.join(missing)}")


def parse_phi(obj, where: str = "phi") -> PhiModel:
    if not isinstance(obj, dict) or "family" not in obj:
        raise SpecParseError(f"field '{where}': expected an object with a 'family'")
    family = obj["family"]
    if family not in PHI_FIELDS:
        raise SpecParseError(f"field '{where}.family': unknown family {family!r}")
    _reject_unknown(obj, PHI_FIELDS[family], where)
    try:
        if family == "kropina":
            return Kropina(_real(obj["m"], f"{where}.m"))
        if family == "randers":
            return Randers()
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, list):
            raise SpecParseError(f"field '{where}.coeffs': expected a list")
        return Polynomial(tuple(_real(c, f"{where}.coeffs[{k}]") for k, c in enumerate(coeffs)))
    except SpecParseError:
        raise
    except FinslerError as exc:
        raise SpecParseError(f"field '{where}': {exc}") from exc


def _metric(raw, n: int) -> np.ndarray:
    if not isinstance(raw, list):
        raise SpecParseError("field 'metric': expected a list")
    if raw and all(isinstance(row, list) for row in raw):
        if len(raw) != n or any(len(row) != n for row in raw):
            raise SpecParseError(f"field 'metric': expected {n} rows of {n} entries")
        flat = [x for row in raw for x in row]
    else:
        if len(raw) != n * n:
            raise SpecParseError(f"field 'metric': expected {n * n} entries, got {len(raw)}")
        flat = raw
    vals = [_real(x, f"metric[{k // n + 1}][{k % n + 1}]") for k, x in enumerate(flat)]
    return np.array(vals).reshape(n, n)


def _brackets(raw, n: int) -> np.ndarray:
    if not isinstance(raw, list):
        raise SpecParseError("field 'brackets': expected a list")
    c = np.zeros((n, n, n))
    seen = set()
    for idx, rec in enumerate(raw):
        where = f"brackets[{idx}]"
        if not isinstance(rec, dict):
            raise SpecParseError(f"field '{where}': expected an object")
        _reject_unknown(rec, BRACKET_FIELDS, where)
        i, j, k = (_int(rec[key], f"{where}.{key}") for key in ("i", "j", "k"))
        coef = _real(rec["coef"], f"{where}.coef")
        for key, val in (("i", i), ("j", j), ("k", k)):
            if not 1 <= val <= n:
                raise SpecParseError(f"field '{where}.{key}': index {val} outside 1..{n}")
        if not i < j:
            raise SpecParseError(f"field '{where}': only entries with i < j are allowed")
        if (i, j, k) in seen:
            raise SpecParseError(f"field '{where}': duplicate entry ({i}, {j}, {k})")
        seen.add((i, j, k))
        c[i - 1, j - 1, k - 1] = coef
        c[j - 1, i - 1, k - 1] = -coef
    return c


def parse_spec(text: str, source: str = "<spec>") -> SpecFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise SpecParseError(f"{source}: top level must be an object")
    try:
        _reject_unknown(doc, TOP_FIELDS, "<top>")
        n = _int(doc["n"], "n")
        if n < 1:
            raise SpecParseError("field 'n': must be positive")
        v = doc["v"]
        if not isinstance(v, list) or len(v) != n:
            raise SpecParseError(f"field 'v': expected a list of {n} numbers")
        v = np.array([_real(x, f"v[{k + 1}]") for k, x in enumerate(v)])
        spec = HomogeneousSpec(metric=_metric(doc["metric"], n),
                               bracket=_brackets(doc["brackets"], n), v=v)
        return SpecFile(spec=spec, phi=parse_phi(doc["phi"]))
    except SpecParseError as exc:
        raise SpecParseError(f"{source}: {exc}") from exc


def load_spec(path) -> SpecFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecParseError(f"{path}: cannot read spec file ({exc.strerror})") from exc
    return parse_spec(text, str(path))


def dump_spec(spec: HomogeneousSpec, phi: PhiModel) -> str:
    """Serialize back to the spec-file format (upper-triangle bracket entries only)."""
    recs = [{"i": i + 1, "j": j + 1, "k": k + 1, "coef": float(spec.bracket[i, j, k])}
            for i in range(spec.n) for j in range(i + 1, spec.n) for k in range(spec.n)
            if spec.bracket[i, j, k] != 0.0]
    if isinstance(phi, Kropina):
        phi_doc = {"family": "kropina", "m": phi.m}
    elif isinstance(phi, Randers):
        phi_doc = {"family": "randers"}
    elif isinstance(phi, Polynomial):
        phi_doc = {"family": "polynomial", "coeffs": list(phi.coeffs)}
    else:
        raise FinslerError(f"cannot serialize phi family {phi.family!r}")
    doc = {"n": spec.n, "metric": spec.metric.tolist(), "brackets": recs,
           "v": spec.v.tolist(), "phi": phi_doc}
    return json.dumps(doc, indent=2)
