"""The ``markedfan/1`` JSON file format.

::

    {"schema": "markedfan/1", "field": "Q" | {"quadratic": d}, "dim": n,
     "rays": [[scalar, ...], ...], "ghosts": [i, ...],
     "facets": [[i, ...], ...], "lattice_generators": [[scalar, ...], ...]}

Scalars are strings ``"p/q"`` or ``"p/q+r/s*sqrt(d)"``; indices are 1-based.
``rays`` has one entry per vertex, ghost slots included.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .exactfield import format_scalar, parse_scalar, radicand
from .fan import MarkedFan
from .simplicial import SimplicialComplex

SCHEMA = "markedfan/1"


class FanFileError(ValueError):
    """Malformed fan file; ``where`` locates the problem."""

    def __init__(self, message: str, where: str = "") -> None:
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


def _expect(cond: bool, msg: str, where: str) -> None:
    if not cond:
        raise FanFileError(msg, where)


def _vectors(doc: dict, key: str, n: int, d: int | None) -> list[tuple]:
    vs = doc.get(key, [])
    _expect(isinstance(vs, list), "must be a list", key)
    out = []
    for i, v in enumerate(vs):
        _expect(isinstance(v, list) and len(v) == n,
                f"must be a list of {n} scalars", f"{key}[{i}]")
        row = []
        for j, x in enumerate(v):
            try:
                x = parse_scalar(x, d)
            except ValueError as e:
                raise FanFileError(str(e), f"{key}[{i}][{j}]") from None
            _expect(d is not None or radicand(x) is None,
                    'irrational scalar in a "Q" file', f"{key}[{i}][{j}]")
            row.append(x)
        out.append(tuple(row))
    return out


def fan_from_dict(doc: Any) -> MarkedFan:
    _expect(isinstance(doc, dict), "top level must be an object", "$")
    _expect(doc.get("schema") == SCHEMA, f"schema must be {SCHEMA!r}", "schema")
    fld = doc.get("field", "Q")
    if fld == "Q":
        d = None
    else:
        _expect(isinstance(fld, dict) and isinstance(fld.get("quadratic"), int),
                'must be "Q" or {"quadratic": d}', "field")
        d = fld["quadratic"]
        try:
            parse_scalar(f"sqrt({d})")
        except ValueError as e:
            raise FanFileError(str(e), "field.quadratic") from None
    n = doc.get("dim")
    _expect(isinstance(n, int) and not isinstance(n, bool) and n >= 0,
            "must be a nonnegative integer", "dim")
    rays = _vectors(doc, "rays", n, d)
    gens = _vectors(doc, "lattice_generators", n, d)
    m = len(rays)
    ghosts = doc.get("ghosts", [])
    _expect(isinstance(ghosts, list), "must be a list", "ghosts")
    for i, g in enumerate(ghosts):
        _expect(isinstance(g, int) and 1 <= g <= m, f"index must be in 1..{m}", f"ghosts[{i}]")
    facets = doc.get("facets")
    _expect(isinstance(facets, list), "must be a list", "facets")
    fs = []
    for i, f in enumerate(facets):
        _expect(isinstance(f, list), "must be a list", f"facets[{i}]")
        for j, v in enumerate(f):
            _expect(isinstance(v, int) and 1 <= v <= m,
                    f"index must be in 1..{m}", f"facets[{i}][{j}]")
        fs.append(tuple(v - 1 for v in f))
    try:
        K = SimplicialComplex(m, tuple(fs), frozenset(g - 1 for g in ghosts))
        return MarkedFan(n, K, tuple(rays), tuple(gens), field=d)
    except ValueError as e:
        raise FanFileError(str(e), "facets") from None


def fan_to_dict(F: MarkedFan) -> dict:
    fmt = lambda vs: [[format_scalar(x) for x in v] for v in vs]
    facets = [list(v + 1 for v in f) for f in F.K.facets if f]
    return {
        "schema": SCHEMA,
        "field": "Q" if F.field is None else {"quadratic": F.field},
        "dim": F.n,
        "rays": fmt(F.markings),
        "ghosts": sorted(g + 1 for g in F.K.ghosts),
        "facets": facets,
        "lattice_generators": fmt(F.lattice_generators),
    }


def loads(text: str) -> MarkedFan:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FanFileError(e.msg, f"line {e.lineno} column {e.colno}") from None
    return fan_from_dict(doc)


def dumps(F: MarkedFan) -> str:
    """Stable text: one key per line, one vector or facet per line."""
    parts = []
    for key, val in fan_to_dict(F).items():
        if isinstance(val, list) and val and isinstance(val[0], list):
            body = ",\n    ".join(json.dumps(v) for v in val)
            parts.append(f'  "{key}": [\n    {body}\n  ]')
        else:
            parts.append(f'  "{key}": {json.dumps(val)}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def load(path: str | Path) -> MarkedFan:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise FanFileError(e.strerror or str(e), str(p)) from None
    try:
        return loads(text)
    except FanFileError as e:
        raise FanFileError(str(e), str(p)) from None


def dump(F: MarkedFan, path: str | Path) -> None:
    Path(path).write_text(dumps(F))
