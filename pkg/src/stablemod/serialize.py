"""JSON encoding of quivers, representations, morphisms and reports.

Output is deterministic: keys are sorted and matrices are nested integer lists.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Any, Mapping

import numpy as np

from .errors import DimensionMismatch, InputError
from .exactfield import DEFAULT_PRIME, Subspace
from .quiver import Quiver
from .rep import Morphism, Representation, SubRep


def _matrix(m: np.ndarray) -> list[list[int]]:
    return [[int(x) for x in row] for row in np.asarray(m).reshape(m.shape)]


def rep_to_json(m: Representation, include_quiver: bool = True) -> dict:
    doc = {
        "dims": list(m.dims),
        "matrices": {a.name: _matrix(x) for a, x in zip(m.quiver.arrows, m.action)},
    }
    if include_quiver:
        doc["quiver"] = m.quiver.to_json()
    return doc


def rep_from_json(doc: Mapping, p: int = DEFAULT_PRIME, quiver: Quiver | None = None) -> Representation:
    try:
        q = quiver if quiver is not None else Quiver.from_json(doc["quiver"])
        dims = [int(d) for d in doc["dims"]]
        mats = doc.get("matrices", {})
        if not isinstance(mats, Mapping):
            raise InputError("'matrices' must map arrow names to matrices")
        arrays = {}
        for name, rows in mats.items():
            a = q.arrow_map.get(name)
            if a is None:
                raise DimensionMismatch(f"matrix given for unknown arrow {name!r}")
            shape = (dims[a.target - 1], dims[a.source - 1])
            arr = np.array(rows, dtype=np.int64)
            if arr.size == 0:
                arr = np.zeros(shape, dtype=np.int64)
            arrays[name] = arr
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"malformed representation JSON: {exc}") from exc
    return Representation.create(q, dims, arrays, p)


def morphism_to_json(f: Morphism) -> dict:
    return {
        "source": rep_to_json(f.source, include_quiver=False),
        "target": rep_to_json(f.target, include_quiver=False),
        "components": [_matrix(c) for c in f.components],
        "quiver": f.source.quiver.to_json(),
    }


def morphism_from_json(doc: Mapping, p: int = DEFAULT_PRIME) -> Morphism:
    try:
        q = Quiver.from_json(doc["quiver"]) if "quiver" in doc else Quiver.from_json(doc["source"]["quiver"])
        a = rep_from_json(doc["source"], p, q)
        b = rep_from_json(doc["target"], p, q)
        comps = [np.array(c, dtype=np.int64) for c in doc["components"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed morphism JSON: {exc}") from exc
    return Morphism(a, b, tuple(comps)).check()


def subrep_to_json(s: SubRep) -> dict:
    return {"dims": list(s.dims), "bases": [_matrix(sp.basis) for sp in s.spaces]}


def encode(obj: Any) -> Any:
    """Turn library objects into plain JSON values."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, Quiver):
        return obj.to_json()
    if isinstance(obj, Representation):
        return rep_to_json(obj, include_quiver=False)
    if isinstance(obj, Morphism):
        doc = morphism_to_json(obj)
        del doc["quiver"]
        return doc
    if isinstance(obj, SubRep):
        return subrep_to_json(obj)
    if isinstance(obj, Subspace):
        return _matrix(obj.basis)
    if isinstance(obj, Mapping):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if dataclasses.is_dataclass(obj):
        return {f.name: encode(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def field_header(p: int) -> dict:
    return {"prime": int(p), "name": f"GF({int(p)})"}


def dumps(doc: Any) -> str:
    return json.dumps(encode(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
