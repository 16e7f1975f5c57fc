"""JSON documents for complexes, simplicial objects, coalgebras, algebras, maps and squares.

Scalars are exact: rationals as ``"p/q"`` (or ``"n"``) strings, prime-field elements as
integers.  Output is canonical (sorted keys, no whitespace) so ``dumps(loads(s)) == s``
for any canonical ``s``.  Loading rebuilds the objects through their constructors, so
every structural invariant is checked again.
"""

from __future__ import annotations

import json
from typing import Any

from .chain import ChainComplex, ChainComplexError, ChainMap
from .coalg import CoalgebraAxiomError, DGCoalgebra, DGCoalgebraMap, SimplicialCoalgebra
from .exactlinalg import FieldError, FieldSpec, Matrix
from .simplicial import SimplicialIdentityError, SimplicialMap, SimplicialVectorSpace

SCHEMA_VERSION = 1
OBJECT_TYPES = ("chain_complex", "simplicial", "dg_coalgebra", "simplicial_coalgebra", "connected_algebra",
                "chain_map", "simplicial_map", "coalgebra_map", "square")


class SchemaError(ValueError):
    pass


class InvariantError(ValueError):
    pass


def canonical(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


# ---------------------------------------------------------------------------
# Matrices


def matrix_to_json(M: Matrix) -> dict:
    F = M.field
    rows = []
    for r in M.to_dense():
        rows.append([int(x) for x in r] if F.mod else [F.fmt(x) for x in r])
    return {"shape": [M.nrows, M.ncols], "rows": rows}


def matrix_from_json(F: FieldSpec, obj: Any, what: str = "matrix") -> Matrix:
    if not isinstance(obj, dict) or set(obj) != {"shape", "rows"}:
        raise SchemaError(f"{what}: expected {{'shape', 'rows'}}")
    shape, rows = obj["shape"], obj["rows"]
    if (not isinstance(shape, list) or len(shape) != 2 or not all(isinstance(x, int) and x >= 0 for x in shape)):
        raise SchemaError(f"{what}: bad shape {shape!r}")
    r, c = shape
    if not isinstance(rows, list) or len(rows) != r or any(not isinstance(row, list) or len(row) != c for row in rows):
        raise SchemaError(f"{what}: rows do not match shape {r}x{c}")
    want = int if F.mod else str
    data = []
    for row in rows:
        for x in row:
            if not isinstance(x, want) or isinstance(x, bool):
                raise SchemaError(f"{what}: entries over {F.label()} must be {'integers' if F.mod else 'strings'}")
            if F.mod and not 0 <= x < F.p:
                raise SchemaError(f"{what}: entry {x} is not reduced mod {F.p}")
        try:
            data.append([F(x) for x in row])
        except (ValueError, ZeroDivisionError) as e:
            raise SchemaError(f"{what}: unparsable entry ({e})") from None
    return Matrix.from_dense(F, data, ncols=c)


def _mats(ms) -> list:
    return [matrix_to_json(m) for m in ms]


def _load_mats(F, objs, what) -> list[Matrix]:
    if not isinstance(objs, list):
        raise SchemaError(f"{what}: expected a list")
    return [matrix_from_json(F, o, f"{what}[{i}]") for i, o in enumerate(objs)]


# ---------------------------------------------------------------------------
# Objects


def object_to_json(obj) -> dict:
    from .connected.algebras import ConnectedDGAlgebra
    from .lifting import LiftingSquare

    if isinstance(obj, ChainComplex):
        return {"type": "chain_complex", "dims": list(obj.dims), "d": _mats(obj.d)}
    if isinstance(obj, SimplicialVectorSpace):
        return {"type": "simplicial", "dims": list(obj.dims), "faces": [_mats(f) for f in obj.faces],
                "degens": [_mats(s) for s in obj.degens]}
    if isinstance(obj, DGCoalgebra):
        return {"type": "dg_coalgebra", "carrier": object_to_json(obj.carrier), "comult": _mats(obj.comult),
                "counit": matrix_to_json(obj.counit)}
    if isinstance(obj, SimplicialCoalgebra):
        return {"type": "simplicial_coalgebra", "carrier": object_to_json(obj.carrier),
                "comult": _mats(obj.comult), "counit": _mats(obj.counit)}
    if isinstance(obj, ConnectedDGAlgebra):
        return {"type": "connected_algebra", "dims": list(obj.dims), "d": _mats(obj.d), "mult": _mats(obj.mult),
                "unit": matrix_to_json(obj.unit), "cohomological": obj.cohomological}
    if isinstance(obj, ChainMap):
        return {"type": "chain_map", "source": object_to_json(obj.source), "target": object_to_json(obj.target),
                "f": _mats(obj.f)}
    if isinstance(obj, SimplicialMap):
        return {"type": "simplicial_map", "source": object_to_json(obj.source), "target": object_to_json(obj.target),
                "f": _mats(obj.f)}
    if isinstance(obj, DGCoalgebraMap):
        return {"type": "coalgebra_map", "source": object_to_json(obj.source), "target": object_to_json(obj.target),
                "f": _mats(obj.f)}
    if isinstance(obj, LiftingSquare):
        return {"type": "square", "left": object_to_json(obj.left), "right": object_to_json(obj.right),
                "top": object_to_json(obj.top), "bottom": object_to_json(obj.bottom)}
    raise SchemaError(f"cannot serialise {type(obj).__name__}")


def _need(obj: dict, keys: set, what: str):
    if not isinstance(obj, dict):
        raise SchemaError(f"{what}: expected an object")
    missing = keys - set(obj)
    extra = set(obj) - keys
    if missing or extra:
        raise SchemaError(f"{what}: missing {sorted(missing)} / unexpected {sorted(extra)}")


def object_from_json(F: FieldSpec, obj: dict, what: str = "object"):
    from .connected.algebras import AlgebraAxiomError, ConnectedDGAlgebra, ConnectivityError
    from .lifting import LiftingError, LiftingSquare

    if not isinstance(obj, dict) or obj.get("type") not in OBJECT_TYPES:
        raise SchemaError(f"{what}: unknown object type {obj.get('type') if isinstance(obj, dict) else obj!r}")
    t = obj["type"]
    try:
        if t == "chain_complex":
            _need(obj, {"type", "dims", "d"}, what)
            return ChainComplex(F, tuple(obj["dims"]), tuple(_load_mats(F, obj["d"], f"{what}.d")))
        if t == "simplicial":
            _need(obj, {"type", "dims", "faces", "degens"}, what)
            faces = [_load_mats(F, f, f"{what}.faces[{n}]") for n, f in enumerate(obj["faces"])]
            degens = [_load_mats(F, s, f"{what}.degens[{n}]") for n, s in enumerate(obj["degens"])]
            return SimplicialVectorSpace(F, tuple(obj["dims"]), faces, degens)
        if t == "dg_coalgebra":
            _need(obj, {"type", "carrier", "comult", "counit"}, what)
            X = object_from_json(F, obj["carrier"], f"{what}.carrier")
            return DGCoalgebra(X, tuple(_load_mats(F, obj["comult"], f"{what}.comult")),
                               matrix_from_json(F, obj["counit"], f"{what}.counit"))
        if t == "simplicial_coalgebra":
            _need(obj, {"type", "carrier", "comult", "counit"}, what)
            X = object_from_json(F, obj["carrier"], f"{what}.carrier")
            return SimplicialCoalgebra(X, tuple(_load_mats(F, obj["comult"], f"{what}.comult")),
                                       tuple(_load_mats(F, obj["counit"], f"{what}.counit")))
        if t == "connected_algebra":
            _need(obj, {"type", "dims", "d", "mult", "unit", "cohomological"}, what)
            return ConnectedDGAlgebra(F, tuple(obj["dims"]), tuple(_load_mats(F, obj["d"], f"{what}.d")),
                                      tuple(_load_mats(F, obj["mult"], f"{what}.mult")),
                                      matrix_from_json(F, obj["unit"], f"{what}.unit"), bool(obj["cohomological"]))
        if t in ("chain_map", "simplicial_map"):
            _need(obj, {"type", "source", "target", "f"}, what)
            S = object_from_json(F, obj["source"], f"{what}.source")
            T = object_from_json(F, obj["target"], f"{what}.target")
            mats = tuple(_load_mats(F, obj["f"], f"{what}.f"))
            cls = ChainMap if t == "chain_map" else SimplicialMap
            return cls(S, T, mats)
        if t == "coalgebra_map":
            _need(obj, {"type", "source", "target", "f"}, what)
            S = object_from_json(F, obj["source"], f"{what}.source")
            T = object_from_json(F, obj["target"], f"{what}.target")
            return DGCoalgebraMap(S, T, ChainMap(S.carrier, T.carrier, tuple(_load_mats(F, obj["f"], f"{what}.f"))))
        _need(obj, {"type", "left", "right", "top", "bottom"}, what)
        parts = {k: object_from_json(F, obj[k], f"{what}.{k}") for k in ("left", "right", "top", "bottom")}
        # the top map must share the left map's source object
        top = ChainMap(parts["left"].source, parts["top"].target, parts["top"].f)
        bottom = ChainMap(parts["left"].target, parts["right"].target, parts["bottom"].f)
        right = parts["right"]
        return LiftingSquare(parts["left"], ChainMap(top.target, right.target, right.f), top, bottom)
    except (ChainComplexError, SimplicialIdentityError, CoalgebraAxiomError, AlgebraAxiomError, ConnectivityError,
            LiftingError) as e:
        raise InvariantError(f"{what}: {e}") from None
    except (TypeError, ValueError) as e:
        if isinstance(e, (SchemaError, InvariantError)):
            raise
        raise SchemaError(f"{what}: {e}") from None


# ---------------------------------------------------------------------------
# Documents


def _obj_D(obj) -> int:
    if hasattr(obj, "D"):
        return obj.D
    if hasattr(obj, "source"):
        return obj.source.D
    return obj.left.source.D


def to_document(obj, field: FieldSpec | None = None) -> dict:
    F = field or _obj_field(obj)
    return {"schema": SCHEMA_VERSION, "field": F.label(), "D": _obj_D(obj), "object": object_to_json(obj)}


def _obj_field(obj) -> FieldSpec:
    if hasattr(obj, "field"):
        return obj.field
    if hasattr(obj, "source"):
        return obj.source.field
    return obj.left.field


def from_document(doc: Any):
    """Validate a parsed document and rebuild its object (invariants are re-checked)."""
    _need(doc, {"schema", "field", "D", "object"}, "document")
    if doc["schema"] != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {doc['schema']!r}")
    if not isinstance(doc["field"], str):
        raise SchemaError("field must be a string such as 'Q' or 'GFp:5'")
    try:
        F = FieldSpec.parse(doc["field"])
    except FieldError as e:
        raise SchemaError(f"field: {e}") from None
    obj = object_from_json(F, doc["object"])
    if not isinstance(doc["D"], int) or _obj_D(obj) != doc["D"]:
        raise SchemaError(f"D = {doc['D']!r} does not match the object (D = {_obj_D(obj)})")
    return obj


def dumps(obj, field: FieldSpec | None = None) -> str:
    return canonical(to_document(obj, field))


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"not valid JSON: {e}") from None
    return from_document(doc)


def save(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj) + "\n")


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
