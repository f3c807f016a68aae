"""Canonical JSON files for instances, direction oracles, and witnesses.

All files are UTF-8 JSON with a fixed key order, so serializing the same
object twice yields identical bytes.  Coordinates and dimension indices are
1-based and free slice entries appear as the literal string "*", matching
the written definitions so files stay human-checkable.

Witness files carry a content hash of the instance they speak about.  The
hash covers the canonical serialization of the mathematical content only
(format_version, n, k, representation, values) -- provenance metadata does
not invalidate witnesses.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .lattice import FREE, LatticeError, LatticeSpec, Point, Slice
from .opdc import (
    AdjacentUpDown,
    AllZero,
    BoundaryEscape,
    DIRECTIONS,
    DirectionOracle,
    OpdcSolution,
    TwoZeroPoints,
)
from .tarski import (
    FixedPoint,
    MonotonicityViolation,
    SliceUniquenessViolation,
    SutSolution,
    TarskiFunction,
)

FORMAT_VERSION = 1

TABLE = "table"
DIRECTION_TABLE = "direction-table"


class ParseError(ValueError):
    """Malformed file content; the message names the offending field."""


def _dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    return doc


def _check_header(doc: dict, representation: str) -> LatticeSpec:
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"format_version: unsupported {version!r} (expected {FORMAT_VERSION})")
    rep = doc.get("representation")
    if rep != representation:
        raise ParseError(f"representation: expected {representation!r}, got {rep!r}")
    n, k = doc.get("n"), doc.get("k")
    if not _is_int(n) or not _is_int(k):
        raise ParseError("n and k must be integers")
    try:
        return LatticeSpec(n, k)
    except LatticeError as e:
        raise ParseError(str(e)) from e


def _check_metadata(doc: dict):
    meta = doc.get("metadata")
    if meta is not None and not isinstance(meta, dict):
        raise ParseError("metadata: must be an object when present")
    return meta


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _point_from_json(value, field: str) -> Point:
    if not isinstance(value, list) or not all(_is_int(c) for c in value):
        raise ParseError(f"{field}: expected a list of integers, got {value!r}")
    return tuple(value)


def _instance_doc(f: TarskiFunction, metadata) -> dict:
    doc = {
        "format_version": FORMAT_VERSION,
        "n": f.spec.n,
        "k": f.spec.k,
        "representation": TABLE,
        "values": [list(p) for p in f.table()],
    }
    if metadata is not None:
        doc["metadata"] = metadata
    return doc


def serialize_instance(f: TarskiFunction, metadata=None) -> str:
    """Canonical text form of a table-backed function.

    Callback-backed functions are rejected; call ``materialize()`` first if
    the table cost is acceptable.  Metadata defaults to the function's own.
    """
    if not f.is_table:
        raise ValueError("serialization requires a table-backed function; materialize() first")
    return _dumps(_instance_doc(f, metadata if metadata is not None else f.metadata))


def parse_instance(text: str) -> TarskiFunction:
    doc = _loads(text)
    spec = _check_header(doc, TABLE)
    values = doc.get("values")
    if not isinstance(values, list):
        raise ParseError("values: expected a list")
    if len(values) != spec.size:
        raise ParseError(f"values: expected n^k = {spec.size} entries, got {len(values)}")
    table = []
    for idx, entry in enumerate(values):
        p = _point_from_json(entry, f"values[{idx}]")
        if len(p) != spec.k:
            raise ParseError(f"values[{idx}]: expected {spec.k} coordinates, got {len(p)}")
        for d, c in enumerate(p, start=1):
            if not 1 <= c <= spec.n:
                raise ParseError(
                    f"values[{idx}]: coordinate {d} is {c}, outside [1, {spec.n}]"
                )
        table.append(p)
    return TarskiFunction.from_table(spec, table, metadata=_check_metadata(doc))


def hash_instance(f: TarskiFunction) -> str:
    """sha256 over the canonical metadata-free serialization."""
    return hashlib.sha256(_dumps(_instance_doc(f.materialize(), None)).encode()).hexdigest()


def _oracle_doc(oracle: DirectionOracle, metadata) -> dict:
    doc = {
        "format_version": FORMAT_VERSION,
        "n": oracle.spec.n,
        "k": oracle.spec.k,
        "representation": DIRECTION_TABLE,
        "values": [list(row) for row in oracle.rows()],
    }
    if metadata is not None:
        doc["metadata"] = metadata
    return doc


def serialize_oracle(oracle: DirectionOracle, metadata=None) -> str:
    """Canonical text form of a direction oracle; lazy oracles are
    materialized into a full table."""
    return _dumps(_oracle_doc(oracle, metadata if metadata is not None else oracle.metadata))


def parse_oracle(text: str) -> DirectionOracle:
    doc = _loads(text)
    spec = _check_header(doc, DIRECTION_TABLE)
    values = doc.get("values")
    if not isinstance(values, list):
        raise ParseError("values: expected a list")
    if len(values) != spec.size:
        raise ParseError(f"values: expected n^k = {spec.size} rows, got {len(values)}")
    rows = []
    for idx, row in enumerate(values):
        if not isinstance(row, list) or len(row) != spec.k:
            raise ParseError(f"values[{idx}]: expected a list of {spec.k} directions")
        for d in row:
            if d not in DIRECTIONS:
                raise ParseError(f"values[{idx}]: unknown direction {d!r}")
        rows.append(tuple(row))
    return DirectionOracle.from_table(spec, rows, metadata=_check_metadata(doc))


def hash_oracle(oracle: DirectionOracle) -> str:
    return hashlib.sha256(_dumps(_oracle_doc(oracle, None)).encode()).hexdigest()


_SUT_TAGS = {FixedPoint: "UT", MonotonicityViolation: "UTV1", SliceUniquenessViolation: "UTV2"}
_OPDC_TAGS = {AllZero: "O1", TwoZeroPoints: "OV1", AdjacentUpDown: "OV2", BoundaryEscape: "OV3"}


def _slice_to_json(s: Slice) -> list:
    return ["*" if e is FREE else e for e in s.entries]


def _slice_from_json(value, field: str) -> Slice:
    if not isinstance(value, list) or not value:
        raise ParseError(f"{field}: expected a nonempty list")
    entries = []
    for e in value:
        if e == "*":
            entries.append(FREE)
        elif _is_int(e) and e >= 1:
            entries.append(e)
        else:
            raise ParseError(f'{field}: entries must be positive integers or "*", got {e!r}')
    return Slice(tuple(entries))


def serialize_witness(sol: SutSolution | OpdcSolution, instance_hash: str) -> str:
    """Canonical text form of a witness, tied to its instance by content hash."""
    tag = _SUT_TAGS.get(type(sol)) or _OPDC_TAGS.get(type(sol))
    if tag is None:
        raise ValueError(f"not a witness type: {type(sol).__name__}")
    doc = {
        "format_version": FORMAT_VERSION,
        "problem": "sut" if type(sol) in _SUT_TAGS else "opdc",
        "type": tag,
        "instance_hash": instance_hash,
    }
    if hasattr(sol, "s"):
        doc["slice"] = _slice_to_json(sol.s)
    doc["x"] = list(sol.x)
    if hasattr(sol, "y"):
        doc["y"] = list(sol.y)
    if hasattr(sol, "i"):
        doc["i"] = sol.i
    return _dumps(doc)


@dataclass(frozen=True)
class ParsedWitness:
    problem: str
    tag: str
    solution: SutSolution | OpdcSolution
    instance_hash: str


_PAYLOADS = {
    "UT": ("x",),
    "UTV1": ("x", "y"),
    "UTV2": ("slice", "x", "y"),
    "O1": ("x",),
    "OV1": ("slice", "x", "y"),
    "OV2": ("slice", "x", "y", "i"),
    "OV3": ("slice", "x", "i"),
}

_BUILDERS = {
    "UT": lambda p: FixedPoint(p["x"]),
    "UTV1": lambda p: MonotonicityViolation(p["x"], p["y"]),
    "UTV2": lambda p: SliceUniquenessViolation(p["slice"], p["x"], p["y"]),
    "O1": lambda p: AllZero(p["x"]),
    "OV1": lambda p: TwoZeroPoints(p["slice"], p["x"], p["y"]),
    "OV2": lambda p: AdjacentUpDown(p["slice"], p["x"], p["y"], p["i"]),
    "OV3": lambda p: BoundaryEscape(p["slice"], p["x"], p["i"]),
}


def parse_witness(text: str) -> ParsedWitness:
    doc = _loads(text)
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"format_version: unsupported {version!r} (expected {FORMAT_VERSION})")
    problem = doc.get("problem")
    if problem not in ("sut", "opdc"):
        raise ParseError(f'problem: expected "sut" or "opdc", got {problem!r}')
    tag = doc.get("type")
    sut_tag = tag in ("UT", "UTV1", "UTV2")
    if tag not in _PAYLOADS or sut_tag != (problem == "sut"):
        raise ParseError(f"type: {tag!r} is not a {problem} witness type")
    instance_hash = doc.get("instance_hash")
    if not isinstance(instance_hash, str) or not instance_hash:
        raise ParseError("instance_hash: required string field")

    payload = {}
    for fieldname in _PAYLOADS[tag]:
        if fieldname not in doc:
            raise ParseError(f"{fieldname}: required for type {tag}")
        value = doc[fieldname]
        if fieldname == "slice":
            payload[fieldname] = _slice_from_json(value, "slice")
        elif fieldname == "i":
            if not _is_int(value):
                raise ParseError("i: expected an integer")
            payload[fieldname] = value
        else:
            payload[fieldname] = _point_from_json(value, fieldname)
    return ParsedWitness(problem, tag, _BUILDERS[tag](payload), instance_hash)
