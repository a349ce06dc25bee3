"""JSON algebra documents: parsing, validation and canonical serialization.

Schema (scalars are strings, ``"a/b"`` or ``"a"`` over the rationals and
decimal integers in ``[0, p)`` over GF(p); omitted sparse entries are zero)::

    {"scalars": {"kind": "rational"} | {"kind": "gfp", "p": 7},
     "dim": n, "basis": [names],
     "mul":   [[i, j, k, "c"], ...],   "unit":   ["c", ...],
     "comul": [[i, j, k, "c"], ...],   "counit": ["c", ...],
     "alpha": [["c", ...], ...],       "antipode": [["c", ...], ...],
     "action": ..., "coaction": ..., "right_action": ...,
     "r": [[i, j, "c"], ...],
     "provenance": {...}}

``action``/``coaction``/``right_action`` are sparse triple lists when the
tensor is ``n x n x n``; otherwise ``{"shape": [d0, d1, d2], "entries": [...]}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import FieldCharError, ParseError
from .hom_structures import HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra
from .linear_core import LinMap, StructureTensor
from .scalars import field_from_spec

KEY_ORDER = (
    "scalars",
    "dim",
    "basis",
    "mul",
    "unit",
    "comul",
    "counit",
    "alpha",
    "antipode",
    "action",
    "right_action",
    "coaction",
    "r",
    "provenance",
)
_FRACTION_RE = re.compile(r"^\s*[+-]?\d+\s*/\s*(\d+)\s*$")


@dataclass(frozen=True, eq=False)
class AlgebraDocument:
    field: object
    dim: int
    basis: tuple
    mul: StructureTensor
    unit: tuple
    alpha: LinMap
    comul: StructureTensor | None = None
    counit: tuple | None = None
    antipode: LinMap | None = None
    action: StructureTensor | None = None
    right_action: StructureTensor | None = None
    coaction: StructureTensor | None = None
    r: tuple | None = None
    provenance: dict | None = None

    @property
    def has_coalgebra(self) -> bool:
        return self.comul is not None and self.counit is not None

    def algebra(self) -> HomAlgebra:
        return HomAlgebra(self.mul, self.unit, self.alpha, self.basis)

    def coalgebra(self) -> HomCoalgebra:
        if not self.has_coalgebra:
            raise ParseError("document has no 'comul'/'counit'")
        return HomCoalgebra(self.comul, self.counit, self.alpha, self.basis)

    def bialgebra(self) -> HomBialgebra:
        return HomBialgebra(self.algebra(), self.coalgebra())

    def hopf(self) -> HomHopfAlgebra:
        if self.antipode is None:
            raise ParseError("document has no 'antipode'")
        return HomHopfAlgebra(
            self.algebra(), self.coalgebra(), antipode=self.antipode, provenance=self.provenance
        )

    def structure(self):
        """The richest structure the document describes."""
        if not self.has_coalgebra:
            return self.algebra()
        if self.antipode is None:
            return self.bialgebra()
        return self.hopf()

    def with_blocks(self, **blocks) -> AlgebraDocument:
        return replace(self, **blocks)

    @classmethod
    def from_structure(cls, H, **blocks) -> AlgebraDocument:
        comul = counit = antipode = None
        if isinstance(H, (HomBialgebra, HomCoalgebra)):
            comul, counit = H.comul, H.counit
        if isinstance(H, HomHopfAlgebra):
            antipode = H.antipode
            blocks.setdefault("provenance", H.provenance)
        return cls(
            field=H.field,
            dim=H.dim,
            basis=tuple(H.names),
            mul=H.mul,
            unit=tuple(H.unit),
            alpha=H.alpha,
            comul=comul,
            counit=tuple(counit) if counit is not None else None,
            antipode=antipode,
            **blocks,
        )


# -- parsing ---------------------------------------------------------------------


def _scalar(F, raw, where):
    if isinstance(raw, bool) or isinstance(raw, float):
        raise ParseError(f"{where}: inexact or non-numeric scalar {raw!r}")
    if isinstance(raw, int):
        if F.characteristic and not 0 <= raw < F.characteristic:
            raise ParseError(f"{where}: GF({F.characteristic}) entry {raw} outside [0, p)")
        return F(raw)
    if not isinstance(raw, str):
        raise ParseError(f"{where}: scalars must be strings, got {raw!r}")
    if F.characteristic:
        m = _FRACTION_RE.match(raw)
        if m:
            den = int(m.group(1))
            if den % F.characteristic == 0:
                raise FieldCharError(
                    f"{where}: {raw!r} needs division by {den}, impossible in characteristic "
                    f"{F.characteristic}"
                )
    try:
        return F.parse(raw)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _int(raw, where, lo=0, hi=None):
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise ParseError(f"{where}: expected an integer index, got {raw!r}")
    if raw < lo or (hi is not None and raw >= hi):
        raise ParseError(f"{where}: index {raw} out of range [{lo}, {hi})")
    return raw


def _vector(F, raw, n, where):
    if not isinstance(raw, list) or len(raw) != n:
        raise ParseError(f"{where}: expected a list of {n} scalars")
    return tuple(_scalar(F, c, f"{where}[{i}]") for i, c in enumerate(raw))


def _matrix(F, raw, n, where):
    if not isinstance(raw, list) or len(raw) != n:
        raise ParseError(f"{where}: expected {n} rows (square {n}x{n} matrix)")
    rows = []
    for i, r in enumerate(raw):
        if not isinstance(r, list) or len(r) != n:
            raise ParseError(f"{where}: row {i} is not of length {n}; matrix must be square")
        rows.append(tuple(_scalar(F, c, f"{where}[{i}][{j}]") for j, c in enumerate(r)))
    return LinMap(F, tuple(rows))


def _sparse3(F, raw, shape, where):
    if isinstance(raw, dict):
        if set(raw) != {"shape", "entries"}:
            raise ParseError(f"{where}: block object needs exactly 'shape' and 'entries'")
        s = raw["shape"]
        if not isinstance(s, list) or len(s) != 3:
            raise ParseError(f"{where}.shape: expected three dimensions")
        shape = tuple(_int(d, f"{where}.shape", lo=1) for d in s)
        raw = raw["entries"]
    if not isinstance(raw, list):
        raise ParseError(f"{where}: expected a list of [i, j, k, c] entries")
    entries = []
    for t, e in enumerate(raw):
        w = f"{where}[{t}]"
        if not isinstance(e, list) or len(e) != 4:
            raise ParseError(f"{w}: expected [i, j, k, c]")
        i = _int(e[0], w, hi=shape[0])
        j = _int(e[1], w, hi=shape[1])
        k = _int(e[2], w, hi=shape[2])
        entries.append((i, j, k, _scalar(F, e[3], w)))
    return StructureTensor.from_entries(F, shape, entries)


def _sparse2(F, raw, n, where):
    if not isinstance(raw, list):
        raise ParseError(f"{where}: expected a list of [i, j, c] entries")
    M = [[F.zero] * n for _ in range(n)]
    for t, e in enumerate(raw):
        w = f"{where}[{t}]"
        if not isinstance(e, list) or len(e) != 3:
            raise ParseError(f"{w}: expected [i, j, c]")
        i = _int(e[0], w, hi=n)
        j = _int(e[1], w, hi=n)
        M[i][j] = M[i][j] + _scalar(F, e[2], w)
    return tuple(tuple(r) for r in M)


def parse_document(obj) -> AlgebraDocument:
    """Validate a decoded JSON object and build an AlgebraDocument."""
    if not isinstance(obj, dict):
        raise ParseError("document must be a JSON object")
    unknown = set(obj) - set(KEY_ORDER)
    if unknown:
        raise ParseError(f"unknown fields: {sorted(unknown)}")
    for key in ("scalars", "dim", "mul", "unit", "alpha"):
        if key not in obj:
            raise ParseError(f"missing required field {key!r}")
    F = field_from_spec(obj["scalars"])
    n = _int(obj["dim"], "dim", lo=1)
    basis = obj.get("basis", [f"e{i}" for i in range(n)])
    if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) for b in basis):
        raise ParseError(f"basis: expected {n} names")
    mul = _sparse3(F, obj["mul"], (n, n, n), "mul")
    unit = _vector(F, obj["unit"], n, "unit")
    alpha = _matrix(F, obj["alpha"], n, "alpha")
    comul = counit = antipode = None
    if ("comul" in obj) != ("counit" in obj):
        raise ParseError("'comul' and 'counit' must be given together")
    if "comul" in obj:
        comul = _sparse3(F, obj["comul"], (n, n, n), "comul")
        counit = _vector(F, obj["counit"], n, "counit")
    if "antipode" in obj:
        if comul is None:
            raise ParseError("'antipode' requires 'comul' and 'counit'")
        antipode = _matrix(F, obj["antipode"], n, "antipode")
    blocks = {}
    for key in ("action", "right_action", "coaction"):
        if key in obj:
            blocks[key] = _sparse3(F, obj[key], (n, n, n), key)
    if "r" in obj:
        blocks["r"] = _sparse2(F, obj["r"], n, "r")
    if "provenance" in obj:
        if not isinstance(obj["provenance"], dict):
            raise ParseError("provenance: expected an object")
        blocks["provenance"] = obj["provenance"]
    return AlgebraDocument(
        field=F,
        dim=n,
        basis=tuple(basis),
        mul=mul,
        unit=unit,
        alpha=alpha,
        comul=comul,
        counit=counit,
        antipode=antipode,
        **blocks,
    )


def loads_document(text: str) -> AlgebraDocument:
    if not text.strip():
        raise ParseError("empty document")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_document(obj)


def load_document(path) -> AlgebraDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not UTF-8") from None
    return loads_document(text)


# -- serialization ----------------------------------------------------------------


def _sparse3_json(t: StructureTensor, n, fmt):
    entries = [[i, j, k, fmt(c)] for i, j, k, c in t.entries()]
    if t.shape == (n, n, n):
        return entries
    return {"shape": list(t.shape), "entries": entries}


def document_to_json(doc: AlgebraDocument) -> dict:
    F = doc.field
    fmt = F.format
    n = doc.dim
    out = {
        "scalars": F.spec(),
        "dim": n,
        "basis": list(doc.basis),
        "mul": _sparse3_json(doc.mul, n, fmt),
        "unit": [fmt(c) for c in doc.unit],
    }
    if doc.comul is not None:
        out["comul"] = _sparse3_json(doc.comul, n, fmt)
        out["counit"] = [fmt(c) for c in doc.counit]
    out["alpha"] = [[fmt(c) for c in r] for r in doc.alpha.rows]
    if doc.antipode is not None:
        out["antipode"] = [[fmt(c) for c in r] for r in doc.antipode.rows]
    for key in ("action", "right_action", "coaction"):
        t = getattr(doc, key)
        if t is not None:
            out[key] = _sparse3_json(t, n, fmt)
    if doc.r is not None:
        out["r"] = [[i, j, fmt(c)] for i, row in enumerate(doc.r) for j, c in enumerate(row) if c]
    if doc.provenance is not None:
        out["provenance"] = doc.provenance
    return out


def _dump_value(key, value) -> str:
    if isinstance(value, list) and value and isinstance(value[0], list) and key != "basis":
        inner = ",\n    ".join(json.dumps(v, separators=(", ", ": ")) for v in value)
        return "[\n    " + inner + "\n  ]"
    if isinstance(value, dict) and key in ("action", "right_action", "coaction"):
        if not value["entries"]:
            return json.dumps(value, separators=(", ", ": "))
        inner = ",\n      ".join(json.dumps(v, separators=(", ", ": ")) for v in value["entries"])
        shape = json.dumps(value["shape"])
        return '{"shape": ' + shape + ', "entries": [\n      ' + inner + "\n  ]}"
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True, separators=(", ", ": "))
    return json.dumps(value, separators=(", ", ": "))


def dumps_document(doc: AlgebraDocument) -> str:
    """Canonical text: fixed key order, sorted sparse entries, reduced scalars."""
    obj = document_to_json(doc)
    parts = [f'  "{k}": {_dump_value(k, obj[k])}' for k in KEY_ORDER if k in obj]
    return "{\n" + ",\n".join(parts) + "\n}\n"


def save_document(doc: AlgebraDocument, path) -> None:
    Path(path).write_text(dumps_document(doc), encoding="utf-8")
