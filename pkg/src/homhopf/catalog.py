"""Builtin example documents.

``sweedler-hom``
    The four-dimensional Hom-Hopf algebra generated by ``1, g, x`` with
    ``g^2 = 1``, ``x^2 = 0``, ``gx = -xg``, twist ``alpha(x) = -x``,
    ``Delta(x) = (-x) (x) g + 1 (x) (-x)`` and ``S(x) = -gx``.  Basis
    ``1, g, x, gx`` where ``gx`` is the Hom-product of ``g`` and ``x``.
``sweedler-hom-r``
    The same algebra with ``R = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g)``.
``bicross-2-5-B``
    ``B = span{1, x}``, ``beta(x) = -x``, ``1x = x1 = -x``, ``x^2 = 0``,
    ``Delta(x) = (-x) (x) 1 + 1 (x) (-x)``, ``S_B(x) = -x``.
``bicross-2-5-H``
    The group algebra of Z/2 with identity twist.
``bicross-2-5-data``
    ``bicross-2-5-H`` carrying the action ``g.x = x`` (``1_H . x = -x``) on
    ``B`` and the coaction ``rho(g) = g (x) 1_B``.
``kz2``
    Same data as ``bicross-2-5-H``.

Documents are stored in the on-disk JSON schema and go through the parser,
so the catalog doubles as parser coverage.
"""

from __future__ import annotations

from .documents import AlgebraDocument, parse_document
from .errors import FieldCharError, UnknownExample

_Q = {"kind": "rational"}

_KZ2 = {
    "scalars": _Q,
    "dim": 2,
    "basis": ["1", "g"],
    "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]],
    "unit": ["1", "0"],
    "comul": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
    "counit": ["1", "1"],
    "alpha": [["1", "0"], ["0", "1"]],
    "antipode": [["1", "0"], ["0", "1"]],
}

# basis 0 = 1, 1 = g, 2 = x, 3 = gx
_SWEEDLER = {
    "scalars": _Q,
    "dim": 4,
    "basis": ["1", "g", "x", "gx"],
    "mul": [
        [0, 0, 0, "1"], [0, 1, 1, "1"], [0, 2, 2, "-1"], [0, 3, 3, "-1"],
        [1, 0, 1, "1"], [1, 1, 0, "1"], [1, 2, 3, "1"], [1, 3, 2, "1"],
        [2, 0, 2, "-1"], [2, 1, 3, "-1"],
        [3, 0, 3, "-1"], [3, 1, 2, "-1"],
    ],
    "unit": ["1", "0", "0", "0"],
    "comul": [
        [0, 0, 0, "1"],
        [1, 1, 1, "1"],
        [2, 2, 1, "-1"], [2, 0, 2, "-1"],
        [3, 3, 0, "-1"], [3, 1, 3, "-1"],
    ],
    "counit": ["1", "1", "0", "0"],
    "alpha": [
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "-1", "0"],
        ["0", "0", "0", "-1"],
    ],
    "antipode": [
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "0", "1"],
        ["0", "0", "-1", "0"],
    ],
}

_SWEEDLER_R = dict(
    _SWEEDLER,
    r=[[0, 0, "1/2"], [0, 1, "1/2"], [1, 0, "1/2"], [1, 1, "-1/2"]],
)

_B_2_5 = {
    "scalars": _Q,
    "dim": 2,
    "basis": ["1", "x"],
    "mul": [[0, 0, 0, "1"], [0, 1, 1, "-1"], [1, 0, 1, "-1"]],
    "unit": ["1", "0"],
    "comul": [[0, 0, 0, "1"], [1, 1, 0, "-1"], [1, 0, 1, "-1"]],
    "counit": ["1", "0"],
    "alpha": [["1", "0"], ["0", "-1"]],
    "antipode": [["1", "0"], ["0", "-1"]],
}

_DATA_2_5 = dict(
    _KZ2,
    # (h, b, out): 1.1 = 1, 1.x = -x, g.1 = 1, g.x = x
    action=[[0, 0, 0, "1"], [0, 1, 1, "-1"], [1, 0, 0, "1"], [1, 1, 1, "1"]],
    # (h, h', b): rho(1) = 1 (x) 1_B, rho(g) = g (x) 1_B
    coaction=[[0, 0, 0, "1"], [1, 1, 0, "1"]],
)

_RAW = {
    "kz2": _KZ2,
    "sweedler-hom": _SWEEDLER,
    "sweedler-hom-r": _SWEEDLER_R,
    "bicross-2-5-B": _B_2_5,
    "bicross-2-5-H": _KZ2,
    "bicross-2-5-data": _DATA_2_5,
}

# examples whose defining data needs 1/2 or is stated for char != 2
_NEEDS_ODD_CHAR = {"sweedler-hom-r", "bicross-2-5-B", "bicross-2-5-data", "bicross-2-5-H"}

EXAMPLE_NAMES = tuple(_RAW)


def _reduce_mod(obj, p):
    """Re-express a rational document over GF(p)."""
    from fractions import Fraction

    from .scalars import PrimeField

    F = PrimeField(p)

    def conv(s):
        return F.format(F(Fraction(s)))

    def walk(key, v):
        if key in ("mul", "comul", "action", "coaction", "right_action"):
            return [[i, j, k, conv(c)] for i, j, k, c in v]
        if key == "r":
            return [[i, j, conv(c)] for i, j, c in v]
        if key in ("unit", "counit"):
            return [conv(c) for c in v]
        if key in ("alpha", "antipode"):
            return [[conv(c) for c in row] for row in v]
        return v

    out = {k: walk(k, v) for k, v in obj.items()}
    out["scalars"] = {"kind": "gfp", "p": p}
    return out


def builtin_example(name: str, p: int | None = None) -> AlgebraDocument:
    """Return a builtin document, over the rationals or over GF(p)."""
    if name not in _RAW:
        raise UnknownExample(f"unknown example {name!r}; choose from {', '.join(EXAMPLE_NAMES)}")
    raw = _RAW[name]
    if p is not None:
        if p == 2 and name in _NEEDS_ODD_CHAR:
            raise FieldCharError(f"example {name!r} requires characteristic != 2")
        raw = _reduce_mod(raw, p)
    return parse_document(raw)


def builtin_hopf(name: str, p: int | None = None):
    return builtin_example(name, p).hopf()
