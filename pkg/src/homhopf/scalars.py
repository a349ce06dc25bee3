"""Exact scalar fields: the rationals and prime fields GF(p).

A field object converts, parses and formats its elements.  Rational
elements are plain :class:`fractions.Fraction` values; prime-field elements
are :class:`Residue` instances.  Floats are refused everywhere, since every
identity checked by this package is an exact polynomial identity.
"""

from __future__ import annotations

from fractions import Fraction
import re

from .errors import ParseError

_INT_RE = re.compile(r"^[+-]?\d+$")
_RAT_RE = re.compile(r"^([+-]?\d+)\s*/\s*(\d+)$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class RationalField:
    """The field of rational numbers, backed by ``Fraction``."""

    kind = "rational"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Residue):
            raise TypeError("cannot mix GF(p) residues with rationals")
        raise TypeError(f"refusing inexact or unknown scalar {value!r}")

    def parse(self, text: str) -> Fraction:
        s = text.strip()
        if _INT_RE.match(s):
            return Fraction(int(s))
        m = _RAT_RE.match(s)
        if m:
            den = int(m.group(2))
            if den == 0:
                raise ParseError(f"zero denominator in {text!r}")
            return Fraction(int(m.group(1)), den)
        raise ParseError(f"not an exact rational: {text!r}")

    def format(self, x: Fraction) -> str:
        x = self(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def spec(self) -> dict:
        return {"kind": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


class Residue:
    """An element of GF(p), kept reduced into ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> Residue:
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.inverse() * o

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class PrimeField:
    """GF(p) for a prime ``p``."""

    kind = "gfp"

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            raise ValueError(f"GF(p) needs a prime modulus, got {p!r}")
        self.p = p
        self.characteristic = p
        self.zero = Residue(0, p)
        self.one = Residue(1, p)

    def __call__(self, value) -> Residue:
        if isinstance(value, Residue):
            if value.p != self.p:
                raise ValueError(f"residue mod {value.p} is not in GF({self.p})")
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, int):
            return Residue(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
            return Residue(value.numerator, self.p) / value.denominator
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"refusing inexact or unknown scalar {value!r}")

    def parse(self, text: str) -> Residue:
        s = text.strip()
        if not _INT_RE.match(s):
            raise ParseError(f"GF({self.p}) entries must be decimal integers, got {text!r}")
        v = int(s)
        if not 0 <= v < self.p:
            raise ParseError(f"GF({self.p}) entry {v} outside [0, {self.p})")
        return Residue(v, self.p)

    def format(self, x) -> str:
        return str(self(x).value)

    def contains(self, x) -> bool:
        return isinstance(x, Residue) and x.p == self.p

    def spec(self) -> dict:
        return {"kind": "gfp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gfp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def field_from_spec(spec) -> RationalField | PrimeField:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ParseError("'scalars' must be an object with a 'kind' field")
    kind = spec["kind"]
    if kind == "rational":
        return QQ
    if kind == "gfp":
        p = spec.get("p")
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            raise ParseError(f"'scalars.p' must be a prime integer, got {p!r}")
        return PrimeField(p)
    raise ParseError(f"unknown scalar kind {kind!r}")
