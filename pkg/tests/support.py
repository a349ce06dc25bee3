"""Cached builders shared by the test modules."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from homhopf import QQ, HomHopfAlgebra, LinMap, StructureTensor, builtin_example
from homhopf import products, rmatrix

import classical_oracle as oracle


@lru_cache(maxsize=None)
def doc(name, p=None):
    return builtin_example(name, p)


@lru_cache(maxsize=None)
def hopf(name, p=None) -> HomHopfAlgebra:
    return doc(name, p).hopf()


@lru_cache(maxsize=None)
def double(name) -> HomHopfAlgebra:
    return products.drinfeld_double(hopf(name))


@lru_cache(maxsize=None)
def canonical_r(name) -> rmatrix.RVector:
    return rmatrix.canonical_double_r(double(name))


@lru_cache(maxsize=None)
def mirror(name) -> HomHopfAlgebra:
    return products.mirror_bicrossproduct(hopf(name))


def from_classical(C: oracle.Hopf, basis=None) -> HomHopfAlgebra:
    """Wrap a classical oracle algebra as a Hom-Hopf algebra with identity twist."""
    mul, com, unit, counit, S = C.tables()
    n = C.n
    return HomHopfAlgebra.build(
        QQ,
        StructureTensor(QQ, (n, n, n), mul),
        unit,
        StructureTensor(QQ, (n, n, n), com),
        counit,
        LinMap.identity(QQ, n),
        LinMap(QQ, S),
        basis=basis,
    )


@lru_cache(maxsize=None)
def classical_sweedler() -> HomHopfAlgebra:
    return from_classical(oracle.sweedler_classical(), ("1", "g", "x", "gx"))


def dense_mul(mul: dict, n: int):
    """Oracle product dict to the package's dense ``[i][j][k]`` layout."""
    return tuple(
        tuple(tuple(mul[(i, j)].get(k, Fraction(0)) for k in range(n)) for j in range(n))
        for i in range(n)
    )


def dense_comul(comul: dict, n: int):
    return tuple(
        tuple(tuple(comul[i].get((j, k), Fraction(0)) for k in range(n)) for j in range(n))
        for i in range(n)
    )


def dense_map(images: dict, n: int):
    """Column images ``{col: {row: c}}`` to a row-major matrix."""
    return tuple(tuple(images[c].get(r, Fraction(0)) for c in range(n)) for r in range(n))


def vec(field, n, entries):
    """Dense vector from ``{index: coefficient}``."""
    out = [field.zero] * n
    for i, c in entries.items():
        out[i] = field(c)
    return tuple(out)
