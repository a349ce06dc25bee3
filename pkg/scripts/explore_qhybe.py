"""Evaluate the canonical R-matrix of a Drinfeld double against every
ordering of the three legs on both sides of the first Yang-Baxter equation.

Prints which of the twelve ``X(Y Z) = (U V) W`` forms hold, which shows
the ordering the double's R actually satisfies.
"""

import argparse
from dataclasses import dataclass
from itertools import permutations

from homhopf import builtin_hopf
from homhopf.products import drinfeld_double
from homhopf import rmatrix as RM


@dataclass
class Config:
    example: str = "sweedler-hom"
    p: int | None = None


def main(cfg: Config) -> None:
    H = builtin_hopf(cfg.example, cfg.p)
    D = drinfeld_double(H)
    R = RM.canonical_double_r(D)
    m = D.mul
    legs = dict(zip(("R12", "R13", "R23"), RM.legs(R)))
    tm = RM._triple_mul
    print(f"D({cfg.example}): dim {D.dim}, R has {R.nonzero_count()} nonzero coefficients")
    print(f"quasitriangular: {RM.check_quasitriangular(R).verdict}")
    left = tm(legs["R12"], tm(legs["R13"], legs["R23"], m), m)
    for u, v, w in permutations(legs):
        right = tm(tm(legs[u], legs[v], m), legs[w], m)
        mark = "holds" if left == right else "fails"
        print(f"  R12(R13 R23) = ({u} {v}){w}: {mark}")
    rep = RM.check_qhybe(R)
    print(f"qhybe: {rep.verdict} {rep.failed_identities()}")
    for note in rep.notes:
        print(f"  note: {note}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--example", default=Config.example)
    ap.add_argument("--p", type=int, default=None)
    ns = ap.parse_args()
    main(Config(ns.example, ns.p))
