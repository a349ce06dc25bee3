"""Build the two-dimensional bicrossproduct example without the final
verification and print its coproduct, antipode, and checker verdicts."""

import argparse
from dataclasses import dataclass

from homhopf import builtin_example, check_hopf
from homhopf import products as P


@dataclass
class Config:
    max_violations: int = 8


def _show(D, vec):
    terms = [f"{c}*{D.names[i]}" for i, c in enumerate(vec) if c]
    return " + ".join(terms) or "0"


def main(cfg: Config) -> None:
    doc = builtin_example("bicross-2-5-data")
    B, H = builtin_example("bicross-2-5-B").hopf(), doc.hopf()
    d = P.BicrossData.from_tensors(B, H, doc.action, doc.coaction)
    print(f"conditions: {P.check_bicross_data(d).verdict}")
    D = P.bicrossproduct(d, verify=False)
    for i in range(D.dim):
        co = D.coproduct(D.e(i))
        pieces = [f"{c}*{D.names[a]}(x){D.names[b]}" for (a, b), c in sorted(co.data.items())]
        print(f"Delta({D.names[i]}) = {' + '.join(pieces)}")
        print(f"S({D.names[i]}) = {_show(D, D.antipode(D.e(i)))}")
    rep = check_hopf(D, max_violations=cfg.max_violations)
    for line in rep.lines(str):
        if not line.endswith(": pass"):
            print(line)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-violations", type=int, default=Config.max_violations)
    main(Config(ap.parse_args().max_violations))
