"""Run the acceptance suite and print one line per criterion."""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class Config:
    criteria: tuple = ()  # empty runs all eight
    verbose: bool = False


def main(cfg: Config) -> int:
    args = [str(ROOT / "tests" / "test_acceptance.py"), "-q", "-p", "no:cacheprovider"]
    if cfg.criteria:
        args += ["-k", " or ".join(f"criterion_{n}_" for n in cfg.criteria)]
    if cfg.verbose:
        args.append("-s")
    return pytest.main(args)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("criteria", nargs="*", type=int)
    ap.add_argument("-v", "--verbose", action="store_true")
    ns = ap.parse_args()
    sys.exit(main(Config(tuple(ns.criteria), ns.verbose)))
