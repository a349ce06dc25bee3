"""Command-line interface.

Exit codes: 0 when every check passes, 1 when a check or construction
reports violations, 2 on bad input or usage.

Subcommands::

    check <file> [--level algebra|coalgebra|bialgebra|hopf]
    construct --op smash|cosmash|bicross|mirror|dcp --inputs <files...> -o <file>
    double <file> -o <file>
    rcheck <file> [--r <file> | --canonical]
    example --name <name> -o <file> [--p <prime>]

Inputs for ``construct``:

* ``smash``/``cosmash``/``bicross``: ``B`` then ``H``, where the ``H``
  document carries ``action`` (``H (x) B -> B``) and/or ``coaction``
  (``H -> H (x) B``).  ``smash`` writes an algebra-only document;
  ``cosmash`` pairs the smash coproduct with the tensor-product algebra.
* ``mirror``: one Hom-Hopf document.
* ``dcp``: ``B`` then ``H``, where ``H`` carries ``action`` (``H (x) B -> B``)
  and ``right_action`` (``H (x) B -> H``).

Every command accepts ``--json`` (one JSON object on stdout, validated
by :data:`REPORT_SCHEMA`) and ``--max-violations N``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import actions, products, rmatrix
from .catalog import EXAMPLE_NAMES, builtin_example
from .documents import AlgebraDocument, load_document, save_document
from .errors import HomHopfError, ReportedFailure
from .hom_structures import DEFAULT_MAX_VIOLATIONS, LEVELS, HomBialgebra, check_level
from .scalars import Residue

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "status", "exit_code", "reports", "output", "error"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "status": {"enum": ["pass", "fail", "error"]},
        "exit_code": {"enum": [0, 1, 2]},
        "output": {"type": ["string", "null"]},
        "error": {"type": ["string", "null"]},
        "reports": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "subject", "verdict", "identities", "violation_count",
                    "truncated", "violations", "notes",
                ],
                "additionalProperties": False,
                "properties": {
                    "subject": {"type": "string"},
                    "verdict": {"enum": ["pass", "fail"]},
                    "identities": {"type": "array", "items": {"type": "string"}},
                    "violation_count": {"type": "integer", "minimum": 0},
                    "truncated": {"type": "integer", "minimum": 0},
                    "notes": {"type": "array", "items": {"type": "string"}},
                    "violations": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["identity", "witness", "lhs", "rhs"],
                            "additionalProperties": False,
                            "properties": {
                                "identity": {"type": "string"},
                                "witness": {"type": "array", "items": {"type": "integer"}},
                                "lhs": {"type": "array", "items": {"type": "string"}},
                                "rhs": {"type": "array", "items": {"type": "string"}},
                            },
                        },
                    },
                },
            },
        },
    },
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument(
        "--max-violations", type=int, default=DEFAULT_MAX_VIOLATIONS, metavar="N",
        help="violations listed per report (default %(default)s)",
    )
    p = _Parser(prog="homhopf", description="Exact checks and constructions for Hom-Hopf algebras.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="check the axioms of a document")
    c.add_argument("file")
    c.add_argument("--level", choices=LEVELS)

    c = sub.add_parser("construct", parents=[common], help="run a construction")
    c.add_argument("--op", required=True, choices=("smash", "cosmash", "bicross", "mirror", "dcp"))
    c.add_argument("--inputs", nargs="+", required=True)
    c.add_argument("-o", "--output", required=True)

    c = sub.add_parser("double", parents=[common], help="build the Drinfeld double")
    c.add_argument("file")
    c.add_argument("-o", "--output", required=True)

    c = sub.add_parser("rcheck", parents=[common], help="check an R-matrix")
    c.add_argument("file")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--r", dest="r_file", help="take R from this document's 'r' block")
    g.add_argument("--canonical", action="store_true", help="use the canonical R of a double")

    c = sub.add_parser("example", parents=[common], help="write a builtin example")
    c.add_argument("--name", required=True, choices=EXAMPLE_NAMES)
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--p", type=int, default=None, help="reduce modulo this prime")
    return p


# -- commands -----------------------------------------------------------------------


def _richest_level(doc: AlgebraDocument) -> str:
    if not doc.has_coalgebra:
        return "algebra"
    return "hopf" if doc.antipode is not None else "bialgebra"


def cmd_check(args):
    doc = load_document(args.file)
    level = args.level or _richest_level(doc)
    have = LEVELS.index(_richest_level(doc))
    if LEVELS.index(level) > have:
        raise UsageError(f"document does not describe a {level} structure")
    rep = check_level(doc.structure(), level, args.max_violations)
    return [rep], None


def _need(doc, key, path):
    block = getattr(doc, key)
    if block is None:
        raise UsageError(f"{path}: construction needs a {key!r} block")
    return block


def _inputs(args, count):
    if len(args.inputs) != count:
        raise UsageError(f"--op {args.op} takes {count} input file(s), got {len(args.inputs)}")
    return [load_document(p) for p in args.inputs]


def cmd_construct(args):
    mv = args.max_violations
    op = args.op
    if op == "mirror":
        (doc,) = _inputs(args, 1)
        out = products.mirror_bicrossproduct(doc.hopf(), max_violations=mv)
        save_document(AlgebraDocument.from_structure(out), args.output)
        return [], args.output
    Bdoc, Hdoc = _inputs(args, 2)
    pB, pH = args.inputs
    if op == "smash":
        B, H = Bdoc.algebra(), Hdoc.bialgebra()
        act = actions.ModuleAction(_need(Hdoc, "action", pH), H, B)
        out = actions.smash_product(B, H, act, max_violations=mv)
    elif op == "cosmash":
        B, H = Bdoc.bialgebra(), Hdoc.coalgebra()
        co = actions.Coaction(_need(Hdoc, "coaction", pH), H, B)
        C = actions.smash_coproduct(B, H, co, max_violations=mv)
        A = actions.tensor_product_algebra(B, Hdoc.algebra())
        out = HomBialgebra(A, C)
    elif op == "bicross":
        B, H = Bdoc.hopf(), Hdoc.hopf()
        d = products.BicrossData.from_tensors(
            B, H, _need(Hdoc, "action", pH), _need(Hdoc, "coaction", pH)
        )
        out = products.bicrossproduct(d, max_violations=mv)
    else:  # dcp
        B, H = Bdoc.hopf(), Hdoc.hopf()
        p = products.MatchedPair(B, H, _need(Hdoc, "action", pH), _need(Hdoc, "right_action", pH))
        out = products.double_cross_product(p, max_violations=mv)
    save_document(AlgebraDocument.from_structure(out), args.output)
    return [], args.output


def cmd_double(args):
    H = load_document(args.file).hopf()
    D = products.drinfeld_double(H, max_violations=args.max_violations)
    save_document(AlgebraDocument.from_structure(D), args.output)
    return [], args.output


def cmd_rcheck(args):
    doc = load_document(args.file)
    H = doc.hopf()
    if args.canonical:
        R = rmatrix.canonical_double_r(H)
    else:
        src = load_document(args.r_file) if args.r_file else doc
        if src.r is None:
            raise UsageError("no 'r' block found; pass --r <file> or --canonical")
        if src.dim != H.dim:
            raise UsageError(f"R has dimension {src.dim}, algebra has {H.dim}")
        R = rmatrix.RVector(H, src.r)
    mv = args.max_violations
    return [rmatrix.check_quasitriangular(R, mv), rmatrix.check_qhybe(R, mv)], None


def cmd_example(args):
    save_document(builtin_example(args.name, args.p), args.output)
    return [], args.output


COMMANDS = {
    "check": cmd_check,
    "construct": cmd_construct,
    "double": cmd_double,
    "rcheck": cmd_rcheck,
    "example": cmd_example,
}


# -- driver -------------------------------------------------------------------------


def _emit(payload, reports, fmt, as_json, out, err):
    if as_json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return
    for rep in reports:
        for line in rep.lines(fmt):
            out.write(line + "\n")
    if payload["output"] and payload["exit_code"] == EXIT_PASS:
        out.write(f"wrote {payload['output']}\n")
    if payload["error"]:
        err.write(payload["error"].rstrip("\n") + "\n")


def run_command(argv, out=None, err=None) -> int:
    """Run one CLI invocation and return its exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    as_json = "--json" in argv
    command = next((a for a in argv if a in COMMANDS), "")
    payload = {"command": command, "status": "error", "exit_code": EXIT_INPUT,
               "reports": [], "output": None, "error": None}
    reports = []
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:  # --help
            return EXIT_PASS if e.code in (0, None) else EXIT_INPUT
        if args.command is None:
            raise UsageError(parser.format_usage())
        reports, output = COMMANDS[args.command](args)
        ok = all(r.passed for r in reports)
        payload.update(status="pass" if ok else "fail", exit_code=EXIT_PASS if ok else EXIT_FAIL,
                       output=output)
    except UsageError as e:
        payload["error"] = str(e)
    except ReportedFailure as e:
        if e.report is not None:
            reports = [e.report]
        payload.update(status="fail", exit_code=EXIT_FAIL, error=f"{type(e).__name__}: {e}")
    except (HomHopfError, OSError, ValueError, ArithmeticError) as e:
        payload["error"] = f"{type(e).__name__}: {e}"
    payload["reports"] = [r.to_json(_scalar_text) for r in reports]
    _emit(payload, reports, _scalar_text, as_json, out, err)
    return payload["exit_code"]


def _scalar_text(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    if isinstance(c, Residue):
        return str(c.value)
    return str(c)


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
