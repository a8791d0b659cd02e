"""Argument parsing for the isovset command line."""

import argparse

from exceptions import InvalidObject
from gdelta.objects import SimplexObject

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_FAILED = 3


class Parser(argparse.ArgumentParser):
    """Reports usage errors with exit code 1 instead of argparse's 2."""

    def error(self, message):
        self.print_usage()
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def degree(text: str) -> SimplexObject:
    """Parse "n,k"."""
    try:
        n, k = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,k but got {text!r}")
    try:
        return SimplexObject(n, k)
    except InvalidObject as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _ints(sub: argparse.ArgumentParser, *names: str) -> None:
    for name in names:
        sub.add_argument(name, type=int)


def build_parser() -> Parser:
    parser = Parser(prog="isovset", description="Finite isovariant simplicial sets.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    hom = commands.add_parser("hom", help="morphisms [n]_k -> [m]_l")
    hom.add_argument("src", type=degree)
    hom.add_argument("tgt", type=degree)
    mode = hom.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")

    decompose = commands.add_parser("decompose", help="normal form of a map document")
    decompose.add_argument("map_file")

    relations = commands.add_parser("relations", help="check the cosimplicial relations")
    relations.add_argument("--max-n", type=int, default=3)

    build = commands.add_parser("build", help="emit an object document")
    build.add_argument("-o", "--output", help="write the document to a file; --json still reports the census")
    kinds = build.add_subparsers(dest="kind", required=True, parser_class=Parser)
    _ints(kinds.add_parser("delta"), "n", "k")
    _ints(kinds.add_parser("boundary"), "n", "k")
    _ints(kinds.add_parser("horn"), "n", "k", "l")
    _ints(kinds.add_parser("interval"), "n", "k")
    kinds.add_parser("cylinder").add_argument("file")
    kinds.add_parser("terminal")

    check = commands.add_parser("check", help="verify a claim")
    claims = check.add_subparsers(dest="claim", required=True, parser_class=Parser)
    _ints(claims.add_parser("admissible"), "n", "k", "l")
    claims.add_parser("normal").add_argument("file")
    exactness = claims.add_parser("exactness", help="a subobject file and its ambient object file")
    exactness.add_argument("sub")
    exactness.add_argument("ambient")
    saturation = claims.add_parser("saturation")
    _ints(saturation, "n", "k")
    saturation.add_argument("--eps", type=int, choices=(0, 1), default=1)
    _ints(claims.add_parser("retract"), "n", "k", "l")
    _ints(claims.add_parser("derivation"), "n", "k", "l")
    equivalence = claims.add_parser("homotopy-equiv")
    equivalence.add_argument("map_file")
    equivalence.add_argument("--depth", type=int, default=None)
    fillers = claims.add_parser("fillers")
    fillers.add_argument("file")
    fillers.add_argument("--max-n", type=int, default=2)

    export = commands.add_parser("export", help="realize an object and export the mesh")
    export.add_argument("file")
    export.add_argument("--format", choices=("off", "obj", "json"), default="off")
    export.add_argument("-o", "--output")

    euler = commands.add_parser("euler", help="Euler characteristic of the realization")
    euler.add_argument("file")

    suite = commands.add_parser("suite", help="run the verification suite")
    suite.add_argument("--only", nargs="+", metavar="CHECK")
    suite.add_argument("--seed", type=int, default=0)
    return parser
