"""Command-line entry point: ``genasso build`` and ``genasso verify``.

Exit codes: 0 success, 1 a theorem or golden check failed, 2 bad configuration,
3 a precondition failed (basepoint, crystallographic type), 4 the requested
exact field is not available for the group.
"""

from __future__ import annotations

import argparse
import sys

from . import export, verify
from .cambrian import build_associahedron, cambrian_lattice, make_coxeter_element
from .coxeter import CoxeterSystem, GroupTooLarge, WeakOrderLattice, build_system
from .permutahedron import build_permutahedron
from .roots import (GroupSpecError, InvariantViolation, PreconditionError,
                    UnsupportedExactField)

EXIT_OK = 0
EXIT_THEOREM = 1
EXIT_CONFIG = 2
EXIT_PRECONDITION = 3
EXIT_FIELD = 4

OBJECTS = ("permutahedron", "associahedron", "cambrian-lattice", "weak-order", "root-system")
FORMATS = {
    "permutahedron": ("json", "off", "dot"),
    "associahedron": ("json", "off"),
    "cambrian-lattice": ("json", "dot"),
    "weak-order": ("json", "dot"),
    "root-system": ("json",),
}


class ConfigError(ValueError):
    pass


def _common(p: argparse.ArgumentParser):
    p.add_argument("--group", required=True, help="A<n>, B<n>, I2:<m>, H3 or x-joined products such as I2:4xI2:2")
    p.add_argument("--coxeter", help="Coxeter element as concatenated generator names, e.g. t1t2t3 or ts")
    bp = p.add_mutually_exclusive_group()
    bp.add_argument("--basepoint-delta", help="comma-separated coordinates in the simple-root basis")
    bp.add_argument("--basepoint-ambient", help="comma-separated ambient coordinates")
    p.add_argument("--arith", choices=("auto", "exact", "float"), default="auto")
    p.add_argument("-o", "--output", help="output file (default: stdout)")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genasso", description="Permutahedra and generalized associahedra of finite reflection groups")
    sub = parser.add_subparsers(dest="command", required=True)
    b = sub.add_parser("build", help="build an object and write it as JSON, OFF or DOT")
    _common(b)
    b.add_argument("--object", choices=OBJECTS, default="permutahedron")
    b.add_argument("--format", choices=("json", "off", "dot"), default="json")
    v = sub.add_parser("verify", help="run claim checks and write a JSON report")
    _common(v)
    v.add_argument("--all", action="store_true", help="run every claim (the default)")
    v.add_argument("--claim", action="append", choices=sorted(verify.CLAIMS), default=[],
                   help="run only this claim; repeatable")
    return parser


def _basepoint(cs: CoxeterSystem, args):
    rs = cs.roots
    F = rs.field
    text = args.basepoint_delta or args.basepoint_ambient
    if text is None:
        return None
    try:
        coords = tuple(F.parse(x.strip()) for x in text.split(","))
    except (ValueError, ArithmeticError) as exc:
        raise ConfigError(f"cannot parse basepoint {text!r}: {exc}") from exc
    if args.basepoint_delta:
        if len(coords) != rs.rank:
            raise ConfigError(f"--basepoint-delta needs {rs.rank} coordinates")
        return rs.from_delta(coords)
    return coords


def _coxeter(cs: CoxeterSystem, text, required: bool):
    if text is None:
        if not required:
            return None
        text = "".join(cs.roots.names)
    try:
        return make_coxeter_element(cs, cs.parse_word(text))
    except ValueError as exc:
        raise ConfigError(f"bad Coxeter element {text!r}: {exc}") from exc


def _system(args) -> CoxeterSystem:
    return build_system(args.group, args.arith)


def cmd_build(args) -> tuple[int, str]:
    if args.format not in FORMATS[args.object]:
        raise ConfigError(f"{args.object} cannot be written as {args.format}; use one of {', '.join(FORMATS[args.object])}")
    cs = _system(args)
    a = _basepoint(cs, args)
    obj, fmt = args.object, args.format
    if obj == "root-system":
        return EXIT_OK, export.dumps(export.root_system_json(cs.roots))
    if obj == "weak-order":
        wl = WeakOrderLattice(cs)
        return EXIT_OK, export.dumps(export.weak_order_json(wl)) if fmt == "json" else export.weak_order_dot(wl)
    if obj == "permutahedron":
        perm = build_permutahedron(cs, a)
        if fmt == "json":
            return EXIT_OK, export.dumps(export.permutahedron_json(perm))
        return EXIT_OK, export.to_off(perm.polytope) if fmt == "off" else export.skeleton_dot(perm)
    c = _coxeter(cs, args.coxeter, required=True)
    asso = build_associahedron(cs, c, a)
    if obj == "associahedron":
        if fmt == "json":
            return EXIT_OK, export.dumps(export.associahedron_json(asso))
        return EXIT_OK, export.to_off(asso.polytope)
    lat = cambrian_lattice(asso)
    if fmt == "json":
        return EXIT_OK, export.dumps(export.cambrian_json(lat, cs))
    return EXIT_OK, export.cambrian_dot(lat, cs)


def cmd_verify(args) -> tuple[int, str]:
    cs = _system(args)
    a = _basepoint(cs, args)
    c = _coxeter(cs, args.coxeter, required=False)
    claims = sorted(set(args.claim), key=list(verify.CLAIMS).index) or None
    report = verify.run(cs, claims, basepoint=a, coxeter=c, strict=bool(claims))
    return (EXIT_OK if report["ok"] else EXIT_THEOREM), export.dumps(report)


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    handler = cmd_build if args.command == "build" else cmd_verify
    try:
        code, text = handler(args)
    except (ConfigError, GroupSpecError, GroupTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except UnsupportedExactField as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FIELD
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InvariantViolation as exc:
        print(f"error: invariant violated: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
