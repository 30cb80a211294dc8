"""Command-line interface.

Subcommands: build, validate, invariants, isosig, iso, move, volume,
connect, dedupe.  Wherever a FILE is expected, `-` reads the gluing
table from stdin and a `sig:<signature>` token decodes a canonical
signature instead.  Exit codes: 0 for success or an affirmative answer,
1 for a negative or not-found answer, 2 for usage errors or invalid
input.  Output is line-oriented and stable across runs.
"""

import argparse
import sys

from .builders import build_x101, build_x103
from .fileio import parse, serialize, ParseError
from .homology import first_homology
from .isosig import canonical_signature, decode_signature
from .moves import MoveDescriptor, apply_move, MoveError
from .search import SearchBudget, bfs_connect, dedupe_census, _invariant_key
from .triangulation import skeleton, is_orientable, validate
from .volume import max_volume


class InputError(Exception):
    pass


def _load(arg):
    if arg.startswith("sig:"):
        try:
            return decode_signature(arg[4:])
        except ValueError as exc:
            raise InputError("bad signature %r: %s" % (arg, exc)) from exc
    try:
        if arg == "-":
            text = sys.stdin.read()
        else:
            with open(arg, "r", encoding="ascii") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    try:
        return parse(text)
    except ParseError as exc:
        raise InputError("%s: %s" % (arg, exc)) from exc


def _write(tri, path):
    text = serialize(tri)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _cmd_build(args):
    if args.what == "x101":
        tri = build_x101()
    else:
        tri = build_x103(args.choice)
    _write(tri, args.output)
    return 0


def _cmd_validate(args):
    tri = _load(args.file)
    report = validate(tri)
    for label, ok in (("involution", report.involution_ok),
                      ("closed", report.closed),
                      ("connected", report.connected),
                      ("edges-valid", report.edges_valid),
                      ("links-ok", report.links_ok)):
        print("%s: %s" % (label, "ok" if ok else "FAIL"))
    for msg in report.messages:
        print("note: %s" % msg)
    print("census-valid: %s" % ("yes" if report.census_valid else "no"))
    return 0 if report.census_valid else 1


def _cmd_invariants(args):
    tri = _load(args.file)
    report = validate(tri)
    if not report.census_valid:
        print("not census-valid: %s" % "; ".join(report.messages),
              file=sys.stderr)
        return 2
    sk = skeleton(tri)
    print("tets: %d" % tri.size)
    print("cusps: %d" % len(sk.vertices))
    print("orientable: %s" % ("yes" if is_orientable(tri) else "no"))
    print("H1: %s" % first_homology(tri))
    return 0


def _cmd_isosig(args):
    print(canonical_signature(_load(args.file)))
    return 0


def _cmd_iso(args):
    same = (canonical_signature(_load(args.a))
            == canonical_signature(_load(args.b)))
    print("isomorphic" if same else "not isomorphic")
    return 0 if same else 1


def _cmd_move(args):
    tri = _load(args.file)
    desc = MoveDescriptor(kind=args.type, loc=args.loc, choice=args.choice)
    _write(apply_move(tri, desc), args.output)
    return 0


def _cmd_volume(args):
    tri = _load(args.file)
    result = max_volume(tri, grad_tol=args.tol, max_iter=args.max_iter)
    if result.status == "infeasible":
        print("status: infeasible (no angle structure)")
        return 1
    print("volume: %.9f" % result.volume)
    print("status: %s" % result.status)
    print("iterations: %d" % result.iterations)
    print("equality-residual: %.3e" % result.residuals["equality"])
    print("projected-gradient: %.3e" % result.residuals["projected_gradient"])
    print("min-angle: %.3e" % result.residuals["min_angle"])
    for (t, s) in result.residuals.get("near_zero_angles", []):
        print("near-zero-angle: tet %d slot %d" % (t, s))
    return 0 if result.status in ("interior-max", "boundary-max") else 1


_KIND_NAME = {23: "2-3", 32: "3-2", 44: "4-4"}


def _cmd_connect(args):
    a, b = _load(args.a), _load(args.b)
    budget = SearchBudget(max_extra_tets=args.max_extra,
                          max_depth=args.max_depth,
                          max_nodes=args.max_nodes)
    if _invariant_key(a) != _invariant_key(b):
        print("distinct manifolds: invariants differ "
              "(cusps/orientability/H1)")
        return 1
    path = bfs_connect(a, b, budget)
    if path is None:
        print("no path found within budget (connectivity unknown)")
        return 1
    print("path of length %d" % len(path))
    for i, d in enumerate(path.moves, start=1):
        loc_kind = "face" if d.kind == 23 else "edge"
        extra = " choice %d" % d.choice if d.kind == 44 else ""
        print("step %d: %s at %s %d%s"
              % (i, _KIND_NAME[d.kind], loc_kind, d.loc, extra))
    return 0


def _cmd_dedupe(args):
    entries = [(name, _load(name)) for name in args.files]
    budget = SearchBudget(max_extra_tets=args.max_extra,
                          max_depth=args.max_depth,
                          max_nodes=args.max_nodes)
    report = dedupe_census(entries, budget)
    duplicates = False
    for group in report.groups:
        print("group: %s" % " ".join(group.names))
        if len(group.names) > 1:
            duplicates = True
        for (src, dst, path) in group.witnesses:
            print("  witness %s -> %s: %d moves" % (src, dst, len(path)))
    return 0 if duplicates else 1


def _parser():
    ap = argparse.ArgumentParser(
        prog="idealtri",
        description="Ideal triangulations of cusped 3-manifolds: builders, "
                    "Pachner moves, signatures, homology and volumes.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a census triangulation")
    p.add_argument("what", choices=("x101", "x103"))
    p.add_argument("--choice", type=int, choices=(0, 1), default=0,
                   help="diagonal choice for the 4-4 move building x103")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("validate", help="diagnose census validity")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("invariants", help="print cusps, orientability, H1")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("isosig", help="print the canonical signature")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=_cmd_isosig)

    p = sub.add_parser("iso", help="test combinatorial isomorphism")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("move", help="apply a Pachner or 4-4 move")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--type", type=int, choices=(23, 32, 44), required=True)
    p.add_argument("--loc", type=int, required=True,
                   help="face class index (2-3) or edge class index "
                        "(3-2, 4-4) in skeleton order")
    p.add_argument("--choice", type=int, choices=(0, 1), default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_move)

    p = sub.add_parser("volume", help="maximise the angle-structure volume")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="projected-gradient stopping tolerance")
    p.add_argument("--max-iter", type=int, default=100000)
    p.set_defaults(func=_cmd_volume)

    p = sub.add_parser("connect", help="search for a Pachner path")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--max-extra", type=int, default=1)
    p.add_argument("--max-depth", type=int, default=2)
    p.add_argument("--max-nodes", type=int, default=100000)
    p.set_defaults(func=_cmd_connect)

    p = sub.add_parser("dedupe", help="group census entries by move paths")
    p.add_argument("files", nargs="+")
    p.add_argument("--max-extra", type=int, default=1)
    p.add_argument("--max-depth", type=int, default=2)
    p.add_argument("--max-nodes", type=int, default=100000)
    p.set_defaults(func=_cmd_dedupe)

    return ap


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, MoveError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
