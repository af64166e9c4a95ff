"""Command-line entry point.

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage or
input error, 3 infeasible or capped search.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds
from .constructions import flag_construction, grouping_reduction, shifts, tensor_construction
from .extendibility import MAX_EXACT_K, SearchInfeasible, check_gupb, is_extendible_multipartite
from .graph import build_graph, pigeonhole_witness, to_dot
from .linalg import Tolerance
from .product import Bipartition, SetFormatError, load_set, set_to_json
from .prover import NoGuarantee, prove_biproduct
from .random_sets import InfeasiblePattern, generate_orthogonal_set
from .seesaw import seesaw_search

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or N1..N2, got {text!r}") from None


def _dims(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace("x", ",").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated dims, got {text!r}") from None


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load(args, path):
    return load_set(path, args.tolerance)


# -- subcommands ---------------------------------------------------------------

def cmd_bounds(args) -> int:
    if args.table:
        nr, dr = args.table
        grid = bounds.table1(nr, dr)
        payload = {"table": [{"n": n, "d": d, "interval": list(iv)} for (n, d), iv in grid.items()]}
        width = max(len(f"<{a},{b}>") for a, b in grid.values()) + 2
        lines = ["n\\d".ljust(5) + "".join(str(d).rjust(width) for d in dr)]
        for n in nr:
            lines.append(str(n).ljust(5) + "".join(
                f"<{grid[n, d][0]},{grid[n, d][1]}>".rjust(width) for d in dr))
        _emit(args, payload, "\n".join(lines))
        return EXIT_OK
    if args.n is None or args.d is None:
        raise UsageError("bounds needs --n and --d, or --table")
    rep = bounds.report(args.n, args.d)
    _emit(args, rep.as_dict(), rep.as_text())
    return EXIT_OK


def cmd_verify_upb(args) -> int:
    pset = _load(args, args.file)
    ext, cert = is_extendible_multipartite(pset, args.max_exact_k)
    payload = {"k": pset.k, "dims": list(pset.shape), "is_upb": not ext,
               "certificate": cert.as_dict() if cert else None}
    text = (f"extendible: product vector orthogonal to all {pset.k} vectors found "
            f"(partition {[list(g) for g in cert.partition]}, max overlap {cert.max_overlap:.2e})"
            if ext else f"unextendible: no product vector is orthogonal to all {pset.k} vectors")
    _emit(args, payload, text)
    return EXIT_NEGATIVE if ext else EXIT_OK


def cmd_check_gupb(args) -> int:
    pset = _load(args, args.file)
    verdict = check_gupb(pset, args.max_exact_k)
    lines = []
    for cut, (ext, cert) in verdict.cuts.items():
        if ext:
            lines.append(f"cut {cut}: extendible, partition {[list(g) for g in cert.partition]}, "
                         f"max overlap {cert.max_overlap:.2e}")
        else:
            lines.append(f"cut {cut}: unextendible")
    lines.append("GUPB candidate" if verdict.is_gupb_candidate else "not a GUPB")
    _emit(args, verdict.as_dict(), "\n".join(lines))
    return EXIT_OK if verdict.is_gupb_candidate else EXIT_NEGATIVE


def cmd_prove(args) -> int:
    pset = _load(args, args.file)
    result = prove_biproduct(pset)
    ok = not isinstance(result, NoGuarantee)
    payload = {"witness": result.as_dict()} if ok else {"no_guarantee": result.as_dict()}
    payload["trace"] = list(result.trace)
    _emit(args, payload, "\n".join(result.trace))
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_graph(args) -> int:
    pset = _load(args, args.file)
    g = build_graph(pset)
    highlight = None
    if args.highlight is not None:
        highlight = tuple(args.highlight)
    elif args.pigeonhole and g.k >= 2:
        v, m, _ = pigeonhole_witness(g)
        highlight = (v, m)
    dot = to_dot(g, highlight, all_colors=args.all_colors)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.kind == "shifts":
        pset = shifts()
    else:
        if not args.files:
            raise UsageError(f"construct {args.kind} needs input set files")
        sets = [_load(args, f) for f in args.files]
        if args.kind == "flag":
            pset = flag_construction(sets)
        elif args.kind == "tensor":
            if len(sets) < 2:
                raise UsageError("construct tensor needs at least two files")
            pset = sets[0]
            for other in sets[1:]:
                pset = tensor_construction(pset, other)
        else:
            if not args.groups:
                raise UsageError("construct group needs --groups, e.g. 0,1:2,3:4,5")
            groups = [[int(x) for x in g.split(",")] for g in args.groups.split(":")]
            pset = grouping_reduction(sets[0], groups)
    sys.stdout.write(set_to_json(pset))
    return EXIT_OK


def cmd_gen_set(args) -> int:
    seed = args.seed if args.seed is not None else 0
    pset = generate_orthogonal_set(args.dims, args.k, seed, tol=args.tolerance)
    sys.stdout.write(set_to_json(pset))
    return EXIT_OK


def cmd_seesaw(args) -> int:
    pset = _load(args, args.file)
    cut = Bipartition.from_left(args.cut, pset.n) if args.cut else None
    seed = args.seed if args.seed is not None else 0
    res = seesaw_search(pset, cut, restarts=args.restarts, iters=args.iters, seed=seed)
    payload = {"found": res.found, "residual": res.residual, "iterations": res.iterations,
               "cut": str(cut) if cut else None,
               "witness": [[[float(z.real), float(z.imag)] for z in f] for f in res.witness.factors]}
    _emit(args, payload, f"{'found' if res.found else 'not found'}: best residual {res.residual:.3e}")
    return EXIT_OK if res.found else EXIT_NEGATIVE


# -- parser ------------------------------------------------------------------

def _add_globals(p, suppress: bool) -> None:
    def default(v):
        return argparse.SUPPRESS if suppress else v

    p.add_argument("--tol", type=float, default=default(1e-9),
                   help="orthogonality and relative rank tolerance (default 1e-9)")
    p.add_argument("--seed", type=int, default=default(None))
    p.add_argument("--format", choices=["text", "json"], default=default("text"))
    p.add_argument("--max-exact-k", type=int, default=default(MAX_EXACT_K),
                   help="largest set size for exact extendibility search")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gupb", description=__doc__.splitlines()[0])
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[common], help="cardinality bounds for (C^d)^n")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--table", nargs=2, type=_int_range, metavar=("N1..N2", "D1..D2"))
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify-upb", parents=[common], help="is the set unextendible by product vectors")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_upb)

    p = sub.add_parser("check-gupb", parents=[common], help="extendibility across every bipartition")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_gupb)

    p = sub.add_parser("prove-biproduct", parents=[common], help="constructive biproduct witness")
    p.add_argument("file")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("graph", parents=[common], help="orthogonality graph as DOT")
    p.add_argument("file")
    p.add_argument("--highlight", nargs=2, type=int, metavar=("VERTEX", "SITE"))
    p.add_argument("--pigeonhole", action="store_true", help="highlight the largest same-site star")
    p.add_argument("--all-colors", action="store_true", help="label edges with every orthogonal site")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("construct", parents=[common], help="build a set and print its JSON")
    p.add_argument("kind", choices=["shifts", "flag", "tensor", "group"])
    p.add_argument("files", nargs="*")
    p.add_argument("--groups", help="site groups for 'group', e.g. 0,1:2,3:4,5")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("gen-set", parents=[common], help="random mutually orthogonal product set")
    p.add_argument("--dims", type=_dims, required=True, help="e.g. 3,3,3")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_gen_set)

    p = sub.add_parser("seesaw", parents=[common], help="numerical search for an orthogonal product vector")
    p.add_argument("file")
    p.add_argument("--cut", type=lambda s: [int(x) for x in s.split(",")],
                   help="left sites of a bipartition, e.g. 0 or 0,2")
    p.add_argument("--restarts", type=int, default=100)
    p.add_argument("--iters", type=int, default=500)
    p.set_defaults(func=cmd_seesaw)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.tolerance = Tolerance(args.tol, args.tol)
        return args.func(args)
    except (SetFormatError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SearchInfeasible, InfeasiblePattern) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
