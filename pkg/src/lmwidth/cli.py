"""Command-line front end: ``lmwidth <command> ...``.

Reports go to stdout as JSON (or as a graph in the chosen ``--format``),
diagnostics to stderr.  Exit codes: 0 success, 1 acceptance failure,
2 usage or domain error, 3 resource limit, 4 file error, 5 rejected
certificate, 70 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import acceptance
from .certificates import LowerBoundCertificate, certify_H_square, certify_square_lower_bound, check_certificate
from .errors import CertificateError, DomainError, InternalError, ResourceError
from .families import gen_family
from .graph import Graph, graph_power
from .io import dumps_dot, dumps_edgelist, read_graph, read_layout
from .layout import DEFAULT_ORACLE_CUTOFF, lmw_oracle, mw_of_layout, power_profile
from .matching import DEFAULT_MIM_BUDGET
from .tree import construct_tree_layout, tree_lmw

EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE, EXIT_IO, EXIT_REJECTED, EXIT_INTERNAL = 1, 2, 3, 4, 5, 70


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
        print(f"wrote {out}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out=None) -> None:
    _emit(json.dumps(obj, indent=2) + "\n", out)


def _graph_text(g: Graph, fmt: str) -> str:
    if fmt == "dot":
        return dumps_dot(g)
    if fmt == "json":
        return json.dumps({"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}) + "\n"
    return dumps_edgelist(g)


def cmd_gen(args) -> int:
    family = args.family or args.family_opt
    k = args.k if args.k is not None else args.k_opt
    if family is None or k is None:
        raise DomainError("gen needs a family (L or H) and a level k")
    fam = gen_family(family, k)
    _emit(_graph_text(fam.graph, args.format), args.out)
    if args.out:
        roles = Path(args.out).with_suffix(".roles.json")
        roles.write_text(json.dumps(fam.role_map(), indent=2) + "\n")
        print(f"wrote {roles}", file=sys.stderr)
    return 0


def cmd_power(args) -> int:
    g = read_graph(args.graph)
    _emit(_graph_text(graph_power(g, args.m), args.format), args.out)
    return 0


def cmd_eval(args) -> int:
    g = read_graph(args.graph)
    report = mw_of_layout(g, read_layout(args.layout, g), args.mim_budget)
    _emit_json(report.to_json(), args.out)
    return 0


def cmd_exact(args) -> int:
    g = read_graph(args.graph)
    w, layout = lmw_oracle(g, args.oracle_cutoff, args.mim_budget)
    _emit_json({"width": w, "layout": list(layout.order), "method": "oracle"}, args.out)
    return 0


def cmd_tree(args) -> int:
    g = read_graph(args.graph)
    _emit_json({"width": tree_lmw(g), "method": "tree"}, args.out)
    return 0


def cmd_layout_tree(args) -> int:
    g = read_graph(args.graph)
    _, report = construct_tree_layout(g, args.oracle_cutoff, args.mim_budget)
    _emit_json(report.to_json(), args.out)
    return 0


def cmd_certify(args) -> int:
    if args.tree:
        t = read_graph(args.tree)
        cert = certify_square_lower_bound(t)
        sq = graph_power(t, 2)
    elif args.family == "L":
        t = gen_family("L", args.k).graph
        cert = certify_square_lower_bound(t)
        sq = graph_power(t, 2)
    elif args.family == "H":
        cert = certify_H_square(args.k)
        sq = graph_power(gen_family("H", args.k).graph, 2)
    else:
        raise DomainError("certify needs a family (L or H) and k, or --tree FILE")
    bound = check_certificate(sq, cert, args.oracle_cutoff, args.mim_budget)
    print(f"certificate validated: lmw >= {bound} on a {sq.n}-vertex square", file=sys.stderr)
    _emit_json(cert.to_json(), args.out)
    return 0


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    try:
        cert = LowerBoundCertificate.loads(Path(args.cert).read_text())
    except json.JSONDecodeError as exc:
        raise CertificateError("/", "schema", f"not JSON: {exc}") from None
    try:
        bound = check_certificate(g, cert, args.oracle_cutoff, args.mim_budget)
    except CertificateError as exc:
        _emit_json({"valid": False, "node": exc.node, "condition": exc.condition, "message": str(exc)}, args.out)
        return EXIT_REJECTED
    _emit_json({"valid": True, "bound": bound}, args.out)
    return 0


def cmd_profile(args) -> int:
    g = read_graph(args.graph)
    rows = power_profile(g, args.max_m, args.oracle_cutoff, args.mim_budget)
    _emit_json({"rows": [vars(r) for r in rows]}, args.out)
    return 0


def cmd_acceptance(args) -> int:
    cfg = acceptance.RunConfig(args.oracle_cutoff, args.mim_budget, args.seed)
    results = acceptance.run_all(cfg, only=set(args.only or ()), stream=sys.stderr)
    passed = all(r.passed for r in results)
    _emit_json({"seed": cfg.seed, "oracle_cutoff": cfg.oracle_cutoff, "mim_budget": cfg.mim_budget,
                "passed": passed, "criteria": [r.to_json() for r in results]}, args.out)
    return 0 if passed else EXIT_FAIL


def _nat(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle-cutoff", type=_positive, default=DEFAULT_ORACLE_CUTOFF,
                        help="largest vertex count the exact oracle accepts (default %(default)s)")
    common.add_argument("--seed", type=_nat, default=0, help="seed for randomized suites (default 0)")
    common.add_argument("--mim-budget", type=_positive, default=DEFAULT_MIM_BUDGET,
                        help="node-expansion cap of the induced matching search")
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("edgelist", "dot", "json"), default="edgelist",
                        help="graph output format (gen, power)")

    parser = argparse.ArgumentParser(prog="lmwidth", description="Linear MIM-width of graphs and tree squares.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(fn=fn)
        return p

    p = add("gen", cmd_gen, "generate L(k) or H(k)")
    p.add_argument("family", nargs="?", choices=("L", "H"))
    p.add_argument("k", nargs="?", type=_nat)
    p.add_argument("--family", dest="family_opt", choices=("L", "H"), help="same as the positional FAMILY")
    p.add_argument("--k", dest="k_opt", type=_nat, help="same as the positional K")
    p = add("power", cmd_power, "m-th power of a graph")
    p.add_argument("graph")
    p.add_argument("m", type=_positive)
    p = add("eval-layout", cmd_eval, "MIM-width of a graph under a layout")
    p.add_argument("graph")
    p.add_argument("layout")
    p = add("lmw-exact", cmd_exact, "exact linear MIM-width by the subset oracle")
    p.add_argument("graph")
    p = add("lmw-tree", cmd_tree, "exact linear MIM-width of a tree")
    p.add_argument("graph")
    p = add("layout-tree", cmd_layout_tree, "optimal layout of a tree with its width report")
    p.add_argument("graph")
    p = add("certify", cmd_certify, "build and validate a lower-bound certificate for a tree square")
    p.add_argument("family", nargs="?", choices=("L", "H"))
    p.add_argument("k", nargs="?", type=_nat, default=0)
    p.add_argument("--tree", help="certify the square of this tree instead of a family member")
    p = add("check-cert", cmd_check, "validate a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("cert")
    p = add("power-profile", cmd_profile, "lmw of G^m for m = 1..max-m")
    p.add_argument("graph")
    p.add_argument("--max-m", type=_positive, default=4)
    p = add("acceptance", cmd_acceptance, "run the acceptance suite")
    p.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CertificateError as exc:
        print(f"error: certificate rejected at {exc.node} ({exc.condition}): {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
