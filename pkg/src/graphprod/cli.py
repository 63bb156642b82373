"""Command-line front end.

Every subcommand reads and writes JSON documents; reports carry the command
line, a digest of the input, the results and an overall pass flag.  Exit
codes: 0 pass, 1 check failure, 2 input error, 3 collapse budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import inspect
import json
import sys
from pathlib import Path

from . import acceptance, collapse, constructions, homology, projection, verify
from .complexes import (
    Graph1Complex,
    InvalidComplexError,
    ProductSubcomplex,
    Regular2Complex,
    from_json,
    proper_cells_check,
    to_regular2,
)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
CHECKS = ("pseudo", "ramified", "surface", "free-edges", "proper-cells")


class InputError(Exception):
    pass


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, default=_default) + "\n"


def _default(x):
    if isinstance(x, (set, frozenset, tuple)):
        return sorted(x) if isinstance(x, (set, frozenset)) else list(x)
    raise TypeError(f"not JSON serializable: {type(x).__name__}")


def load_complex(path: str):
    """Return ``(complex, raw bytes)``; a construct document's ``complex`` field is accepted too."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path}: not UTF-8 text") from None
    if isinstance(doc, dict) and "complex" in doc and "kind" not in doc:
        doc = doc["complex"]
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    try:
        if doc.get("kind") == "torus-skeleton-model":
            return constructions.SkeletonModel(int(doc["k"]), {frozenset(c) for c in doc["cells"]}), raw
        return from_json(doc), raw
    except (InvalidComplexError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _report(args, raw: bytes | None, results, passed: bool) -> dict:
    return {"command": args.argv, "input_digest": hashlib.sha256(raw or b"").hexdigest() if raw is not None else None,
            "results": results, "pass": passed}


def _emit(args, doc: dict, summary: str) -> None:
    text = dumps(doc)
    if args.out:
        Path(args.out).write_text(text)
        print(summary)
    elif args.json:
        sys.stdout.write(text)
    else:
        print(summary)


# -- subcommands ---------------------------------------------------------------

def cmd_construct(args) -> int:
    if args.name not in constructions.REGISTRY:
        raise InputError(f"unknown construction {args.name!r}; known: {', '.join(sorted(constructions.REGISTRY))}")
    factory = constructions.REGISTRY[args.name]
    accepted = set(inspect.signature(factory).parameters)
    given = {k: getattr(args, k) for k in ("m", "n", "k", "a", "b") if getattr(args, k) is not None}
    extra = set(given) - accepted
    if extra:
        usage = " ".join(f"--{p} INT" for p in inspect.signature(factory).parameters) or "(no parameters)"
        raise InputError(f"{args.name} does not take {', '.join('--' + e for e in sorted(extra))}; usage: {usage}")
    try:
        c = factory(**given)
    except ValueError as exc:
        raise InputError(f"{args.name}: {exc}") from None
    doc = c.to_json() if isinstance(c, constructions.NamedConstruction) else c
    report = c.notes.get("report")
    if report is not None:
        doc["report"] = report.to_json()
    text = dumps(doc)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.name} {c.params} to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def cmd_verify(args) -> int:
    x, raw = load_complex(args.path)
    checks = list(args.checks or [])
    for flag in CHECKS:
        if getattr(args, "flag_" + flag.replace("-", "_")):
            checks.append(flag)
    if not checks:
        checks = ["ramified", "pseudo"]
    if isinstance(x, constructions.SkeletonModel):
        raise InputError("verify needs a graph, regular2 or product-subcomplex document")
    n = args.dim if args.dim is not None else x.dimension()
    results = {}
    for c in dict.fromkeys(checks):
        if c == "pseudo":
            results[c] = verify.pseudo_manifold_check(x, n, simple=args.simple).to_json()
        elif c == "ramified":
            results[c] = verify.ramified_manifold_check(x, n, simple=args.simple).to_json()
        elif c == "surface":
            if isinstance(x, ProductSubcomplex) and x.parent.n != 2:
                raise InputError("the surface check needs a 2-factor product or a regular2 complex")
            results[c] = verify.closed_surface_check(x).to_json()
        elif c == "free-edges":
            fe = sorted(verify.free_edges(x))
            results[c] = {"verdict": not fe, "free_edges": fe}
        elif c == "proper-cells":
            k = to_regular2(x) if isinstance(x, ProductSubcomplex) and x.parent.n == 2 else x
            if isinstance(k, ProductSubcomplex):
                ok, w = True, None  # product cells are proper by construction
            else:
                ok, w = proper_cells_check(k)
            results[c] = {"verdict": ok, "witness": list(w) if w else None}
    passed = all(r["verdict"] for r in results.values())
    summary = ", ".join(f"{c}: {'pass' if r['verdict'] else 'fail'}" for c, r in results.items())
    _emit(args, _report(args, raw, results, passed), summary)
    return EXIT_PASS if passed else EXIT_FAIL


def cmd_homology(args) -> int:
    x, raw = load_complex(args.path)
    if isinstance(x, constructions.SkeletonModel):
        h = homology.homology(x.chain_complex())
    else:
        h = homology.homology_of(x)
    results = {"homology": h.to_json()}
    two_dim = isinstance(x, Regular2Complex) or (isinstance(x, ProductSubcomplex) and x.parent.n == 2)
    if two_dim and x.dimension() == 2:
        results["surface"] = homology.surface_report(x).to_json()
    summary = f"betti {list(h.betti)} torsion {[list(t) for t in h.torsion]} euler {h.euler}"
    _emit(args, _report(args, raw, results, True), summary)
    return EXIT_PASS


def cmd_decompose(args) -> int:
    x, raw = load_complex(args.path)
    if not isinstance(x, ProductSubcomplex):
        raise InputError(f"decompose needs a product-subcomplex document, got {getattr(x, 'kind', type(x).__name__)}")
    try:
        dec = projection.product_decomposition(x)
        results = {"decomposition": dec.to_json()}
        try:
            results["rank_bound"] = projection.rank_bound_assert(x).to_json()
            ok = True
        except projection.PropertyViolation as exc:
            results["rank_bound"] = {"violation": str(exc), "data": exc.data}
            ok = False
    except ValueError as exc:
        raise InputError(str(exc)) from None
    ok = ok and (dec.exact or not dec.claimed)
    summary = f"J(M) = {list(dec.circle_indices)} exact = {dec.exact}"
    _emit(args, _report(args, raw, results, ok), summary)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_collapse(args) -> int:
    x, raw = load_complex(args.path)
    if isinstance(x, ProductSubcomplex):
        if x.parent.n != 2:
            raise InputError("collapse needs a regular2 complex or a 2-factor product subcomplex")
        k = to_regular2(x)
    elif isinstance(x, Graph1Complex):
        k = Regular2Complex(x.vertices, [(e, t, h) for e, (t, h) in x.edges.items()])
    elif isinstance(x, Regular2Complex):
        k = x
    else:
        raise InputError("collapse needs a regular2 complex or a 2-factor product subcomplex")
    plan = collapse.greedy_collapse(k)
    results = {"greedy": {"steps": len(plan.steps), "core_counts": list(plan.core.counts()),
                          "core": collapse.classify_core(plan.core)}}
    status = "collapsible" if plan.collapsed_to_point else None
    if status is None:
        res = collapse.exhaustive_collapsibility(k, args.budget)
        status = res.status
        results["search"] = {"status": res.status, "nodes": res.nodes}
        if res.plan is not None:
            plan = res.plan
    results["status"] = status
    results["plan"] = [s.to_json() for s in plan.steps]
    code = EXIT_PASS
    if args.tree_embed:
        if status == "collapsible":
            t = collapse.tree_embed(k, plan)
            rep = collapse.verify_tree_embedding(t, k)
            results["tree_embedding"] = t.to_json()
            results["tree_embedding_check"] = rep.to_json()
            if not rep.verdict:
                code = EXIT_FAIL
        else:
            code = EXIT_FAIL
    if status == "not-collapsible-within-budget":
        code = EXIT_BUDGET
    summary = f"status {status}; greedy core {results['greedy']['core']}"
    if "tree_embedding_check" in results:
        summary += f"; tree embedding {'verified' if results['tree_embedding_check']['verdict'] else 'FAILED'}"
    _emit(args, _report(args, raw, results, code == EXIT_PASS), summary)
    return code


def cmd_accept(args) -> int:
    selected = acceptance.select(args.filter)
    if not selected:
        raise InputError(f"no criterion matches {args.filter!r}")
    results = [c.run() for c in selected]
    print(acceptance.table(results))
    passed = all(r.passed for r in results)
    if args.out:
        doc = _report(args, None, [r.to_json() for r in results], passed)
        Path(args.out).write_text(dumps(doc))
    return EXIT_PASS if passed else EXIT_FAIL


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphprod", description="Cell complexes in products of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("-o", "--out", help="write the JSON document here")
        sp.add_argument("--json", action=argparse.BooleanOptionalAction, default=True,
                        help="print the JSON document (default) or a one-line summary")

    c = sub.add_parser("construct", help="build a named complex")
    c.add_argument("name", help="construction name: " + ", ".join(sorted(constructions.REGISTRY)))
    for flag in ("m", "n", "k", "a", "b"):
        c.add_argument(f"--{flag}", type=int)
    common(c)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run manifold checks")
    v.add_argument("path")
    v.add_argument("--checks", type=lambda s: [x.strip() for x in s.split(",") if x.strip()],
                   help="comma-separated subset of " + ",".join(CHECKS))
    for flag in CHECKS:
        v.add_argument(f"--{flag}", dest="flag_" + flag.replace("-", "_"), action="store_true")
    v.add_argument("--dim", type=int, help="dimension n for the pseudo/ramified checks (default: top)")
    v.add_argument("--simple", action="store_true", help="also require chain connectivity")
    common(v)
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("homology", help="integral homology")
    h.add_argument("path")
    common(h)
    h.set_defaults(func=cmd_homology)

    d = sub.add_parser("decompose", help="circle factors, product splitting and rank bound")
    d.add_argument("path")
    common(d)
    d.set_defaults(func=cmd_decompose)

    col = sub.add_parser("collapse", help="collapse search, optionally embed in two trees")
    col.add_argument("path")
    col.add_argument("--tree-embed", action="store_true")
    col.add_argument("--budget", type=int, default=10**6, help="search nodes (default 1000000)")
    common(col)
    col.set_defaults(func=cmd_collapse)

    a = sub.add_parser("accept", help="run the acceptance suite")
    a.add_argument("--filter", help="criterion number or tag substring")
    common(a)
    a.set_defaults(func=cmd_accept)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    args.argv = ["graphprod"] + argv
    if getattr(args, "checks", None):
        bad = [c for c in args.checks if c not in CHECKS]
        if bad:
            print(f"graphprod: unknown check(s) {bad}; choose from {', '.join(CHECKS)}", file=sys.stderr)
            return EXIT_INPUT
    if getattr(args, "budget", 1) < 1:
        print("graphprod: --budget must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"graphprod: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
