"""Command-line interface.

Subcommands:
  classify  dichotomy verdict for a target (bipartite via a ``sides`` line,
            or semicomplete multipartite via --multipartite <parts-file>)
  order     construct a layered ordering of a bipartite target
  solve     exact minimum-cost homomorphism via the min-cut reduction
  oracle    exhaustive brute-force reference solver
  reduce    emit a hardness-gadget instance for an input digraph

Exit codes: 0 success, 2 no homomorphism exists, 3 input error,
4 internal inconsistency (indicates a bug, not bad input).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classify import Classification, classify_bipartite, classify_multipartite
from .digraph import BipartitionedDigraph, Digraph, format_digraph, parse_digraph
from .errors import (
    BudgetExceeded,
    InconsistencyError,
    InputFormatError,
    MinHomError,
)
from .gadgets import GADGET_KINDS, reduce_to_minhom
from .solver import brute_force_minhom, format_costs, parse_costs, solve_minhom_detailed

EXIT_OK = 0
EXIT_NO_HOM = 2
EXIT_INPUT = 3
EXIT_INTERNAL = 4


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_digraph(path: str):
    return parse_digraph(_read(path))


def _load_bipartite(path: str) -> BipartitionedDigraph:
    graph = _load_digraph(path)
    if not isinstance(graph, BipartitionedDigraph):
        raise InputFormatError(
            f"{path}: target file needs a 'sides' line for bipartite commands")
    return graph


def _parse_parts(text: str) -> list[list[int]]:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) != 2:
        raise InputFormatError("parts file needs a 'parts <n>' header and one "
                               "line of class ids")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "parts":
        raise InputFormatError(f"expected 'parts <n>' header, got {lines[0]!r}")
    try:
        n = int(head[1])
        ids = [int(p) for p in lines[1].split()]
    except ValueError:
        raise InputFormatError("non-integer entries in parts file") from None
    if len(ids) != n:
        raise InputFormatError(f"expected {n} class ids, found {len(ids)}")
    if not ids:
        return []
    k = max(ids) + 1
    if min(ids) < 0:
        raise InputFormatError("class ids must be nonnegative")
    return [[v for v, c in enumerate(ids) if c == cls] for cls in range(k)]


def _classification_json(c: Classification) -> dict:
    if not c.polynomial:
        out: dict = {"verdict": "np-hard"}
        if c.witness is not None:
            out["witness"] = c.witness.to_json()
        if c.reason is not None:
            out["reason"] = c.reason
        return out
    out = {"verdict": "polynomial"}
    if c.shape is not None:
        out["shape"] = c.shape
    if c.orderings:
        out["k_values"] = list(c.k_values)
        out["orderings"] = [o.to_json() for o in c.orderings]
    out["solver_ordering"] = (c.solver_ordering.to_json()
                              if c.solver_ordering is not None else None)
    return out


def _classification_text(c: Classification) -> str:
    lines = [f"verdict: {c.verdict}"]
    if c.witness is not None:
        w = c.witness.to_json()
        lines.append(f"witness: kind={w['kind']} side_view={w['side_view']} "
                     f"vertices={w['vertices']}")
    if c.reason is not None:
        lines.append(f"reason: {c.reason}")
    if c.shape is not None:
        lines.append(f"shape: {c.shape}")
    for i, o in enumerate(c.orderings):
        lines.append(f"component {i}: k={o.k} classes={[list(x) for x in o.classes]}")
    if c.polynomial and c.solver_ordering is not None:
        o = c.solver_ordering
        lines.append(f"solver ordering: k={o.k} "
                     f"classes={[list(x) for x in o.classes]}")
    return "\n".join(lines)


def _cmd_classify(args) -> int:
    if args.multipartite:
        graph = _load_digraph(args.target)
        base = graph.base if isinstance(graph, BipartitionedDigraph) else graph
        parts = _parse_parts(_read(args.multipartite))
        result = classify_multipartite(base, parts)
    else:
        result = classify_bipartite(_load_bipartite(args.target))
    if args.format == "json":
        print(json.dumps(_classification_json(result), indent=2))
    else:
        print(_classification_text(result))
    return EXIT_OK


def _cmd_order(args) -> int:
    result = classify_bipartite(_load_bipartite(args.target))
    if result.polynomial:
        print(json.dumps(result.solver_ordering.to_json(), indent=2))
    else:
        print(json.dumps({"ordering": None,
                          "witness": result.witness.to_json()}, indent=2))
    return EXIT_OK


def _cmd_solve(args) -> int:
    target = _load_bipartite(args.target)
    instance = _load_digraph(args.instance)
    if isinstance(instance, BipartitionedDigraph):
        instance = instance.base
    costs = parse_costs(_read(args.costs))
    result = classify_bipartite(target)
    if not result.polynomial:
        w = result.witness.to_json()
        print(f"error: target is NP-hard (witness {w['kind']} on "
              f"{w['vertices']}); no ordering exists", file=sys.stderr)
        return EXIT_INPUT
    report = solve_minhom_detailed(instance, costs, target.base,
                                   result.solver_ordering)
    if report is None:
        if args.json:
            print(json.dumps({"status": "no-homomorphism"}))
        else:
            print("no homomorphism exists")
        return EXIT_NO_HOM
    hom = report.homomorphism
    if args.json:
        print(json.dumps({
            "status": "ok",
            "verdict": "polynomial",
            "k": result.solver_ordering.k,
            "cost": hom.cost,
            "assignment": list(hom.mapping),
        }, indent=2))
    else:
        print(f"cost: {hom.cost}")
        print("assignment: " + " ".join(str(h) for h in hom.mapping))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    target = _load_digraph(args.target)
    base = target.base if isinstance(target, BipartitionedDigraph) else target
    instance = _load_digraph(args.instance)
    if isinstance(instance, BipartitionedDigraph):
        instance = instance.base
    costs = parse_costs(_read(args.costs))
    hom = brute_force_minhom(instance, costs, base, budget=args.budget)
    if hom is None:
        print("no homomorphism exists")
        return EXIT_NO_HOM
    print(f"cost: {hom.cost}")
    print("assignment: " + " ".join(str(h) for h in hom.mapping))
    return EXIT_OK


def _cmd_reduce(args) -> int:
    instance = _load_digraph(args.instance)
    if isinstance(instance, BipartitionedDigraph):
        instance = instance.base
    gadget = reduce_to_minhom(args.gadget, instance)
    os.makedirs(args.out, exist_ok=True)
    dprime_path = os.path.join(args.out, "dprime.digraph")
    costs_path = os.path.join(args.out, "costs.txt")
    target_path = os.path.join(args.out, "target.digraph")
    manifest_path = os.path.join(args.out, "manifest.json")
    with open(dprime_path, "w", encoding="utf-8") as fh:
        fh.write(format_digraph(gadget.dprime))
    with open(costs_path, "w", encoding="utf-8") as fh:
        fh.write(format_costs(gadget.costs))
    with open(target_path, "w", encoding="utf-8") as fh:
        fh.write(format_digraph(gadget.target))
    with open(manifest_path, "w", encoding="utf-8") as fh:
        json.dump({
            "gadget": gadget.kind,
            "target_file": "target.digraph",
            "dprime_file": "dprime.digraph",
            "costs_file": "costs.txt",
            "original_vertices": list(gadget.original_vertices),
        }, fh, indent=2)
        fh.write("\n")
    print(f"wrote {dprime_path}, {costs_path}, {target_path}, {manifest_path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minhom",
        description="Exact minimum-cost homomorphism solving and complexity "
                    "classification for semicomplete bipartite targets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="dichotomy verdict for a target")
    p.add_argument("target", help="target digraph file")
    p.add_argument("--multipartite", metavar="PARTS",
                   help="classify as semicomplete multipartite with this parts file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("order", help="construct a layered ordering of a target")
    p.add_argument("target", help="target digraph file (with sides)")
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("solve", help="exact minimum-cost homomorphism")
    p.add_argument("target", help="target digraph file (with sides)")
    p.add_argument("instance", help="input digraph file")
    p.add_argument("costs", help="cost table file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("oracle", help="brute-force reference solver")
    p.add_argument("target", help="target digraph file")
    p.add_argument("instance", help="input digraph file")
    p.add_argument("costs", help="cost table file")
    p.add_argument("--budget", type=int, default=5_000_000,
                   help="search-node budget (default: %(default)s)")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("reduce", help="emit a hardness-gadget instance")
    p.add_argument("--gadget", choices=GADGET_KINDS, required=True)
    p.add_argument("instance", help="independent-set instance digraph file")
    p.add_argument("-o", "--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_reduce)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputFormatError, BudgetExceeded, MinHomError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
