"""Command-line surface for batch use.

Exit codes: 0 success or feasible, 1 infeasible / obstruction found (a
verdict, with the witness on stdout), 2 usage error, 3 internal
invariant violation.  Identical invocations produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import Pool

from .general_trestle import build_general_trestle
from .graphs import (
    DomainError,
    FormatError,
    Graph,
    InternalInvariantError,
    as_tree,
    read_graph,
    square,
    write_dot,
    write_graph,
    write_graph6,
    read_graph6,
)
from .matching_flow import theorem1_matching
from .obstruction import check_obstruction, derive_base_patterns, f_family
from .oracle import FOUND, SearchBudget, brute_force_trestle, enumerate_trees
from .patterns import centres, tree_profile
from .tree_trestle import build_tree_trestle, decide_tree_trestle
from .verify import TrestleCertificate, verify_trestle


def _read_input(path: str | None, fmt: str) -> Graph:
    if path is None or path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return read_graph(data, fmt)


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True))
    sys.stdout.write("\n")


def _write_dot(path: str | None, g: Graph, highlight=()) -> None:
    if path:
        with open(path, "wb") as fh:
            fh.write(write_dot(g, highlight))


def _cmd_square(args) -> int:
    g = _read_input(args.input, args.format)
    sq = square(g)
    sys.stdout.buffer.write(write_graph(sq, args.format))
    _write_dot(args.dot, sq)
    return 0


def _cmd_centres(args) -> int:
    g = _read_input(args.input, args.format)
    found = sorted(centres(g, args.k))
    _emit({"k": args.k, "centres": found})
    _write_dot(args.dot, g, highlight=found)
    return 0


def _cmd_decide(args) -> int:
    g = _read_input(args.input, args.format)
    t = as_tree(g)
    profile = tree_profile(t)
    worst = max(profile.n(v) for v in range(t.n))
    if worst > args.k:
        _emit({"feasible": False, "reason": f"n(v)={worst} > k"})
        return 1
    assignment = decide_tree_trestle(t, args.k)
    if assignment is None:
        _emit({"feasible": False, "reason": "no feasible arc assignment"})
        return 1
    _emit({"feasible": True, "assignment": assignment.to_jsonable()})
    return 0


def _cmd_build(args) -> int:
    g = _read_input(args.input, args.format)
    if len(g.edges()) == g.n - 1:
        t = as_tree(g)
        assignment = decide_tree_trestle(t, args.k)
        if assignment is None:
            _emit({"feasible": False, "reason": "no feasible arc assignment"})
            return 1
        cert = build_tree_trestle(t, args.k, assignment)
    else:
        if args.k != 3:
            raise DomainError("non-tree hosts are built with --k 3")
        x = centres(g, 3)
        matching = theorem1_matching(g, x)
        if matching is None:
            _emit({"feasible": False, "reason": "no saturating centre matching"})
            return 1
        cert = build_general_trestle(g, matching.edge_list)
    _emit({"feasible": True, "certificate": cert.to_jsonable()})
    _write_dot(args.dot, square(g))
    return 0


def _cmd_verify(args) -> int:
    g = _read_input(args.input, args.format)
    with open(args.certificate, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    if "certificate" in payload:
        payload = payload["certificate"]
    cert = TrestleCertificate.of(
        g,
        [tuple(e) for e in payload["edges"]],
        payload.get("k", args.k),
        matching_edges=(
            [tuple(e) for e in payload["matching"]]
            if "matching" in payload
            else None
        ),
    )
    report = verify_trestle(cert)
    _emit({"pass": report.passed(), "checks": report.to_jsonable()})
    return 0 if report.passed() else 1


def _cmd_obstruction(args) -> int:
    g = _read_input(args.input, args.format)
    t = as_tree(g)
    witness = check_obstruction(t)
    if witness is None:
        _emit({"obstruction": False})
        return 0
    _emit({"obstruction": True, "witness": witness.to_jsonable()})
    _write_dot(args.dot, t, highlight=witness.special)
    return 1


def _cmd_derive_patterns(args) -> int:
    budget = SearchBudget(node_limit=args.budget_nodes) if args.budget_nodes else None
    base = derive_base_patterns(max_n=args.max_n, confirm_budget=budget)
    _emit(
        {
            "t0": base.t0.to_jsonable(),
            "t0_confirmed": base.t0_confirmed,
            "attachment": {
                "n": base.attachment.tree.n,
                "edges": [list(e) for e in base.attachment.tree.edges()],
                "v": base.attachment.v,
                "w": base.attachment.w,
            },
        }
    )
    _write_dot(args.dot, base.t0.tree, highlight=base.t0.special)
    return 0


def _cmd_gen_family(args) -> int:
    members = f_family(args.max_n)
    _emit({"members": [m.to_jsonable() for m in members]})
    return 0


def _validate_one(task: tuple[bytes, int, int]) -> tuple[int, bool, bool, bool]:
    g6, k, budget_nodes = task
    t = as_tree(read_graph6(g6))
    flow_ok = decide_tree_trestle(t, k) is not None
    brute = brute_force_trestle(square(t), k, SearchBudget(node_limit=budget_nodes))
    brute_ok = brute.status == FOUND
    agree = flow_ok == brute_ok
    if k == 3:
        agree = agree and (check_obstruction(t) is None) == flow_ok
    return t.n, flow_ok, brute_ok, agree


def _cmd_validate(args) -> int:
    tasks = []
    for n in range(3, args.max_n + 1):
        for t in enumerate_trees(n):
            tasks.append((write_graph6(t), args.k, args.budget_nodes or 2_000_000))
    if args.jobs and args.jobs > 1:
        with Pool(args.jobs) as pool:
            results = pool.map(_validate_one, tasks, chunksize=16)
    else:
        results = [_validate_one(task) for task in tasks]
    by_n: dict[int, list[tuple[bool, bool, bool]]] = {}
    for n, flow_ok, brute_ok, agree in results:
        by_n.setdefault(n, []).append((flow_ok, brute_ok, agree))
    agreed = 0
    for n in sorted(by_n):
        rows = by_n[n]
        ok = sum(1 for _, _, a in rows if a)
        feas = sum(1 for f, _, _ in rows if f)
        agreed += ok
        print(f"n={n:2d}  trees={len(rows):5d}  feasible={feas:5d}  agree={ok:5d}")
    total = len(results)
    print(f"agree: {agreed}/{total}")
    return 0 if agreed == total else 1


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="trestles",
        description="k-trestles in squares of graphs: decide, build, verify.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, with_k=True):
        p.add_argument("input", nargs="?", help="input path, or - for stdin")
        p.add_argument(
            "--format", choices=("graph6", "edgelist"), default="edgelist"
        )
        p.add_argument("--dot", help="also write DOT to this path")
        if with_k:
            p.add_argument("--k", type=int, default=3)

    common(sub.add_parser("square", help="square of the input graph"), with_k=False)
    common(sub.add_parser("centres", help="centres of induced S(K_{1,k})"))
    common(sub.add_parser("decide", help="k-trestle feasibility for a tree"))
    common(sub.add_parser("build", help="build and verify a trestle certificate"))
    verify_p = sub.add_parser("verify", help="re-check a certificate")
    common(verify_p)
    verify_p.add_argument("--certificate", required=True, help="JSON certificate path")
    common(sub.add_parser("obstruction", help="obstruction witness for a tree"))

    derive_p = sub.add_parser("derive-patterns", help="re-derive base obstruction patterns")
    derive_p.add_argument("--max-n", type=int, default=16)
    derive_p.add_argument("--budget-nodes", type=int)
    derive_p.add_argument("--dot", help="also write T_0 as DOT to this path")

    family_p = sub.add_parser("gen-family", help="obstruction family members")
    family_p.add_argument("--max-n", type=int, required=True)

    validate_p = sub.add_parser("validate", help="three-way agreement suite over all trees")
    validate_p.add_argument("--max-n", type=int, required=True)
    validate_p.add_argument("--k", type=int, default=3)
    validate_p.add_argument("--jobs", type=int, default=1)
    validate_p.add_argument("--budget-nodes", type=int)
    return top


_COMMANDS = {
    "square": _cmd_square,
    "centres": _cmd_centres,
    "decide": _cmd_decide,
    "build": _cmd_build,
    "verify": _cmd_verify,
    "obstruction": _cmd_obstruction,
    "derive-patterns": _cmd_derive_patterns,
    "gen-family": _cmd_gen_family,
    "validate": _cmd_validate,
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (DomainError, FormatError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
