"""Command-line interface: ``contracta <command> ...``.

Exit codes: 0 on success, 1 when a verification check fails, 2 on bad usage
or malformed input.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import catalog, verify
from .certify import certify
from .critical import enumerate_critical, is_critically_exist
from .errors import ContractaError, UnknownId
from .families import GraphFamily, witness_exist
from .formats import HEADER, emit_dot, emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .graph import Graph, contract, members
from .iso import enumerate_graphs
from .linegraph import is_line_beineke, is_line_krausz
from .splitting import splittings, splittings_of_vertex

LINE_ALIASES = ("line", "beineke")


class UsageError(Exception):
    pass


def _read_file_graphs(path: str) -> list[tuple[Graph, Optional[str]]]:
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise UsageError(f"{path}: no graphs found")
    first = lines[0].split()
    # an edge list starts with two integers; anything else is graph6, one per line
    if len(first) == 2 and all(tok.lstrip("-").isdigit() for tok in first):
        return [(parse_edgelist(text), None)]
    out = []
    for ln in lines:
        if ln == HEADER:
            continue
        parts = ln.split(None, 1)
        name = parts[1].lstrip("# ").strip() if len(parts) > 1 else None
        out.append((parse_graph6(parts[0]), name or None))
    return out


def resolve_graph(token: str) -> Graph:
    """A file (edge list or graph6), then a catalog id, then a graph6 string."""
    if os.path.isfile(token):
        graphs = _read_file_graphs(token)
        if len(graphs) != 1:
            raise UsageError(f"{token}: expected one graph, found {len(graphs)}")
        return graphs[0][0]
    try:
        return catalog.get(token).graph
    except UnknownId:
        pass
    try:
        return parse_graph6(token)
    except ContractaError as exc:
        raise UsageError(f"{token!r} is not a file, catalog id or graph6 string ({exc})") from None


def resolve_family(spec: str) -> GraphFamily:
    graphs: list[Graph] = []
    names: list[Optional[str]] = []
    for token in (t.strip() for t in spec.split(",")):
        if not token:
            continue
        if token.lower() in LINE_ALIASES:
            fam = catalog.family(catalog.BEINEKE_IDS)
            graphs += fam.members
            names += fam.names
        elif os.path.isfile(token):
            for g, name in _read_file_graphs(token):
                graphs.append(g)
                names.append(name)
        else:
            graphs.append(resolve_graph(token))
            names.append(token if _is_catalog(token) else None)
    if not graphs:
        raise UsageError("empty family")
    return GraphFamily(graphs, names)


def _is_catalog(token: str) -> bool:
    try:
        catalog.get(token)
        return True
    except UnknownId:
        return False


def _label(fam: GraphFamily, idx: int) -> str:
    return fam.names[idx] or catalog.name_of(fam.members[idx]) or emit_graph6(fam.members[idx])


def _emit(g: Graph, fmt: str) -> str:
    if fmt == "dot":
        return emit_dot(g).rstrip("\n")
    if fmt == "edgelist":
        return emit_edgelist(g).rstrip("\n")
    return emit_graph6(g)


def _set(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


def cmd_contract(args) -> int:
    g = resolve_graph(args.graph)
    print(_emit(contract(g, (args.u, args.v)), args.format))
    return 0


def cmd_check_free(args) -> int:
    g = resolve_graph(args.graph)
    fam = resolve_family(args.family)
    hit = witness_exist(g, fam)
    if hit is None:
        print("free")
    else:
        idx, mask = hit
        print(f"exist: {_label(fam, idx)} on {_set(mask)}")
    return 0


def cmd_splitting(args) -> int:
    g = resolve_graph(args.graph)
    if args.vertex is not None:
        if not 0 <= args.vertex < g.n:
            raise UsageError(f"vertex {args.vertex} outside 0..{g.n - 1}")
        out = splittings_of_vertex(g, args.vertex)
    else:
        out = splittings(g)
    if args.free_split:
        fam = resolve_family(args.family) if args.family else GraphFamily([g])
        out = out.filter(lambda h: witness_exist(h, fam) is None)
    for h in out:
        print(_emit(h, args.format))
    return 0


def cmd_critical_check(args) -> int:
    g = resolve_graph(args.graph)
    fam = resolve_family(args.family)
    report = is_critically_exist(g, fam)
    if report.verdict:
        print("critical")
    elif not report.exist:
        print("not critical: graph is free of the family")
    elif report.failing_edge is None:
        print("not critical: no edges")
    else:
        idx, mask = report.surviving
        print(f"not critical: contracting {report.failing_edge} keeps {_label(fam, idx)} on {_set(mask)}")
    return 0


def cmd_critical_enum(args) -> int:
    fam = resolve_family(args.family)
    for g in enumerate_critical(fam, args.max_n, prune=not args.no_prune):
        print(_emit(g, args.format))
    return 0


def cmd_certify(args) -> int:
    g = resolve_graph(args.graph)
    print(certify(g, resolve_family(args.family)).summary())
    return 0


def cmd_line(args) -> int:
    g = resolve_graph(args.graph)
    parts = []
    verdicts = []
    if args.method in ("beineke", "both"):
        ok, witness = is_line_beineke(g)
        verdicts.append(ok)
        if ok:
            parts.append("Beineke: no witness")
        else:
            name, mask = witness
            where = "itself" if mask == g.vertices else f"on {_set(mask)}"
            parts.append(f"Beineke witness: {name} {where}")
    if args.method in ("krausz", "both"):
        ok, partition = is_line_krausz(g)
        verdicts.append(ok)
        if ok:
            parts.append("Krausz: " + " ".join(_set(c) for c in partition))
        else:
            parts.append("Krausz: no partition")
    if len(set(verdicts)) > 1:
        print("recognizers disagree (" + "; ".join(parts) + ")")
        return 1
    print(("line" if verdicts[0] else "non-line") + " (" + "; ".join(parts) + ")")
    return 0


def cmd_enumerate(args) -> int:
    if not 0 <= args.n <= 8:
        raise UsageError("enumerate supports 0 <= n <= 8")
    for g in enumerate_graphs(args.n, no_isolated=args.no_isolated):
        print(_emit(g, args.format))
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        for ident in catalog.ids():
            ng = catalog.get(ident)
            print(f"{ident}\t{ng.graph.n}\t{ng.graph.num_edges}\t{ng.source}")
        return 0
    idents = [args.id] if args.id else catalog.ids()
    for ident in idents:
        print(f"{emit_graph6(catalog.get(ident).graph)} {ident}")
    return 0


def cmd_verify(args) -> int:
    sections = verify.SECTIONS if args.section == "all" else (args.section,)
    failed = 0
    for check in verify.run(sections, args.max_n):
        print(check.line(), flush=True)
        failed += not check.ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="contracta", description="Edge contraction and forbidden induced subgraphs.")
    sub = p.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("graph6", "dot", "edgelist"), default="graph6")

    s = sub.add_parser("contract", parents=[fmt], help="contract one edge")
    s.add_argument("graph")
    s.add_argument("u", type=int)
    s.add_argument("v", type=int)
    s.set_defaults(func=cmd_contract)

    s = sub.add_parser("check-free", help="look for an induced member of a family")
    s.add_argument("graph")
    s.add_argument("--family", required=True)
    s.set_defaults(func=cmd_check_free)

    s = sub.add_parser("splitting", parents=[fmt], help="list vertex splittings up to isomorphism")
    s.add_argument("graph")
    s.add_argument("--vertex", type=int)
    s.add_argument("--free-split", action="store_true", help="keep only splittings free of the family")
    s.add_argument("--family", help="family for --free-split (default: the graph itself)")
    s.set_defaults(func=cmd_splitting)

    s = sub.add_parser("critical", help="critically family-exist graphs")
    csub = s.add_subparsers(dest="action", required=True)
    c = csub.add_parser("check")
    c.add_argument("graph")
    c.add_argument("--family", required=True)
    c.set_defaults(func=cmd_critical_check)
    c = csub.add_parser("enum", parents=[fmt])
    c.add_argument("--family", required=True)
    c.add_argument("--max-n", type=int, required=True)
    c.add_argument("--no-prune", action="store_true", help="filter every graph instead of the guided search")
    c.set_defaults(func=cmd_critical_enum)

    s = sub.add_parser("certify", help="decide whether contraction stability applies")
    s.add_argument("graph")
    s.add_argument("--family", required=True)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("line", help="line-graph recognition")
    s.add_argument("graph")
    s.add_argument("--method", choices=("krausz", "beineke", "both"), default="both")
    s.set_defaults(func=cmd_line)

    s = sub.add_parser("enumerate", parents=[fmt], help="all graphs on n vertices up to isomorphism")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--no-isolated", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("catalog", help="named graphs")
    s.add_argument("action", nargs="?", choices=("list", "dump"), default="list")
    s.add_argument("id", nargs="?")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("verify-paper", help="run the reproduction checks")
    s.add_argument("--section", choices=verify.SECTIONS + ("all",), default="all")
    s.add_argument("--max-n", type=int, default=7)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ContractaError, OSError) as exc:
        print(f"contracta: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
