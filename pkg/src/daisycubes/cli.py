"""Command-line interface.

Exit codes: 0 on success, 1 when the input is rejected on its merits (not a
daisy cube, improper labelling, failed verification), 2 on usage or parse
errors.  Every command reads standard input when the path is ``-``.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .bitstring import BitString
from .expansion import DecompositionCertificate, decompose, leq_expand, peripheral_expand, replay
from .generators import LabelledGraph, daisy_cube, fibonacci_cube, hypercube, lucas_cube, strip_and_scramble
from .graph import DisconnectedGraphError, distance_matrix, is_bipartite, is_connected, is_median_graph
from .graphfile import GraphFile, GraphFileError, format_graph_file, parse_graph_file, read_graph_file, read_text
from .labelling import find_violation, recognize_daisy
from .oracle import is_isomorphic
from .rooted import RootedGraph, daisy_graph
from .theta import edge_split, is_class_peripheral, is_theta_transitive, theta_star_partition
from . import expansion


class UsageError(Exception):
    """Bad arguments or unreadable input; maps to exit code 2."""


class Rejected(Exception):
    """Semantic rejection; maps to exit code 1."""


def _read(path: str) -> GraphFile:
    try:
        return read_graph_file(path)
    except (OSError, GraphFileError) as exc:
        raise UsageError(str(exc)) from None


def _labelled(gf: GraphFile) -> LabelledGraph:
    if gf.labels is None:
        raise UsageError("input has no labels")
    return gf.labelled()


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected a comma-separated vertex list, got {text!r}") from None


def cmd_generate(args: argparse.Namespace) -> str:
    try:
        if args.kind == "hypercube":
            lg = hypercube(args.n)
        elif args.kind == "fibonacci":
            lg = fibonacci_cube(args.n)
        elif args.kind == "lucas":
            lg = lucas_cube(args.n)
        else:
            if not args.gen:
                raise UsageError("daisy needs --gen")
            gens = [BitString.parse(w) for w in args.gen.split(",")]
            if any(x.length != args.n for x in gens):
                raise UsageError(f"generators must have length {args.n}")
            lg = daisy_cube(args.n, gens)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.seed:
        g, _ = strip_and_scramble(lg, args.seed)
        return format_graph_file(GraphFile(g))
    return format_graph_file(GraphFile.of(lg))


def cmd_label(args: argparse.Namespace) -> str:
    gf = _read(args.input)
    if not is_connected(gf.graph):
        raise Rejected("disconnected")
    result = recognize_daisy(gf.graph)
    if not result:
        raise Rejected(result.stage)
    return format_graph_file(GraphFile(gf.graph, result.labelled.labels, gf.root))


def cmd_check(args: argparse.Namespace) -> str:
    lg = _labelled(_read(args.input))
    violation = find_violation(lg)
    if violation is None:
        return "proper\n"
    sys.stdout.write(f"improper\n{violation.kind}: {violation}\n")
    raise Rejected(None)


def cmd_decompose(args: argparse.Namespace) -> str:
    lg = _labelled(_read(args.input))
    if find_violation(lg) is not None:
        raise Rejected("input labelling is not proper")
    order = _int_list(args.order) if args.order else None
    try:
        cert = decompose(lg, order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return cert.to_text()


def cmd_replay(args: argparse.Namespace) -> str:
    try:
        cert = DecompositionCertificate.from_text(read_text(args.input))
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    try:
        lg = replay(cert)
    except ValueError as exc:
        raise Rejected(f"invalid certificate: {exc}") from None
    if args.verify:
        target = _read(args.verify).graph
        if not is_isomorphic(lg.graph, target):
            raise Rejected("replayed graph is not isomorphic to the reference")
    return format_graph_file(GraphFile.of(lg))


def cmd_daisy_graph(args: argparse.Namespace) -> str:
    gf = _read(args.input)
    if gf.root is None:
        raise UsageError("input has no 'root' line")
    xs = _int_list(args.x)
    if not xs:
        raise UsageError("empty generator set")
    try:
        rg = RootedGraph(gf.graph, gf.root)
        sub, index = daisy_graph(rg, xs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    labels = tuple(gf.labels[v] for v in index) if gf.labels is not None else None
    mapping = " ".join(f"{i}->{v}" for i, v in enumerate(index))
    return format_graph_file(
        GraphFile(sub, labels, index.index(gf.root), comments=(f"index map: {mapping}",))
    )


def cmd_contract(args: argparse.Namespace) -> str:
    gf = _read(args.input)
    g = gf.graph
    if not is_connected(g):
        raise Rejected("disconnected")
    part = theta_star_partition(g)
    if not 0 <= args.class_index < len(part):
        raise UsageError(f"class index must be in 0..{len(part) - 1}")
    try:
        h, merge = expansion.contract(g, part, args.class_index)
    except ValueError as exc:
        raise Rejected(str(exc)) from None
    mapping = " ".join(f"{v}->{merge[v]}" for v in g.vertices())
    return format_graph_file(GraphFile(h, comments=(f"merge map: {mapping}",)))


def cmd_expand(args: argparse.Namespace) -> str:
    gf = _read(args.input)
    vertices = _int_list(args.vertices)
    if any(not 0 <= v < gf.graph.vertex_count for v in vertices):
        raise UsageError("vertex out of range")
    try:
        if gf.labels is not None:
            return format_graph_file(GraphFile.of(leq_expand(gf.labelled(), vertices)))
        return format_graph_file(GraphFile(peripheral_expand(gf.graph, vertices)))
    except ValueError as exc:
        raise Rejected(str(exc)) from None


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_stats(args: argparse.Namespace) -> str:
    gf = _read(args.input)
    g = gf.graph
    out = [f"vertices: {g.vertex_count}", f"edges: {g.edge_count}"]
    connected = is_connected(g)
    out.append(f"connected: {_yes(connected)}")
    if connected and g.vertex_count:
        bip = is_bipartite(g)
        d = distance_matrix(g)
        part = theta_star_partition(g, d)
        out.append(f"bipartite: {_yes(bip)}")
        out.append(f"theta classes: {len(part)}")
        out.append("class sizes: " + " ".join(map(str, part.sizes())))
        pc = bip and is_theta_transitive(g, part, d)
        if bip:
            flags = [_yes(is_class_peripheral(g, part, i, d)) for i in range(len(part))]
            out.append("peripheral: " + " ".join(flags))
        out.append(f"partial cube: {_yes(pc)}")
        out.append(f"median graph: {_yes(is_median_graph(g, d))}")
    delta = g.max_degree()
    out.append(f"max degree: {delta}")
    tops = [v for v in g.vertices() if g.degree(v) == delta]
    if gf.labels is not None:
        out.append("max-degree vertices: " + " ".join(f"{v}({gf.labels[v]})" for v in tops))
    else:
        out.append("max-degree vertices: " + " ".join(map(str, tops)))
    return "\n".join(out) + "\n"


def cmd_corpus_verify(args: argparse.Namespace) -> str:
    from .corpus import verify_corpus

    if not 1 <= args.max_n <= 5:
        raise UsageError("--max-n must be in 1..5")
    results = verify_corpus(args.max_n, args.jobs)
    lines = []
    bad = 0
    for n, gens, failed in results:
        status = "ok" if not failed else "FAIL " + ",".join(failed)
        bad += bool(failed)
        lines.append(f"Q_{n}({{{','.join(gens)}}}): {status}")
    lines.append(f"{len(results) - bad}/{len(results)} instances passed")
    sys.stdout.write("\n".join(lines) + "\n")
    if bad:
        raise Rejected(None)
    return ""


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="daisycubes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a labelled hypercube, daisy, Fibonacci or Lucas cube")
    gen.add_argument("kind", choices=["hypercube", "daisy", "fibonacci", "lucas"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--gen", help="comma-separated generator strings (daisy only)")
    gen.add_argument("--seed", type=int, default=0, help="nonzero: drop labels and scramble vertices")
    gen.set_defaults(func=cmd_generate)

    for name, func, text in (
        ("label", cmd_label, "find a proper labelling of an unlabelled graph"),
        ("check", cmd_check, "check whether a labelling is proper"),
        ("stats", cmd_stats, "print Θ-class and degree statistics"),
    ):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("input")
        sp.set_defaults(func=func)

    dec = sub.add_parser("decompose", help="emit a ≤-expansion certificate")
    dec.add_argument("input")
    dec.add_argument("--order", help="coordinate removal order, e.g. 3,2,1")
    dec.set_defaults(func=cmd_decompose)

    rep = sub.add_parser("replay", help="rebuild a graph from a certificate")
    rep.add_argument("input")
    rep.add_argument("--verify", metavar="GRAPHFILE", help="require isomorphism with this graph")
    rep.set_defaults(func=cmd_replay)

    dg = sub.add_parser("daisy-graph", help="daisy graph of a rooted graph")
    dg.add_argument("input")
    dg.add_argument("--x", required=True, help="comma-separated generator vertices")
    dg.set_defaults(func=cmd_daisy_graph)

    con = sub.add_parser("contract", help="contract one Θ-class of a partial cube")
    con.add_argument("input")
    con.add_argument("--class", dest="class_index", type=int, required=True)
    con.set_defaults(func=cmd_contract)

    exp = sub.add_parser("expand", help="peripheral (≤-)expansion over a vertex set")
    exp.add_argument("input")
    exp.add_argument("--vertices", required=True)
    exp.set_defaults(func=cmd_expand)

    cv = sub.add_parser("corpus-verify", help="check every daisy cube up to --max-n")
    cv.add_argument("--max-n", type=int, default=4)
    cv.add_argument("--jobs", type=int, default=1)
    cv.set_defaults(func=cmd_corpus_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        sys.stdout.write(args.func(args))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Rejected as exc:
        if exc.args and exc.args[0]:
            print(exc.args[0], file=sys.stderr)
        return 1
    except DisconnectedGraphError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
