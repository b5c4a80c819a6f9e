"""Command-line driver.

Exit codes: 0 success, 1 a checked property failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .covers import (
    clique_cover_graph,
    cover_from_topology,
    greedy_simplicial_cover,
    hypergraph_from_cover,
    topology_from_cover,
    validate_cover,
)
from .critical import decompose_critical, is_g2_critical
from .enumeration import all_posets, all_topologies
from .errors import InvalidCover, InvalidUniverseCover, SeptopError
from .graph import line_graph
from .normalize import distinguish_minimal_sets, reduce_height_2, reduce_height_3
from .oracle import are_isomorphic
from .poset import POSET_GRAPHS, poset_from_topology, topology_from_poset
from .separation import AXIOMS, Axiom, graph, graph_chain
from .suites import SUITES, run_suite
from .universe import topology_from_universe_cover, universe_cover_from_topology

AXIOM_CHOICES = [a.slug for a in AXIOMS] + ["all"]

OK, FAILED, USAGE = 0, 1, 2


class Output:
    """Collects named files; writes them under ``--out`` or prints them."""

    def __init__(self, out: str | None):
        self.dir = Path(out) if out else None
        if self.dir:
            self.dir.mkdir(parents=True, exist_ok=True)

    def emit(self, name: str, text: str) -> None:
        if self.dir:
            (self.dir / name).write_text(text)
        else:
            sys.stdout.write(text)


def _kind(obj) -> str:
    if isinstance(obj, dict):
        if "cover" in obj:
            return "poset"
        if "min" in obj or "opens" in obj:
            return "topology"
        if "edges" in obj:
            return "graph"
    raise io.ParseError("input is not a topology, poset or graph")


def cmd_build(args) -> int:
    t = io.topology_from_json(io.read_json(args.input))
    out = Output(args.out)
    axioms = AXIOMS if args.axiom == "all" else (Axiom.parse(args.axiom),)
    graphs = graph_chain(t) if args.axiom == "all" else [graph(t, a) for a in axioms]
    for a, g in zip(axioms, graphs):
        name = f"G_{a.slug}"
        if args.format == "dot":
            out.emit(f"{name}.dot", io.to_dot(g, name))
        else:
            out.emit(f"{name}.json", io.dumps(io.graph_to_json(g)))
    if args.axiom == "all":
        report = {
            "edge_counts": {a.slug: g.m for a, g in zip(axioms, graphs)},
            "monotone": all(lo.edges <= hi.edges for lo, hi in zip(graphs, graphs[1:])),
        }
        out.emit("chain.json", io.dumps(report))
    return OK


def cmd_bridge(args) -> int:
    obj = io.read_json(args.input)
    kind = _kind(obj)
    if kind == "poset":
        p = io.poset_from_json(obj)
        result = {"topology": io.topology_to_json(topology_from_poset(p))}
    elif kind == "topology":
        t = io.topology_from_json(obj)
        if args.normalize:
            t = distinguish_minimal_sets(t)
        p = poset_from_topology(t)
        result = {"poset": io.poset_to_json(p)}
    else:
        raise io.ParseError("bridge needs a poset or a topology")
    result["graphs"] = {b.__name__: io.graph_to_json(b(p)) for b in POSET_GRAPHS}
    Output(args.out).emit("bridge.json", io.dumps(result))
    return OK


def _load_graph_or_topology(path: str):
    obj = io.read_json(path)
    kind = _kind(obj)
    if kind == "topology":
        return io.topology_from_json(obj), None
    if kind == "graph":
        return None, io.graph_from_json(obj)
    raise io.ParseError("covers needs a graph or a topology")


def cmd_covers(args) -> int:
    t, g = _load_graph_or_topology(args.input)
    out = Output(args.out)
    task = args.task
    if task in ("simplicial", "linegraph"):
        if t is not None:
            g, c = cover_from_topology(t)
        elif args.certificate:
            c = io.clique_cover_from_json(g, io.read_json(args.certificate))
            validate_cover(g, c, need_witness=True)
        else:
            c = greedy_simplicial_cover(g)
            if c is None:
                print("not edge-simplicial")
                return FAILED
        if task == "simplicial":
            rebuilt = graph(topology_from_cover(g, c), Axiom.T2)
            print(f"edge-simplicial: {len(c.cliques)} cliques, T2 round trip {'ok' if rebuilt.edges == g.edges else 'FAILED'}")
            out.emit("cover.json", io.dumps(io.clique_cover_to_json(g, c)))
            return OK if rebuilt.edges == g.edges else FAILED
        k = hypergraph_from_cover(g, c, pad=args.pad)
        iso = are_isomorphic(line_graph(k), clique_cover_graph(g, c))
        print(f"hypergraph rank {k.rank}, line graph {'isomorphic' if iso is not None else 'NOT isomorphic'} to the clique cover graph")
        out.emit("hypergraph.json", io.dumps(io.hypergraph_to_json(k)))
        return OK if iso is not None else FAILED
    if task == "critical":
        if g is None:
            g = graph(t, Axiom.T2)
        if not is_g2_critical(g):
            print("not critical")
            return FAILED
        steps = decompose_critical(g)
        if steps is None:
            print("critical, but no anchored-star decomposition found")
            return FAILED
        noun = "step" if len(steps) == 1 else "steps"
        print(f"critical, decomposition: {len(steps)} {noun}")
        for s in steps:
            leaves = ",".join(g.labels[y] for y in s.leaves)
            clique = ",".join(g.labels[v] for v in s.clique)
            print(f"  center {g.labels[s.center]} leaves {{{leaves}}} clique {{{clique}}}")
        return OK
    # universe
    if t is not None:
        g, uc = universe_cover_from_topology(t)
    elif args.certificate:
        uc = io.universe_cover_from_json(g, io.read_json(args.certificate))
    else:
        raise io.ParseError("universe task on a graph needs --certificate")
    rebuilt = topology_from_universe_cover(g, uc)
    print(f"valid universe cover: {len(uc.universes)} universes")
    out.emit("universes.json", io.dumps(io.universe_cover_to_json(g, uc)))
    out.emit("topology.json", io.dumps(io.topology_to_json(rebuilt)))
    return OK


def cmd_verify(args) -> int:
    res = run_suite(args.suite, args.n)
    print(res.report())
    return OK if res.passed else FAILED


def cmd_normalize(args) -> int:
    t = io.topology_from_json(io.read_json(args.input))
    if args.distinct:
        t = distinguish_minimal_sets(t)
    elif args.height2:
        t = reduce_height_2(t)
    else:
        if args.axiom is None:
            raise io.ParseError("--height3 needs --axiom t3p, t3pp or t4")
        t = reduce_height_3(t, Axiom.parse(args.axiom))
    Output(args.out).emit("topology.json", io.dumps(io.topology_to_json(t)))
    return OK


def cmd_enumerate(args) -> int:
    if args.kind == "topologies":
        items = [io.topology_to_json(t) for t in all_topologies(args.n)]
    else:
        items = [io.poset_to_json(p) for p in all_posets(args.n)]
    if args.out:
        out = Output(args.out)
        width = len(str(len(items)))
        for i, obj in enumerate(items):
            stem = "topology" if args.kind == "topologies" else "poset"
            out.emit(f"{stem}_{i:0{width}d}.json", io.dumps(obj))
    print(f"{len(items)} {args.kind} on {args.n} points")
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="septop", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="separation graphs of a topology")
    p.add_argument("--input", required=True)
    p.add_argument("--axiom", choices=AXIOM_CHOICES, default="all")
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("bridge", help="poset <-> topology conversion and the five poset graphs")
    p.add_argument("--input", required=True)
    p.add_argument("--normalize", action="store_true", help="distinguish minimal sets before converting")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bridge)

    p = sub.add_parser("covers", help="clique-cover, criticality and universe certificates")
    p.add_argument("--input", required=True)
    p.add_argument("--task", choices=["simplicial", "universe", "critical", "linegraph"], required=True)
    p.add_argument("--certificate", help="cover JSON to validate instead of constructing one")
    p.add_argument("--pad", action="store_true", help="pad hyperedges with dummy vertices")
    p.add_argument("--out")
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("verify", help="run an exhaustive property suite")
    p.add_argument("--suite", required=True, help=", ".join(SUITES))
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("normalize", help="graph-preserving topology transforms")
    p.add_argument("--input", required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--distinct", action="store_true")
    mode.add_argument("--height2", action="store_true")
    mode.add_argument("--height3", action="store_true")
    p.add_argument("--axiom", choices=["t3p", "t3pp", "t4"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("enumerate", help="all labeled topologies or posets on n points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["topologies", "posets"], default="topologies")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidCover, InvalidUniverseCover) as e:
        print(f"invalid certificate: {e}", file=sys.stderr)
        return FAILED
    except SeptopError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
