"""JSON and DOT formats for topologies, graphs, posets and certificates."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import bits
from .covers import CliqueCover
from .errors import ParseError, SeptopError
from .graph import Graph, Hypergraph
from .poset import Poset
from .topology import FiniteTopology, from_open_sets, open_sets
from .universe import Universe, UniverseCover


def read_json(path: str | Path) -> Any:
    """Parse a JSON file; syntax errors become ``ParseError`` with file and line."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror}") from e
    return loads(text, str(path))


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from e


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


# labels


def _labels(obj: dict, n: int | None = None) -> tuple[str, ...]:
    if n is None:
        n = obj.get("n")
    if not isinstance(n, int) or n < 0:
        raise ParseError("'n' must be a nonnegative integer")
    labels = obj.get("labels")
    if labels is None:
        return tuple(str(i) for i in range(n))
    if not isinstance(labels, list) or len(labels) != n:
        raise ParseError(f"'labels' must list {n} names")
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != n:
        raise ParseError("labels must be distinct")
    return labels


def _index(labels: tuple[str, ...]) -> dict[str, int]:
    return {name: i for i, name in enumerate(labels)}


def _point(index: dict[str, int], name: Any) -> int:
    key = str(name)
    if key not in index:
        raise ParseError(f"unknown label {name!r}")
    return index[key]


def _set(index: dict[str, int], names: Any) -> int:
    if not isinstance(names, list):
        raise ParseError(f"expected a list of labels, got {names!r}")
    return bits.mask(_point(index, x) for x in names)


def _names(labels: tuple[str, ...], s: int) -> list[str]:
    return [labels[i] for i in bits.members(s)]


def _need(obj: Any, key: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing key {key!r}")
    return obj[key]


def _guard(build):
    # validation errors from constructors surface as parse errors
    try:
        return build()
    except ParseError:
        raise
    except SeptopError as e:
        raise ParseError(str(e)) from e


# topologies


def topology_to_json(t: FiniteTopology) -> dict:
    return {
        "n": t.n,
        "labels": list(t.labels),
        "min": {t.labels[x]: _names(t.labels, t.mins[x]) for x in range(t.n)},
    }


def opens_to_json(t: FiniteTopology) -> dict:
    return {
        "n": t.n,
        "labels": list(t.labels),
        "opens": [_names(t.labels, u) for u in open_sets(t) if u],
    }


def topology_from_json(obj: Any) -> FiniteTopology:
    """Accepts the minimal-base form (``min``) or the open-set form (``opens``)."""
    if not isinstance(obj, dict):
        raise ParseError("topology must be a JSON object")
    labels = _labels(obj)
    index = _index(labels)
    if "min" in obj:
        table = obj["min"]
        if not isinstance(table, dict) or set(map(str, table)) != set(labels):
            raise ParseError("'min' must give a minimal set for every label")
        mins = tuple(_set(index, table[name]) for name in labels)
        return _guard(lambda: FiniteTopology(len(labels), mins, labels))
    if "opens" in obj:
        family = [_set(index, u) for u in obj["opens"]]
        return _guard(lambda: from_open_sets(len(labels), family, labels))
    raise ParseError("topology needs 'min' or 'opens'")


# graphs


def graph_to_json(g: Graph) -> dict:
    return {
        "n": g.n,
        "labels": list(g.labels),
        "edges": [[g.labels[u], g.labels[v]] for u, v in g.sorted_edges()],
    }


def graph_from_json(obj: Any) -> Graph:
    labels = _labels(obj)
    index = _index(labels)
    edges = []
    for e in _need(obj, "edges"):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"edge {e!r} must be a pair of labels")
        edges.append((_point(index, e[0]), _point(index, e[1])))
    return _guard(lambda: Graph.from_edges(len(labels), edges, labels))


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str) -> str:
    """DOT text with vertices and edges sorted by label."""
    lines = [f"graph {name} {{"]
    for label in sorted(g.labels):
        lines.append(f"  {_dot_id(label)};")
    pairs = sorted(tuple(sorted((g.labels[u], g.labels[v]))) for u, v in g.edges)
    for a, b in pairs:
        lines.append(f"  {_dot_id(a)} -- {_dot_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# posets


def poset_to_json(p: Poset) -> dict:
    return {
        "n": p.n,
        "labels": list(p.labels),
        "cover": [[p.labels[a], p.labels[b]] for a, b in p.covers()],
    }


def poset_from_json(obj: Any) -> Poset:
    """Cover pairs ``[a, b]`` mean ``a < b``; the order is their transitive closure."""
    labels = _labels(obj)
    index = _index(labels)
    pairs = []
    for c in _need(obj, "cover"):
        if not isinstance(c, list) or len(c) != 2:
            raise ParseError(f"cover relation {c!r} must be a pair of labels")
        pairs.append((_point(index, c[0]), _point(index, c[1])))
    return _guard(lambda: Poset.from_relations(len(labels), pairs, labels))


# certificates


def clique_cover_to_json(g: Graph, c: CliqueCover) -> dict:
    out: dict = {"cliques": [_names(g.labels, q) for q in c.cliques]}
    if c.witness is not None:
        out["witness"] = [g.labels[w] for w in c.witness]
    return out


def clique_cover_from_json(g: Graph, obj: Any) -> CliqueCover:
    index = _index(g.labels)
    cliques = tuple(_set(index, q) for q in _need(obj, "cliques"))
    witness = obj.get("witness")
    if witness is not None:
        witness = tuple(_point(index, w) for w in witness)
    return _guard(lambda: CliqueCover(cliques, witness))


def universe_cover_to_json(g: Graph, uc: UniverseCover) -> dict:
    return {
        "universes": [
            {
                "sun": g.labels[u.sun],
                "planets": _names(g.labels, u.planets),
                "moons": _names(g.labels, u.moons),
            }
            for u in uc.universes
        ]
    }


def universe_cover_from_json(g: Graph, obj: Any) -> UniverseCover:
    index = _index(g.labels)
    out = []
    for u in _need(obj, "universes"):
        sun = _point(index, _need(u, "sun"))
        out.append(Universe(sun, _set(index, u.get("planets", [])), _set(index, u.get("moons", []))))
    return UniverseCover(tuple(out))


def hypergraph_to_json(k: Hypergraph) -> dict:
    return {
        "n": k.n,
        "labels": list(k.labels),
        "edges": [_names(k.labels, e) for e in k.hyperedges],
    }


def hypergraph_from_json(obj: Any) -> Hypergraph:
    labels = _labels(obj)
    index = _index(labels)
    edges = tuple(_set(index, e) for e in _need(obj, "edges"))
    return _guard(lambda: Hypergraph(len(labels), edges, labels))
