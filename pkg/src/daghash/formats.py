"""JSON interchange for graphs, enumeration records, and run summaries.

A graph file is one JSON object: {"n": int, "k": int, "colors": [c1..cn],
"edges": [[i, j], ...]} with 1-indexed vertices and i < j edges unless the
reader is asked to normalize.  Enumeration output is JSON lines, one record
per line carrying the digest hex plus the graph fields, followed by a final
summary object with per-n class counts.  All emitters are deterministic:
equal inputs produce byte-equal text.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .graphs import ComputationalGraph, GraphError, normalize_dag, validate
from .hashing import Digest


def graph_to_dict(g: ComputationalGraph) -> dict:
    """Plain-JSON form of a graph; inverse of graph_from_dict."""
    return {
        "n": g.n,
        "k": g.k,
        "colors": list(g.colors),
        "edges": [list(e) for e in g.edges],
    }


def graph_from_dict(obj, normalize: bool = False) -> ComputationalGraph:
    """Parse and validate the JSON-object form of a graph.

    With normalize set, arbitrarily-oriented DAG edges are relabeled into
    i < j form first; otherwise out-of-order edges are a validation error.
    """
    if not isinstance(obj, Mapping):
        raise GraphError(f"expected a JSON object, got {type(obj).__name__}")
    missing = {"n", "k", "colors", "edges"} - obj.keys()
    if missing:
        raise GraphError(f"graph object lacks keys: {sorted(missing)}")
    n, k = obj["n"], obj["k"]
    if not isinstance(n, int) or not isinstance(k, int):
        raise GraphError("n and k must be integers")
    colors = obj["colors"]
    if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
        raise GraphError("colors must be a list of integers")
    raw_edges = obj["edges"]
    if not isinstance(raw_edges, list):
        raise GraphError("edges must be a list of [i, j] pairs")
    edges = []
    for e in raw_edges:
        if not isinstance(e, list) or len(e) != 2 or not all(isinstance(v, int) for v in e):
            raise GraphError(f"bad edge entry {e!r}; expected [i, j]")
        edges.append((e[0], e[1]))
    if normalize:
        return normalize_dag(n, k, edges, colors)
    return validate(n, k, edges, colors)


def load_graph(path, normalize: bool = False) -> ComputationalGraph:
    """Read one graph from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    return graph_from_dict(obj, normalize=normalize)


def save_graph(g: ComputationalGraph, path) -> None:
    """Write one graph as a JSON file (newline terminated)."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(graph_to_dict(g)) + "\n")


def record_line(digest: Digest, g: ComputationalGraph) -> str:
    """One enumeration record as a JSON line (no trailing newline)."""
    return json.dumps(
        {
            "hash": digest.hex(),
            "n": g.n,
            "colors": list(g.colors),
            "edges": [list(e) for e in g.edges],
        }
    )


def parse_record_line(line: str) -> tuple[Digest, dict]:
    """Digest bytes and the raw object of one record line."""
    obj = json.loads(line)
    return bytes.fromhex(obj["hash"]), obj


def summary_line(per_n: Mapping[int, int]) -> str:
    """The final summary object as a JSON line (no trailing newline)."""
    ordered = {str(n): per_n[n] for n in sorted(per_n)}
    return json.dumps({"per_n": ordered, "total": sum(per_n.values())})


def parse_summary_line(line: str) -> tuple[dict[int, int], int]:
    """per-n counts (int keys) and total from a summary line."""
    obj = json.loads(line)
    return {int(n): c for n, c in obj["per_n"].items()}, obj["total"]
