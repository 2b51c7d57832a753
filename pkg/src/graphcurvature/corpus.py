"""Graph addressing mini-language and the default verification corpus.

Specs look like `gen:hypercube:4`, `cycle:5`, `file:graph.json`,
`zigzag:hypercube:6,cycle:6`, or `interchange:paths:2+1`; integer ranges
such as `hypercube:2..6` expand into one spec per value.  The default
corpus is the graph family list the verification harness sweeps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import families
from .graphs import Graph, GraphError, load_graph

_RANGE = re.compile(r"(\d+)\.\.(\d+)")


def expand_spec(spec: str) -> list[str]:
    """Expand the first a..b range; specs use at most one."""
    m = _RANGE.search(spec)
    if not m:
        return [spec]
    lo, hi = int(m.group(1)), int(m.group(2))
    if hi < lo:
        raise GraphError(f"empty range {m.group(0)} in {spec!r}")
    return [spec[:m.start()] + str(v) + spec[m.end():] for v in range(lo, hi + 1)]


def _int_args(name: str, args: list[str], count: int) -> list[int]:
    if len(args) != count:
        raise GraphError(
            f"generator {name!r} takes {count} integer parameter(s), "
            f"got {args!r}"
        )
    try:
        return [int(a) for a in args]
    except ValueError:
        raise GraphError(f"non-integer parameter in {args!r} for {name!r}") from None


def parse_graph_spec(spec: str) -> Graph:
    """Build the graph a spec names; canonical key ends up in graph.name."""
    spec = spec.strip()
    if spec.startswith("gen:"):
        spec = spec[4:]
    if spec.startswith("file:"):
        return load_graph(spec[5:])
    if spec.startswith("zigzag:"):
        parts = spec[len("zigzag:"):].split(",")
        if len(parts) != 2:
            raise GraphError(
                "zigzag takes exactly two comma-separated sub-specs, "
                f"got {spec!r}"
            )
        return families.zigzag(parse_graph_spec(parts[0]),
                               parse_graph_spec(parts[1]))
    if spec.startswith("interchange:"):
        host = parse_graph_spec(spec[len("interchange:"):])
        return families.interchange_graph(host)
    name, *args = spec.split(":")
    if name == "paths":
        if len(args) != 1 or not re.fullmatch(r"\d+(\+\d+)*", args[0]):
            raise GraphError(f"paths takes lengths like 2+1, got {args!r}")
        return families.path_union([int(t) for t in args[0].split("+")])
    simple = {
        "hypercube": families.hypercube,
        "cycle": families.cycle,
        "path": families.path_graph,
        "complete": families.complete_graph,
        "complete-bipartite": families.complete_bipartite,
        "star": families.star,
        "matching": families.matching_graph,
        "flip": families.flip_graph,
        "transpositions": families.transposition_cayley,
        "adjacent-transpositions": families.adjacent_transposition_cayley,
    }
    if name in simple:
        return simple[name](*_int_args(name, args, 1))
    if name == "lattice":
        return families.lattice_ball(*_int_args(name, args, 2))
    if name == "tree":
        return families.regular_tree(*_int_args(name, args, 2))
    if name == "gp":
        return families.generalized_petersen(*_int_args(name, args, 2))
    if name in ("petersen", "dodecahedron", "biplane"):
        if args:
            raise GraphError(f"{name!r} takes no parameters")
        return {
            "petersen": families.petersen,
            "dodecahedron": families.dodecahedron,
            "biplane": families.biplane_incidence,
        }[name]()
    known = sorted(simple) + [
        "lattice", "tree", "gp", "petersen", "dodecahedron", "biplane",
        "paths", "zigzag", "interchange", "file",
    ]
    raise GraphError(f"unknown generator {name!r}; known: {', '.join(known)}")


@dataclass(frozen=True)
class CorpusItem:
    """A corpus graph plus the probes used for deep artifact checks.

    Cheap sweeps (curvature per vertex/edge) cover everything reachable;
    the expensive plan/certificate/witness machinery runs only on the
    designated probes.
    """

    key: str
    graph: Graph
    deep_vertices: tuple[int, ...]
    deep_edges: tuple[tuple[int, int], ...]


def _default_probes(g: Graph):
    if g.truncation is not None:
        v0 = g.truncation.center
    else:
        v0 = g.vertices[0]
    if not g.two_ball_complete(v0):
        raise GraphError(f"no probe-safe vertex in {g.name}")
    edges = [(v0, y) for y in g.neighbors(v0)
             if g.transport_neighborhood_complete(v0, y)]
    return (v0,), tuple(edges[:1])


def build_item(spec: str) -> CorpusItem:
    g = parse_graph_spec(spec)
    key = spec[4:] if spec.startswith("gen:") else spec
    if key.startswith("zigzag:hypercube:"):
        # probe the worked-out vertex (all-zero word, first cycle vertex)
        # and its edge two steps around the cycle after a coordinate flip
        n1 = len(g.labels[g.vertices[0]].split(",")[0].strip("("))
        x1 = g.resolve_vertex("(" + "0" * n1 + ",1)")
        b = g.resolve_vertex("(" + "01" + "0" * (n1 - 2) + ",3)")
        if not g.has_edge(x1, b):
            raise GraphError("internal: zigzag probe edge missing")
        return CorpusItem(key, g, (x1,), ((x1, b),))
    dv, de = _default_probes(g)
    return CorpusItem(key, g, dv, de)


DEFAULT_SPECS = [
    "hypercube:2..6",
    "cycle:4..8",
    "complete-bipartite:2..6",
    "lattice:1..3:4",
    "tree:3..5:4",
    "star:3..8",
    "petersen",
    "dodecahedron",
    "biplane",
    "flip:5..6",
    "transpositions:3..4",
    "adjacent-transpositions:3..4",
    "interchange:matching:1..3",
    "interchange:paths:2",
    "interchange:paths:2+1",
    "interchange:paths:2+2",
    "interchange:paths:3",
    "interchange:star:3",
    "interchange:complete:3",
    "zigzag:hypercube:6,cycle:6",
    "zigzag:hypercube:8,cycle:8",
]


def default_corpus_specs() -> list[str]:
    out: list[str] = []
    for spec in DEFAULT_SPECS:
        out.extend(expand_spec(spec))
    return out


def default_corpus() -> list[CorpusItem]:
    return [build_item(s) for s in default_corpus_specs()]
