"""Finite graph container plus the bookkeeping the curvature code relies on.

Vertices are integers.  Adjacency is kept in sorted tuples so traversals,
matrix indices and report rows come out in a reproducible order.  A Graph
may carry a Truncation record saying it is a radius-limited piece of a
larger regular host; the predicates that decide whether a curvature
evaluation near the cut boundary is trustworthy live here as well.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass


class GraphError(ValueError):
    """Raised for malformed graph data or an unsupported graph shape."""


@dataclass(frozen=True)
class Truncation:
    """Marks a graph as the radius-`radius` BFS ball around `center`.

    host_degree is the common degree of the (possibly infinite) host when
    that is known; vertices near the cut have smaller degree in the stored
    graph than in the host.
    """

    center: int
    radius: int
    host_degree: int | None = None


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with deterministic ordering everywhere."""

    def __init__(
        self,
        vertices,
        edges,
        labels: dict[int, str] | None = None,
        edge_labels: dict[tuple[int, int], int] | None = None,
        truncation: Truncation | None = None,
        name: str = "",
    ):
        seen: set[int] = set()
        for v in vertices:
            if not isinstance(v, int) or isinstance(v, bool):
                raise GraphError(f"vertex id {v!r} is not an integer")
            if v in seen:
                raise GraphError(f"duplicate vertex id {v}")
            seen.add(v)
        self.vertices: tuple[int, ...] = tuple(sorted(seen))
        self._vertex_set = seen

        edge_set: set[tuple[int, int]] = set()
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise GraphError(f"edge {e!r} is not a pair") from None
            if u not in seen or v not in seen:
                raise GraphError(f"edge ({u}, {v}) has an unknown endpoint")
            pair = _normalize_edge(u, v)
            if pair in edge_set:
                raise GraphError(f"duplicate edge {pair}")
            edge_set.add(pair)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(edge_set))
        self._edge_set = edge_set

        nbrs: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self._adj = {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

        self.labels: dict[int, str] = {}
        if labels:
            rev: dict[str, int] = {}
            for v, lab in labels.items():
                if v not in seen:
                    raise GraphError(f"label for unknown vertex {v!r}")
                if not isinstance(lab, str):
                    raise GraphError(f"label {lab!r} for vertex {v} is not a string")
                if lab in rev:
                    raise GraphError(f"label {lab!r} used for vertices {rev[lab]} and {v}")
                rev[lab] = v
            self.labels = dict(labels)
        self._label_to_vertex = {lab: v for v, lab in self.labels.items()}

        self.edge_labels: dict[tuple[int, int], int] = {}
        if edge_labels:
            for e, lab in edge_labels.items():
                pair = _normalize_edge(*e)
                if pair not in edge_set:
                    raise GraphError(f"edge label on missing edge {pair}")
                self.edge_labels[pair] = lab

        if truncation is not None:
            if truncation.center not in seen:
                raise GraphError(f"truncation center {truncation.center} is not a vertex")
            if truncation.radius < 0:
                raise GraphError("truncation radius must be nonnegative")
        self.truncation = truncation
        self.name = name

        self._center_dist: dict[int, int] | None = None
        self._k3: bool | None = None
        self._k23: bool | None = None

    # -- basic queries ----------------------------------------------------

    def __contains__(self, v: int) -> bool:
        return v in self._vertex_set

    def __repr__(self) -> str:
        tag = self.name or "graph"
        return f"Graph({tag}, n={len(self.vertices)}, m={len(self.edges)})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return (min(u, v), max(u, v)) in self._edge_set

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def edge_label(self, u: int, v: int) -> int:
        pair = _normalize_edge(u, v)
        try:
            return self.edge_labels[pair]
        except KeyError:
            raise GraphError(f"edge {pair} carries no label") from None

    def resolve_vertex(self, token: str) -> int:
        """Map a user-supplied token to a vertex id, labels before raw ids."""
        if token in self._label_to_vertex:
            return self._label_to_vertex[token]
        try:
            v = int(token)
        except ValueError:
            v = None
        if v is not None and v in self._vertex_set:
            return v
        sample = ", ".join(self.label(v) for v in self.vertices[:6])
        raise GraphError(f"no vertex matches {token!r} (known labels start: {sample})")

    # -- truncation safety ------------------------------------------------

    def distance_to_center(self, v: int) -> int:
        """BFS distance from the truncation center (0 when untruncated)."""
        if self.truncation is None:
            return 0
        if self._center_dist is None:
            self._center_dist = bfs_distances(self, self.truncation.center)
        try:
            return self._center_dist[v]
        except KeyError:
            raise GraphError(f"vertex {v} is unreachable from the truncation center") from None

    def two_ball_complete(self, x: int) -> bool:
        """True when every vertex and edge of the radius-2 ball at x is stored.

        Near the cut of a truncated graph second neighbors may be missing,
        which would silently corrupt the curvature form, hence the radius-2
        margin.
        """
        if x not in self._vertex_set:
            raise GraphError(f"unknown vertex {x}")
        if self.truncation is None:
            return True
        return self.distance_to_center(x) <= self.truncation.radius - 2

    def transport_neighborhood_complete(self, x: int, y: int) -> bool:
        """True when optimal transport across edge (x, y) only sees stored data.

        The transported measures live on the closed one-balls of x and y and
        compare points at distance up to three, so a truncated graph needs a
        radius-3 margin from the better endpoint (and radius at least 4 for
        any interior edge to exist).
        """
        if not self.has_edge(x, y):
            raise GraphError(f"({x}, {y}) is not an edge")
        if self.truncation is None:
            return True
        if self.truncation.radius < 4:
            return False
        margin = self.truncation.radius - 3
        return min(self.distance_to_center(x), self.distance_to_center(y)) <= margin


# -- traversal helpers ----------------------------------------------------


def bfs_distances(g: Graph, source: int, radius: int | None = None) -> dict[int, int]:
    """Distances from source, optionally cut off at the given radius."""
    if source not in g:
        raise GraphError(f"unknown vertex {source}")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v]
        if radius is not None and d >= radius:
            continue
        for w in g.neighbors(v):
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return dist


def diameter(g: Graph) -> int | None:
    """Largest pairwise distance, or None when the graph is disconnected."""
    n = len(g.vertices)
    best = 0
    for v in g.vertices:
        dist = bfs_distances(g, v)
        if len(dist) < n:
            return None
        best = max(best, max(dist.values()))
    return best


def is_regular(g: Graph) -> int | None:
    """The common degree, or None if degrees vary (or the graph is empty)."""
    degs = {g.degree(v) for v in g.vertices}
    if len(degs) == 1:
        return degs.pop()
    return None


def effective_degree(g: Graph, x: int) -> int | None:
    """Degree of x as a vertex of the (possibly infinite) host graph.

    For regular graphs this is the common degree.  For a truncated graph it
    is the declared host degree, accepted only when the two-ball at x is
    complete and x and its neighbors all still show that degree.  None means
    no regular-host degree can be certified, so regularity-gated theorems
    must not be applied at x.
    """
    d = is_regular(g)
    if d is not None:
        return d
    t = g.truncation
    if t is None or t.host_degree is None:
        return None
    if not g.two_ball_complete(x):
        return None
    if g.degree(x) != t.host_degree:
        return None
    if any(g.degree(v) != t.host_degree for v in g.neighbors(x)):
        return None
    return t.host_degree


def contains_k3(g: Graph) -> bool:
    """Whether any triangle exists (cached on the graph)."""
    if g._k3 is None:
        found = False
        for u, v in g.edges:
            nu = set(g.neighbors(u))
            if any(w in nu for w in g.neighbors(v)):
                found = True
                break
        g._k3 = found
    return g._k3


def contains_k23(g: Graph) -> bool:
    """Whether some two vertices share three common neighbors (cached).

    That is exactly a complete bipartite 2x3 subgraph, the obstruction the
    linkage analysis cares about.  Subgraph, not induced: extra edges among
    the five vertices do not matter.
    """
    if g._k23 is None:
        counts: dict[tuple[int, int], int] = {}
        found = False
        for w in g.vertices:
            ns = g.neighbors(w)
            if found:
                break
            for i in range(len(ns)):
                for j in range(i + 1, len(ns)):
                    pair = (ns[i], ns[j])
                    c = counts.get(pair, 0) + 1
                    if c >= 3:
                        found = True
                        break
                    counts[pair] = c
                else:
                    continue
                break
        g._k23 = found
    return g._k23


# -- two-ball extraction ---------------------------------------------------


@dataclass(frozen=True)
class LocalBall:
    """The radius-2 ball around `base`, trimmed to what curvature reads.

    adj keeps only edges meeting base or sphere1; edges between two second
    neighbors never enter the curvature form and are dropped.  degrees holds
    the stored-graph degrees of base and sphere1 (equal to host degrees
    whenever complete is True).
    """

    base: int
    sphere1: tuple[int, ...]
    sphere2: tuple[int, ...]
    adj: dict[int, tuple[int, ...]]
    degrees: dict[int, int]
    complete: bool

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, ())


def extract_ball(g: Graph, x: int) -> LocalBall:
    s1 = g.neighbors(x)
    s1_set = set(s1)
    s2 = sorted({u for v in s1 for u in g.neighbors(v)} - s1_set - {x})
    adj: dict[int, tuple[int, ...]] = {x: s1}
    for v in s1:
        adj[v] = g.neighbors(v)
    for u in s2:
        adj[u] = tuple(w for w in g.neighbors(u) if w in s1_set)
    degrees = {v: g.degree(v) for v in (x, *s1)}
    return LocalBall(x, s1, tuple(s2), adj, degrees, g.two_ball_complete(x))


# -- serialization ---------------------------------------------------------


def _parse_json_graph(text: str, name: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise GraphError("JSON graph must be an object")
    if "vertices" not in obj or "edges" not in obj:
        raise GraphError('JSON graph needs "vertices" and "edges" keys')
    vertices = obj["vertices"]
    edges = obj["edges"]
    if not isinstance(vertices, list):
        raise GraphError('"vertices" must be a list of integers')
    if not isinstance(edges, list):
        raise GraphError('"edges" must be a list of [u, v] pairs')
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise GraphError(f'edge entry {e!r} is not a [u, v] pair')
    labels: dict[int, str] = {}
    raw_labels = obj.get("labels", {})
    if not isinstance(raw_labels, dict):
        raise GraphError('"labels" must map vertex ids to strings')
    for key, lab in raw_labels.items():
        try:
            labels[int(key)] = lab
        except (TypeError, ValueError):
            raise GraphError(f"label key {key!r} is not a vertex id") from None
    edge_labels: dict[tuple[int, int], int] = {}
    raw_elabels = obj.get("edge_labels", {})
    if not isinstance(raw_elabels, dict):
        raise GraphError('"edge_labels" must map "u,v" keys to integers')
    for key, lab in raw_elabels.items():
        try:
            u, v = (int(t) for t in key.split(","))
            edge_labels[(u, v)] = int(lab)
        except (TypeError, ValueError):
            raise GraphError(f"edge label key {key!r} is not a \"u,v\" pair") from None
    truncation = None
    raw_trunc = obj.get("truncation")
    if raw_trunc is not None:
        if not isinstance(raw_trunc, dict) or "center" not in raw_trunc or "radius" not in raw_trunc:
            raise GraphError('"truncation" needs "center" and "radius"')
        truncation = Truncation(
            int(raw_trunc["center"]), int(raw_trunc["radius"]),
            host_degree=raw_trunc.get("host_degree"),
        )
    return Graph(vertices, [tuple(e) for e in edges], labels=labels,
                 edge_labels=edge_labels, truncation=truncation, name=name)


def _parse_edge_list(text: str, name: str) -> Graph:
    edges = []
    vertices: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: vertex ids must be integers, got {raw!r}") from None
        vertices.update((u, v))
        edges.append((u, v))
    try:
        return Graph(sorted(vertices), edges, name=name)
    except GraphError as exc:
        raise GraphError(f"edge list: {exc}") from None


def load_graph(path) -> Graph:
    """Read a graph from a JSON file or a whitespace edge list.

    The format is sniffed from the content: anything starting with '{' is
    treated as JSON.
    """
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    name = str(path)
    if text.lstrip().startswith("{"):
        return _parse_json_graph(text, name)
    return _parse_edge_list(text, name)


def graph_to_json_dict(g: Graph) -> dict:
    out: dict = {
        "vertices": list(g.vertices),
        "edges": [[u, v] for u, v in g.edges],
    }
    if g.labels:
        out["labels"] = {str(v): g.labels[v] for v in sorted(g.labels)}
    if g.edge_labels:
        out["edge_labels"] = {f"{u},{v}": g.edge_labels[(u, v)]
                              for u, v in sorted(g.edge_labels)}
    if g.truncation is not None:
        t = g.truncation
        out["truncation"] = {"center": t.center, "radius": t.radius,
                             "host_degree": t.host_degree}
    return out


def render_graph(g: Graph, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(graph_to_json_dict(g), indent=2) + "\n"
    if fmt == "edgelist":
        lines = []
        if g.name:
            lines.append(f"# {g.name}")
        isolated = [v for v in g.vertices if g.degree(v) == 0]
        if isolated:
            raise GraphError(f"edge list cannot express isolated vertices: {isolated[:4]}")
        lines.extend(f"{u} {v}" for u, v in g.edges)
        return "\n".join(lines) + "\n"
    raise GraphError(f"unknown graph format {fmt!r}")


def save_graph(g: Graph, path, fmt: str = "json") -> None:
    payload = render_graph(g, fmt)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(payload)
