"""Graph family constructors.

Every generator returns a Graph with contiguous 0-based vertex ids,
human-readable labels, and a deterministic vertex order, so curvature
reports are reproducible run to run.  Families standing in for infinite
graphs (lattices, regular trees) carry a Truncation record; everything
else is finite and exact as built.
"""

from __future__ import annotations

import itertools

from .graphs import Graph, GraphError, Truncation, is_regular


def hypercube(d: int) -> Graph:
    """d-dimensional hypercube with bitstring labels.

    Character i of a label is coordinate i.  Each edge carries its flip
    coordinate as an edge label; the zigzag construction uses those as
    the per-vertex edge indexing.
    """
    if d < 1:
        raise GraphError("hypercube needs d >= 1")
    n = 1 << d
    edges = []
    edge_labels = {}
    for a in range(n):
        for i in range(d):
            b = a ^ (1 << i)
            if a < b:
                edges.append((a, b))
                edge_labels[(a, b)] = i
    labels = {a: "".join("1" if a >> i & 1 else "0" for i in range(d)) for a in range(n)}
    return Graph(range(n), edges, labels=labels, edge_labels=edge_labels,
                 name=f"hypercube-{d}")


def cycle(k: int) -> Graph:
    """Cycle on k vertices, labelled "1".."k" in cyclic order."""
    if k < 3:
        raise GraphError("cycle needs k >= 3")
    edges = [(i, (i + 1) % k) for i in range(k)]
    labels = {i: str(i + 1) for i in range(k)}
    return Graph(range(k), edges, labels=labels, name=f"cycle-{k}")


def path_graph(k: int) -> Graph:
    if k < 1:
        raise GraphError("path needs k >= 1 vertices")
    return Graph(range(k), [(i, i + 1) for i in range(k - 1)], name=f"path-{k}")


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(range(n), itertools.combinations(range(n), 2), name=f"complete-{n}")


def complete_bipartite(n: int) -> Graph:
    """K_{n,n} with parts labelled l1..ln and r1..rn."""
    if n < 1:
        raise GraphError("complete bipartite needs n >= 1")
    edges = [(i, n + j) for i in range(n) for j in range(n)]
    labels = {i: f"l{i + 1}" for i in range(n)}
    labels.update({n + j: f"r{j + 1}" for j in range(n)})
    return Graph(range(2 * n), edges, labels=labels, name=f"complete-bipartite-{n}")


def star(n: int) -> Graph:
    """Star with n leaves; the center is labelled "c"."""
    if n < 1:
        raise GraphError("star needs n >= 1 leaves")
    labels = {0: "c"}
    labels.update({i: f"l{i}" for i in range(1, n + 1)})
    return Graph(range(n + 1), [(0, i) for i in range(1, n + 1)], labels=labels,
                 name=f"star-{n}")


def matching_graph(k: int) -> Graph:
    """k disjoint edges on 2k vertices."""
    if k < 1:
        raise GraphError("matching needs k >= 1 edges")
    return Graph(range(2 * k), [(2 * i, 2 * i + 1) for i in range(k)],
                 name=f"matching-{k}")


def path_union(edge_counts) -> Graph:
    """Disjoint union of paths, one per entry, entry = number of edges."""
    counts = list(edge_counts)
    if not counts or any(c < 1 for c in counts):
        raise GraphError("path union needs positive edge counts")
    edges = []
    base = 0
    for c in counts:
        edges.extend((base + i, base + i + 1) for i in range(c))
        base += c + 1
    name = "paths-" + "+".join(str(c) for c in counts)
    return Graph(range(base), edges, name=name)


def lattice_ball(n: int, radius: int) -> Graph:
    """L1 ball of the integer lattice Z^n, truncated at the given radius.

    Labels are coordinate tuples like "(1,-2)".  The truncation record
    marks the origin; curvature code uses it to refuse probes too close
    to the cut.
    """
    if n < 1:
        raise GraphError("lattice dimension must be >= 1")
    if radius < 0:
        raise GraphError("lattice radius must be >= 0")
    points = sorted(
        p for p in itertools.product(range(-radius, radius + 1), repeat=n)
        if sum(abs(c) for c in p) <= radius
    )
    index = {p: i for i, p in enumerate(points)}
    edges = []
    for p, i in index.items():
        for axis in range(n):
            q = p[:axis] + (p[axis] + 1,) + p[axis + 1:]
            j = index.get(q)
            if j is not None:
                edges.append((i, j))
    labels = {i: "(" + ",".join(str(c) for c in p) + ")" for p, i in index.items()}
    origin = index[(0,) * n]
    return Graph(range(len(points)), edges, labels=labels,
                 truncation=Truncation(origin, radius, host_degree=2 * n),
                 name=f"lattice-{n}-r{radius}")


def regular_tree(d: int, depth: int) -> Graph:
    """Finite piece of the infinite d-regular tree, all leaves at `depth`.

    Root is labelled "r"; each child appends ".i" (1-based) to its parent
    label.
    """
    if d < 1:
        raise GraphError("tree degree must be >= 1")
    if depth < 0:
        raise GraphError("tree depth must be >= 0")
    labels = {0: "r"}
    edges = []
    next_id = 1
    frontier = [0]
    for level in range(depth):
        new_frontier = []
        for v in frontier:
            fanout = d if level == 0 else d - 1
            for i in range(fanout):
                w = next_id
                next_id += 1
                edges.append((v, w))
                labels[w] = f"{labels[v]}.{i + 1}"
                new_frontier.append(w)
        frontier = new_frontier
    return Graph(range(next_id), edges, labels=labels,
                 truncation=Truncation(0, depth, host_degree=d),
                 name=f"tree-{d}-depth{depth}")


def generalized_petersen(n: int, k: int) -> Graph:
    if n < 3 or not 1 <= k < n / 2:
        raise GraphError("generalized Petersen graph needs n >= 3, 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))            # outer cycle
        edges.append((i, n + i))                  # spokes
        edges.append((n + i, n + (i + k) % n))    # inner star polygon
    labels = {i: f"o{i}" for i in range(n)}
    labels.update({n + i: f"i{i}" for i in range(n)})
    return Graph(range(2 * n), edges, labels=labels, name=f"gpetersen-{n}-{k}")


def petersen() -> Graph:
    g = generalized_petersen(5, 2)
    g.name = "petersen"
    return g


def dodecahedron() -> Graph:
    g = generalized_petersen(10, 2)
    g.name = "dodecahedron"
    return g


def biplane_incidence() -> Graph:
    """Point-block incidence graph of the (7,4,2) biplane.

    Blocks are complements of the Fano lines {i, i+1, i+3} mod 7.  The
    result is 4-regular and bipartite; every pair on one side shares
    exactly two neighbors, so it is an (n,d,k) = (7,4,2) incidence graph.
    """
    edges = []
    for j in range(7):
        line = {j % 7, (j + 1) % 7, (j + 3) % 7}
        for p in range(7):
            if p not in line:
                edges.append((p, 7 + j))
    labels = {p: f"p{p}" for p in range(7)}
    labels.update({7 + j: f"b{j}" for j in range(7)})
    return Graph(range(14), edges, labels=labels, name="biplane-7-4-2")


# -- permutation families --------------------------------------------------


def _perm_label(p: tuple[int, ...]) -> str:
    if len(p) <= 9:
        return "".join(str(x + 1) for x in p)
    return ".".join(str(x + 1) for x in p)


def _swap(p: tuple[int, ...], i: int, j: int) -> tuple[int, ...]:
    q = list(p)
    q[i], q[j] = q[j], q[i]
    return tuple(q)


def _permutation_cayley(n: int, generators, name: str) -> Graph:
    """Cayley graph of S_n under the given position transpositions."""
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    edges = set()
    for p, i in index.items():
        for a, b in generators:
            j = index[_swap(p, a, b)]
            if i < j:
                edges.add((i, j))
    labels = {i: _perm_label(p) for p, i in index.items()}
    return Graph(range(len(perms)), sorted(edges), labels=labels, name=name)


def transposition_cayley(n: int) -> Graph:
    """Cayley graph of S_n generated by all transpositions."""
    if n < 2:
        raise GraphError("transposition Cayley graph needs n >= 2")
    gens = list(itertools.combinations(range(n), 2))
    return _permutation_cayley(n, gens, f"transpositions-{n}")


def adjacent_transposition_cayley(n: int) -> Graph:
    """Cayley graph of S_n generated by the adjacent transpositions."""
    if n < 2:
        raise GraphError("adjacent transposition Cayley graph needs n >= 2")
    gens = [(i, i + 1) for i in range(n - 1)]
    return _permutation_cayley(n, gens, f"adjacent-transpositions-{n}")


def interchange_graph(h: Graph) -> Graph:
    """State graph of the interchange process on h.

    States are the placements of |V(h)| labels reachable from the identity
    by swapping the two endpoints of an edge of h; equivalently the Cayley
    graph of the subgroup of the symmetric group generated by the edge
    transpositions.  BFS from the identity keeps the construction correct
    when the generators do not generate the full symmetric group.
    """
    positions = sorted(h.vertices)
    if not h.edges:
        raise GraphError("interchange process needs at least one edge")
    pos = {v: i for i, v in enumerate(positions)}
    gens = [(pos[u], pos[v]) for u, v in h.edges]
    identity = tuple(range(len(positions)))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for a, b in gens:
                q = _swap(p, a, b)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    states = sorted(seen)
    index = {p: i for i, p in enumerate(states)}
    edges = set()
    for p, i in index.items():
        for a, b in gens:
            j = index[_swap(p, a, b)]
            if i < j:
                edges.add((i, j))
    labels = {i: _perm_label(p) for p, i in index.items()}
    host = h.name or f"{len(positions)}v"
    return Graph(range(len(states)), sorted(edges), labels=labels,
                 name=f"interchange-{host}")


# -- polygon triangulations ------------------------------------------------


def _flip_neighbors(n: int, tri: frozenset, edge_set: set) -> list[frozenset]:
    out = []
    for a, b in sorted(tri):
        present = edge_set | tri
        apexes = [
            c for c in range(n)
            if c != a and c != b
            and (min(a, c), max(a, c)) in present
            and (min(b, c), max(b, c)) in present
        ]
        # convex position: exactly one triangle on each side of the diagonal
        if len(apexes) != 2:
            raise GraphError(f"triangulation invariant broken at diagonal ({a},{b})")
        c, d = sorted(apexes)
        flipped = (tri - {(a, b)}) | {(min(c, d), max(c, d))}
        out.append(frozenset(flipped))
    return out


def flip_graph(n: int) -> Graph:
    """Flip graph of triangulations of a convex n-gon.

    Vertices are the diagonal sets; two triangulations are adjacent when
    one diagonal flip maps one to the other.  (n-3)-regular with Catalan
    (n-2) many vertices.
    """
    if n < 4:
        raise GraphError("flip graph needs n >= 4")
    boundary = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    fan = frozenset((0, j) for j in range(2, n - 1))
    seen = {fan}
    frontier = [fan]
    while frontier:
        nxt = []
        for tri in frontier:
            for other in _flip_neighbors(n, tri, boundary):
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
        frontier = nxt
    order = sorted(seen, key=lambda tri: sorted(tri))
    index = {tri: i for i, tri in enumerate(order)}
    edges = set()
    for tri, i in index.items():
        for other in _flip_neighbors(n, tri, boundary):
            j = index[other]
            if i < j:
                edges.add((i, j))
    labels = {
        i: ".".join(f"{a}{b}" if n <= 10 else f"{a}-{b}" for a, b in sorted(tri))
        for tri, i in index.items()
    }
    return Graph(range(len(order)), sorted(edges), labels=labels, name=f"flip-{n}")


# -- zigzag product --------------------------------------------------------


def zigzag(g1: Graph, g2: Graph) -> Graph:
    """Zigzag product of g1 (edge-labelled by V(g2)) with g2.

    Vertices are pairs (a, x); every 2-walk x ~ y ~ z in g2 contributes the
    edge (a, x) ~ (a[y], z), where a[y] is the g1-neighbor of a across the
    edge labelled y.  Requires the edge labelling to list every g2 vertex
    exactly once around each g1 vertex.
    """
    n1, n2 = len(g1.vertices), len(g2.vertices)
    if g1.vertices != tuple(range(n1)) or g2.vertices != tuple(range(n2)):
        raise GraphError("zigzag needs contiguous 0-based vertex ids")
    d1 = is_regular(g1)
    if d1 != n2:
        raise GraphError(f"g1 must be regular of degree |V(g2)| = {n2}, got {d1}")
    big_d = is_regular(g2)
    if big_d is None:
        raise GraphError("g2 must be regular")

    across: list[dict[int, int]] = [{} for _ in range(n1)]
    for (u, v), lab in g1.edge_labels.items():
        if lab in across[u] or lab in across[v]:
            raise GraphError(f"edge label {lab} repeats at a vertex of {g1.name or 'g1'}")
        across[u][lab] = v
        across[v][lab] = u
    full = set(range(n2))
    for a in range(n1):
        if set(across[a]) != full:
            raise GraphError(f"vertex {a} of g1 is missing some edge labels")

    edges = set()
    for a in range(n1):
        for x in range(n2):
            for y in g2.neighbors(x):
                b = across[a][y]
                for z in g2.neighbors(y):
                    p, q = a * n2 + x, b * n2 + z
                    if p != q:
                        edges.add((min(p, q), max(p, q)))
    labels = {
        a * n2 + x: f"({g1.label(a)},{g2.label(x)})"
        for a in range(n1) for x in range(n2)
    }
    out = Graph(range(n1 * n2), sorted(edges), labels=labels,
                name=f"zigzag-{g1.name or 'g1'}-{g2.name or 'g2'}")
    deg = is_regular(out)
    if deg != big_d * big_d:
        raise GraphError(f"zigzag output degree {deg}, expected {big_d * big_d}")
    return out


# -- named registry --------------------------------------------------------


def named_graph(name: str) -> Graph:
    """Small registry for graphs addressed by plain name, e.g. "petersen".

    Parameterized entries use a colon, e.g. "star:5".
    """
    head, _, arg = name.partition(":")
    head = head.strip().lower()
    if head == "petersen":
        return petersen()
    if head == "dodecahedron":
        return dodecahedron()
    if head == "biplane":
        return biplane_incidence()
    if head == "star":
        if not arg:
            raise GraphError('star needs a leaf count, e.g. "star:5"')
        return star(int(arg))
    raise GraphError(f"unknown named graph {name!r}")
