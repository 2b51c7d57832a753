"""Combinatorial structure around a vertex and the class predictions.

For regular graphs free of triangles and of 2x3 bicliques, the pattern of
linked neighbor pairs at a vertex decides the sign of both curvatures.
This module computes that pattern (LinkProfile), the resulting verdict
(ClassVerdict), the biclique edge decomposition used by the transport
shortcut, the host-graph rules for the interchange process, and the two
explicit test vectors that certify the flat and negative classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .bakry_emery import second_neighbor_minimizer
from .graphs import (
    Graph,
    GraphError,
    LocalBall,
    contains_k23,
    contains_k3,
    effective_degree,
    extract_ball,
)


class StructureClass(Enum):
    FULLY_LINKED = "fully-linked"      # every neighbor pair linked
    ONE_UNLINKED = "one-unlinked"      # worst neighbor misses one partner
    MULTI_UNLINKED = "multi-unlinked"  # some neighbor misses two or more
    INAPPLICABLE = "inapplicable"

    def __str__(self) -> str:
        return self.value


# sign predictions per class: CD curvature, then edge curvatures
CD_PREDICTION = {
    StructureClass.FULLY_LINKED: "positive",
    StructureClass.ONE_UNLINKED: "flat",
    StructureClass.MULTI_UNLINKED: "negative",
}
OLLIVIER_PREDICTION = {
    StructureClass.FULLY_LINKED: "strictly-positive",
    StructureClass.ONE_UNLINKED: "nonnegative",
    StructureClass.MULTI_UNLINKED: "nonpositive",
}


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LinkProfile:
    """Linkage structure among the neighbors of `base`.

    links maps each unordered neighbor pair to the tuple of vertices
    joining them (empty = unlinked); linkage weights each joining vertex
    by one over its number of neighbors in sphere1.  nonlink_counts[y] is
    the number of other neighbors not linked to y, and N is its maximum.
    """

    base: int
    links: dict[tuple[int, int], tuple[int, ...]]
    linkage: dict[tuple[int, int], Fraction]
    nonlink_counts: dict[int, int]
    N: int

    def is_linked(self, u: int, v: int) -> bool:
        return bool(self.links[_pair(u, v)])

    def linking_vertices(self, u: int, v: int) -> tuple[int, ...]:
        return self.links[_pair(u, v)]

    def unlinked_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(p for p, zs in sorted(self.links.items()) if not zs)


def link_profile(ball: LocalBall) -> LinkProfile:
    if not ball.complete:
        raise GraphError(
            f"two-ball at {ball.base} is cut by a truncation boundary; "
            "link structure would be unreliable"
        )
    s1 = ball.sphere1
    s1_set = set(s1)
    links: dict[tuple[int, int], tuple[int, ...]] = {}
    linkage: dict[tuple[int, int], Fraction] = {}
    for a, v in enumerate(s1):
        nv = set(ball.adj[v])
        for w in s1[a + 1:]:
            zs = tuple(
                z for z in ball.adj[w]
                if z != ball.base and z in nv
            )
            links[(v, w)] = zs
            total = Fraction(0)
            for z in zs:
                in_s1 = sum(1 for t in ball.adj[z] if t in s1_set)
                total += Fraction(1, in_s1)
            linkage[(v, w)] = total
    nonlink = {
        y: sum(1 for w in s1 if w != y and not links[_pair(y, w)])
        for y in s1
    }
    n = max(nonlink.values(), default=0)
    return LinkProfile(ball.base, links, linkage, nonlink, n)


@dataclass(frozen=True)
class ClassVerdict:
    vertex: int
    structure_class: StructureClass
    degree: int | None
    N: int | None
    cd_prediction: str | None
    ollivier_prediction: str | None
    reason: str
    profile: LinkProfile | None


def classify_vertex(g: Graph, x: int) -> ClassVerdict:
    """Class verdict at x; inapplicability is a verdict, never an error."""

    def inapplicable(reason: str) -> ClassVerdict:
        return ClassVerdict(x, StructureClass.INAPPLICABLE, None, None,
                            None, None, reason, None)

    if contains_k3(g):
        return inapplicable("graph contains a triangle")
    if contains_k23(g):
        return inapplicable("graph contains a 2x3 biclique")
    d = effective_degree(g, x)
    if d is None:
        return inapplicable("no certified regular degree at this vertex")
    if not g.two_ball_complete(x):
        return inapplicable("two-ball cut by the truncation boundary")
    profile = link_profile(extract_ball(g, x))
    if profile.N == 0:
        cls = StructureClass.FULLY_LINKED
    elif profile.N == 1:
        cls = StructureClass.ONE_UNLINKED
    else:
        cls = StructureClass.MULTI_UNLINKED
    return ClassVerdict(
        x, cls, d, profile.N,
        CD_PREDICTION[cls], OLLIVIER_PREDICTION[cls],
        f"max non-link count {profile.N} at degree {d}",
        profile,
    )


def cd_ollivier_consistency(rho: float, kappas, tolerance: float = 1e-9):
    """Directional sign relations between the two curvatures at a vertex.

    kappas maps each probed neighbor to its exact edge curvature.  Only
    the sound directions are checked; strictly positive edge curvatures do
    not force positive CD curvature (the 5-cycle is flat with every edge
    curvature 1/4), so no converse is asserted.

    Returns (ok, list of violation strings).
    """
    problems = []
    items = sorted(kappas.items())
    if rho > tolerance:
        for y, k in items:
            if k <= 0:
                problems.append(f"cd {rho:.6g} > 0 but kappa(.,{y}) = {k} <= 0")
    if rho >= -tolerance:
        for y, k in items:
            if k < 0:
                problems.append(f"cd {rho:.6g} >= 0 but kappa(.,{y}) = {k} < 0")
    if rho < -tolerance and items:
        if min(k for _, k in items) > 0:
            problems.append(f"cd {rho:.6g} < 0 but every probed kappa is positive")
    if any(k < 0 for _, k in items) and rho >= -tolerance:
        problems.append(f"some kappa < 0 but cd {rho:.6g} >= 0")
    return (not problems, problems)


# -- biclique decomposition of an edge neighborhood ------------------------


def _biclique_closure(g: Graph, a_side: set[int], b_side: set[int]):
    """Galois closure: alternate each side to the common neighborhood of
    the other until stable.  Returns the maximal biclique through the seed."""
    while True:
        new_a = None
        for b in b_side:
            nb = set(g.neighbors(b))
            new_a = nb if new_a is None else new_a & nb
        new_b = None
        for a in new_a:
            na = set(g.neighbors(a))
            new_b = na if new_b is None else new_b & na
        if new_a == a_side and new_b == b_side:
            return a_side, b_side
        a_side, b_side = new_a, new_b


def bipartite_decomposition(g: Graph, x: int, y: int):
    """Equal-part biclique classes pairing N(x) minus y with N(y) minus x.

    Returns a list of (S_i, T_i) with each {y} + S_i, {x} + T_i the parts
    of one maximal complete bipartite subgraph through the edge, or None
    when the structure is absent (unequal parts, overlap, or incomplete
    cover).  Triangles break the sidedness of the construction, so they
    are a domain error rather than an absence.
    """
    if not g.has_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge")
    if contains_k3(g):
        raise GraphError("biclique decomposition needs a triangle-free graph")
    rest_x = [w for w in g.neighbors(x) if w != y]
    rest_y = set(g.neighbors(y)) - {x}
    classes: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    assigned: dict[int, int] = {}
    for w in rest_x:
        if w in assigned:
            continue
        a_side, b_side = _biclique_closure(g, {x}, {y, w})
        if x not in a_side or y not in b_side or w not in b_side:
            return None
        if len(a_side) != len(b_side):
            return None
        s = tuple(sorted(b_side - {y}))
        t = tuple(sorted(a_side - {x}))
        if any(v in assigned for v in s) or not set(s) <= set(rest_x):
            return None
        if not set(t) <= rest_y:
            return None
        idx = len(classes)
        classes.append((s, t))
        for v in s:
            assigned[v] = idx
    # classes must tile both neighborhoods
    if len(assigned) != len(rest_x):
        return None
    t_all = [v for _, t in classes for v in t]
    if len(t_all) != len(set(t_all)) or set(t_all) != rest_y:
        return None
    # closure seeded anywhere inside a class must reproduce it
    for s, t in classes:
        for w in s:
            a2, b2 = _biclique_closure(g, {x}, {y, w})
            if b2 != set(s) | {y} or a2 != set(t) | {x}:
                return None
    return classes


# -- interchange process host rules ----------------------------------------


def interchange_class(h: Graph) -> StructureClass:
    """Class of the interchange state graph, read off the host graph.

    Swaps along two host edges commute exactly when the edges are
    vertex-disjoint, and the state graph has a 2x3 biclique exactly when
    the host has a triangle, which gives the rules below.
    """
    if not h.edges:
        raise GraphError("interchange process needs at least one edge")
    if contains_k3(h):
        return StructureClass.INAPPLICABLE
    if any(h.degree(v) >= 3 for v in h.vertices):
        return StructureClass.MULTI_UNLINKED
    # max degree <= 2: components are paths or cycles
    comp_edges: dict[int, int] = {}
    comp_of: dict[int, int] = {}
    for v in h.vertices:
        if v in comp_of:
            continue
        comp = len(comp_edges)
        stack = [v]
        comp_of[v] = comp
        vertices = []
        while stack:
            u = stack.pop()
            vertices.append(u)
            for w in h.neighbors(u):
                if w not in comp_of:
                    comp_of[w] = comp
                    stack.append(w)
        comp_edges[comp] = sum(h.degree(u) for u in vertices) // 2
        if comp_edges[comp] >= len(vertices):
            # a cycle of length >= 4 contains a three-edge path
            return StructureClass.MULTI_UNLINKED
    lengths = [e for e in comp_edges.values() if e > 0]
    if max(lengths) >= 3:
        return StructureClass.MULTI_UNLINKED
    if max(lengths) == 2:
        return StructureClass.ONE_UNLINKED
    return StructureClass.FULLY_LINKED


# -- class-certifying test vectors -----------------------------------------


def flat_test_vector(ball: LocalBall, profile: LinkProfile):
    """The +1/-1 vector on an unlinked neighbor pair, optimally extended.

    Evaluates to exactly zero under the doubled Gamma2 form whenever the
    class hypotheses hold.  None if every pair is linked.
    """
    pairs = profile.unlinked_pairs()
    if not pairs:
        return None
    y, z = pairs[0]
    values = {v: Fraction(0) for v in ball.sphere1}
    values[y] = Fraction(1)
    values[z] = Fraction(-1)
    out = dict(values)
    out.update(second_neighbor_minimizer(ball, values))
    out[ball.base] = Fraction(0)
    return out


def negative_test_vector(ball: LocalBall, profile: LinkProfile):
    """The (d-1)/-1 vector at a neighbor missing two or more partners.

    Evaluates to at most -2d under the doubled Gamma2 form whenever the
    class hypotheses hold.  None unless some neighbor has non-link count
    at least two.
    """
    worst = [y for y, c in sorted(profile.nonlink_counts.items()) if c >= 2]
    if not worst:
        return None
    y = worst[0]
    d = len(ball.sphere1)
    values = {v: Fraction(-1) for v in ball.sphere1}
    values[y] = Fraction(d - 1)
    out = dict(values)
    out.update(second_neighbor_minimizer(ball, values))
    out[ball.base] = Fraction(0)
    return out
