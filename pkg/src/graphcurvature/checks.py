"""Curvature fact gathering and theorem cross-checks.

gather_facts sweeps a corpus graph: spectral curvature and class at every
vertex whose two-ball is complete, exact edge curvature wherever the
transport neighborhood is complete.  run_checks then replays every
applicable classification, linkage, decomposition, duality and diameter
statement against those facts and reports violations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bakry_emery import cd_curvature, gamma2_form
from .classify import (
    StructureClass,
    bipartite_decomposition,
    cd_ollivier_consistency,
    classify_vertex,
    flat_test_vector,
    link_profile,
    negative_test_vector,
)
from .corpus import CorpusItem
from .graphs import (
    Graph,
    GraphError,
    contains_k23,
    contains_k3,
    diameter,
    effective_degree,
    extract_ball,
    is_regular,
)
from .ollivier import (
    TransportProblem,
    certificate_violations,
    extend_certificate,
    kappa_detail,
    kappa_lower_witness,
    kappa_upper_witness,
    lazy_measure,
    ollivier_kappa,
    validate_plan,
    wasserstein,
)


@dataclass(frozen=True)
class VertexFact:
    vertex: int
    label: str
    degree: int
    safe: bool
    rho: float | None
    structure_class: StructureClass | None
    N: int | None
    nonlink_counts: dict[int, int] | None
    min_linkage: Fraction | None        # None when fewer than two neighbors
    flat_vector_value: Fraction | None
    negative_vector_value: Fraction | None


@dataclass(frozen=True)
class EdgeFact:
    x: int
    y: int
    safe: bool
    kappa: Fraction | None


@dataclass(frozen=True)
class GraphFacts:
    key: str
    graph: Graph
    regular: int | None
    triangle_free: bool
    biclique_free: bool
    truncated: bool
    vertices: tuple[VertexFact, ...]
    edges: tuple[EdgeFact, ...]
    deep_vertices: tuple[int, ...]
    deep_edges: tuple[tuple[int, int], ...]


def gather_facts(item: CorpusItem, tolerance: float = 1e-9,
                 inject_fault: str | None = None) -> GraphFacts:
    """Sweep one corpus graph.  inject_fault ∈ {None, "kappa", "rho"}
    perturbs the first gathered value; only the harness's own failure
    path uses it."""
    g = item.graph
    k3 = contains_k3(g)
    vfacts = []
    for x in g.vertices:
        if not g.two_ball_complete(x):
            vfacts.append(VertexFact(x, g.label(x), g.degree(x), False,
                                     None, None, None, None, None, None, None))
            continue
        ball = extract_ball(g, x)
        rho = cd_curvature(ball, tolerance).rho
        verdict = classify_vertex(g, x)
        profile = verdict.profile
        if profile is None and not k3:
            # class is inapplicable but linkage facts remain meaningful
            profile = link_profile(ball)
        min_linkage = None
        counts = None
        flat_val = None
        neg_val = None
        if profile is not None:
            counts = dict(profile.nonlink_counts)
            if profile.linkage:
                min_linkage = min(profile.linkage.values())
            cls = verdict.structure_class
            if cls is StructureClass.ONE_UNLINKED:
                vec = flat_test_vector(ball, profile)
                if vec is not None:
                    flat_val = gamma2_form(ball).value(vec)
            elif cls is StructureClass.MULTI_UNLINKED:
                vec = negative_test_vector(ball, profile)
                if vec is not None:
                    neg_val = gamma2_form(ball).value(vec)
        vfacts.append(VertexFact(
            x, g.label(x), g.degree(x), True, rho,
            verdict.structure_class, verdict.N, counts, min_linkage,
            flat_val, neg_val,
        ))
    efacts = []
    for x, y in g.edges:
        if g.transport_neighborhood_complete(x, y):
            efacts.append(EdgeFact(x, y, True, ollivier_kappa(g, x, y)))
        else:
            efacts.append(EdgeFact(x, y, False, None))
    if inject_fault == "kappa":
        for i, ef in enumerate(efacts):
            if ef.kappa is not None:
                efacts[i] = EdgeFact(ef.x, ef.y, True, ef.kappa + Fraction(1, 7))
                break
    elif inject_fault == "rho":
        for i, vf in enumerate(vfacts):
            if vf.rho is not None:
                vfacts[i] = VertexFact(vf.vertex, vf.label, vf.degree, True,
                                       vf.rho + 0.25, vf.structure_class,
                                       vf.N, vf.nonlink_counts, vf.min_linkage,
                                       vf.flat_vector_value,
                                       vf.negative_vector_value)
                break
    elif inject_fault is not None:
        raise GraphError(f"unknown fault kind {inject_fault!r}")
    return GraphFacts(
        item.key, g, is_regular(g), not k3, not contains_k23(g),
        g.truncation is not None, tuple(vfacts), tuple(efacts),
        item.deep_vertices, item.deep_edges,
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    applicable: bool
    passed: bool
    details: tuple[str, ...]


def _result(name: str, applicable: bool, problems: list[str],
            note: str = "") -> CheckResult:
    if not applicable:
        return CheckResult(name, False, True, (note,) if note else ())
    return CheckResult(name, True, not problems, tuple(problems))


def _kappa_map(facts: GraphFacts) -> dict[tuple[int, int], Fraction]:
    out = {}
    for ef in facts.edges:
        if ef.kappa is not None:
            out[(ef.x, ef.y)] = ef.kappa
            out[(ef.y, ef.x)] = ef.kappa
    return out


def check_cd_class(facts: GraphFacts, tolerance: float) -> CheckResult:
    """Class verdict versus the spectral curvature value."""
    problems = []
    seen = False
    for vf in facts.vertices:
        cls = vf.structure_class
        if cls is None or cls is StructureClass.INAPPLICABLE:
            continue
        seen = True
        tag = f"{facts.key} vertex {vf.label}"
        if cls is StructureClass.FULLY_LINKED and abs(vf.rho - 2) > tolerance:
            problems.append(f"{tag}: fully linked but rho = {vf.rho!r}")
        elif cls is StructureClass.ONE_UNLINKED and abs(vf.rho) > tolerance:
            problems.append(f"{tag}: one unlinked but rho = {vf.rho!r}")
        elif cls is StructureClass.MULTI_UNLINKED:
            bound = -2 / (vf.degree - 1)
            if vf.rho >= -tolerance or vf.rho > bound + tolerance:
                problems.append(
                    f"{tag}: multi unlinked but rho = {vf.rho!r} "
                    f"(needs < 0 and <= {bound})"
                )
    return _result("cd-class", seen, problems, "no classified vertices")


def check_ollivier_class(facts: GraphFacts, tolerance: float) -> CheckResult:
    """Per-neighbor edge curvature signs forced by the non-link counts."""
    kmap = _kappa_map(facts)
    problems = []
    seen = False
    for vf in facts.vertices:
        cls = vf.structure_class
        if cls is None or cls is StructureClass.INAPPLICABLE:
            continue
        for y, miss in sorted(vf.nonlink_counts.items()):
            k = kmap.get((vf.vertex, y))
            if k is None:
                continue
            seen = True
            tag = f"{facts.key} edge ({vf.label}, {facts.graph.label(y)})"
            if miss == 0 and k != Fraction(1, vf.degree):
                problems.append(f"{tag}: all partners linked but kappa = {k} "
                                f"!= 1/{vf.degree}")
            elif miss == 1 and k < 0:
                problems.append(f"{tag}: one missing partner but kappa = {k} < 0")
            elif miss >= 2 and k > 0:
                problems.append(f"{tag}: {miss} missing partners but "
                                f"kappa = {k} > 0")
    return _result("ollivier-class", seen, problems, "no classified edges")


def check_cd_vs_ollivier(facts: GraphFacts, tolerance: float) -> CheckResult:
    """Sign relations between the two curvatures at each vertex."""
    applicable = (facts.regular is not None and facts.triangle_free
                  and facts.biclique_free and not facts.truncated)
    if not applicable:
        return _result("cd-vs-ollivier", False, [],
                       "needs a regular graph free of triangles and 2x3 bicliques")
    kmap = _kappa_map(facts)
    problems = []
    for vf in facts.vertices:
        kappas = {y: kmap[(vf.vertex, y)]
                  for y in facts.graph.neighbors(vf.vertex)}
        ok, viol = cd_ollivier_consistency(vf.rho, kappas, tolerance)
        if not ok:
            problems.extend(f"{facts.key} vertex {vf.label}: {v}" for v in viol)
    return _result("cd-vs-ollivier", True, problems)


def check_linkage_positive_cd(facts: GraphFacts, tolerance: float) -> CheckResult:
    """Triangle-free ceiling rho <= 2, attained at locally regular
    vertices when every neighbor pair carries linkage weight >= 1/2."""
    if not facts.triangle_free:
        return _result("linkage-positive-cd", False, [], "graph has triangles")
    problems = []
    for vf in facts.vertices:
        if not vf.safe:
            continue
        tag = f"{facts.key} vertex {vf.label}"
        if vf.rho > 2 + tolerance:
            problems.append(f"{tag}: triangle-free but rho = {vf.rho!r} > 2")
        # the linkage equality needs the degree shared with all neighbors
        if effective_degree(facts.graph, vf.vertex) is None:
            continue
        heavy = vf.min_linkage is None or vf.min_linkage >= Fraction(1, 2)
        if heavy and abs(vf.rho - 2) > tolerance:
            problems.append(
                f"{tag}: every pair linkage >= 1/2 but rho = {vf.rho!r} != 2"
            )
    return _result("linkage-positive-cd", True, problems)


def check_bipartite_transport(facts: GraphFacts, tolerance: float) -> CheckResult:
    """Where the equal-part biclique decomposition exists, kappa = 1/d."""
    if not facts.triangle_free:
        return _result("bipartite-transport", False, [], "graph has triangles")
    g = facts.graph
    problems = []
    seen = False
    for ef in facts.edges:
        if ef.kappa is None:
            continue
        classes = bipartite_decomposition(g, ef.x, ef.y)
        if classes is None:
            continue
        seen = True
        d = g.degree(ef.x)
        if ef.kappa != Fraction(1, d):
            problems.append(
                f"{facts.key} edge ({g.label(ef.x)}, {g.label(ef.y)}): "
                f"decomposition exists but kappa = {ef.kappa} != 1/{d}"
            )
    return _result("bipartite-transport", seen, problems,
                   "no edge admits the decomposition")


def check_transport_upper_bound(facts: GraphFacts, tolerance: float) -> CheckResult:
    """Triangle-free graphs never exceed kappa = 1/degree on an edge."""
    if not facts.triangle_free:
        return _result("transport-upper-bound", False, [], "graph has triangles")
    g = facts.graph
    problems = []
    seen = False
    for ef in facts.edges:
        if ef.kappa is None:
            continue
        seen = True
        cap = Fraction(1, max(g.degree(ef.x), g.degree(ef.y)))
        if ef.kappa > cap:
            problems.append(
                f"{facts.key} edge ({g.label(ef.x)}, {g.label(ef.y)}): "
                f"kappa = {ef.kappa} > {cap}"
            )
    return _result("transport-upper-bound", seen, problems, "no safe edges")


def check_test_vectors(facts: GraphFacts, tolerance: float) -> CheckResult:
    """Exact evaluations of the two class-certifying vectors."""
    problems = []
    seen = False
    for vf in facts.vertices:
        tag = f"{facts.key} vertex {vf.label}"
        if vf.structure_class is StructureClass.ONE_UNLINKED:
            seen = True
            if vf.flat_vector_value != 0:
                problems.append(
                    f"{tag}: flat vector evaluates to {vf.flat_vector_value}, not 0"
                )
        elif vf.structure_class is StructureClass.MULTI_UNLINKED:
            seen = True
            if (vf.negative_vector_value is None
                    or vf.negative_vector_value > -2 * vf.degree):
                problems.append(
                    f"{tag}: negative vector evaluates to "
                    f"{vf.negative_vector_value}, needs <= {-2 * vf.degree}"
                )
    return _result("test-vector-certificates", seen, problems,
                   "no flat or negative class vertices")


def check_witness_bounds(facts: GraphFacts, tolerance: float) -> CheckResult:
    """Constructed plans and potentials must bracket the exact kappa."""
    g = facts.graph
    kmap = _kappa_map(facts)
    problems = []
    seen = False
    for x, y in facts.deep_edges:
        k = kmap.get((x, y))
        if k is None:
            continue
        tag = f"{facts.key} edge ({g.label(x)}, {g.label(y)})"
        plan = kappa_lower_witness(g, x, y)
        if plan is not None:
            seen = True
            tp = TransportProblem(g, lazy_measure(g, x), lazy_measure(g, y))
            try:
                validate_plan(tp, plan)
            except GraphError as e:
                problems.append(f"{tag}: witness plan invalid: {e}")
            if k < 1 - plan.total_cost:
                problems.append(
                    f"{tag}: witness cost {plan.total_cost} places kappa >= "
                    f"{1 - plan.total_cost} but kappa = {k}"
                )
        cert = kappa_upper_witness(g, x, y)
        if cert is not None:
            seen = True
            bad = certificate_violations(g, cert.values)
            if bad:
                problems.append(f"{tag}: witness potential: {bad[0]}")
            if cert.gap < 0:
                problems.append(f"{tag}: witness dual exceeds the distance "
                                f"(gap {cert.gap})")
            if k > 1 - cert.dual_value:
                problems.append(
                    f"{tag}: witness dual {cert.dual_value} places kappa <= "
                    f"{1 - cert.dual_value} but kappa = {k}"
                )
    return _result("witness-bounds", seen, problems,
                   "no witness applies on probe edges")


def check_duality(facts: GraphFacts, tolerance: float) -> CheckResult:
    """Plan cost and potential value must meet exactly on probe edges."""
    g = facts.graph
    problems = []
    seen = False
    for x, y in facts.deep_edges:
        if not g.transport_neighborhood_complete(x, y):
            continue
        seen = True
        tag = f"{facts.key} edge ({g.label(x)}, {g.label(y)})"
        detail = kappa_detail(g, x, y)
        tp = TransportProblem(g, lazy_measure(g, x), lazy_measure(g, y))
        try:
            cost = validate_plan(tp, detail.plan)
            if cost != detail.wasserstein:
                problems.append(f"{tag}: plan cost {cost} != distance "
                                f"{detail.wasserstein}")
        except GraphError as e:
            problems.append(f"{tag}: optimal plan invalid: {e}")
        if detail.certificate.gap != 0:
            problems.append(f"{tag}: duality gap {detail.certificate.gap}")
        bad = certificate_violations(g, detail.certificate.values)
        if bad:
            problems.append(f"{tag}: certificate not 1-Lipschitz: {bad[0]}")
        try:
            ext = extend_certificate(g, detail.certificate, x, y)
            bad = certificate_violations(g, ext)
            if bad:
                problems.append(f"{tag}: extended certificate: {bad[0]}")
        except GraphError as e:
            problems.append(f"{tag}: extension failed: {e}")
    return _result("duality", seen, problems, "no transport-safe probe edges")


def check_quantization(facts: GraphFacts, tolerance: float) -> CheckResult:
    """kappa times twice the degree lcm is an integer on every edge."""
    g = facts.graph
    problems = []
    seen = False
    for ef in facts.edges:
        if ef.kappa is None:
            continue
        seen = True
        grain = 2 * math.lcm(g.degree(ef.x), g.degree(ef.y))
        if (ef.kappa * grain).denominator != 1:
            problems.append(
                f"{facts.key} edge ({g.label(ef.x)}, {g.label(ef.y)}): "
                f"kappa = {ef.kappa} not a multiple of 1/{grain}"
            )
    return _result("quantization", seen, problems, "no safe edges")


def check_diameter_bounds(facts: GraphFacts, tolerance: float) -> CheckResult:
    """Positive curvature everywhere caps the diameter."""
    if facts.truncated:
        return _result("diameter-bounds", False, [],
                       "truncated graph stands in for an infinite one")
    kappas = [ef.kappa for ef in facts.edges]
    if not kappas or any(k is None for k in kappas):
        return _result("diameter-bounds", False, [], "edge curvatures incomplete")
    kstar = min(kappas)
    if kstar <= 0:
        return _result("diameter-bounds", False, [],
                       f"minimum edge curvature {kstar} <= 0; bound vacuous")
    g = facts.graph
    dia = diameter(g)
    problems = []
    if dia is None:
        problems.append(f"{facts.key}: disconnected despite positive curvature")
    else:
        if dia * kstar > 1:
            problems.append(f"{facts.key}: diameter {dia} > 1/kappa* = {1 / kstar}")
        if facts.regular is not None and dia > 2 * facts.regular:
            problems.append(f"{facts.key}: diameter {dia} > 2d = {2 * facts.regular}")
        dmax = max(g.degree(v) for v in g.vertices)
        # the irregular bound is vacuous at max degree 1 (a single edge)
        if dmax >= 2 and dia > 2 * dmax * dmax - 2 * dmax:
            problems.append(
                f"{facts.key}: diameter {dia} > 2d^2-2d = {2 * dmax * dmax - 2 * dmax}"
            )
    return _result("diameter-bounds", True, problems)


ALL_CHECKS = (
    check_cd_class,
    check_ollivier_class,
    check_cd_vs_ollivier,
    check_linkage_positive_cd,
    check_bipartite_transport,
    check_transport_upper_bound,
    check_test_vectors,
    check_witness_bounds,
    check_duality,
    check_quantization,
    check_diameter_bounds,
)


def run_checks(facts: GraphFacts, tolerance: float = 1e-9) -> list[CheckResult]:
    return [chk(facts, tolerance) for chk in ALL_CHECKS]


def checks_passed(results) -> bool:
    return all(r.passed for r in results)
