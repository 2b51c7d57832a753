"""
Edge curvature bounds the diameter
==================================

If every edge of a finite connected graph has transport curvature at
least kappa* > 0, the diameter is at most 1/kappa*; on d-regular graphs
this specializes to D <= 2d, and without regularity the lazy measures
still give D <= 2d^2 - 2d in terms of the maximum degree.  The hypercube
meets its bound exactly.
"""

from fractions import Fraction

from graphcurvature import diameter, is_regular, ollivier_kappa
from graphcurvature.families import (
    complete_bipartite,
    hypercube,
    star,
    transposition_cayley,
)

graphs = [hypercube(3), hypercube(4), hypercube(5),
          complete_bipartite(3), transposition_cayley(4)]

print(f"{'graph':21s} {'kappa*':>7s} {'D':>3s} {'1/kappa*':>9s} {'2d':>4s}")
for g in graphs:
    kstar = min(ollivier_kappa(g, x, y) for x, y in g.edges)
    d = is_regular(g)
    dia = diameter(g)
    tight = "  <- tight" if dia == 1 / kstar else ""
    print(f"{g.name:21s} {str(kstar):>7s} {dia:3d} {str(1 / kstar):>9s} "
          f"{2 * d:4d}{tight}")

# the star graph is the irregular showcase: curvature 1/n on every edge
# even though degrees are 1 and n
print()
for n in (4, 6, 8):
    g = star(n)
    kappas = {ollivier_kappa(g, x, y) for x, y in g.edges}
    dmax = max(g.degree(v) for v in g.vertices)
    bound = 2 * dmax * dmax - 2 * dmax
    assert kappas == {Fraction(1, n)}
    print(f"{g.name}: kappa = 1/{n} on all edges, diameter {diameter(g)} "
          f"<= 2d^2-2d = {bound}")
