"""Curvature-dimension (CD) curvature at a vertex.

The pipeline is exact until the last step: the Gamma and doubled Gamma2
forms are assembled over the punctured two-ball with Fraction entries,
second-neighbor variables are eliminated by an exact Schur complement,
and only the final smallest-eigenvalue extraction is floating point.

All forms fix f(base) = 0; the operators are translation invariant, so
nothing is lost, and the Gamma form becomes half the identity on the
first sphere, which turns the generalized eigenproblem into a plain
symmetric one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import GraphError, LocalBall


class QuadraticForm:
    """Symmetric matrix of Fractions indexed by an ordered vertex list."""

    def __init__(self, index: tuple[int, ...], matrix):
        self.index = tuple(index)
        n = len(self.index)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise GraphError("quadratic form matrix does not match its index")
        self.matrix = [[Fraction(x) for x in row] for row in matrix]
        for i in range(n):
            for j in range(i):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise GraphError("quadratic form matrix is not symmetric")
        self._pos = {v: i for i, v in enumerate(self.index)}

    def value(self, values) -> Fraction:
        """Evaluate f^T M f; vertices absent from `values` count as zero.

        Exact: feed int or Fraction values.
        """
        f = [Fraction(values.get(v, 0)) for v in self.index]
        total = Fraction(0)
        for i, fi in enumerate(f):
            if not fi:
                continue
            row = self.matrix[i]
            total += fi * sum(row[j] * fj for j, fj in enumerate(f) if fj)
        return total

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.matrix])

    def entry(self, u: int, v: int) -> Fraction:
        return self.matrix[self._pos[u]][self._pos[v]]


@dataclass(frozen=True)
class CdResult:
    vertex: int
    rho: float
    minimizer: dict[int, float]
    method: str  # "eigensolve" or "exact-special-case"


def gamma_form(ball: LocalBall) -> QuadraticForm:
    """Gamma f at the base as a form over {base} + sphere1."""
    index = (ball.base,) + ball.sphere1
    n = len(index)
    half = Fraction(1, 2)
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        m[0][0] += half
        m[i][i] += half
        m[0][i] -= half
        m[i][0] -= half
    return QuadraticForm(index, m)


def gamma2_form(ball: LocalBall) -> QuadraticForm:
    """Twice Gamma2 at the base, over sphere1 + sphere2, with f(base) = 0.

    Four contributions: second-neighbor pulls (f(u) - 2f(v))^2, the squared
    neighbor sum, the degree diagonal, and the triangle term for adjacent
    neighbor pairs.
    """
    if not ball.complete:
        raise GraphError(
            f"two-ball at {ball.base} is cut by a truncation boundary; "
            "curvature would be unreliable"
        )
    s1, s2 = ball.sphere1, ball.sphere2
    index = s1 + s2
    pos = {v: i for i, v in enumerate(index)}
    s2_set = set(s2)
    n = len(index)
    m = [[Fraction(0)] * n for _ in range(n)]

    dx = ball.degrees[ball.base]
    for v in s1:
        i = pos[v]
        for u in ball.adj[v]:
            if u in s2_set:
                j = pos[u]
                m[j][j] += Fraction(1, 2)
                m[i][i] += 2
                m[i][j] -= 1
                m[j][i] -= 1
        # squared neighbor sum
        m[i][i] += 1
        for w in s1:
            if w != v:
                m[i][pos[w]] += 1
        m[i][i] += Fraction(4 - dx - ball.degrees[v], 2)
    # adjacent neighbor pairs form triangles with the base
    for a, v in enumerate(s1):
        for w in s1[a + 1:]:
            if ball.has_edge(v, w):
                i, j = pos[v], pos[w]
                m[i][i] += Fraction(5, 2)
                m[j][j] += Fraction(5, 2)
                m[i][j] -= 2
                m[j][i] -= 2
    return QuadraticForm(index, m)


def second_neighbor_minimizer(ball: LocalBall, s1_values) -> dict[int, Fraction]:
    """Closed-form optimal sphere2 values: twice the mean over linked sphere1.

    s1_values maps sphere1 vertices to numbers; missing entries count 0.
    """
    out = {}
    for u in ball.sphere2:
        nbrs = ball.adj[u]
        if not nbrs:
            raise GraphError(f"second neighbor {u} has no first-sphere neighbor")
        total = sum(Fraction(s1_values.get(v, 0)) for v in nbrs)
        out[u] = 2 * total / len(nbrs)
    return out


def eliminate_second_neighbors(g2: QuadraticForm, ball: LocalBall) -> QuadraticForm:
    """Exact Schur complement removing the sphere2 block.

    The sphere2 block is diagonal (sphere2 vertices never interact in the
    doubled Gamma2 form) with entries k_u/2 > 0, so the elimination is a
    plain weighted rank reduction and stays in Fractions.
    """
    s1, s2 = ball.sphere1, ball.sphere2
    if g2.index != s1 + s2:
        raise GraphError("form index does not match the ball")
    n1, n2 = len(s1), len(s2)
    mat = g2.matrix
    for a in range(n2):
        for b in range(n2):
            if a != b and mat[n1 + a][n1 + b] != 0:
                raise GraphError("sphere2 block unexpectedly non-diagonal")
    for a in range(n2):
        if mat[n1 + a][n1 + a] <= 0:
            raise GraphError(f"sphere2 vertex {s2[a]} has a non-positive diagonal")
    red = [[mat[i][j] for j in range(n1)] for i in range(n1)]
    for a in range(n2):
        d = mat[n1 + a][n1 + a]
        col = [mat[i][n1 + a] for i in range(n1)]
        for i in range(n1):
            if col[i] == 0:
                continue
            for j in range(n1):
                if col[j] != 0:
                    red[i][j] -= col[i] * col[j] / d
    return QuadraticForm(s1, red)


def cd_curvature(ball: LocalBall, tolerance: float = 1e-9) -> CdResult:
    """Largest rho with Gamma2 f >= rho Gamma f at the base, plus minimizer.

    Equals the smallest eigenvalue of the reduced doubled-Gamma2 matrix,
    because the companion Gamma form is half the identity on sphere1 and
    the doubling cancels.
    """
    if not ball.complete:
        raise GraphError(
            f"two-ball at {ball.base} is cut by a truncation boundary; "
            "curvature would be unreliable"
        )
    d = len(ball.sphere1)
    if d == 0:
        raise GraphError(f"vertex {ball.base} is isolated; curvature undefined")
    red = eliminate_second_neighbors(gamma2_form(ball), ball)
    if d == 1:
        rho_exact = red.matrix[0][0]
        vec = {ball.sphere1[0]: Fraction(1)}
        ext = second_neighbor_minimizer(ball, vec)
        minimizer = {ball.base: 0.0, ball.sphere1[0]: 1.0}
        minimizer.update({u: float(x) for u, x in ext.items()})
        return CdResult(ball.base, float(rho_exact), minimizer, "exact-special-case")
    eigvals, eigvecs = np.linalg.eigh(red.as_array())
    rho = float(eigvals[0])
    vec = eigvecs[:, 0]
    minimizer = {ball.base: 0.0}
    minimizer.update({v: float(vec[i]) for i, v in enumerate(ball.sphere1)})
    for u in ball.sphere2:
        nbrs = ball.adj[u]
        minimizer[u] = 2.0 * sum(minimizer[v] for v in nbrs) / len(nbrs)
    return CdResult(ball.base, rho, minimizer, "eigensolve")


def satisfies_cd(ball: LocalBall, rho: float, tolerance: float = 1e-9) -> bool:
    """Whether the base satisfies the CD(rho, infinity) inequality."""
    return cd_curvature(ball, tolerance).rho >= rho - tolerance
