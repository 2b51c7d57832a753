"""Independent slow implementations used only to cross-check the library.

Nothing here shares code with the package: the transport oracle explores
transportation-polytope extreme points by exhaustive cell saturation, and
the spectral oracle minimizes the Rayleigh quotient by projected gradient
descent from many random starts.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


def oracle_wasserstein(cost, supply, demand) -> Fraction:
    """Exact minimum transport cost by recursive cell saturation.

    Every extreme point of the transportation polytope is reachable by
    repeatedly picking a cell and shipping the full min(row, column)
    remainder through it, so minimizing over all such sequences is exact.
    Masses are scaled to integers first so memo states are cheap to hash,
    and a state with a single live row or column is priced directly (the
    plan there is forced).  Exponential, but fine for supports <= 6.
    """
    supply = [Fraction(x) for x in supply]
    demand = [Fraction(x) for x in demand]
    if sum(supply) != sum(demand):
        raise ValueError(f"mass mismatch {sum(supply)} != {sum(demand)}")
    scale = math.lcm(*(x.denominator for x in supply + demand))
    m, n = len(supply), len(demand)
    memo: dict = {}

    def rec(s, t):
        rows = [i for i in range(m) if s[i]]
        if not rows:
            return 0
        if len(rows) == 1:
            i = rows[0]
            return sum(t[j] * cost[i][j] for j in range(n) if t[j])
        cols = [j for j in range(n) if t[j]]
        if len(cols) == 1:
            j = cols[0]
            return sum(s[i] * cost[i][j] for i in rows)
        key = (s, t)
        if key in memo:
            return memo[key]
        best = None
        for i in rows:
            for j in cols:
                move = min(s[i], t[j])
                ns = s[:i] + (s[i] - move,) + s[i + 1:]
                nt = t[:j] + (t[j] - move,) + t[j + 1:]
                val = move * cost[i][j] + rec(ns, nt)
                if best is None or val < best:
                    best = val
        memo[key] = best
        return best

    raw = rec(tuple(int(x * scale) for x in supply),
              tuple(int(x * scale) for x in demand))
    return Fraction(raw) / scale


def rayleigh_minimum(matrix: np.ndarray, restarts: int = 100,
                     iters: int = 300, seed: int = 0) -> float:
    """Smallest Rayleigh quotient of a symmetric matrix, no eigensolver.

    Batched projected gradient on the unit sphere with an exact 2x2
    subspace line search per step.
    """
    m = np.asarray(matrix, dtype=float)
    n = m.shape[0]
    if n == 1:
        return float(m[0, 0])
    rng = np.random.default_rng(seed)
    f = rng.normal(size=(restarts, n))
    f /= np.linalg.norm(f, axis=1, keepdims=True)
    for _ in range(iters):
        mf = f @ m
        q = np.sum(f * mf, axis=1)
        r = mf - q[:, None] * f
        nr = np.linalg.norm(r, axis=1)
        live = nr > 1e-14
        if not live.any():
            break
        u = np.zeros_like(f)
        u[live] = r[live] / nr[live, None]
        # minimize the quotient exactly on span{f, u}
        b = np.sum(u * mf, axis=1)
        c = np.sum(u * (u @ m), axis=1)
        half_tr = (q + c) / 2
        rad = np.sqrt(((q - c) / 2) ** 2 + b ** 2)
        lam = half_tr - rad
        # eigenvector of [[q, b], [b, c]] for the smaller eigenvalue
        alpha = lam - c
        beta = b
        norm = np.hypot(alpha, beta)
        flat = norm < 1e-15
        alpha = np.where(flat, 1.0, alpha)
        beta = np.where(flat, 0.0, beta)
        norm = np.where(flat, 1.0, norm)
        newf = (alpha / norm)[:, None] * f + (beta / norm)[:, None] * u
        newf /= np.linalg.norm(newf, axis=1, keepdims=True)
        f = np.where(live[:, None], newf, f)
    mf = f @ m
    q = np.sum(f * mf, axis=1)
    return float(q.min())
