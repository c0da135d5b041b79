"""Copositivity oracle independent of the zero machinery.

`certify` runs a simplicial partition of the standard simplex: a simplex with
vertex matrix V is settled once V^T A V >= -eps entrywise. Otherwise the edge
carrying the most negative Gram entry is split at the minimizer of the
quadratic form along that edge, which either exposes a violating point or
drags the partition vertices onto the zero set of A.

Extreme copositive matrices have zeros on the simplex, so only the
eps-relaxed verdict can be reached for them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

# Split parameter is kept inside [SPLIT_CLAMP, 1 - SPLIT_CLAMP] so children shrink.
SPLIT_CLAMP = 0.05


class Outcome(enum.Enum):
    COPOSITIVE_UP_TO_EPS = "CopositiveUpToEps"
    NOT_COPOSITIVE = "NotCopositive"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class CopositivityVerdict:
    outcome: Outcome
    witness: np.ndarray | None = None
    value: float | None = None
    depth: int = 0
    simplices: int = 0
    unresolved: int = 0

    def to_json(self) -> dict:
        out = {"verdict": self.outcome.value, "depth": self.depth, "simplices": self.simplices}
        if self.witness is not None:
            out["witness"] = self.witness.tolist()
            out["value"] = self.value
        if self.outcome is Outcome.INCONCLUSIVE:
            out["unresolved"] = self.unresolved
        return out

    def __bool__(self):
        return self.outcome is Outcome.COPOSITIVE_UP_TO_EPS


def quadratic_value(a, w) -> float:
    """w^T a w / (sum w)^2 by compensated summation, not via the BLAS product."""
    a = np.asarray(a, dtype=float)
    w = np.asarray(w, dtype=float)
    w = w / w.sum()
    return math.fsum(a[i, j] * w[i] * w[j] for i in range(len(w)) for j in range(len(w)))


def _verified_witness(a, w, threshold):
    w = np.clip(np.asarray(w, dtype=float), 0.0, None)
    if w.sum() <= 0:
        return None
    w = w / w.sum()
    val = quadratic_value(a, w)
    return (w, val) if val < threshold else None


def edge_minimizer(G: np.ndarray, i: int, j: int) -> float:
    """Argmin over [0, 1] of q(t) for the point (1-t) v_i + t v_j, given the Gram matrix."""
    a, b, c = G[i, i], G[i, j], G[j, j]
    den = a - 2 * b + c
    if den <= 0:
        return 0.5
    return float(min(max((a - b) / den, 0.0), 1.0))


def split_simplex(V: np.ndarray, i: int, j: int, t: float) -> tuple[np.ndarray, np.ndarray]:
    """Split the simplex with vertex columns V along edge (i, j) at parameter t."""
    w = (1 - t) * V[:, i] + t * V[:, j]
    left, right = V.copy(), V.copy()
    left[:, i] = w
    right[:, j] = w
    return left, right


def certify(a, eps: float = 1e-9, max_depth: int = 40) -> CopositivityVerdict:
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    stack = [(np.eye(n), 0)]
    count = 0
    deepest = 0
    unresolved = 0
    while stack:
        V, d = stack.pop()
        count += 1
        deepest = max(deepest, d)
        G = V.T @ a @ V
        k = int(G.argmin())
        i, j = divmod(k, n)
        if G[i, j] >= -eps:
            continue
        if i == j:
            found = _verified_witness(a, V[:, i], -eps)
            if found:
                return CopositivityVerdict(Outcome.NOT_COPOSITIVE, *found, depth=d, simplices=count)
        t = edge_minimizer(G, i, j)
        found = _verified_witness(a, (1 - t) * V[:, i] + t * V[:, j], -eps)
        if found:
            return CopositivityVerdict(Outcome.NOT_COPOSITIVE, *found, depth=d, simplices=count)
        if d >= max_depth:
            unresolved += 1
            continue
        t = min(max(t, SPLIT_CLAMP), 1 - SPLIT_CLAMP)
        left, right = split_simplex(V, i, j, t)
        stack.append((right, d + 1))
        stack.append((left, d + 1))
    outcome = Outcome.INCONCLUSIVE if unresolved else Outcome.COPOSITIVE_UP_TO_EPS
    return CopositivityVerdict(outcome, depth=deepest, simplices=count, unresolved=unresolved)


def polish(a, x, iters: int = 100) -> np.ndarray:
    """Pairwise coordinate descent on the simplex: move mass from the largest
    gradient coordinate in the support to the smallest gradient coordinate."""
    a = np.asarray(a, dtype=float)
    x = np.array(x, dtype=float)
    x = x / x.sum()
    for _ in range(iters):
        g = a @ x
        supp = np.flatnonzero(x > 0)
        i = supp[np.argmax(g[supp])]
        j = int(np.argmin(g))
        gap = g[i] - g[j]
        if i == j or gap <= 0:
            break
        curv = a[i, i] - 2 * a[i, j] + a[j, j]
        t = x[i] if curv <= 0 else min(x[i], gap / curv)
        x[i] -= t
        x[j] += t
    return x


def sample_falsify(a, samples: int = 10_000, seed: int = 0, iters: int = 100) -> np.ndarray | None:
    """Random search for x in the simplex with x^T a x < 0.

    The best of `samples` uniform simplex points (plus the vertices) is
    polished by coordinate descent. A witness is returned only when its
    re-evaluated value is below -1e-12 * max|a_ij|, which keeps rounding noise
    at genuine zeros from being reported.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    rng = np.random.default_rng(seed)
    X = np.vstack([np.eye(n), rng.dirichlet(np.ones(n), size=samples)])
    vals = np.einsum("ki,ij,kj->k", X, a, X)
    x = polish(a, X[int(np.argmin(vals))], iters)
    found = _verified_witness(a, x, -1e-12 * float(np.abs(a).max() or 1.0))
    return None if found is None else found[0]
