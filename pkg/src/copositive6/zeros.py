"""Minimal zeros and extended minimal zero support sets of copositive matrices.

A minimal zero u with support I satisfies A_I u_I = 0 with A_I positive
semidefinite, and for each support there is at most one such u on the
standard simplex. The search walks the principal submatrices in order of
increasing size, skips any face containing an accepted support, and accepts
faces whose submatrix is PSD with a one-dimensional, strictly positive kernel.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from .core_types import ExtendedSupport, Zero, to_zero_based
from .errors import InvariantViolation, NotCopositiveEvidence

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZeroTolerances:
    """Thresholds for unit-scale matrices; multiplied by max |a_ij| before use."""

    psd: float = 1e-9     # eigenvalue counted as zero / lower bound for PSD
    quad: float = 1e-10   # |u^T A u| accepted for a zero
    slack: float = 1e-8   # (A u)_i at or below this belongs to the complementary set
    pos: float = 1e-7     # minimum entry of a normalized kernel vector


DEFAULT_TOL = ZeroTolerances()


def _scale(a: np.ndarray) -> float:
    s = float(np.abs(a).max())
    return s if s > 0 else 1.0


def _signed_nonneg(v: np.ndarray, tol: float):
    """Return ±v if one of them is entrywise >= -tol, else None."""
    if v.sum() < 0:
        v = -v
    return v if v.min() >= -tol else None


def _escape_direction(a, u, au, i):
    """Witness u + t e_i for a zero with (Au)_i < 0."""
    t = -au[i] / a[i, i] if a[i, i] > 0 else 1.0
    w = u.copy()
    w[i] += t
    return w, float(w @ a @ w)


def find_minimal_zeros(a, tol: ZeroTolerances = DEFAULT_TOL, diagnostics: list | None = None) -> list[Zero]:
    """Minimal zeros of `a` on the standard simplex, sorted by support.

    `a` is assumed copositive. Evidence to the contrary met during the search
    (a nonnegative eigenvector with negative eigenvalue, or a zero with
    (Au)_i < 0) raises NotCopositiveEvidence. Faces whose kernel has dimension
    two or more are skipped and described in `diagnostics` when given.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    scale = _scale(a)
    accepted: list[frozenset] = []
    zeros: list[Zero] = []
    for r in range(1, n + 1):
        for face in itertools.combinations(range(n), r):
            fs = frozenset(face)
            if any(s <= fs for s in accepted):
                continue
            idx = list(face)
            w, V = np.linalg.eigh(a[np.ix_(idx, idx)])
            if w[0] < -tol.psd * scale:
                x = _signed_nonneg(V[:, 0], tol.pos)
                if x is not None:
                    full = np.zeros(n)
                    full[idx] = np.clip(x, 0, None)
                    val = float(full @ a @ full)
                    if val < -tol.quad * scale:
                        raise NotCopositiveEvidence(full / full.sum(), val / full.sum() ** 2)
                continue
            kernel = np.flatnonzero(np.abs(w) <= tol.psd * scale)
            if kernel.size == 0:
                continue
            if kernel.size > 1:
                msg = f"face {[i + 1 for i in idx]}: kernel dimension {kernel.size}, not accepted"
                log.debug(msg)
                if diagnostics is not None:
                    diagnostics.append(msg)
                continue
            v = V[:, kernel[0]]
            v = v / v.sum() if v.sum() != 0 else v
            if v.min() <= tol.pos:
                continue
            u = np.zeros(n)
            u[idx] = v
            au = a @ u
            if au.min() < -tol.slack * scale:
                i = int(au.argmin())
                wit, val = _escape_direction(a, u, au, i)
                raise NotCopositiveEvidence(wit / wit.sum(), val / wit.sum() ** 2)
            if abs(float(u @ au)) > tol.quad * scale:
                continue
            accepted.append(fs)
            zeros.append(Zero.from_vector(u))
    zeros.sort(key=lambda z: z.support)
    return zeros


def extended_support(a, u: Zero, tol: ZeroTolerances = DEFAULT_TOL) -> ExtendedSupport:
    a = np.asarray(a, dtype=float)
    au = a @ u.vector
    J = tuple(int(i) + 1 for i in np.flatnonzero(au <= tol.slack * _scale(a)))
    if not set(u.support) <= set(J):
        raise InvariantViolation(f"support {u.support} not inside complementary set {J}; tolerances disagree")
    return ExtendedSupport(u.support, J)


def esupp_set(a, tol: ZeroTolerances = DEFAULT_TOL) -> list[ExtendedSupport]:
    """Extended minimal zero support set, ordered lexicographically by support."""
    return [extended_support(a, u, tol) for u in find_minimal_zeros(a, tol)]


def check_ZE_membership(a, esupps, rank_tol: float = 1e-9) -> bool:
    """True iff every block A[I x J] is rank deficient (rank < |I|)."""
    a = np.asarray(a, dtype=float)
    for e in esupps:
        block = a[np.ix_(to_zero_based(e.I), to_zero_based(e.J))]
        # |I| <= |J|, so there are exactly |I| singular values
        s = np.linalg.svd(block, compute_uv=False)
        if not s[-1] <= rank_tol * s[0]:
            return False
    return True
