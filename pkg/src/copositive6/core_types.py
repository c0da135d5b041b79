"""Shared vocabulary: symmetric matrices, index sets, extended supports, zeros.

Indices are 1-based everywhere outside of numpy indexing, so that supports
print the way they are written in the copositivity literature.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ConstraintViolation

IndexSet = tuple[int, ...]

# Relative threshold deciding which entries of a zero count as positive.
SUPPORT_RTOL = 1e-9


def symmetric(a) -> np.ndarray:
    """Return a read-only float copy of `a` rebuilt from its upper triangle.

    The reflection makes ``out[i, j] == out[j, i]`` hold bit for bit.
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ConstraintViolation("square_matrix", f"got shape {a.shape}")
    out = np.triu(a) + np.triu(a, 1).T
    out.setflags(write=False)
    return out


def index_set(members: Iterable[int], dim: int = 6) -> IndexSet:
    """Sorted, duplicate-free tuple of 1-based indices in ``1..dim``."""
    out = tuple(sorted({int(m) for m in members}))
    if out and (out[0] < 1 or out[-1] > dim):
        raise ConstraintViolation("index_range", f"{out} not within 1..{dim}")
    return out


def support_of(x, rtol: float = SUPPORT_RTOL) -> IndexSet:
    x = np.asarray(x, dtype=float)
    scale = np.abs(x).max() if x.size else 0.0
    if scale == 0.0:
        return ()
    return tuple(int(i) + 1 for i in np.flatnonzero(x > rtol * scale))


def to_zero_based(s: Iterable[int]) -> list[int]:
    return [i - 1 for i in s]


@dataclass(frozen=True, order=True)
class ExtendedSupport:
    """Pair (I, J): support of a zero u and the zero pattern of Au."""

    I: IndexSet
    J: IndexSet

    def __post_init__(self):
        # index sets wider than 6 are allowed; only the lower bound is checked here
        dim = max((6, *self.I, *self.J))
        object.__setattr__(self, "I", index_set(self.I, dim))
        object.__setattr__(self, "J", index_set(self.J, dim))
        if not set(self.I) <= set(self.J):
            raise ConstraintViolation("support_within_complementary", f"I={self.I} not a subset of J={self.J}")

    @classmethod
    def from_difference(cls, I: Iterable[int], extra: Iterable[int]) -> ExtendedSupport:
        """Build from I and J \\ I, the form used in published tables."""
        I = tuple(I)
        return cls(I, tuple(set(I) | set(extra)))

    @property
    def extra(self) -> IndexSet:
        """J \\ I."""
        return tuple(j for j in self.J if j not in self.I)

    def to_json(self) -> dict:
        return {"I": list(self.I), "J": list(self.J)}

    @classmethod
    def from_json(cls, obj: dict) -> ExtendedSupport:
        return cls(tuple(obj["I"]), tuple(obj["J"]))

    def __str__(self):
        fmt = lambda s: "{" + ",".join(map(str, s)) + "}"
        return f"({fmt(self.I)},{fmt(self.J)})"


@dataclass(frozen=True)
class Zero:
    """A zero u >= 0 of a copositive matrix, normalized onto the standard simplex."""

    vector: np.ndarray
    support: IndexSet

    @classmethod
    def from_vector(cls, x, rtol: float = SUPPORT_RTOL) -> Zero:
        x = np.array(x, dtype=float)
        if x.ndim != 1 or x.min() < -rtol * np.abs(x).max():
            raise ConstraintViolation("nonnegative_vector", f"{x}")
        x = np.clip(x, 0.0, None)
        total = x.sum()
        if total <= 0:
            raise ConstraintViolation("nonzero_vector")
        x = x / total
        x.setflags(write=False)
        return cls(x, support_of(x, rtol))

    def to_json(self) -> dict:
        return {"vector": self.vector.tolist(), "support": list(self.support)}


@dataclass(frozen=True)
class AngleVector:
    """Six angles (radians) parameterizing the case-13 matrices.

    Construction enforces the open conditions shared by all case-13 matrices:
    positive angles, total below 2*pi, and each cyclically adjacent pair
    summing to less than pi.
    """

    phi: tuple[float, float, float, float, float, float]

    def __post_init__(self):
        phi = tuple(float(p) for p in self.phi)
        if len(phi) != 6:
            raise ConstraintViolation("six_angles", f"got {len(phi)}")
        object.__setattr__(self, "phi", phi)
        bad = [i + 1 for i, p in enumerate(phi) if not p > 0]
        if bad:
            raise ConstraintViolation("positive_angles", f"phi_{bad} <= 0")
        if not sum(phi) < 2 * np.pi:
            raise ConstraintViolation("total_angle_below_2pi", f"sum = {sum(phi):.6g}")
        for i in range(6):
            j = (i + 1) % 6
            if not phi[i] + phi[j] < np.pi:
                raise ConstraintViolation("adjacent_sum_below_pi", f"phi_{i + 1} + phi_{j + 1} >= pi")

    @classmethod
    def from_pi_multiples(cls, fractions: Sequence[float]) -> AngleVector:
        return cls(tuple(np.pi * float(f) for f in fractions))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.phi)

    def partial(self, *indices: int) -> float:
        """Sum of the angles with the given 1-based indices."""
        return float(sum(self.phi[i - 1] for i in indices))

    def __iter__(self):
        return iter(self.phi)


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}; ``image[k-1]`` is where k is sent."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(k) for k in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ConstraintViolation("bijection", f"{image} is not a permutation of 1..{len(image)}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int = 6) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, k: int) -> int:
        return self.image[k - 1]

    def map_set(self, s: Iterable[int]) -> IndexSet:
        return tuple(sorted(self.image[k - 1] for k in s))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.image)
        for k, pk in enumerate(self.image, start=1):
            inv[pk - 1] = k
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply `other` first."""
        return Permutation(tuple(self(other(k)) for k in range(1, len(self.image) + 1)))

    def matrix(self) -> np.ndarray:
        """Permutation matrix P with (P x)[p(k)] = x[k]."""
        n = len(self.image)
        P = np.zeros((n, n))
        for k, pk in enumerate(self.image):
            P[pk - 1, k] = 1.0
        return P


def apply_permutation(p: Permutation, e: ExtendedSupport) -> ExtendedSupport:
    return ExtendedSupport(p.map_set(e.I), p.map_set(e.J))


def matrix_to_json(a) -> list[list[float]]:
    return np.asarray(a, dtype=float).tolist()


def matrix_from_json(rows) -> np.ndarray:
    rows = np.asarray(rows, dtype=float)
    if not np.array_equal(rows, rows.T):
        raise ConstraintViolation("symmetric_matrix", "matrix file is not symmetric")
    return symmetric(rows)
