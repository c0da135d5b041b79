"""Case-13 exceptional extreme matrices of COP_6 and their closed-form zero data.

The family has minimal zero supports {1,2,3},{2,3,4},{3,4,5},{4,5,6},{1,5,6},{1,2,6}
and is parameterized by six angles. Two analytic branches exist, differing
only in the (2,5) entry:

* ``V13_1`` when phi2+phi3+phi4 >= phi1+phi5+phi6, with A25 = -cos(phi2+phi3+phi4)
* ``V13_2`` when phi2+phi3+phi4 <= phi1+phi5+phi6, with A25 = -cos(phi1+phi5+phi6)

Every extreme matrix with this support set is D A D for a positive diagonal D.
"""

from __future__ import annotations

import enum
import itertools
import logging
from dataclasses import dataclass

import numpy as np

from .core_types import AngleVector, ExtendedSupport, Zero, symmetric
from .errors import ConstraintViolation

log = logging.getLogger(__name__)

# Absolute tolerance (radians) for treating two angle sums as equal.
EQ_TOL = 1e-10

ZERO_SUPPORTS = ((1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 6), (1, 5, 6), (1, 2, 6))


class Case13Variant(enum.Enum):
    V13_1 = "13.1"
    V13_2 = "13.2"

    @classmethod
    def parse(cls, label) -> Case13Variant:
        if isinstance(label, cls):
            return label
        for v in cls:
            if label in (v.value, v.name):
                return v
        raise ConstraintViolation("variant", f"unknown case-13 variant {label!r}")


class Cmp(enum.Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


def _compare(x: float, y: float, tol: float = EQ_TOL) -> Cmp:
    d = x - y
    if abs(d) <= tol:
        return Cmp.EQ
    return Cmp.GT if d > 0 else Cmp.LT


@dataclass(frozen=True)
class RegimeFlags:
    """Outcome of the three angle-sum comparisons that fix the zero pattern of AU."""

    s234_vs_156: Cmp
    s345_vs_126: Cmp
    s123_vs_456: Cmp

    def as_tuple(self):
        return (self.s234_vs_156, self.s345_vs_126, self.s123_vs_456)

    def n_equalities(self) -> int:
        return sum(f is Cmp.EQ for f in self.as_tuple())


MAIN_REGIME = {
    Case13Variant.V13_1: RegimeFlags(Cmp.GT, Cmp.GT, Cmp.GT),
    Case13Variant.V13_2: RegimeFlags(Cmp.LT, Cmp.GT, Cmp.GT),
}


def _angles(phi) -> AngleVector:
    return phi if isinstance(phi, AngleVector) else AngleVector(tuple(phi))


def classify_regime(phi, tol: float = EQ_TOL) -> RegimeFlags:
    phi = _angles(phi)
    s = phi.partial
    return RegimeFlags(
        _compare(s(2, 3, 4), s(1, 5, 6), tol),
        _compare(s(3, 4, 5), s(1, 2, 6), tol),
        _compare(s(1, 2, 3), s(4, 5, 6), tol),
    )


def is_main_regime(phi, variant) -> bool:
    return classify_regime(phi) == MAIN_REGIME[Case13Variant.parse(variant)]


def satisfies_extremality_condition(phi, tol: float = EQ_TOL) -> bool:
    """sum(phi) != pi, or at least two of the three non-strict inequalities are tight."""
    phi = _angles(phi)
    return abs(sum(phi.phi) - np.pi) > tol or classify_regime(phi, tol).n_equalities() >= 2


def check_family(phi, variant) -> RegimeFlags:
    """Validate the family inequalities for `variant`; return the regime flags."""
    variant = Case13Variant.parse(variant)
    flags = classify_regime(phi)
    if flags.s123_vs_456 is Cmp.LT:
        raise ConstraintViolation("phi1+phi2+phi3 >= phi4+phi5+phi6")
    if flags.s345_vs_126 is Cmp.LT:
        raise ConstraintViolation("phi3+phi4+phi5 >= phi1+phi2+phi6")
    if variant is Case13Variant.V13_1 and flags.s234_vs_156 is Cmp.LT:
        raise ConstraintViolation("phi2+phi3+phi4 >= phi1+phi5+phi6", "required by variant 13.1")
    if variant is Case13Variant.V13_2 and flags.s234_vs_156 is Cmp.GT:
        raise ConstraintViolation("phi2+phi3+phi4 <= phi1+phi5+phi6", "required by variant 13.2")
    return flags


def build_case13(phi, variant=Case13Variant.V13_1, strict_extremality: bool = False) -> np.ndarray:
    """The unit-diagonal case-13 matrix A(phi).

    Entries are cosines of sums of cyclically consecutive angles, evaluated
    directly rather than through product expansions. Angles violating the
    extremality side condition give a warning, or an error when
    `strict_extremality` is set.
    """
    phi = _angles(phi)
    variant = Case13Variant.parse(variant)
    check_family(phi, variant)
    if not satisfies_extremality_condition(phi):
        if strict_extremality:
            raise ConstraintViolation("extremality_side_condition", "sum(phi) == pi with fewer than two equalities")
        log.warning("sum(phi) == pi with fewer than two tight inequalities: matrix need not be extreme")

    f1, f2, f3, f4, f5, f6 = phi.phi
    c = np.cos
    a25 = -c(f2 + f3 + f4) if variant is Case13Variant.V13_1 else -c(f1 + f5 + f6)
    upper = np.array([
        [1.0, -c(f1), c(f1 + f2), -c(f1 + f2 + f3), c(f5 + f6), -c(f6)],
        [0.0, 1.0, -c(f2), c(f2 + f3), a25, c(f1 + f6)],
        [0.0, 0.0, 1.0, -c(f3), c(f3 + f4), -c(f3 + f4 + f5)],
        [0.0, 0.0, 0.0, 1.0, -c(f4), c(f4 + f5)],
        [0.0, 0.0, 0.0, 0.0, 1.0, -c(f5)],
        [0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
    ])
    return symmetric(upper)


def scale_dad(a, d) -> np.ndarray:
    d = np.asarray(d, dtype=float)
    if np.any(~(d > 0)):
        raise ConstraintViolation("positive_scaling", f"d = {d.tolist()}")
    return symmetric(d[:, None] * np.asarray(a) * d[None, :])


def zero_matrix(phi) -> np.ndarray:
    """Unnormalized minimal zeros u^1..u^6 of A(phi), as columns."""
    f1, f2, f3, f4, f5, f6 = _angles(phi).phi
    s = np.sin
    return np.array([
        [s(f2), 0, 0, 0, s(f5), s(f1 + f6)],
        [s(f1 + f2), s(f3), 0, 0, 0, s(f6)],
        [s(f1), s(f2 + f3), s(f4), 0, 0, 0],
        [0, s(f2), s(f3 + f4), s(f5), 0, 0],
        [0, 0, s(f3), s(f4 + f5), s(f6), 0],
        [0, 0, 0, s(f4), s(f5 + f6), s(f1)],
    ])


def closed_form_zeros(phi) -> list[Zero]:
    U = zero_matrix(phi)
    return [Zero.from_vector(U[:, k]) for k in range(6)]


def c_coeffs(phi) -> dict[tuple[int, ...], float]:
    """c_S = cos(sum of phi over S) - cos(sum over the complement), for |S| in {2, 3}."""
    phi = _angles(phi)
    total = sum(phi.phi)
    out = {}
    for r in (2, 3):
        for S in itertools.combinations(range(1, 7), r):
            inner = phi.partial(*S)
            out[S] = float(np.cos(inner) - np.cos(total - inner))
    return out


# Nonzero entries of A U: (row, col) -> (c-coefficient key, 1-based index of the sine factor).
_AU_PATTERN = {
    Case13Variant.V13_1: {
        (1, 3): ((5, 6), 3), (1, 4): ((4, 5, 6), 5),
        (2, 4): ((1, 6), 4), (2, 5): ((1, 5, 6), 6),
        (3, 5): ((1, 2), 5), (3, 6): ((1, 2, 6), 1),
        (4, 5): ((4, 5, 6), 5), (4, 6): ((4, 5), 1),
        (5, 1): ((5, 6), 2), (5, 6): ((1, 5, 6), 6),
        (6, 1): ((1, 2, 6), 1), (6, 2): ((1, 6), 3),
    },
    Case13Variant.V13_2: {
        (1, 3): ((5, 6), 3), (1, 4): ((4, 5, 6), 5),
        (2, 3): ((2, 3, 4), 3), (2, 4): ((2, 3), 5),
        (3, 5): ((1, 2), 5), (3, 6): ((1, 2, 6), 1),
        (4, 5): ((4, 5, 6), 5), (4, 6): ((4, 5), 1),
        (5, 1): ((3, 4), 1), (5, 2): ((2, 3, 4), 3),
        (6, 1): ((1, 2, 6), 1), (6, 2): ((1, 6), 3),
    },
}


def expected_AU(phi, variant) -> np.ndarray:
    """Closed form of A(phi) @ zero_matrix(phi) in terms of the c coefficients."""
    phi = _angles(phi)
    c = c_coeffs(phi)
    out = np.zeros((6, 6))
    for (r, col), (key, k) in _AU_PATTERN[Case13Variant.parse(variant)].items():
        out[r - 1, col - 1] = c[key] * np.sin(phi.phi[k - 1])
    return out


def _extra_sets(flags: RegimeFlags) -> list[set]:
    s2, s1, s3 = flags.as_tuple()  # 234 vs 156, 345 vs 126, 123 vs 456
    ge2 = s2 is not Cmp.LT
    gt2 = s2 is Cmp.GT
    j1 = {4} if s1 is Cmp.GT else {4, 6}
    j2 = {1, 5} if ge2 else {1}
    j3 = {2, 6} if ge2 else {6}
    j4 = {3} if s3 is Cmp.GT else {1, 3}
    if s3 is Cmp.EQ:
        j5 = {4} if gt2 else {2, 4}
    else:
        j5 = set() if gt2 else {2}
    if s1 is Cmp.EQ:
        j6 = {3} if gt2 else {3, 5}
    else:
        j6 = set() if gt2 else {5}
    return [j1, j2, j3, j4, j5, j6]


def expected_extended_supports(phi, variant) -> list[ExtendedSupport]:
    """Extended supports of u^1..u^6 from the piecewise rules on the regime flags."""
    flags = check_family(phi, variant)
    return [ExtendedSupport.from_difference(I, extra) for I, extra in zip(ZERO_SUPPORTS, _extra_sets(flags))]


def _regime_margin(phi: np.ndarray, variant: Case13Variant) -> np.ndarray:
    """Smallest slack across all strict inequalities of the main regime, row-wise."""
    s = lambda *idx: phi[:, [i - 1 for i in idx]].sum(axis=1)
    total = phi.sum(axis=1)
    d234 = s(2, 3, 4) - s(1, 5, 6)
    if variant is Case13Variant.V13_2:
        d234 = -d234
    adjacent = np.pi - (phi + np.roll(phi, -1, axis=1))
    slacks = np.column_stack([
        phi, adjacent, 2 * np.pi - total, np.abs(total - np.pi),
        d234, s(3, 4, 5) - s(1, 2, 6), s(1, 2, 3) - s(4, 5, 6),
    ])
    return slacks.min(axis=1)


def sample_main_regime(rng: np.random.Generator, variant=Case13Variant.V13_1, n: int = 1,
                       margin: float = 1e-2) -> list[AngleVector]:
    """Rejection-sample `n` angle vectors in the main regime of `variant`.

    Every strict inequality (including sum(phi) != pi) holds with slack at
    least `margin` radians.
    """
    variant = Case13Variant.parse(variant)
    out: list[AngleVector] = []
    while len(out) < n:
        cand = rng.uniform(0.0, np.pi, size=(4096, 6))
        keep = cand[_regime_margin(cand, variant) > margin]
        out.extend(AngleVector(tuple(row)) for row in keep[: n - len(out)])
    return out
