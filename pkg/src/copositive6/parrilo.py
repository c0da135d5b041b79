"""Level-1 Parrilo cone K^(1)_6 membership for case-13.1 main-component matrices.

A is in K^(1)_n when there are symmetric Lambda^1..Lambda^n with

    M^i = A - Lambda^i  PSD,   Lambda^i_ii = 0,   Lambda^i_jj + 2 Lambda^j_ij = 0,
    m_ijk = Lambda^i_jk + Lambda^j_ik + Lambda^k_ij >= 0   (i, j, k distinct).

Every zero x of such an A lies in the kernel of M^i for i in Supp x. For
case 13.1 this leaves M^i = R^i D^i R^i^T with an explicit 6x2 frame R^i
and a 2x2 block D^i whose off-diagonal entries and second diagonal entry
solve a homogeneous 12x12 system. Its determinant equals
4 * prod(sin phi_i) * sin^2(sum(phi) / 2), nonzero on the whole open main
regime, so D^i = I and the certificate is unique. Membership then reduces
to the signs of the m_ijk.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

import numpy as np

from .core_types import AngleVector, symmetric
from .errors import ConstraintViolation
from .generator import Case13Variant, build_case13, classify_regime, is_main_regime, MAIN_REGIME

# |det| of the 12x12 system, divided by the product of its row norms, at or
# below which the certificate is reported as degenerate.
DET_TOL = 1e-8
# m_ijk and eigenvalues of M^i down to this value still count as nonnegative.
MEMBER_TOL = 1e-9

COUNTEREXAMPLE_PI_MULTIPLES = (0.20, 0.29, 0.30, 0.23, 0.06, 0.02)

TRIPLES = tuple(itertools.combinations(range(1, 7), 3))

# Kernel of M^i (1-based zero indices), forced by the zero pattern of 13.1.
KERNEL_ZEROS = {1: (1, 2, 5, 6), 2: (1, 2, 3, 6), 3: (1, 2, 3, 4), 4: (1, 2, 3, 4), 5: (2, 3, 4, 5), 6: (3, 4, 5, 6)}


class K1Outcome(enum.Enum):
    MEMBER = "Member"
    NON_MEMBER = "NonMember"
    DEGENERATE = "Degenerate"
    UNSUPPORTED = "Unsupported"


@dataclass
class K1Certificate:
    M: tuple[np.ndarray, ...]
    Lambda: tuple[np.ndarray, ...]
    m: dict[tuple[int, int, int], float]
    det: float
    outcome: K1Outcome
    violating: list[tuple[int, int, int]] = field(default_factory=list)
    psd_margin: float = 0.0

    @property
    def margin(self) -> float:
        """Smallest m_ijk; negative means the K^(1) conditions fail."""
        return min(self.m.values())

    def to_json(self) -> dict:
        return {
            "verdict": self.outcome.value,
            "violating_triples": [list(t) for t in self.violating],
            "m_margin": self.margin,
            "psd_margin": self.psd_margin,
            "det_normalized": self.det,
            "m": {"".join(map(str, t)): v for t, v in self.m.items()},
            "M": [Mi.tolist() for Mi in self.M],
            "Lambda": [Li.tolist() for Li in self.Lambda],
        }


def _main_regime_13_1(phi) -> AngleVector:
    phi = phi if isinstance(phi, AngleVector) else AngleVector(tuple(phi))
    if not is_main_regime(phi, Case13Variant.V13_1):
        flags = classify_regime(phi)
        raise ConstraintViolation(
            "case_13_1_main_regime",
            f"regime {tuple(f.value for f in flags.as_tuple())}, need "
            f"{tuple(f.value for f in MAIN_REGIME[Case13Variant.V13_1].as_tuple())}",
        )
    return phi


def build_R(phi) -> list[np.ndarray]:
    """The six 6x2 frames whose column spaces contain the ranges of M^1..M^6."""
    f1, f2, f3, f4, f5, f6 = _main_regime_13_1(phi).phi
    c, s = np.cos, np.sin
    R1 = [[1, 0], [-c(f1), s(f1)], [c(f1 + f2), -s(f1 + f2)], [-c(f1 + f2 + f3), s(f1 + f2 + f3)],
          [c(f5 + f6), s(f5 + f6)], [-c(f6), -s(f6)]]
    R2 = [[-c(f1), -s(f1)], [1, 0], [-c(f2), s(f2)], [c(f2 + f3), -s(f2 + f3)],
          [-c(f2 + f3 + f4), s(f2 + f3 + f4)], [c(f1 + f6), s(f1 + f6)]]
    R3 = [[c(f1 + f2), s(f1 + f2)], [-c(f2), -s(f2)], [1, 0], [-c(f3), s(f3)],
          [c(f3 + f4), -s(f3 + f4)], [-c(f3 + f4 + f5), s(f3 + f4 + f5)]]
    R4 = [[-c(f1 + f2 + f3), -s(f1 + f2 + f3)], [c(f2 + f3), s(f2 + f3)], [-c(f3), -s(f3)], [1, 0],
          [-c(f4), s(f4)], [c(f4 + f5), -s(f4 + f5)]]
    R5 = [[c(f5 + f6), -s(f5 + f6)], [-c(f2 + f3 + f4), -s(f2 + f3 + f4)], [c(f3 + f4), s(f3 + f4)],
          [-c(f4), -s(f4)], [1, 0], [-c(f5), s(f5)]]
    R6 = [[-c(f6), s(f6)], [c(f1 + f6), -s(f1 + f6)], [-c(f3 + f4 + f5), -s(f3 + f4 + f5)],
          [c(f4 + f5), s(f4 + f5)], [-c(f5), -s(f5)], [1, 0]]
    return [np.array(R, dtype=float) for R in (R1, R2, R3, R4, R5, R6)]


def build_system(phi) -> np.ndarray:
    """Coefficient matrix on (2 D^1_12, ..., 2 D^6_12, D^1_22 - 1, ..., D^6_22 - 1).

    Rows 1-6 come from matching A_ij through M^i, rows 7-12 through M^j,
    for the cyclic neighbours j = i + 1 (and j = 1 for i = 6).
    """
    phi = _main_regime_13_1(phi)
    S = np.zeros((12, 12))
    for i, f in enumerate(phi.phi):
        j = (i + 1) % 6
        S[i, i] = 1.0
        S[i, j] = np.cos(f)
        S[i, 6 + j] = np.sin(f)
        S[6 + i, i] = -np.cos(f)
        S[6 + i, j] = -1.0
        S[6 + i, 6 + i] = np.sin(f)
    return S


def system_determinant(phi, normalized: bool = True) -> float:
    S = build_system(phi)
    det = float(np.linalg.det(S))
    return det / float(np.prod(np.linalg.norm(S, axis=1))) if normalized else det


def _lambda_constraints_residual(Lam) -> float:
    worst = max(abs(L[i, i]) for i, L in enumerate(Lam))
    for i, j in itertools.permutations(range(6), 2):
        worst = max(worst, abs(Lam[i][j, j] + 2 * Lam[j][i, j]))
    return float(worst)


def m_tensor(Lam) -> dict[tuple[int, int, int], float]:
    """m_ijk for all 20 triples i < j < k (1-based)."""
    out = {}
    for t in TRIPLES:
        i, j, k = (x - 1 for x in t)
        out[t] = float(Lam[i][j, k] + Lam[j][i, k] + Lam[k][i, j])
    return out


def solve_certificate(a, phi, det_tol: float = DET_TOL, tol: float = MEMBER_TOL) -> K1Certificate:
    """The unique K^(1) certificate candidate for A(phi) in the 13.1 main regime."""
    phi = _main_regime_13_1(phi)
    a = np.asarray(a, dtype=float)
    expected = build_case13(phi, Case13Variant.V13_1)
    if a.shape != (6, 6) or np.abs(a - expected).max() > 1e-12:
        raise ConstraintViolation("matrix_matches_angles", "a differs from the 13.1 matrix built from phi")

    R = build_R(phi)
    det = system_determinant(phi)
    degenerate = abs(det) <= det_tol
    # Nondegenerate: the homogeneous system only has the trivial solution, D^i = I.
    M = tuple(symmetric(Ri @ Ri.T) for Ri in R)
    Lam = tuple(symmetric(a - Mi) for Mi in M)
    m = m_tensor(Lam)

    psd_margin = min(float(np.linalg.eigvalsh(Mi)[0]) for Mi in M)
    violating = [t for t, v in m.items() if v < -tol]
    if degenerate:
        outcome = K1Outcome.DEGENERATE
    elif violating or psd_margin < -tol:
        outcome = K1Outcome.NON_MEMBER
    else:
        outcome = K1Outcome.MEMBER
    return K1Certificate(M, Lam, m, det, outcome, violating, psd_margin)


def m_closed_form(phi) -> dict[tuple[int, int, int], float]:
    """The eight generically nonzero m_ijk as explicit cosine sums."""
    f1, f2, f3, f4, f5, f6 = _main_regime_13_1(phi).phi
    c = np.cos
    return {
        (1, 2, 5): c(f1 + f5 + f6) - c(f2 + f3 + f4) + c(f5 + f6) - c(f1 + f2 + f3 + f4)
                   - c(f1) + c(f2 + f3 + f4 + f5 + f6),
        (1, 3, 5): (c(f1 + f2) - c(f3 + f4 + f5 + f6)) + (c(f5 + f6) - c(f1 + f2 + f3 + f4))
                   + (c(f3 + f4) - c(f1 + f2 + f5 + f6)),
        (1, 3, 6): c(f1 + f2 + f6) - c(f3 + f4 + f5) + c(f1 + f2) - c(f3 + f4 + f5 + f6)
                   - c(f6) + c(f1 + f2 + f3 + f4 + f5),
        (1, 4, 5): c(f4 + f5 + f6) - c(f1 + f2 + f3) + c(f5 + f6) - c(f1 + f2 + f3 + f4)
                   - c(f4) + c(f1 + f2 + f3 + f5 + f6),
        (1, 4, 6): c(f4 + f5 + f6) - c(f1 + f2 + f3) + c(f4 + f5) - c(f1 + f2 + f3 + f6)
                   - c(f6) + c(f1 + f2 + f3 + f4 + f5),
        (2, 3, 6): c(f1 + f2 + f6) - c(f3 + f4 + f5) + c(f1 + f6) - c(f2 + f3 + f4 + f5)
                   - c(f2) + c(f1 + f3 + f4 + f5 + f6),
        (2, 4, 6): (c(f2 + f3) - c(f1 + f4 + f5 + f6)) + (c(f1 + f6) - c(f2 + f3 + f4 + f5))
                   + (c(f4 + f5) - c(f1 + f2 + f3 + f6)),
        (2, 5, 6): c(f1 + f5 + f6) - c(f2 + f3 + f4) + c(f1 + f6) - c(f2 + f3 + f4 + f5)
                   - c(f5) + c(f1 + f2 + f3 + f4 + f6),
    }


def membership_case13_1(phi) -> K1Certificate:
    phi = _main_regime_13_1(phi)
    return solve_certificate(build_case13(phi, Case13Variant.V13_1), phi)


def counterexample_phi() -> AngleVector:
    return AngleVector.from_pi_multiples(COUNTEREXAMPLE_PI_MULTIPLES)


def counterexample_matrix() -> np.ndarray:
    """Unit-diagonal extreme copositive 6x6 matrix outside K^(1)_6."""
    return build_case13(counterexample_phi(), Case13Variant.V13_1)


# Counterexample entries as printed: (sign, multiple of pi) meaning sign * cos(multiple * pi).
_PRINTED_COUNTEREXAMPLE = [
    [None, (-1, 0.20), (1, 0.49), (-1, 0.79), (1, 0.08), (-1, 0.02)],
    [(-1, 0.20), None, (-1, 0.29), (1, 0.59), (-1, 0.82), (1, 0.22)],
    [(1, 0.49), (-1, 0.29), None, (-1, 0.30), (1, 0.53), (-1, 0.59)],
    [(-1, 0.79), (1, 0.59), (-1, 0.30), None, (-1, 0.23), (1, 0.29)],
    [(1, 0.08), (-1, 0.82), (1, 0.53), (-1, 0.23), None, (-1, 0.06)],
    [(-1, 0.02), (1, 0.22), (-1, 0.59), (1, 0.29), (-1, 0.06), None],
]


def printed_counterexample() -> np.ndarray:
    """The counterexample evaluated entry by entry from its printed form."""
    return np.array([[1.0 if e is None else e[0] * np.cos(e[1] * np.pi) for e in row]
                     for row in _PRINTED_COUNTEREXAMPLE])
