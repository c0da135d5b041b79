import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from copositive6.core_types import ExtendedSupport, Permutation, Zero, apply_permutation
from copositive6.errors import InvariantViolation, NotCopositiveEvidence
from copositive6.generator import (
    ZERO_SUPPORTS, Case13Variant, build_case13, closed_form_zeros, expected_extended_supports,
    sample_main_regime, scale_dad,
)
from copositive6.zeros import (
    ZeroTolerances, check_ZE_membership, esupp_set, extended_support, find_minimal_zeros,
)

V1 = Case13Variant.V13_1


def horn():
    h = np.ones((5, 5))
    for i in range(5):
        h[i, (i + 1) % 5] = h[(i + 1) % 5, i] = -1.0
    return h


def horn6():
    a = np.zeros((6, 6))
    a[:5, :5] = horn()
    a[5, 5] = 1.0
    return a


def grid_minimal_zero_faces(a, n=12, tol=1e-12):
    """Inclusion-minimal faces with a grid point of value <= tol in their relative interior."""
    k = a.shape[0]
    faces = set()
    for r in range(1, k + 1):
        for face in itertools.combinations(range(k), r):
            if any(set(f) <= set(face) for f in faces):
                continue
            for cuts in itertools.combinations(range(1, n), r - 1):
                parts = np.diff((0, *cuts, n)) / n
                x = np.zeros(k)
                x[list(face)] = parts
                if x @ a @ x <= tol:
                    faces.add(face)
                    break
    return sorted(tuple(i + 1 for i in f) for f in faces)


def test_identity_has_no_zeros():
    assert find_minimal_zeros(np.eye(6)) == []


def test_horn_zeros_match_grid_oracle():
    a = horn6()
    got = [z.support for z in find_minimal_zeros(a)]
    assert got == grid_minimal_zero_faces(a)
    assert got == [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]


def test_horn_extended_supports():
    e = {z.support: extended_support(horn6(), z) for z in find_minimal_zeros(horn6())}
    # (H u)_k vanishes on both cyclic neighbours of the edge and on the decoupled index 6
    assert e[(1, 2)] == ExtendedSupport((1, 2), (1, 2, 3, 5, 6))


def test_counterexample_zeros_match_closed_form(cx_phi):
    a = build_case13(cx_phi, V1)
    found = find_minimal_zeros(a)
    assert [z.support for z in found] == sorted(ZERO_SUPPORTS)
    expected = {z.support: z.vector for z in closed_form_zeros(cx_phi)}
    for z in found:
        assert np.abs(z.vector - expected[z.support]).max() < 1e-10
    assert sorted(esupp_set(a)) == sorted(expected_extended_supports(cx_phi, V1))


def test_not_copositive_evidence():
    a = np.eye(6)
    a[0, 1] = a[1, 0] = -2.0
    with pytest.raises(NotCopositiveEvidence) as info:
        find_minimal_zeros(a)
    w = info.value.vector
    assert w.min() >= 0 and w @ a @ w < 0


def test_perturbed_horn_is_caught():
    a = horn6()
    a[0, 1] = a[1, 0] = -1.01
    with pytest.raises(NotCopositiveEvidence):
        find_minimal_zeros(a)


def test_tolerance_disagreement_is_reported(cx_phi):
    a = build_case13(cx_phi, V1)
    z = find_minimal_zeros(a)[0]
    with pytest.raises(InvariantViolation):
        extended_support(a, z, ZeroTolerances(slack=-1.0))


def test_ZE_membership(cx_phi):
    a = build_case13(cx_phi, V1)
    E = esupp_set(a)
    assert check_ZE_membership(a, E)
    # enlarging a complementary set breaks rank deficiency
    bigger = [ExtendedSupport(E[0].I, tuple(range(1, 7)))] + E[1:]
    assert not check_ZE_membership(a, bigger)
    assert not check_ZE_membership(np.eye(6) + 0.1, E)


def test_relabeling_commutes_with_zero_search(cx_phi):
    a = build_case13(cx_phi, V1)
    E = esupp_set(a)
    for p in [Permutation((2, 3, 4, 5, 6, 1)), Permutation((6, 5, 4, 3, 2, 1)), Permutation((3, 1, 2, 6, 4, 5))]:
        P = p.matrix()
        assert esupp_set(P @ a @ P.T) == sorted(apply_permutation(p, e) for e in E)


def test_minimal_supports_form_antichain(main_samples):
    for v, phis in main_samples.items():
        for phi in phis[:50]:
            sup = [set(z.support) for z in find_minimal_zeros(build_case13(phi, v))]
            assert not any(s < t for s in sup for t in sup)


def test_zero_invariants(main_samples):
    for v, phis in main_samples.items():
        for phi in phis[:50]:
            a = build_case13(phi, v)
            for z in find_minimal_zeros(a):
                assert isinstance(z, Zero)
                assert z.vector.min() >= 0 and z.vector.sum() == pytest.approx(1.0)
                assert abs(z.vector @ a @ z.vector) <= 1e-10
                assert (a @ z.vector).min() >= -1e-8
                I = [i - 1 for i in z.support]
                assert np.linalg.eigvalsh(a[np.ix_(I, I)])[0] >= -1e-9


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.lists(st.floats(0.25, 4.0), min_size=6, max_size=6))
def test_dad_scaling_invariance(seed, d):
    phi = sample_main_regime(np.random.default_rng(seed), V1, 1)[0]
    a = build_case13(phi, V1)
    assert esupp_set(scale_dad(a, d)) == esupp_set(a)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_psd_plus_positive_has_no_zeros(seed):
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(6, 6))
    n = rng.uniform(0.1, 1.0, size=(6, 6))
    a = g @ g.T + (n + n.T) / 2
    assert find_minimal_zeros(a) == []
