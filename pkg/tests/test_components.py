import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from copositive6.components import (
    PUBLISHED_TABLE3, ComponentSpec, catalog, closure_candidate, component, essential_set,
    satisfies_criterion, table3, table3_diff,
)
from copositive6.core_types import ExtendedSupport, Permutation
from copositive6.generator import Case13Variant, build_case13, sample_main_regime
from copositive6.zeros import esupp_set

NAMES = ["O5", "1", "2", "3", "4", "5", "6", "7", "8", "9.1", "9.2", "10", "11", "12",
         "13.1", "13.2", "14", "15", "16", "17", "18", "19"]
perms = st.permutations(range(1, 7)).map(lambda p: Permutation(tuple(p)))


@pytest.fixture(scope="module")
def computed():
    return table3()


def test_catalog_order_and_rows():
    cat = catalog()
    assert [c.name for c in cat] == NAMES
    o5 = component("O5")
    assert o5.dim == 10 and o5.esupps[5] == ExtendedSupport((6,), (1, 2, 3, 4, 5, 6))
    c14 = component("14")
    assert len(c14.esupps) == 7 and c14.dim == 6
    assert c14.esupps[0] == ExtendedSupport((1, 2), (1, 2, 3, 4, 5))
    with pytest.raises(KeyError):
        component("20")


def test_catalog_case13_agrees_with_generated_matrices():
    rng = np.random.default_rng(5)
    for v in Case13Variant:
        phi = sample_main_regime(rng, v, 1)[0]
        assert tuple(esupp_set(build_case13(phi, v))) == tuple(sorted(component(v.value).esupps))


def test_rows_agree_with_published_except_14(computed):
    assert table3_diff(computed) == {"14": (["19"], [])}


def test_component_19_dominates_14_by_hand():
    # relabeling 1->1, 2->2, 3->5, 4->6, 5->3, 6->4 of component 19
    p = Permutation((1, 2, 5, 6, 3, 4))
    sup, sub = component("19"), component("14")
    assert sup.dim > sub.dim
    pairs = [(e.I, e.J) for e in sup.relabel(p).esupps]
    assert pairs == [
        ((3, 5, 6), (3, 5, 6)), ((1, 3, 6), (1, 3, 4, 6)), ((1, 2, 3), (1, 2, 3)),
        ((1, 2, 5), (1, 2, 5)), ((1, 3, 4), (1, 3, 4, 6)), ((2, 4, 5, 6), (2, 4, 5, 6)),
    ]
    sub_pairs = {(e.I, e.J) for e in sub.esupps}
    # each relabeled pair has a sub pair with I' ⊆ I and J ⊆ J'
    dominated = {((3, 5, 6), (3, 5, 6)): ((5, 6), (2, 3, 4, 5, 6)),
                 ((1, 3, 6), (1, 3, 4, 6)): ((1, 3), (1, 2, 3, 4, 6)),
                 ((1, 2, 3), (1, 2, 3)): ((1, 2), (1, 2, 3, 4, 5)),
                 ((1, 2, 5), (1, 2, 5)): ((1, 2), (1, 2, 3, 4, 5)),
                 ((1, 3, 4), (1, 3, 4, 6)): ((1, 3), (1, 2, 3, 4, 6)),
                 ((2, 4, 5, 6), (2, 4, 5, 6)): ((4, 5), (1, 2, 4, 5, 6))}
    for (I, J), (Ip, Jp) in dominated.items():
        assert (Ip, Jp) in sub_pairs
        assert set(Ip) <= set(I) and set(J) <= set(Jp)
    assert satisfies_criterion(sup, sub, p)


def test_row_shapes(computed):
    assert list(computed) == NAMES
    for name in ("13.1", "13.2", "16", "17", "19"):
        assert computed[name] == []
    assert computed["O5"] == ["8", "16", "17"]
    assert computed["18"] == ["12", "16", "19"]


def test_essential_set():
    assert essential_set() == ["13.1", "13.2", "16", "17", "19"]


def test_essential_set_without_16():
    cat = [c for c in catalog() if c.name != "16"]
    assert essential_set(cat) == ["8", "9.1", "13.1", "13.2", "17", "19"]


def test_essential_set_without_dimension_filter():
    # every component then dominates itself under the identity
    assert essential_set(require_dim=False) == []


def test_candidates_have_larger_dimension(computed):
    for sub, row in computed.items():
        for sup in row:
            assert component(sup).dim > component(sub).dim


def test_candidate_witness_passes_criterion(computed):
    for sub, row in computed.items():
        for sup in row:
            p = closure_candidate(component(sup), component(sub))
            assert satisfies_criterion(component(sup), component(sub), p)


def test_closure_candidate_none():
    assert closure_candidate(component("16"), component("13.1")) is None
    assert closure_candidate(component("14"), component("19")) is None


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(sup, sub) for sub, row in PUBLISHED_TABLE3.items() for sup in row]), perms, perms)
def test_relabeling_consistency(pair, sigma, rho):
    """If pi works for (sup, sub), rho∘pi∘sigma⁻¹ works for (sigma(sup), rho(sub))."""
    sup, sub = component(pair[0]), component(pair[1])
    pi = closure_candidate(sup, sub)
    assert pi is not None
    sup2, sub2 = sup.relabel(sigma), sub.relabel(rho)
    assert satisfies_criterion(sup2, sub2, rho.compose(pi).compose(sigma.inverse()))
    assert closure_candidate(sup2, sub2) is not None


def test_component_json():
    obj = component("13.2").to_json()
    assert obj["name"] == "13.2" and obj["dim"] == 12 and len(obj["esupps"]) == 6
