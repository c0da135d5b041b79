"""Main components of exceptional extreme matrices in COP_6 and their closure combinatorics.

Each component is identified by its extended minimal zero support set E,
stored up to a relabeling of {1..6}. A component E' can only lie in the
closure of E if dim E > dim E' and, for some relabeling pi of E, every pair
(I, J) of pi(E) dominates a pair (I', J') of E' in the sense
I' ⊆ I and J ⊆ J'. Components passing this test are closure candidates;
components that are nobody's closure candidate are essential.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core_types import ExtendedSupport, Permutation, apply_permutation


@dataclass(frozen=True)
class ComponentSpec:
    name: str
    esupps: tuple[ExtendedSupport, ...]
    dim: int

    def relabel(self, p: Permutation) -> ComponentSpec:
        return ComponentSpec(self.name, tuple(apply_permutation(p, e) for e in self.esupps), self.dim)

    def to_json(self) -> dict:
        return {"name": self.name, "dim": self.dim, "esupps": [e.to_json() for e in self.esupps]}


# name: (supports I_alpha, differences J_alpha \ I_alpha, dimension)
_TABLE1 = [
    ("O5", [{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}, {6}],
     [(), (), (), (), (), {1, 2, 3, 4, 5}], 10),
    ("1", [{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 5, 6}],
     [{3, 4, 5}, {2, 4, 6}, {2, 3}, {1, 6}, {1, 5}, ()], 8),
    ("2", [{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5, 6}, {4, 5, 6}],
     [{3, 4, 5}, {2, 4, 6}, {2, 3}, {1, 6}, (), ()], 9),
    ("3", [{1, 2}, {1, 3}, {1, 4}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}],
     [{3, 4, 5}, {2, 4}, {2, 3, 6}, (), (), ()], 10),
    ("4", [{1, 2}, {1, 3}, {2, 4}, {3, 4, 5}, {1, 5, 6}, {4, 5, 6}],
     [{3, 4, 6}, {2, 6}, {1, 5}, (), (), ()], 10),
    ("5", [{1, 2}, {1, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 6}, {4, 5, 6}],
     [{3, 5}, {2, 5, 6}, (), (), (), ()], 11),
    ("6", [{1, 2}, {1, 3}, {2, 4, 5}, {3, 4, 5}, {2, 4, 6}, {3, 5, 6}],
     [{3, 4}, {2, 5, 6}, (), (), (), {1}], 11),
    ("7", [{1, 5}, {2, 6}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}],
     [{2, 4}, {1, 3}, {6}, (), (), ()], 11),
    ("8", [{1, 2}, {1, 3, 4}, {1, 3, 5}, {2, 4, 6}, {3, 4, 6}, {2, 5, 6}],
     [{3, 6}, {5}, {4}, (), (), ()], 12),
    ("9.1", [{1, 2}, {1, 3, 4}, {1, 3, 5}, {2, 4, 6}, {3, 4, 6}, {4, 5, 6}],
     [{3, 6}, (), (), {5}, (), {2}], 12),
    ("9.2", [{1, 2}, {1, 3, 4}, {1, 3, 5}, {2, 4, 6}, {3, 4, 6}, {4, 5, 6}],
     [{3, 5, 6}, (), {2}, (), (), ()], 12),
    ("10", [{1, 2}, {1, 3, 4}, {1, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}],
     [{3, 6}, (), (), {5}, (), {2}], 12),
    ("11", [{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 6}, {2, 4, 6}, {3, 4, 6}],
     [{5}, {5}, {3, 4}, (), (), {5}], 12),
    ("12", [{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 6}, {2, 4, 6}, {3, 5, 6}],
     [(), {5}, {4}, (), (), {4}], 13),
    ("13.1", [{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {1, 5, 6}, {1, 2, 6}],
     [{4}, {1, 5}, {2, 6}, {3}, (), ()], 12),
    ("13.2", [{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {1, 5, 6}, {1, 2, 6}],
     [{4}, {1}, {6}, {3}, {2}, {5}], 12),
    ("14", [{1, 2}, {1, 3}, {1, 4}, {2, 5}, {4, 5}, {3, 6}, {5, 6}],
     [{3, 4, 5}, {2, 4, 6}, {2, 3, 5}, {1, 4, 6}, {1, 2, 6}, {1, 5}, {2, 3, 4}], 6),
    ("15", [{1, 2}, {1, 3, 4}, {1, 3, 5}, {1, 4, 6}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}],
     [{3, 4}, {2}, (), (), (), (), ()], 12),
    ("16", [{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 6}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}],
     [(), (), (), (), (), {5}, {4}], 13),
    ("17", [{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 6}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}],
     [(), (), (), (), (), {4}, {3}], 13),
    ("18", [{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}, {3, 4, 6}, {1, 4, 6}, {1, 2, 6}],
     [(), (), {6}, {6}, {6}, {5}, {5}, {5}], 12),
    ("19", [{3, 4, 5}, {1, 4, 5}, {1, 2, 5}, {1, 2, 3}, {1, 5, 6}, {2, 3, 4, 6}],
     [(), {6}, (), (), {4}, ()], 14),
]

# Published list of closure candidates per component, as printed alongside the catalog.
PUBLISHED_TABLE3 = {
    "O5": ["8", "16", "17"],
    "1": ["2", "3", "4", "5", "6", "7", "8", "9.1", "9.2", "10", "15", "16", "17"],
    "2": ["3", "4", "5", "6", "7", "8", "9.1", "9.2", "10", "15", "16", "17"],
    "3": ["5", "9.2", "15", "16", "17"],
    "4": ["5", "6", "7", "8", "9.1", "9.2", "10", "15", "16", "17"],
    "5": ["9.2", "15", "16", "17"],
    "6": ["8", "9.1", "9.2", "10", "16", "17"],
    "7": ["8", "9.1", "10", "15", "16", "17"],
    "8": ["16"],
    "9.1": ["16"],
    "9.2": ["16", "17"],
    "10": ["17"],
    "11": ["19"],
    "12": ["19"],
    "13.1": [],
    "13.2": [],
    "14": ["1", "2", "3", "4", "5", "6", "7", "8", "9.1", "9.2", "10", "11", "12",
           "13.1", "13.2", "15", "16", "17", "18"],
    "15": ["16", "17"],
    "16": [],
    "17": [],
    "18": ["12", "16", "19"],
    "19": [],
}


@lru_cache(maxsize=1)
def catalog() -> tuple[ComponentSpec, ...]:
    """The 22 main components in table order."""
    return tuple(
        ComponentSpec(name, tuple(ExtendedSupport.from_difference(I, d) for I, d in zip(Is, Ds)), dim)
        for name, Is, Ds, dim in _TABLE1
    )


def component(name: str, cat=None) -> ComponentSpec:
    for c in cat if cat is not None else catalog():
        if c.name == name:
            return c
    raise KeyError(name)


@lru_cache(maxsize=1)
def _all_permutations() -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in itertools.permutations(range(1, 7)))


def _as_masks(esupps):
    mask = lambda s: sum(1 << (k - 1) for k in s)
    return [(mask(e.I), mask(e.J)) for e in esupps]


def satisfies_criterion(sup: ComponentSpec, sub: ComponentSpec, p: Permutation) -> bool:
    """Every pair of p(sup) dominates some pair of sub: I' ⊆ p(I) and p(J) ⊆ J'."""
    return _check(_as_masks(sup.relabel(p).esupps), _as_masks(sub.esupps))


def _check(sup_masks, sub_masks) -> bool:
    for I, J in sup_masks:
        if not any(Ip & ~I == 0 and J & ~Jp == 0 for Ip, Jp in sub_masks):
            return False
    return True


def closure_candidate(sup: ComponentSpec, sub: ComponentSpec, require_dim: bool = True) -> Permutation | None:
    """A relabeling of `sup` under which `sub` passes the closure test, or None.

    The search is exhaustive over the 720 permutations of {1..6}; with
    `require_dim` the strict dimension inequality is enforced first.
    """
    if require_dim and not sup.dim > sub.dim:
        return None
    sub_masks = _as_masks(sub.esupps)
    sup_masks = _as_masks(sup.esupps)
    perms = _all_permutations()
    for k, table in enumerate(_mask_tables()):
        if _check([(table[I], table[J]) for I, J in sup_masks], sub_masks):
            return perms[k]
    return None


@lru_cache(maxsize=1)
def _mask_tables() -> tuple[tuple[int, ...], ...]:
    """For each permutation, the image of every 6-bit subset mask."""
    tables = []
    for p in _all_permutations():
        bit = [1 << (p(k) - 1) for k in range(1, 7)]
        tables.append(tuple(sum(b for k, b in enumerate(bit) if m >> k & 1) for m in range(64)))
    return tuple(tables)


def table3(cat=None, require_dim: bool = True) -> dict[str, list[str]]:
    """For each component, the components whose closure may contain it (catalog order)."""
    cat = tuple(cat) if cat is not None else catalog()
    return {
        sub.name: [sup.name for sup in cat if closure_candidate(sup, sub, require_dim) is not None]
        for sub in cat
    }


def essential_set(cat=None, require_dim: bool = True) -> list[str]:
    return [name for name, row in table3(cat, require_dim).items() if not row]


def table3_diff(computed: dict[str, list[str]], published: dict[str, list[str]] = PUBLISHED_TABLE3) -> dict:
    """Rows where `computed` and `published` disagree: name -> (extra, missing)."""
    out = {}
    for name in published.keys() | computed.keys():
        c, p = set(computed.get(name, [])), set(published.get(name, []))
        if c != p:
            out[name] = (sorted(c - p), sorted(p - c))
    return out
