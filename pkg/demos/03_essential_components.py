"""
Which main components are essential?
====================================

A component can only be in the closure of a component of larger dimension,
and only if some relabeling lets every extended support of the larger one
dominate an extended support of the smaller one. Components that no other
component dominates are essential.
"""

from copositive6 import components

table = components.table3()
for name, row in table.items():
    print(f"{name:>5}: {', '.join(row) or '-'}")

print("essential:", components.essential_set())

# comparison with the published list of candidates
print("rows differing from the published list (extra, missing):", components.table3_diff(table))

# the extra candidate in row 14, with the relabeling that makes it work
sup, sub = components.component("19"), components.component("14")
p = components.closure_candidate(sup, sub)
print("relabeling of 19 dominating 14:", p.image)
for e in sup.relabel(p).esupps:
    match = next(f for f in sub.esupps if set(f.I) <= set(e.I) and set(e.J) <= set(f.J))
    print(f"  {str(e):22s} dominates {match}")

# what changes when the dimension inequality is dropped
print("without dimension filter:", components.essential_set(require_dim=False))
