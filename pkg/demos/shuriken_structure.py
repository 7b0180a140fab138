"""Cl2(R) is a shuriken graph over the idempotent graph I(R).

Take I(R), add an apex, make one copy per unit. Copies for involutions are
cliques; every other unit's copy is joined to its inverse's copy.
"""

from cleangraph import (
    build_ring,
    cl2,
    cl2_via_shuriken,
    complete_graph,
    copies,
    idempotent_graph,
    is_isomorphic,
    parse_ring_spec,
    shuriken,
    tables,
    verify_bijection,
)

for text in ["Z7", "Z12", "Z3 x Z4", "M2(Z2)"]:
    tab = tables(build_ring(parse_ring_spec(text)))
    shu, mapping = cl2_via_shuriken(tab)
    t, k = len(tab.units.involutions), len(tab.units)
    ok = verify_bijection(shu, cl2(tab), mapping).ok
    print(f"{text:8} t={t:<3} k={k:<3} |V|={shu.order:<4} copy/apex map is an isomorphism: {ok}")

# For 2x2 matrices the idempotent graph is a perfect matching on rank-one projections
for p in (2, 3):
    tab = tables(build_ring(parse_ring_spec(f"M2(Z{p})")))
    half = p * (p + 1) // 2
    print(f"I(M2(Z{p})) ~ {half}K2:",
          is_isomorphic(idempotent_graph(tab), copies(half, complete_graph(2))).verdict)

t, n = 14, 48
g = shuriken(t, n, copies(6, complete_graph(2)))
print(f"Shu^{t}_{n}(6K2) has {g.order} vertices and {g.size} edges")
print("matches Cl2(M2(Z3)):", is_isomorphic(g, cl2(build_ring(parse_ring_spec("M2(Z3)")))).verdict)
