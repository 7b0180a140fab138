"""Finite rings, their idempotents and units, and the clean graph built from them."""

from cleangraph import cl1, cl2, clean_graph, idempotent_graph, parse_ring_spec, build_ring, tables

# A ring is described in a small text syntax and built by exhaustive tables.
ring = build_ring(parse_ring_spec("Z12"))
tab = tables(ring)
print(ring, "has", ring.order, "elements")
print("idempotents:", [ring.label(e) for e in tab.ids.idempotents])
print("units:      ", [ring.label(u) for u in tab.units.units])
print("involutions:", [ring.label(u) for u in tab.units.involutions])

# O_e counts the nonzero idempotents orthogonal to e on both sides
for e in tab.ids.nonzero:
    print(f"  O_{ring.label(e)} = {tab.ids.ortho_count[e]}")

# The clean graph has a vertex (e, u) for every idempotent e and unit u.
g = clean_graph(tab)
print(g.order, "vertices,", g.size, "edges")

# Cl1 (e = 0) is always complete; Cl2 (e != 0) carries the information.
one, two = cl1(tab), cl2(tab)
print("Cl1 complete:", one.size == one.order * (one.order - 1) // 2)
print("Cl2 vertices:", [str(v) for v in two.vertices])

# Non-commutative rings work the same way; orthogonality is checked both ways.
m2 = build_ring(parse_ring_spec("M2(Z2)"))
print(m2, "Cl2:", cl2(m2).order, "vertices; I(R):", idempotent_graph(m2).order, "idempotents")

# Quotients of polynomial rings too.
dual = build_ring(parse_ring_spec("Z2[x]/(x^2)"))
print(dual, "elements:", [dual.label(i) for i in range(dual.order)])
