"""Shared oracles. Nothing here imports package internals beyond the Graph type."""

from __future__ import annotations

import itertools

import networkx as nx
import pytest


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def brute_clean(elements, mul, zero, one, nonzero_only=False) -> nx.Graph:
    """Clean graph straight from the definition, labels ``"(e,u)"``."""
    idem = [e for e in elements if mul(e, e) == e]
    if nonzero_only:
        idem = [e for e in idem if e != zero]
    unit = [u for u in elements if any(mul(u, v) == one and mul(v, u) == one for v in elements)]
    verts = [(e, u) for e in idem for u in unit]
    h = nx.Graph()
    h.add_nodes_from(verts)
    for (e, u), (f, v) in itertools.combinations(verts, 2):
        orth = mul(e, f) == zero and mul(f, e) == zero
        inv = mul(u, v) == one and mul(v, u) == one
        if orth or inv:
            h.add_edge((e, u), (f, v))
    return h


def zn_ops(n):
    return list(range(n)), (lambda a, b: a * b % n), 0, 1 % n


def zmn_ops(m, n):
    els = list(itertools.product(range(m), range(n)))
    return els, (lambda a, b: (a[0] * b[0] % m, a[1] * b[1] % n)), (0, 0), (1 % m, 1 % n)


def m2_ops(p):
    els = list(itertools.product(range(p), repeat=4))

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)
    return els, mul, (0, 0, 0, 0), (1, 0, 0, 1)


def dual_ops(p):
    """``Z_p[x]/(x^2)`` as pairs ``(a, b) = a + b x``."""
    els = list(itertools.product(range(p), repeat=2))
    return els, (lambda x, y: (x[0] * y[0] % p, (x[0] * y[1] + x[1] * y[0]) % p)), (0, 0), (1, 0)


def brute_iso(g1, g2) -> bool:
    return nx.is_isomorphic(to_nx(g1), to_nx(g2))


@pytest.fixture(scope="session")
def catalog():
    from cleangraph.theorems import default_catalog
    return default_catalog()
