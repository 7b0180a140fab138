"""Clean graphs ``Cl(R)``, ``Cl_1(R)``, ``Cl_2(R)`` and the idempotent graph ``I(R)``."""

from __future__ import annotations

from typing import NamedTuple

from .analysis import IdempotentTable, UnitTable, idempotents, units
from .config import vertex_cap
from .errors import BudgetError, DomainError
from .graphs import APEX, Graph, shuriken
from .rings import FiniteRing, RingElement


class CleanVertex(NamedTuple):
    """Vertex ``(e, u)`` of a clean graph: an idempotent and a unit."""

    e: RingElement
    u: RingElement

    def __str__(self) -> str:
        return f"({self.e},{self.u})"


class RingTables(NamedTuple):
    ring: FiniteRing
    ids: IdempotentTable
    units: UnitTable


def tables(ring: FiniteRing) -> RingTables:
    return RingTables(ring, idempotents(ring), units(ring))


def _tables(ring_or_tables) -> RingTables:
    if isinstance(ring_or_tables, RingTables):
        return ring_or_tables
    return tables(ring_or_tables)


def _build(tab: RingTables, idems) -> Graph:
    ring, ut = tab.ring, tab.units
    nv = len(idems) * len(ut)
    cap = vertex_cap()
    if nv > cap:
        raise BudgetError(f"clean graph would have {nv} vertices, cap is {cap}")
    zero, one = ring.zero, ring.one
    # both products checked explicitly, no commutativity shortcut
    orth = {e: {f for f in idems if ring.mul(e, f) == zero and ring.mul(f, e) == zero}
            for e in idems}
    mutual = {u: {v for v in ut.units if ring.mul(u, v) == one and ring.mul(v, u) == one}
              for u in ut.units}
    k = len(ut)
    pos_e = {e: i for i, e in enumerate(idems)}
    pos_u = ut.position
    labels = [CleanVertex(ring.element(e), ring.element(u)) for e in idems for u in ut.units]
    adj = []
    for e in idems:
        for u in ut.units:
            me = pos_e[e] * k + pos_u[u]
            nbrs = {pos_e[f] * k + j for f in orth[e] for j in range(k)}
            nbrs.update(pos_e[f] * k + pos_u[v] for f in idems for v in mutual[u])
            nbrs.discard(me)
            adj.append(nbrs)
    return Graph(labels, adj)


def clean_graph(ring) -> Graph:
    """``Cl(R)``: vertices ``(e, u)``, idempotent-major then unit-table order.

    Distinct vertices ``(e, u)``, ``(f, v)`` are adjacent iff ``ef = fe = 0``
    or ``uv = vu = 1``.
    """
    tab = _tables(ring)
    return _build(tab, tab.ids.idempotents)


def cl1(ring) -> Graph:
    """Induced subgraph of ``Cl(R)`` on the vertices ``(0, u)``; always complete."""
    tab = _tables(ring)
    g = clean_graph(tab)
    zero = tab.ring.zero
    return g.induced([i for i, v in enumerate(g.vertices) if v.e.index == zero])


def cl2(ring) -> Graph:
    """Induced subgraph of ``Cl(R)`` on the vertices with a nonzero idempotent."""
    tab = _tables(ring)
    return _build(tab, tab.ids.nonzero)


def idempotent_graph(ring) -> Graph:
    """``I(R)``: nontrivial idempotents, adjacent when two-sided orthogonal."""
    tab = _tables(ring)
    r = tab.ring
    nt = tab.ids.nontrivial
    labels = [r.element(e) for e in nt]
    adj = [[j for j, f in enumerate(nt)
            if f != e and r.mul(e, f) == r.zero and r.mul(f, e) == r.zero]
           for e in nt]
    return Graph(labels, adj)


def cl2_degree_formula(ring, e: int, u: int) -> int:
    """Degree of ``(e, u)`` in ``Cl_2(R)`` predicted from the ring counts.

    With ``m`` nonzero idempotents, ``k`` units and ``O_e`` nonzero
    idempotents orthogonal to ``e``, the degree is ``m - 1 + O_e (k - 1)``
    when ``u*u == 1`` and ``m + O_e (k - 1)`` otherwise.
    """
    tab = _tables(ring)
    if e == tab.ring.zero:
        raise DomainError("the degree formula needs a nonzero idempotent")
    if e not in tab.ids.ortho_count:
        raise DomainError(f"{tab.ring.label(e)} is not an idempotent")
    if u not in tab.units.inverse:
        raise DomainError(f"{tab.ring.label(u)} is not a unit")
    m = len(tab.ids.nonzero)
    k = len(tab.units)
    base = m - 1 if tab.units.is_involution(u) else m
    return base + tab.ids.ortho_count[e] * (k - 1)


def cl2_via_shuriken(ring) -> tuple[Graph, dict[int, int]]:
    """Build ``Shu^t_k(I(R))`` with ``t = |U'(R)|``, ``k = |U(R)|``.

    Returns the shuriken graph and the candidate bijection onto
    ``cl2(ring)`` as a dict from shuriken vertex index to ``Cl_2`` vertex
    index: copy ``i`` goes to the ``i``-th unit of the unit table, its apex
    to ``(1, u_i)`` and its base vertex ``e`` to ``(e, u_i)``. The zero ring
    is rejected with :class:`DomainError`.
    """
    tab = _tables(ring)
    r, ut = tab.ring, tab.units
    if r.zero == r.one:
        raise DomainError("the zero ring has no apex idempotent")
    base = idempotent_graph(tab)
    shu = shuriken(len(ut.involutions), len(ut), base)
    target = cl2(tab)
    mapping = {}
    for s, (i, v) in enumerate(shu.vertices):
        e = r.one if v == APEX else v.index
        mapping[s] = target.index(CleanVertex(r.element(e), r.element(ut.units[i])))
    return shu, mapping
