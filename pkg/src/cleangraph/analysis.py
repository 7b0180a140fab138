"""Idempotents, units, involutions and orthogonality counts of a finite ring.

Also the closed-form unit and involution counts for ``M_2(Z_p)`` together
with the four-family classification of its involutions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import ring_cap
from .errors import BudgetError, DomainError
from .rings import FiniteRing, all_matrices, is_prime


def _check_cap(ring: FiniteRing) -> None:
    cap = ring_cap()
    if ring.order > cap:
        raise BudgetError(f"ring order {ring.order} exceeds cap {cap}")


@dataclass(frozen=True)
class UnitTable:
    """Units of a ring in the order used to build shuriken graphs.

    ``units`` lists every involution (``u*u == 1``) first, by canonical
    index, followed by the remaining units arranged so that the unit at
    position ``t + i`` is inverse to the one at ``len(units) - 1 - i``
    (``t`` the number of involutions, positions 0-based). Within each
    inverse pair the smaller index comes first.
    """

    units: tuple[int, ...]
    inverse: dict[int, int]
    involutions: tuple[int, ...]
    non_involutions: tuple[int, ...]
    position: dict[int, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.units)

    def is_involution(self, u: int) -> bool:
        return self.inverse[u] == u


@dataclass(frozen=True)
class IdempotentTable:
    """Idempotents in canonical order with their orthogonality counts.

    ``ortho_count[e]`` is the number of nonzero idempotents ``f`` with
    ``ef = fe = 0``.
    """

    idempotents: tuple[int, ...]
    nonzero: tuple[int, ...]
    nontrivial: tuple[int, ...]
    ortho_count: dict[int, int]
    orthogonal: dict[int, frozenset[int]] = field(repr=False)


def idempotents(ring: FiniteRing) -> IdempotentTable:
    """Exhaustive scan for ``e*e == e``."""
    _check_cap(ring)
    ids = tuple(e for e in range(ring.order) if ring.mul(e, e) == e)
    nonzero = tuple(e for e in ids if e != ring.zero)
    nontrivial = tuple(e for e in nonzero if e != ring.one)
    orthogonal = {}
    for e in ids:
        orthogonal[e] = frozenset(
            f for f in nonzero
            if ring.mul(e, f) == ring.zero and ring.mul(f, e) == ring.zero
        )
    ortho_count = {e: len(orthogonal[e]) for e in ids}
    return IdempotentTable(ids, nonzero, nontrivial, ortho_count, orthogonal)


def units(ring: FiniteRing) -> UnitTable:
    """Exhaustive scan for two-sided inverses, ordered for the shuriken pairing."""
    _check_cap(ring)
    one = ring.one
    inverse = {}
    for u in range(ring.order):
        for v in np.flatnonzero(ring.mul_row(u) == one):
            v = int(v)
            if ring.mul(v, u) == one:
                inverse[u] = v
                break
    involutions = tuple(u for u in sorted(inverse) if inverse[u] == u)
    firsts = [u for u in sorted(inverse) if u < inverse[u]]
    non_involutions = tuple(firsts) + tuple(inverse[u] for u in reversed(firsts))
    order = involutions + non_involutions
    return UnitTable(
        units=order,
        inverse=inverse,
        involutions=involutions,
        non_involutions=non_involutions,
        position={u: i for i, u in enumerate(order)},
    )


# ---------------------------------------------------------------------------
# M_2(Z_p) closed forms
# ---------------------------------------------------------------------------


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def unit_count_m2_formula(p: int) -> int:
    """``|GL_2(Z_p)| = (p^2 - 1)(p^2 - p)``."""
    _require_prime(p)
    return p**4 - p**3 - p**2 + p


def involution_count_m2_formula(p: int) -> int:
    _require_prime(p)
    return 4 if p == 2 else p**2 + p + 2


def involutions_m2_classified(p: int) -> dict[str, list[tuple[int, int, int, int]]]:
    """The involutions of ``M_2(Z_p)`` split into four families.

    Matrices are ``(a, b, c, d)`` for ``[[a, b], [c, d]]``:

    1. ``diagonal``: ``b = c = 0`` and ``a, d`` in ``{1, p-1}``;
    2. ``lower``: ``b = 0``, ``c != 0``, ``(a, d)`` in ``{(1, p-1), (p-1, 1)}``;
    3. ``upper``: ``c = 0``, ``b != 0``, same ``(a, d)`` choices;
    4. ``general``: ``d = -a`` with ``a`` not in ``{1, p-1}``, ``b != 0``
       and ``c = (1 - a^2)/b``.

    Each family is deduplicated; for ``p = 2`` the sign choices coincide, so
    the families are smaller than the generic counts suggest.
    """
    _require_prime(p)
    signs = sorted({1, p - 1})
    flips = sorted({(1, p - 1), (p - 1, 1)})

    def unique(items):
        return sorted(set(items))

    diagonal = unique((a, 0, 0, d) for a in signs for d in signs)
    lower = unique((a, 0, c, d) for a, d in flips for c in range(1, p))
    upper = unique((a, b, 0, d) for a, d in flips for b in range(1, p))
    general = unique(
        (a, b, (1 - a * a) * pow(b, -1, p) % p, (-a) % p)
        for a in range(p) if a not in signs
        for b in range(1, p)
    )
    return {"diagonal": diagonal, "lower": lower, "upper": upper, "general": general}


def involutions_m2_bruteforce(p: int) -> list[tuple[int, int, int, int]]:
    """All ``(a, b, c, d)`` with ``[[a, b], [c, d]]^2 = I`` over ``Z_p``."""
    out = []
    for a, b, c, d in all_matrices(p):
        if ((a * a + b * c) % p == 1 and (a * b + b * d) % p == 0
                and (c * a + d * c) % p == 0 and (c * b + d * d) % p == 1):
            out.append((a, b, c, d))
    return out
