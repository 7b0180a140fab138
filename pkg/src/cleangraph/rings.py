"""Finite rings with identity, addressed by canonical integer indices.

Every ring enumerates its carrier as ``0 .. order-1``. All arithmetic is
done on those indices; :class:`RingElement` is a thin handle for callers who
prefer operator syntax.

Canonical orders:

* ``Z_n``: the residue ``k`` has index ``k``.
* ``R1 x R2``: ``(a, b)`` has index ``index(a) * |R2| + index(b)``.
* ``M_2(Z_p)``: ``[[a, b], [c, d]]`` has index ``a p^3 + b p^2 + c p + d``.
* ``Z_p[x]/(f)``: ``c_0 + c_1 x + ...`` has index ``c_0 + c_1 p + c_2 p^2 + ...``.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .config import TABLE_THRESHOLD
from .errors import SpecError


def is_prime(n: int) -> bool:
    """Trial division; the primes used here are tiny."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# Ring descriptions (the AST produced by the parser)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Zn:
    n: int

    def __str__(self) -> str:
        return f"Z{self.n}"


@dataclass(frozen=True)
class Product:
    left: "RingSpec"
    right: "RingSpec"

    def __str__(self) -> str:
        # products are associative on canonical indices, so nesting is not printed
        return f"{self.left} x {self.right}"


@dataclass(frozen=True)
class M2p:
    p: int

    def __str__(self) -> str:
        return f"M2(Z{self.p})"


@dataclass(frozen=True)
class QuotPoly:
    """``Z_p[x]/(f)`` with ``coeffs`` listed from the constant term upwards."""

    p: int
    coeffs: tuple[int, ...]

    def __str__(self) -> str:
        return f"Z{self.p}[x]/({format_poly(self.coeffs)})"


RingSpec = Zn | Product | M2p | QuotPoly


def format_poly(coeffs) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        mono = "x" if k == 1 else f"x^{k}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------


class FiniteRing(ABC):
    """A finite ring with identity.

    Subclasses implement the arithmetic rules on indices plus a vectorised
    ``_mul_row``. Rings of order at most ``TABLE_THRESHOLD`` cache full
    addition and multiplication tables on first use; larger rings compute
    products on demand.

    Instances are immutable after construction.
    """

    order: int
    zero: int
    one: int
    spec: RingSpec

    # -- rules supplied by subclasses ------------------------------------

    @abstractmethod
    def _add(self, i: int, j: int) -> int: ...

    @abstractmethod
    def _mul(self, i: int, j: int) -> int: ...

    @abstractmethod
    def _neg(self, i: int) -> int: ...

    @abstractmethod
    def _mul_row(self, i: int) -> np.ndarray: ...

    @abstractmethod
    def _add_row(self, i: int) -> np.ndarray: ...

    @abstractmethod
    def label(self, i: int) -> str:
        """Human-readable form of the element with index ``i``."""

    # -- public arithmetic ---------------------------------------------------

    @property
    def tabulated(self) -> bool:
        return self.order <= TABLE_THRESHOLD

    @cached_property
    def _mul_table(self) -> np.ndarray:
        return np.stack([self._mul_row(i) for i in range(self.order)])

    @cached_property
    def _add_table(self) -> np.ndarray:
        return np.stack([self._add_row(i) for i in range(self.order)])

    def add(self, i: int, j: int) -> int:
        if self.tabulated:
            return int(self._add_table[i, j])
        return self._add(i, j)

    def mul(self, i: int, j: int) -> int:
        if self.tabulated:
            return int(self._mul_table[i, j])
        return self._mul(i, j)

    def neg(self, i: int) -> int:
        return self._neg(i)

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg(j))

    def mul_row(self, i: int) -> np.ndarray:
        """Indices of ``i * x`` for every ``x`` in canonical order."""
        if self.tabulated:
            return self._mul_table[i]
        return self._mul_row(i)

    def add_row(self, i: int) -> np.ndarray:
        if self.tabulated:
            return self._add_table[i]
        return self._add_row(i)

    # -- element handles -------------------------------------------------

    def element(self, i: int) -> "RingElement":
        if not 0 <= i < self.order:
            raise IndexError(f"index {i} outside ring of order {self.order}")
        return RingElement(self, i)

    def elements(self):
        return [RingElement(self, i) for i in range(self.order)]

    def __len__(self) -> int:
        return self.order

    def __str__(self) -> str:
        return str(self.spec)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.spec} order={self.order}>"


@dataclass(frozen=True, eq=False)
class RingElement:
    """An element of ``ring`` identified by its canonical ``index``."""

    ring: FiniteRing
    index: int

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self.index == other.index

    def __hash__(self):
        return hash((id(self.ring), self.index))

    def __lt__(self, other: "RingElement") -> bool:
        return self.index < other.index

    def _check(self, other: "RingElement") -> None:
        if other.ring is not self.ring:
            raise ValueError("elements belong to different rings")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, self.ring.add(self.index, other.index))

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, self.ring.sub(self.index, other.index))

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, self.ring.mul(self.index, other.index))

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, self.ring.neg(self.index))

    def __str__(self) -> str:
        return self.ring.label(self.index)

    def __repr__(self) -> str:
        return f"RingElement({self.ring.spec}, {self.ring.label(self.index)})"


class ZnRing(FiniteRing):
    def __init__(self, n: int):
        self.n = n
        self.order = n
        self.zero = 0
        self.one = 1 % n
        self.spec = Zn(n)

    def _add(self, i, j):
        return (i + j) % self.n

    def _mul(self, i, j):
        return (i * j) % self.n

    def _neg(self, i):
        return (-i) % self.n

    def _mul_row(self, i):
        return (i * np.arange(self.n, dtype=np.int64)) % self.n

    def _add_row(self, i):
        return (i + np.arange(self.n, dtype=np.int64)) % self.n

    def label(self, i):
        return str(i)


class ProductRing(FiniteRing):
    def __init__(self, left: FiniteRing, right: FiniteRing):
        self.left = left
        self.right = right
        self.order = left.order * right.order
        self.zero = self.join(left.zero, right.zero)
        self.one = self.join(left.one, right.one)
        self.spec = Product(left.spec, right.spec)

    def split(self, i: int) -> tuple[int, int]:
        return divmod(i, self.right.order)

    def join(self, a: int, b: int) -> int:
        return a * self.right.order + b

    def _add(self, i, j):
        (a, b), (c, d) = self.split(i), self.split(j)
        return self.join(self.left.add(a, c), self.right.add(b, d))

    def _mul(self, i, j):
        (a, b), (c, d) = self.split(i), self.split(j)
        return self.join(self.left.mul(a, c), self.right.mul(b, d))

    def _neg(self, i):
        a, b = self.split(i)
        return self.join(self.left.neg(a), self.right.neg(b))

    def _mul_row(self, i):
        a, b = self.split(i)
        rows = np.add.outer(self.left.mul_row(a) * self.right.order, self.right.mul_row(b))
        return rows.ravel()

    def _add_row(self, i):
        a, b = self.split(i)
        rows = np.add.outer(self.left.add_row(a) * self.right.order, self.right.add_row(b))
        return rows.ravel()

    def label(self, i):
        a, b = self.split(i)
        return f"({self.left.label(a)},{self.right.label(b)})"


class M2pRing(FiniteRing):
    """2x2 matrices over the prime field ``Z_p``."""

    def __init__(self, p: int):
        self.p = p
        self.order = p**4
        self.zero = 0
        self.one = self.encode(1, 0, 0, 1)
        self.spec = M2p(p)

    def encode(self, a: int, b: int, c: int, d: int) -> int:
        p = self.p
        return ((a * p + b) * p + c) * p + d

    def decode(self, i: int) -> tuple[int, int, int, int]:
        p = self.p
        i, d = divmod(i, p)
        i, c = divmod(i, p)
        a, b = divmod(i, p)
        return a, b, c, d

    @cached_property
    def _entries(self) -> tuple[np.ndarray, ...]:
        idx = np.arange(self.order, dtype=np.int64)
        p = self.p
        return idx // p**3, (idx // p**2) % p, (idx // p) % p, idx % p

    def _add(self, i, j):
        p = self.p
        x, y = self.decode(i), self.decode(j)
        return self.encode(*((s + t) % p for s, t in zip(x, y)))

    def _mul(self, i, j):
        p = self.p
        a, b, c, d = self.decode(i)
        e, f, g, h = self.decode(j)
        return self.encode((a * e + b * g) % p, (a * f + b * h) % p,
                           (c * e + d * g) % p, (c * f + d * h) % p)

    def _neg(self, i):
        return self.encode(*((-s) % self.p for s in self.decode(i)))

    def _mul_row(self, i):
        p = self.p
        a, b, c, d = self.decode(i)
        E, F, G, H = self._entries
        return (((a * E + b * G) % p * p + (a * F + b * H) % p) * p
                + (c * E + d * G) % p) * p + (c * F + d * H) % p

    def _add_row(self, i):
        p = self.p
        a, b, c, d = self.decode(i)
        E, F, G, H = self._entries
        return ((((a + E) % p * p + (b + F) % p) * p + (c + G) % p) * p
                + (d + H) % p)

    def label(self, i):
        a, b, c, d = self.decode(i)
        return f"[[{a},{b}],[{c},{d}]]"


class QuotPolyRing(FiniteRing):
    """``Z_p[x]/(f)`` for a monic ``f`` of degree ``d >= 1``."""

    def __init__(self, p: int, coeffs: tuple[int, ...]):
        self.p = p
        self.modulus = coeffs
        self.degree = len(coeffs) - 1
        self.order = p**self.degree
        self.zero = 0
        self.one = 1 % self.order
        self.spec = QuotPoly(p, coeffs)
        self._powers = p ** np.arange(self.degree, dtype=np.int64)

    def decode(self, i: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            i, c = divmod(i, self.p)
            out.append(c)
        return out

    def encode(self, coeffs) -> int:
        return int(sum(int(c) * self.p**k for k, c in enumerate(coeffs)))

    @cached_property
    def _coeff_matrix(self) -> np.ndarray:
        idx = np.arange(self.order, dtype=np.int64)
        return (idx[:, None] // self._powers[None, :]) % self.p

    @cached_property
    def _companion(self) -> np.ndarray:
        # column k holds x * x^k reduced mod f
        d, p = self.degree, self.p
        C = np.zeros((d, d), dtype=np.int64)
        for k in range(d - 1):
            C[k + 1, k] = 1
        C[:, d - 1] = [(-c) % p for c in self.modulus[:d]]
        return C

    def _mult_matrix(self, i: int) -> np.ndarray:
        d, p = self.degree, self.p
        M = np.zeros((d, d), dtype=np.int64)
        P = np.eye(d, dtype=np.int64)
        for c in self.decode(i):
            M = (M + c * P) % p
            P = (self._companion @ P) % p
        return M

    def _add(self, i, j):
        return self.encode((s + t) % self.p for s, t in zip(self.decode(i), self.decode(j)))

    def _mul(self, i, j):
        p, d = self.p, self.degree
        a, b = self.decode(i), self.decode(j)
        prod = [0] * (2 * d - 1)
        for s, x in enumerate(a):
            for t, y in enumerate(b):
                prod[s + t] += x * y
        # reduce from the top using x^d = -(f_0 + ... + f_{d-1} x^{d-1})
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k] % p
            if c:
                for r in range(d):
                    prod[k - d + r] -= c * self.modulus[r]
            prod[k] = 0
        return self.encode(c % p for c in prod[:d])

    def _neg(self, i):
        return self.encode((-c) % self.p for c in self.decode(i))

    def _mul_row(self, i):
        out = (self._coeff_matrix @ self._mult_matrix(i).T) % self.p
        return out @ self._powers

    def _add_row(self, i):
        out = (self._coeff_matrix + np.array(self.decode(i), dtype=np.int64)) % self.p
        return out @ self._powers

    def label(self, i):
        terms = []
        for k, c in enumerate(self.decode(i)):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def make_zn(n: int) -> ZnRing:
    """The residue ring ``Z_n``; ``n = 1`` gives the zero ring."""
    if n < 1:
        raise SpecError(f"Z_n needs n >= 1, got {n}", code="invalid")
    return ZnRing(n)


def make_product(r1: FiniteRing, r2: FiniteRing) -> ProductRing:
    return ProductRing(r1, r2)


def make_m2p(p: int) -> M2pRing:
    if not is_prime(p):
        raise SpecError(f"M2(Z_p) needs a prime p, got {p}", code="nonprime")
    return M2pRing(p)


def make_quot_poly(p: int, coeffs) -> QuotPolyRing:
    """``Z_p[x]/(f)`` where ``coeffs`` lists ``f`` from the constant term up."""
    if not is_prime(p):
        raise SpecError(f"Z_p[x]/(f) needs a prime p, got {p}", code="nonprime")
    reduced = [int(c) % p for c in coeffs]
    while reduced and reduced[-1] == 0:
        reduced.pop()
    if len(reduced) < 2:
        raise SpecError("modulus must have degree >= 1", code="nonmonic")
    if reduced[-1] != 1:
        raise SpecError(f"modulus {format_poly(reduced)} is not monic", code="nonmonic")
    return QuotPolyRing(p, tuple(reduced))


def build_ring(spec: RingSpec) -> FiniteRing:
    """Construct the ring described by a parsed ring specification."""
    if isinstance(spec, Zn):
        return make_zn(spec.n)
    if isinstance(spec, Product):
        return make_product(build_ring(spec.left), build_ring(spec.right))
    if isinstance(spec, M2p):
        return make_m2p(spec.p)
    if isinstance(spec, QuotPoly):
        return make_quot_poly(spec.p, spec.coeffs)
    raise TypeError(f"not a ring spec: {spec!r}")


def verify_axioms(ring: FiniteRing, cap: int = 512) -> list[str]:
    """Exhaustively check the ring axioms; return a list of violations.

    Rings larger than ``cap`` are refused with ``ValueError``. Uses full
    operation tables, so memory is ``O(order^2)``.
    """
    n = ring.order
    if n > cap:
        raise ValueError(f"ring order {n} above axiom-check cap {cap}")
    M = np.stack([ring.mul_row(i) for i in range(n)])
    A = np.stack([ring.add_row(i) for i in range(n)])
    problems = []
    if not (A == A.T).all():
        problems.append("addition is not commutative")
    if not (A[ring.zero] == np.arange(n)).all():
        problems.append("zero is not an additive identity")
    if not all(A[i, ring.neg(i)] == ring.zero for i in range(n)):
        problems.append("negation is not an additive inverse")
    if not ((M[ring.one] == np.arange(n)).all() and (M[:, ring.one] == np.arange(n)).all()):
        problems.append("one is not a two-sided identity")
    if n > 1 and ring.zero == ring.one:
        problems.append("zero equals one in a nonzero ring")
    for a in range(n):
        # (a+b)+c == a+(b+c) and (ab)c == a(bc) for all b, c at once
        if not (A[A[a]] == A[a][A]).all():
            problems.append(f"addition not associative at a={ring.label(a)}")
            break
        if not (M[M[a]] == M[a][M]).all():
            problems.append(f"multiplication not associative at a={ring.label(a)}")
            break
        # a(b+c) == ab+ac and (b+c)a == ba+ca
        left = M[a][A]
        right = A[M[a][:, None], M[a][None, :]]
        if not (left == right).all():
            problems.append(f"left distributivity fails at a={ring.label(a)}")
            break
        left = M[:, a][A]
        right = A[M[:, a][:, None], M[:, a][None, :]]
        if not (left == right).all():
            problems.append(f"right distributivity fails at a={ring.label(a)}")
            break
    return problems


def all_matrices(p: int):
    """Every 2x2 matrix over ``Z_p`` as an ``(a, b, c, d)`` tuple, canonical order."""
    return itertools.product(range(p), repeat=4)
