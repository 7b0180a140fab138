"""Parser for the ring description language.

Grammar (whitespace is ignored everywhere)::

    spec     := term { "x" term } ;              (left-associative product)
    term     := "Z" UINT
              | "M2(" "Z" UINT ")"
              | "Z" UINT "[x]/(" poly ")" ;
    poly     := monomial { ("+" | "-") monomial } ;
    monomial := [UINT] [ "x" [ "^" UINT ] ] ;

Examples: ``Z12``, ``Z3 x Z4``, ``M2(Z3)``, ``Z2[x]/(x^2)``.
"""

from __future__ import annotations

from .errors import SpecError
from .rings import M2p, Product, QuotPoly, RingSpec, Zn, is_prime

UINT_CAP = 10**6


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.chars = []
        self.offsets = []
        for i, ch in enumerate(text):
            if not ch.isspace():
                self.chars.append(ch)
                self.offsets.append(i)
        self.s = "".join(self.chars)
        self.pos = 0

    def offset(self, pos: int | None = None) -> int:
        pos = self.pos if pos is None else pos
        char = self.offsets[pos] if pos < len(self.offsets) else len(self.text)
        return len(self.text[:char].encode("utf-8"))

    def fail(self, message: str, code: str = "syntax", pos: int | None = None):
        off = self.offset(pos)
        raise SpecError(f"{message} at byte {off}", code=code, offset=off)

    def peek(self, lit: str) -> bool:
        return self.s.startswith(lit, self.pos)

    def expect(self, lit: str) -> None:
        if not self.peek(lit):
            found = self.s[self.pos:self.pos + len(lit)] or "end of input"
            self.fail(f"expected {lit!r}, found {found!r}")
        self.pos += len(lit)

    def uint(self) -> int:
        start = self.pos
        while self.pos < len(self.s) and self.s[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an unsigned integer")
        digits = self.s[start:self.pos]
        if len(digits) > 7 or int(digits) > UINT_CAP:
            self.fail(f"integer {digits} exceeds {UINT_CAP}", code="range", pos=start)
        return int(digits)

    def prime(self) -> int:
        start = self.pos
        p = self.uint()
        if not is_prime(p):
            self.fail(f"{p} is not prime", code="nonprime", pos=start)
        return p

    # -- grammar ----------------------------------------------------------

    def spec(self) -> RingSpec:
        node = self.term()
        while self.peek("x"):
            self.pos += 1
            node = Product(node, self.term())
        if self.pos != len(self.s):
            self.fail(f"unexpected {self.s[self.pos]!r}")
        return node

    def term(self) -> RingSpec:
        if self.peek("M2("):
            self.pos += 3
            self.expect("Z")
            p = self.prime()
            self.expect(")")
            return M2p(p)
        self.expect("Z")
        start = self.pos
        n = self.uint()
        if self.peek("[x]/("):
            if not is_prime(n):
                self.fail(f"{n} is not prime", code="nonprime", pos=start)
            self.pos += 5
            coeffs = self.poly(n)
            self.expect(")")
            return QuotPoly(n, coeffs)
        if n < 1:
            self.fail("Z0 is not a ring with identity; need n >= 1", code="invalid", pos=start)
        return Zn(n)

    def poly(self, p: int) -> tuple[int, ...]:
        start = self.pos
        terms = {}
        sign = 1
        while True:
            coef, exp = self.monomial()
            terms[exp] = terms.get(exp, 0) + sign * coef
            if self.peek("+"):
                sign = 1
            elif self.peek("-"):
                sign = -1
            else:
                break
            self.pos += 1
        coeffs = [0] * (max(terms) + 1)
        for exp, c in terms.items():
            coeffs[exp] = c % p
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            self.fail("modulus must have degree >= 1", code="nonmonic", pos=start)
        if coeffs[-1] != 1:
            self.fail("modulus is not monic", code="nonmonic", pos=start)
        return tuple(coeffs)

    def monomial(self) -> tuple[int, int]:
        start = self.pos
        coef = 1
        has_coef = self.pos < len(self.s) and self.s[self.pos].isdigit()
        if has_coef:
            coef = self.uint()
        if self.peek("x"):
            self.pos += 1
            exp = 1
            if self.peek("^"):
                self.pos += 1
                exp = self.uint()
            return coef, exp
        if not has_coef:
            self.fail("expected a monomial", pos=start)
        return coef, 0


def parse_ring_spec(text: str) -> RingSpec:
    """Parse ``text`` into a ring spec AST; raises :class:`SpecError`."""
    return _Parser(text).spec()


def format_ring_spec(spec: RingSpec) -> str:
    """Surface syntax for ``spec``; ``parse_ring_spec`` inverts it."""
    return str(spec)
