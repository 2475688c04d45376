"""Monomials, monomial orders and polynomial arithmetic over GF(p).

A monomial is a plain tuple of non-negative exponents (dense; the benchmark
systems stay below 16 variables, and dense vectors make grevlex comparison a
single reverse scan).  A Polynomial is an immutable list of (monomial, coeff)
terms, strictly descending under the order of the PolyRing it belongs to,
with no zero coefficients; the empty term list is the zero polynomial.
"""

from __future__ import annotations

import heapq
import re
from typing import Iterable

from .field import PrimeField

Mono = tuple

MAX_EXPONENT = 1 << 16  # parse-time overflow guard


# ---------------------------------------------------------------------------
# monomial operations


def mono_one(n: int) -> Mono:
    return (0,) * n


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True when a divides b (componentwise <=)."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_div(a: Mono, b: Mono) -> Mono:
    """Exact quotient a/b; raises ArithmeticError when b does not divide a."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ArithmeticError(f"monomial {b} does not divide {a}")
    return q


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_deg(a: Mono) -> int:
    return sum(a)


def mono_is_one(a: Mono) -> bool:
    return not any(a)


def monomials_up_to(n: int, bound: int) -> list[Mono]:
    """All exponent tuples in n variables with total degree <= bound."""
    out: list[Mono] = []

    def rec(prefix: tuple, left: int):
        if len(prefix) == n - 1:
            for e in range(left + 1):
                out.append(prefix + (e,))
            return
        for e in range(left + 1):
            rec(prefix + (e,), left - e)

    if n == 0:
        return [()]
    rec((), bound)
    return out


# ---------------------------------------------------------------------------
# monomial orders
#
# Each order maps a monomial to a sort key such that key(a) < key(b) iff
# a < b in the order.  negkey() is the elementwise negation, used to drive
# min-heaps as max-heaps during reduction.


class MonomialOrder:
    name: str = "?"

    def key(self, m: Mono):
        raise NotImplementedError

    def negkey(self, m: Mono):
        raise NotImplementedError

    def __repr__(self):
        return f"<order {self.name}>"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.name == self.name

    def __hash__(self):
        return hash(self.name)


class LexOrder(MonomialOrder):
    name = "lex"

    def key(self, m):
        return m

    def negkey(self, m):
        return tuple(-e for e in m)


class GrlexOrder(MonomialOrder):
    name = "grlex"

    def key(self, m):
        return (sum(m), m)

    def negkey(self, m):
        return (-sum(m), tuple(-e for e in m))


class GrevlexOrder(MonomialOrder):
    # degree first; ties broken by the *smallest* trailing exponent, which the
    # reversed negated tail encodes as an ordinary tuple comparison.
    name = "grevlex"

    def key(self, m):
        return (sum(m), tuple(-e for e in reversed(m)))

    def negkey(self, m):
        return (-sum(m), tuple(reversed(m)))


ORDERS: dict[str, MonomialOrder] = {
    "lex": LexOrder(),
    "grlex": GrlexOrder(),
    "grevlex": GrevlexOrder(),
}


def get_order(order: str | MonomialOrder) -> MonomialOrder:
    if isinstance(order, MonomialOrder):
        return order
    try:
        return ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}; expected one of {sorted(ORDERS)}") from None


def mono_cmp(a: Mono, b: Mono, order: str | MonomialOrder) -> int:
    """Total-order comparison; returns -1, 0 or 1."""
    if len(a) != len(b):
        raise ValueError(f"monomial dimension mismatch: {len(a)} vs {len(b)}")
    ka, kb = (o := get_order(order)).key(a), o.key(b)
    return -1 if ka < kb else (0 if ka == kb else 1)


# ---------------------------------------------------------------------------
# ring and polynomials


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


class PolyRing:
    """GF(p)[x_1, ..., x_n] with a fixed monomial order.

    Variables are ordered x_1 > x_2 > ... > x_n in every implemented order.
    """

    __slots__ = ("field", "names", "order", "n", "zero", "_pos")

    def __init__(self, field: PrimeField | int, names, order: str | MonomialOrder = "grevlex"):
        self.field = field if isinstance(field, PrimeField) else PrimeField(field)
        if isinstance(names, str):
            names = [s.strip() for s in names.split(",")]
        names = tuple(names)
        if not names:
            raise ValueError("need at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names}")
        for nm in names:
            if not _NAME_RE.match(nm):
                raise ValueError(f"bad variable name: {nm!r}")
        self.names = names
        self.n = len(names)
        self.order = get_order(order)
        self._pos = {nm: i for i, nm in enumerate(names)}
        self.zero = Polynomial(self, ())

    def poly(self, terms: Iterable[tuple[Mono, int]]) -> Polynomial:
        """Canonical polynomial from arbitrary (monomial, coeff) pairs."""
        p = self.field.p
        acc: dict[Mono, int] = {}
        for m, c in terms:
            if len(m) != self.n:
                raise ValueError(f"monomial {m} has wrong dimension for {self!r}")
            c = (acc.get(m, 0) + c) % p
            if c:
                acc[m] = c
            else:
                acc.pop(m, None)
        key = self.order.key
        return Polynomial(self, tuple(sorted(acc.items(), key=lambda t: key(t[0]), reverse=True)))

    def convert(self, f: Polynomial) -> Polynomial:
        """Re-canonicalize a polynomial from a ring with the same field/vars."""
        if f.ring.names != self.names or f.ring.field != self.field:
            raise ValueError("cannot convert between incompatible rings")
        return self.poly(f.terms)

    def parse(self, text: str, line: int | None = None) -> Polynomial:
        return _parse_polynomial(self, text, line)

    def format(self, f: Polynomial) -> str:
        return _format_polynomial(self, f)

    def format_monomial(self, m: Mono) -> str:
        return _format_monomial(self, m)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.names == self.names
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return f"PolyRing(GF({self.field.p}), {','.join(self.names)}, {self.order.name})"


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> Mono:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def lc(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    @property
    def lt(self) -> tuple[Mono, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def __add__(self, other: Polynomial) -> Polynomial:
        return self.ring.poly(self.terms + other.terms)

    def __sub__(self, other: Polynomial) -> Polynomial:
        p = self.ring.field.p
        return self.ring.poly(self.terms + tuple((m, p - c) for m, c in other.terms))

    def __neg__(self) -> Polynomial:
        p = self.ring.field.p
        return Polynomial(self.ring, tuple((m, p - c) for m, c in self.terms))

    def scale(self, c: int) -> Polynomial:
        p = self.ring.field.p
        c %= p
        if c == 0:
            return self.ring.zero
        if c == 1:
            return self
        return Polynomial(self.ring, tuple((m, c * k % p) for m, k in self.terms))

    def mul_term(self, c: int, t: Mono) -> Polynomial:
        """Multiply by the term c*t.  Order is preserved (orders are
        multiplicative), so no re-sort happens."""
        p = self.ring.field.p
        c %= p
        if c == 0:
            return self.ring.zero
        if mono_is_one(t):
            return self.scale(c)
        return Polynomial(
            self.ring, tuple((mono_mul(t, m), c * k % p) for m, k in self.terms)
        )

    def monic(self) -> Polynomial:
        if not self.terms or self.terms[0][1] == 1:
            return self
        return self.scale(self.ring.field.inv(self.terms[0][1]))

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __str__(self):
        return self.ring.format(self)

    def __repr__(self):
        return f"<{self.ring.format(self)} in {self.ring!r}>"


def leading(f: Polynomial) -> tuple[Mono, int]:
    """Leading (monomial, coefficient) under f's ring order; zero rejected."""
    return f.lt


# ---------------------------------------------------------------------------
# term accumulator: dict of live terms plus a lazy max-heap over monomials.
# This is the engine behind polynomial division; every reduction below runs
# in O(total term traffic * log) instead of rescanning for maxima.


class TermAccumulator:
    __slots__ = ("p", "negkey", "work", "heap")

    def __init__(self, ring: PolyRing, terms: Iterable[tuple[Mono, int]] = ()):
        self.p = ring.field.p
        self.negkey = ring.order.negkey
        self.work = dict(terms)
        self.heap = [(self.negkey(m), m) for m in self.work]
        heapq.heapify(self.heap)

    def pop_lead(self):
        """Remove and return the current leading (monomial, coeff), or None."""
        heap, work = self.heap, self.work
        while heap:
            _, m = heapq.heappop(heap)
            c = work.pop(m, 0)
            if c:
                return m, c
        return None

    def add_term(self, c: int, m: Mono):
        c = (self.work.get(m, 0) + c) % self.p
        if c:
            if m not in self.work:
                heapq.heappush(self.heap, (self.negkey(m), m))
            self.work[m] = c
        else:
            self.work.pop(m, None)

    def sub_scaled(self, factor: int, t: Mono, terms):
        """work -= factor * t * terms (t may be the unit monomial)."""
        p, work, heap, negkey = self.p, self.work, self.heap, self.negkey
        if mono_is_one(t):
            for gm, gc in terms:
                prev = work.get(gm)
                if prev is None:
                    nc = -factor * gc % p
                    if nc:
                        work[gm] = nc
                        heapq.heappush(heap, (negkey(gm), gm))
                else:
                    nc = (prev - factor * gc) % p
                    if nc:
                        work[gm] = nc
                    else:
                        del work[gm]
        else:
            for gm, gc in terms:
                nm = tuple(x + y for x, y in zip(t, gm))
                prev = work.get(nm)
                if prev is None:
                    nc = -factor * gc % p
                    if nc:
                        work[nm] = nc
                        heapq.heappush(heap, (negkey(nm), nm))
                else:
                    nc = (prev - factor * gc) % p
                    if nc:
                        work[nm] = nc
                    else:
                        del work[nm]

    def is_empty(self) -> bool:
        return not self.work

    def items(self):
        return self.work.items()


# ---------------------------------------------------------------------------
# reduction, S-polynomials, interreduction


def normal_form(f: Polynomial, basis, steps: list | None = None) -> Polynomial:
    """Full normal form of f modulo the nonzero members of basis.

    No monomial of the result (not only the leading one) is divisible by any
    basis leading monomial, and f - result lies in the ideal generated by
    basis.  When a reducer applies, the one with the smallest leading
    monomial (then the earliest position) is used, which makes the outcome
    deterministic; on a Groebner basis it is the unique normal form either
    way.

    When `steps` is a list, every reduction step is appended to it as
    (coeff, monomial, reducer), so f == result + sum(c * t * g) exactly.
    """
    ring = f.ring
    key = ring.order.key
    red = sorted(
        ((g.lm, g, i) for i, g in enumerate(basis) if not g.is_zero),
        key=lambda r: (key(r[0]), r[2]),
    )
    if not red or f.is_zero:
        return f
    inv = ring.field.inv
    p = ring.field.p
    reducers = [(glm, g.terms[1:], inv(g.lc), g) for glm, g, _ in red]
    acc = TermAccumulator(ring, f.terms)
    out: dict[Mono, int] = {}
    while True:
        lead = acc.pop_lead()
        if lead is None:
            break
        m, c = lead
        for glm, gtail, ginv, g in reducers:
            if mono_divides(glm, m):
                t = tuple(x - y for x, y in zip(m, glm))
                factor = c * ginv % p
                acc.sub_scaled(factor, t, gtail)
                if steps is not None:
                    steps.append((factor, t, g))
                break
        else:
            out[m] = c
    return ring.poly(out.items())


def top_reduce(f: Polynomial, basis) -> Polynomial:
    """Rewrite only the leading monomial until it is irreducible (or f
    vanishes); tails are left untouched.  Zero-detection agrees with
    normal_form, but intermediate objects stay small, which is what the
    Buchberger loop wants."""
    ring = f.ring
    key = ring.order.key
    red = sorted(
        ((g.lm, g, i) for i, g in enumerate(basis) if not g.is_zero),
        key=lambda r: (key(r[0]), r[2]),
    )
    if not red or f.is_zero:
        return f
    inv = ring.field.inv
    p = ring.field.p
    reducers = [(glm, g.terms[1:], inv(g.lc)) for glm, g, _ in red]
    acc = TermAccumulator(ring, f.terms)
    while True:
        lead = acc.pop_lead()
        if lead is None:
            return ring.zero
        m, c = lead
        for glm, gtail, ginv in reducers:
            if mono_divides(glm, m):
                t = tuple(x - y for x, y in zip(m, glm))
                acc.sub_scaled(c * ginv % p, t, gtail)
                break
        else:
            acc.add_term(c, m)
            return ring.poly(acc.items())


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g; leading terms cancel."""
    if f.is_zero or g.is_zero:
        raise ValueError("S-polynomial of a zero polynomial")
    inv = f.ring.field.inv
    l = mono_lcm(f.lm, g.lm)
    a = f.mul_term(inv(f.lc), mono_div(l, f.lm))
    b = g.mul_term(inv(g.lc), mono_div(l, g.lm))
    return a - b


def interreduce(polys) -> list[Polynomial]:
    """Minimal, fully autoreduced, monic basis, sorted leading-monomial
    descending.  On a Groebner basis this is the unique reduced basis;
    the function is idempotent on any input."""
    nonzero = [f for f in polys if not f.is_zero]
    if not nonzero:
        return []
    ring = nonzero[0].ring
    key = ring.order.key
    kept: list[Polynomial] = []
    for f in sorted(nonzero, key=lambda g: key(g.lm)):
        flm = f.lm
        if not any(mono_divides(g.lm, flm) for g in kept):
            kept.append(f)
    reduced = [
        normal_form(f, kept[:i] + kept[i + 1 :]).monic() for i, f in enumerate(kept)
    ]
    reduced.sort(key=lambda g: (key(g.lm), g.lm), reverse=True)
    return reduced


# ---------------------------------------------------------------------------
# text syntax: terms joined by +/-, term = [coeff][*]var[^exp][*var[^exp]...]


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where += f" at line {line}"
        if col is not None:
            where += (" col " if line is not None else " at col ") + str(col)
        super().__init__(msg + where)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^]))")


def _tokenize(text: str, line: int | None):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = pos + (len(text[pos:]) - len(stripped)) + 1
            raise ParseError(f"unexpected character {stripped[0]!r}", line, col)
        col = m.start(m.lastindex) + 1
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), col))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), col))
        else:
            tokens.append(("op", m.group(3), col))
        pos = m.end()
    return tokens


def _parse_polynomial(ring: PolyRing, text: str, line: int | None = None) -> Polynomial:
    if "/" in text:
        raise ParseError("rational coefficients are not supported", line, text.index("/") + 1)
    toks = _tokenize(text, line)
    if not toks:
        raise ParseError("empty polynomial", line)
    p = ring.field.p
    terms: list[tuple[Mono, int]] = []
    i = 0

    def expect_var(idx):
        kind, val, col = toks[idx]
        if kind != "name":
            raise ParseError(f"expected a variable, got {val!r}", line, col)
        if val not in ring._pos:
            raise ParseError(f"unknown variable {val!r}", line, col)
        return ring._pos[val]

    sign = 1
    while i < len(toks):
        kind, val, col = toks[i]
        if kind == "op" and val in "+-":
            sign = 1 if val == "+" else -1
            i += 1
            if i >= len(toks):
                raise ParseError("dangling sign", line, col)
            kind, val, col = toks[i]
        coeff = 1
        exps = [0] * ring.n
        saw_factor = False
        if kind == "int":
            coeff = val
            saw_factor = True
            i += 1
            if i < len(toks) and toks[i][:2] == ("op", "*"):
                i += 1
                if i >= len(toks):
                    raise ParseError("dangling '*'", line, toks[i - 1][2])
                expect_var(i)  # a '*' after the coefficient must introduce a variable
        # variable factors, '*'-separated
        first = True
        while i < len(toks) and toks[i][0] == "name":
            v = expect_var(i)
            i += 1
            e = 1
            if i < len(toks) and toks[i][:2] == ("op", "^"):
                i += 1
                if i >= len(toks) or toks[i][0] != "int":
                    raise ParseError("expected an integer exponent after '^'", line, toks[i - 1][2])
                e = toks[i][1]
                if e >= MAX_EXPONENT:
                    raise ParseError(f"exponent {e} exceeds the {MAX_EXPONENT} guard", line, toks[i][2])
                i += 1
            exps[v] += e
            saw_factor = True
            first = False
            if i < len(toks) and toks[i][:2] == ("op", "*"):
                i += 1
                if i >= len(toks):
                    raise ParseError("dangling '*'", line, toks[i - 1][2])
                if toks[i][0] != "name":
                    raise ParseError("expected a variable after '*'", line, toks[i][2])
            elif i < len(toks) and toks[i][0] in ("name", "int"):
                k, v2, c2 = toks[i]
                raise ParseError("expected '*', '+', '-' or end of polynomial", line, c2)
        if not saw_factor:
            raise ParseError(f"expected a term, got {val!r}", line, col)
        terms.append((tuple(exps), sign * coeff))
        if i < len(toks):
            kind, val, col = toks[i]
            if not (kind == "op" and val in "+-"):
                raise ParseError(f"expected '+' or '-', got {val!r}", line, col)
    return ring.poly(terms)


def _format_monomial(ring: PolyRing, m: Mono) -> str:
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _format_polynomial(ring: PolyRing, f: Polynomial) -> str:
    """Render with coefficients as residues of smallest magnitude: a term
    whose residue c satisfies p - c < c prints as a subtraction.  Output is
    stable under parse/format round trips."""
    if f.is_zero:
        return "0"
    p = ring.field.p
    out = []
    for i, (m, c) in enumerate(f.terms):
        neg = p - c < c
        mag = p - c if neg else c
        mono = _format_monomial(ring, m)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)
