"""Module monomials (signatures), module monomial orders and J-pairs.

A module monomial x^a * e_j in the free module k[X]^m is the pair
(index j, monomial).  Unit indices are 1-based.  Three module orders are
provided; all are total and multiplicative:

  pot       position over term, with e_1 < e_2 < ... < e_m
  top       term over position, index breaking ties (larger index greater)
  schreyer  compare mono * lm(f_index) in the base order, larger index
            breaking ties
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .poly import (
    Mono,
    MonomialOrder,
    Polynomial,
    mono_div,
    mono_divides,
    mono_is_one,
    mono_lcm,
    mono_mul,
)


class ModuleMonomial(NamedTuple):
    index: int  # 1..m
    mono: Mono


def sig_mul(s: ModuleMonomial, t: Mono) -> ModuleMonomial:
    return ModuleMonomial(s.index, mono_mul(s.mono, t))


def sig_divides(a: ModuleMonomial, b: ModuleMonomial) -> bool:
    return a.index == b.index and mono_divides(a.mono, b.mono)


class ModuleOrder:
    kind: str = "?"

    def key(self, s: ModuleMonomial):
        raise NotImplementedError

    def __repr__(self):
        return f"<module order {self.kind}>"


class PotOrder(ModuleOrder):
    kind = "pot"

    def __init__(self, base: MonomialOrder):
        self.base = base

    def key(self, s):
        return (s.index, self.base.key(s.mono))


class TopOrder(ModuleOrder):
    kind = "top"

    def __init__(self, base: MonomialOrder):
        self.base = base

    def key(self, s):
        return (self.base.key(s.mono), s.index)


class SchreyerOrder(ModuleOrder):
    kind = "schreyer"

    def __init__(self, base: MonomialOrder, input_lms):
        self.base = base
        self.input_lms = tuple(input_lms)

    def key(self, s):
        return (self.base.key(mono_mul(s.mono, self.input_lms[s.index - 1])), s.index)


MODULE_ORDER_KINDS = ("pot", "top", "schreyer")


def module_order(kind: str, base: MonomialOrder, input_lms=None) -> ModuleOrder:
    kind = kind.replace("-", "_").lower()
    if kind == "pot":
        return PotOrder(base)
    if kind == "top":
        return TopOrder(base)
    if kind == "schreyer":
        if input_lms is None:
            raise ValueError("the schreyer order needs the input leading monomials")
        return SchreyerOrder(base, input_lms)
    raise ValueError(f"unknown module order {kind!r}; expected one of {MODULE_ORDER_KINDS}")


def sig_cmp(a: ModuleMonomial, b: ModuleMonomial, mord: ModuleOrder) -> int:
    ka, kb = mord.key(a), mord.key(b)
    return -1 if ka < kb else (0 if ka == kb else 1)


# ---------------------------------------------------------------------------
# labeled polynomials and provenance


@dataclass(slots=True)
class ProvenanceTrace:
    """How an element was produced.

    origin is ("gen", i) for an input generator, ("jpair", t, parent_id) for
    a J-pair product, or ("psyz", i, j) for the principal syzygy
    f_j e_i - f_i e_j.  steps lists the reduction steps (coeff, monomial,
    reducer_id); scale is the final scalar that made the result monic.
    """

    origin: tuple
    steps: list = field(default_factory=list)
    scale: int = 1


@dataclass(slots=True)
class LabeledPoly:
    """One element of a strong Groebner basis: the polynomial together with
    the leading module monomial (signature) of a vector mapping onto it."""

    sig: ModuleMonomial
    poly: Polynomial
    trace: ProvenanceTrace
    id: int

    def __repr__(self):
        return f"LabeledPoly(#{self.id}, sig={self.sig}, poly={self.poly})"


@dataclass(slots=True)
class JPair:
    """The signature-larger half of a would-be S-pair: multiplier t applied
    to basis element parent_id.  sig == t * parent.sig and prod_lm ==
    t * lm(parent.poly) == lcm of the two leading monomials."""

    t: Mono
    parent_id: int
    sig: ModuleMonomial
    prod_lm: Mono


def make_jpair(a: LabeledPoly, b: LabeledPoly, mord: ModuleOrder) -> JPair | None:
    """J-pair of two basis elements, or None when the shifted signatures
    cancel (no strictly larger side exists)."""
    lcm = mono_lcm(a.poly.lm, b.poly.lm)
    ta = mono_div(lcm, a.poly.lm)
    tb = mono_div(lcm, b.poly.lm)
    sa = sig_mul(a.sig, ta)
    sb = sig_mul(b.sig, tb)
    if sa == sb:
        return None
    if mord.key(sa) > mord.key(sb):
        return JPair(ta, a.id, sa, lcm)
    return JPair(tb, b.id, sb, lcm)


def principal_syzygy_lms(polys, mord: ModuleOrder) -> list[ModuleMonomial]:
    """Leading module monomials of the principal syzygies f_j e_i - f_i e_j,
    i < j, duplicates merged."""
    out: dict[ModuleMonomial, None] = {}
    lms = [f.lm for f in polys]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            cand_i = ModuleMonomial(i + 1, lms[j])
            cand_j = ModuleMonomial(j + 1, lms[i])
            s = cand_i if mord.key(cand_i) > mord.key(cand_j) else cand_j
            out[s] = None
    return list(out)


# ---------------------------------------------------------------------------
# module vectors (tuples of m polynomials)


def vec_zero(ring, m: int):
    return (ring.zero,) * m


def vec_unit(ring, m: int, i: int):
    one = ring.poly([((0,) * ring.n, 1)])
    return tuple(one if j == i - 1 else ring.zero for j in range(m))


def vec_mul_term(v, c: int, t: Mono):
    return tuple(comp.mul_term(c, t) for comp in v)


def vec_sub_scaled(v, c: int, t: Mono, w):
    return tuple(a - b.mul_term(c, t) for a, b in zip(v, w))


def vec_scale(v, c: int):
    return tuple(comp.scale(c) for comp in v)


def _mul_polys(f: Polynomial, g: Polynomial) -> Polynomial:
    # product as iterated term-times-polynomial, for vector recovery only
    ring = f.ring
    p = ring.field.p
    acc: dict[Mono, int] = {}
    for m, c in f.terms:
        for gm, gc in g.terms:
            nm = mono_mul(m, gm)
            nc = (acc.get(nm, 0) + c * gc) % p
            if nc:
                acc[nm] = nc
            else:
                acc.pop(nm, None)
    return ring.poly(acc.items())


def vec_koszul(p_first: Polynomial, v_first, p_second: Polynomial, v_second):
    """The Koszul combination p_second * v_first - p_first * v_second; its
    image under any homomorphism sending v to p is zero."""
    return tuple(
        _mul_polys(p_second, a) - _mul_polys(p_first, b)
        for a, b in zip(v_first, v_second)
    )


def phi(gens, v) -> Polynomial:
    """Image of the module vector v: sum of v_j * f_j, evaluated term by
    term so that no general polynomial product is needed."""
    ring = gens[0].ring
    acc: dict[Mono, int] = {}
    p = ring.field.p
    for comp, g in zip(v, gens):
        for m, c in comp.terms:
            for gm, gc in g.terms:
                nm = mono_mul(m, gm)
                nc = (acc.get(nm, 0) + c * gc) % p
                if nc:
                    acc[nm] = nc
                else:
                    acc.pop(nm, None)
    return ring.poly(acc.items())


def vector_lead(v, mord: ModuleOrder) -> ModuleMonomial | None:
    """Leading module monomial of v under mord; None for the zero vector."""
    best = None
    best_key = None
    for j, comp in enumerate(v):
        for m, _ in comp.terms:
            s = ModuleMonomial(j + 1, m)
            k = mord.key(s)
            if best_key is None or k > best_key:
                best, best_key = s, k
    return best


def format_module_monomial(ring, s: ModuleMonomial) -> str:
    mono = ring.format_monomial(s.mono)
    return f"{mono}*e{s.index}" if mono else f"e{s.index}"
