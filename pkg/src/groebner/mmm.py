"""Groebner bases of kernels of finite-dimensional linear maps on k[X].

Given a k-linear map L from the polynomial ring into a finite-dimensional
vector space, mmm_kernel_gb enumerates candidate monomials in ascending
order, keeps an echelon basis of their images with full preimages carried
along, and emits a kernel polynomial whenever an image turns out linearly
dependent; all multiples of an emitted leading monomial are skipped forever.
Specializing L to "normal form modulo a Groebner basis" gives the FGLM
change of ordering for 0-dimensional ideals.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable

from .poly import (
    Mono,
    MonomialOrder,
    PolyRing,
    Polynomial,
    get_order,
    interreduce,
    mono_divides,
    mono_is_one,
    normal_form,
)


class NotZeroDimensional(ValueError):
    """The quotient ring is not a finite-dimensional vector space."""


@dataclass(slots=True)
class LinearMap:
    """Evaluation contract: eval(monomial) -> sparse coordinate dict
    {position: coeff} over GF(p), for positions in range(dim).  The termwise
    extension to polynomials must be linear, and eval must be pure."""

    eval: Callable[[Mono], dict[int, int]]
    dim: int


@dataclass(slots=True)
class EchelonRow:
    pivot: int
    vec: dict[int, int]  # fully reduced against all other rows; vec[pivot] == 1
    pre_lead: Mono
    pre: dict[Mono, int]  # full preimage; L(pre) == vec


def quotient_basis(gb, ring: PolyRing | None = None) -> list[Mono]:
    """Monomials under the staircase of a Groebner basis, ascending in the
    ring order.  Raises NotZeroDimensional when the set is infinite, i.e.
    when some variable has no pure power among the leading monomials."""
    gb = [g for g in gb if not g.is_zero]
    if not gb:
        raise ValueError("empty basis")
    ring = ring or gb[0].ring
    lms = [g.lm for g in gb]
    if any(mono_is_one(m) for m in lms):
        return []  # unit ideal: zero quotient
    for i in range(ring.n):
        if not any(all(e == 0 for k, e in enumerate(m) if k != i) and m[i] > 0 for m in lms):
            raise NotZeroDimensional(
                f"no pure power of {ring.names[i]} among the leading monomials"
            )
    one = (0,) * ring.n
    seen = {one}
    stack = [one]
    out = []
    while stack:
        m = stack.pop()
        out.append(m)
        for i in range(ring.n):
            child = m[:i] + (m[i] + 1,) + m[i + 1 :]
            if child in seen:
                continue
            seen.add(child)
            if not any(mono_divides(lm, child) for lm in lms):
                stack.append(child)
    out.sort(key=ring.order.key)
    return out


def nf_map_from_gb(gb, ring: PolyRing | None = None) -> LinearMap:
    """Linear map sending a monomial to the coordinates of its normal form
    modulo gb on the quotient monomial basis."""
    gb = [g for g in gb if not g.is_zero]
    ring = ring or gb[0].ring
    basis = quotient_basis(gb, ring)
    pos = {m: i for i, m in enumerate(basis)}

    def evaluate(m: Mono) -> dict[int, int]:
        nf = normal_form(ring.poly([(m, 1)]), gb)
        return {pos[mm]: c for mm, c in nf.terms}

    return LinearMap(evaluate, len(basis))


def mmm_kernel_gb(L: LinearMap, ring: PolyRing) -> list[Polynomial]:
    """Reduced Groebner basis of Kernel(L) w.r.t. the order of ring.

    The frontier starts at 1; children x_k * m are enqueued only for
    independent m, so at most dim + n*dim monomials are ever touched even
    under non-degree orders.
    """
    p = ring.field.p
    inv = ring.field.inv
    key = ring.order.key
    one = (0,) * ring.n
    frontier: list[tuple] = [(key(one), one)]
    seen = {one}
    staircase: list[Mono] = []
    rows: list[EchelonRow] = []
    out: list[Polynomial] = []
    while frontier:
        _, m = heapq.heappop(frontier)
        if any(mono_divides(s, m) for s in staircase):
            continue
        vec = dict(L.eval(m))
        pre = {m: 1}
        for row in rows:
            c = vec.get(row.pivot)
            if not c:
                continue
            for k, v in row.vec.items():
                nv = (vec.get(k, 0) - c * v) % p
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            for k, v in row.pre.items():
                nv = (pre.get(k, 0) - c * v) % p
                if nv:
                    pre[k] = nv
                else:
                    pre.pop(k, None)
        if not vec:
            out.append(ring.poly(pre.items()))
            staircase.append(m)
            continue
        pivot = max(vec)
        c0 = inv(vec[pivot])
        if c0 != 1:
            vec = {k: v * c0 % p for k, v in vec.items()}
            pre = {k: v * c0 % p for k, v in pre.items()}
        # keep the basis fully echelonized: clear the new pivot everywhere
        for row in rows:
            c = row.vec.get(pivot)
            if not c:
                continue
            for k, v in vec.items():
                nv = (row.vec.get(k, 0) - c * v) % p
                if nv:
                    row.vec[k] = nv
                else:
                    row.vec.pop(k, None)
            for k, v in pre.items():
                nv = (row.pre.get(k, 0) - c * v) % p
                if nv:
                    row.pre[k] = nv
                else:
                    row.pre.pop(k, None)
        rows.append(EchelonRow(pivot, vec, m, pre))
        for i in range(ring.n):
            child = m[:i] + (m[i] + 1,) + m[i + 1 :]
            if child not in seen:
                seen.add(child)
                if not any(mono_divides(s, child) for s in staircase):
                    heapq.heappush(frontier, (key(child), child))
    out.sort(key=lambda f: (key(f.lm), f.lm), reverse=True)
    return out


def fglm(gb, to_order: str | MonomialOrder) -> list[Polynomial]:
    """Change the order of a Groebner basis of a 0-dimensional ideal.

    Equivalent to mmm_kernel_gb over the normal-form map of the source
    basis; with the source order it degenerates to interreduction.
    """
    gb = [g for g in gb if not g.is_zero]
    if not gb:
        raise ValueError("empty basis")
    src_ring = gb[0].ring
    to_order = get_order(to_order)
    if to_order == src_ring.order:
        return interreduce(gb)
    quotient_basis(gb, src_ring)  # raise early when not 0-dimensional
    dst_ring = PolyRing(src_ring.field, src_ring.names, to_order)
    return mmm_kernel_gb(nf_map_from_gb(gb, src_ring), dst_ring)
