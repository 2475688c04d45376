"""Classical Buchberger algorithm, used as the independent oracle.

Pairs are selected by the smallest lcm under the active order (the normal
selection strategy; for graded orders this is exactly smallest-degree
first).  With use_criteria=True the pair set is pruned Gebauer-Moller style
(product and chain criteria applied during pair updates); with
use_criteria=False every pair is reduced, which serves as the ground-truth
variant the criteria are validated against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import (
    Polynomial,
    interreduce,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    normal_form,
    s_polynomial,
)


@dataclass(slots=True)
class BuchbergerStats:
    pairs_considered: int = 0
    pairs_discarded: int = 0
    zero_reductions: int = 0

    def block(self) -> str:
        return "\n".join(
            f"{k}={getattr(self, k)}"
            for k in ("pairs_considered", "pairs_discarded", "zero_reductions")
        )


def _pair_sort_key(order, basis):
    def k(pair):
        i, j = pair
        return (order.key(mono_lcm(basis[i].lm, basis[j].lm)), i, j)

    return k


def _prereduce(polys):
    """Iterated mutual reduction of the inputs; drops zeros and usually
    shrinks the run a lot (e.g. a linear generator eliminates its leading
    variable from the others)."""
    cur = [f.monic() for f in polys if not f.is_zero]
    while True:
        nxt = []
        for i, f in enumerate(cur):
            r = normal_form(f, cur[:i])
            if not r.is_zero:
                nxt.append(r.monic())
        if nxt == cur:
            return cur
        cur = nxt


def buchberger(polys, use_criteria: bool = True):
    """Groebner basis of the ideal generated by polys (raw, not
    interreduced).  Returns (basis, stats)."""
    nonzero = _prereduce(polys)
    if not nonzero:
        raise ValueError("no nonzero generators")
    if use_criteria:
        return _buchberger_gm(nonzero)
    return _buchberger_naive(nonzero)


def _buchberger_naive(gens):
    ring = gens[0].ring
    stats = BuchbergerStats()
    basis: list[Polynomial] = []
    pairs: list[tuple[int, int]] = []
    for f in gens:
        for i in range(len(basis)):
            pairs.append((i, len(basis)))
        basis.append(f)
    keyf = _pair_sort_key(ring.order, basis)
    while pairs:
        pairs.sort(key=keyf)
        i, j = pairs.pop(0)
        stats.pairs_considered += 1
        h = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if h.is_zero:
            stats.zero_reductions += 1
            continue
        h = h.monic()
        for k in range(len(basis)):
            pairs.append((k, len(basis)))
        basis.append(h)
    return basis, stats


def _buchberger_gm(gens):
    # Gebauer-Moller pair update; mirrors the classical GROEBNERNEW2 layout.
    ring = gens[0].ring
    order = ring.order
    stats = BuchbergerStats()
    store: list[Polynomial] = []  # every element ever created
    active: set[int] = set()
    pairs: set[tuple[int, int]] = set()

    def update(ih: int):
        nonlocal active, pairs
        h = store[ih]
        mh = h.lm

        new_pairs = set()
        cand = set(active)
        while cand:
            ig = cand.pop()
            mg = store[ig].lm
            lcm_hg = mono_lcm(mh, mg)

            def lcm_divides(ip):
                return mono_divides(mono_lcm(mh, store[ip].lm), lcm_hg)

            if mono_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ip) for ip in cand)
                and not any(lcm_divides(pr[1]) for pr in new_pairs)
            ):
                new_pairs.add((ih, ig))

        kept_new = set()
        while new_pairs:
            ih2, ig = new_pairs.pop()
            mg = store[ig].lm
            if mono_mul(mh, mg) != mono_lcm(mh, mg):
                kept_new.add((min(ih2, ig), max(ih2, ig)))
            else:
                stats.pairs_discarded += 1  # product criterion

        kept_old = set()
        while pairs:
            ig1, ig2 = pairs.pop()
            m1, m2 = store[ig1].lm, store[ig2].lm
            lcm12 = mono_lcm(m1, m2)
            if (
                not mono_divides(mh, lcm12)
                or mono_lcm(m1, mh) == lcm12
                or mono_lcm(m2, mh) == lcm12
            ):
                kept_old.add((ig1, ig2))
            else:
                stats.pairs_discarded += 1  # chain criterion
        pairs = kept_old | kept_new

        active = {ig for ig in active if not mono_divides(mh, store[ig].lm)}
        active.add(ih)

    for f in gens:
        store.append(f)
        update(len(store) - 1)

    keyf = _pair_sort_key(ring.order, store)
    while pairs:
        pr = min(pairs, key=keyf)
        pairs.discard(pr)
        i, j = pr
        stats.pairs_considered += 1
        reducers = sorted(active, key=lambda k: order.key(store[k].lm))
        h = normal_form(s_polynomial(store[i], store[j]), [store[k] for k in reducers])
        if h.is_zero:
            stats.zero_reductions += 1
            continue
        store.append(h.monic())
        update(len(store) - 1)

    basis = sorted(active, key=lambda k: order.key(store[k].lm), reverse=True)
    return [store[k] for k in basis], stats


def groebner_witness(polys):
    """First S-polynomial that does not reduce to zero, as a tuple
    (i, j, s_poly, remainder); None when polys is a Groebner basis.

    Every pair is checked by brute force: this is the oracle the faster
    algorithms are judged against, so it applies no pair criteria at all.
    """
    basis = [f for f in polys if not f.is_zero]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = s_polynomial(basis[i], basis[j])
            h = normal_form(s, basis)
            if not h.is_zero:
                return (i, j, s, h)
    return None


def is_groebner(polys) -> bool:
    """True iff every S-polynomial of polys reduces to zero by polys."""
    return groebner_witness(polys) is None


__all__ = [
    "BuchbergerStats",
    "buchberger",
    "groebner_witness",
    "interreduce",
    "is_groebner",
]
