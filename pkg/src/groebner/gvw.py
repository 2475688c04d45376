"""Signature-based Groebner basis computation (the GVW algorithm).

The driver keeps a strong Groebner basis G of labeled polynomials, the set H
of leading module monomials of known syzygies, and a priority queue of
J-pairs.  Each step pops the strategy-minimal J-pair, merges away queued
pairs that carry the same signature (only the one with the smallest product
leading monomial is reduced), applies the syzygy and cover criteria, and
regular-reduces the survivor.  A zero result contributes a new syzygy
leading monomial; a nonzero result extends the basis and spawns new J-pairs.

Reduction here is top-reduction only and is forbidden at equal signature;
canonical output is obtained by interreducing the polynomial parts
afterwards.  Provenance traces make full module vectors recoverable after
the run.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dfield

from .poly import (
    Polynomial,
    TermAccumulator,
    mono_deg,
    mono_div,
    mono_divides,
    mono_mul,
    monomials_up_to,
)
from .sig import (
    JPair,
    LabeledPoly,
    ModuleMonomial,
    ModuleOrder,
    ProvenanceTrace,
    make_jpair,
    module_order,
    phi,
    principal_syzygy_lms,
    sig_divides,
    sig_mul,
    vec_koszul,
    vec_scale,
    vec_sub_scaled,
    vec_unit,
    vector_lead,
)

SELECTION_STRATEGIES = ("min_sig", "min_degree", "fifo")


class StepLimitExceeded(RuntimeError):
    """Raised when a run performs more reductions than its step limit."""


@dataclass(slots=True)
class GvwStats:
    jpairs_created: int = 0
    jpairs_sig_rejected_at_create: int = 0
    jpairs_sig_rejected_at_pop: int = 0
    jpairs_cover_rejected: int = 0
    jpairs_dedup_rejected: int = 0
    super_reducible_discards: int = 0
    reductions: int = 0
    zero_reductions: int = 0

    @property
    def jpairs_sig_rejected(self) -> int:
        return self.jpairs_sig_rejected_at_create + self.jpairs_sig_rejected_at_pop

    def as_dict(self) -> dict:
        return {
            "jpairs_created": self.jpairs_created,
            "jpairs_sig_rejected": self.jpairs_sig_rejected,
            "jpairs_sig_rejected_at_create": self.jpairs_sig_rejected_at_create,
            "jpairs_sig_rejected_at_pop": self.jpairs_sig_rejected_at_pop,
            "jpairs_cover_rejected": self.jpairs_cover_rejected,
            "jpairs_dedup_rejected": self.jpairs_dedup_rejected,
            "super_reducible_discards": self.super_reducible_discards,
            "reductions": self.reductions,
            "zero_reductions": self.zero_reductions,
        }

    def block(self) -> str:
        return "\n".join(f"{k}={v}" for k, v in self.as_dict().items())


@dataclass(slots=True)
class SyzygyRecord:
    sig: ModuleMonomial
    trace: ProvenanceTrace
    vec: tuple | None = None


@dataclass(slots=True)
class GvwEvent:
    kind: str  # "extended" | "syzygy" | "rejected" | "empty"
    jpair: JPair | None = None
    element: LabeledPoly | None = None
    syzygy: SyzygyRecord | None = None
    reason: str | None = None


def syzygy_reject(sig: ModuleMonomial, syzygy_lms) -> bool:
    """True iff some known syzygy leading monomial divides sig."""
    return any(
        w.index == sig.index and mono_divides(w.mono, sig.mono) for w in syzygy_lms
    )


def cover_reject(jp: JPair, G) -> bool:
    """Cover form of the super-reducibility rejection: discard the pair when
    a basis element with dividing signature promises a strictly smaller
    reduction outcome."""
    if not G:
        return False
    ring = G[0].poly.ring
    key = ring.order.key
    jkey = key(jp.prod_lm)
    idx, mono = jp.sig
    for lp in G:
        s = lp.sig
        if s.index == idx and mono_divides(s.mono, mono):
            q = mono_div(mono, s.mono)
            if key(mono_mul(q, lp.poly.lm)) < jkey:
                return True
    return False


def super_reducible(sig: ModuleMonomial, h, G) -> bool:
    """True when some basis element reaches lm(h) at exactly the signature
    sig: one more reduction step would be possible if equal-signature steps
    were allowed.  Such an h re-derives a leading monomial the basis already
    provides at this signature level and is discarded instead of appended.
    """
    hlm = h.lm
    idx, mono = sig
    for lp in G:
        s = lp.sig
        if s.index == idx and mono_divides(lp.poly.lm, hlm):
            t = mono_div(hlm, lp.poly.lm)
            if mono_mul(s.mono, t) == mono:
                return True
    return False


def regular_reduce(sig: ModuleMonomial, f: Polynomial, G, mord: ModuleOrder):
    """Top-reduce f by basis elements whose shifted signature is strictly
    below sig; reductions at equal signature would change the signature and
    are never taken.  Ties between eligible reducers go to the smallest
    leading monomial, then the smallest id.

    Returns (result, steps, scale): the monic residue (or zero), the list of
    (coeff, monomial, reducer_id) steps taken, and the scalar applied at the
    end to make the result monic.
    """
    ring = f.ring
    key = ring.order.key
    skey = mord.key(sig)
    p = ring.field.p
    acc = TermAccumulator(ring, f.terms)
    steps: list[tuple] = []
    while True:
        lead = acc.pop_lead()
        if lead is None:
            return ring.zero, steps, 1
        m, c = lead
        best = None
        best_key = None
        for lp in G:
            glm = lp.poly.lm
            if mono_divides(glm, m):
                t = tuple(x - y for x, y in zip(m, glm))
                if mord.key(ModuleMonomial(lp.sig.index, mono_mul(lp.sig.mono, t))) < skey:
                    k = (key(glm), lp.id)
                    if best_key is None or k < best_key:
                        best, best_key = (t, lp), k
        if best is None:
            acc.add_term(c, m)
            break
        t, lp = best
        # basis polynomials are monic, so the step coefficient is just c
        acc.sub_scaled(c, t, lp.poly.terms[1:])
        steps.append((c, t, lp.id))
    result = ring.poly(acc.items())
    scale = 1
    if result.lc != 1:
        scale = ring.field.inv(result.lc)
        result = result.scale(scale)
    return result, steps, scale


class GvwState:
    """All mutable state of one run: basis, syzygy set, J-pair queue and
    statistics.  Single-threaded; inputs are immutable."""

    def __init__(
        self,
        ring,
        mord: ModuleOrder,
        gens,
        *,
        strategy: str = "min_sig",
        dedup: bool = True,
        use_syzygy: bool = True,
        use_cover: bool = True,
        track_vectors: bool = False,
        step_limit: int = 10**6,
    ):
        strategy = strategy.replace("-", "_")
        if strategy not in SELECTION_STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}; expected one of {SELECTION_STRATEGIES}")
        self.ring = ring
        self.mord = mord
        self.gens = list(gens)
        self.strategy = strategy
        self.dedup = dedup
        self.use_syzygy = use_syzygy
        self.use_cover = use_cover
        self.track_vectors = track_vectors
        self.step_limit = step_limit
        self.G: list[LabeledPoly] = []
        self.H: list[SyzygyRecord] = []
        self.stats = GvwStats()
        self.popped_sig_keys: list = []
        self._h_monos: dict[int, list] = {}
        self._heap: list = []
        self._live: dict[int, JPair] = {}
        self._by_sig: dict[ModuleMonomial, set[int]] = {}
        self._counter = 0
        self._vectors: list[tuple] = []  # parallel to G when track_vectors

    # -- syzygy bookkeeping ------------------------------------------------

    def _sig_rejected(self, sig: ModuleMonomial) -> bool:
        monos = self._h_monos.get(sig.index)
        if not monos:
            return False
        m = sig.mono
        return any(mono_divides(w, m) for w in monos)

    def _add_syzygy(self, rec: SyzygyRecord):
        self.H.append(rec)
        self._h_monos.setdefault(rec.sig.index, []).append(rec.sig.mono)

    def syzygy_lms(self) -> list[ModuleMonomial]:
        return [rec.sig for rec in self.H]

    def minimal_syzygy_lms(self) -> list[ModuleMonomial]:
        """Divisibility-minimal elements of the syzygy leading monomials."""
        sigs = sorted(set(self.syzygy_lms()), key=lambda s: (s.index, mono_deg(s.mono), s.mono))
        out: list[ModuleMonomial] = []
        for s in sigs:
            if not any(sig_divides(t, s) for t in out):
                out.append(s)
        return out

    def basis_polys(self) -> list[Polynomial]:
        return [lp.poly for lp in self.G]

    # -- queue -------------------------------------------------------------

    def _priority(self, jp: JPair):
        if self.strategy == "min_sig":
            return (self.mord.key(jp.sig), self.ring.order.key(jp.prod_lm), jp.parent_id)
        if self.strategy == "min_degree":
            return (
                mono_deg(jp.prod_lm),
                self.ring.order.key(jp.prod_lm),
                self.mord.key(jp.sig),
                jp.parent_id,
            )
        return (self._counter,)

    def _push(self, jp: JPair):
        eid = self._counter
        self._counter += 1
        heapq.heappush(self._heap, (self._priority(jp), eid, jp))
        self._live[eid] = jp
        self._by_sig.setdefault(jp.sig, set()).add(eid)

    def _remove(self, eid: int, jp: JPair):
        del self._live[eid]
        peers = self._by_sig.get(jp.sig)
        if peers is not None:
            peers.discard(eid)
            if not peers:
                del self._by_sig[jp.sig]

    def _pop(self) -> JPair | None:
        while self._heap:
            _, eid, jp = heapq.heappop(self._heap)
            if eid in self._live:
                self._remove(eid, jp)
                return jp
        return None

    def queue_size(self) -> int:
        return len(self._live)

    # -- basis extension ---------------------------------------------------

    def _spawn_jpairs(self, lp: LabeledPoly):
        for other in self.G:
            jp = make_jpair(lp, other, self.mord)
            if jp is None:
                continue
            self.stats.jpairs_created += 1
            if self.use_syzygy and self._sig_rejected(jp.sig):
                self.stats.jpairs_sig_rejected_at_create += 1
                continue
            self._push(jp)

    def _add_koszul_syzygies(self, lp: LabeledPoly):
        # The Koszul syzygy poly(b)*vec(a) - poly(a)*vec(b) of two basis
        # elements maps to zero, so its leading module monomial feeds the
        # syzygy criterion exactly like a discovered one.  Only a strict
        # maximum is a certain lead (a tie could cancel); entries divisible
        # by known ones add no rejection power and are skipped.
        mkey = self.mord.key
        for other in self.G:
            a = sig_mul(lp.sig, other.poly.lm)
            b = sig_mul(other.sig, lp.poly.lm)
            if a == b:
                continue
            if mkey(a) > mkey(b):
                s, first, second = a, lp.id, other.id
            else:
                s, first, second = b, other.id, lp.id
            if self._sig_rejected(s):
                continue
            rec = SyzygyRecord(s, ProvenanceTrace(("koszul", first, second)))
            if self.track_vectors:
                rec.vec = self._expand_trace(rec.trace)
                if not phi(self.gens, rec.vec).is_zero:
                    raise RuntimeError(f"koszul vector at {s} has nonzero image")
                if vector_lead(rec.vec, self.mord) != s:
                    raise RuntimeError("koszul vector lead mismatch")
            self._add_syzygy(rec)

    def _append_element(self, lp: LabeledPoly, vec: tuple | None):
        self.G.append(lp)
        if self.track_vectors:
            self._vectors.append(vec)
        self._add_koszul_syzygies(lp)
        self._spawn_jpairs(lp)

    # -- vector tracking (test mode) ----------------------------------------

    def _expand_trace(self, trace: ProvenanceTrace) -> tuple:
        m = len(self.gens)
        kind = trace.origin[0]
        if kind == "gen":
            v = vec_unit(self.ring, m, trace.origin[1])
        elif kind == "jpair":
            _, t, pid = trace.origin
            v = tuple(c.mul_term(1, t) for c in self._vectors[pid])
        elif kind == "psyz":
            _, i, j = trace.origin
            v = list(vec_unit(self.ring, m, i))
            v[i - 1] = self.gens[j - 1]
            v[j - 1] = -self.gens[i - 1]
            v = tuple(v)
        elif kind == "koszul":
            _, fid, sid = trace.origin
            v = vec_koszul(
                self.G[fid].poly, self._vectors[fid], self.G[sid].poly, self._vectors[sid]
            )
        else:  # pragma: no cover - trace origins are fixed above
            raise ValueError(f"unknown trace origin {trace.origin!r}")
        for c, t, rid in trace.steps:
            v = vec_sub_scaled(v, c, t, self._vectors[rid])
        if trace.scale != 1:
            v = vec_scale(v, trace.scale)
        return v

    def _check_vector(self, vec: tuple, sig: ModuleMonomial, poly: Polynomial):
        image = phi(self.gens, vec)
        if image != poly:
            raise RuntimeError(f"vector image mismatch at signature {sig}: {image} != {poly}")
        lead = vector_lead(vec, self.mord)
        if lead != sig:
            raise RuntimeError(f"vector lead mismatch: {lead} != {sig}")

    # -- one step ------------------------------------------------------------

    def step(self) -> GvwEvent:
        jp = self._pop()
        if jp is None:
            return GvwEvent("empty")

        if self.dedup:
            peers = self._by_sig.get(jp.sig)
            if peers:
                key = self.ring.order.key
                group = [(key(jp.prod_lm), jp.parent_id, None, jp)]
                for eid in list(peers):
                    other = self._live[eid]
                    group.append((key(other.prod_lm), other.parent_id, eid, other))
                group.sort(key=lambda entry: (entry[0], entry[1]))
                _, _, keep_eid, kept = group[0]
                for _, _, eid, other in group[1:]:
                    if eid is not None:
                        self._remove(eid, other)
                    self.stats.jpairs_dedup_rejected += 1
                if keep_eid is not None:
                    self._remove(keep_eid, kept)
                jp = kept

        self.popped_sig_keys.append(self.mord.key(jp.sig))

        if self.use_syzygy and self._sig_rejected(jp.sig):
            self.stats.jpairs_sig_rejected_at_pop += 1
            return GvwEvent("rejected", jpair=jp, reason="syzygy")
        if self.use_cover and cover_reject(jp, self.G):
            self.stats.jpairs_cover_rejected += 1
            return GvwEvent("rejected", jpair=jp, reason="cover")

        if self.stats.reductions >= self.step_limit:
            raise StepLimitExceeded(
                f"step limit of {self.step_limit} reductions reached"
            )
        self.stats.reductions += 1
        parent = self.G[jp.parent_id]
        product = parent.poly.mul_term(1, jp.t)
        result, steps, scale = regular_reduce(jp.sig, product, self.G, self.mord)
        trace = ProvenanceTrace(("jpair", jp.t, jp.parent_id), steps, scale)

        if result.is_zero:
            self.stats.zero_reductions += 1
            rec = SyzygyRecord(jp.sig, trace)
            if self.track_vectors:
                rec.vec = self._expand_trace(trace)
                image = phi(self.gens, rec.vec)
                if not image.is_zero:
                    raise RuntimeError(f"syzygy vector at {jp.sig} has nonzero image {image}")
                if vector_lead(rec.vec, self.mord) != jp.sig:
                    raise RuntimeError("syzygy vector lead mismatch")
            self._add_syzygy(rec)
            return GvwEvent("syzygy", jpair=jp, syzygy=rec)

        if super_reducible(jp.sig, result, self.G):
            self.stats.super_reducible_discards += 1
            return GvwEvent("rejected", jpair=jp, reason="super_reducible")

        lp = LabeledPoly(jp.sig, result, trace, len(self.G))
        vec = None
        if self.track_vectors:
            vec = self._expand_trace(trace)
            self._check_vector(vec, lp.sig, lp.poly)
        self._append_element(lp, vec)
        return GvwEvent("extended", jpair=jp, element=lp)

    def run(self) -> "GvwState":
        while self.step().kind != "empty":
            pass
        return self


def gvw_init(
    polys,
    *,
    sig_order: str | ModuleOrder = "schreyer",
    strategy: str = "min_sig",
    dedup: bool = True,
    use_syzygy: bool = True,
    use_cover: bool = True,
    track_vectors: bool = False,
    step_limit: int = 10**6,
) -> GvwState:
    """Set up a run: generators become basis elements with unit-vector
    signatures, H starts from the principal syzygy leading monomials, and
    the queue holds the pairwise J-pairs that survive the syzygy criterion.
    """
    gens = [f.monic() for f in polys]
    if not gens or any(f.is_zero for f in gens):
        raise ValueError("generators must be nonzero (strip zeros first)")
    ring = gens[0].ring
    mord = (
        sig_order
        if isinstance(sig_order, ModuleOrder)
        else module_order(sig_order, ring.order, [f.lm for f in gens])
    )
    state = GvwState(
        ring,
        mord,
        gens,
        strategy=strategy,
        dedup=dedup,
        use_syzygy=use_syzygy,
        use_cover=use_cover,
        track_vectors=track_vectors,
        step_limit=step_limit,
    )
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            s_i = ModuleMonomial(i + 1, gens[j].lm)
            s_j = ModuleMonomial(j + 1, gens[i].lm)
            s = s_i if mord.key(s_i) > mord.key(s_j) else s_j
            if not any(rec.sig == s for rec in state.H):
                rec = SyzygyRecord(s, ProvenanceTrace(("psyz", i + 1, j + 1)))
                if track_vectors:
                    rec.vec = state._expand_trace(rec.trace)
                state._add_syzygy(rec)
    for i, f in enumerate(gens):
        lp = LabeledPoly(ModuleMonomial(i + 1, (0,) * ring.n), f, ProvenanceTrace(("gen", i + 1)), i)
        vec = None
        if track_vectors:
            vec = state._expand_trace(lp.trace)
            state._check_vector(vec, lp.sig, lp.poly)
        state.G.append(lp)
        if track_vectors:
            state._vectors.append(vec)
    # pairwise J-pairs of the generators, syzygy-filtered at creation
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            jp = make_jpair(state.G[i], state.G[j], mord)
            if jp is None:
                continue
            state.stats.jpairs_created += 1
            if use_syzygy and state._sig_rejected(jp.sig):
                state.stats.jpairs_sig_rejected_at_create += 1
                continue
            state._push(jp)
    return state


def gvw_step(state: GvwState) -> GvwEvent:
    return state.step()


def gvw_run(polys, **options) -> GvwState:
    """Run the algorithm to completion and return the final state: G is a
    strong Groebner basis of the input ideal (so its polynomial parts form a
    Groebner basis), H covers the syzygy leading monomials, stats count the
    pair traffic."""
    return gvw_init(polys, **options).run()


# ---------------------------------------------------------------------------
# recovering full module vectors from traces


def recover_vector(state: GvwState, item):
    """Expand provenance traces into the full module vector of a basis
    element (given a LabeledPoly, its id, or a SyzygyRecord).

    The result v satisfies phi(v) == stored polynomial (zero for syzygies)
    and lead(v) == stored signature.
    """
    memo: dict[int, tuple] = {}

    def vector_of(i: int) -> tuple:
        if i not in memo:
            memo[i] = expand(state.G[i].trace)
        return memo[i]

    def expand(trace: ProvenanceTrace) -> tuple:
        m = len(state.gens)
        kind = trace.origin[0]
        if kind == "gen":
            v = vec_unit(state.ring, m, trace.origin[1])
        elif kind == "jpair":
            _, t, pid = trace.origin
            v = tuple(c.mul_term(1, t) for c in vector_of(pid))
        elif kind == "psyz":
            _, i, j = trace.origin
            v = list(vec_unit(state.ring, m, i))
            v[i - 1] = state.gens[j - 1]
            v[j - 1] = -state.gens[i - 1]
            v = tuple(v)
        elif kind == "koszul":
            _, fid, sid = trace.origin
            v = vec_koszul(
                state.G[fid].poly, vector_of(fid), state.G[sid].poly, vector_of(sid)
            )
        else:
            raise ValueError(f"unknown trace origin {trace.origin!r}")
        for c, t, rid in trace.steps:
            v = vec_sub_scaled(v, c, t, vector_of(rid))
        if trace.scale != 1:
            v = vec_scale(v, trace.scale)
        return v

    if isinstance(item, LabeledPoly):
        return vector_of(item.id)
    if isinstance(item, SyzygyRecord):
        return expand(item.trace)
    if isinstance(item, int):
        return vector_of(item)
    raise TypeError(f"expected a LabeledPoly, SyzygyRecord or id, got {type(item)!r}")


# ---------------------------------------------------------------------------
# degree-truncated enumeration oracle


def signature_enumerate(polys, deg_bound: int, sig_order: str | ModuleOrder = "schreyer"):
    """Enumerate module monomials t*e_j with deg(t) <= deg_bound in
    ascending signature order, maintaining an echelon basis of their images;
    a linearly dependent image marks its module monomial as a kernel leading
    monomial, whose multiples are skipped from then on.

    Returns the divisibility-minimal recorded set.  Exponential in the
    bound; oracle use only.
    """
    gens = [f.monic() for f in polys]
    if not gens or any(f.is_zero for f in gens):
        raise ValueError("generators must be nonzero")
    ring = gens[0].ring
    mord = (
        sig_order
        if isinstance(sig_order, ModuleOrder)
        else module_order(sig_order, ring.order, [f.lm for f in gens])
    )
    items = [
        ModuleMonomial(j + 1, t)
        for j in range(len(gens))
        for t in monomials_up_to(ring.n, deg_bound)
    ]
    items.sort(key=mord.key)
    kernel: list[ModuleMonomial] = []
    rows: dict[tuple, tuple] = {}  # pivot monomial -> monic row tail
    inv = ring.field.inv
    p = ring.field.p
    for s in items:
        if any(k.index == s.index and mono_divides(k.mono, s.mono) for k in kernel):
            continue
        image = gens[s.index - 1].mul_term(1, s.mono)
        acc = TermAccumulator(ring, image.terms)
        while True:
            lead = acc.pop_lead()
            if lead is None:
                kernel.append(s)
                break
            m, c = lead
            tail = rows.get(m)
            if tail is None:
                ci = inv(c)
                rows[m] = tuple((tm, tc * ci % p) for tm, tc in acc.items())
                break
            acc.sub_scaled(c, (0,) * ring.n, tail)
    # ascending enumeration makes the recorded set minimal already; keep the
    # contract explicit.
    assert all(
        not (i != j and sig_divides(a, b))
        for i, a in enumerate(kernel)
        for j, b in enumerate(kernel)
    )
    return kernel
