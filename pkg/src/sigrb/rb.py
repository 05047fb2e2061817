"""Signature-based Groebner basis computation over sig-poly pairs.

The engine processes S-pairs by increasing signature, discards those whose
multiplied generators are not the canonical rewriter of their signature, and
regular s-reduces the rest.  Syzygy signatures are kept in a
divisibility-minimal set ``H``.  Every pair leaves one :class:`Event` in the
run's log, which is what the statistics and audits are computed from.
"""

from __future__ import annotations

import bisect
import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .monomials import (
    Monomial,
    grevlex_key,
    mcoprime,
    mdiv,
    mdivides,
    mlcm,
    one,
    support_mask,
)
from .polynomials import Polynomial, pmul_term, padd, reduce_with
from .signatures import ModuleOrder, Signature, koszul_signature, sig_divides, sig_mul

REWRITE_ORDERS = ("add", "rat")

# event decisions
REDUCED = "reduced"
ZERO = "zero"
REWRITTEN_H = "rewritten-H"
REWRITTEN_G = "rewritten-G"
PC_REMOVED = "pc-removed"
SINGULAR = "singular"


@dataclass(frozen=True)
class LabeledPoly:
    sig: Signature
    poly: Polynomial
    ordinal: int

    @property
    def lm(self) -> Monomial:
        return self.poly.lm


@dataclass(frozen=True)
class SPair:
    """``a*alpha - b*beta``; ``left`` is the side carrying the signature.

    Seeds (the unit vectors ``e_i``) have ``right = None`` and ``left`` set to
    ``(1, -i)``.
    """

    id: int
    sig: Signature
    left: tuple[Monomial, int]
    right: Optional[tuple[Monomial, int]]
    lcm: Monomial

    @property
    def is_seed(self) -> bool:
        return self.right is None


@dataclass
class Event:
    pair: int
    sig: Signature
    decision: str
    stage: int = 0
    left: Optional[tuple[Monomial, int]] = None
    right: Optional[tuple[Monomial, int]] = None
    product_criterion: bool = False
    result: Optional[int] = None
    rewriter: Optional[tuple] = None
    trivial: bool = False

    def format(self, names: Sequence[str]) -> str:
        return (
            f"pair={self.pair} sig={self.sig.format(names)} "
            f"decision={self.decision} stage={self.stage}"
        )


@dataclass
class RunStats:
    zero_reductions: int = 0
    reductions: int = 0
    pc_fulfilled: int = 0
    pc_not_rewritable_h: int = 0
    pc_not_rewritable_hg: int = 0
    spairs_generated: int = 0
    spairs_singular: int = 0
    spairs_rewritten_h: int = 0
    spairs_rewritten_g: int = 0
    spairs_removed_pc: int = 0
    # pairs whose S-polynomial already vanishes before any reduction step;
    # their signatures go to H but they are not counted as zero reductions
    zero_spolys: int = 0


class SyzygySigSet:
    """Divisibility-minimal set of syzygy signatures, bucketed by index."""

    def __init__(self):
        self._by_index: dict[int, list[Monomial]] = {}

    def __len__(self) -> int:
        return sum(len(v) for v in self._by_index.values())

    def __iter__(self):
        for i in sorted(self._by_index):
            for m in self._by_index[i]:
                yield Signature(m, i)

    def __contains__(self, s: Signature) -> bool:
        return s.mono in self._by_index.get(s.index, ())

    def divisor_of(self, t: Signature) -> Optional[Signature]:
        for m in self._by_index.get(t.index, ()):
            if mdivides(m, t.mono):
                return Signature(m, t.index)
        return None

    def add(self, s: Signature) -> bool:
        """Insert ``s`` unless a member divides it; drop members it divides."""
        bucket = self._by_index.setdefault(s.index, [])
        for m in bucket:
            if mdivides(m, s.mono):
                return False
        bucket[:] = [m for m in bucket if not mdivides(s.mono, m)]
        bucket.append(s.mono)
        return True


class RB:
    """One run of the rewrite basis algorithm.

    ``update_syz`` enables the index-jump (pot, pot-rev) or lead-increase
    (d-pot, lt-pot) syzygy update after each insertion; ``product_criterion``
    switches pair elimination to the three-stage H / PC / G check.
    ``prefilter`` additionally drops pairs already rewritable at creation.
    ``koszul`` seeds H with the Koszul signatures of the input.

    ``lead_update`` picks the d-pot/lt-pot trigger: ``"all"`` adds the
    principal syzygies of gamma with every earlier element after each
    insertion, ``"input"`` only when gamma is a reduced input generator
    (signature ``e_k``).  The default is ``"all"`` for d-pot and ``"input"``
    for lt-pot.
    """

    def __init__(
        self,
        polys: Sequence[Polynomial],
        order: str = "pot",
        rewrite: str = "rat",
        update_syz: bool = False,
        product_criterion: bool = False,
        prefilter: bool = False,
        koszul: bool = False,
        lead_update: Optional[str] = None,
    ):
        if not polys:
            raise ValueError("empty input")
        if any(f.is_zero() for f in polys):
            raise ValueError("zero polynomial in the input")
        if rewrite not in REWRITE_ORDERS:
            raise ValueError(f"unknown rewrite order {rewrite!r}")
        self.input = list(polys)
        self.ring = polys[0].ring
        self.ctx = ModuleOrder.for_input(order, polys)
        self.rewrite = rewrite
        self.update_syz = update_syz
        self.product_criterion = product_criterion
        self.prefilter = prefilter
        self.koszul = koszul
        if lead_update is None:
            lead_update = "input" if self.ctx.kind == "lt-pot" else "all"
        if lead_update not in ("input", "all"):
            raise ValueError(f"unknown lead update trigger {lead_update!r}")
        self.lead_update = lead_update

        self.basis: list[LabeledPoly] = []
        self.H = SyzygySigSet()
        self.stats = RunStats()
        self.events: list[Event] = []
        self._by_index: dict[int, list[LabeledPoly]] = {}
        self._reducers: list[tuple[tuple, int, LabeledPoly]] = []
        self._queue: list = []
        self._ids = itertools.count()
        self._last_key = None

    # -- rewrite order ---------------------------------------------------

    def rewrite_less(self, a: LabeledPoly, b: LabeledPoly) -> bool:
        """True iff ``a`` is strictly below ``b`` in the rewrite order."""
        if a is b:
            return False
        if self.rewrite == "add":
            return a.ordinal < b.ordinal
        key = self.ctx.key
        ka = key(sig_mul(a.sig, b.lm))
        kb = key(sig_mul(b.sig, a.lm))
        if ka != kb:
            return ka < kb
        sa, sb = key(a.sig), key(b.sig)
        if sa != sb:
            return sa < sb
        return a.ordinal < b.ordinal

    def canonical_rewriter(self, t: Signature, scope: str = "both"):
        """Maximum of C_T: ``("H", sig)`` or ``("G", element)``, else None."""
        if scope in ("H", "both"):
            h = self.H.divisor_of(t)
            if h is not None:
                return ("H", h)
        if scope in ("G", "both"):
            best = None
            for beta in self._by_index.get(t.index, ()):
                if mdivides(beta.sig.mono, t.mono):
                    if best is None or self.rewrite_less(best, beta):
                        best = beta
            if best is not None:
                return ("G", best)
        return None

    def is_rewritable(self, side: tuple[Monomial, int], scope: str = "both"):
        """Return the canonical rewriter of ``a*alpha`` when it is not alpha."""
        a, k = side
        alpha = self.basis[k]
        t = sig_mul(alpha.sig, a)
        rw = self.canonical_rewriter(t, scope)
        if rw is None or (rw[0] == "G" and rw[1] is alpha):
            return None
        return rw

    def rewritable(self, pair: SPair):
        """Either side rewritable w.r.t. H, then either w.r.t. G."""
        sides = [s for s in (pair.left, pair.right) if s is not None and s[1] >= 0]
        for scope in ("H", "G"):
            for s in sides:
                rw = self.is_rewritable(s, scope)
                if rw is not None:
                    return rw, s
        return None, None

    # -- pairs -----------------------------------------------------------

    def make_spair(self, a: LabeledPoly, b: LabeledPoly) -> Optional[SPair]:
        lam = mlcm(a.lm, b.lm)
        ua, ub = mdiv(lam, a.lm), mdiv(lam, b.lm)
        sa, sb = sig_mul(a.sig, ua), sig_mul(b.sig, ub)
        if sa == sb:
            return None
        if self.ctx.key(sa) > self.ctx.key(sb):
            return SPair(next(self._ids), sa, (ua, a.ordinal), (ub, b.ordinal), lam)
        return SPair(next(self._ids), sb, (ub, b.ordinal), (ua, a.ordinal), lam)

    def _push(self, pair: SPair):
        key = (self.ctx.key(pair.sig), grevlex_key(pair.lcm), pair.id)
        heapq.heappush(self._queue, (key, pair))

    def pair_poly(self, pair: SPair) -> Polynomial:
        if pair.is_seed:
            return self.input[-pair.left[1] - 1]
        (ua, ka), (ub, kb) = pair.left, pair.right
        f, g = self.basis[ka].poly, self.basis[kb].poly
        return padd(pmul_term(f, ua), pmul_term(g, ub, -1))

    # -- reduction -------------------------------------------------------

    def s_reduce(self, start: Signature, f: Polynomial, basis=None) -> Polynomial:
        """Regular s-reduction of ``f`` in signature ``start``.

        A term ``t`` is reduced by ``b*beta`` with ``b*lm(beta) == t`` only if
        ``b*sig(beta) < start``; the smallest eligible lead wins.
        """
        key = self.ctx.key
        bound = key(start)
        if basis is None:
            cands = self._reducers
        else:
            cands = sorted((self._reducer_entry(b) for b in basis), key=lambda t: t[:2])

        def pick(m):
            d = sum(m)
            mask = support_mask(m)
            for gk, _, beta, bmask, lm in cands:
                if gk[0] > d:
                    break
                if bmask & ~mask or not mdivides(lm, m):
                    continue
                b = mdiv(m, lm)
                if key(sig_mul(beta.sig, b)) < bound:
                    return beta.poly, b
            return None

        return reduce_with(f, pick)

    @staticmethod
    def _reducer_entry(beta: LabeledPoly) -> tuple:
        lm = beta.lm
        return (grevlex_key(lm), beta.ordinal, beta, support_mask(lm), lm)

    # -- syzygies --------------------------------------------------------

    def _add_syzygy(self, s: Signature):
        self.H.add(s)

    def update_syzygies(self, gamma: LabeledPoly):
        if not self.update_syz:
            return
        others = self.basis[:-1]
        if self.ctx.kind in ("pot", "pot-rev"):
            k = gamma.sig.index
            prior = {a.sig.index for a in others}
            if not prior:
                return
            jump = k > max(prior) if self.ctx.kind == "pot" else k < min(prior)
            if jump:
                for a in others:
                    self._add_syzygy(Signature(a.lm, k))
        else:
            if self.lead_update == "input" and any(gamma.sig.mono):
                return
            for a in others:
                s1 = sig_mul(gamma.sig, a.lm)
                s2 = sig_mul(a.sig, gamma.lm)
                if s1 == s2:
                    # lead terms may cancel: the syzygy's signature is unknown
                    continue
                s = self.ctx.max(s1, s2)
                if self.H.divisor_of(s) is None:
                    self._add_syzygy(s)

    # -- main loop -------------------------------------------------------

    def _insert(self, sig: Signature, poly: Polynomial) -> LabeledPoly:
        gamma = LabeledPoly(sig, poly.monic(), len(self.basis))
        self.basis.append(gamma)
        self._by_index.setdefault(sig.index, []).append(gamma)
        for alpha in self.basis[:-1]:
            pair = self.make_spair(alpha, gamma)
            if pair is None:
                self.stats.spairs_singular += 1
                u = mdiv(mlcm(alpha.lm, gamma.lm), gamma.lm)
                self.events.append(
                    Event(next(self._ids), sig_mul(gamma.sig, u), SINGULAR, 0,
                          (u, gamma.ordinal),
                          (mdiv(mlcm(alpha.lm, gamma.lm), alpha.lm), alpha.ordinal))
                )
                continue
            self.stats.spairs_generated += 1
            if self.prefilter:
                rw, side = self.rewritable(pair)
                if rw is not None:
                    self._log_rewritten(pair, rw, side)
                    continue
            self._push(pair)
        bisect.insort(self._reducers, self._reducer_entry(gamma), key=lambda t: t[:2])
        return gamma

    def _log_rewritten(self, pair: SPair, rw, side):
        if rw[0] == "H":
            self.stats.spairs_rewritten_h += 1
            decision, stage, rewriter = REWRITTEN_H, 1, ("H", rw[1])
        else:
            self.stats.spairs_rewritten_g += 1
            beta = rw[1]
            t = sig_mul(self.basis[side[1]].sig, side[0])
            decision, stage = REWRITTEN_G, 3
            rewriter = ("G", beta.ordinal, mdiv(t.mono, beta.sig.mono))
        self.events.append(
            Event(pair.id, pair.sig, decision, stage, pair.left, pair.right,
                  self._is_pc(pair), rewriter=rewriter)
        )

    def _is_pc(self, pair: SPair) -> bool:
        if pair.is_seed:
            return False
        return mcoprime(self.basis[pair.left[1]].lm, self.basis[pair.right[1]].lm)

    def _skip(self, pair: SPair) -> bool:
        """Apply the configured criteria; log and return True when discarded."""
        pc = self._is_pc(pair)
        if pc:
            self.stats.pc_fulfilled += 1
        if not self.product_criterion or pair.is_seed:
            rw, side = self.rewritable(pair)
            if rw is None:
                return False
            self._log_rewritten(pair, rw, side)
            return True
        sides = [pair.left, pair.right]
        for s in sides:
            rw = self.is_rewritable(s, "H")
            if rw is not None:
                self._log_rewritten(pair, rw, s)
                return True
        if pc:
            self.stats.pc_not_rewritable_h += 1
            self.stats.spairs_removed_pc += 1
            g_rw = any(self.is_rewritable(s, "G") is not None for s in sides)
            if not g_rw:
                self.stats.pc_not_rewritable_hg += 1
            # a regular pair with coprime leads: its signature is that of the
            # principal syzygy of the two generators
            self._add_syzygy(pair.sig)
            self.events.append(
                Event(pair.id, pair.sig, PC_REMOVED, 2, pair.left, pair.right, True,
                      rewriter=("G-also" if g_rw else None))
            )
            return True
        for s in sides:
            rw = self.is_rewritable(s, "G")
            if rw is not None:
                self._log_rewritten(pair, rw, s)
                return True
        return False

    def run(self) -> RB:
        for i in range(1, self.ctx.m + 1):
            e = self.ctx.unit(i)
            lm = self.input[i - 1].lm
            self._push(SPair(next(self._ids), e, (one(self.ring.nvars), -i), None, lm))
        if self.koszul:
            for i in range(1, self.ctx.m + 1):
                for j in range(i + 1, self.ctx.m + 1):
                    self._add_syzygy(koszul_signature(self.ctx, i, j))

        while self._queue:
            key, pair = heapq.heappop(self._queue)
            assert self._last_key is None or key[0] >= self._last_key, "signature order violated"
            self._last_key = key[0]
            if self._skip(pair):
                continue
            f = self.pair_poly(pair)
            pc = self._is_pc(pair)
            if f.is_zero():
                self._add_syzygy(pair.sig)
                self.stats.zero_spolys += 1
                self.events.append(
                    Event(pair.id, pair.sig, ZERO, 0, pair.left, pair.right, pc, trivial=True)
                )
                continue
            h = self.s_reduce(pair.sig, f)
            self.stats.reductions += 1
            if h.is_zero():
                assert self.H.divisor_of(pair.sig) is None
                self._add_syzygy(pair.sig)
                self.stats.zero_reductions += 1
                self.events.append(Event(pair.id, pair.sig, ZERO, 0, pair.left, pair.right, pc))
            else:
                gamma = self._insert(pair.sig, h)
                self.events.append(
                    Event(pair.id, pair.sig, REDUCED, 0, pair.left, pair.right, pc, gamma.ordinal)
                )
                self.update_syzygies(gamma)
        return self

    # -- results ---------------------------------------------------------

    def polys(self) -> list[Polynomial]:
        return [a.poly for a in self.basis]


def rb_run(
    polys: Sequence[Polynomial],
    order: str = "pot",
    rewrite: str = "rat",
    update_syz: bool = False,
    product_criterion: bool = False,
    **kw,
):
    """Run the engine; returns ``(basis, H, stats)``."""
    eng = RB(polys, order, rewrite, update_syz, product_criterion, **kw).run()
    return eng.basis, eng.H, eng.stats
