"""Buchberger's algorithm with the Gebauer-Moeller pair update.

The update follows the classic installation: new pairs ``(g, h)`` are thinned
out by lcm divisibility (label ``M`` for a proper divisor, ``F`` for an equal
lcm), old pairs are dropped when the new lead monomial sits strictly inside
their lcm (label ``B``), and the Product criterion is applied last (label
``PC``).  Every chain-type discard keeps its witness so that the identity

    spoly(f, g) = u * spoly(f, h) + v * spoly(h, g)

can be audited afterwards.
"""

from __future__ import annotations

import bisect
import heapq
import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .monomials import (
    Monomial,
    format_monomial,
    grevlex_key,
    mcoprime,
    mdiv,
    mdivides,
    mlcm,
    mmul,
    support_mask,
)
from .polynomials import Polynomial, reduce_with, spoly

# pair decisions
REDUCED = "reduced"
ZERO = "zero"
CHAIN_OLD = "B"
CHAIN_NEW = "M"
CHAIN_EQUAL = "F"
PRODUCT = "PC"


def product_criterion(f: Polynomial, g: Polynomial) -> bool:
    """Lead monomials coprime, i.e. ``lcm(lt f, lt g) == lt f * lt g``."""
    return mcoprime(f.lm, g.lm)


@dataclass
class ClassicPair:
    i: int
    j: int
    lcm: Monomial
    id: int = 0
    alive: bool = True

    def __post_init__(self):
        if self.i > self.j:
            self.i, self.j = self.j, self.i


@dataclass
class GMEvent:
    pair: int
    i: int
    j: int
    lcm: Monomial
    decision: str
    witness: Optional[int] = None
    result: Optional[int] = None
    trivial: bool = False

    def format(self, names: Sequence[str]) -> str:
        return (
            f"pair={self.pair} sig=- decision={self.decision} stage=0 "
            f"lcm={format_monomial(self.lcm, names)} i={self.i} j={self.j}"
        )


@dataclass
class GMStats:
    zero_reductions: int = 0
    reductions: int = 0
    pairs_generated: int = 0
    zero_spolys: int = 0
    removed: dict = field(
        default_factory=lambda: {CHAIN_OLD: 0, CHAIN_NEW: 0, CHAIN_EQUAL: 0, PRODUCT: 0}
    )


class Buchberger:
    """One Buchberger run; ``basis`` keeps every inserted polynomial (monic),
    ``active`` marks those whose lead is not divisible by a later lead."""

    def __init__(self, polys: Sequence[Polynomial]):
        if not polys:
            raise ValueError("empty input")
        if any(f.is_zero() for f in polys):
            raise ValueError("zero polynomial in the input")
        self.input = list(polys)
        self.basis: list[Polynomial] = []
        self.active: list[bool] = []
        self.stats = GMStats()
        self.events: list[GMEvent] = []
        self._queue: list = []
        self._ids = itertools.count()
        self._seq = itertools.count()
        self._reducers: list = []

    def _discard(self, pair: ClassicPair, label: str, witness: Optional[int] = None):
        pair.alive = False
        self.stats.removed[label] += 1
        self.events.append(GMEvent(pair.id, pair.i, pair.j, pair.lcm, label, witness))

    def update(self, k: int):
        """Install ``basis[k]``: thin out old and new pairs, then queue the survivors."""
        h = self.basis[k]
        lh = h.lm
        cands = []
        for i, g in enumerate(self.basis[:k]):
            if not self.active[i]:
                continue
            cands.append(ClassicPair(i, k, mlcm(g.lm, lh), next(self._ids)))
        self.stats.pairs_generated += len(cands)

        # new pairs: drop those whose lcm is a multiple of another new lcm;
        # coprime pairs stay until the end so they can absorb equal lcms
        kept: list[ClassicPair] = []
        rest = list(cands)
        while rest:
            p = rest.pop(0)
            coprime = mcoprime(self.basis[p.i].lm, lh)
            witness = None
            if not coprime:
                for q in itertools.chain(rest, kept):
                    if mdivides(q.lcm, p.lcm):
                        witness = q
                        break
            if witness is None:
                kept.append(p)
            else:
                label = CHAIN_EQUAL if witness.lcm == p.lcm else CHAIN_NEW
                self._discard(p, label, witness.i)

        # old pairs: lt(h) strictly inside the lcm
        for _, _, p in self._queue:
            if not p.alive or not mdivides(lh, p.lcm):
                continue
            if mlcm(self.basis[p.i].lm, lh) != p.lcm and mlcm(self.basis[p.j].lm, lh) != p.lcm:
                self._discard(p, CHAIN_OLD, k)

        for p in kept:
            if mcoprime(self.basis[p.i].lm, lh):
                self._discard(p, PRODUCT)
            else:
                self._push(p)

        for i in range(k):
            if self.active[i] and mdivides(lh, self.basis[i].lm):
                self.active[i] = False

    def _push(self, p: ClassicPair):
        key = (sum(p.lcm), grevlex_key(p.lcm), next(self._seq))
        heapq.heappush(self._queue, (key, p.id, p))

    def _insert(self, f: Polynomial) -> int:
        k = len(self.basis)
        self.basis.append(f.monic())
        self.active.append(True)
        lm = self.basis[k].lm
        bisect.insort(self._reducers, (grevlex_key(lm), k, support_mask(lm), lm), key=lambda t: t[:2])
        self.update(k)
        return k

    def normal_form(self, f: Polynomial) -> Polynomial:
        """Full reduction by the whole basis, smallest lead first."""
        basis = self.basis
        reducers = self._reducers

        def pick(m):
            d = sum(m)
            mask = support_mask(m)
            for gk, k, bmask, lm in reducers:
                if gk[0] > d:
                    break
                if not bmask & ~mask and mdivides(lm, m):
                    return basis[k], mdiv(m, lm)
            return None

        return reduce_with(f, pick)

    def run(self) -> Buchberger:
        for f in self.input:
            self._insert(f)
        while self._queue:
            _, _, p = heapq.heappop(self._queue)
            if not p.alive:
                continue
            p.alive = False
            s = spoly(self.basis[p.i], self.basis[p.j])
            if s.is_zero():
                # nothing to reduce; not counted as a zero reduction
                self.stats.zero_spolys += 1
                self.events.append(GMEvent(p.id, p.i, p.j, p.lcm, ZERO, trivial=True))
                continue
            h = self.normal_form(s)
            self.stats.reductions += 1
            if h.is_zero():
                self.stats.zero_reductions += 1
                self.events.append(GMEvent(p.id, p.i, p.j, p.lcm, ZERO))
            else:
                k = self._insert(h)
                self.events.append(GMEvent(p.id, p.i, p.j, p.lcm, REDUCED, result=k))
        return self

    def polys(self) -> list[Polynomial]:
        return list(self.basis)

    def chain_identity_holds(self, ev: GMEvent) -> bool:
        """Check ``S(f,g) = u*S(f,h) + v*S(h,g)`` for a chain-type discard."""
        f, g, h = self.basis[ev.i], self.basis[ev.j], self.basis[ev.witness]
        lam = mlcm(f.lm, g.lm)
        if not mdivides(h.lm, lam):
            return False
        u = mdiv(lam, mlcm(f.lm, h.lm))
        v = mdiv(lam, mlcm(h.lm, g.lm))
        rhs = spoly(f, h).mul_term(u) + spoly(h, g).mul_term(v)
        return spoly(f, g) == rhs


def buchberger_run(polys: Sequence[Polynomial]):
    """Run the baseline; returns ``(basis, stats)``."""
    eng = Buchberger(polys).run()
    return eng.polys(), eng.stats


def gm_update(basis: Sequence[Polynomial], h: Polynomial):
    """Pairs surviving the installation of ``h`` into ``basis`` (taken as a
    set with no pending pairs), as ``(i, j)`` index tuples."""
    eng = Buchberger([h])
    eng.basis = [g.monic() for g in basis]
    eng.active = [True] * len(basis)
    eng.input = []
    eng.basis.append(h.monic())
    eng.active.append(True)
    eng.update(len(basis))
    return sorted((p.i, p.j) for _, _, p in eng._queue if p.alive)
