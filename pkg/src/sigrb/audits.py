"""Post-hoc checks on finished signature runs.

* :func:`chain_audit` - for every chain triple of basis elements at least one
  of its three S-pairs was never regular s-reduced.
* :func:`coprime_pair_reduces` - a pair with coprime leads regular
  s-reduces to zero using only its two generators.
* :func:`pot_pc_violations` - under pot, a pair with coprime leads whose
  generators have different indices, or one of which is a unit vector, is
  caught by the H check.
* :func:`stage2_removals` - pairs that only the explicit product check removed.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .monomials import mcoprime, mdiv, mdivides, mlcm
from .polynomials import padd, pmul_term
from .rb import RB, REDUCED, REWRITTEN_H, SINGULAR, ZERO, Event, LabeledPoly
from .signatures import sig_mul


def processed_pairs(eng: RB) -> set[frozenset]:
    """Unordered basis-ordinal pairs whose S-polynomial the engine computed."""
    out = set()
    for ev in eng.events:
        if ev.decision in (REDUCED, ZERO) and ev.right is not None and ev.left[1] >= 0:
            out.add(frozenset((ev.left[1], ev.right[1])))
    return out


@dataclass(frozen=True)
class ChainViolation:
    alpha: int
    beta: int
    gamma: int


def chain_audit(eng: RB) -> list[ChainViolation]:
    """Triples ``(a, b, c)`` with ``lt c | lcm(lt a, lt b)`` where all three
    S-pairs were computed.  An empty list means the audit passed."""
    done = processed_pairs(eng)
    nbrs = defaultdict(set)
    for p in done:
        i, j = tuple(p)
        nbrs[i].add(j)
        nbrs[j].add(i)
    basis = eng.basis
    bad = []
    for p in done:
        i, j = sorted(p)
        lam = mlcm(basis[i].lm, basis[j].lm)
        for k in nbrs[i] & nbrs[j]:
            if mdivides(basis[k].lm, lam):
                bad.append(ChainViolation(i, j, k))
    return bad


def chain_signatures(eng: RB, v: ChainViolation):
    """Signatures of ``alpha``, ``beta`` and ``gamma`` lifted to the lcm."""
    a, b, g = (eng.basis[k] for k in (v.alpha, v.beta, v.gamma))
    lam = mlcm(a.lm, b.lm)
    return tuple(sig_mul(x.sig, mdiv(lam, x.lm)) for x in (a, b, g))


def chain_gamma_top(eng: RB, v: ChainViolation) -> bool:
    """True when the gamma term strictly dominates the chain relation.

    Then the relation only shows up above both gamma pairs' signatures, so
    none of the three pairs can be dropped when it is processed.
    """
    ta, tb, tg = chain_signatures(eng, v)
    top = max((ta, tb, tg), key=eng.ctx.key)
    return top == tg and tg not in (ta, tb)


def refined_chain_audit(eng: RB) -> list[ChainViolation]:
    """Audit hits whose largest chain signature is on the alpha or beta side."""
    return [v for v in chain_audit(eng) if not chain_gamma_top(eng, v)]


def spair_parts(eng: RB, a: LabeledPoly, b: LabeledPoly):
    """``(signature, polynomial)`` of the S-pair of ``a`` and ``b``, or
    ``None`` when it is singular."""
    lam = mlcm(a.lm, b.lm)
    ua, ub = mdiv(lam, a.lm), mdiv(lam, b.lm)
    sa, sb = sig_mul(a.sig, ua), sig_mul(b.sig, ub)
    if sa == sb:
        return None
    f = padd(pmul_term(a.poly, ua), pmul_term(b.poly, ub, -1))
    return eng.ctx.max(sa, sb), f


def coprime_pair_reduces(eng: RB, a: LabeledPoly, b: LabeledPoly) -> bool:
    """Regular s-reduce the S-pair of ``a`` and ``b`` by ``{a, b}`` alone."""
    parts = spair_parts(eng, a, b)
    if parts is None:
        return True
    sig, f = parts
    return eng.s_reduce(sig, f, basis=[a, b]).is_zero()


def coprime_pairs(eng: RB) -> list[tuple[int, int]]:
    basis = eng.basis
    return [
        (i, j)
        for i, j in combinations(range(len(basis)), 2)
        if mcoprime(basis[i].lm, basis[j].lm)
    ]


def sample_coprime_pairs(engines: Iterable[RB], k: int, seed: int = 0):
    """``k`` seeded ``(engine, i, j)`` samples of non-singular coprime pairs."""
    pool = []
    for eng in engines:
        for i, j in coprime_pairs(eng):
            if spair_parts(eng, eng.basis[i], eng.basis[j]) is not None:
                pool.append((eng, i, j))
    rng = random.Random(seed)
    return rng.sample(pool, min(k, len(pool)))


def pot_pc_violations(eng: RB) -> list[Event]:
    """Coprime pairs under pot that the H check should have caught but did not.

    Applies to pairs whose generators have different indices and to pairs
    with a generator at a unit-vector signature.
    """
    if eng.ctx.kind != "pot":
        raise ValueError("the check is specific to the pot order")
    bad = []
    for ev in eng.events:
        if not ev.product_criterion or ev.right is None or ev.decision == SINGULAR:
            continue
        a, b = eng.basis[ev.left[1]], eng.basis[ev.right[1]]
        mixed = a.sig.index != b.sig.index
        unit = not any(a.sig.mono) or not any(b.sig.mono)
        if (mixed or unit) and ev.decision != REWRITTEN_H:
            bad.append(ev)
    return bad


def stage2_removals(eng: RB) -> list[Event]:
    return [ev for ev in eng.events if ev.decision == "pc-removed"]
