"""Brute-force oracles: Buchberger's criterion, reduced bases, basis equality.

Nothing here touches the engines' criteria; only polynomial arithmetic and
plain normal forms are used.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .monomials import grevlex_key, mdivides
from .polynomials import Polynomial, Reducer, spoly


def verify_gb(
    G: Iterable[Polynomial], witness: Optional[list] = None, exhaustive: bool = False
) -> bool:
    """True iff ``G`` is a Groebner basis of the ideal it generates.

    With ``exhaustive`` every S-polynomial of ``G`` is reduced modulo ``G``.
    Otherwise ``G`` is first interreduced to ``R``; ``G`` is a Groebner basis
    iff every element of ``G`` reduces to zero modulo ``R`` and every
    S-polynomial of ``R`` does.  On failure the offending pair (or element)
    and remainder are appended to ``witness``.
    """
    G = [g for g in G if g]
    if not exhaustive:
        R = reduce_basis(G)
        nf = Reducer(R)
        for g in G:
            r = nf(g)
            if r:
                if witness is not None:
                    witness.append((g, None, r))
                return False
        bad = _interreduced_failure(tuple(R))
    else:
        bad = _spair_failure(G)
    if bad is not None and witness is not None:
        witness.append(bad)
    return bad is None


def _spair_failure(G: Sequence[Polynomial]):
    """First ``(f, g, remainder)`` with a nonzero S-polynomial remainder."""
    nf = Reducer(G)
    for f, g in combinations(G, 2):
        r = nf(spoly(f, g))
        if r:
            return (f, g, r)
    return None


# engines of one ideal share the interreduced basis, so the pair test is cached
_interreduced_failure = lru_cache(maxsize=64)(_spair_failure)


def reduce_basis(G: Iterable[Polynomial]) -> list[Polynomial]:
    """Minimal, monic, tail-reduced and sorted by decreasing lead.

    For a Groebner basis the result is the reduced Groebner basis of its ideal.
    """
    G = [g.monic() for g in G if g]
    # smallest leads first, so that among equal leads the first one survives
    G.sort(key=lambda g: grevlex_key(g.lm))
    minimal: list[Polynomial] = []
    for g in G:
        if not any(mdivides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    # a lead never divides a smaller monomial, so reducing a tail by the whole
    # minimal set is the same as reducing it by the other elements
    nf = Reducer(minimal)
    out = []
    for g in minimal:
        tail = Polynomial(g.ring, g.terms[1:])
        out.append(Polynomial(g.ring, g.terms[:1]) + nf(tail))
    out.sort(key=lambda g: grevlex_key(g.lm), reverse=True)
    return out


def bases_equal(A: Iterable[Polynomial], B: Iterable[Polynomial]) -> bool:
    """Equal reduced bases, i.e. the same ideal when both inputs are Groebner bases."""
    return reduce_basis(A) == reduce_basis(B)
