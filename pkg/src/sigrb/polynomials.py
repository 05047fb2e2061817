"""Sparse polynomials over a prime field with grevlex-sorted term tuples.

The reduction loop is shared by plain normal forms and by signature-aware
reductions in the engines: callers pass a ``pick`` callback that, given a
monomial, names a reducer and the multiplier that brings its lead onto that
monomial.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .field import PrimeField
from .monomials import (
    Monomial,
    format_monomial,
    grevlex_key,
    mdiv,
    mdivides,
    mlcm,
    mmul,
    support_mask,
)


class PolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class PolyRing:
    """K[x_1, ..., x_n] with grevlex; ``names[0]`` is the largest variable."""

    field: PrimeField
    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise PolynomialError("a ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise PolynomialError("duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def p(self) -> int:
        return self.field.p

    def zero(self) -> Polynomial:
        return Polynomial(self, ())

    def one(self) -> Polynomial:
        return Polynomial(self, (((0,) * self.nvars, 1),))

    def gen(self, i: int) -> Polynomial:
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, ((tuple(e), 1),))

    def gens(self) -> list[Polynomial]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, mono: Monomial, coeff: int = 1) -> Polynomial:
        coeff %= self.p
        return Polynomial(self, ((tuple(mono), coeff),) if coeff else ())

    def from_dict(self, d: Mapping[Monomial, int]) -> Polynomial:
        p = self.p
        items = [(m, c % p) for m, c in d.items() if c % p]
        items.sort(key=lambda t: grevlex_key(t[0]), reverse=True)
        return Polynomial(self, tuple(items))


class Polynomial:
    """Immutable polynomial; ``terms`` is a tuple of ``(monomial, coeff)``
    strictly decreasing in grevlex with nonzero coefficients in ``[0, p)``."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: tuple[tuple[Monomial, int], ...]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- inspection ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise PolynomialError("the zero polynomial has no lead monomial")
        return self.terms[0][0]

    @property
    def lc(self) -> int:
        if not self.terms:
            raise PolynomialError("the zero polynomial has no lead coefficient")
        return self.terms[0][1]

    @property
    def lt(self) -> tuple[Monomial, int]:
        return (self.lm, self.lc)

    def support(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    def degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    def coeff(self, mono: Monomial) -> int:
        for m, c in self.terms:
            if m == mono:
                return c
        return 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: Polynomial):
        if self.ring != other.ring:
            raise PolynomialError("polynomials from different rings")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        return padd(self, other)

    def __neg__(self) -> Polynomial:
        return pscale(self, -1)

    def __sub__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        return padd(self, pscale(other, -1))

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return pscale(self, other)
        self._check(other)
        p = self.ring.p
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mmul(m1, m2)
                acc[m] = (acc.get(m, 0) + c1 * c2) % p
        return self.ring.from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def monic(self) -> Polynomial:
        if not self.terms or self.terms[0][1] == 1:
            return self
        return pscale(self, self.ring.field.inv(self.terms[0][1]))

    def mul_term(self, mono: Monomial, coeff: int = 1) -> Polynomial:
        return pmul_term(self, mono, coeff)


def padd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Merge two sorted term lists."""
    p = f.ring.p
    a, b = f.terms, g.terms
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        ma, ca = a[i]
        mb, cb = b[j]
        if ma == mb:
            c = (ca + cb) % p
            if c:
                out.append((ma, c))
            i += 1
            j += 1
        elif grevlex_key(ma) > grevlex_key(mb):
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return Polynomial(f.ring, tuple(out))


def pscale(f: Polynomial, k: int) -> Polynomial:
    p = f.ring.p
    k %= p
    if k == 0:
        return f.ring.zero()
    if k == 1:
        return f
    return Polynomial(f.ring, tuple((m, c * k % p) for m, c in f.terms))


def pmul_term(f: Polynomial, mono: Monomial, coeff: int = 1) -> Polynomial:
    """Multiply by the term ``coeff * mono``; grevlex is multiplicative, so the
    order of the terms is preserved."""
    p = f.ring.p
    coeff %= p
    if coeff == 0:
        return f.ring.zero()
    return Polynomial(f.ring, tuple((mmul(m, mono), c * coeff % p) for m, c in f.terms))


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """``(lcm/lt f) f - (lcm/lt g) g`` with ``lcm`` the monic lcm of the leads."""
    if f.is_zero() or g.is_zero():
        raise PolynomialError("S-polynomial of the zero polynomial")
    inv = f.ring.field.inv
    lam = mlcm(f.lm, g.lm)
    return padd(
        pmul_term(f, mdiv(lam, f.lm), inv(f.lc)),
        pmul_term(g, mdiv(lam, g.lm), -inv(g.lc)),
    )


@lru_cache(maxsize=1 << 20)
def _heap_key(m: Monomial) -> tuple:
    # min-heap order = descending grevlex
    return (-sum(m), m[::-1])


Pick = Callable[[Monomial], Optional[tuple[Polynomial, Monomial]]]


def reduce_with(
    f: Polynomial,
    pick: Pick,
    top_only: bool = False,
    record: Optional[list] = None,
    reducer_id: Optional[Callable[[Polynomial], object]] = None,
) -> Polynomial:
    """Reduce ``f`` term by term in decreasing order.

    ``pick(m)`` returns ``(g, b)`` with ``lm(g) * b == m`` or ``None`` when
    ``m`` cannot be reduced.  With ``top_only`` the loop stops at the first
    irreducible term.  When ``record`` is a list, every step appends
    ``(coeff, b, id)`` such that ``f - sum(coeff * b * g) == result``.
    """
    ring = f.ring
    p = ring.p
    inv = ring.field.inv
    acc = dict(f.terms)
    heap = [(_heap_key(m), m) for m, _ in f.terms]
    heap.sort()
    out = []
    while heap:
        _, m = heapq.heappop(heap)
        c = acc.pop(m, 0)
        if not c:
            continue
        hit = pick(m)
        if hit is None:
            out.append((m, c))
            if top_only:
                rest = sorted(acc.items(), key=lambda t: _heap_key(t[0]))
                out.extend(rest)
                break
            continue
        g, b = hit
        q = c * inv(g.terms[0][1]) % p
        if record is not None:
            record.append((q, b, reducer_id(g) if reducer_id else g))
        for gm, gc in g.terms[1:]:
            nm = mmul(b, gm)
            old = acc.get(nm)
            if old is None:
                acc[nm] = -q * gc % p
                heapq.heappush(heap, (_heap_key(nm), nm))
            else:
                new = (old - q * gc) % p
                if new:
                    acc[nm] = new
                else:
                    del acc[nm]
    return Polynomial(ring, tuple(out))


def reduce_step(f: Polynomial, t: Monomial, g: Polynomial) -> Polynomial:
    """Eliminate the term of ``f`` at monomial ``t`` using ``g``."""
    c = f.coeff(t)
    if c == 0:
        raise PolynomialError("monomial is not in the support")
    b = mdiv(t, g.lm)
    q = c * f.ring.field.inv(g.lc)
    return padd(f, pmul_term(g, b, -q))


def reducer_order(G: Sequence[Polynomial]) -> list[Polynomial]:
    """Reducers sorted by grevlex-smallest lead, ties by position in ``G``."""
    idx = sorted(range(len(G)), key=lambda i: (grevlex_key(G[i].lm), i))
    return [G[i] for i in idx]


class Reducer:
    """Fixed reducer set for repeated normal forms.

    Among the eligible reducers of a term the one with the grevlex-smallest
    lead monomial wins, earliest in ``G`` on ties.
    """

    def __init__(self, G: Iterable[Polynomial]):
        self.G = [g for g in G if g]
        order = sorted(range(len(self.G)), key=lambda i: (grevlex_key(self.G[i].lm), i))
        self._leads = [
            (sum(self.G[i].lm), support_mask(self.G[i].lm), self.G[i].lm, i) for i in order
        ]

    def pick(self, m: Monomial):
        d = sum(m)
        mask = support_mask(m)
        for gd, gmask, lm, i in self._leads:
            if gd > d:
                break
            if not gmask & ~mask and mdivides(lm, m):
                return self.G[i], mdiv(m, lm)
        return None

    def __call__(self, f: Polynomial, top_only: bool = False, record: Optional[list] = None):
        if record is None:
            return reduce_with(f, self.pick, top_only)
        ids = {id(g): i for i, g in enumerate(self.G)}
        return reduce_with(f, self.pick, top_only, record, lambda g: ids[id(g)])


def normal_form(
    f: Polynomial,
    G: Iterable[Polynomial],
    top_only: bool = False,
    record: Optional[list] = None,
) -> Polynomial:
    """Fully reduce ``f`` modulo ``G`` (see :class:`Reducer` for the reducer
    choice).  ``record`` receives the quotient terms as ``(coeff, multiplier,
    index into G)``, where zero polynomials are dropped from ``G`` first.
    """
    return Reducer(G)(f, top_only, record)


def format_poly(f: Polynomial) -> str:
    """Render as ``2*x^2 - x*y + 3`` using symmetric coefficients."""
    if f.is_zero():
        return "0"
    field = f.ring.field
    names = f.ring.names
    out = []
    for m, c in f.terms:
        c = field.signed(c)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = format_monomial(m, names)
        if mono == "1":
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text
