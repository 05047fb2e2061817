"""Exponent-vector monomials under the graded reverse lexicographic order.

A monomial is a tuple of non-negative exponents, one per ring variable, in
declaration order (first variable is the largest).  Tuples are hashable and
immutable, so they double as dictionary keys inside polynomials.
"""

from __future__ import annotations

from functools import lru_cache
from operator import add, le, sub
from typing import Sequence

Monomial = tuple[int, ...]


class MonomialError(ValueError):
    pass


def one(n: int) -> Monomial:
    return (0,) * n


def deg(a: Monomial) -> int:
    return sum(a)


@lru_cache(maxsize=1 << 20)
def grevlex_key(a: Monomial) -> tuple:
    """Sort key: ``grevlex_key(a) < grevlex_key(b)`` iff ``a < b`` in grevlex.

    Total degree first; on ties the monomial with the smaller exponent in the
    last variable where they differ is the larger one.
    """
    return (sum(a), tuple(-e for e in reversed(a)))


def mcmp_grevlex(a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise MonomialError("monomials from rings of different size")
    ka, kb = grevlex_key(a), grevlex_key(b)
    return (ka > kb) - (ka < kb)


def mmul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def mdivides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    return all(map(le, a, b))


def mdiv(a: Monomial, b: Monomial) -> Monomial:
    """Exact quotient ``a / b``."""
    q = tuple(map(sub, a, b))
    if q and min(q) < 0:
        raise MonomialError("inexact monomial division")
    return q


def mlcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


@lru_cache(maxsize=1 << 20)
def support_mask(a: Monomial) -> int:
    """Bit i set iff variable i occurs; ``a | b`` implies ``mask(a) & ~mask(b) == 0``."""
    m = 0
    for i, e in enumerate(a):
        if e:
            m |= 1 << i
    return m


def mcoprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def format_monomial(a: Monomial, names: Sequence[str]) -> str:
    """Render as ``x^2*y*z``; the empty product renders as ``1``."""
    parts = []
    for name, e in zip(names, a):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
