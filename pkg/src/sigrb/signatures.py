"""Module monomials ``a * e_i`` and the module orders pot, pot-rev, d-pot, lt-pot.

Signatures carry no coefficient.  Indices are 1-based like the unit vectors
they name.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .monomials import Monomial, format_monomial, grevlex_key, mdiv, mdivides, mmul

ORDER_KINDS = ("pot", "pot-rev", "d-pot", "lt-pot")

_ALIASES = {
    "pot": "pot",
    "pot-rev": "pot-rev",
    "potrev": "pot-rev",
    "d-pot": "d-pot",
    "dpot": "d-pot",
    "lt-pot": "lt-pot",
    "ltpot": "lt-pot",
}


def order_kind(name: str) -> str:
    try:
        return _ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown module order {name!r}") from None


class Signature(NamedTuple):
    mono: Monomial
    index: int

    def format(self, names: Sequence[str]) -> str:
        m = format_monomial(self.mono, names)
        return f"e_{self.index}" if m == "1" else f"{m}*e_{self.index}"


def sig_mul(s: Signature, a: Monomial) -> Signature:
    return Signature(mmul(s.mono, a), s.index)


def sig_divides(s: Signature, t: Signature) -> bool:
    return s.index == t.index and mdivides(s.mono, t.mono)


def sig_div(t: Signature, s: Signature) -> Monomial:
    """The monomial ``a`` with ``a * s == t``."""
    if s.index != t.index:
        raise ValueError("signatures with different indices")
    return mdiv(t.mono, s.mono)


@dataclass(frozen=True)
class ModuleOrder:
    """A module monomial order compatible with grevlex.

    ``leads[i-1]`` and ``degrees[i-1]`` are the lead monomial and total degree
    of the i-th input generator; lt-pot and d-pot weigh signatures by them.
    """

    kind: str
    leads: tuple[Monomial, ...]
    degrees: tuple[int, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", order_kind(self.kind))
        if len(self.leads) != len(self.degrees):
            raise ValueError("leads and degrees must have one entry per generator")

    @classmethod
    def for_input(cls, kind: str, polys) -> ModuleOrder:
        return cls(kind, tuple(f.lm for f in polys), tuple(f.degree() for f in polys))

    @property
    def m(self) -> int:
        return len(self.leads)

    def key(self, s: Signature) -> tuple:
        """Sort key; ``key(S) < key(T)`` iff ``S < T``."""
        k = self._cache.get(s)
        if k is not None:
            return k
        a, i = s
        if self.kind == "pot":
            k = (i, grevlex_key(a))
        elif self.kind == "pot-rev":
            k = (-i, grevlex_key(a))
        elif self.kind == "d-pot":
            k = (sum(a) + self.degrees[i - 1], i, grevlex_key(a))
        else:
            k = (grevlex_key(mmul(a, self.leads[i - 1])), i, grevlex_key(a))
        self._cache[s] = k
        return k

    def cmp(self, s: Signature, t: Signature) -> int:
        ks, kt = self.key(s), self.key(t)
        return (ks > kt) - (ks < kt)

    def max(self, s: Signature, t: Signature) -> Signature:
        return s if self.key(s) >= self.key(t) else t

    def unit(self, i: int) -> Signature:
        return Signature((0,) * len(self.leads[0]), i)


def sig_cmp(ctx: ModuleOrder, s: Signature, t: Signature) -> int:
    return ctx.cmp(s, t)


def koszul_signature(ctx: ModuleOrder, i: int, j: int) -> Signature:
    """Lead signature of ``f_i e_j - f_j e_i`` for ``i < j``."""
    if not i < j:
        raise ValueError("koszul_signature needs i < j")
    return ctx.max(Signature(ctx.leads[i - 1], j), Signature(ctx.leads[j - 1], i))
