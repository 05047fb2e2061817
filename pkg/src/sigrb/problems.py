"""Problem files and benchmark families.

File grammar::

    char 32003            # optional, defaults to 32003
    vars x, y, z          # declaration order = descending variable order
    x*y - z^2             # one generator per line
    # comment lines and blank lines are ignored

Expressions use ``+ - * ^``, integer constants and parentheses.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from .field import FieldError, PrimeField
from .polynomials import PolyRing, Polynomial, format_poly

DEFAULT_CHAR = 32003


class ParseError(ValueError):
    def __init__(self, msg: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


@dataclass
class ProblemSpec:
    name: str
    ring: PolyRing
    gens: list[Polynomial]

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def homogeneous(self) -> bool:
        return all(f.is_homogeneous() for f in self.gens)

    def to_text(self) -> str:
        lines = [f"# {self.name}"] if self.name else []
        lines.append(f"char {self.ring.p}")
        lines.append("vars " + ", ".join(self.ring.names))
        lines.extend(format_poly(f) for f in self.gens)
        return "\n".join(lines) + "\n"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        elif op is not None and not op.isspace():
            if op not in "+-*^()":
                raise ParseError(f"unexpected character {op!r}")
            out.append(("op", op))
        pos = m.end()
    return out


class _ExprParser:
    def __init__(self, ring: PolyRing, tokens):
        self.ring = ring
        self.toks = tokens
        self.i = 0
        self.index = {n: k for k, n in enumerate(ring.names)}

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}")

    def parse(self) -> Polynomial:
        if not self.toks:
            raise ParseError("empty expression")
        f = self.sum()
        if self.i != len(self.toks):
            raise ParseError(f"unexpected token {self.peek()[1]!r}")
        return f

    def sum(self) -> Polynomial:
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        f = self.product() * sign
        while self.peek() in (("op", "-"), ("op", "+")):
            op = self.take()[1]
            g = self.product()
            f = f - g if op == "-" else f + g
        return f

    def product(self) -> Polynomial:
        f = self.power()
        while self.peek() == ("op", "*"):
            self.take()
            f = f * self.power()
        return f

    def power(self) -> Polynomial:
        f = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            f = f ** int(val)
        return f

    def atom(self) -> Polynomial:
        kind, val = self.take()
        if kind == "num":
            return self.ring.one() * int(val)
        if kind == "name":
            if val not in self.index:
                raise ParseError(f"unknown variable {val!r}")
            return self.ring.gen(self.index[val])
        if (kind, val) == ("op", "("):
            f = self.sum()
            self.expect(")")
            return f
        if (kind, val) == ("op", "-"):
            return -self.atom()
        raise ParseError("unexpected end of expression" if kind is None else f"unexpected {val!r}")


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    return _ExprParser(ring, _tokenize(text)).parse()


def parse_problem(text: str, name: str = "") -> ProblemSpec:
    p = DEFAULT_CHAR
    names = None
    ring = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "char" and names is None and not gens:
            try:
                p = int(rest.strip())
                PrimeField(p)
            except (ValueError, FieldError) as exc:
                raise ParseError(f"bad characteristic: {exc}", lineno) from None
            continue
        if head == "vars" and names is None:
            names = tuple(v.strip() for v in rest.split(",") if v.strip())
            try:
                ring = PolyRing(PrimeField(p), names)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        if ring is None:
            raise ParseError("generator before 'vars' declaration", lineno)
        try:
            f = parse_poly(line, ring)
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        if f.is_zero():
            raise ParseError("generator is zero", lineno)
        gens.append(f)
    if ring is None:
        raise ParseError("missing 'vars' declaration")
    if not gens:
        raise ParseError("no generators")
    return ProblemSpec(name, ring, gens)


def load_problem(path) -> ProblemSpec:
    from pathlib import Path

    path = Path(path)
    return parse_problem(path.read_text(), path.stem)


# -- benchmark families ----------------------------------------------------


def _ring(n: int, p: int, prefix: str = "x") -> PolyRing:
    return PolyRing(PrimeField(p), tuple(f"{prefix}{i}" for i in range(n)))


def homogenize(spec: ProblemSpec, var: str = "h") -> ProblemSpec:
    """Append a smallest variable and homogenize every generator."""
    ring = PolyRing(spec.ring.field, spec.ring.names + (var,))
    gens = []
    for f in spec.gens:
        d = f.degree()
        gens.append(ring.from_dict({m + (d - sum(m),): c for m, c in f.terms}))
    return ProblemSpec(spec.name + "-h", ring, gens)


def gen_cyclic(n: int, p: int = DEFAULT_CHAR, homogeneous: bool = False) -> ProblemSpec:
    """cyclic-n: the elementary cyclic sums of degree 1..n-1 and ``x0*...*x(n-1) - 1``."""
    ring = _ring(n, p)
    x = ring.gens()
    gens = []
    for k in range(1, n):
        f = ring.zero()
        for i in range(n):
            t = ring.one()
            for j in range(k):
                t = t * x[(i + j) % n]
            f = f + t
        gens.append(f)
    t = ring.one()
    for v in x:
        t = t * v
    gens.append(t - ring.one())
    spec = ProblemSpec(f"cyclic-{n}", ring, gens)
    return homogenize(spec) if homogeneous else spec


def gen_katsura(n: int, p: int = DEFAULT_CHAR, homogeneous: bool = False) -> ProblemSpec:
    """katsura-n in the n variables x0..x(n-1), linear generator first."""
    ring = _ring(n, p)
    x = ring.gens()

    def u(k):
        k = abs(k)
        return x[k] if k < n else ring.zero()

    gens = [x[0] + sum((x[i] * 2 for i in range(1, n)), ring.zero()) - ring.one()]
    for m in range(n - 1):
        f = ring.zero()
        for l in range(-(n - 1), n):
            f = f + u(l) * u(m - l)
        gens.append(f - x[m])
    spec = ProblemSpec(f"katsura-{n}", ring, gens)
    return homogenize(spec) if homogeneous else spec


def gen_binomial(
    n: int, d: int, count: Optional[int] = None, seed: int = 0, p: int = DEFAULT_CHAR
) -> ProblemSpec:
    """``count`` (default ``n``) random homogeneous binomials ``x^a - x^b`` of
    degree ``d`` in ``n`` variables, reproducible from ``seed``."""
    if count is None:
        count = n
    rng = random.Random(f"binomial-{n}-{d}-{count}-{seed}")
    ring = _ring(n, p)
    monos = sorted(
        {tuple(c.count(i) for i in range(n)) for c in combinations_with_replacement(range(n), d)}
    )
    if len(monos) < 2:
        raise ValueError("need at least two monomials of the requested degree")
    gens = []
    seen = set()
    while len(gens) < count:
        a, b = rng.sample(monos, 2)
        f = ring.monomial(a) - ring.monomial(b)
        if f.monic() in seen:
            continue
        seen.add(f.monic())
        gens.append(f)
    return ProblemSpec(f"binomial-{n}-{d}-s{seed}", ring, gens)
