"""Experiment driver and reports.

A configuration is one engine setting.  The fixed matrix puts ``gm`` first,
then every ``rb`` combination with module order varying slowest and the
product check fastest.  Reports list benchmarks alphabetically and, within a
benchmark, configurations in matrix order.

Zero-reduction cells render like ``771(17,0)`` when the product check is on:
the bracket holds the coprime pairs not caught by H, and those not caught by
H or G.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from .gm import Buchberger
from .problems import (
    ProblemSpec,
    gen_binomial,
    gen_cyclic,
    gen_katsura,
    parse_problem,
)
from .rb import RB
from .signatures import ORDER_KINDS
from .verifier import bases_equal, verify_gb

CSV_COLUMNS = (
    "benchmark",
    "engine",
    "order",
    "rewrite",
    "update_syz",
    "pc",
    "zero_reductions",
    "pc_miss_h",
    "pc_miss_hg",
)

# the two worked examples, over F7 with x > y > z > t
EXAMPLE_PRODUCT = """\
# coprime leads left over under lt-pot
char 7
vars x, y, z, t
y*z - z^2
y^2 - x*t
x*y - x*z
x^2 - x*y
"""

EXAMPLE_CHAIN = """\
# a relation the rewrite check sees and the chain criterion misses
char 7
vars x, y, z, t
y*z - 2*t^2
x*y + t^2
x^2*z + 3*x*t^2 - 2*y*t^2
"""


@dataclass(frozen=True)
class Config:
    engine: str = "rb"
    order: str = "pot"
    rewrite: str = "rat"
    update_syz: bool = False
    pc: bool = False

    def __post_init__(self):
        if self.engine not in ("rb", "gm"):
            raise ValueError(f"unknown engine {self.engine!r}")

    @property
    def label(self) -> str:
        if self.engine == "gm":
            return "gm"
        flags = "+".join(f for f, on in (("U", self.update_syz), ("PC", self.pc)) if on)
        return " ".join(p for p in ("rb", self.order, self.rewrite, flags) if p)


GM = Config("gm", "", "", False, False)


def config_matrix() -> list[Config]:
    rb = [
        Config("rb", o, r, u, p)
        for o, r, u, p in product(ORDER_KINDS, ("add", "rat"), (False, True), (False, True))
    ]
    return [GM] + rb


@dataclass
class ReportRow:
    benchmark: str
    engine: str
    order: str
    rewrite: str
    update_syz: bool
    pc: bool
    zero_reductions: int
    pc_miss_h: Optional[int] = None
    pc_miss_hg: Optional[int] = None
    verified: Optional[bool] = None

    @property
    def config(self) -> Config:
        return Config(self.engine, self.order, self.rewrite, self.update_syz, self.pc)

    def cell(self) -> str:
        if self.pc_miss_h is None:
            return str(self.zero_reductions)
        return f"{self.zero_reductions}({self.pc_miss_h},{self.pc_miss_hg})"


@dataclass
class RunResult:
    spec: ProblemSpec
    config: Config
    engine: object
    row: ReportRow

    @property
    def basis(self):
        return self.engine.polys()

    def log_lines(self) -> list[str]:
        names = self.spec.ring.names
        return [ev.format(names) for ev in self.engine.events]


def run_config(spec: ProblemSpec, cfg: Config, verify: bool = False) -> RunResult:
    if cfg.engine == "gm":
        eng = Buchberger(spec.gens).run()
        row = ReportRow(spec.name, "gm", "", "", False, False, eng.stats.zero_reductions)
    else:
        eng = RB(spec.gens, cfg.order, cfg.rewrite, cfg.update_syz, cfg.pc).run()
        st = eng.stats
        row = ReportRow(
            spec.name,
            "rb",
            cfg.order,
            cfg.rewrite,
            cfg.update_syz,
            cfg.pc,
            st.zero_reductions,
            st.pc_not_rewritable_h if cfg.pc else None,
            st.pc_not_rewritable_hg if cfg.pc else None,
        )
    if verify:
        row.verified = verify_gb(eng.polys())
    return RunResult(spec, cfg, eng, row)


def run_experiment(
    spec: ProblemSpec,
    configs: Optional[Sequence[Config]] = None,
    verify: bool = True,
) -> list[RunResult]:
    """Run every configuration; with ``verify`` each basis is checked and all
    bases are compared against the first one."""
    configs = config_matrix() if configs is None else configs
    results = [run_config(spec, c, verify) for c in configs]
    if verify and results:
        ref = results[0].basis
        for r in results[1:]:
            if not bases_equal(ref, r.basis):
                r.row.verified = False
    return results


def _sorted(rows: Iterable[ReportRow]) -> list[ReportRow]:
    order = {c: i for i, c in enumerate(config_matrix())}
    return sorted(rows, key=lambda r: (r.benchmark, order.get(r.config, len(order))))


def emit_report(rows: Iterable[ReportRow], fmt: str = "table") -> str:
    rows = _sorted(rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow(
                [
                    r.benchmark,
                    r.engine,
                    r.order,
                    r.rewrite,
                    int(r.update_syz),
                    int(r.pc),
                    r.zero_reductions,
                    "" if r.pc_miss_h is None else r.pc_miss_h,
                    "" if r.pc_miss_hg is None else r.pc_miss_hg,
                ]
            )
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([asdict(r) for r in rows], indent=2) + "\n"
    if fmt != "table":
        raise ValueError(f"unknown report format {fmt!r}")
    header = ("benchmark", "config", "zero reductions")
    body = [(r.benchmark, r.config.label, r.cell()) for r in rows]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    lines = ["  ".join(x.ljust(w) for x, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip() for line in body]
    return "\n".join(lines) + "\n"


# -- corpus ------------------------------------------------------------------

BINOMIAL_SHAPES = [(n, d) for n in (4, 5, 6) for d in (2, 3)]


def example_problems() -> list[ProblemSpec]:
    return [
        parse_problem(EXAMPLE_PRODUCT, "example-product"),
        parse_problem(EXAMPLE_CHAIN, "example-chain"),
    ]


def binomial_corpus(count: int = 50) -> list[ProblemSpec]:
    """``count`` seeded binomial systems cycling through ``BINOMIAL_SHAPES``."""
    out = []
    for k in range(count):
        n, d = BINOMIAL_SHAPES[k % len(BINOMIAL_SHAPES)]
        out.append(gen_binomial(n, d, seed=k // len(BINOMIAL_SHAPES)))
    return out


def corpus(binomials: int = 50, max_cyclic: int = 6, max_katsura: int = 6) -> list[ProblemSpec]:
    return (
        example_problems()
        + [gen_cyclic(n) for n in range(4, max_cyclic + 1)]
        + [gen_katsura(n) for n in range(3, max_katsura + 1)]
        + binomial_corpus(binomials)
    )
