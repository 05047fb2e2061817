"""``sigrb`` command line: run, gen, verify and bench."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .harness import Config, config_matrix, corpus, emit_report, run_config, run_experiment
from .polynomials import format_poly
from .problems import (
    DEFAULT_CHAR,
    ParseError,
    ProblemSpec,
    gen_binomial,
    gen_cyclic,
    gen_katsura,
    load_problem,
    parse_poly,
)
from .signatures import order_kind
from .verifier import bases_equal, verify_gb


def _write(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def basis_text(spec: ProblemSpec, basis) -> str:
    """A problem file holding ``basis`` in the ring of ``spec``."""
    lines = [f"char {spec.p}", "vars " + ", ".join(spec.ring.names)]
    lines += [format_poly(g) for g in basis]
    return "\n".join(lines) + "\n"


def cmd_run(args) -> int:
    spec = load_problem(args.file)
    if args.engine == "gm":
        cfg = Config("gm", "", "", False, False)
    else:
        cfg = Config("rb", order_kind(args.module_order), args.rewrite, args.update_syz,
                     args.product_criterion)
    res = run_config(spec, cfg, verify=args.check)
    _write(emit_report([res.row], args.report), None)
    if args.log:
        Path(args.log).write_text("\n".join(res.log_lines()) + "\n")
    if args.basis:
        _write(basis_text(spec, res.basis), args.basis)
    return 0 if res.row.verified is not False else 1


def cmd_gen(args) -> int:
    if args.family == "binomial":
        spec = gen_binomial(args.n, args.d, args.count, args.seed, args.char)
    elif args.family == "cyclic":
        spec = gen_cyclic(args.n, args.char, args.homogeneous)
    else:
        spec = gen_katsura(args.n, args.char, args.homogeneous)
    _write(spec.to_text(), args.output)
    return 0


def cmd_verify(args) -> int:
    spec = load_problem(args.file)
    text = Path(args.basis_file).read_text()
    basis = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.split(" ", 1)[0] in ("char", "vars"):
            continue
        try:
            basis.append(parse_poly(line, spec.ring))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    is_gb = verify_gb(basis)
    # same ideal: compare reduced bases with an independent computation
    ref = run_config(spec, Config("gm", "", "", False, False)).basis
    same = is_gb and bases_equal(basis, ref)
    print(f"groebner basis: {'yes' if is_gb else 'no'}")
    print(f"same ideal as input: {'yes' if same else 'no'}")
    return 0 if same else 1


def cmd_bench(args) -> int:
    specs = corpus(args.binomials, args.max_cyclic, args.max_katsura)
    rows = []
    for spec in specs:
        rows += [r.row for r in run_experiment(spec, config_matrix(), verify=args.check)]
    _write(emit_report(rows, args.report), args.output)
    return 0 if all(r.verified is not False for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sigrb", description="Signature-based Groebner bases "
                                 "with zero-reduction accounting.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="cmd", required=True)

    run = sub.add_parser("run", help="compute a Groebner basis and report zero reductions")
    run.add_argument("file")
    run.add_argument("--engine", choices=("rb", "gm"), default="rb")
    run.add_argument("--module-order", default="pot",
                     choices=("pot", "pot-rev", "dpot", "d-pot", "ltpot", "lt-pot"))
    run.add_argument("--rewrite", choices=("add", "rat"), default="rat")
    run.add_argument("--update-syz", action="store_true")
    run.add_argument("--product-criterion", action="store_true")
    run.add_argument("--report", choices=("table", "csv", "json"), default="table")
    run.add_argument("--log", help="write the per-pair event log here")
    run.add_argument("--basis", help="write the basis as a problem file ('-' for stdout)")
    run.add_argument("--check", action="store_true", help="verify the result")
    run.set_defaults(func=cmd_run)

    gen = sub.add_parser("gen", help="write a benchmark system")
    gen.add_argument("family", choices=("binomial", "cyclic", "katsura"))
    gen.add_argument("n", type=int, help="number of variables")
    gen.add_argument("-d", type=int, default=2, help="binomial degree")
    gen.add_argument("--count", type=int, default=None, help="binomial generator count")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--char", type=int, default=DEFAULT_CHAR)
    gen.add_argument("--homogeneous", action="store_true")
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="check a basis file against a problem file")
    ver.add_argument("file")
    ver.add_argument("basis_file")
    ver.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="run the configuration matrix over the corpus")
    bench.add_argument("--binomials", type=int, default=50)
    bench.add_argument("--max-cyclic", type=int, default=6)
    bench.add_argument("--max-katsura", type=int, default=6)
    bench.add_argument("--report", choices=("table", "csv", "json"), default="table")
    bench.add_argument("--check", action="store_true")
    bench.add_argument("-o", "--output")
    bench.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, ValueError) as exc:
        print(f"sigrb: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
