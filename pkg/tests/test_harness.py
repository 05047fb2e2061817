from __future__ import annotations

import csv
import io
import json

import pytest

from sigrb.harness import (
    CSV_COLUMNS,
    GM,
    Config,
    ReportRow,
    binomial_corpus,
    config_matrix,
    corpus,
    emit_report,
    run_config,
    run_experiment,
)


def test_matrix_shape():
    m = config_matrix()
    assert len(m) == 33 and m[0] == GM
    assert m[1] == Config("rb", "pot", "add", False, False)
    assert m[2].pc and not m[2].update_syz
    assert len(set(m)) == 33


@pytest.mark.parametrize(
    "cfg,label",
    [
        (GM, "gm"),
        (Config("rb", "lt-pot", "rat", True, True), "rb lt-pot rat U+PC"),
        (Config("rb", "pot", "add"), "rb pot add"),
    ],
)
def test_labels(cfg, label):
    assert cfg.label == label


def test_unknown_engine():
    with pytest.raises(ValueError):
        Config("f4")


@pytest.mark.parametrize("row,cell", [
    (ReportRow("b", "rb", "pot", "rat", True, True, 771, 17, 0), "771(17,0)"),
    (ReportRow("b", "rb", "pot", "rat", True, False, 5), "5"),
])
def test_cell(row, cell):
    assert row.cell() == cell


def test_run_experiment_product(product_spec):
    res = run_experiment(product_spec)
    assert all(r.row.verified for r in res)
    cells = {r.config.label: r.row.cell() for r in res}
    assert cells["rb lt-pot rat U+PC"] == "2(1,1)"
    assert cells["rb lt-pot rat"] == "5"
    assert cells["gm"] == "5"


def test_reports(product_spec):
    rows = [run_config(product_spec, c).row for c in reversed(config_matrix()[:5])]
    table = emit_report(rows).splitlines()
    assert table[0].split() == ["benchmark", "config", "zero", "reductions"]
    assert "gm" in table[2]
    data = list(csv.reader(io.StringIO(emit_report(rows, "csv"))))
    assert tuple(data[0]) == CSV_COLUMNS
    assert data[1][1] == "gm"
    assert data[2][7:] == ["", ""] and data[3][7] != ""
    js = json.loads(emit_report(rows, "json"))
    assert js[0]["engine"] == "gm" and len(js) == 5


def test_empty_report():
    assert emit_report([], "csv") == ",".join(CSV_COLUMNS) + "\n"
    assert len(emit_report([]).splitlines()) == 2
    with pytest.raises(ValueError):
        emit_report([], "xml")


def test_corpus_composition():
    names = [s.name for s in corpus()]
    assert names[:2] == ["example-product", "example-chain"]
    assert {"cyclic-4", "cyclic-6", "katsura-3", "katsura-6"} <= set(names)
    assert len(names) == 2 + 3 + 4 + 50
    shapes = {(s.ring.nvars, s.gens[0].degree()) for s in binomial_corpus()}
    assert shapes == {(n, d) for n in (4, 5, 6) for d in (2, 3)}


def test_log_lines(chain_spec):
    res = run_config(chain_spec, Config("rb", "pot", "rat"))
    lines = res.log_lines()
    assert any("decision=rewritten-G stage=3" in line for line in lines)
    assert all(line.startswith("pair=") for line in lines)
