from __future__ import annotations

import pytest

from sigrb.polynomials import format_poly
from sigrb.problems import gen_katsura
from sigrb.rb import PC_REMOVED, REWRITTEN_G, RB, ZERO, SyzygySigSet, rb_run
from sigrb.signatures import Signature

NAMES = ("x", "y", "z", "t")

PRODUCT_ROWS = [
    ("y*z - z^2", "e_1"),
    ("y^2 - x*t", "e_2"),
    ("x*y - x*z", "e_3"),
    ("x^2 - x*z", "e_4"),
    ("z^3 - x*z*t", "z*e_2"),
    ("x*z^2 - x*z*t", "y*e_3"),
]

CHAIN_ROWS = [
    ("y*z", "e_1"),
    ("x*y", "e_2"),
    ("x*t^2", "z*e_2"),
    ("x^2*z", "e_3"),
    ("y^2*t^2", "y*e_3"),
    ("z^3*t^2", "t^2*e_3"),
]


def rows(eng):
    return [(format_poly(b.poly), b.sig.format(NAMES)) for b in eng.basis]


def lead_rows(eng):
    return [(format_poly(b.poly.ring.monomial(b.lm)), b.sig.format(NAMES)) for b in eng.basis]


@pytest.mark.parametrize(
    "order,update,pc,zeros",
    [
        ("pot", False, False, 4),
        ("d-pot", False, False, 4),
        ("lt-pot", False, False, 5),
        ("pot", True, False, 2),
        ("d-pot", True, False, 2),
        ("lt-pot", True, False, 3),
        ("lt-pot", True, True, 2),
    ],
)
def test_product_example_counts(product_spec, order, update, pc, zeros):
    eng = RB(product_spec.gens, order, "rat", update, pc).run()
    assert eng.stats.zero_reductions == zeros
    # S(f3, f1) vanishes before any reduction and is counted apart
    assert eng.stats.zero_spolys == 1


def test_product_example_basis_lt_pot(product_spec):
    eng = RB(product_spec.gens, "lt-pot").run()
    assert rows(eng) == PRODUCT_ROWS


def test_product_example_stage_two_removal(product_spec):
    eng = RB(product_spec.gens, "lt-pot", "rat", True, True).run()
    removed = [ev for ev in eng.events if ev.decision == PC_REMOVED]
    assert len(removed) == 1
    ev = removed[0]
    assert ev.stage == 2
    assert {ev.left[1], ev.right[1]} == {3, 4}
    assert ev.sig.format(NAMES) == "x^2*z*e_2"
    assert eng.stats.spairs_removed_pc == 1


def test_pot_update_adds_first_jump(product_spec):
    # inserting g2 = y^2 - xt jumps to index 2: H gains lt(g1)*e_2
    eng = RB(product_spec.gens, "pot", update_syz=True).run()
    assert Signature((0, 1, 1, 0), 2) in eng.H
    # so the pair that reduced to zero there without the update is skipped
    at = [e.decision for e in eng.events if e.sig == Signature((0, 1, 1, 0), 2)]
    assert ZERO not in at


def test_chain_example(chain_spec):
    eng = RB(chain_spec.gens, "pot", "rat").run()
    assert lead_rows(eng) == CHAIN_ROWS
    # S(g6, g1): y*g6 is rewritten by t^2*g5
    (ev,) = [e for e in eng.events if {e.left[1], (e.right or (0, -9))[1]} == {5, 0}]
    assert ev.decision == REWRITTEN_G
    assert ev.rewriter == ("G", 4, (0, 0, 0, 2))


def test_rat_prefers_smaller_ratio(chain_spec):
    eng = RB(chain_spec.gens, "pot", "rat").run()
    g5, g6 = eng.basis[4], eng.basis[5]
    assert eng.rewrite_less(g6, g5)
    assert not eng.rewrite_less(g5, g6)


def test_add_order_is_insertion(chain_spec):
    eng = RB(chain_spec.gens, "pot", "add").run()
    assert eng.rewrite_less(eng.basis[4], eng.basis[5])


@pytest.mark.parametrize("order", ["pot", "pot-rev", "d-pot", "lt-pot"])
@pytest.mark.parametrize("rewrite", ["add", "rat"])
def test_signatures_nondecreasing(product_spec, order, rewrite):
    eng = RB(product_spec.gens, order, rewrite).run()
    processed = [eng.ctx.key(e.sig) for e in eng.events if e.decision in ("reduced", ZERO)]
    assert processed == sorted(processed)


def test_zero_reductions_match_events(product_spec):
    eng = RB(product_spec.gens, "lt-pot").run()
    zeros = [e for e in eng.events if e.decision == ZERO and not e.trivial]
    assert len(zeros) == eng.stats.zero_reductions


def test_koszul_seeding_lowers_counts(product_spec):
    base = RB(product_spec.gens, "pot").run().stats.zero_reductions
    seeded = RB(product_spec.gens, "pot", koszul=True).run().stats.zero_reductions
    assert seeded < base


def test_katsura_regular_under_pot():
    spec = gen_katsura(4)
    eng = RB(spec.gens, "pot", update_syz=True).run()
    assert eng.stats.zero_reductions == 0


def test_bad_arguments(product_spec):
    with pytest.raises(ValueError):
        RB(product_spec.gens, rewrite="mul")
    with pytest.raises(ValueError):
        RB(product_spec.gens, "d-pot", lead_update="some")
    with pytest.raises(ValueError):
        RB([])


def test_rb_run_returns_basis(product_spec):
    basis, H, stats = rb_run(product_spec.gens, "pot")
    assert len(basis) == 6 and stats.zero_reductions == 4
    assert len(H) == stats.zero_reductions + stats.zero_spolys


def test_syzygy_set_minimal():
    H = SyzygySigSet()
    assert H.add(Signature((1, 1), 2))
    assert not H.add(Signature((2, 1), 2))
    assert H.add(Signature((1, 0), 2))
    assert list(H) == [Signature((1, 0), 2)]
    assert H.add(Signature((1, 1), 1)) and len(H) == 2
