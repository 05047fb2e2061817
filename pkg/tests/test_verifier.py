from __future__ import annotations

import pytest

from sigrb.field import PrimeField
from sigrb.gm import buchberger_run
from sigrb.polynomials import PolyRing
from sigrb.problems import parse_poly
from sigrb.rb import RB
from sigrb.verifier import bases_equal, reduce_basis, verify_gb

R = PolyRing(PrimeField(32003), ("x", "y"))


def P(s):
    return parse_poly(s, R)


@pytest.mark.parametrize(
    "G,expected",
    [(["x", "y"], True), (["x*y - 1"], True), (["x*y - 1", "x^2"], False), (["x^2 - y", "x*y - 1"], False)],
)
def test_verify_small(G, expected):
    assert verify_gb([P(g) for g in G]) is expected


@pytest.mark.parametrize("exhaustive", [False, True])
def test_witness(exhaustive):
    w = []
    assert not verify_gb([P("x*y - 1"), P("x^2")], w, exhaustive)
    assert w and w[0][2]


def test_single_generator_does_not_cover_ideal():
    # {xy - 1} is a basis of its own ideal, not of <xy - 1, x^2>
    assert not bases_equal([P("x*y - 1")], buchberger_run([P("x*y - 1"), P("x^2")])[0])


def test_product_example_bases(product_spec):
    rb = RB(product_spec.gens, "pot").run().polys()
    assert verify_gb(rb) and verify_gb(rb, exhaustive=True)
    assert bases_equal(rb, buchberger_run(product_spec.gens)[0])
    assert not verify_gb(product_spec.gens)


def test_reduce_basis_drops_redundant():
    assert reduce_basis([P("x"), P("x^2 + x*y")]) == [P("x")]
    assert bases_equal([P("x")], [P("x"), P("x^2")])


def test_reduce_basis_tail_and_monic():
    assert reduce_basis([P("2*x + 2*y"), P("3*y - 3")]) == [P("x + 1"), P("y - 1")]


def test_bases_equal_reflexive(product_spec):
    assert bases_equal(product_spec.gens, list(product_spec.gens))
