from __future__ import annotations

import pytest

from sigrb.signatures import ModuleOrder, Signature, koszul_signature, order_kind, sig_div, sig_divides

# leads of the product example: yz, y^2, xy, x^2 over (x, y, z, t)
LEADS = ((0, 1, 1, 0), (0, 2, 0, 0), (1, 1, 0, 0), (2, 0, 0, 0))


def ctx(kind):
    return ModuleOrder(kind, LEADS, (2, 2, 2, 2))


def S(mono, i):
    return Signature(tuple(mono), i)


@pytest.mark.parametrize("alias,kind", [("dpot", "d-pot"), ("LTPOT", "lt-pot"), ("potrev", "pot-rev")])
def test_aliases(alias, kind):
    assert order_kind(alias) == kind


def test_unknown_order():
    with pytest.raises(ValueError):
        order_kind("top")


@pytest.mark.parametrize(
    "kind,s,t,sign",
    [
        ("pot", S((0, 0, 0, 0), 2), S((5, 0, 0, 0), 1), 1),  # index first
        ("pot-rev", S((0, 0, 0, 0), 2), S((5, 0, 0, 0), 1), -1),
        ("d-pot", S((0, 0, 0, 0), 2), S((1, 0, 0, 0), 1), -1),  # degree 2 < 3
        ("d-pot", S((0, 0, 1, 0), 1), S((1, 0, 0, 0), 1), -1),  # then grevlex
        # lt-pot: y*e1 -> y^2 z and z*e2 -> y^2 z tie, index breaks it
        ("lt-pot", S((0, 1, 0, 0), 1), S((0, 0, 1, 0), 2), -1),
        ("lt-pot", S((0, 0, 0, 0), 4), S((0, 0, 0, 0), 1), 1),  # x^2 > yz
    ],
)
def test_orders(kind, s, t, sign):
    assert ctx(kind).cmp(s, t) == sign


def test_pair_signature_product_example():
    # z*g2 vs y*g1 under pot: z*e2 is larger
    c = ctx("pot")
    assert c.max(S((0, 0, 1, 0), 2), S((0, 1, 0, 0), 1)) == S((0, 0, 1, 0), 2)


def test_koszul():
    assert koszul_signature(ctx("pot"), 1, 2) == S((0, 1, 1, 0), 2)
    with pytest.raises(ValueError):
        koszul_signature(ctx("pot"), 2, 1)


def test_divisibility():
    s, t = S((0, 1, 0, 0), 3), S((1, 1, 0, 0), 3)
    assert sig_divides(s, t) and not sig_divides(t, s)
    assert not sig_divides(s, S((1, 1, 0, 0), 2))
    assert sig_div(t, s) == (1, 0, 0, 0)
    with pytest.raises(ValueError):
        sig_div(t, S((0, 0, 0, 0), 1))


def test_format():
    names = ("x", "y", "z", "t")
    assert S((0, 0, 0, 0), 3).format(names) == "e_3"
    assert S((0, 1, 1, 0), 2).format(names) == "y*z*e_2"
