from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from sigrb.monomials import (
    MonomialError,
    format_monomial,
    grevlex_key,
    mcmp_grevlex,
    mcoprime,
    mdiv,
    mdivides,
    mlcm,
    mmul,
    support_mask,
)

mono3 = st.tuples(*[st.integers(0, 4)] * 3)


@pytest.mark.parametrize(
    "a,b,sign",
    [
        ((1, 0, 0), (0, 1, 0), 1),  # x > y
        ((0, 2, 0), (1, 0, 1), 1),  # y^2 > xz: last variable decides
        ((1, 1, 0), (2, 0, 0), -1),  # xy < x^2
        ((0, 0, 3), (1, 0, 0), 1),  # degree first
        ((1, 2, 0), (1, 2, 0), 0),
    ],
)
def test_grevlex_cmp(a, b, sign):
    assert mcmp_grevlex(a, b) == sign


def test_grevlex_sorted_degree_two():
    names = ("x", "y", "z")
    monos = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    desc = sorted(monos, key=grevlex_key, reverse=True)
    assert [format_monomial(m, names) for m in desc] == ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]


def test_size_mismatch():
    with pytest.raises(MonomialError):
        mcmp_grevlex((1, 0), (1, 0, 0))


def test_inexact_division():
    with pytest.raises(MonomialError):
        mdiv((1, 0), (0, 1))


@pytest.mark.parametrize(
    "a,b,lcm,coprime",
    [((1, 1, 0), (0, 1, 1), (1, 1, 1), False), ((2, 0, 0), (0, 0, 1), (2, 0, 1), True)],
)
def test_lcm_and_coprime(a, b, lcm, coprime):
    assert mlcm(a, b) == lcm
    assert mcoprime(a, b) is coprime


@given(mono3, mono3, mono3)
def test_multiplicative(a, b, c):
    # grevlex is a monomial order
    assert mcmp_grevlex(mmul(a, c), mmul(b, c)) == mcmp_grevlex(a, b)


@given(mono3, mono3)
def test_divisibility_and_masks(a, b):
    ab = mmul(a, b)
    assert mdivides(a, ab) and mdiv(ab, a) == b
    assert mdivides(a, mlcm(a, b))
    if mdivides(a, b):
        assert support_mask(a) & ~support_mask(b) == 0
