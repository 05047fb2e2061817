"""Shared fixtures: the two worked examples and a session cache of corpus runs."""

from __future__ import annotations

from functools import lru_cache

import pytest

from sigrb.harness import EXAMPLE_CHAIN, EXAMPLE_PRODUCT, corpus
from sigrb.problems import parse_poly, parse_problem

# criterion id -> (passed, detail); filled by test_acceptance, printed at the end
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@lru_cache(maxsize=None)
def corpus_specs():
    return tuple(corpus())


@pytest.fixture(scope="session")
def product_spec():
    return parse_problem(EXAMPLE_PRODUCT, "example-product")


@pytest.fixture(scope="session")
def chain_spec():
    return parse_problem(EXAMPLE_CHAIN, "example-chain")


@pytest.fixture
def P(product_spec):
    """Parse a polynomial in F7[x, y, z, t]."""
    return lambda s: parse_poly(s, product_spec.ring)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=_crit_key):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")


def _crit_key(k: str):
    num = "".join(ch for ch in k if ch.isdigit())
    return (int(num), k)
