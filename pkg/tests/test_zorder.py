import itertools

from hypothesis import given, strategies as st

from fuzzyhybrid.zorder import gg, ll

R = range(-12, 13)


def test_documented_examples():
    assert all(ll(0, n) for n in range(-50, 51))
    assert ll(3, 4) and ll(-3, 4) and ll(-4, -3)


def test_non_examples():
    assert not ll(3, -4)
    assert not ll(4, 3)
    assert not ll(-3, -4)


def test_zero_is_unique_minimum():
    for n in range(-50, 51):
        assert ll(n, 0) == (n == 0)


def test_negatives_below_positives_and_positives_usual():
    for n, m in itertools.product(R, R):
        if n < 0 < m:
            assert ll(n, m) and not ll(m, n)
        if n > 0 and m > 0:
            assert ll(n, m) == (n <= m)


def test_total():
    for n, m in itertools.product(R, R):
        assert ll(n, m) or ll(m, n)


@given(st.integers(), st.integers(), st.integers())
def test_partial_order_unbounded(a, b, c):
    assert ll(a, a)
    if ll(a, b) and ll(b, a):
        assert a == b
    if ll(a, b) and ll(b, c):
        assert ll(a, c)
    assert gg(b, a) == ll(a, b)
