from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from tribquat import seq_core as sc
from tribquat.errors import DegenerateDelta, NegativeIndexWithZeroT, UnknownPreset
from tribquat.seq_core import SequenceParams

from conftest import any_params, brute_p

TRIB = sc.preset("tribonacci")
JAC = sc.preset("third-order-jacobsthal")
NAR = sc.preset("narayana")


@pytest.mark.parametrize("params, n, expected", [
    (TRIB, 0, 0),
    (TRIB, 10, 81),
    (JAC, 7, 37),
])
def test_term_examples(params, n, expected):
    assert sc.term(params, n) == expected


def test_u_term_examples():
    assert sc.u_term(TRIB, 2) == 1
    assert sc.u_term(TRIB, 5) == 4
    p = SequenceParams(3, -1, 2, 7, 1, 1)
    assert sc.u_term(p, -1) == 1
    assert sc.u_term(p, -2) == -1


def test_u_term_negative_general():
    p = SequenceParams(0, 0, 0, 2, 3, 5)
    assert sc.u_term(p, -1) == Fraction(1, 5)
    assert sc.u_term(p, -2) == Fraction(-3, 25)


def test_u_term_negative_requires_t():
    p = SequenceParams(0, 0, 1, 1, 1, 0)
    with pytest.raises(NegativeIndexWithZeroT):
        sc.u_term(p, -1)
    with pytest.raises(NegativeIndexWithZeroT):
        sc.term_via_u(p, 0)
    # n >= 2 never touches negative U
    assert sc.term_via_u(p, 5) == sc.term(p, 5)


@pytest.mark.parametrize("params, n, expected", [(TRIB, 2, 1), (JAC, 7, 37), (NAR, 8, 9)])
def test_term_via_u_examples(params, n, expected):
    assert sc.term_via_u(params, n) == expected


def test_partial_sum_examples():
    assert sc.partial_sum(TRIB, 4) == 4
    assert sc.partial_sum(JAC, 3) == 4
    p = SequenceParams(Fraction(7, 3), 1, 2, 2, 2, 2)
    assert sc.partial_sum(p, 0) == Fraction(7, 3)


def test_partial_sum_degenerate():
    with pytest.raises(DegenerateDelta):
        sc.partial_sum(SequenceParams(1, 2, 3, 0, 1, 0), 5)


def test_presets():
    assert sc.preset("tribonacci").astuple() == (0, 0, 1, 1, 1, 1)
    assert sc.preset("narayana").astuple() == (0, 1, 1, 1, 0, 1)
    assert sc.preset("third-order-jacobsthal").astuple() == (0, 1, 1, 1, 1, 2)
    assert sc.preset("padovan-perrin").astuple() == (0, 1, 0, 0, 1, 1)
    with pytest.raises(UnknownPreset):
        sc.preset("fibonacci")


def test_parse_params():
    p = sc.parse_params("1/2, -3, 0, 1, 2/4, 7")
    assert p.astuple() == (Fraction(1, 2), -3, 0, 1, Fraction(1, 2), 7)
    with pytest.raises(ValueError):
        sc.parse_params("1,2,3")


def test_window_advance():
    w = sc.window(TRIB, 4)
    assert w.advance(TRIB) == sc.window(TRIB, 5)


@settings(max_examples=60, deadline=None)
@given(any_params, st.integers(0, 40))
def test_recurrence_closure(p, n):
    v = brute_p(p, n + 4)
    assert sc.term(p, n) == v[n]
    assert sc.terms(p, n + 1) == v[: n + 1]
    if n >= 3:
        assert sc.term(p, n) == p.r * sc.term(p, n - 1) + p.s * sc.term(p, n - 2) + p.t * sc.term(p, n - 3)


@settings(max_examples=60, deadline=None)
@given(any_params, st.integers(0, 40))
def test_basis_equivalence(p, n):
    if p.t == 0 and n < 2:
        return
    assert sc.term_via_u(p, n) == brute_p(p, n + 1)[n]


@settings(max_examples=60, deadline=None)
@given(any_params, st.integers(0, 40))
def test_summation_equivalence(p, n):
    if sc.delta(p) == 0:
        return
    assert sc.partial_sum(p, n) == sum(brute_p(p, n + 1), Fraction(0))


@settings(max_examples=40, deadline=None)
@given(any_params)
def test_backward_forward_consistency(p):
    if p.t == 0:
        return
    um2, um1, u0 = sc.u_term(p, -2), sc.u_term(p, -1), sc.u_term(p, 0)
    u1 = p.r * u0 + p.s * um1 + p.t * um2
    u2 = p.r * u1 + p.s * u0 + p.t * um1
    assert (u1, u2) == (0, 1)


@settings(max_examples=40, deadline=None)
@given(any_params, st.integers(-2, 20))
def test_normalized(p, n):
    if n < 0 and p.t == 0:
        return
    for x in (sc.u_term(p, n), sc.term(p, max(n, 0))):
        assert isinstance(x, Fraction)
        assert x.denominator > 0 and gcd(abs(x.numerator), x.denominator) == 1
