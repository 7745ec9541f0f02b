import json

import pytest
from hypothesis import given, strategies as hs

import oracles
from mahonian.errors import ParameterError
from mahonian.partitions import enumerate_partitions, mahonian_word
from mahonian.qpoly import (
    InexactDivisionError, QPoly, TQPoly, bell, carlitz_stirling, johnson_stirling,
    q_binom, q_fact, q_int, stirling2,
)
from mahonian.statistics import inv

TABLE3_POLY = QPoly([1, 2, 3, 3, 3, 2, 1])


def test_q_analogs():
    assert q_int(3) == QPoly([1, 1, 1])
    assert q_binom(4, 2) == QPoly([1, 1, 2, 1, 1])
    assert q_binom(4, 2) == q_fact(4).exact_divide(q_fact(2) * q_fact(2))
    assert all(q_binom(n, 0) == 1 for n in range(8))
    with pytest.raises(ParameterError):
        q_binom(2, 3)


def test_poly_ops():
    assert QPoly([1, 1]) * QPoly([1, 1]) == QPoly([1, 2, 1])
    assert TABLE3_POLY.eval_at_one() == 15
    assert q_fact(3).exact_divide(q_fact(2)) == QPoly([1, 1, 1])
    with pytest.raises(InexactDivisionError):
        QPoly([1, 0, 1]).exact_divide(QPoly([1, 1]))
    with pytest.raises(ArithmeticError):
        QPoly([1, 0, 1]).exact_divide(QPoly([1, 1]))
    assert QPoly([0, 0]) == QPoly() and QPoly().degree == float("-inf")
    assert QPoly([1, 2]) - QPoly([1, 2]) == QPoly()
    assert QPoly([1, 2, 3])(2) == 17


def test_rendering():
    assert str(TABLE3_POLY) == "1 + 2*q + 3*q^2 + 3*q^3 + 3*q^4 + 2*q^5 + q^6"
    assert str(QPoly()) == "0"
    assert str(QPoly([0, -1])) == "-q"
    assert str(TQPoly({(0, 0): 1, (1, 1): 1, (1, 2): 1})) == "1 + t*q + t*q^2"
    assert json.loads(TABLE3_POLY.to_json()) == {"0": 1, "1": 2, "2": 3, "3": 3, "4": 3, "5": 2, "6": 1}
    assert QPoly.from_dict(TABLE3_POLY.to_dict()) == TABLE3_POLY


def test_tq_marginal():
    p = TQPoly.from_counts([(0, 0), (1, 1), (1, 2)])
    assert p.q_marginal() == QPoly([1, 1, 1]) and p.eval_at_one() == 3


def test_stirling_examples():
    assert carlitz_stirling(0, 0) == 1 and johnson_stirling(0, 0) == 1
    assert carlitz_stirling(3, 2) == QPoly([2, 1]) == johnson_stirling(3, 2)
    assert all(carlitz_stirling(n, n) == 1 for n in range(11))
    assert all(johnson_stirling(n, 1) == 1 for n in range(1, 9))
    assert stirling2(4, 2) == 7 and bell(0) == 1 and bell(3) == 5


@pytest.mark.parametrize("n", range(0, 11))
def test_q_stirling_at_one(n):
    for m in range(n + 1):
        s = stirling2(n, m)
        assert carlitz_stirling(n, m).eval_at_one() == s
        assert johnson_stirling(n, m).eval_at_one() == s
        if n <= 7:
            assert s == oracles.stirling_brute(n, m)


def test_carlitz_differs_from_johnson():
    diffs = [(n, m) for n in range(7) for m in range(n + 1)
             if carlitz_stirling(n, m) != johnson_stirling(n, m)]
    assert diffs


@pytest.mark.parametrize("n", range(0, 9))
def test_johnson_is_inv_distribution(n):
    for m in range(n + 1):
        brute = oracles.poly(inv(mahonian_word(p)) for p in enumerate_partitions(n, m))
        assert list(johnson_stirling(n, m).coeffs) == oracles.coeffs(brute)


@pytest.mark.parametrize("n", range(0, 13))
def test_q_binom_symmetric_nonnegative(n):
    for i in range(n + 1):
        c = q_binom(n, i).coeffs
        assert c == c[::-1] and all(x > 0 for x in c)


@given(hs.lists(hs.integers(-5, 5), max_size=6), hs.lists(hs.integers(-5, 5), max_size=6))
def test_ring_laws(a, b):
    p, q = QPoly(a), QPoly(b)
    assert p * q == q * p and p + q == q + p
    if q.coeffs and q.coeffs[-1] in (1, -1):
        assert (p * q).exact_divide(q) == p
