import pytest
from hypothesis import given, strategies as hs

import oracles
from conftest import W
from mahonian.errors import DimensionError, MalformedMultisetError
from mahonian.words import (
    compositions, consecutive_permutations, content, enumerate_pm, enumerate_with_tail,
    enumerate_words, format_multiset, format_word, is_consecutive, istd, multinomial,
    parse_multiset, parse_word, std, tail_permutation, two_line,
)
from mahonian.statistics import inv


def strs(it):
    return [format_word(w) for w in it]


def test_enumerate_words_examples():
    assert strs(enumerate_words((2, 2))) == ["1122", "1212", "1221", "2112", "2121", "2211"]
    assert strs(enumerate_words((1,))) == ["1"]
    ws = strs(enumerate_words((2, 1, 1)))
    assert len(ws) == 12 and ws[0] == "1123" and ws[-1] == "3211"


@pytest.mark.parametrize("n", range(0, 7))
def test_enumerate_words_against_oracle(n):
    for M in oracles.compositions_of(n):
        assert list(enumerate_words(M)) == oracles.words_of(M)
        assert len(oracles.words_of(M)) == multinomial(M)


def test_tail_permutation_examples():
    assert format_word(tail_permutation(W("331322112441"))) == "3241"
    assert tail_permutation(W("123")) == (1, 2, 3)
    assert tail_permutation(W("2112")) == (1, 2)


def test_tail_permutation_gap():
    with pytest.raises(MalformedMultisetError):
        tail_permutation(W("1331"))


def test_is_consecutive():
    assert is_consecutive(W("54362718"))
    assert not is_consecutive(W("54236718"))
    assert all(is_consecutive(tuple(range(1, m + 1))) for m in range(1, 8))


@pytest.mark.parametrize("m", range(1, 8))
def test_consecutive_count(m):
    ps = consecutive_permutations(m)
    assert len(ps) == 2 ** (m - 1)
    assert all(is_consecutive(p) for p in ps)


def test_enumerate_with_tail_examples():
    assert strs(enumerate_with_tail((2, 2), (2, 1))) == ["1221", "2121", "2211"]
    assert strs(enumerate_with_tail((2, 2), (1, 2))) == ["1122", "1212", "2112"]
    assert strs(enumerate_with_tail((1, 1), (1, 2))) == ["12"]
    assert list(enumerate_pm((2, 2))) == list(enumerate_with_tail((2, 2), (1, 2)))


def test_enumerate_with_tail_errors():
    with pytest.raises(DimensionError):
        list(enumerate_with_tail((2, 2), (1, 2, 3)))
    with pytest.raises(MalformedMultisetError):
        list(enumerate_with_tail((2, 0, 1), (1, 2, 3)))


@pytest.mark.parametrize("n", range(1, 7))
def test_tail_classes_partition_sm(n):
    from itertools import permutations
    for M in oracles.compositions_of(n):
        pieces = [list(enumerate_with_tail(M, t)) for t in permutations(range(1, len(M) + 1))]
        flat = [w for piece in pieces for w in piece]
        assert sorted(flat) == oracles.words_of(M)
        assert len(flat) == len(set(flat))
        for t in permutations(range(1, len(M) + 1)):
            assert list(enumerate_with_tail(M, t)) == [w for w in oracles.words_of(M)
                                                        if oracles.tail_of(w) == t]


def test_std_istd_examples():
    assert format_word(std(W("32112133"))) == "64125378"
    assert format_word(std(W("213123"))) == "315246"
    assert std(W("315246")) == W("315246")
    assert format_word(istd((2, 2, 2), W("513246"))) == "312123"
    assert istd((4,), W("3142")) == W("1111")
    assert format_word(istd((2, 2), W("3142"))) == "2121"
    with pytest.raises(DimensionError):
        istd((2, 2), W("123"))


@pytest.mark.parametrize("n", range(0, 8))
def test_std_roundtrip(n):
    for M in oracles.compositions_of(n):
        for w in enumerate_words(M):
            p = std(w)
            assert p == oracles.standardize(w)
            assert istd(M, p) == w
            assert inv(p) == inv(w)


def test_two_line():
    b = two_line(W("124324"))
    assert format_word(b.top) == "122344" and format_word(b.bottom) == "124324"
    assert format_word(two_line(W("5311244323")).top) == "1122333445"
    assert two_line(W("1123")).top == two_line(W("1123")).bottom


def test_parse_format():
    assert parse_word("1,10,2") == (1, 10, 2)
    assert format_word((1, 10, 2)) == "1,10,2"
    assert format_word(parse_word("211323")) == "211323"
    assert parse_multiset("2,2,2") == (2, 2, 2)
    assert format_multiset((2, 1)) == "2,1"
    with pytest.raises(ValueError):
        parse_word("1a")
    with pytest.raises(ValueError):
        parse_word("1,0")


def test_compositions():
    assert list(compositions(0)) == [()]
    assert sum(1 for _ in compositions(8)) == 128
    assert sorted(compositions(5)) == sorted(oracles.compositions_of(5))


@given(hs.lists(hs.integers(1, 5), max_size=9))
def test_std_istd_property(w):
    w = tuple(w)
    assert istd(content(w), std(w)) == w
    assert sorted(std(w)) == list(range(1, len(w) + 1))
