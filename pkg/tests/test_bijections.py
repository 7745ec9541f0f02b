import pytest
from hypothesis import given, settings, strategies as hs

import oracles
from conftest import W
from mahonian import bijections as bij
from mahonian import statistics as st
from mahonian.errors import DomainError, ParameterError
from mahonian.words import content, enumerate_pm, enumerate_words, format_word


def f(w):
    return format_word(w)


def test_jump_examples():
    assert f(bij.jump(W("21"), 1)) == "12"
    assert f(bij.jump(W("1213"), 2)) == "3121"
    assert f(bij.jump(W("31212"), 3)) == "31212"
    assert bij.jump((), 2) == ()


def test_foata_examples():
    assert f(bij.foata(W("211323"))) == "312123"
    assert f(bij.foata(W("112233"))) == "112233"
    assert f(bij.foata(W("21"))) == "21"
    assert f(bij.foata_d(W("213123"), 2)) == "312123"
    with pytest.raises(ParameterError):
        bij.foata_d(W("12"), 0)


def test_foata_d_large_d_is_identity():
    for n in range(7):
        for M in oracles.compositions_of(n):
            for w in enumerate_words(M):
                assert bij.foata_d(w, max(n, 1)) == w
                assert bij.foata_d(w, 1) == bij.foata(w)


def test_theta_examples():
    assert f(bij.theta(W("1112111222215622"), 1)) == "2222111122215611"
    assert f(bij.theta(W("3456"), 1)) == "3456"
    assert f(bij.theta(W("12"), 1)) == "12"


def test_cyclic_examples():
    assert f(bij.cyclic_up(W("123"), 2, 3)) == "231"
    assert f(bij.cyclic_up(W("2131"), 3, 3)) == "2131"
    assert f(bij.cyclic_up(W("22"), 1, 2)) == "11"
    assert f(bij.cyclic_down(W("123"), 2, 3)) == "132"
    assert f(bij.cyclic_down(W("3121"), 3, 3)) == "3121"
    with pytest.raises(DomainError):
        bij.cyclic_up(W("14"), 2, 3)
    with pytest.raises(DomainError):
        bij.cyclic_down(W("12"), 4, 3)


def test_cyclic_down_inverse():
    for m in range(1, 5):
        for x in range(1, m + 1):
            for w in enumerate_words((1,) * m):
                assert bij.cyclic_down_inverse(bij.cyclic_down(w, x, m), x, m) == w


def test_han_z_small():
    assert bij.han_z(W("3")) == W("3")
    assert f(bij.han_z(W("12"))) == "12" and f(bij.han_z(W("21"))) == "21"


def test_carlitz_examples():
    assert f(bij.carlitz_psi(W("315246"))) == "513246"
    assert f(bij.carlitz_psi(W("123456"))) == "123456"
    # inserting 9 with code entry 6 into 64125378
    v = list(W("64125378"))
    v.insert(bij.carlitz_labels(v).index(6), 9)
    assert f(v) == "641295378"
    assert f(bij.psi_m(W("213123"))) == "312123"
    assert f(bij.psi_m(W("112233"))) == "112233"
    with pytest.raises(DomainError):
        bij.carlitz_psi(W("112"))


def test_rawlings_small():
    for r in range(1, 5):
        assert f(bij.rawlings(W("1123"), r)) == "1123"
    assert f(bij.rawlings(W("12"), 2)) == "12" and f(bij.rawlings(W("21"), 2)) == "21"
    # one insertion step: another 5 into 215243152 at label 1, r = 3
    v = list(W("215243152"))
    v.insert(bij._rawlings_slot(v, 5, 3, 1), 5)
    assert f(v) == "2152431552"
    with pytest.raises(ParameterError):
        bij.rawlings(W("12"), 0)


def test_han_den_example():
    v, cycles = bij.han_den(W("124324"))
    assert f(v) == "123424"
    assert [(f(c.top), f(c.bottom)) for c in cycles] == [
        ("1", "1"), ("2", "2"), ("3", "3"), ("24", "42"), ("4", "4")]
    assert all(bij.is_dominated_cycle(c) for c in cycles)
    v, cycles = bij.han_den(W("11223"))
    assert f(v) == "11223" and all(len(c.top) == 1 for c in cycles)


def test_csz_example():
    assert f(bij.csz_phi(W("13213223"))) == "12331223"
    assert f(bij.csz_phi(W("111234"))) == "111234"


TRANSPORTS = [
    ("foata", lambda w: (st.maj(w),), bij.foata, lambda v: (st.inv(v),)),
    ("han_z", lambda w: (st.maj(w),), bij.han_z, lambda v: (st.z_index(v),)),
    ("psi_m", lambda w: (st.mstc(w), st.inv(w)), bij.psi_m, lambda v: (st.des(v), st.maj(v))),
    ("han_den", st.exc_den, lambda w: bij.han_den(w)[0], lambda v: (st.des(v), st.maj(v))),
    ("csz_phi", st.mak_mad, bij.csz_phi, lambda v: st.exc_den(v) + (st.inv(v),)),
]


@pytest.mark.parametrize("name,src,fn,tgt", TRANSPORTS, ids=[t[0] for t in TRANSPORTS])
def test_transport_small(name, src, fn, tgt):
    for n in range(6):
        for M in oracles.compositions_of(n):
            images = set()
            for w in enumerate_words(M):
                v = fn(w)
                assert tuple(src(w)) == tuple(tgt(v)), f(w)
                assert content(v) == content(w)
                images.add(v)
            assert len(images) == len(oracles.words_of(M))


def test_parametrized_transport_small():
    for n in range(6):
        for M in oracles.compositions_of(n):
            for w in enumerate_words(M):
                for k in range(1, n + 1):
                    assert st.inv(bij.foata_d(w, k)) == st.maj_d(w, k)
                    assert st.r_maj(bij.rawlings(w, k), k) == st.inv(w)


@settings(max_examples=60, deadline=None)
@given(hs.lists(hs.integers(1, 4), min_size=1, max_size=9))
def test_transport_random(w):
    w = tuple(w)
    assert st.inv(bij.foata(w)) == st.maj(w)
    assert st.z_index(bij.han_z(w)) == st.maj(w)
    assert (st.des(bij.psi_m(w)), st.maj(bij.psi_m(w))) == (st.mstc(w), st.inv(w))
    v = bij.han_den(w)[0]
    assert (st.des(v), st.maj(v)) == st.exc_den(w)
    v = bij.csz_phi(w)
    assert st.exc_den(v) + (st.inv(v),) == st.mak_mad(w)
    for r in (1, 2, 3):
        assert st.r_maj(bij.rawlings(w, r), r) == st.inv(w)


def test_pm_closed_example():
    pm = set(enumerate_pm((2, 2, 2)))
    assert {bij.csz_phi(w) for w in pm} == pm


def test_han_z_keeps_consecutive_tail():
    # letter 1 peeled last: phi_1 must be the plain cyclic shift
    assert f(bij.han_z(W("3241"))) == "3241"
    assert bij.phi(W("324"), 1, 4) == bij.cyclic_up(W("324"), 1, 4)
