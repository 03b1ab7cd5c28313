from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from genasso.coxeter import GroupTooLarge, WeakOrderLattice, build_system, coset_min, parabolic_cosets

from conftest import float_bfs_order, system


@pytest.mark.parametrize("name,order", [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("B3", 48),
                                        ("H3", 120), ("I2:5", 10), ("I2:7", 14), ("I2:4xI2:2", 32)])
def test_group_order(name, order):
    cs = system(name)
    assert cs.order == order == float_bfs_order(cs)


def test_coxeter_matrices():
    assert system("H3").coxeter_matrix == [[1, 5, 2], [5, 1, 3], [2, 3, 1]]
    assert system("B3").coxeter_matrix == [[1, 4, 2], [4, 1, 3], [2, 3, 1]]
    assert system("I2:7").coxeter_matrix == [[1, 7], [7, 1]]
    assert system("A1xA1").coxeter_matrix == [[1, 2], [2, 1]]


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "I2:6"])
def test_longest_element(name):
    cs = system(name)
    w0 = cs.longest
    assert w0.length == cs.roots.npos
    assert w0 * w0 == cs.identity
    assert all(cs.leq(w, w0) for w in cs.elements)


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_reduced_words(name):
    cs = system(name)
    for w in cs.elements:
        word = w.word
        assert len(word) == w.length
        assert cs.from_word(word) == w
        # lexicographically least among reduced words: no smaller left descent exists
        if word:
            assert all(not cs.is_left_descent(w, k) for k in range(word[0]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=12))
def test_matrix_action_matches_reflections(word):
    cs = system("H3")
    a = tuple(cs.field.coerce(x) for x in (1, 2, 3))
    w = cs.from_word(word)
    assert cs.act(w, a) == cs.act_by_word(word, a)
    assert w.length <= len(word)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=10), st.lists(st.integers(0, 2), max_size=10))
def test_group_law(u_word, v_word):
    cs = system("B3")
    u, v = cs.from_word(u_word), cs.from_word(v_word)
    a = cs.roots.fundamental_weights()[0]
    assert cs.act(u * v, a) == cs.act(u, cs.act(v, a))
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert cs.from_word(tuple(u_word) + tuple(v_word)) == u * v


def test_parse_and_format_words(a3):
    assert a3.parse_word("t1t2t3") == (0, 1, 2)
    assert a3.parse_word("τ₂τ₁") == (1, 0)
    assert a3.parse_word("t1.t2 t3") == (0, 1, 2)
    assert a3.parse_word("e") == ()
    assert a3.format_word((0, 1), unicode=True) == "τ₁τ₂"
    with pytest.raises(ValueError):
        a3.parse_word("t4")
    b3 = system("B3")
    assert b3.parse_word("s0t1t2") == (0, 1, 2)


def test_weak_order_lattice():
    cs = system("A3")
    wl = WeakOrderLattice(cs)
    assert len(wl.covers) == 36
    n = len(wl.elements)
    for i, j in itertools.combinations(range(n), 2):
        m, k = wl.meet(i, j), wl.join(i, j)
        assert wl.leq(m, i) and wl.leq(m, j) and wl.leq(i, k) and wl.leq(j, k)
    # leq agrees with prefix-of-reduced-word
    for u in cs.elements:
        for v in cs.elements:
            prefix = (u.inverse() * v).length == v.length - u.length
            assert cs.leq(u, v) == prefix


@pytest.mark.parametrize("name,count", [("A3", 2), ("B3", 1), ("H3", 1), ("I2:4", 2), ("I2:5", 2),
                                        ("A1xA1xA1", 6)])
def test_automorphisms(name, count):
    autos = system(name).automorphisms()
    assert len(autos) == count
    assert autos[0] == tuple(range(system(name).rank))


def test_parabolic_cosets():
    cs = system("B3")
    cosets = parabolic_cosets(cs, [1, 2])
    assert len(cosets) == 48 // 6
    for rep, members in cosets:
        assert rep.length == min(m.length for m in members)
        assert all(coset_min(cs, m, [1, 2]) == rep for m in members)


def test_group_bound():
    with pytest.raises(GroupTooLarge):
        build_system("H3", bound=50).elements
