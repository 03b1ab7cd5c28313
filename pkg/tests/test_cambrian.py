from __future__ import annotations

import pytest

from genasso.cambrian import (build_associahedron, c_singletons, c_sortables, c_sorting_word,
                              check_integer_coordinates, cluster_map, compare_centroids,
                              coxeter_elements, format_cluster, heap_of, isometry_equivalent,
                              last_root, make_coxeter_element, parse_coxeter, singleton_words)
from genasso.roots import PreconditionError

from conftest import context, system


def recursive_sortable(cs, w, cword) -> bool:
    """Sortability through the initial-letter recursion (conjugate or pass to a parabolic)."""
    if w == cs.identity:
        return True
    if not cword:
        return False
    s, rest = cword[0], tuple(cword[1:])
    if cs.is_left_descent(w, s):
        return recursive_sortable(cs, cs.s(s) * w, rest + (s,))
    if s in set(w.word):
        return False
    return recursive_sortable(cs, w, rest)


def commutation_class(cs, word) -> set:
    word = tuple(word)
    seen = {word}
    stack = [word]
    while stack:
        x = stack.pop()
        for i in range(len(x) - 1):
            if x[i] != x[i + 1] and cs.commute(x[i], x[i + 1]):
                y = x[:i] + (x[i + 1], x[i]) + x[i + 2:]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return seen


@pytest.mark.parametrize("name,count", [("A3", 4), ("B3", 4), ("H3", 4), ("I2:5", 2), ("A1xA1xA1", 1),
                                        ("A2xA1", 2)])
def test_coxeter_element_count(name, count):
    # one per acyclic orientation of the Coxeter graph
    assert len(coxeter_elements(system(name))) == count


def test_coxeter_element_rejects_bad_words(a3):
    with pytest.raises(ValueError):
        make_coxeter_element(a3, (0, 1))
    with pytest.raises(ValueError):
        make_coxeter_element(a3, (0, 0, 1))


@pytest.mark.parametrize("name", ["A3", "B3", "I2:5", "I2:6"])
def test_sortables_match_recursive_oracle(name):
    cs = system(name)
    for c in coxeter_elements(cs):
        fast = {w.perm for w in c_sortables(cs, c)}
        slow = {w.perm for w in cs.elements if recursive_sortable(cs, w, c.word)}
        assert fast == slow


@pytest.mark.parametrize("name,catalan", [("A3", 14), ("B3", 20), ("H3", 32), ("I2:7", 9)])
def test_sortable_counts(name, catalan):
    cs = system(name)
    for c in coxeter_elements(cs):
        assert len(c_sortables(cs, c)) == catalan


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "I2:6"])
def test_singletons_match_commutation_class_prefixes(name):
    cs = system(name)
    for c in coxeter_elements(cs):
        wo = c_sorting_word(cs, cs.longest, c).letters
        brute = {cs.from_word(x[:k]).perm for x in commutation_class(cs, wo) for k in range(len(x) + 1)}
        assert {u.perm for u in c_singletons(cs, c)} == brute


def test_singletons_independent_of_commutation_representative(a3):
    one = {u.perm for u in c_singletons(a3, parse_coxeter(a3, "t1t3t2"))}
    two = {u.perm for u in c_singletons(a3, parse_coxeter(a3, "t3t1t2"))}
    assert one == two


def test_singleton_counts_depend_on_c(a3):
    counts = {str(c): len(c_singletons(a3, c)) for c in coxeter_elements(a3)}
    assert counts["t1t2t3"] == 8
    assert counts["t2t1t3"] == 9


def test_singleton_words_are_prefix_words(a3):
    for u, word in singleton_words(a3, parse_coxeter(a3, "t2t1t3")).items():
        assert a3.from_word(word) == u and len(word) == u.length


def test_heap_relations(a3):
    h = heap_of(a3, (0, 2, 1, 0))
    assert h.below[1] == set()
    assert h.below[2] == {0, 1}
    assert h.below[3] == {0, 1, 2}
    # the two commuting bottom letters give two singleton ideals
    assert sum(1 for i in h.order_ideals() if len(i) == 1) == 2


def test_golden_sorting_words(a3):
    assert c_sorting_word(a3, a3.longest, parse_coxeter(a3, "t1t2t3")).format() == "τ₁τ₂τ₃.τ₁τ₂.τ₁"
    assert c_sorting_word(a3, a3.longest, parse_coxeter(a3, "t2t3t1")).format() == "τ₂τ₃τ₁.τ₂τ₃τ₁"
    assert c_sorting_word(a3, a3.identity, parse_coxeter(a3, "t2t3t1")).format() == "e"


def test_last_root_golden(i24):
    rs = i24.roots
    r = last_root(i24, i24.parse_word("tsts"), 1)
    assert [str(x) for x in rs.roots[r]] == ["1", "1"]
    assert rs.fmt_root(r) == "2a1+a2"
    # an absent letter gives the negative simple root
    assert last_root(i24, i24.parse_word("t"), 0) == rs.neg(rs.simple[0])


def test_cluster_map(a3):
    c = parse_coxeter(a3, "t1t2t3")
    assert format_cluster(a3, cluster_map(a3, a3.identity, c)) == "{-a1, -a2, -a3}"
    top = cluster_map(a3, a3.longest, c)
    assert all(a3.roots.is_positive(r) for r in top)
    with pytest.raises(ValueError):
        # t2t1 is not sortable for c = t1t2t3: supports {t2}, {t1} are not nested
        cluster_map(a3, a3.from_word((1, 0)), c)


@pytest.mark.parametrize("name", ["A3", "B3", "I2:5"])
def test_screened_associahedron_matches_exact(name):
    cs = system(name)
    for c in coxeter_elements(cs):
        a = build_associahedron(cs, c)
        b = build_associahedron(cs, c, screen=False)
        assert [v.coords for v in a.polytope.vertices] == [v.coords for v in b.polytope.vertices]
        assert a.facet_label == b.facet_label


def test_isometry_predicate(a3):
    c = parse_coxeter(a3, "t1t2t3")
    ok, wit = isometry_equivalent(a3, c, c.inverse())
    assert ok and wit == {"mu": [0, 1, 2], "branch": "inverse"}
    ok, _ = isometry_equivalent(a3, c, parse_coxeter(a3, "t2t1t3"))
    assert not ok
    with pytest.raises(PreconditionError):
        isometry_equivalent(a3, c, c, a3.roots.from_delta([2, 3, 3]))


def test_integer_coordinates():
    cs = system("A3")
    rep = check_integer_coordinates(cs, parse_coxeter(cs, "t1t2t3"))
    assert rep["integral"] and rep["perm_vertices"] == 24 and rep["asso_vertices"] == 14
    assert rep["basepoint_delta"] == ["3", "4", "3"]
    with pytest.raises(PreconditionError):
        check_integer_coordinates(system("H3"), coxeter_elements(system("H3"))[0])
    with pytest.raises(PreconditionError):
        check_integer_coordinates(cs, parse_coxeter(cs, "t1t2t3"), cs.roots.from_delta([1, 2, 2]))


def test_centroids():
    cs = system("I2:4")
    c = parse_coxeter(cs, "ts")
    rep = compare_centroids(cs, c)
    assert rep["status"] == "equal"
    assert rep["asso_centroid"] == ["0", "0"]
    bad = compare_centroids(cs, c, cs.roots.from_delta([1, 2]))
    assert bad["status"] == "not-applicable"


def test_product_gives_prism():
    cs = system("I2:4xA1")
    for c in coxeter_elements(cs):
        p = build_associahedron(cs, c).polytope
        assert len(p.vertices) == 12 and len(p.facets()) == 8
