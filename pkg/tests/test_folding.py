import pytest
from hypothesis import given, strategies as st

from coxfold import catalog
from coxfold.folding import (NotSpherical, apply_symmetry, compute_F, enumerate_folded_roots, fold,
                             folded_order, longest_element, root_orbits)
from coxfold.graph import INF
from coxfold.roots import enumerate_positive_roots, is_identity, mat_mul, unit, vector_sign
from coxfold.selftest import folding_dictionary

FOLDABLE = ["A3:g", "A5:g", "D4:g", "D5:g", "D4:g1", "D4:g1,g2", "E6:g", "tA3:g", "tA5:g", "tD4:g",
            "tD5:g", "tD4:g1,g2", "tE6:g", "A4:g", "tD4:rot4", "tD4:f", "tE6:rot3", "B2:swap", "tA3:g,h"]


def entry(tok):
    return catalog.catalog_graph(tok)


@pytest.mark.parametrize("tok, want", folding_dictionary())
def test_folding_dictionary(tok, want):
    e = entry(tok)
    assert fold(e.graph, e.group()).folded_name == want


def test_e6_folded_matrix_has_a_four():
    e = entry("E6:g")
    f = fold(e.graph, e.group())
    labels = set(f.folded_matrix.values())
    assert 4 in labels and f.folded_name == "F4"
    assert f.generator_names() == ["u{1,6}", "s2", "u{3,5}", "s4"]


@pytest.mark.parametrize("name, X, length", [("A", [1, 2, 3], 6), ("D", [1, 2, 3, 4], 12),
                                              ("E", [1, 2, 3, 4, 5, 6], 36), ("B", [1, 2, 3], 9)])
def test_longest_element_properties(name, X, length):
    g = catalog.build_graph(name, len(X))
    u = longest_element(g, X)
    assert len(u.word) == length
    assert is_identity(mat_mul(u.matrix, u.matrix))
    for r in enumerate_positive_roots(g, max_depth=10**6).roots:
        assert vector_sign(u(r.coords)) == -1


def test_longest_element_of_infinite_parabolic():
    g = catalog.build_graph("tA", 2)
    with pytest.raises(NotSpherical):
        longest_element(g, [0, 1, 2])


@pytest.mark.parametrize("tok", FOLDABLE)
def test_fast_and_matrix_orders_agree(tok):
    e = entry(tok)
    f = fold(e.graph, e.group())
    u = f.longest_elements
    for X in f.spherical_orbits:
        for Y in f.spherical_orbits:
            m = folded_order(e.graph, X, Y, method="matrix", u=u)
            assert m == f.folded_matrix[(X, Y)]


def test_a4_flip_folds_to_b2():
    # orbit {2,3} spans an A2 whose longest element has length 3
    e = entry("A4:g")
    f = fold(e.graph, e.group())
    X, Y = f.spherical_orbits
    assert f.folded_matrix[(X, Y)] == 4
    assert len(f.longest_elements[frozenset({2, 3})].word) == 3
    assert f.folded_name == "B2"


def test_infinite_label_between_orbits():
    e = entry("tA1")
    f = fold(e.graph, e.group())
    assert f.folded_matrix[(frozenset({0}), frozenset({1}))] == INF


def test_nonspherical_orbits_are_not_generators():
    e = entry("tA1:swap")
    f = fold(e.graph, e.group())
    assert f.spherical_orbits == ()
    assert [sorted(X) for X in f.nonspherical_orbits] == [[0, 1]]


@pytest.mark.parametrize("tok", FOLDABLE)
def test_u_commutes_with_symmetries(tok):
    e = entry(tok)
    G = e.group()
    f = fold(e.graph, G)
    n = len(e.graph)
    for X in f.spherical_orbits:
        for h in G.elements:
            for s in e.graph.vertices:
                x = unit(n, e.graph.position(s))
                assert apply_symmetry(e.graph, h, f.act(X, x)) == f.act(X, apply_symmetry(e.graph, h, x))


@pytest.mark.parametrize("tok, folded, orbits", [("E6:g", 24, 24), ("A3:g", 4, 4), ("D4:g1,g2", 6, 6),
                                                 ("D5:g", 16, 16), ("A5:g", 9, 9)])
def test_F_is_a_bijection(tok, folded, orbits):
    e = entry(tok)
    G = e.group()
    f = fold(e.graph, G)
    fr = enumerate_folded_roots(f, max_depth=10**6)
    rs = enumerate_positive_roots(e.graph, max_depth=10**6)
    om = root_orbits(rs, G)
    F = compute_F(f, fr, om, rs)
    assert (len(fr), len(om)) == (folded, orbits)
    assert F.injective and F.surjective and F.complete


def test_F_fails_for_a_negative_pair():
    e = entry("A4:g")
    G = e.group()
    f = fold(e.graph, G)
    fr = enumerate_folded_roots(f, max_depth=10**6)
    rs = enumerate_positive_roots(e.graph, max_depth=10**6)
    F = compute_F(f, fr, root_orbits(rs, G), rs)
    assert not F.bijective


@given(st.sampled_from(FOLDABLE[:7]), st.lists(st.integers(0, 5), max_size=8))
def test_folded_words_preserve_fixed_space(tok, idx):
    e = entry(tok)
    G = e.group()
    f = fold(e.graph, G)
    letters = f.generator_names()
    word = [letters[i % len(letters)] for i in idx]
    X = f.spherical_orbits[0]
    x = f.apply_word(word, f.alpha_hat[X])
    for h in G.elements:
        assert apply_symmetry(e.graph, h, x) == x
    assert f.element(word)(f.alpha_hat[X]) == x
