"""Invariants of root systems and verdicts, as property tests."""

from functools import lru_cache

from hypothesis import given, settings, strategies as st

from coxfold import catalog
from coxfold.folding import apply_symmetry, fold
from coxfold.graph import CoxeterGraph, Symmetry, group_closure
from coxfold.roots import enumerate_positive_roots, pairing, reflection_of, unit, vec_add, vec_neg, vector_from
from coxfold.selftest import POSITIVE_AFFINE, POSITIVE_SPHERICAL, translation_words
from coxfold.verifier import decide, equiv_classes, simple_root_orbits

POSITIVE = POSITIVE_SPHERICAL + POSITIVE_AFFINE
SPHERICAL = ["A3", "A4", "B3", "C3", "D4", "D5", "E6", "F4", "G2", "H3", "I2(5)"]


@lru_cache(maxsize=None)
def positive_pair(tok):
    e = catalog.catalog_graph(tok)
    g, G = e.graph, e.group()
    rs = enumerate_positive_roots(g, max_depth=6 if tok.startswith("t") else 10**6)
    return g, G, rs


@lru_cache(maxsize=None)
def spherical(name):
    e = catalog.catalog_graph(name)
    return enumerate_positive_roots(e.graph, max_depth=10**6)


@given(st.sampled_from(POSITIVE), st.integers(0, 10**6), st.data())
def test_positive_pairs_have_no_non_orthogonal_moved_root(tok, i, data):
    g, G, rs = positive_pair(tok)
    a = rs.roots[i % len(rs)].coords
    h = data.draw(st.sampled_from(G.elements))
    b = apply_symmetry(g, h, a)
    assert b == a or pairing(g, a, b) == 0


@given(st.sampled_from(POSITIVE), st.integers(0, 10**6), st.integers(0, 10**6), st.data())
def test_large_pairing_propagates_fixedness(tok, i, j, data):
    g, G, rs = positive_pair(tok)
    a, b = rs.roots[i % len(rs)].coords, rs.roots[j % len(rs)].coords
    h = data.draw(st.sampled_from(G.elements))
    c = pairing(g, a, b)
    if apply_symmetry(g, h, a) == a and c not in (0, 1, -1):
        assert apply_symmetry(g, h, b) == b


@lru_cache(maxsize=None)
def orbits_of(tok):
    g, G, _ = positive_pair(tok)
    return g, simple_root_orbits(fold(g, G), 16)


@given(st.sampled_from(POSITIVE), st.integers(0, 100))
def test_negative_simple_root_in_its_orbit(tok, k):
    g, orbits = orbits_of(tok)
    o = orbits[k % len(orbits)]
    assert vec_neg(unit(len(g), g.position(o.start))) in o.index


@given(st.sampled_from(POSITIVE_SPHERICAL))
def test_at_least_two_classes(tok):
    _, _, rs = positive_pair(tok)
    assert equiv_classes(rs).count >= 2


@given(st.sampled_from(["B2", "G2", "I2(5)"]))
def test_rank_two_non_simply_laced_have_one_class(name):
    assert equiv_classes(spherical(name)).count == 1


@settings(max_examples=40)
@given(st.sampled_from(SPHERICAL), st.integers(0, 10**6), st.lists(st.integers(-3, 3), min_size=8, max_size=8))
def test_reflection_formula(name, i, xs):
    rs = spherical(name)
    g = rs.graph
    a = rs.roots[i % len(rs)].coords
    x = tuple(xs[:len(g)])
    c = pairing(g, x, a)
    expect = tuple(xi - c * ai for xi, ai in zip(x, a))
    for w in rs.all_witnesses(a, limit=3):
        assert reflection_of(rs, a, w)(x) == expect


@settings(max_examples=40)
@given(st.sampled_from(SPHERICAL), st.integers(0, 10**6), st.integers(0, 10**6))
def test_reflection_map_injective(name, i, j):
    rs = spherical(name)
    a, b = rs.roots[i % len(rs)].coords, rs.roots[j % len(rs)].coords
    if a != b:
        assert reflection_of(rs, a) != reflection_of(rs, b)


TRANSLATIONS = [w for w in translation_words() if w[1] == w[3]]


@lru_cache(maxsize=None)
def translation(idx):
    tok, s, word, _ = TRANSLATIONS[idx]
    e = catalog.catalog_graph(tok)
    g = e.graph
    w = fold(g, e.group()).element(word)
    delta = vector_from(g, catalog.null_coeffs(catalog.recognize(g).name))
    return w, unit(len(g), g.position(s)), delta


@settings(max_examples=30)
@given(st.integers(0, len(TRANSLATIONS) - 1), st.integers(-6, 6))
def test_translation_power_law(idx, k):
    w, x, delta = translation(idx)
    assert w.power(k)(x) == vec_add(x, tuple(k * c for c in delta))


def relabel_pair(tok, perm):
    e = catalog.catalog_graph(tok)
    g = e.graph
    m = dict(zip(g.vertices, perm))
    h = CoxeterGraph.from_labels([m[v] for v in g.vertices],
                                 {(m[s], m[t]): lab for (s, t), lab in g.labels().items()})
    gens = [Symmetry.from_dict({m[v]: m[s(v)] for v in g.vertices}) for s in e.group().generators]
    return h, group_closure(h, gens)


@settings(max_examples=25)
@given(st.sampled_from(["A3:g", "D4:g1", "tD4:rot4", "tA3:g", "A4:g", "tE6:rot3", "tD5:g"]), st.randoms())
def test_verdict_is_invariant_under_relabeling(tok, rnd):
    e = catalog.catalog_graph(tok)
    perm = [v + 10 for v in e.graph.vertices]
    rnd.shuffle(perm)
    base = decide(e.graph, e.group())
    moved = decide(*relabel_pair(tok, perm))
    assert moved.status == base.status
    if base.witness is not None:
        assert moved.witness.pairing == base.witness.pairing
