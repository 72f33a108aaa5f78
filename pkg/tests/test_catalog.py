import pytest
from hypothesis import given, strategies as st

from coxfold import catalog
from coxfold.graph import CoxeterGraph, Symmetry, group_closure
from coxfold.roots import enumerate_positive_roots, pairing, unit, vector_from
from coxfold.selftest import AFFINE_TYPES, CROSS_POSITIVE, run_selftest

SMALL = ([("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 7)] + [("D", n) for n in range(4, 9)]
         + [("E", n) for n in (6, 7, 8)] + [("F", 4), ("G", 2), ("H", 3), ("H", 4), ("I2", 5), ("I2", 8)]
         + [("tA", n) for n in range(1, 9)] + [("tB", n) for n in range(3, 7)]
         + [("tC", n) for n in range(2, 7)] + [("tD", n) for n in range(4, 9)]
         + [("tE", n) for n in (6, 7, 8)] + [("tF", 4), ("tG", 2)])


@pytest.mark.parametrize("fam, n", SMALL)
def test_recognize_round_trip(fam, n):
    g = catalog.build_graph(fam, n)
    gt = catalog.recognize(g)
    assert gt.name == catalog.type_name(fam, n)
    # the relabeling is a label-preserving isomorphism
    cat = catalog.build_graph(gt.family, gt.rank)
    for s in cat.vertices:
        for t in cat.vertices:
            assert cat.label(s, t) == g.label(gt.relabel[s], gt.relabel[t])


def test_recognize_examples():
    square = CoxeterGraph.from_labels([10, 11, 12, 13], {(10, 11): 3, (11, 12): 3, (12, 13): 3, (13, 10): 3})
    assert catalog.recognize(square).name == "tA3"
    star = CoxeterGraph.from_labels([5, 6, 7, 8], {(5, 6): 3, (5, 7): 3, (5, 8): 3})
    assert catalog.recognize(star).name == "D4"
    e6 = CoxeterGraph.from_labels(range(6), {(0, 1): 3, (1, 2): 3, (2, 3): 3, (3, 4): 3, (2, 5): 3})
    assert catalog.recognize(e6).name == "E6"
    hyper = CoxeterGraph.from_labels([1, 2, 3], {(1, 2): 3, (2, 3): 3, (1, 3): 4})
    assert catalog.recognize(hyper).family == "unknown"
    with pytest.raises(ValueError):
        catalog.recognize(CoxeterGraph.from_labels([1, 2], {}))


@given(st.sampled_from(SMALL), st.randoms(use_true_random=False))
def test_recognize_ignores_vertex_names(data, rnd):
    fam, n = data
    g = catalog.build_graph(fam, n)
    names = list(range(100, 100 + len(g)))
    rnd.shuffle(names)
    ren = dict(zip(g.vertices, names))
    h = CoxeterGraph.from_labels(names, {(ren[s], ren[t]): m for s, t, m in g.edges})
    assert catalog.recognize(h).name == catalog.recognize(g).name


@given(st.sampled_from(CROSS_POSITIVE + ["tD4:f", "A4:g", "tD4:rot4", "tE6:rot3"]),
       st.randoms(use_true_random=False))
def test_classification_ignores_vertex_names(tok, rnd):
    e = catalog.catalog_graph(tok)
    names = list(range(50, 50 + len(e.graph)))
    rnd.shuffle(names)
    ren = dict(zip(e.graph.vertices, names))
    h = CoxeterGraph.from_labels(names, {(ren[s], ren[t]): m for s, t, m in e.graph.edges})
    gens = [Symmetry.from_dict({ren[s]: ren[e.symmetries[k](s)] for s in e.graph.vertices}) for k in e.chosen]
    a = catalog.classify(e.graph, e.group()).components[0]
    b = catalog.classify(h, group_closure(h, gens)).components[0]
    assert (a.matches, a.parameter, a.folded_name, a.predicts) == (b.matches, b.parameter, b.folded_name, b.predicts)


@pytest.mark.parametrize("tok, case, param, folded", [
    ("A5:g", "A-odd-flip", 2, "B3"), ("D6:g", "D-end-swap", 6, "B5"),
    ("D4:g1", "D4-triality", 4, "G2"), ("D4:g1,g2", "D4-triality", 4, "G2"),
    ("E6:g", "E6-flip", 6, "F4"), ("tA3:g", "tA-odd-flip", 1, "tB2"),
    ("tA7:g", "tA-odd-flip", 3, "tC4"), ("tD5:g", "tD-end-swap", 5, "tB4"),
    ("tD4:g1", "tD4-triality", 4, "tG2"), ("tE6:g", "tE6-flip", 6, "tF4"),
])
def test_classify_cases(tok, case, param, folded):
    e = catalog.catalog_graph(tok)
    c = catalog.classify_pair(e.graph, e.group())
    assert (c.matches, c.parameter, c.folded_name, c.predicts) == (case, param, folded, True)


@pytest.mark.parametrize("tok", ["tE7:g", "tD4:f", "tD4:rot4", "A4:g", "tA3:g,h", "B2:swap"])
def test_classify_rejections_have_reasons(tok):
    e = catalog.catalog_graph(tok)
    c = catalog.classify_pair(e.graph, e.group())
    assert not c.predicts and c.matches is None and c.reason


def test_leg_swap_of_d4_is_case_ii():
    e = catalog.catalog_graph("D4:g2")
    assert catalog.classify_pair(e.graph, e.group()).matches == "D-end-swap"


def test_tE7_reason_mentions_exclusion():
    e = catalog.catalog_graph("tE7:g")
    assert "tE7" in catalog.classify_pair(e.graph, e.group()).reason


def test_locally_spherical_cases():
    assert catalog.classify_entry(catalog.catalog_graph("iAi:g")).components[0].matches == "ix"
    assert catalog.classify_entry(catalog.catalog_graph("Dinf:g")).components[0].matches == "x"


@pytest.mark.parametrize("token, name, nsyms", [
    ("E6", "E6", 1), ("tilde-D 4", "tD4", None), ("D-infinity, truncation 8", "Dinf@8", None),
    ("tD4:g1g2", "tD4:g1,g2", None), ("iAi@5:g", "iAi@5:g", None),
])
def test_token_forms(token, name, nsyms):
    e = catalog.catalog_graph(token)
    assert e.token == name
    if nsyms is not None:
        assert len(e.symmetries) == nsyms


def test_tD4_symmetries():
    e = catalog.catalog_graph("tilde-D 4")
    assert len(e.graph) == 5
    assert e.symmetries["g1"].order() == 3
    assert e.symmetries["rot4"].order() == 4
    assert "g2" in e.symmetries


def test_dinf_truncation():
    e = catalog.catalog_graph("D-infinity, truncation 8:g")
    assert len(e.graph) == 8 and e.symmetries["g"](1) == 2


@pytest.mark.parametrize("bad", ["Q7", "A0", "E9", "tD3", "A5:nope", "E6@3"])
def test_bad_tokens(bad):
    with pytest.raises(catalog.CatalogError):
        catalog.catalog_graph(bad)


@pytest.mark.parametrize("name, want", [
    ("A4", {1: 1, 2: 1, 3: 1, 4: 1}), ("D6", {1: 1, 2: 2, 3: 2, 4: 2, 5: 1, 6: 1}),
    ("E6", {1: 1, 2: 2, 3: 2, 4: 3, 5: 2, 6: 1}),
])
def test_highest_roots(name, want):
    assert catalog.highest_root_coeffs(name) == want


@pytest.mark.parametrize("name", ["A3", "A6", "D4", "D7", "E6", "E7", "E8"])
def test_highest_root_is_the_deepest_root(name):
    g = catalog.build_graph(name[0], int(name[1:]))
    rs = enumerate_positive_roots(g, max_depth=10**6)
    top = max(rs.roots, key=lambda r: r.depth)
    assert top.coords == catalog.highest_root(name).coords


def test_tE6_delta():
    assert catalog.null_coeffs("tE6") == {0: 1, 1: 1, 2: 2, 3: 2, 4: 3, 5: 2, 6: 1}


@pytest.mark.parametrize("name", AFFINE_TYPES)
def test_delta_is_radical(name):
    g = catalog.build_graph(name[:2], int(name[2:]))
    d = vector_from(g, catalog.null_coeffs(name))
    beta = vector_from(g, catalog.highest_root_coeffs(name[1:]))
    assert pairing(g, unit(len(g), g.position(0)), beta) == -2
    for s in g.vertices:
        assert pairing(g, unit(len(g), g.position(s)), d) == 0


def test_corrupted_highest_root_is_reported(monkeypatch):
    monkeypatch.setitem(catalog.HIGHEST_ROOTS, "E6", (1, 2, 2, 3, 2, 2))
    [res] = run_selftest("catalog")
    assert not res.ok
    assert res.name == "catalog-invariants" and "tE6" in res.detail


def test_token_table_covers_families():
    text = " ".join(t for t, _ in catalog.TOKEN_TABLE)
    for fam in ("tA", "tD", "tE", "iAi", "Dinf", "E6"):
        assert fam in text
