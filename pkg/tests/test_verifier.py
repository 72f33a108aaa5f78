import pytest

from coxfold import catalog, verifier
from coxfold.folding import fold
from coxfold.graph import trivial_group
from coxfold.roots import enumerate_positive_roots, unit, vector_from
from coxfold.verifier import (AFFINE, DEPTH, FAILS, HOLDS, AffineCertificate, Budget, CoverageEvidence,
                              FailureWitness, affine_certificate, check_fixed_vertex, check_orbit_commutation,
                              decide, decide_family, equiv_classes, fixed_point_free_witness, wg_orbit,
                              witness_search)


def pair(tok):
    e = catalog.catalog_graph(tok)
    return e.graph, e.group()


def test_orbit_commutation_probe():
    assert check_orbit_commutation(*pair("A3:g")) is None
    s, t, g = check_orbit_commutation(*pair("tA2:g"))
    assert g(s) == t and pair("tA2:g")[0].label(s, t) == 3
    g0 = pair("A3")[0]
    assert check_orbit_commutation(g0, trivial_group(g0)) is None


def test_fixed_vertex_probe():
    _, G = pair("tA3:g,h")
    g = check_fixed_vertex(G)
    assert g is not None and all(g(s) != s for s in range(4))
    assert check_fixed_vertex(pair("tA3:g")[1]) is None
    assert check_fixed_vertex(trivial_group(pair("A3")[0])) is None


@pytest.mark.parametrize("tok", ["tA3:g,h", "tA5:rot", "tA7:g,h"])
def test_fixed_point_free_witness_is_valid(tok):
    g, G = pair(tok)
    w = fixed_point_free_witness(g, G)
    assert w is not None and w.check()
    assert w.pairing.sign() < 0


def test_witness_examples_from_seeds():
    g, G = pair("tD4:f")
    w = witness_search(g, G, None, [{1: 1, 2: 1, 3: 1}])
    assert w.pairing == -2 and w.kind == "seed"
    g, G = pair("tE6:rot3")
    w = witness_search(g, G, None, [{0: 1, 2: 1, 4: 1, 5: 1}])
    assert w.pairing == -1


def test_non_roots_are_not_used_as_seeds():
    g, G = pair("tD4:f")
    assert witness_search(g, G, None, [{1: 2, 2: 1}]) is None


def test_no_witness_for_positive_pair():
    g, G = pair("E6:g")
    assert witness_search(g, G, enumerate_positive_roots(g, 10**6)) is None


def test_coverage_from_few_simple_roots():
    # E6: the orbits of a3 and a4 already cover every root
    g, G = pair("E6:g")
    f = fold(g, G)
    cover = set()
    for s in (3, 4):
        cover |= set(wg_orbit(f, s, 40).index)
    assert all(r.coords in cover for r in enumerate_positive_roots(g, 10**6).roots)
    # D4 with the order-6 group needs all four outer simple roots
    g, G = pair("D4:g1,g2")
    v = decide(g, G)
    assert v.status == HOLDS and set(v.evidence.starts) == {1, 2, 3, 4}


def test_equivalence_classes():
    b2 = enumerate_positive_roots(catalog.build_graph("B", 2), 10**6)
    assert equiv_classes(b2).count == 1
    a3 = enumerate_positive_roots(catalog.build_graph("A", 3), 10**6)
    ec = equiv_classes(a3)
    assert ec.count >= 2
    x = a3.roots[0].coords
    assert ec.same(x, tuple(-c for c in x))


def test_affine_certificate_contents():
    g, G = pair("tD4:g1")
    cert = affine_certificate(g, G, fold(g, G))
    assert isinstance(cert, AffineCertificate)
    assert cert.special == 0 and cert.paired is None
    assert cert.delta == vector_from(g, {0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    f = fold(g, G)
    for t in cert.translations:
        assert f.element(t.word)(unit(5, g.position(t.source))) == t.target
    assert cert.checks > 0


def test_paired_certificate_for_odd_affine_a():
    g, G = pair("tA3:g")
    cert = affine_certificate(g, G, fold(g, G))
    assert cert.paired is not None
    sources = {t.source for t in cert.translations}
    assert 0 in sources and cert.paired in sources


def test_no_certificate_without_delta():
    g, G = pair("tC3:g")
    assert affine_certificate(g, G, fold(g, G)) is None


@pytest.mark.parametrize("tok, status", [("A5:g", HOLDS), ("tD5:g", AFFINE), ("tD4:rot4", FAILS),
                                         ("A4:g", FAILS), ("D4", HOLDS)])
def test_verdict_invariants(tok, status):
    v = decide(*pair(tok))
    assert v.status == status
    if status == FAILS:
        assert isinstance(v.witness, FailureWitness) and v.witness.check()
    if status == HOLDS:
        assert isinstance(v.evidence, CoverageEvidence)
        assert v.evidence.trivial or (v.evidence.complete and v.evidence.covered == v.evidence.total)
    if status == AFFINE:
        assert v.certificate is not None


def test_decide_is_deterministic():
    a = decide(*pair("tE6:g")).to_dict()
    b = decide(*pair("tE6:g")).to_dict()
    assert a == b


def test_small_budget_gives_depth_bound():
    g, G = pair("tD4:g")
    v = decide(g, G, Budget(root_depth=3, orbit_depth=2))
    assert v.status == DEPTH and v.depth is not None and v.depth <= 3


def test_families_are_never_holds():
    for tok in ("iAi:g", "Dinf:g", "Ainf"):
        v = decide_family(catalog.catalog_graph(tok), Budget(truncation=3))
        assert v.status == DEPTH


def test_budget_validation():
    with pytest.raises(ValueError):
        Budget(root_depth=-1)
    with pytest.raises(ValueError):
        Budget(cap_order=0)


def test_uncovered_failure_without_witness(monkeypatch):
    # with every witness route disabled, complete non-coverage still refutes
    monkeypatch.setattr(verifier, "commutation_witness", lambda g, G: None)
    monkeypatch.setattr(verifier, "fixed_point_free_witness", lambda g, G: None)
    monkeypatch.setattr(verifier, "witness_search", lambda *a, **k: None)
    v = decide(*pair("A4:g"))
    assert v.status == FAILS and v.witness.kind == "uncovered"


def test_describe_mentions_witness():
    text = verifier.describe(decide(*pair("tD4:rot4")))
    assert "fails" in text and "-2" in text
