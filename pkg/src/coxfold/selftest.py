"""The acceptance matrix as a runnable report.

Each criterion is a function returning (ok, detail).  Exceptions inside a
criterion are caught and reported as failures, so a corrupted catalog
entry shows up as a named failing line rather than a crash.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import catalog
from .folding import compute_F, enumerate_folded_roots, fold, root_orbits
from .graph import (CoxeterGraph, Symmetry, disjoint_union, group_closure)
from .roots import (enumerate_positive_roots, pairing, reflection_of, unit, vec_add, vec_neg,
                    vector_from)
from .verifier import (AFFINE, DEPTH, FAILS, HOLDS, Budget, combine, decide, decide_family,
                       equiv_classes, simple_root_orbits, witness_search)


@dataclass(frozen=True)
class CriterionResult:
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.detail}"

    def to_dict(self) -> dict:
        return {"criterion": self.name, "passed": self.ok, "detail": self.detail}


# -- oracles ---------------------------------------------------------------


def transpositions_in_symmetric_group(n: int) -> int:
    """Conjugates of (0 1) in S_{n+1} under the adjacent transpositions.

    This equals the number of reflections of the Coxeter group A_n.
    """
    size = n + 1

    def adj(i):
        p = list(range(size))
        p[i], p[i + 1] = p[i + 1], p[i]
        return tuple(p)

    gens = [adj(i) for i in range(n)]

    def comp(a, b):
        return tuple(a[b[k]] for k in range(size))

    start = adj(0)
    seen = {start}
    todo = [start]
    while todo:
        t = todo.pop()
        for s in gens:
            c = comp(comp(s, t), s)
            if c not in seen:
                seen.add(c)
                todo.append(c)
    return len(seen)


# -- criteria ----------------------------------------------------------------


def crit_root_counts():
    got = []
    for name, want in (("D4", 12), ("E6", 36)):
        rs = enumerate_positive_roots(catalog.build_graph(name[0], int(name[1:])), max_depth=10**6)
        if not rs.complete or len(rs) != want:
            return False, f"{name}: {len(rs)} roots, complete={rs.complete}"
        got.append(f"{name}={len(rs)}")
    for n in range(1, 7):
        rs = enumerate_positive_roots(catalog.build_graph("A", n), max_depth=10**6)
        oracle = transpositions_in_symmetric_group(n)
        if len(rs) != oracle or oracle != n * (n + 1) // 2 or not rs.complete:
            return False, f"A{n}: {len(rs)} roots, oracle {oracle}"
    got.append("A1..A6 match the permutation oracle")
    return True, ", ".join(got)


def folding_dictionary():
    """(token, expected folded type) pairs with parameters up to 8."""
    rows = []
    for m in range(1, 4):
        rows.append((f"A{2 * m + 1}:g", f"B{m + 1}"))
    for m in range(4, 9):
        rows.append((f"D{m}:g", f"B{m - 1}"))
    rows.append(("D4:g1,g2", "G2"))
    rows.append(("E6:g", "F4"))
    for m in range(1, 4):
        rows.append((f"tA{2 * m + 1}:g", "tB2" if m == 1 else f"tC{m + 1}"))
    for m in range(4, 9):
        rows.append((f"tD{m}:g", f"tB{m - 1}"))
    rows.append(("tD4:g1,g2", "tG2"))
    rows.append(("tE6:g", "tF4"))
    return rows


def crit_folding():
    rows = folding_dictionary()
    for tok, want in rows:
        e = catalog.catalog_graph(tok)
        f = fold(e.graph, e.group())
        if f.folded_name != want:
            return False, f"{tok} folds to {f.folded_name}, expected {want}"
    return True, f"{len(rows)} folds match"


POSITIVE_SPHERICAL = ["A3:g", "A5:g", "A7:g", "A9:g", "D4:g", "D5:g", "D4:g1", "D4:g1,g2", "E6:g"]
POSITIVE_AFFINE = ["tA3:g", "tA5:g", "tA7:g", "tA9:g", "tD4:g", "tD5:g", "tD6:g", "tD4:g1",
                   "tD4:g1,g2", "tE6:g"]


def _component_verdicts(v):
    return v.components or (v,)


def crit_positive(budget=Budget()):
    checked = 0
    for tok, want in [(t, HOLDS) for t in POSITIVE_SPHERICAL] + [(t, AFFINE) for t in POSITIVE_AFFINE]:
        e = catalog.catalog_graph(tok)
        v = decide(e.graph, e.group(), budget)
        if v.status != want:
            return False, f"{tok}: {v.label()}, expected {want}"
        for c in _component_verdicts(v):
            if c.evidence.discrepancies:
                return False, f"{tok}: {c.evidence.discrepancies} coverage discrepancies"
            checked += c.evidence.covered
    return True, f"{len(POSITIVE_SPHERICAL) + len(POSITIVE_AFFINE)} pairs, {checked} witness equations re-verified"


NEGATIVE = [("tD4:f", -2), ("tD6:rev", -2), ("tD4:rot4", -2), ("tE6:rot3", -1), ("tE7:g", -2)]


def crit_negative(budget=Budget()):
    got = []
    for tok, want in NEGATIVE:
        e = catalog.catalog_graph(tok)
        seeded = decide(e.graph, e.group(), budget, seeds=catalog.seeds_for(e))
        w = seeded.witness
        if seeded.status != FAILS or w is None or w.kind != "seed" or w.pairing != want:
            return False, f"{tok}: seeded verdict {seeded.label()}, pairing {w and w.pairing}"
        free = decide(e.graph, e.group(), budget)
        fw = free.witness
        if free.status != FAILS or fw is None or not fw.check():
            return False, f"{tok}: unseeded search gave {free.label()}"
        got.append(str(w.pairing))
    return True, "seeded pairings " + ", ".join(got)


def f_map_counts(token: str):
    e = catalog.catalog_graph(token)
    G = e.group()
    f = fold(e.graph, G)
    fr = enumerate_folded_roots(f, max_depth=10**6)
    rs = enumerate_positive_roots(e.graph, max_depth=10**6)
    orbits = root_orbits(rs, G)
    F = compute_F(f, fr, orbits, rs)
    return len(fr), orbits, F


def crit_f_map():
    n, orbits, F = f_map_counts("E6:g")
    singles = sum(1 for o in orbits if len(o) == 1)
    pairs = sum(1 for o in orbits if len(o) == 2)
    if (n, len(orbits), singles, pairs) != (24, 24, 12, 12) or not F.bijective:
        return False, f"E6:g gives {n} folded roots, {len(orbits)} orbits, bijective={F.bijective}"
    n3, orb3, F3 = f_map_counts("A3:g")
    if (n3, len(orb3)) != (4, 4) or not F3.bijective:
        return False, f"A3:g gives {n3} folded roots, {len(orb3)} orbits"
    return True, "E6:g 24 = 12 + 12, A3:g 4 = 4, F bijective"


def translation_words():
    """(token, source vertex s, word w of folded letters, vertex t) with
    w(α_s) = α_t + δ."""
    out = []
    # tD4 with the order-3 group, X = {1,3,4}
    out.append(("tD4:g1", 2, ["s2", "s0", "u{1,3,4}"], 2))
    out.append(("tD4:g1", 1, ["u{1,3,4}", "s2", "s0", "u{1,3,4}", "s2"], 1))
    # tA_{2m+1} with the reflection fixing 0 and m+1
    for m in range(1, 5):
        n = 2 * m + 1
        us = [f"u{{{i},{n + 1 - i}}}" for i in range(1, m + 1)]
        out.append((f"tA{n}:g", m + 1, ["s0"] + us, 0))
        out.append((f"tA{n}:g", 0, [f"s{m + 1}"] + us[::-1], m + 1))
        out.append((f"tA{n}:g", m, us[::-1] + ["s0"] + us + [f"s{m + 1}"], m))
    # tD_m with the end swap
    for m in range(5, 9):
        u = f"u{{{m - 1},{m}}}"
        down = [f"s{i}" for i in range(m - 2, 1, -1)]
        w1 = down + ["s0", u] + [f"s{i}" for i in range(1, m - 2)]
        w2 = [u] + down + ["s0", u] + [f"s{i}" for i in range(1, m - 1)]
        out.append((f"tD{m}:g", m - 2, w1, m - 2))
        out.append((f"tD{m}:g", m, w2, m))
    return out


def _tE6_words():
    """The two tE6 equations, whose sources are non-simple roots."""
    e = catalog.catalog_graph("tE6:g")
    g = e.graph
    delta = vector_from(g, catalog.null_coeffs("tE6"))
    d12 = vector_from(g, {1: 1, 2: 1, 3: 2, 4: 2, 5: 1, 6: 1})
    gd12 = vector_from(g, {6: 1, 2: 1, 5: 2, 4: 2, 3: 1, 1: 1})
    g10 = vector_from(g, {1: 1, 2: 1, 3: 2, 4: 2, 5: 2, 6: 1})
    a3 = unit(len(g), g.position(3))
    a4 = unit(len(g), g.position(4))
    return e, [(gd12, ["u{3,5}", "s4", "s2", "s0"], vec_add(a3, delta)),
               (g10, ["s4", "s2", "s0"], vec_add(a4, delta))], delta, d12


def crit_affine(budget=Budget()):
    checks = 0
    for tok, s, word, t in translation_words():
        e = catalog.catalog_graph(tok)
        g = e.graph
        f = fold(g, e.group())
        w = f.element(word)
        x = unit(len(g), g.position(s))
        delta = vector_from(g, catalog.null_coeffs(catalog.recognize(g).name))
        tgt = vec_add(unit(len(g), g.position(t)), delta)
        if w(x) != tgt:
            return False, f"{tok}: word {' '.join(word)} does not send a{s} to a{t} + δ"
        if w(delta) != delta:
            return False, f"{tok}: word {' '.join(word)} moves δ"
        checks += 2
        if s == t:
            for k in range(-3, 4):
                if w.power(k)(x) != vec_add(x, tuple(k * c for c in delta)):
                    return False, f"{tok}: power law fails at k={k}"
                checks += 1
    e, eqs, delta, _ = _tE6_words()
    f = fold(e.graph, e.group())
    for src, word, tgt in eqs:
        if f.element(word)(src) != tgt:
            return False, f"tE6: word {' '.join(word)} fails"
        checks += 1
    for tok in POSITIVE_AFFINE:
        e = catalog.catalog_graph(tok)
        v = decide(e.graph, e.group(), budget)
        for c in _component_verdicts(v):
            if c.certificate is None:
                return False, f"{tok}: no certificate"
            checks += c.certificate.checks
    return True, f"{checks} exact equations checked"


SPHERICAL_TYPES = ([f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 9)] + [f"C{n}" for n in range(3, 9)]
                   + [f"D{n}" for n in range(4, 9)] + ["E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2(5)"])


def property_violations(budget=Budget()) -> dict[str, int]:
    """Counts of invariant violations over the catalog; all should be zero."""
    v = {"orthogonality": 0, "fixedness": 0, "negative-simple": 0, "two-classes": 0,
         "one-class": 0, "reflection-map": 0, "support-distance": 0}
    for tok in POSITIVE_SPHERICAL[:6] + POSITIVE_AFFINE[:2] + ["E6:g", "tD4:g1,g2"]:
        e = catalog.catalog_graph(tok)
        g, G = e.graph, e.group()
        rs = enumerate_positive_roots(g, max_depth=8 if "t" in tok else 10**6)
        if witness_search(g, G, rs, propagate=False) is not None:
            v["orthogonality"] += 1
        ec = equiv_classes(rs)
        vecs = rs.vectors()
        from .folding import apply_symmetry
        for h in G.nontrivial():
            for a in vecs:
                if apply_symmetry(g, h, a) != a:
                    continue
                for b in vecs:
                    c = pairing(g, a, b)
                    if not (c == 0 or c == 1 or c == -1) and apply_symmetry(g, h, b) != b:
                        v["fixedness"] += 1
        f = fold(g, G)
        for o in simple_root_orbits(f, budget.orbit_depth):
            a = unit(len(g), g.position(o.start))
            if vec_neg(a) not in o:
                v["negative-simple"] += 1
        if ec.count < 2:
            v["two-classes"] += 1
    for name in ("B2", "G2"):
        rs = enumerate_positive_roots(catalog.build_graph(name[0], 2), max_depth=10**6)
        if equiv_classes(rs).count != 1:
            v["one-class"] += 1
    for name in SPHERICAL_TYPES:
        rs = enumerate_positive_roots(catalog.catalog_graph(name).graph, max_depth=10**6)
        v["reflection-map"] += reflection_map_violations(rs)
        if len(rs) <= 36:
            v["support-distance"] += support_distance_violations(rs)
    return v


def reflection_map_violations(rs) -> int:
    """ϖ must not depend on the witness and must be injective."""
    bad = 0
    seen = {}
    for r in rs.roots:
        refl = {reflection_of(rs, r.coords, w) for w in rs.all_witnesses(r.coords, limit=4)}
        if len(refl) != 1:
            bad += 1
        m = refl.pop()
        if m in seen and seen[m] != r.coords:
            bad += 1
        seen[m] = r.coords
    return bad


def support_distance_violations(rs) -> int:
    """A root with coefficient > 1 at the support vertex nearest to t is
    in the class of α_t (checked on complete systems)."""
    g = rs.graph
    ec = equiv_classes(rs)
    bad = 0
    for r in rs.roots:
        supp = [s for s in g.vertices if r.coords[g.position(s)]]
        for t in g.vertices:
            if t in supp:
                continue
            dist = g.distances_from(t)
            near = min(dist.get(s, 10**9) for s in supp)
            for t0 in supp:
                if dist.get(t0) == near and r.coords[g.position(t0)] > 1:
                    if not ec.same(r.coords, unit(len(g), g.position(t))):
                        bad += 1
                    break
    return bad


def crit_properties(budget=Budget()):
    v = property_violations(budget)
    bad = {k: n for k, n in v.items() if n}
    if bad:
        return False, "violations " + ", ".join(f"{k}={n}" for k, n in bad.items())
    return True, "zero violations in " + ", ".join(v)


def union_cases():
    """(tokens of two components) for the disjoint-union reduction check."""
    return [("A3:g", "D4:g"), ("A3:g", "A4:g"), ("E6:g", "tD4:rot4"), ("tA3:g", "B2"), ("D4:g1", "tE7:g"),
            ("A5:g", "E6:g"), ("A2:g", "D4:g1,g2")]


def union_pair(t1: str, t2: str):
    e1, e2 = catalog.catalog_graph(t1), catalog.catalog_graph(t2)
    shift = max(e1.graph.vertices) + 1 - min(e2.graph.vertices)
    g2 = CoxeterGraph.from_labels([v + shift for v in e2.graph.vertices],
                                  {(s + shift, t + shift): m for s, t, m in e2.graph.edges})
    u = disjoint_union(e1.graph, g2)
    gens = [e1.symmetries[n] for n in e1.chosen]
    gens += [Symmetry.from_dict({s + shift: e2.symmetries[n](s) + shift for s in e2.graph.vertices})
             for n in e2.chosen]
    return u, group_closure(u, gens), (e1.graph, e1.group()), (g2, group_closure(g2, gens[len(e1.chosen):]))


def mixed_orbit_cases():
    """A finite part plus tails declared to lie in infinite orbits.

    Each vertex of the orbit of the largest vertex gets its own tail, and
    the symmetries permute the tails along with their attachment points.
    """
    out = []
    for tok in ("A3:g", "D4:g", "A4:g", "tD4:rot4", "tD4:g1"):
        e = catalog.catalog_graph(tok)
        G0 = e.group()
        top = max(e.graph.vertices)
        ends = sorted({h(top) for h in G0.elements})
        tail = {a: top + 1 + k for k, a in enumerate(ends)}
        labels = {(s, t): m for s, t, m in e.graph.edges}
        for a, b in tail.items():
            labels[(a, b)] = 3
        big = CoxeterGraph.from_labels(list(e.graph.vertices) + list(tail.values()), labels)
        gens = []
        for n in e.chosen:
            h = e.symmetries[n]
            d = {s: h(s) for s in e.graph.vertices}
            d.update({tail[a]: tail[h(a)] for a in ends})
            gens.append(Symmetry.from_dict(d))
        G = group_closure(big, gens, infinite=list(tail.values()))
        out.append((tok, big, G, e.graph, G0))
    return out


def crit_reductions(budget=Budget()):
    n = 0
    for t1, t2 in union_cases():
        u, G, (a, Ga), (b, Gb) = union_pair(t1, t2)
        whole = decide(u, G, budget)
        parts = combine([decide(a, Ga, budget), decide(b, Gb, budget)])
        if whole.label() != parts.label():
            return False, f"{t1} + {t2}: {whole.label()} vs {parts.label()}"
        # undivided: certificates are per component, so affine parts stop at the depth bound
        joint = decide(u, G, budget, reduce=False)
        if joint.status != parts.status and not (joint.status == DEPTH and parts.status == AFFINE):
            return False, f"{t1} + {t2} undivided: {joint.label()} vs {parts.label()}"
        n += 1
    for tok, big, G, small, Gs in mixed_orbit_cases():
        if decide(big, G, budget).label() != decide(small, Gs, budget).label():
            return False, f"{tok} with infinite-orbit tail disagrees"
        n += 1
    return True, f"{n} reduction cases agree"


CROSS_POSITIVE = ["A3:g", "A5:g", "A7:g", "A9:g", "D4:g", "D5:g", "D6:g", "D4:g1", "D4:g1,g2", "E6:g",
                  "tA3:g", "tA5:g", "tA7:g", "tD4:g", "tD5:g", "tD6:g", "tD4:g1", "tD4:g1,g2", "tE6:g"]
CROSS_NEGATIVE = ["tD4:f", "tD5:f", "tD6:rev", "tD4:rot4", "tE6:rot3", "tE7:g", "A4:g", "A2:g",
                  "tA3:g,h", "tA2:g", "B2:swap", "G2:swap", "tC2:swap", "tB3:swap", "tA5:rot"]
CROSS_FAMILIES = ["iAi:g", "Dinf:g"]


def cross_validation(budget=Budget()):
    """Rows (token, classifier predicts, verifier label, agree)."""
    rows = []
    for tok in CROSS_POSITIVE + CROSS_NEGATIVE:
        e = catalog.catalog_graph(tok)
        pred = catalog.classify_entry(e).predicts
        v = decide(e.graph, e.group(), budget)
        rows.append((tok, pred, v.label(), pred == v.positive))
    for tok in CROSS_FAMILIES:
        e = catalog.catalog_graph(tok)
        pred = catalog.classify_entry(e).predicts
        v = decide_family(e, budget)
        windows_hold = v.status == DEPTH and all(s == HOLDS for _, s in v.evidence.windows)
        rows.append((tok, pred, v.label(), pred == windows_hold))
    return rows


def crit_cross(budget=Budget()):
    rows = cross_validation(budget)
    bad = [r for r in rows if not r[3]]
    if bad:
        return False, "disagree: " + ", ".join(f"{t} ({l})" for t, _, l, _ in bad)
    return True, f"{len(rows)} pairs agree"


AFFINE_TYPES = [f"tA{n}" for n in range(2, 9)] + [f"tD{n}" for n in range(4, 9)] + ["tE6", "tE7", "tE8"]


def crit_catalog():
    for name in AFFINE_TYPES:
        fam, n = name[:2], int(name[2:])
        g = catalog.build_graph(fam, n)
        fin = fam[1] + str(n)
        beta = vector_from(g, catalog.highest_root_coeffs(fin))
        a0 = unit(len(g), g.position(0))
        if pairing(g, a0, beta) != -2:
            return False, f"{name}: <α_0, β> = {pairing(g, a0, beta)}"
        delta = vec_add(a0, beta)
        for s in g.vertices:
            if pairing(g, unit(len(g), g.position(s)), delta):
                return False, f"{name}: <α_{s}, δ> != 0"
        gt = catalog.recognize(g)
        if gt.name != catalog.type_name(fam, n):
            return False, f"{name} recognized as {gt.name}"
    tagged = 0
    for tok in CROSS_POSITIVE:
        e = catalog.catalog_graph(tok)
        c = catalog.classify(e.graph, e.group())
        if not c.predicts or c.components[0].matches is None:
            return False, f"{tok} not matched"
        tagged += 1
    return True, f"{len(AFFINE_TYPES)} affine types, {tagged} listed pairs matched"


CRITERIA: list[tuple[str, Callable]] = [
    ("root-counts", crit_root_counts),
    ("folding-dictionary", crit_folding),
    ("positive-verdicts", crit_positive),
    ("negative-verdicts", crit_negative),
    ("f-map-bijection", crit_f_map),
    ("affine-certificates", crit_affine),
    ("property-suites", crit_properties),
    ("reductions", crit_reductions),
    ("cross-validation", crit_cross),
    ("catalog-invariants", crit_catalog),
]


def criterion_names() -> list[str]:
    return [n for n, _ in CRITERIA]


def select(only: str | None) -> list[tuple[str, Callable]]:
    if not only:
        return list(CRITERIA)
    keys = [k.strip() for k in only.split(",") if k.strip()]
    chosen = [(n, f) for n, f in CRITERIA if any(k in n for k in keys)]
    if not chosen:
        raise ValueError(f"no criterion matches {only!r}; known: {', '.join(criterion_names())}")
    return chosen


def run_selftest(only: str | None = None) -> list[CriterionResult]:
    out = []
    for name, fn in select(only):
        try:
            ok, detail = fn()
        except Exception as exc:  # report, do not crash
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CriterionResult(name, ok, detail))
    return out
