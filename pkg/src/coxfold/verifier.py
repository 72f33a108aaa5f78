"""Deciding the orbit-basis property by computation.

A pair (Γ, G) has the property iff every positive root is w(α_s) for
some w in W^G and some vertex s.  The verifier

* tries cheap necessary conditions (swapped vertices must commute,
  every g must fix a vertex),
* looks for a root α with g(α) != α and <α, g(α)> != 0, which refutes
  the property,
* otherwise covers the enumerated positive roots by W^G-orbits of simple
  roots, and for affine graphs upgrades the depth-bounded result with a
  δ-translation certificate.

"fails" is only ever returned with a concrete witness.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from . import catalog
from .folding import FoldedSystem, apply_symmetry, fold
from .graph import (CoxeterGraph, Symmetry, SymmetryGroup, connected_components, restrict_group,
                    restrict_to_finite_orbits)
from .roots import (DEFAULT_ROOT_CAP, InvariantViolation, RootSet, Vector, enumerate_positive_roots,
                    format_vector, mat_apply, pairing, reflect, unit, vec_add, vec_scale, vec_sub,
                    vector_from, vector_sign)
from .scalar import Scalar

HOLDS = "holds"
FAILS = "fails"
DEPTH = "verified-to-depth"
AFFINE = "certified-affine"


@dataclass(frozen=True)
class Budget:
    root_depth: int = 12
    orbit_depth: int = 16
    max_roots: int = DEFAULT_ROOT_CAP
    max_orbit: int = 50_000
    cap_order: int = 1000
    truncation: int = 4

    def __post_init__(self):
        if self.root_depth < 0 or self.orbit_depth < 0:
            raise ValueError("depths must be >= 0")
        if min(self.max_roots, self.max_orbit, self.cap_order, self.truncation) <= 0:
            raise ValueError("caps must be positive")


# -- evidence ---------------------------------------------------------------


def _vec_text(graph, x) -> str:
    return format_vector(x, graph)


@dataclass
class FailureWitness:
    """A root α and g in G with g(α) != α and <α, g(α)> != 0.

    ``kind`` records how it was found.  The one exception to the pairing
    form is ``uncovered``: a positive root outside every W^G-orbit of a
    simple root when both the roots and the orbits are fully enumerated.
    """

    graph: CoxeterGraph
    root: Vector
    g: Symmetry | None
    image: Vector | None
    pairing: Scalar | None
    kind: str

    def check(self) -> bool:
        if self.kind == "uncovered":
            return True
        img = apply_symmetry(self.graph, self.g, self.root)
        return img == self.image and img != self.root and bool(pairing(self.graph, self.root, img)) \
            and pairing(self.graph, self.root, img) == self.pairing

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "root": _vec_text(self.graph, self.root),
            "g": str(self.g) if self.g is not None else None,
            "image": _vec_text(self.graph, self.image) if self.image is not None else None,
            "pairing": str(self.pairing) if self.pairing is not None else None,
        }


@dataclass
class CoverageEvidence:
    """Which W^G-orbit of a simple root holds each enumerated positive root."""

    graph: CoxeterGraph
    starts: tuple[int, ...]
    witnesses: tuple  # (root, start vertex, word)
    covered: int
    total: int
    depth: int
    complete: bool
    orbits_complete: bool
    discrepancies: int = 0
    trivial: bool = False
    uncovered: tuple = ()

    def to_dict(self) -> dict:
        return {
            "trivial_group": self.trivial,
            "starts": list(self.starts),
            "covered": self.covered,
            "total": self.total,
            "depth": self.depth,
            "roots_complete": self.complete,
            "orbits_complete": self.orbits_complete,
            "discrepancies": self.discrepancies,
            "witnesses": [
                {"root": _vec_text(self.graph, r), "start": s, "word": " ".join(w) or "1"}
                for r, s, w in self.witnesses
            ],
        }


@dataclass
class Translation:
    """w(α_source) = target, found in W^G."""

    source: int
    target: Vector
    word: tuple[str, ...]
    label: str


@dataclass
class AffineCertificate:
    graph: CoxeterGraph
    special: int
    delta: Vector
    beta: Vector
    starts: tuple[int, ...]
    translations: tuple[Translation, ...]
    paired: int | None  # the vertex t handled through α_0 when set
    checks: int = 0

    def to_dict(self) -> dict:
        return {
            "special_vertex": self.special,
            "delta": _vec_text(self.graph, self.delta),
            "beta": _vec_text(self.graph, self.beta),
            "starts": list(self.starts),
            "paired_vertex": self.paired,
            "checks": self.checks,
            "translations": [
                {"equation": t.label, "word": " ".join(t.word)} for t in self.translations
            ],
        }


@dataclass
class TruncationEvidence:
    family: str
    windows: tuple  # (size, status)

    def to_dict(self) -> dict:
        return {"family": self.family,
                "windows": [{"size": n, "status": s} for n, s in self.windows]}


@dataclass
class Verdict:
    status: str
    evidence: object = None
    depth: int | None = None
    components: tuple = ()
    pair: str | None = None
    certificate: AffineCertificate | None = None

    @property
    def positive(self) -> bool:
        return self.status in (HOLDS, AFFINE)

    @property
    def witness(self) -> FailureWitness | None:
        if isinstance(self.evidence, FailureWitness):
            return self.evidence
        for c in self.components:
            if c.witness is not None:
                return c.witness
        return None

    def label(self) -> str:
        return f"{DEPTH}({self.depth})" if self.status == DEPTH else self.status

    def to_dict(self) -> dict:
        out = {"status": self.status, "depth": self.depth}
        if self.pair:
            out["pair"] = self.pair
        if self.evidence is not None:
            out["evidence"] = self.evidence.to_dict()
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        if self.components:
            out["components"] = [c.to_dict() for c in self.components]
        return out


# -- necessary-condition probes ---------------------------------------------


def check_orbit_commutation(graph: CoxeterGraph, G: SymmetryGroup):
    """First (s, g(s), g) with g(s) != s and m_{s,g(s)} != 2, else None."""
    for s in graph.vertices:
        for g in G.elements:
            t = g(s)
            if t != s and graph.label(s, t) != 2:
                return s, t, g
    return None


def check_fixed_vertex(G: SymmetryGroup):
    """An element fixing no vertex, else None."""
    verts = G.graph.vertices
    for g in G.elements:
        if all(g(s) != s for s in verts):
            return g
    return None


def _make_witness(graph, root, g, kind) -> FailureWitness | None:
    img = apply_symmetry(graph, g, root)
    if img == root:
        return None
    p = pairing(graph, root, img)
    if not p:
        return None
    return FailureWitness(graph, root, g, img, p, kind)


def commutation_witness(graph: CoxeterGraph, G: SymmetryGroup) -> FailureWitness | None:
    hit = check_orbit_commutation(graph, G)
    if hit is None:
        return None
    s, _, g = hit
    return _make_witness(graph, unit(len(graph), graph.position(s)), g, "orbit-commutation")


def fixed_point_free_witness(graph: CoxeterGraph, G: SymmetryGroup) -> FailureWitness | None:
    """For g fixing no vertex: take s with d(s, g(s)) minimal and a shortest
    path s = s_0, ..., s_l = g(s); then α = (s_0 ... s_{l-2})(α_{s_{l-1}})
    has disjoint support from g(α) and pairs negatively with it."""
    g = check_fixed_vertex(G)
    if g is None:
        return None
    best = None
    for s in graph.vertices:
        dist = _bfs_path(graph, s, g(s))
        if dist is not None and (best is None or len(dist) < len(best)):
            best = dist
    if best is None:
        return None
    path = best[:-1]
    x = unit(len(graph), graph.position(path[-1]))
    for v in reversed(path[:-1]):
        x = reflect(graph, graph.position(v), x)
    return _make_witness(graph, x, g, "fixed-point-free")


def _bfs_path(graph: CoxeterGraph, a: int, b: int) -> list[int] | None:
    prev = {a: None}
    q = deque([a])
    while q:
        x = q.popleft()
        if x == b:
            path = [x]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for y in graph.neighbors(x):
            if y not in prev:
                prev[y] = x
                q.append(y)
    return None


# -- root membership ---------------------------------------------------------


def root_descent(graph: CoxeterGraph, x: Vector, max_steps: int = 10_000):
    """(word, s) with x = word(α_s) if x is a positive root, else None.

    Each step reflects by some s with <x, α_s> > 0, which lowers the depth.
    """
    if vector_sign(x) != 1:
        return None
    word: list[int] = []
    n = len(graph)
    for _ in range(max_steps):
        nz = [i for i, a in enumerate(x) if a]
        if len(nz) == 1 and x[nz[0]] == 1:
            return tuple(graph.vertices[i] for i in word), graph.vertices[nz[0]]
        for i in range(n):
            c = pairing(graph, unit(n, i), x)
            if c.sign() > 0:
                y = reflect(graph, i, x)
                if vector_sign(y) != 1:
                    return None
                word.append(i)
                x = y
                break
        else:
            return None
    return None


def is_root(graph: CoxeterGraph, x: Vector) -> bool:
    sg = vector_sign(x)
    if sg == -1:
        x = tuple(-a for a in x)
    return root_descent(graph, x) is not None


# -- witness search ----------------------------------------------------------


def _as_vector(graph, seed) -> Vector:
    if isinstance(seed, dict):
        return vector_from(graph, seed)
    return tuple(Scalar.of(a) if not isinstance(a, Scalar) else a for a in seed)


def witness_search(graph: CoxeterGraph, G: SymmetryGroup, rootset: RootSet | None,
                   seeds: Sequence = (), propagate: bool = True) -> FailureWitness | None:
    """First root α (seeds, then BFS order) and g with g(α) != α, <α, g(α)> != 0."""
    nontrivial = G.nontrivial()
    if not nontrivial:
        return None
    for seed in seeds:
        x = _as_vector(graph, seed)
        if not is_root(graph, x):
            continue
        for g in nontrivial:
            w = _make_witness(graph, x, g, "seed")
            if w is not None:
                return w
    if rootset is None:
        return None
    for r in rootset.roots:
        for g in nontrivial:
            w = _make_witness(graph, r.coords, g, "search")
            if w is not None:
                return w
    if propagate:
        return _propagation_witness(graph, G, rootset)
    return None


def _propagation_witness(graph, G, rootset) -> FailureWitness | None:
    """If g fixes α, <α, β> is not in {0, ±1} and g moves β, then either β
    or γ = r_β(α) = α - <α, β>β is moved by g with a nonzero pairing,
    since <γ, g(γ)> = 2 - 2<α,β>² + <α,β>² <β, g(β)>."""
    roots = [r.coords for r in rootset.roots if r.depth is not None and r.depth <= 3]
    allr = [r.coords for r in rootset.roots]
    for g in G.nontrivial():
        fixed = [a for a in roots if apply_symmetry(graph, g, a) == a]
        for a in fixed:
            for b in allr:
                c = pairing(graph, a, b)
                if c == 0 or c == 1 or c == -1:
                    continue
                if apply_symmetry(graph, g, b) == b:
                    continue
                gamma = vec_sub(a, vec_scale(c, b))
                if vector_sign(gamma) == -1:
                    gamma = tuple(-t for t in gamma)
                w = _make_witness(graph, gamma, g, "propagation")
                if w is not None:
                    return w
    return None


# -- W^G orbits of simple roots ----------------------------------------------


@dataclass
class OrbitBFS:
    start: int
    index: dict  # vector -> (parent vector | None, letter | None, depth)
    complete: bool

    def word_to(self, x: Vector) -> tuple[str, ...]:
        """Letters (a1 ... ak) with x = a1(...ak(α_start))."""
        out = []
        while True:
            parent, a, _ = self.index[x]
            if parent is None:
                return tuple(out)
            out.append(a)
            x = parent

    def __contains__(self, x):
        return x in self.index


def wg_orbit(folded: FoldedSystem, s: int, max_depth: int, max_size: int = 50_000,
             target: Vector | None = None) -> OrbitBFS:
    """The W^G-orbit of α_s (positive and negative roots) by BFS on u_X."""
    g = folded.graph
    start = unit(len(g), g.position(s))
    index = {start: (None, None, 0)}
    layer = [start]
    letters = folded.generator_names()
    d = 0
    complete = False
    while True:
        if target is not None and target in index:
            break
        nxt = []
        for x in layer:
            for a in letters:
                y = folded.act(a, x)
                if y not in index:
                    index[y] = (x, a, d + 1)
                    nxt.append(y)
        if not nxt:
            complete = True
            break
        d += 1
        layer = nxt
        if d >= max_depth or len(index) > max_size:
            break
    return OrbitBFS(s, index, complete)


def simple_root_orbits(folded: FoldedSystem, max_depth: int, max_size: int = 50_000) -> list[OrbitBFS]:
    """One orbit per class of simple roots, in vertex order."""
    g = folded.graph
    out: list[OrbitBFS] = []
    for s in g.vertices:
        x = unit(len(g), g.position(s))
        if any(x in o for o in out):
            continue
        out.append(wg_orbit(folded, s, max_depth, max_size))
    return out


# -- coverage ----------------------------------------------------------------


def coverage_check(graph: CoxeterGraph, G: SymmetryGroup, folded: FoldedSystem, rootset: RootSet,
                   budget: Budget = Budget()) -> tuple[str, CoverageEvidence, list[OrbitBFS]]:
    """Cover Φ⁺ (as enumerated) by W^G-orbits of simple roots.

    Returns (status, evidence, orbits) where status is ``holds``,
    ``fails`` (complete roots and orbits, some root uncovered) or
    ``verified-to-depth``.
    """
    orbits = simple_root_orbits(folded, budget.orbit_depth, budget.max_orbit)
    wit = []
    uncovered = []
    first_gap = None
    for r in sorted(rootset.roots, key=lambda r: r.depth):
        for o in orbits:
            if r.coords in o:
                wit.append((r.coords, o.start, o.word_to(r.coords)))
                break
        else:
            uncovered.append(r.coords)
            if first_gap is None:
                first_gap = r.depth
    depth = rootset.depth_reached if first_gap is None else first_gap - 1
    orbits_complete = all(o.complete for o in orbits)
    ev = CoverageEvidence(graph, tuple(o.start for o in orbits), tuple(wit), len(wit), len(rootset),
                          depth, rootset.complete, orbits_complete, uncovered=tuple(uncovered))
    ev.discrepancies = verify_coverage(folded, ev)
    if ev.discrepancies:
        raise InvariantViolation(f"{ev.discrepancies} coverage witnesses failed re-verification")
    if not uncovered and rootset.complete:
        return HOLDS, ev, orbits
    if uncovered and rootset.complete and orbits_complete:
        return FAILS, ev, orbits
    return DEPTH, ev, orbits


def verify_coverage(folded: FoldedSystem, ev: CoverageEvidence) -> int:
    """Re-apply each witness word with the exact u_X matrices; count mismatches."""
    g = folded.graph
    mats = {a: folded.generator(a).matrix for a in folded.generator_names()}
    bad = 0
    for root, s, word in ev.witnesses:
        x = unit(len(g), g.position(s))
        for a in reversed(word):
            x = mat_apply(mats[a], x)
        if x != root:
            bad += 1
    return bad


# -- equivalence classes -----------------------------------------------------


@dataclass
class EquivClasses:
    """Classes of the relation generated by <α, β> not in {0, 1, -1}."""

    roots: tuple
    labels: tuple  # class index per root
    complete: bool

    @property
    def count(self) -> int:
        return len(set(self.labels))

    def class_of(self, x: Vector) -> int:
        try:
            return self.labels[self.roots.index(x)]
        except ValueError:
            neg = tuple(-a for a in x)
            return self.labels[self.roots.index(neg)]

    def same(self, x: Vector, y: Vector) -> bool:
        return self.class_of(x) == self.class_of(y)


def _int_coords(x):
    out = []
    for a in x:
        if not a.is_rational():
            return None
        q = a.rational()
        if not isinstance(q, int):
            return None
        out.append(q)
    return out


def equiv_classes(rootset: RootSet, form=None) -> EquivClasses:
    """Union-find over the enumerated positive roots (α and -α share a class)."""
    graph = rootset.graph
    vecs = [r.coords for r in rootset.roots]
    n = len(vecs)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    ints = [_int_coords(v) for v in vecs]
    if graph.is_simply_laced() and all(v is not None for v in ints):
        from .roots import form_of
        B = [[int(e.rational()) for e in row] for row in form_of(graph).entries]
        bx = [[sum(B[i][j] * v[j] for j in range(len(v)) if v[j]) for i in range(len(v))] for v in ints]
        for i in range(n):
            for j in range(i + 1, n):
                c = sum(a * b for a, b in zip(ints[i], bx[j]))
                if c not in (0, 1, -1):
                    a, b = find(i), find(j)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
    else:
        for i in range(n):
            for j in range(i + 1, n):
                c = pairing(graph, vecs[i], vecs[j])
                if not (c == 0 or c == 1 or c == -1):
                    a, b = find(i), find(j)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
    roots_ = {}
    labels = []
    for i in range(n):
        labels.append(roots_.setdefault(find(i), len(roots_)))
    return EquivClasses(tuple(vecs), tuple(labels), rootset.complete)


# -- affine certificates -----------------------------------------------------


def _delta_vector(graph: CoxeterGraph):
    gt = catalog.recognize(graph)
    if gt.family not in catalog.AFFINE_WITH_DELTA or (gt.family == "tA" and gt.rank < 2):
        return None
    coeffs = catalog.null_coeffs(gt.name)
    return vector_from(graph, {gt.relabel[v]: c for v, c in coeffs.items()})


def affine_certificate(graph: CoxeterGraph, G: SymmetryGroup, folded: FoldedSystem,
                       budget: Budget = Budget()) -> AffineCertificate | None:
    """Certify that W^G-orbits of simple roots cover every root α + kδ.

    Uses a vertex v fixed by G with δ-coefficient 1 in the role of the
    extra vertex.  The finite part Γ_1 = Γ minus v must have the property
    with classes Y.  Then either α_s + δ is in W^G α_s for each s in Y, or
    this fails for exactly one t and α_t + δ is in W^G α_v while
    α_v + δ is in W^G α_t.  Returns None when no certificate is found.
    """
    delta = _delta_vector(graph)
    if delta is None:
        return None
    n = len(graph)
    pos = graph.position
    for s in graph.vertices:
        if pairing(graph, unit(n, pos(s)), delta):
            raise InvariantViolation(f"<α_{s}, δ> != 0")
    specials = [v for v in graph.vertices
                if delta[pos(v)] == 1 and all(g(v) == v for g in G.elements)]
    if not specials:
        return None
    v = specials[0]
    av = unit(n, pos(v))
    beta = vec_sub(delta, av)
    if pairing(graph, av, beta) != -2:
        raise InvariantViolation("<α_0, β> != -2")
    # finite part
    s1 = [s for s in graph.vertices if s != v]
    g1 = graph.subgraph(s1)
    G1 = restrict_group(G, g1)
    fold1 = fold(g1, G1, budget.cap_order)
    rs1 = enumerate_positive_roots(g1, max_depth=10**6)
    status, ev1, orb1 = coverage_check(g1, G1, fold1, rs1, budget)
    if status != HOLDS:
        return None
    Y = [o.start for o in orb1]
    # orbits in the full graph, searching for the translated targets
    trans: list[Translation] = []
    missing = []
    for s in Y:
        target = vec_add(unit(n, pos(s)), delta)
        o = wg_orbit(folded, s, budget.orbit_depth, budget.max_orbit, target)
        if target in o:
            trans.append(Translation(s, target, o.word_to(target), f"a{s} + δ = w(a{s})"))
        else:
            missing.append(s)
    paired = None
    if len(missing) == 1:
        t = missing[0]
        tgt1 = vec_add(unit(n, pos(t)), delta)
        o0 = wg_orbit(folded, v, budget.orbit_depth, budget.max_orbit, tgt1)
        tgt2 = vec_add(av, delta)
        ot = wg_orbit(folded, t, budget.orbit_depth, budget.max_orbit, tgt2)
        if tgt1 in o0 and tgt2 in ot:
            trans.append(Translation(v, tgt1, o0.word_to(tgt1), f"a{t} + δ = w(a{v})"))
            trans.append(Translation(t, tgt2, ot.word_to(tgt2), f"a{v} + δ = w'(a{t})"))
            paired = t
            Y = Y + [v]
        else:
            return None
    elif missing:
        return None
    cert = AffineCertificate(graph, v, delta, beta, tuple(Y), tuple(trans), paired)
    cert.checks = verify_certificate(folded, cert)
    return cert


def verify_certificate(folded: FoldedSystem, cert: AffineCertificate) -> int:
    """Check every translation and the power laws for k in -3..3.

    Returns the number of exact equations checked; raises on a mismatch.
    """
    g = folded.graph
    n = len(g)
    d = cert.delta
    checks = 0

    def expect(lhs, rhs, what):
        nonlocal checks
        if lhs != rhs:
            raise InvariantViolation(f"certificate equation failed: {what}")
        checks += 1

    elems = []
    for t in cert.translations:
        w = folded.element(t.word)
        expect(w(unit(n, g.position(t.source))), t.target, t.label)
        expect(w(d), d, "w(δ) = δ")
        elems.append(w)
    single = cert.translations if cert.paired is None else cert.translations[:-2]
    for t, w in zip(single, elems):
        x = unit(n, g.position(t.source))
        for k in range(-3, 4):
            expect(w.power(k)(x), vec_add(x, vec_scale(k, d)), f"w^{k}(a{t.source}) = a{t.source} + {k}δ")
    if cert.paired is not None:
        w, w2 = elems[-2], elems[-1]
        x = unit(n, g.position(cert.special))
        xp = unit(n, g.position(cert.paired))
        ww = w2 * w
        for k in range(-3, 4):
            expect(ww.power(k)(x), vec_add(x, vec_scale(2 * k, d)), f"(w'w)^{k}(a0) = a0 + {2 * k}δ")
            expect((w * ww.power(k))(x), vec_add(xp, vec_scale(2 * k + 1, d)), "w(w'w)^k(a0)")
    return checks


# -- orchestration -----------------------------------------------------------


def _name(graph: CoxeterGraph) -> str:
    """The graph's own name, else its recognized type when known."""
    if graph.name or not graph.vertices:
        return graph.display_name()
    t = catalog.type_of(graph)
    return graph.display_name() if "unknown" in t else t


def _trivial_holds(graph) -> Verdict:
    ev = CoverageEvidence(graph, tuple(graph.vertices), (), 0, 0, 0, True, True, trivial=True)
    return Verdict(HOLDS, ev, None, pair=_name(graph))


def decide_component(graph: CoxeterGraph, G: SymmetryGroup, budget: Budget = Budget(),
                     seeds: Sequence = ()) -> Verdict:
    """Decide a pair with finite orbits without splitting it."""
    name = _name(graph)
    if G.is_trivial():
        return _trivial_holds(graph)
    w = commutation_witness(graph, G) or fixed_point_free_witness(graph, G)
    if w is not None:
        return Verdict(FAILS, w, pair=name)
    rootset = enumerate_positive_roots(graph, budget.root_depth, budget.max_roots)
    w = witness_search(graph, G, rootset, seeds)
    if w is not None:
        return Verdict(FAILS, w, pair=name)
    folded = fold(graph, G, budget.cap_order)
    status, ev, orbits = coverage_check(graph, G, folded, rootset, budget)
    if status == HOLDS:
        return Verdict(HOLDS, ev, pair=name)
    if status == FAILS:
        r = ev.uncovered[0]
        return Verdict(FAILS, FailureWitness(graph, r, None, None, None, "uncovered"), pair=name)
    cert = None
    if graph.is_connected() and not (ev.uncovered and ev.orbits_complete):
        cert = affine_certificate(graph, G, folded, budget)
    if cert is not None:
        return Verdict(AFFINE, ev, ev.depth, pair=name, certificate=cert)
    return Verdict(DEPTH, ev, ev.depth, pair=name)


def combine(parts: Sequence[Verdict], pair: str | None = None) -> Verdict:
    """Fails if any part fails; else depth-bounded if any part is; else
    certified-affine if any part is; else holds."""
    parts = tuple(parts)
    for p in parts:
        if p.status == FAILS:
            return Verdict(FAILS, p.evidence, None, parts, pair)
    bounded = [p for p in parts if p.status == DEPTH]
    if bounded:
        return Verdict(DEPTH, None, min(p.depth for p in bounded), parts, pair)
    aff = [p for p in parts if p.status == AFFINE]
    if aff:
        return Verdict(AFFINE, None, min(p.depth for p in aff), parts, pair)
    return Verdict(HOLDS, None, None, parts, pair)


def decide(graph: CoxeterGraph, G: SymmetryGroup, budget: Budget = Budget(), seeds: Sequence = (),
           reduce: bool = True) -> Verdict:
    """Drop infinite orbits, split into components, decide each, combine."""
    name = _name(graph)
    graph, G = restrict_to_finite_orbits(graph, G)
    if not graph.vertices:
        return Verdict(HOLDS, None, None, (), name)
    if not reduce:
        # the whole graph at once, for checking the component reduction
        return decide_component(graph, G, budget, seeds)
    parts = []
    for sub, H in connected_components(graph, G):
        local = [s for s in seeds if _seed_inside(sub, s)]
        parts.append(decide_component(sub, H, budget, local))
    if len(parts) == 1:
        v = parts[0]
        v.pair = name
        return v
    return combine(parts, name)


def _seed_inside(graph, seed) -> bool:
    if isinstance(seed, dict):
        return all(graph.has_vertex(s) for s, c in seed.items() if c)
    return len(seed) == len(graph)


def decide_family(entry: "catalog.CatalogEntry", budget: Budget = Budget()) -> Verdict:
    """Truncation windows of an infinite family, up to ``budget.truncation``
    (or the entry's own window size when larger).  Never returns holds."""
    fam = entry.family
    low = {"Ainf": 1, "iAi": 1, "Dinf": 4}[fam]
    high = max(budget.truncation if fam != "Dinf" else budget.truncation + 3, entry.truncation or 0)
    windows = []
    suffix = (":" + ",".join(entry.chosen)) if entry.chosen else ""
    for n in range(low, high + 1):
        e = catalog.catalog_graph(f"{fam}@{n}{suffix}")
        v = decide(e.graph, e.group(), budget)
        windows.append((n, v.label()))
        if v.status == FAILS:
            return Verdict(FAILS, v.witness, None, (v,), entry.token)
    ev = TruncationEvidence(fam, tuple(windows))
    return Verdict(DEPTH, ev, high, pair=entry.token)


def describe(verdict: Verdict) -> str:
    lines = [f"verdict: {verdict.label()}"]
    for c in verdict.components or (verdict,):
        ev = c.evidence
        if isinstance(ev, CoverageEvidence) and not ev.trivial:
            lines.append(f"{_name(ev.graph)}: {ev.covered}/{ev.total} enumerated positive roots covered by the "
                         f"orbits of {', '.join('a' + str(s) for s in ev.starts)} "
                         f"(roots complete={str(ev.complete).lower()}, all covered to depth {ev.depth})")
        elif isinstance(ev, CoverageEvidence):
            lines.append(f"{_name(ev.graph)}: trivial symmetry group")
        elif isinstance(ev, TruncationEvidence):
            lines.append("windows: " + ", ".join(f"{ev.family}@{n} {s}" for n, s in ev.windows))
    w = verdict.witness
    if w is not None:
        if w.kind == "uncovered":
            lines.append(f"uncovered root: {_vec_text(w.graph, w.root)}")
        else:
            lines.append(f"witness ({w.kind}): α = {_vec_text(w.graph, w.root)}, g = {w.g}")
            lines.append(f"  g(α) = {_vec_text(w.graph, w.image)}, <α, g(α)> = {w.pairing}")
    certs = [verdict.certificate] if verdict.certificate else \
        [c.certificate for c in verdict.components if c.certificate]
    for c in certs:
        lines.append(f"affine certificate: δ = {_vec_text(c.graph, c.delta)}, special vertex {c.special}")
        for t in c.translations:
            lines.append(f"  {t.label} with w = {' '.join(t.word)}")
        lines.append(f"  {c.checks} exact equations checked")
    return "\n".join(lines)
