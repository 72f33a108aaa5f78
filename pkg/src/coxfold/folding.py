"""Folding a Coxeter graph along a group of symmetries.

For each finite orbit X whose parabolic subgroup W_X is finite, u_X is
the longest element of W_X.  The u_X generate the fixed subgroup W^G,
which is a Coxeter group with matrix m̂_{X,Y} = order(u_X u_Y).  The
vectors α̂_X = Σ_{s∈X} α_s form a root basis for W^G inside V; its
positive roots Φ̂⁺ are enumerated here together with the map F that
sends w(α̂_X) to the G-orbit of w(α_s).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .catalog import is_spherical, type_of
from .graph import INF, CoxeterGraph, OrbitPartition, SymmetryGroup, vertex_orbits
from .roots import (DEFAULT_ROOT_CAP, GroupElement, InvariantViolation, RootSet, Root, Vector,
                    _bfs, enumerate_positive_roots, identity_element, is_identity, mat_mul,
                    pairing, reflect, simple_reflection_matrix, unit, vector_key, vector_sign,
                    zero_vector)
from .scalar import COS_SQUARED

DEFAULT_ORDER_CAP = 1000


class NotSpherical(ValueError):
    pass


class FoldedOrderUnresolved(RuntimeError):
    pass


def spherical_check(graph: CoxeterGraph, X: Iterable[int]) -> bool:
    """True iff W_X is finite, i.e. every component of Γ_X is spherical."""
    return is_spherical(graph.subgraph(X))


def _apply_word(graph: CoxeterGraph, word: Sequence[int], x: Vector) -> Vector:
    """Apply the word (a1 ... ak) of vertex positions as a1(...(ak(x)))."""
    for i in reversed(word):
        x = reflect(graph, i, x)
    return x


def longest_element(graph: CoxeterGraph, X: Iterable[int]) -> GroupElement:
    """u_X by greedy ascent, checked against the root system of Γ_X."""
    X = sorted(set(X))
    if not spherical_check(graph, X):
        raise NotSpherical(f"W_X is infinite for X = {X}")
    n = len(graph)
    pos = [graph.position(s) for s in X]
    word: list[int] = []
    while True:
        for p in pos:
            if vector_sign(_apply_word(graph, word, unit(n, p))) > 0:
                word.append(p)
                break
        else:
            break
    u = identity_element(graph)
    for p in word:
        u = u * simple_reflection_matrix(graph, graph.vertices[p])
    sub = graph.subgraph(X)
    sub_roots = enumerate_positive_roots(sub, max_depth=10**6)
    if len(word) != len(sub_roots):
        raise InvariantViolation("greedy ascent length differs from |Φ_X⁺|")
    for r in sub_roots:
        v = list(zero_vector(n))
        for s, a in zip(sub.vertices, r.coords):
            v[graph.position(s)] = a
        if vector_sign(u(tuple(v))) >= 0:
            raise InvariantViolation("u_X does not send Φ_X⁺ to Φ_X⁻")
    if not is_identity(mat_mul(u.matrix, u.matrix)):
        raise InvariantViolation("u_X is not an involution")
    return u


def letter_name(X: frozenset) -> str:
    if len(X) == 1:
        return f"s{next(iter(X))}"
    return "u{" + ",".join(map(str, sorted(X))) + "}"


def alpha_hat(graph: CoxeterGraph, X: Iterable[int]) -> Vector:
    v = list(zero_vector(len(graph)))
    for s in X:
        v[graph.position(s)] = v[graph.position(s)] + 1
    return tuple(v)


def _fast_order(graph: CoxeterGraph, X, Y):
    """m̂ from the normalized pairing of α̂_X and α̂_Y, or None if unmatched."""
    ax, ay = alpha_hat(graph, X), alpha_hat(graph, Y)
    a = pairing(graph, ax, ay)
    if not a:
        return 2
    if a.sign() > 0:
        return None
    nn = pairing(graph, ax, ax) * pairing(graph, ay, ay)
    a2 = a * a
    if (a2 - nn).sign() >= 0:
        return INF
    for m, c2 in COS_SQUARED.items():
        if m > 2 and a2 == c2 * nn:
            return m
    return None


def folded_order(graph: CoxeterGraph, X, Y, cap: int = DEFAULT_ORDER_CAP, method: str = "auto",
                 u: dict | None = None):
    """m̂_{X,Y}: the order of u_X u_Y.

    ``method`` is ``form`` (normalized pairing only), ``matrix`` (matrix
    powers up to ``cap``) or ``auto`` (form, then matrix).
    """
    X, Y = frozenset(X), frozenset(Y)
    if X == Y:
        return 1
    if method in ("auto", "form"):
        m = _fast_order(graph, X, Y)
        if m is not None or method == "form":
            return m
    ux = u[X] if u and X in u else longest_element(graph, X)
    uy = u[Y] if u and Y in u else longest_element(graph, Y)
    p = mat_mul(ux.matrix, uy.matrix)
    q = p
    for k in range(1, cap + 1):
        if is_identity(q):
            return k
        q = mat_mul(q, p)
    # a power cap alone never proves infinite order; the pairing does
    ax, ay = alpha_hat(graph, X), alpha_hat(graph, Y)
    a = pairing(graph, ax, ay)
    nn = pairing(graph, ax, ax) * pairing(graph, ay, ay)
    if a.sign() < 0 and (a * a - nn).sign() >= 0:
        return INF
    raise FoldedOrderUnresolved(f"order of u_X u_Y not resolved within {cap} powers")


@dataclass
class FoldedSystem:
    graph: CoxeterGraph
    group: SymmetryGroup
    orbits: OrbitPartition
    spherical_orbits: tuple[frozenset, ...]
    nonspherical_orbits: tuple[frozenset, ...]
    longest_elements: dict
    alpha_hat: dict
    folded_matrix: dict
    folded_graph: CoxeterGraph
    folded_name: str
    letters: dict = field(repr=False, default_factory=dict)  # name -> orbit
    _words: dict = field(repr=False, default_factory=dict)  # name -> positions of u_X word

    def letter(self, X) -> str:
        return letter_name(frozenset(X))

    def generator(self, name_or_orbit) -> GroupElement:
        X = self._orbit(name_or_orbit)
        u = self.longest_elements[X]
        return GroupElement((letter_name(X),), u.matrix, u.matrix)

    def _orbit(self, key) -> frozenset:
        if isinstance(key, str):
            if key not in self.letters:
                raise KeyError(f"unknown generator letter {key!r}")
            return self.letters[key]
        X = frozenset(key) if not isinstance(key, int) else frozenset({key})
        if X not in self.longest_elements:
            raise KeyError(f"{sorted(X)} is not a spherical orbit")
        return X

    def element(self, word: Iterable) -> GroupElement:
        """The element of W^G for a word of letters such as ``["s2", "s0", "u{1,3,4}"]``."""
        out = identity_element(self.graph)
        for a in word:
            out = out * self.generator(a)
        return out

    def act(self, name_or_orbit, x: Vector) -> Vector:
        X = self._orbit(name_or_orbit)
        return _apply_word(self.graph, self._words[letter_name(X)], x)

    def apply_word(self, word: Iterable, x: Vector) -> Vector:
        for a in reversed(list(word)):
            x = self.act(a, x)
        return x

    def generator_names(self) -> list[str]:
        return [letter_name(X) for X in self.spherical_orbits]

    def to_dict(self) -> dict:
        return {
            "orbits": [sorted(o) for o in self.orbits.orbits],
            "spherical_orbits": [sorted(o) for o in self.spherical_orbits],
            "nonspherical_orbits": [sorted(o) for o in self.nonspherical_orbits],
            "u_words": {letter_name(X): list(self.longest_elements[X].word) for X in self.spherical_orbits},
            "folded_matrix": [[_label_text(self.folded_matrix[(X, Y)]) for Y in self.spherical_orbits]
                              for X in self.spherical_orbits],
            "folded_vertices": [min(X) for X in self.spherical_orbits],
            "folded_graph": self.folded_name,
        }


def _label_text(m):
    return "inf" if m == INF else int(m)


def fold(graph: CoxeterGraph, G: SymmetryGroup, cap_order: int = DEFAULT_ORDER_CAP,
         method: str = "auto") -> FoldedSystem:
    """Assemble 𝒮, u_X, m̂, α̂_X and Γ̂ for a pair whose orbits are all finite."""
    if G.infinite:
        raise ValueError("fold needs finite orbits; apply restrict_to_finite_orbits first")
    orbits = vertex_orbits(G)
    sph, non = [], []
    for X in orbits.orbits:
        (sph if spherical_check(graph, X) else non).append(X)
    u = {X: longest_element(graph, X) for X in sph}
    ah = {X: alpha_hat(graph, X) for X in sph}
    mat = {}
    for X in sph:
        for Y in sph:
            if (Y, X) in mat:
                mat[(X, Y)] = mat[(Y, X)]
            else:
                mat[(X, Y)] = folded_order(graph, X, Y, cap_order, method, u)
    verts = [min(X) for X in sph]
    edges = [(min(X), min(Y), m) for (X, Y), m in mat.items()
             if min(X) < min(Y) and m != 2]
    fg = CoxeterGraph.from_labels(verts, edges)
    name = type_of(fg) if fg.vertices else "empty"
    fg = CoxeterGraph(fg.vertices, fg.edges, name)
    letters = {letter_name(X): X for X in sph}
    words = {letter_name(X): tuple(graph.position(int(a[1:])) for a in u[X].word) for X in sph}
    return FoldedSystem(graph, G, orbits, tuple(sph), tuple(non), u, ah, mat, fg, name, letters, words)


def enumerate_folded_roots(folded: FoldedSystem, max_depth: int = 12,
                           max_roots: int = DEFAULT_ROOT_CAP) -> RootSet:
    """Φ̂⁺ inside V by BFS from the α̂_X under the u_X.

    ``parents[i]`` is ``(j, X)`` meaning root i = u_X(root j), or
    ``(None, X)`` for α̂_X itself.
    """
    starts = [(folded.alpha_hat[X], X) for X in folded.spherical_orbits]
    vecs, depths, parents, complete, index = _bfs(
        folded.graph, starts, folded.act, folded.spherical_orbits, max_depth, max_roots)
    roots = tuple(Root(v, d) for v, d in zip(vecs, depths))
    return RootSet(folded.graph, roots, max(depths, default=0), complete, tuple(parents), index)


# -- orbits of roots and the map F ---------------------------------------


def _position_maps(G: SymmetryGroup) -> list[tuple[int, ...]]:
    g = G.graph
    out = []
    for h in G.elements:
        src = [0] * len(g)
        for i, s in enumerate(g.vertices):
            src[g.position(h(s))] = i
        out.append(tuple(src))
    return out


def apply_symmetry(graph: CoxeterGraph, h, x: Vector) -> Vector:
    """g(x): the coefficient of α_s moves to α_{g(s)}."""
    y = [None] * len(x)
    for i, s in enumerate(graph.vertices):
        y[graph.position(h(s))] = x[i]
    return tuple(y)


@dataclass(frozen=True)
class RootOrbit:
    members: tuple
    representative: tuple

    def __len__(self):
        return len(self.members)


def root_orbits(rootset: RootSet, G: SymmetryGroup) -> list[RootOrbit]:
    """G-orbits of the enumerated positive roots, sorted by representative."""
    maps = _position_maps(G)
    seen: set = set()
    out = []
    for r in rootset.roots:
        x = r.coords
        if x in seen:
            continue
        members = {tuple(x[i] for i in src) for src in maps}
        seen |= members
        ordered = tuple(sorted(members, key=vector_key))
        out.append(RootOrbit(ordered, ordered[0]))
    out.sort(key=lambda o: vector_key(o.representative))
    return out


@dataclass
class FMap:
    pairs: dict  # folded root vector -> orbit index
    witnesses: dict  # folded root vector -> (word, X)
    orbits: list
    injective: bool
    surjective: bool
    complete: bool
    unresolved: int
    edge_checks: int

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    def image(self, x: Vector) -> RootOrbit:
        return self.orbits[self.pairs[x]]


def compute_F(folded: FoldedSystem, folded_roots: RootSet, orbits: list[RootOrbit],
              rootset: RootSet | None = None) -> FMap:
    """F(w(α̂_X)) = w(ω_X), checked along every BFS edge for agreement."""
    g = folded.graph
    which = {}
    for k, o in enumerate(orbits):
        for m in o.members:
            which[m] = k
    images: list[frozenset] = []
    for i, r in enumerate(folded_roots.roots):
        j, X = folded_roots.parents[i]
        if j is None:
            images.append(frozenset(unit(len(g), g.position(s)) for s in X))
        else:
            images.append(frozenset(folded.act(X, v) for v in images[j]))
    pairs, witnesses = {}, {}
    unresolved = 0
    for i, r in enumerate(folded_roots.roots):
        img = images[i]
        ks = {which.get(v) for v in img}
        if None in ks:
            unresolved += 1
            continue
        if len(ks) != 1:
            raise InvariantViolation("w(ω_X) meets several orbits")
        (k,) = ks
        if img != frozenset(orbits[k].members):
            raise InvariantViolation("w(ω_X) is not a whole orbit")
        pairs[r.coords] = k
        witnesses[r.coords] = folded_roots.witness(r.coords)
    # every generator edge between enumerated folded roots must agree
    checks = 0
    for i, r in enumerate(folded_roots.roots):
        for X in folded.spherical_orbits:
            y = folded.act(X, r.coords)
            k = folded_roots.find(y)
            if k is None:
                continue
            moved = frozenset(folded.act(X, v) for v in images[i])
            if moved != images[k]:
                raise InvariantViolation("F depends on the witness")
            checks += 1
    hit = list(pairs.values())
    injective = len(hit) == len(set(hit))
    if not injective:
        raise InvariantViolation("F is not injective")
    complete = folded_roots.complete and (rootset is None or rootset.complete)
    surjective = len(set(hit)) == len(orbits)
    return FMap(pairs, witnesses, orbits, injective, surjective, complete, unresolved, checks)
