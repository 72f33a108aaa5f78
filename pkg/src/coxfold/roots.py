"""Root systems of the canonical root basis, enumerated by reflection BFS.

Vectors are tuples of :class:`Scalar` indexed by vertex position in the
graph.  Group elements carry a word (for reporting) and an exact matrix
(for computing); two elements are equal when their matrices are.

Word convention: the word ``(a1, ..., ak)`` acts as ``a1(a2(...ak(x)))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .graph import CoxeterGraph
from .scalar import ONE, ZERO, FormMatrix, Scalar, bilinear, canonical_form

Vector = tuple  # tuple[Scalar, ...]
Matrix = tuple  # tuple[tuple[Scalar, ...], ...]

DEFAULT_ROOT_CAP = 200_000


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; signals a bug, not bad input."""


class RootCapExceeded(RuntimeError):
    pass


# -- vectors --------------------------------------------------------------


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vector:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(k, x: Vector) -> Vector:
    return tuple(k * a for a in x)


def vec_neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def vector_sign(x: Vector) -> int | None:
    """1 or -1 when all nonzero coordinates share that sign, 0 for the
    zero vector, None for mixed signs."""
    seen = 0
    for a in x:
        if not a:
            continue
        s = a.sign()
        if seen == 0:
            seen = s
        elif s != seen:
            return None
    return seen


def support(x: Vector, graph: CoxeterGraph) -> frozenset[int]:
    return frozenset(v for v, a in zip(graph.vertices, x) if a)


def vector_from(graph: CoxeterGraph, coeffs: dict[int, object]) -> Vector:
    """Build a vector from ``{vertex: coefficient}``."""
    v = [ZERO] * len(graph)
    for s, c in coeffs.items():
        v[graph.position(s)] = Scalar.of(c) if not isinstance(c, Scalar) else c
    return tuple(v)


def format_vector(x: Vector, graph: CoxeterGraph) -> str:
    """Readable ``α_1 + 2α_3`` style text."""
    parts = []
    for v, a in zip(graph.vertices, x):
        if not a:
            continue
        if a == 1:
            body = f"a{v}"
        elif a == -1:
            body = f"-a{v}"
        elif a.is_rational():
            body = f"{a}a{v}"
        else:
            body = f"({a})a{v}"
        parts.append(body)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def vector_key(x: Vector) -> tuple:
    """A total, deterministic sort key on exact coordinates."""
    return tuple(a.coords() for a in x)


# -- matrices -------------------------------------------------------------


def identity_matrix(n: int) -> Matrix:
    return tuple(unit(n, i) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    cols = list(zip(*b))
    out = []
    for i in range(n):
        row = a[i]
        nz = [(k, r) for k, r in enumerate(row) if r]
        out.append(tuple(_dot_sparse(nz, cols[j]) for j in range(n)))
    return tuple(out)


def _dot_sparse(nz, col) -> Scalar:
    acc = ZERO
    for k, r in nz:
        c = col[k]
        if c:
            acc = acc + r * c
    return acc


def mat_apply(m: Matrix, x: Vector) -> Vector:
    nz = [(k, a) for k, a in enumerate(x) if a]
    return tuple(_dot_sparse(nz, row) for row in m)


def is_identity(m: Matrix) -> bool:
    return all(m[i][j] == (1 if i == j else 0) for i in range(len(m)) for j in range(len(m)))


@lru_cache(maxsize=256)
def _form(graph: CoxeterGraph) -> FormMatrix:
    return canonical_form(graph)


def form_of(graph: CoxeterGraph) -> FormMatrix:
    return _form(graph)


def pairing(graph: CoxeterGraph, x: Vector, y: Vector) -> Scalar:
    return bilinear(_form(graph), x, y)


def reflect(graph: CoxeterGraph, i: int, x: Vector) -> Vector:
    """σ_s(x) = x - <α_s, x> α_s, with s the vertex at position i."""
    c = ZERO
    for j, b in _form(graph).row(i):
        if x[j]:
            c = c + b * x[j]
    if not c:
        return x
    y = list(x)
    y[i] = y[i] - c
    return tuple(y)


@lru_cache(maxsize=4096)
def _reflection_matrix(graph: CoxeterGraph, i: int) -> Matrix:
    n = len(graph)
    rows = list(identity_matrix(n))
    row = [ZERO] * n
    for j, b in _form(graph).row(i):
        row[j] = -b
    row[i] = row[i] + ONE
    rows[i] = tuple(row)
    return tuple(rows)


# -- group elements -------------------------------------------------------


def letter(s: int) -> str:
    return f"s{s}"


@dataclass(frozen=True)
class GroupElement:
    """A word in generator letters with its exact matrix.

    Every generator letter is an involution, so the inverse matrix is
    carried along and the inverse word is the reversed word.
    """

    word: tuple[str, ...]
    matrix: Matrix = field(repr=False)
    inv: Matrix = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.inv is None:
            if len(self.word) > 1:
                raise ValueError("inverse matrix required for words of length > 1")
            object.__setattr__(self, "inv", self.matrix)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.word + other.word, mat_mul(self.matrix, other.matrix),
                            mat_mul(other.inv, self.inv))

    def inverse(self) -> "GroupElement":
        return GroupElement(tuple(reversed(self.word)), self.inv, self.matrix)

    def __call__(self, x: Vector) -> Vector:
        return mat_apply(self.matrix, x)

    def is_identity(self) -> bool:
        return is_identity(self.matrix)

    def power(self, k: int) -> "GroupElement":
        if k < 0:
            return self.inverse().power(-k)
        n = len(self.matrix)
        out = GroupElement((), identity_matrix(n), identity_matrix(n))
        for _ in range(k):
            out = out * self
        return out

    def word_text(self) -> str:
        return " ".join(self.word) if self.word else "1"


def generator(name: str, matrix: Matrix) -> GroupElement:
    """A one-letter element; the matrix must be an involution."""
    return GroupElement((name,), matrix, matrix)


def identity_element(graph: CoxeterGraph) -> GroupElement:
    m = identity_matrix(len(graph))
    return GroupElement((), m, m)


def simple_reflection_matrix(graph: CoxeterGraph, s: int) -> GroupElement:
    """The canonical reflection σ_s as a group element."""
    return generator(letter(s), _reflection_matrix(graph, graph.position(s)))


def word_element(graph: CoxeterGraph, word: Iterable[int]) -> GroupElement:
    """Product of simple reflections, e.g. ``word_element(g, [2, 0])``."""
    out = identity_element(graph)
    for s in word:
        out = out * simple_reflection_matrix(graph, s)
    return out


def preserves_form(graph: CoxeterGraph, w: GroupElement) -> bool:
    n = len(graph)
    f = _form(graph)
    cols = [w(unit(n, i)) for i in range(n)]
    return all(
        bilinear(f, cols[i], cols[j]) == f.entries[i][j] for i in range(n) for j in range(i, n)
    )


# -- roots ----------------------------------------------------------------


@dataclass(frozen=True)
class Root:
    coords: Vector
    depth: int | None = field(default=None, compare=False)

    @property
    def sign(self) -> int:
        s = vector_sign(self.coords)
        if s is None:
            raise InvariantViolation("mixed-sign root")
        return s

    def is_positive(self) -> bool:
        return self.sign > 0

    def __neg__(self):
        return Root(vec_neg(self.coords), self.depth)


@dataclass
class RootSet:
    """Positive roots found by BFS, with a parent pointer per root.

    ``parents[i]`` is ``(j, s)`` meaning root i = σ_s(root j), or
    ``(None, s)`` for the simple root α_s.
    """

    graph: CoxeterGraph
    roots: tuple[Root, ...]
    depth_reached: int
    complete: bool
    parents: tuple[tuple[int | None, int], ...] = field(repr=False, default=())
    index: dict = field(repr=False, default=None)

    def __post_init__(self):
        if self.index is None:
            self.index = {r.coords: i for i, r in enumerate(self.roots)}

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, x) -> bool:
        key = x.coords if isinstance(x, Root) else tuple(x)
        return key in self.index

    def find(self, x) -> int | None:
        key = x.coords if isinstance(x, Root) else tuple(x)
        return self.index.get(key)

    def vectors(self) -> list[Vector]:
        return [r.coords for r in self.roots]

    def witness(self, x) -> tuple[tuple[int, ...], int]:
        """A pair (word, s) with root = word(α_s), from the BFS parents."""
        i = self.find(x)
        if i is None:
            raise KeyError("root not in the enumerated set")
        word = []
        while True:
            j, s = self.parents[i]
            if j is None:
                return tuple(word), s
            word.append(s)
            i = j

    def all_witnesses(self, x, limit: int = 8) -> list[tuple[tuple[int, ...], int]]:
        """Up to ``limit`` distinct depth-decreasing witnesses for a root."""
        i = self.find(x)
        if i is None:
            raise KeyError("root not in the enumerated set")
        g = self.graph
        out: list = []

        def walk(k: int, word: list[int]):
            if len(out) >= limit:
                return
            r = self.roots[k]
            if r.depth == 0:
                out.append((tuple(word), self.parents[k][1]))
                return
            for p, s in enumerate(g.vertices):
                y = reflect(g, p, r.coords)
                j = self.index.get(y)
                if j is not None and self.roots[j].depth < r.depth:
                    walk(j, word + [s])
                    if len(out) >= limit:
                        return

        walk(i, [])
        return out

    def sorted_roots(self) -> list[Root]:
        return sorted(self.roots, key=lambda r: (r.depth, vector_key(r.coords)))


def _bfs(graph: CoxeterGraph, starts: Sequence[tuple[Vector, object]],
         step: Callable[[object, Vector], Vector], letters: Sequence,
         max_depth: int, max_roots: int, positive_only: bool = True):
    """Layered BFS from ``starts`` under the generator action ``step``.

    Returns (vectors, depths, parents, complete).  With ``positive_only``
    non-positive images are dropped.
    """
    vecs: list[Vector] = []
    depths: list[int] = []
    parents: list = []
    index: dict = {}
    for v, tag in starts:
        if v in index:
            continue
        index[v] = len(vecs)
        vecs.append(v)
        depths.append(0)
        parents.append((None, tag))
    layer = list(range(len(vecs)))
    d = 0
    complete = False
    while True:
        fresh: list[tuple[Vector, int, object]] = []
        pending: set = set()
        for i in layer:
            x = vecs[i]
            for a in letters:
                y = step(a, x)
                if y in index or y in pending:
                    continue
                if positive_only:
                    sg = vector_sign(y)
                    if sg is None:
                        raise InvariantViolation("a reflection produced a mixed-sign vector")
                    if sg <= 0:
                        continue
                pending.add(y)
                fresh.append((y, i, a))
        if not fresh:
            complete = True
            break
        if d + 1 > max_depth:
            break
        if len(vecs) + len(fresh) > max_roots:
            raise RootCapExceeded(f"more than {max_roots} roots")
        layer = []
        for y, i, a in fresh:
            index[y] = len(vecs)
            layer.append(len(vecs))
            vecs.append(y)
            depths.append(d + 1)
            parents.append((i, a))
        d += 1
    return vecs, depths, parents, complete, index


def enumerate_positive_roots(graph: CoxeterGraph, max_depth: int = 12,
                             max_roots: int = DEFAULT_ROOT_CAP) -> RootSet:
    """Positive roots w(α_s) up to BFS depth ``max_depth``.

    ``complete`` is true when one more expansion of the last layer adds
    nothing, so every positive root has been found.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    _form(graph)  # rejects unsupported labels early
    n = len(graph)
    starts = [(unit(n, i), s) for i, s in enumerate(graph.vertices)]
    pos = {s: i for i, s in enumerate(graph.vertices)}
    vecs, depths, parents, complete, index = _bfs(
        graph, starts, lambda s, x: reflect(graph, pos[s], x), graph.vertices,
        max_depth, max_roots)
    roots = tuple(Root(v, d) for v, d in zip(vecs, depths))
    reached = max(depths) if depths else 0
    return RootSet(graph, roots, reached, complete, tuple(parents), index)


def reflection_of(rootset: RootSet, root, witness: tuple[tuple[int, ...], int] | None = None) -> GroupElement:
    """ϖ(root) = w s w⁻¹ for a witness root = w(α_s)."""
    if rootset.find(root) is None:
        raise KeyError("root not in the enumerated set")
    word, s = witness if witness is not None else rootset.witness(root)
    full = tuple(word) + (s,) + tuple(reversed(word))
    return word_element(rootset.graph, full)


def restrict_to_subset(rootset: RootSet, X: Iterable[int]) -> RootSet:
    """Roots supported inside X; keeps the original depths."""
    g = rootset.graph
    keep = {g.position(s) for s in X}
    chosen = [r for r in rootset.roots if all(i in keep for i, a in enumerate(r.coords) if a)]
    parents = []
    idx = {r.coords: k for k, r in enumerate(chosen)}
    for r in chosen:
        i = rootset.find(r)
        j, s = rootset.parents[i]
        if j is None:
            parents.append((None, s))
        else:
            pj = rootset.roots[j].coords
            parents.append((idx.get(pj), s) if pj in idx else (None, s))
    reached = max((r.depth for r in chosen), default=0)
    return RootSet(g, tuple(chosen), reached, rootset.complete, tuple(parents), idx)


def act(w: GroupElement, root: Root | Vector, graph: CoxeterGraph | None = None) -> Root:
    """w(root), re-signed; mixed signs are an invariant violation."""
    x = root.coords if isinstance(root, Root) else tuple(root)
    y = w(x)
    if vector_sign(y) is None:
        raise InvariantViolation("image has mixed signs")
    if graph is not None and pairing(graph, y, y) != pairing(graph, x, x):
        raise InvariantViolation("image changed the norm")
    return Root(y)
