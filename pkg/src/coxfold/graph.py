"""Coxeter graphs, graph symmetries, symmetry groups and vertex orbits.

Graphs are finite.  Infinite graphs only appear as truncation windows of
named families (see :mod:`coxfold.catalog`); vertices of a window whose
orbit under the untruncated group is infinite are declared on the group
through ``SymmetryGroup.infinite``.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

INF = math.inf
Label = Union[int, float]

DEFAULT_CLOSURE_CAP = 10**6


class GraphSpecError(ValueError):
    """Malformed graph-spec text; carries 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


class SymmetryError(ValueError):
    pass


class ClosureOverflow(RuntimeError):
    pass


def _key(s: int, t: int) -> tuple[int, int]:
    return (s, t) if s < t else (t, s)


def format_label(m: Label) -> str:
    return "inf" if m == INF else str(int(m))


@dataclass(frozen=True)
class CoxeterGraph:
    """A finite Coxeter graph.

    ``edges`` holds ``(s, t, m)`` with ``s < t`` and ``m >= 3``; absent
    pairs have label 2.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, Label], ...] = ()
    name: str | None = field(default=None, compare=False)
    _labels: dict = field(default=None, init=False, repr=False, compare=False)
    _adj: dict = field(default=None, init=False, repr=False, compare=False)
    _pos: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertices")
        labels: dict[tuple[int, int], Label] = {}
        vset = set(verts)
        for s, t, m in self.edges:
            if s not in vset or t not in vset:
                raise ValueError(f"edge {s}-{t} uses an unknown vertex")
            if s == t:
                raise ValueError(f"loop at {s}")
            if m != INF and (m != int(m) or m < 2):
                raise ValueError(f"label {m} on {s}-{t} is not in {{2,3,...,inf}}")
            k = _key(s, t)
            if k in labels and labels[k] != m:
                raise ValueError(f"conflicting labels on {s}-{t}")
            if m != 2:
                labels[k] = m if m == INF else int(m)
        edges = tuple(sorted((s, t, m) for (s, t), m in labels.items()))
        adj: dict[int, list[int]] = {v: [] for v in verts}
        for s, t, _ in edges:
            adj[s].append(t)
            adj[t].append(s)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_labels", labels)
        object.__setattr__(self, "_adj", {v: tuple(sorted(n)) for v, n in adj.items()})
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(verts)})

    @classmethod
    def from_labels(cls, vertices: Iterable[int], labels: Mapping[tuple[int, int], Label] | Iterable = (),
                    name: str | None = None) -> "CoxeterGraph":
        items = labels.items() if isinstance(labels, Mapping) else labels
        edges = []
        for item in items:
            if len(item) == 2:
                (s, t), m = item
            else:
                s, t, m = item
            edges.append((min(s, t), max(s, t), m))
        return cls(tuple(vertices), tuple(edges), name)

    def __len__(self):
        return len(self.vertices)

    def label(self, s: int, t: int) -> Label:
        if s == t:
            return 1
        return self._labels.get(_key(s, t), 2)

    def neighbors(self, s: int) -> tuple[int, ...]:
        return self._adj[s]

    def degree(self, s: int) -> int:
        return len(self._adj[s])

    def position(self, s: int) -> int:
        return self._pos[s]

    def has_vertex(self, s: int) -> bool:
        return s in self._pos

    def labels(self) -> dict[tuple[int, int], Label]:
        return dict(self._labels)

    def subgraph(self, subset: Iterable[int], name: str | None = None) -> "CoxeterGraph":
        keep = set(subset)
        verts = tuple(v for v in self.vertices if v in keep)
        edges = tuple(e for e in self.edges if e[0] in keep and e[1] in keep)
        return CoxeterGraph(verts, edges, name)

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of the connected components, sorted by least vertex."""
        seen: set[int] = set()
        out = []
        for v in sorted(self.vertices):
            if v in seen:
                continue
            comp = []
            todo = deque([v])
            seen.add(v)
            while todo:
                x = todo.popleft()
                comp.append(x)
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            out.append(tuple(sorted(comp)))
        return out

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and len(self.components()) == 1

    def distances_from(self, s: int) -> dict[int, int]:
        dist = {s: 0}
        todo = deque([s])
        while todo:
            x = todo.popleft()
            for y in self._adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    todo.append(y)
        return dist

    def is_simply_laced(self) -> bool:
        return all(m == 3 for _, _, m in self.edges)

    def display_name(self) -> str:
        return self.name or f"graph[{len(self.vertices)}]"


def disjoint_union(*graphs: CoxeterGraph, name: str | None = None) -> CoxeterGraph:
    verts: list[int] = []
    edges: list = []
    for g in graphs:
        verts.extend(g.vertices)
        edges.extend(g.edges)
    return CoxeterGraph(tuple(verts), tuple(edges), name)


# -- symmetries -----------------------------------------------------------


@dataclass(frozen=True)
class Symmetry:
    """A vertex permutation; identity on vertices not listed."""

    mapping: tuple[tuple[int, int], ...]
    name: str | None = field(default=None, compare=False)
    _map: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        d = {s: t for s, t in self.mapping if s != t}
        object.__setattr__(self, "mapping", tuple(sorted(d.items())))
        object.__setattr__(self, "_map", d)

    @classmethod
    def from_dict(cls, d: Mapping[int, int], name: str | None = None) -> "Symmetry":
        return cls(tuple(d.items()), name)

    @classmethod
    def identity(cls) -> "Symmetry":
        return cls(())

    def __call__(self, s: int) -> int:
        return self._map.get(s, s)

    def __mul__(self, other: "Symmetry") -> "Symmetry":
        """Composition: ``(g * h)(s) == g(h(s))``."""
        support = set(self._map) | set(other._map)
        return Symmetry(tuple((s, self(other(s))) for s in support))

    def inverse(self) -> "Symmetry":
        return Symmetry(tuple((t, s) for s, t in self.mapping))

    def is_identity(self) -> bool:
        return not self._map

    def support(self) -> frozenset[int]:
        return frozenset(self._map)

    def image(self, subset: Iterable[int]) -> frozenset[int]:
        return frozenset(self(s) for s in subset)

    def restrict(self, subset: Iterable[int]) -> "Symmetry":
        keep = set(subset)
        return Symmetry(tuple((s, t) for s, t in self.mapping if s in keep), self.name)

    def order(self) -> int:
        k, g = 1, self
        while not g.is_identity():
            g = g * self
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for s in sorted(self._map):
            if s in seen:
                continue
            cyc = [s]
            seen.add(s)
            t = self(s)
            while t != s:
                cyc.append(t)
                seen.add(t)
                t = self(t)
            out.append(tuple(cyc))
        return out

    def __str__(self):
        if self.is_identity():
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


def validate_symmetry(graph: CoxeterGraph, perm: Mapping[int, int] | Symmetry,
                      name: str | None = None) -> Symmetry:
    """Check that ``perm`` is a label-preserving bijection of the vertices."""
    if isinstance(perm, Symmetry):
        name = name or perm.name
        perm = dict(perm.mapping)
    d = dict(perm)
    for s, t in d.items():
        if not graph.has_vertex(s) or not graph.has_vertex(t):
            raise SymmetryError(f"{s}->{t} leaves the vertex set")
    full = {v: d.get(v, v) for v in graph.vertices}
    if len(set(full.values())) != len(full):
        raise SymmetryError("not a bijection on the vertex set")
    verts = graph.vertices
    for i, s in enumerate(verts):
        for t in verts[i + 1:]:
            if graph.label(full[s], full[t]) != graph.label(s, t):
                raise SymmetryError(
                    f"label violation at pair ({s},{t}): "
                    f"m({s},{t})={format_label(graph.label(s, t))} but "
                    f"m({full[s]},{full[t]})={format_label(graph.label(full[s], full[t]))}"
                )
    return Symmetry(tuple(full.items()), name)


@dataclass(frozen=True)
class SymmetryGroup:
    """A finite group of symmetries with its elements precomputed.

    ``elements`` starts with the identity and follows breadth-first
    order over ``generators``.  ``infinite`` lists window vertices whose
    orbit under the ambient, untruncated action is infinite.
    """

    graph: CoxeterGraph
    generators: tuple[Symmetry, ...]
    elements: tuple[Symmetry, ...]
    infinite: frozenset[int] = frozenset()

    def __len__(self):
        return len(self.elements)

    def order(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def nontrivial(self) -> tuple[Symmetry, ...]:
        return self.elements[1:]

    def act_on_set(self, subset: Iterable[int]) -> set[frozenset[int]]:
        base = frozenset(subset)
        return {g.image(base) for g in self.elements}


def group_closure(graph: CoxeterGraph, generators: Sequence[Symmetry] = (),
                  cap: int = DEFAULT_CLOSURE_CAP,
                  infinite: Iterable[int] = ()) -> SymmetryGroup:
    """Breadth-first closure of ``generators``; deterministic element order."""
    gens = tuple(validate_symmetry(graph, g) for g in generators)
    inf = frozenset(infinite)
    for g in gens:
        if g.image(inf) != inf:
            raise SymmetryError("a generator moves the declared infinite-orbit vertices")
    ident = Symmetry.identity()
    seen = {ident}
    elems = [ident]
    todo = deque([ident])
    while todo:
        x = todo.popleft()
        for g in gens:
            y = g * x
            if y not in seen:
                if len(seen) >= cap:
                    raise ClosureOverflow(f"group closure exceeds cap {cap}")
                seen.add(y)
                elems.append(y)
                todo.append(y)
    return SymmetryGroup(graph, gens, tuple(elems), inf)


def trivial_group(graph: CoxeterGraph) -> SymmetryGroup:
    return group_closure(graph, ())


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[frozenset[int], ...]
    finite: tuple[bool, ...]
    index: dict = field(compare=False)

    def finite_orbits(self) -> list[frozenset[int]]:
        return [o for o, f in zip(self.orbits, self.finite) if f]

    def orbit_of(self, s: int) -> frozenset[int]:
        return self.orbits[self.index[s]]


def vertex_orbits(G: SymmetryGroup) -> OrbitPartition:
    """Orbits of the vertices, sorted by least member.

    Declared infinite-orbit vertices are grouped into one trailing block
    flagged as not finite.
    """
    parent = {v: v for v in G.graph.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for g in G.generators:
        for s, t in g.mapping:
            a, b = find(s), find(t)
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: dict[int, set[int]] = {}
    for v in G.graph.vertices:
        if v in G.infinite:
            continue
        blocks.setdefault(find(v), set()).add(v)
    orbits = sorted((frozenset(b) for b in blocks.values()), key=min)
    finite = [True] * len(orbits)
    if G.infinite:
        orbits.append(frozenset(G.infinite))
        finite.append(False)
    index = {v: i for i, o in enumerate(orbits) for v in o}
    return OrbitPartition(tuple(orbits), tuple(finite), index)


def restrict_group(G: SymmetryGroup, graph: CoxeterGraph, elements: Iterable[Symmetry] | None = None,
                   infinite: Iterable[int] = ()) -> SymmetryGroup:
    """The group induced on ``graph`` (a full subgraph stable under ``elements``)."""
    verts = set(graph.vertices)
    pool = G.elements if elements is None else tuple(elements)
    gens = []
    seen = set()
    for g in pool:
        r = g.restrict(verts)
        if not r.is_identity() and r not in seen:
            seen.add(r)
            gens.append(r)
    # a small generating set: keep only elements not already generated
    minimal: list[Symmetry] = []
    covered = {Symmetry.identity()}
    for g in gens:
        if g in covered:
            continue
        minimal.append(g)
        covered = set(group_closure(graph, minimal, infinite=infinite).elements)
    return group_closure(graph, minimal, infinite=infinite)


def restrict_to_finite_orbits(graph: CoxeterGraph, G: SymmetryGroup) -> tuple[CoxeterGraph, SymmetryGroup]:
    """The full subgraph on the finite orbits with the induced group."""
    if not G.infinite:
        return graph, G
    keep = [v for v in graph.vertices if v not in G.infinite]
    sub = graph.subgraph(keep, graph.name)
    return sub, restrict_group(G, sub)


def connected_components(graph: CoxeterGraph, G: SymmetryGroup) -> list[tuple[CoxeterGraph, SymmetryGroup]]:
    """Components with the groups induced by their stabilizers in G."""
    out = []
    comps = graph.components()
    for comp in comps:
        cset = frozenset(comp)
        sub = graph.subgraph(comp, graph.name if len(comps) == 1 else None)
        stab = [g for g in G.elements if g.image(cset) == cset]
        out.append((sub, restrict_group(G, sub, stab, infinite=G.infinite & cset)))
    return out


# -- graph-spec text format ---------------------------------------------

_INT = r"-?\d+"
_RE_VERTICES = re.compile(r"^vertices\s+(.+)$")
_RE_RANGE = re.compile(rf"^({_INT})\s*\.\.\s*({_INT})$")
_RE_EDGE = re.compile(rf"^edge\s+({_INT})\s*-\s*({_INT})(?:\s+label\s+(\S+))?$")
_RE_SYM = re.compile(r"^symmetry\s+([A-Za-z_][\w']*)\s*:\s*(.*)$")
_RE_GROUP = re.compile(r"^group\s*:\s*(.*)$")
_RE_NAME = re.compile(r"^name\s+(.+)$")
_RE_INFINITE = re.compile(r"^infinite\s+(.+)$")
_RE_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass
class GraphSpec:
    graph: CoxeterGraph
    symmetries: dict[str, Symmetry]
    group: tuple[str, ...]
    infinite: tuple[int, ...] = ()

    def closure(self, cap: int = DEFAULT_CLOSURE_CAP) -> SymmetryGroup:
        gens = [self.symmetries[n] for n in self.group]
        return group_closure(self.graph, gens, cap, self.infinite)


def _statements(text: str):
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        col = 0
        for piece in line.split(";"):
            stripped = piece.strip()
            if stripped:
                yield ln, col + (len(piece) - len(piece.lstrip())) + 1, stripped
            col += len(piece) + 1


def _parse_label(tok: str, ln: int, col: int) -> Label:
    if tok in ("inf", "infinity", "∞"):
        return INF
    try:
        m = int(tok)
    except ValueError:
        raise GraphSpecError(f"bad label {tok!r}", ln, col) from None
    if m < 2:
        raise GraphSpecError(f"label {m} < 2", ln, col)
    return m


def _parse_vertex_list(body: str, ln: int, col: int) -> list[int]:
    out: list[int] = []
    for chunk in body.replace(" ", ",").split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        mr = _RE_RANGE.match(chunk)
        if mr:
            a, b = int(mr.group(1)), int(mr.group(2))
            if b < a:
                raise GraphSpecError(f"empty range {chunk}", ln, col)
            out.extend(range(a, b + 1))
        elif re.fullmatch(_INT, chunk):
            out.append(int(chunk))
        else:
            raise GraphSpecError(f"bad vertex {chunk!r}", ln, col)
    return out


def parse_spec(text: str) -> GraphSpec:
    """Parse the line-oriented graph-spec format.

    Statements are separated by newlines or ``;``; ``#`` starts a comment::

        vertices 1..3; edge 1-2; edge 2-3 label 4
        symmetry g: (1 3)
        group: g
    """
    vertices: list[int] | None = None
    labels: dict[tuple[int, int], tuple[Label, int, int]] = {}
    raw_syms: list[tuple[str, str, int, int]] = []
    group: tuple[str, ...] = ()
    infinite: list[int] = []
    inf_at = (0, 0)
    name = None
    for ln, col, st in _statements(text):
        if m := _RE_VERTICES.match(st):
            if vertices is not None:
                raise GraphSpecError("vertices declared twice", ln, col)
            vertices = _parse_vertex_list(m.group(1), ln, col)
            if len(set(vertices)) != len(vertices):
                raise GraphSpecError("duplicate vertex", ln, col)
        elif m := _RE_EDGE.match(st):
            if vertices is None:
                raise GraphSpecError("edge before vertices", ln, col)
            s, t = int(m.group(1)), int(m.group(2))
            for v in (s, t):
                if v not in vertices:
                    raise GraphSpecError(f"unknown vertex {v}", ln, col)
            if s == t:
                raise GraphSpecError(f"loop at {s}", ln, col)
            lab = _parse_label(m.group(3), ln, col) if m.group(3) else 3
            k = _key(s, t)
            if k in labels and labels[k][0] != lab:
                pl, pc = labels[k][1], labels[k][2]
                raise GraphSpecError(
                    f"asymmetric label declaration for {s}-{t}: "
                    f"{format_label(lab)} here, {format_label(labels[k][0])} at line {pl}, column {pc}",
                    ln, col)
            labels[k] = (lab, ln, col)
        elif m := _RE_SYM.match(st):
            raw_syms.append((m.group(1), m.group(2), ln, col))
        elif m := _RE_GROUP.match(st):
            group = tuple(x for x in re.split(r"[\s,]+", m.group(1).strip()) if x)
        elif m := _RE_NAME.match(st):
            name = m.group(1).strip()
        elif m := _RE_INFINITE.match(st):
            infinite.extend(_parse_vertex_list(m.group(1), ln, col))
            inf_at = (ln, col)
        else:
            raise GraphSpecError(f"cannot parse {st!r}", ln, col)
    if vertices is None:
        raise GraphSpecError("no vertices declared", 1, 1)
    graph = CoxeterGraph.from_labels(vertices, {k: v[0] for k, v in labels.items()}, name)
    syms: dict[str, Symmetry] = {}
    for sname, body, ln, col in raw_syms:
        perm: dict[int, int] = {}
        rest = _RE_CYCLE.sub("", body).strip()
        if rest:
            raise GraphSpecError(f"bad cycle notation {body!r}", ln, col)
        for cyc in _RE_CYCLE.findall(body):
            pts = [int(x) for x in re.split(r"[\s,]+", cyc.strip()) if x]
            for i, p in enumerate(pts):
                if p not in graph._pos:
                    raise GraphSpecError(f"unknown vertex {p}", ln, col)
                if p in perm:
                    raise GraphSpecError(f"vertex {p} repeated in cycles", ln, col)
                perm[p] = pts[(i + 1) % len(pts)]
        try:
            syms[sname] = validate_symmetry(graph, perm, sname)
        except SymmetryError as e:
            raise GraphSpecError(f"symmetry {sname}: {e}", ln, col) from None
    for gname in group:
        if gname not in syms:
            raise GraphSpecError(f"group uses undeclared symmetry {gname!r}", 0, 0)
    for v in infinite:
        if v not in graph._pos:
            raise GraphSpecError(f"unknown vertex {v} in infinite declaration", *inf_at)
    return GraphSpec(graph, syms, group, tuple(sorted(set(infinite))))


def parse_graph(text: str) -> CoxeterGraph:
    return parse_spec(text).graph


def parse_pair(text: str, cap: int = DEFAULT_CLOSURE_CAP) -> tuple[CoxeterGraph, SymmetryGroup]:
    spec = parse_spec(text)
    return spec.graph, spec.closure(cap)


def format_spec(graph: CoxeterGraph, symmetries: Mapping[str, Symmetry] = (), group: Sequence[str] = (),
                infinite: Sequence[int] = ()) -> str:
    lines = [f"vertices {', '.join(map(str, graph.vertices))}"]
    if graph.name:
        lines.insert(0, f"name {graph.name}")
    for s, t, m in graph.edges:
        lines.append(f"edge {s}-{t}" + ("" if m == 3 else f" label {format_label(m)}"))
    for n, g in dict(symmetries).items():
        lines.append(f"symmetry {n}: {g}")
    if group:
        lines.append("group: " + ", ".join(group))
    if infinite:
        lines.append("infinite " + ", ".join(map(str, infinite)))
    return "\n".join(lines) + "\n"
