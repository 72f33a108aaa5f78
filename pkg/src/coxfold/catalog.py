"""Named Coxeter graphs, their symmetries, recognition and pair classification.

Vertices follow Bourbaki numbering; the extra vertex of an affine graph
is 0.  Tokens look like ``E6``, ``tD4:g1g2`` or ``iAi@3:g``:

* a family and rank (``t`` prefix for affine graphs),
* an optional ``@n`` truncation size for the infinite families
  ``Ainf``, ``iAi`` and ``Dinf``,
* an optional ``:`` suffix naming the symmetries that generate G.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .graph import (INF, CoxeterGraph, Symmetry, SymmetryGroup, connected_components,
                    group_closure, restrict_to_finite_orbits)


class CatalogError(ValueError):
    pass


SPHERICAL = ("A", "B", "D", "E", "F", "G", "H", "I2")
AFFINE = ("tA", "tB", "tC", "tD", "tE", "tF", "tG")
LOCAL = ("Ainf", "iAi", "Dinf")

DEFAULT_TRUNCATION = {"Ainf": 6, "iAi": 3, "Dinf": 8}


def _path(vs, label=3):
    return [(a, b, label) for a, b in zip(vs, vs[1:])]


def _check_rank(family: str, n, low: int, high: int | None = None):
    if not isinstance(n, int) or n < low or (high is not None and n > high):
        span = f"{low}..{high}" if high is not None else f">= {low}"
        raise CatalogError(f"{family}{n}: rank must be {span}")


def build_graph(family: str, n) -> CoxeterGraph:
    """The catalog graph for a family and rank (or truncation size)."""
    if family == "A":
        _check_rank(family, n, 1)
        vs, es = list(range(1, n + 1)), _path(list(range(1, n + 1)))
    elif family in ("B", "C"):
        _check_rank(family, n, 2)
        vs = list(range(1, n + 1))
        es = _path(vs[:-1]) + [(n - 1, n, 4)]
        family = "B"
    elif family == "D":
        _check_rank(family, n, 4)
        vs = list(range(1, n + 1))
        es = _path(vs[:-1]) + [(n - 2, n, 3)]
    elif family == "E":
        _check_rank(family, n, 6, 8)
        vs = list(range(1, n + 1))
        es = _path([1] + list(range(3, n + 1))) + [(2, 4, 3)]
    elif family == "F":
        _check_rank(family, n, 4, 4)
        vs, es = [1, 2, 3, 4], [(1, 2, 3), (2, 3, 4), (3, 4, 3)]
    elif family == "G":
        _check_rank(family, n, 2, 2)
        vs, es = [1, 2], [(1, 2, 6)]
    elif family == "H":
        _check_rank(family, n, 3, 4)
        vs = list(range(1, n + 1))
        es = [(1, 2, 5)] + _path(vs[1:])
    elif family == "I2":
        if not isinstance(n, int) or n < 3:
            raise CatalogError("I2(p) needs p >= 3")
        vs, es = [1, 2], [(1, 2, n)]
    elif family == "tA":
        _check_rank(family, n, 1)
        if n == 1:
            vs, es = [0, 1], [(0, 1, INF)]
        else:
            vs = list(range(0, n + 1))
            es = _path(vs) + [(0, n, 3)]
    elif family == "tB":
        if n == 2:
            return build_graph("tC", 2)
        _check_rank(family, n, 3)
        vs = list(range(0, n + 1))
        es = _path(vs[1:-1]) + [(n - 1, n, 4), (0, 2, 3)]
    elif family == "tC":
        _check_rank(family, n, 2)
        vs = list(range(0, n + 1))
        es = [(0, 1, 4)] + _path(vs[1:-1]) + [(n - 1, n, 4)]
    elif family == "tD":
        _check_rank(family, n, 4)
        g = build_graph("D", n)
        vs, es = [0] + list(g.vertices), list(g.edges) + [(0, 2, 3)]
    elif family == "tE":
        _check_rank(family, n, 6, 8)
        g = build_graph("E", n)
        attach = {6: 2, 7: 1, 8: 8}[n]
        vs, es = [0] + list(g.vertices), list(g.edges) + [(0, attach, 3)]
    elif family == "tF":
        _check_rank(family, n, 4, 4)
        vs, es = [0, 1, 2, 3, 4], [(0, 1, 3), (1, 2, 3), (2, 3, 4), (3, 4, 3)]
    elif family == "tG":
        _check_rank(family, n, 2, 2)
        vs, es = [0, 1, 2], [(0, 2, 3), (1, 2, 6)]
    elif family == "Ainf":
        _check_rank(family, n, 1)
        vs, es = list(range(1, n + 1)), _path(list(range(1, n + 1)))
    elif family == "iAi":
        _check_rank(family, n, 1)
        vs = list(range(-n, n + 1))
        es = _path(vs)
    elif family == "Dinf":
        _check_rank(family, n, 4)
        vs = list(range(1, n + 1))
        es = [(1, 3, 3), (2, 3, 3)] + _path(vs[2:])
    else:
        raise CatalogError(f"unknown family {family!r}")
    return CoxeterGraph.from_labels(vs, es, type_name(family, n))


def type_name(family: str, n) -> str:
    if family == "C":
        family = "B"
    if family == "I2":
        return f"I2({n})"
    if family == "tC" and n == 2:
        return "tB2"
    if family in LOCAL:
        return family
    return f"{family}{n}"


# -- named symmetries -----------------------------------------------------


def _perm(d: dict) -> dict:
    return {k: v for k, v in d.items() if k != v}


def named_symmetries(family: str, n) -> dict[str, dict[int, int]]:
    """Symmetries (as vertex maps) available under each name."""
    out: dict[str, dict[int, int]] = {}
    if family == "A" and n >= 2:
        out["g"] = {i: n + 1 - i for i in range(1, n + 1)}
    elif family in ("B", "C") and n == 2:
        out["swap"] = {1: 2, 2: 1}
    elif family == "G":
        out["swap"] = {1: 2, 2: 1}
    elif family == "F":
        out["g"] = {1: 4, 2: 3, 3: 2, 4: 1}
    elif family == "I2":
        out["swap"] = {1: 2, 2: 1}
    elif family == "D":
        out["g"] = {n - 1: n, n: n - 1}
        if n == 4:
            out["g1"] = {1: 3, 3: 4, 4: 1}
            out["g2"] = {3: 4, 4: 3}
    elif family == "E" and n == 6:
        out["g"] = {1: 6, 6: 1, 3: 5, 5: 3}
    elif family == "tA":
        if n == 1:
            out["swap"] = {0: 1, 1: 0}
        else:
            k = n + 1
            out["g"] = {0: 0, **{i: k - i for i in range(1, k)}}
            out["h"] = {i: (2 - i) % k for i in range(k)}
            out["rot"] = {i: (i + 1) % k for i in range(k)}
    elif family == "tB" and n >= 3:
        out["swap"] = {0: 1, 1: 0}
    elif family == "tC" or (family == "tB" and n == 2):
        out["g"] = {i: n - i for i in range(n + 1)}
        out["swap"] = out["g"]
    elif family == "tD":
        out["g"] = {n - 1: n, n: n - 1}
        out["f"] = {0: 1, 1: 0, n - 1: n, n: n - 1}
        if n % 2 == 0:
            out["rev"] = {i: n - i for i in range(n + 1)}
        if n == 4:
            out["g1"] = {1: 3, 3: 4, 4: 1}
            out["g2"] = {3: 4, 4: 3}
            out["rot4"] = {0: 4, 1: 0, 2: 2, 3: 1, 4: 3}
    elif family == "tE":
        if n == 6:
            out["g"] = {1: 6, 6: 1, 3: 5, 5: 3}
            out["rot3"] = {0: 6, 1: 0, 2: 5, 3: 2, 4: 4, 5: 3, 6: 1}
        elif n == 7:
            out["g"] = {0: 7, 7: 0, 1: 6, 6: 1, 3: 5, 5: 3}
    elif family == "iAi":
        out["g"] = {i: -i for i in range(-n, n + 1)}
    elif family == "Dinf":
        out["g"] = {1: 2, 2: 1}
    return {k: _perm(v) for k, v in out.items()}


# -- tokens ---------------------------------------------------------------


_FAMILY_ALIASES = {
    "tilde-": "t", "tilde ": "t", "~": "t", "affine ": "t",
}
_LONG_INFINITE = [
    (re.compile(r"^d[-_ ]?inf(inity)?$", re.I), "Dinf"),
    (re.compile(r"^a[-_ ]?inf(inity)?$", re.I), "Ainf"),
    (re.compile(r"^(inf|infinity|∞)[-_ ]?a[-_ ]?(inf|infinity|∞)$", re.I), "iAi"),
]
_TOKEN = re.compile(r"^(t?)(I2|[A-H])\(?(\d+)\)?$")


@dataclass(frozen=True)
class CatalogEntry:
    """A catalog graph with its named symmetries and the chosen group."""

    token: str
    family: str
    rank: int | None
    graph: CoxeterGraph
    symmetries: dict = field(compare=False)
    chosen: tuple[str, ...] = ()
    truncation: int | None = None

    @property
    def infinite_family(self) -> bool:
        return self.family in LOCAL

    def group(self, cap: int = 10**6) -> SymmetryGroup:
        gens = [self.symmetries[n] for n in self.chosen]
        return group_closure(self.graph, gens, cap)


def _split_suffix(text: str) -> tuple[str, str]:
    if ":" in text:
        head, suf = text.split(":", 1)
        return head.strip(), suf.strip()
    return text.strip(), ""


def _normalize_head(head: str) -> tuple[str, int | None, int | None]:
    """Return (family, rank, truncation) for the part before ':'."""
    h = head.strip()
    trunc = None
    m = re.match(r"^(.*?)\s*(?:@|,\s*truncation\s*|\s+truncation\s+)(\d+)$", h, re.I)
    if m:
        h, trunc = m.group(1).strip(), int(m.group(2))
    for pat, fam in _LONG_INFINITE:
        if pat.match(h):
            return fam, None, trunc
    if h in LOCAL:
        return h, None, trunc
    low = h
    for k, v in _FAMILY_ALIASES.items():
        if low.lower().startswith(k):
            low = v + low[len(k):]
    low = low.replace(" ", "").replace("_", "")
    m = _TOKEN.match(low)
    if not m:
        raise CatalogError(f"unknown catalog name {head!r}")
    tilde, fam, num = m.groups()
    fam = tilde + fam
    if trunc is not None:
        raise CatalogError(f"{head!r}: truncation applies to Ainf, iAi and Dinf only")
    return fam, int(num), None


def _split_names(suffix: str, available: Iterable[str]) -> tuple[str, ...]:
    if not suffix:
        return ()
    avail = sorted(available, key=len, reverse=True)
    out: list[str] = []
    for chunk in re.split(r"[,\s]+", suffix):
        pos = 0
        while pos < len(chunk):
            for name in avail:
                if chunk.startswith(name, pos):
                    out.append(name)
                    pos += len(name)
                    break
            else:
                raise CatalogError(
                    f"unknown symmetry {chunk[pos:]!r}; available: {', '.join(sorted(available)) or 'none'}")
    return tuple(out)


def catalog_graph(token: str) -> CatalogEntry:
    """Resolve a catalog token into a graph, its named symmetries and chosen group."""
    head, suffix = _split_suffix(token)
    family, rank, trunc = _normalize_head(head)
    if family in LOCAL:
        size = trunc if trunc is not None else DEFAULT_TRUNCATION[family]
        graph = build_graph(family, size)
        syms_raw = named_symmetries(family, size)
        key_rank = None
    else:
        graph = build_graph(family, rank)
        syms_raw = named_symmetries(family, rank)
        key_rank = rank
        size = None
    syms = {k: Symmetry.from_dict(v, k) for k, v in syms_raw.items()}
    chosen = _split_names(suffix, syms)
    name = graph.name if family not in LOCAL else f"{family}@{size}"
    canon = name + (":" + ",".join(chosen) if chosen else "")
    return CatalogEntry(canon, family, key_rank, graph, syms, chosen, size)


def resolve_pair(token: str, cap: int = 10**6) -> tuple[CoxeterGraph, SymmetryGroup]:
    e = catalog_graph(token)
    return e.graph, e.group(cap)


def is_catalog_token(text: str) -> bool:
    try:
        catalog_graph(text)
        return True
    except CatalogError:
        return False


# -- highest roots and null vectors ---------------------------------------


def _highest_a(n: int) -> tuple[int, ...]:
    return (1,) * n


def _highest_d(n: int) -> tuple[int, ...]:
    return (1,) + (2,) * (n - 3) + (1, 1)


HIGHEST_ROOTS: dict[str, object] = {
    "A": _highest_a,
    "D": _highest_d,
    "E6": (1, 2, 2, 3, 2, 1),
    "E7": (2, 2, 3, 4, 3, 2, 1),
    "E8": (2, 3, 4, 6, 5, 4, 3, 2),
}


def highest_root_coeffs(name: str) -> dict[int, int]:
    """The greatest root of a finite simply-laced type, as ``{vertex: coeff}``."""
    m = re.fullmatch(r"([ADE])(\d+)", name)
    if not m:
        raise CatalogError(f"no highest root tabulated for {name!r}")
    fam, n = m.group(1), int(m.group(2))
    build_graph(fam, n)
    entry = HIGHEST_ROOTS.get(name) or HIGHEST_ROOTS.get(fam)
    if entry is None:
        raise CatalogError(f"no highest root tabulated for {name!r}")
    coeffs = entry(n) if callable(entry) else entry
    return {i + 1: c for i, c in enumerate(coeffs)}


def highest_root(name: str):
    from .roots import Root, vector_from

    g = build_graph(name[0], int(name[1:]))
    return Root(vector_from(g, highest_root_coeffs(name)))


def null_coeffs(affine: str) -> dict[int, int]:
    """δ = α_0 + β for the simply-laced affine graphs tA, tD, tE."""
    m = re.fullmatch(r"t([ADE])(\d+)", affine)
    if not m:
        raise CatalogError(f"no null vector tabulated for {affine!r}")
    fam, n = m.group(1), int(m.group(2))
    if fam == "A" and n == 1:
        return {0: 1, 1: 1}
    d = highest_root_coeffs(f"{fam}{n}")
    return {0: 1, **d}


AFFINE_WITH_DELTA = ("tA", "tD", "tE")


# -- recognition ----------------------------------------------------------


@dataclass(frozen=True)
class GraphType:
    family: str
    rank: object
    relabel: dict = field(default=None, compare=False)  # catalog vertex -> input vertex

    @property
    def name(self) -> str:
        if self.family == "unknown":
            return "unknown"
        return type_name(self.family, self.rank)

    @property
    def spherical(self) -> bool:
        return self.family in SPHERICAL

    @property
    def affine(self) -> bool:
        return self.family in AFFINE

    def __str__(self):
        return self.name


def find_isomorphism(pattern: CoxeterGraph, target: CoxeterGraph) -> dict[int, int] | None:
    """A label-preserving bijection pattern -> target, or None."""
    for iso in _isomorphisms(pattern, target):
        return iso
    return None


def _signature(g: CoxeterGraph, v: int):
    return tuple(sorted((g.label(v, u) for u in g.neighbors(v)), key=_label_key))


def _label_key(m):
    return float("inf") if m == INF else m


def _isomorphisms(pattern: CoxeterGraph, target: CoxeterGraph):
    if len(pattern) != len(target) or len(pattern.edges) != len(target.edges):
        return
    ps = sorted(_label_key(m) for *_, m in pattern.edges)
    ts = sorted(_label_key(m) for *_, m in target.edges)
    if ps != ts:
        return
    if not pattern.vertices:
        yield {}
        return
    sig_t: dict = {}
    for v in target.vertices:
        sig_t.setdefault(_signature(target, v), []).append(v)
    # BFS order from a vertex with the rarest signature
    sig_p = {v: _signature(pattern, v) for v in pattern.vertices}
    if any(s not in sig_t for s in sig_p.values()):
        return
    order: list[int] = []
    seen: set[int] = set()
    for comp in pattern.components():
        start = min(comp, key=lambda v: (len(sig_t[sig_p[v]]), v))
        queue = [start]
        seen.add(start)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in pattern.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    assign: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int):
        if k == len(order):
            yield dict(assign)
            return
        v = order[k]
        anchored = [u for u in pattern.neighbors(v) if u in assign]
        if anchored:
            pool = [w for w in target.neighbors(assign[anchored[0]]) if w not in used]
        else:
            pool = [w for w in sig_t[sig_p[v]] if w not in used]
        for w in pool:
            if _signature(target, w) != sig_p[v]:
                continue
            if all(pattern.label(v, u) == target.label(w, assign[u]) for u in assign):
                assign[v] = w
                used.add(w)
                yield from extend(k + 1)
                del assign[v]
                used.discard(w)

    yield from extend(0)


def automorphisms(graph: CoxeterGraph) -> list[dict[int, int]]:
    return list(_isomorphisms(graph, graph))


def _candidates(n: int, labels: set) -> list[tuple[str, int]]:
    out: list[tuple[str, int]] = []
    if n == 1:
        return [("A", 1)]
    if n == 2:
        (m,) = labels or {2}
        if m == 3:
            return [("A", 2)]
        if m == 4:
            return [("B", 2)]
        if m == 6:
            return [("G", 2)]
        if m == INF:
            return [("tA", 1)]
        if m == 2:
            return []
        return [("I2", int(m))]
    out.append(("A", n))
    out.append(("B", n))
    if n >= 4:
        out.append(("D", n))
    if 6 <= n <= 8:
        out.append(("E", n))
    if n == 4:
        out.append(("F", 4))
    if n in (3, 4):
        out.append(("H", n))
    r = n - 1
    if r >= 2:
        out.append(("tA", r))
        out.append(("tC", r))
    if r >= 3:
        out.append(("tB", r))
    if r >= 4:
        out.append(("tD", r))
    if 6 <= r <= 8:
        out.append(("tE", r))
    if r == 4:
        out.append(("tF", 4))
    if r == 2:
        out.append(("tG", 2))
    return out


_REC_CACHE: dict = {}


def recognize(graph: CoxeterGraph) -> GraphType:
    """Identify a connected graph with a spherical or affine catalog type.

    Candidates are narrowed by vertex count and edge labels, then matched
    by a degree- and label-guided isomorphism search that also yields the
    relabeling from catalog numbering to the input vertices.
    """
    if not graph.vertices:
        raise ValueError("empty graph")
    if not graph.is_connected():
        raise ValueError("recognize needs a connected graph")
    key = (graph.vertices, graph.edges)
    if key in _REC_CACHE:
        return _REC_CACHE[key]
    n = len(graph)
    labels = {m for *_, m in graph.edges}
    result = GraphType("unknown", None, None)
    for fam, r in _candidates(n, labels):
        if fam in ("A", "D", "E", "tA", "tD", "tE") and labels - {3} and not (fam == "tA" and r == 1):
            continue
        cat = build_graph(fam, r)
        iso = find_isomorphism(cat, graph)
        if iso is not None:
            result = GraphType(fam, r, iso)
            break
    _REC_CACHE[key] = result
    return result


def is_spherical(graph: CoxeterGraph) -> bool:
    """True iff every component is of spherical type (empty graph counts)."""
    for comp in graph.components():
        if len(comp) == 1:
            continue
        if not recognize(graph.subgraph(comp)).spherical:
            return False
    return True


def type_of(graph: CoxeterGraph) -> str:
    """Readable type of a possibly disconnected graph, e.g. ``A1xA1``."""
    if not graph.vertices:
        return "empty"
    parts = [recognize(graph.subgraph(c)).name for c in graph.components()]
    return "x".join(parts)


# -- classification of pairs ---------------------------------------------


@dataclass(frozen=True)
class ClassificationVerdict:
    """Whether a pair is, up to isomorphism, one of the listed positive pairs."""

    graph_type: str
    matches: str | None = None
    parameter: int | None = None
    folded_name: str | None = None
    reason: str | None = None
    predicts: bool = False

    def to_dict(self) -> dict:
        return {
            "graph_type": self.graph_type,
            "matches": self.matches,
            "parameter": self.parameter,
            "folded_name": self.folded_name,
            "reason": self.reason,
            "predicts_property": self.predicts,
        }


def _group_set(graph: CoxeterGraph, gens: list[dict]) -> frozenset:
    G = group_closure(graph, [Symmetry.from_dict(g) for g in gens])
    return frozenset(G.elements)


def listed_groups(family: str, n: int) -> list[tuple[str, int, str, list[frozenset]]]:
    """(row id, parameter, folded name, admissible groups) for a catalog graph."""
    g = build_graph(family, n)
    syms = named_symmetries(family, n)
    out = []
    if family == "A" and n % 2 == 1 and n >= 3:
        m = (n - 1) // 2
        out.append(("A-odd-flip", m, f"B{m + 1}", [_group_set(g, [syms["g"]])]))
    if family == "D":
        out.append(("D-end-swap", n, f"B{n - 1}", [_group_set(g, [syms["g"]])]))
        if n == 4:
            out.append(("D4-triality", 4, "G2", [_group_set(g, [syms["g1"]]),
                                         _group_set(g, [syms["g1"], syms["g2"]])]))
    if family == "E" and n == 6:
        out.append(("E6-flip", 6, "F4", [_group_set(g, [syms["g"]])]))
    if family == "tA" and n % 2 == 1 and n >= 3:
        m = (n - 1) // 2
        fold = "tB2" if m == 1 else f"tC{m + 1}"
        out.append(("tA-odd-flip", m, fold, [_group_set(g, [syms["g"]])]))
    if family == "tD":
        out.append(("tD-end-swap", n, f"tB{n - 1}", [_group_set(g, [syms["g"]])]))
        if n == 4:
            out.append(("tD4-triality", 4, "tG2", [_group_set(g, [syms["g1"]]),
                                          _group_set(g, [syms["g1"], syms["g2"]])]))
    if family == "tE" and n == 6:
        out.append(("tE6-flip", 6, "tF4", [_group_set(g, [syms["g"]])]))
    return out


def _conjugate(h: Symmetry, a: dict[int, int]) -> Symmetry:
    """a h a^-1 for a vertex map a."""
    return Symmetry(tuple((a[s], a[t]) for s, t in h.mapping))


def classify_pair(graph: CoxeterGraph, G: SymmetryGroup) -> ClassificationVerdict:
    """Decide by pattern whether a connected pair is a listed positive pair."""
    if G.infinite:
        graph, G = restrict_to_finite_orbits(graph, G)
    if not graph.is_connected():
        raise ValueError("classify_pair needs a connected graph; use classify")
    gt = recognize(graph)
    if G.is_trivial():
        return ClassificationVerdict(gt.name, reason="trivial group: every root is w(α_s) with w in W",
                                     predicts=True)
    if gt.family == "unknown":
        return ClassificationVerdict(gt.name, reason="graph is neither spherical nor affine of a listed type")
    if gt.family == "tE" and gt.rank == 7:
        return ClassificationVerdict(gt.name, reason="tE7 has no symmetry group with the property; "
                                     "a root α with <α, g(α)> = -2 refutes its involution")
    cases = listed_groups(gt.family, gt.rank)
    if not cases:
        return ClassificationVerdict(gt.name, reason=f"{gt.name} is not among the graphs admitting the property")
    inv = {v: k for k, v in gt.relabel.items()}
    # G transported to catalog numbering
    H = frozenset(Symmetry(tuple((inv[s], inv[t]) for s, t in g.mapping)) for g in G.elements)
    cat = build_graph(gt.family, gt.rank)
    autos = automorphisms(cat)
    for case, param, fold, groups in cases:
        for a in autos:
            conj = frozenset(_conjugate(h, a) for h in H)
            if conj in groups:
                return ClassificationVerdict(gt.name, case, param, fold, None, True)
    return ClassificationVerdict(gt.name, reason=f"G is not conjugate to a listed group for {gt.name}")


@dataclass(frozen=True)
class Classification:
    components: tuple[ClassificationVerdict, ...]

    @property
    def predicts(self) -> bool:
        return all(c.predicts for c in self.components)

    def to_dict(self) -> dict:
        return {"predicts_property": self.predicts,
                "components": [c.to_dict() for c in self.components]}


def classify(graph: CoxeterGraph, G: SymmetryGroup) -> Classification:
    """Classify after dropping infinite orbits and splitting components."""
    graph, G = restrict_to_finite_orbits(graph, G)
    return Classification(tuple(classify_pair(g, h) for g, h in connected_components(graph, G)))


def classify_entry(entry: CatalogEntry) -> Classification:
    """Classification of a catalog pair, including the infinite families."""
    if entry.family in ("iAi", "Dinf"):
        G = entry.group()
        if G.is_trivial():
            return Classification((ClassificationVerdict(entry.family, reason="trivial group", predicts=True),))
        case = "ix" if entry.family == "iAi" else "x"
        if entry.chosen == ("g",):
            return Classification((ClassificationVerdict(entry.family, case, None, None, None, True),))
        return Classification((ClassificationVerdict(entry.family, reason="not the listed involution"),))
    if entry.family == "Ainf":
        return Classification((ClassificationVerdict("Ainf", reason="trivial group", predicts=True),))
    return classify(entry.graph, entry.group())


# -- seed roots for the counterexample families -----------------------------


def counterexample_seed(family: str, n: int, name: str) -> dict[int, int] | None:
    """A root α with g(α) != α and <α, g(α)> != 0 for the known negative pairs."""
    if family == "tD" and name == "f":
        return {i: 1 for i in range(1, n)}
    if family == "tD" and name == "rev" and n % 2 == 0 and n >= 6:
        m = n // 2
        d = {0: 1, 1: 1, m: 1}
        d.update({i: 2 for i in range(2, m)})
        return d
    if family == "tD" and n == 4 and name == "rot4":
        return {0: 1, 2: 1, 3: 1}
    if family == "tE" and n == 6 and name == "rot3":
        return {0: 1, 2: 1, 4: 1, 5: 1}
    if family == "tE" and n == 7 and name == "g":
        return {1: 1, 2: 1, 3: 1, 4: 2, 5: 2, 6: 1, 7: 1}
    return None


def seeds_for(entry: CatalogEntry) -> list[dict[int, int]]:
    out = []
    if entry.rank is None:
        return out
    for name in entry.chosen:
        s = counterexample_seed(entry.family, entry.rank, name)
        if s is not None:
            out.append(s)
    return out


TOKEN_TABLE: list[tuple[str, str]] = [
    ("A<n>, B<n>, D<n>, E6..E8, F4, G2, H3, H4, I2(p)", "spherical graphs"),
    ("tA<n>, tB<n>, tC<n>, tD<n>, tE6..tE8, tF4, tG2", "affine graphs, extra vertex 0"),
    ("Ainf@n, iAi@n, Dinf@n", "truncation windows of the locally spherical graphs"),
]
