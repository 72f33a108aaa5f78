"""Independent oracles used by the tests (floating point or brute force)."""

import itertools
import math

import numpy as np


def reflection_count(graph) -> int:
    """Number of reflections in a finite Coxeter group.

    Closes the group generated by float reflection matrices and counts
    elements with eigenvalue -1 of multiplicity one (det -1, trace n-2).
    """
    n = len(graph)
    verts = graph.vertices
    B = np.empty((n, n))
    for i, s in enumerate(verts):
        for j, t in enumerate(verts):
            m = graph.label(s, t)
            B[i, j] = 2.0 if i == j else -2 * math.cos(math.pi / m)
    gens = []
    for i in range(n):
        r = np.eye(n)
        r[i, :] -= B[i, :]
        gens.append(r.T)  # x -> x - <x, a_i> a_i in column form
    key = lambda m: tuple(np.round(m, 6).ravel())
    seen = {key(np.eye(n)): np.eye(n)}
    todo = [np.eye(n)]
    while todo:
        x = todo.pop()
        for g in gens:
            y = g @ x
            k = key(y)
            if k not in seen:
                seen[k] = y
                todo.append(y)
                if len(seen) > 20000:
                    raise RuntimeError("group too large for the oracle")
    return sum(1 for m in seen.values()
               if abs(np.linalg.det(m) + 1) < 1e-6 and abs(np.trace(m) - (n - 2)) < 1e-6)


def transpositions(n: int) -> int:
    """Transpositions in S_{n+1}: the reflections of A_n."""
    return sum(1 for _ in itertools.combinations(range(n + 1), 2))


def lattice_root_count(graph, bound: int = 3) -> int:
    """Positive roots of a simply-laced spherical graph as lattice vectors.

    Counts nonnegative integer vectors x != 0 with x^T C x = 2, where C is
    the Cartan matrix, and coefficients up to ``bound``.
    """
    verts = graph.vertices
    n = len(verts)
    C = np.array([[2 if s == t else (-1 if graph.label(s, t) == 3 else 0) for t in verts] for s in verts])
    pts = np.array(list(itertools.product(range(bound + 1), repeat=n)))[1:]
    return int(np.sum(np.einsum("ij,jk,ik->i", pts, C, pts) == 2))
