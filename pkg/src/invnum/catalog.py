"""Generators for the named tournaments, gadgets and graph operations.

Catalog graphs are built from their defining formulas (inversions of
transitive tournaments, augmentation chains) rather than hard-coded arc
lists; regression tests pin the resulting arc lists.  User-facing labels
follow the 1-based v1..vn convention; indices are 0-based internally.
"""

from __future__ import annotations

from typing import Optional

from .digraph import InputError, OrientedGraph


def transitive(n: int) -> OrientedGraph:
    """Transitive tournament TT_n: arcs v_i -> v_j for i < j."""
    if n < 0:
        raise InputError("order must be non-negative")
    arcs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return OrientedGraph(n, arcs, labels=[f"v{i + 1}" for i in range(n)])


def directed_cycle(k: int) -> OrientedGraph:
    """Directed cycle on k >= 3 vertices."""
    if k < 3:
        raise InputError("a directed cycle needs at least 3 vertices")
    arcs = [(i, (i + 1) % k) for i in range(k)]
    return OrientedGraph(k, arcs, labels=[f"v{i + 1}" for i in range(k)])


def dijoin(L: OrientedGraph, R: OrientedGraph) -> OrientedGraph:
    """Disjoint union of L and R plus every arc from V(L) to V(R)."""
    n = L.n + R.n
    arcs = list(L.arcs())
    arcs += [(u + L.n, v + L.n) for u, v in R.arcs()]
    arcs += [(u, v + L.n) for u in range(L.n) for v in range(R.n)]
    labels = None
    if L.labels is not None and R.labels is not None:
        labels = [f"L.{s}" for s in L.labels] + [f"R.{s}" for s in R.labels]
    return OrientedGraph(n, arcs, labels=labels)


def lex_product(D: OrientedGraph, H: OrientedGraph) -> OrientedGraph:
    """Lexicographic product D[H]: blow up each vertex of D by a copy of H.

    Vertex (a, x) gets index a*|V(H)| + x.
    """
    h = H.n
    n = D.n * h
    arcs = []
    for a, b in D.arcs():
        arcs += [(a * h + x, b * h + y) for x in range(h) for y in range(h)]
    for a in range(D.n):
        arcs += [(a * h + x, a * h + y) for x, y in H.arcs()]
    return OrientedGraph(n, arcs)


def augment(D: OrientedGraph, z: int, suffix: str = "") -> OrientedGraph:
    """Add x, y with the 3-cycle z->y->x->z and all arcs {x, y} -> V(D)\\{z}.

    The new vertices are appended, x then y, labelled "x<suffix>" and
    "y<suffix>".
    """
    if z < 0 or z >= D.n:
        raise InputError(f"augmentation vertex {z} out of range")
    x, y = D.n, D.n + 1
    arcs = list(D.arcs())
    arcs += [(z, y), (y, x), (x, z)]
    for v in range(D.n):
        if v != z:
            arcs += [(x, v), (y, v)]
    labels = None
    if D.labels is not None:
        labels = list(D.labels) + [f"x{suffix}", f"y{suffix}"]
    return OrientedGraph(D.n + 2, arcs, labels=labels)


def q_tournament(n: int) -> OrientedGraph:
    """TT_n with the arcs of its directed hamiltonian path reversed.

    Arcs: v_{i+1} -> v_i for all i, and v_i -> v_j for j > i + 1.
    """
    if n < 1:
        raise InputError("order must be at least 1")
    arcs = [(i + 1, i) for i in range(n - 1)]
    arcs += [(i, j) for i in range(n) for j in range(i + 2, n)]
    return OrientedGraph(n, arcs, labels=[f"v{i + 1}" for i in range(n)])


def v_tournament(n: int) -> OrientedGraph:
    """TT_{n-1} plus a vertex x whose out-neighbours are the odd-index v_i.

    x is appended last (index n-1); it dominates v_1, v_3, ... and is
    dominated by v_2, v_4, ....
    """
    if n < 2:
        raise InputError("order must be at least 2")
    arcs = [(i, j) for i in range(n - 1) for j in range(i + 1, n - 1)]
    x = n - 1
    for i in range(n - 1):
        if (i + 1) % 2 == 1:
            arcs.append((x, i))
        else:
            arcs.append((i, x))
    labels = [f"v{i + 1}" for i in range(n - 1)] + ["x"]
    return OrientedGraph(n, arcs, labels=labels)


def abc_tournament(k: int) -> OrientedGraph:
    """Three transitive tournaments A, B, C of order k with A->B->C->A."""
    if k < 1:
        raise InputError("block order must be at least 1")
    n = 3 * k
    blocks = [range(0, k), range(k, 2 * k), range(2 * k, 3 * k)]
    arcs = []
    for blk in blocks:
        arcs += [(i, j) for i in blk for j in blk if i < j]
    for src, dst in ((0, 1), (1, 2), (2, 0)):
        arcs += [(i, j) for i in blocks[src] for j in blocks[dst]]
    labels = [f"{nm}{i + 1}" for nm, blk in zip("abc", blocks) for i in range(k)]
    return OrientedGraph(n, arcs, labels=labels)


def second_subdivision(D: OrientedGraph) -> OrientedGraph:
    """Replace each arc uv by a path u -> x_a -> y_a -> v with fresh vertices."""
    arcs = []
    nxt = D.n
    for u, v in D.arcs():
        xa, ya = nxt, nxt + 1
        nxt += 2
        arcs += [(u, xa), (xa, ya), (ya, v)]
    return OrientedGraph(nxt, arcs)


def subdivision_vertices(D: OrientedGraph) -> frozenset[int]:
    """The fresh vertices of second_subdivision(D); inverting them decycles it."""
    return frozenset(range(D.n, D.n + 2 * D.m))


def _j_gadget() -> OrientedGraph:
    labels = ["a", "b", "c", "d", "e"]
    ix = {s: i for i, s in enumerate(labels)}
    arcs = [("a", "b"), ("b", "c"), ("c", "e"), ("e", "b"),
            ("d", "a"), ("b", "d"), ("e", "d"), ("c", "a")]
    return OrientedGraph(5, [(ix[u], ix[v]) for u, v in arcs], labels=labels)


def _d7() -> OrientedGraph:
    # hexagon y1..y6, hub y, long chords, alternating hub arcs
    labels = [f"y{i}" for i in range(1, 7)] + ["y"]
    ix = {s: i for i, s in enumerate(labels)}
    named = [("y1", "y2"), ("y2", "y3"), ("y3", "y4"),
             ("y4", "y5"), ("y5", "y6"), ("y6", "y1"),
             ("y4", "y1"), ("y2", "y5"), ("y6", "y3"),
             ("y1", "y"), ("y", "y2"), ("y3", "y"),
             ("y", "y4"), ("y5", "y"), ("y", "y6")]
    return OrientedGraph(7, [(ix[u], ix[v]) for u, v in named], labels=labels)


def _c3_abc() -> OrientedGraph:
    return OrientedGraph(3, [(0, 1), (1, 2), (2, 0)], labels=["a", "b", "c"])


def h1() -> OrientedGraph:
    """Single augmentation of the 3-cycle (a,b,c) at a; adds x1, y1."""
    return augment(_c3_abc(), 0, suffix="1")


def h2() -> OrientedGraph:
    """Double augmentation of the 3-cycle at a; adds x1, y1 then x2, y2."""
    return augment(h1(), 0, suffix="2")


def _inv_of_tt(n: int, families: list[list[int]]) -> OrientedGraph:
    g = transitive(n)
    return g.apply_family([[v - 1 for v in X] for X in families])


_FIXED = {
    "A6": lambda: _inv_of_tt(6, [[1, 3], [4, 6]]),
    "B6": lambda: _inv_of_tt(6, [[1, 4, 5], [2, 5, 6]]),
    "D5": lambda: _inv_of_tt(5, [[2, 4], [1, 5]]),
    "R5": lambda: _inv_of_tt(5, [[1, 3, 5], [2, 4]]),
    "V5": lambda: _inv_of_tt(5, [[1, 5], [3, 5]]),
    "J": _j_gadget,
    "D7": _d7,
    "H1": h1,
    "H2": h2,
}

_PARAMETRIC = {
    "TT": (transitive, 0),
    "C": (directed_cycle, 3),
    "Q": (q_tournament, 1),
    "V": (v_tournament, 2),
    "ABC": (abc_tournament, 1),
}

CATALOG_NAMES = sorted(_FIXED) + [f"{k} <n>" for k in sorted(_PARAMETRIC)]


def catalog(name: str, param: Optional[int] = None) -> OrientedGraph:
    """Build a named graph: fixed names (A6, B6, D5, R5, V5, J, D7, H1, H2)
    or parametric families (TT n, C k, Q n, V n, ABC k)."""
    key = name.upper()
    if key in _FIXED:
        if param is not None:
            raise InputError(f"{name} takes no parameter")
        return _FIXED[key]()
    if key in _PARAMETRIC:
        fn, low = _PARAMETRIC[key]
        if param is None:
            raise InputError(f"{name} needs an integer parameter")
        if param < low:
            raise InputError(f"{name} needs parameter >= {low}")
        return fn(param)
    # accept compact spellings like TT5, C3, Q7, V5 (V5 the critical tournament
    # wins over v_tournament(5); they coincide anyway)
    for prefix in sorted(_PARAMETRIC, key=len, reverse=True):
        if key.startswith(prefix) and key[len(prefix):].isdigit():
            return catalog(prefix, int(key[len(prefix):]))
    raise InputError(f"unknown catalog name {name!r}")
