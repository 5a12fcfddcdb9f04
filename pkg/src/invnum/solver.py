"""Exact decision and optimisation of the inversion number.

The decision procedure assigns each vertex a k-bit label (bit i set iff the
vertex belongs to the i-th set of the family); an arc is reversed exactly
when the AND of its endpoint labels has odd popcount.  Labels are assigned
depth-first in a fixed vertex order, so arcs between labelled vertices are
final and the partially-inverted prefix can be kept acyclic incrementally
(transitive closure of the prefix, one bitmask per vertex).

Symmetry: the k set-coordinates are interchangeable, so the search only
admits labelings whose coordinate first-use positions increase — a label may
introduce new coordinates only as the next contiguous block.

A refutation (None) always means the pruned tree was explored exhaustively;
hitting the node budget or the deadline raises instead.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .cycleparams import (
    DEFAULT_TAU_ARC_MAX_N,
    DEFAULT_TAU_MAX_N,
    SizeLimitError,
    tau,
    tau_arc,
)
from .digraph import DecyclingFamily, InputError, OrientedGraph, bits, verify_family

DEFAULT_NODE_BUDGET = 50_000_000


class SearchTimeout(RuntimeError):
    """Deadline hit before the search finished; not a refutation."""


@dataclass(frozen=True)
class InvResult:
    """Outcome of an inversion-number computation up to k_max.

    inv is None when every family size up to k_max was refuted; family is a
    certified decycling family otherwise.  exhausted_below records that all
    smaller sizes were fully refuted (always true on normal return).
    """

    inv: Optional[int]
    k_max: int
    family: Optional[DecyclingFamily]
    exhausted_below: bool

    def to_json_dict(self) -> dict:
        return {
            "inv": self.inv,
            "k_max": self.k_max,
            "family": self.family.as_lists() if self.family is not None else None,
            "exhausted_below": self.exhausted_below,
        }


def triangle_counts(D: OrientedGraph) -> list[int]:
    """Directed triangles through each vertex."""
    tri = [0] * D.n
    for v in range(D.n):
        for u in bits(D.out_mask(v)):
            tri[v] += (D.out_mask(u) & D.in_mask(v)).bit_count()
    return tri


def search_order(D: OrientedGraph) -> list[int]:
    """Vertex order for the label search.

    Greedy max-adjacency-to-prefix with descending triangle count as the
    tie-break (and as the seed).  On tournaments every unplaced vertex ties
    on adjacency, so this reduces to plain triangle-count order; on sparse
    graphs it keeps each locally-constrained cluster contiguous, which the
    prefix-acyclicity pruning needs to bite early.
    """
    n = D.n
    tri = triangle_counts(D)
    placed_mask = 0
    order: list[int] = []
    remaining = set(range(n))
    while remaining:
        v = max(
            remaining,
            key=lambda u: (
                ((D.out_mask(u) | D.in_mask(u)) & placed_mask).bit_count(),
                tri[u],
                -u,
            ),
        )
        order.append(v)
        placed_mask |= 1 << v
        remaining.remove(v)
    return order


def _parity_flip_sources(k: int) -> list[list[int]]:
    """For each label L, the labels m with odd popcount of L & m."""
    size = 1 << k
    return [[m for m in range(size) if (L & m).bit_count() & 1] for L in range(size)]


class _LabelSearch:
    """Shared machinery for first-solution search and full enumeration."""

    def __init__(
        self,
        D: OrientedGraph,
        k: int,
        node_budget: int,
        deadline: Optional[float],
        symmetry: bool = True,
    ):
        self.D = D
        self.k = k
        self.order = search_order(D)
        self.node_budget = node_budget
        self.deadline = deadline
        self.symmetry = symmetry
        self.nodes = 0
        n = D.n
        pos = {v: i for i, v in enumerate(self.order)}
        # fwd[i]: positions j<i with an arc order[i]->order[j] in D; bwd the converse
        self.fwd = [0] * n
        self.bwd = [0] * n
        for u, v in D.arcs():
            i, j = pos[u], pos[v]
            if j < i:
                self.fwd[i] |= 1 << j
            else:
                self.bwd[j] |= 1 << i
        self.flip_sources = _parity_flip_sources(k)
        self.size = 1 << k

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise SizeLimitError(
                f"inversion search guard: explored {self.node_budget} nodes "
                f"(n={self.D.n}, k={self.k}); raise node_budget to continue"
            )
        if self.deadline is not None and self.nodes % 4096 == 0:
            if time.monotonic() > self.deadline:
                raise SearchTimeout(
                    f"inversion search timed out (n={self.D.n}, k={self.k})"
                )

    def run(self, find_all: bool) -> Iterator[list[int]]:
        n = self.D.n
        if n == 0:
            yield []
            return
        labels = [0] * n
        buckets = [0] * self.size  # positions currently holding each label value
        desc: list[int] = []  # transitive closure rows of the labelled prefix
        fwd, bwd = self.fwd, self.bwd
        flip_sources = self.flip_sources
        symmetry = self.symmetry

        def rec(i: int, used: int) -> Iterator[list[int]]:
            if i == n:
                yield labels.copy()
                return
            fw, bw = fwd[i], bwd[i]
            bit_i = 1 << i
            for L in range(self.size):
                if symmetry:
                    fresh = L >> used
                    if fresh & (fresh + 1):
                        continue  # new coordinates must be the next contiguous block
                self._tick()
                flipped = 0
                for m in flip_sources[L]:
                    flipped |= buckets[m]
                out_set = (fw & ~flipped) | (bw & flipped)
                in_set = (bw & ~flipped) | (fw & flipped)
                reach = out_set
                rest = out_set
                while rest:
                    low = rest & -rest
                    reach |= desc[low.bit_length() - 1]
                    rest ^= low
                if reach & in_set:
                    continue  # the final prefix already carries a cycle
                saved = desc.copy()
                for p in range(i):
                    if in_set >> p & 1 or desc[p] & in_set:
                        desc[p] |= reach | bit_i
                desc.append(reach)
                labels[i] = L
                buckets[L] |= bit_i
                yield from rec(i + 1, max(used, L.bit_length()))
                buckets[L] ^= bit_i
                desc.clear()
                desc.extend(saved)
            labels[i] = 0

        gen = rec(0, 0)
        if find_all:
            yield from gen
        else:
            for sol in gen:
                yield sol
                return


def _labels_to_family(D: OrientedGraph, order: list[int], labels: list[int], k: int) -> DecyclingFamily:
    sets = []
    for c in range(k):
        X = frozenset(order[i] for i in range(D.n) if labels[i] >> c & 1)
        if X:
            sets.append(X)
    return DecyclingFamily(tuple(sets))


def decide_inv_le_k(
    D: OrientedGraph,
    k: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    deadline: Optional[float] = None,
) -> Optional[DecyclingFamily]:
    """A certified family of at most k sets, or None after exhaustive refutation.

    Deterministic: the family decoded from the lexicographically smallest
    accepting labeling in the fixed search order.
    """
    if k < 0:
        raise InputError("family size k must be non-negative")
    if k == 0:
        return DecyclingFamily(()) if D.is_acyclic() else None
    search = _LabelSearch(D, k, node_budget, deadline)
    for labels in search.run(find_all=False):
        fam = _labels_to_family(D, search.order, labels, k)
        assert verify_family(D, fam)
        return fam
    return None


def enumerate_decycling_labelings(
    D: OrientedGraph,
    k: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    deadline: Optional[float] = None,
) -> Iterator[list[frozenset[int]]]:
    """All decycling families of k sets, one labeling per unordered family.

    Sets are yielded in coordinate order (possibly empty ones included) so
    callers can reason about the exact (X_1 ... X_k) tuple.
    """
    search = _LabelSearch(D, k, node_budget, deadline)
    for labels in search.run(find_all=True):
        yield [
            frozenset(search.order[i] for i in range(D.n) if labels[i] >> c & 1)
            for c in range(k)
        ]


def inversion_number(
    D: OrientedGraph,
    k_max: Optional[int] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    deadline: Optional[float] = None,
) -> InvResult:
    """Smallest certified family size up to k_max (default: vertex count)."""
    if k_max is None:
        k_max = max(D.n, 0)
    if k_max < 0:
        raise InputError("k_max must be non-negative")
    for k in range(k_max + 1):
        fam = decide_inv_le_k(D, k, node_budget=node_budget, deadline=deadline)
        if fam is not None:
            return InvResult(inv=k, k_max=k_max, family=fam, exhausted_below=True)
    return InvResult(inv=None, k_max=k_max, family=None, exhausted_below=True)


# -- bound-derived families --------------------------------------------------


def family_from_fas(
    D: OrientedGraph, max_n: int = DEFAULT_TAU_ARC_MAX_N
) -> DecyclingFamily:
    """One two-element set per arc of a minimum feedback arc set."""
    res = tau_arc(D, max_n=max_n)
    fam = DecyclingFamily.of([{u, v} for u, v in res.witness])
    assert verify_family(D, fam)
    return fam

def family_from_fvs(
    D: OrientedGraph, max_n: int = DEFAULT_TAU_MAX_N
) -> DecyclingFamily:
    """At most 2*tau(D) sets: for each transversal vertex in sequence, invert
    its closed then open out-neighbourhood in the current graph (previously
    processed vertices excluded), which turns the vertex into a quasi-sink."""
    res = tau(D, max_n=max_n)
    g = D
    sets: list[frozenset[int]] = []
    processed = 0
    for x in res.witness:
        outs = g.out_mask(x) & ~processed
        closed = frozenset(bits(outs)) | {x}
        open_ = frozenset(bits(outs))
        for X in (closed, open_):
            if len(X) >= 2:
                sets.append(X)
        g = g.invert(closed).invert(open_)
        processed |= 1 << x
    fam = DecyclingFamily(tuple(sets))
    assert len(fam) <= 2 * res.value
    assert verify_family(D, fam)
    return fam


# -- tournament extension ------------------------------------------------------


def extend_to_tournament(
    D: OrientedGraph, family: Iterable[Iterable[int]]
) -> OrientedGraph:
    """A tournament containing D for which the family still certifies.

    Each missing pair is oriented forward along the acyclic ordering of the
    inverted graph when the pair's co-membership count is even, backward when
    odd, so the family's net effect realigns every added arc.
    """
    sets = [frozenset(X) for X in family]
    d_star = D.apply_family(sets)
    order = d_star.acyclic_ordering()
    if order is None:
        raise InputError("family is not a certified decycling family of the graph")
    arcs = list(D.arcs())
    for a in range(D.n):
        for b in range(a + 1, D.n):
            vk, vl = order[a], order[b]
            if D.has_arc(vk, vl) or D.has_arc(vl, vk):
                continue
            co = sum(1 for X in sets if vk in X and vl in X)
            arcs.append((vk, vl) if co % 2 == 0 else (vl, vk))
    T = OrientedGraph(D.n, arcs, labels=D.labels)
    assert verify_family(T, sets)
    return T
