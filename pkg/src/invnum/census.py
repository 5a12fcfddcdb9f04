"""Small-order tournament census: canonical forms, inv(n), critical catalogs.

Canonical form is the minimal upper-triangle bit packing over all vertex
relabelings, computed by applying every permutation at once with numpy
(5040 at order 7 — brute force is cheap at this scale).  Bits are packed
column-major: all pairs (i, j) with the same j are adjacent, j ascending,
and the first pair holds the most significant bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .catalog import dijoin
from .cycleparams import ParamResult, SizeLimitError, nu, tau, tau_arc
from .digraph import InputError, OrientedGraph
from .solver import decide_inv_le_k, enumerate_decycling_labelings, inversion_number

CENSUS_MAX_ORDER = 7


@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


@lru_cache(maxsize=None)
def _pair_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(n) for i in range(j)]


@lru_cache(maxsize=None)
def _pair_gather(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Permutation-expanded row/column indices of the pair order plus bit weights."""
    pairs = _pair_order(n)
    total = len(pairs)
    perms = _perms(n)
    pi = np.array([p[0] for p in pairs], dtype=np.int64)
    pj = np.array([p[1] for p in pairs], dtype=np.int64)
    rows = perms[:, pi]  # (n!, total)
    cols = perms[:, pj]
    weights = 1 << np.arange(total - 1, -1, -1, dtype=np.int64)
    return rows, cols, weights


def _canonical_codes_batch(mats: np.ndarray) -> np.ndarray:
    """Minimal packed codes for a (B, n, n) stack of adjacency matrices."""
    n = mats.shape[1]
    if n <= 1:
        return np.zeros(mats.shape[0], dtype=np.int64)
    rows, cols, weights = _pair_gather(n)
    bits_arr = mats[:, rows, cols].astype(np.int64)  # (B, n!, pairs)
    codes = bits_arr @ weights  # (B, n!)
    return codes.min(axis=1)


@dataclass(frozen=True, order=True)
class CanonicalTournament:
    """One isomorphism class: order plus the minimal packed arc code."""

    n: int
    code: int

    def graph(self) -> OrientedGraph:
        pairs = _pair_order(self.n)
        total = len(pairs)
        arcs = []
        for rank, (i, j) in enumerate(pairs):
            if self.code >> (total - 1 - rank) & 1:
                arcs.append((i, j))
            else:
                arcs.append((j, i))
        return OrientedGraph(self.n, arcs)

    @property
    def hex(self) -> str:
        return format(self.code, "x")


def _adjacency_matrix(T: OrientedGraph) -> np.ndarray:
    mat = np.zeros((T.n, T.n), dtype=np.uint8)
    for u, v in T.arcs():
        mat[u, v] = 1
    return mat


def canonical_code(T: OrientedGraph) -> int:
    """Minimal packed code of T over all vertex relabelings."""
    if not T.is_tournament():
        raise InputError("canonical form is defined for tournaments")
    if T.n <= 1:
        return 0
    return int(_canonical_codes_batch(_adjacency_matrix(T)[None, :, :])[0])


def canonical_form(T: OrientedGraph) -> CanonicalTournament:
    return CanonicalTournament(T.n, canonical_code(T))


@lru_cache(maxsize=None)
def enumerate_tournaments(n: int) -> list[CanonicalTournament]:
    """Exactly one representative per isomorphism class of order n.

    Orderly generation: canonical classes of order k-1 are each extended by
    one vertex in all 2^(k-1) ways and re-canonicalized (vectorized over the
    batch of extensions).
    """
    if n > CENSUS_MAX_ORDER:
        raise SizeLimitError(
            f"census guard: order {n} exceeds limit {CENSUS_MAX_ORDER}"
        )
    if n < 1:
        raise InputError("order must be at least 1")
    reps = {0}  # the single tournament of order 1
    for k in range(2, n + 1):
        grown: set[int] = set()
        new = k - 1
        for code in reps:
            base = _adjacency_matrix(CanonicalTournament(new, code).graph())
            batch = np.zeros((1 << new, k, k), dtype=np.uint8)
            batch[:, :new, :new] = base
            for out_set in range(1 << new):
                for v in range(new):
                    if out_set >> v & 1:
                        batch[out_set, new, v] = 1
                    else:
                        batch[out_set, v, new] = 1
            grown.update(int(c) for c in _canonical_codes_batch(batch))
        reps = grown
    return [CanonicalTournament(n, code) for code in sorted(reps)]


@dataclass(frozen=True)
class CensusRecord:
    cls: CanonicalTournament
    inv: int
    tau: ParamResult
    tau_arc: ParamResult
    nu: ParamResult

    def line(self) -> str:
        return (
            f"{self.cls.hex} {self.inv} {self.tau.value} "
            f"{self.tau_arc.value} {self.nu.value}"
        )


def census_records(
    n: int, skip: Optional[set[str]] = None, deadline: Optional[float] = None
) -> Iterator[CensusRecord]:
    """Per-class inv / tau / tau_arc / nu sweep, in canonical code order."""
    for cls in enumerate_tournaments(n):
        if skip and cls.hex in skip:
            continue
        g = cls.graph()
        res = inversion_number(g, k_max=n, deadline=deadline)
        assert res.inv is not None
        yield CensusRecord(cls, res.inv, tau(g), tau_arc(g), nu(g))


def tournament_inv(g: OrientedGraph, deadline: Optional[float] = None) -> int:
    res = inversion_number(g, k_max=g.n, deadline=deadline)
    assert res.inv is not None
    return res.inv


def max_inv(n: int, deadline: Optional[float] = None) -> tuple[int, CanonicalTournament]:
    """Maximum inversion number over order-n tournaments, with a witness."""
    best = -1
    witness: Optional[CanonicalTournament] = None
    for cls in enumerate_tournaments(n):
        value = tournament_inv(cls.graph(), deadline=deadline)
        if value > best:
            best, witness = value, cls
    assert witness is not None
    return best, witness


def critical_tournaments(
    n_max: int, k: int, deadline: Optional[float] = None
) -> list[CanonicalTournament]:
    """All census members T with inv(T) = k and inv(T - x) < k for every x."""
    if k < 1:
        raise InputError("criticality is defined for k >= 1")
    found = []
    for n in range(3, n_max + 1):
        for cls in enumerate_tournaments(n):
            g = cls.graph()
            if decide_inv_le_k(g, k - 1, deadline=deadline) is not None:
                continue
            if decide_inv_le_k(g, k, deadline=deadline) is None:
                continue
            critical = True
            for x in range(n):
                sub, _ = g.delete([x])
                if decide_inv_le_k(sub, k - 1, deadline=deadline) is None:
                    critical = False
                    break
            if critical:
                found.append(cls)
    return found


def verify_dijoin_split(
    L: OrientedGraph, R: OrientedGraph, deadline: Optional[float] = None
) -> bool:
    """Check that every decycling pair of the dijoin splits across the sides.

    Precondition (checked): both sides have inversion number exactly 1.
    """
    for side, name in ((L, "L"), (R, "R")):
        if side.is_acyclic() or decide_inv_le_k(side, 1, deadline=deadline) is None:
            raise InputError(f"side {name} must have inversion number exactly 1")
    D = dijoin(L, R)
    if D.n > 12:
        raise SizeLimitError("dijoin split enumeration guard: more than 12 vertices")
    left = frozenset(range(L.n))
    right = frozenset(range(L.n, D.n))
    for X1, X2 in enumerate_decycling_labelings(D, 2, deadline=deadline):
        split = (X1 <= left and X2 <= right) or (X1 <= right and X2 <= left)
        if not split:
            return False
    return True
