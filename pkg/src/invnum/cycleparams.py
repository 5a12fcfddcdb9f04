"""Exact cycle transversal (tau), arc transversal (tau_arc) and packing (nu).

Desk-scale exact algorithms with explicit size guards.  Guards are plain
parameters: callers working on large-but-sparse instances (second
subdivisions, say) raise them; nothing is silently truncated.

tau_arc uses the subset ordering DP for small n and an iterative-deepening
branch-and-bound on the arcs of a shortest cycle beyond that.  tau branches
on the vertices of a shortest cycle.  nu branches on a pivot vertex: either
it is unused, or one of the enumerated pivot-clean cycles through it is
taken whole.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .digraph import OrientedGraph, bits

DEFAULT_TAU_MAX_N = 20
DEFAULT_TAU_ARC_MAX_N = 20
DEFAULT_NU_MAX_N = 16
_TAU_ARC_DP_LIMIT = 16


class SizeLimitError(RuntimeError):
    """Instance exceeds the configured exact-computation guard."""


@dataclass(frozen=True)
class ParamResult:
    value: int
    witness: tuple


def _check_guard(D: OrientedGraph, max_n: int, what: str) -> None:
    if D.n > max_n:
        raise SizeLimitError(
            f"{what} guard: n={D.n} exceeds limit {max_n}; "
            f"pass a larger max_n to override"
        )


def _shortest_cycle(D: OrientedGraph, alive: int) -> Optional[list[int]]:
    """Shortest directed cycle within the alive set, or None.

    BFS from every alive vertex; deterministic tie-break on the smallest
    start vertex, then BFS layer order.
    """
    best: Optional[list[int]] = None
    outm = D._out
    for s in bits(alive):
        if best is not None and len(best) <= 3:
            break
        # BFS over alive vertices, looking for a path back to s
        parent = {s: -1}
        frontier = [s]
        found = None
        depth = 0
        while frontier and found is None:
            depth += 1
            if best is not None and depth >= len(best):
                break
            nxt = []
            for u in frontier:
                for w in bits(outm[u] & alive):
                    if w == s:
                        found = u
                        break
                    if w not in parent:
                        parent[w] = u
                        nxt.append(w)
                if found is not None:
                    break
            frontier = nxt
        if found is not None:
            path = [found]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            path.reverse()
            if best is None or len(path) < len(best):
                best = path
    return best


# -- tau: cycle transversal ------------------------------------------------


def _tau_value(D: OrientedGraph, alive: int, memo: dict) -> int:
    """Exact transversal size within alive; every transversal hits the
    shortest cycle, so branch on its vertices."""
    if alive in memo:
        return memo[alive]
    cyc = _shortest_cycle(D, alive)
    if cyc is None:
        value = 0
    else:
        value = 1 + min(_tau_value(D, alive ^ (1 << w), memo) for w in cyc)
    memo[alive] = value
    return value


def tau(D: OrientedGraph, max_n: int = DEFAULT_TAU_MAX_N) -> ParamResult:
    """Minimum feedback vertex set with a lexicographically-smallest witness."""
    _check_guard(D, max_n, "tau")
    full = (1 << D.n) - 1
    memo: dict[int, int] = {}
    value = _tau_value(D, full, memo)
    # rebuild the lex-smallest witness of that size, one vertex at a time
    witness: list[int] = []
    alive = full
    remaining = value
    for v in range(D.n):
        if remaining == 0:
            break
        if alive >> v & 1 and _tau_value(D, alive ^ (1 << v), memo) == remaining - 1:
            witness.append(v)
            alive ^= 1 << v
            remaining -= 1
    assert remaining == 0
    return ParamResult(value, tuple(witness))


# -- tau_arc: cycle arc-transversal -----------------------------------------


def _tau_arc_dp(D: OrientedGraph) -> ParamResult:
    n = D.n
    outm = D._out
    size = 1 << n
    dp = [0] * size
    for S in range(1, size):
        best = None
        m = S
        while m:
            low = m & -m
            u = low.bit_length() - 1
            cand = dp[S ^ low] + (outm[u] & (S ^ low)).bit_count()
            if best is None or cand < best:
                best = cand
            m ^= low
        dp[S] = best
    # reconstruct an optimal ordering; smallest vertex index on ties
    order: list[int] = []
    S = size - 1
    while S:
        m = S
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if dp[S] == dp[S ^ low] + (outm[u] & (S ^ low)).bit_count():
                order.append(u)
                S ^= low
                break
            m ^= low
    order.reverse()
    pos = {v: i for i, v in enumerate(order)}
    witness = tuple(sorted((u, v) for u, v in D.arcs() if pos[u] > pos[v]))
    return ParamResult(dp[size - 1], witness)


def _tau_arc_bnb(D: OrientedGraph) -> ParamResult:
    """Iterative deepening on removed arcs of a shortest cycle."""
    full = (1 << D.n) - 1

    def search(out: list[int], budget: int, removed: list) -> Optional[list]:
        g = OrientedGraph._from_masks(out)
        cyc = _shortest_cycle(g, full)
        if cyc is None:
            return list(removed)
        if budget == 0:
            return None
        k = len(cyc)
        for i in range(k):
            u, v = cyc[i], cyc[(i + 1) % k]
            out[u] ^= 1 << v
            removed.append((u, v))
            res = search(out, budget - 1, removed)
            removed.pop()
            out[u] ^= 1 << v
            if res is not None:
                return res
        return None

    target = 0
    while True:
        res = search(list(D._out), target, [])
        if res is not None:
            return ParamResult(target, tuple(sorted(res)))
        target += 1


def tau_arc(D: OrientedGraph, max_n: int = DEFAULT_TAU_ARC_MAX_N) -> ParamResult:
    """Minimum feedback arc set; the witness is also a valid reversal set."""
    _check_guard(D, max_n, "tau_arc")
    if D.n <= _TAU_ARC_DP_LIMIT:
        return _tau_arc_dp(D)
    return _tau_arc_bnb(D)


# -- nu: vertex-disjoint cycle packing ---------------------------------------


def _pivot_clean_cycles(D: OrientedGraph, alive: int, v: int) -> list[list[int]]:
    """Cycles through v, within alive, with no chord incident to v.

    Such cycles suffice for packing: a packed cycle through v can always be
    shrunk, inside its own vertex set, to one where v's only arcs to cycle
    vertices are the cycle arcs.  On tournaments these are exactly the
    directed triangles through v.
    """
    outm, inm = D._out, D._in
    res: list[list[int]] = []
    start_mask = outm[v] & alive

    def extend(path: list[int], used: int) -> None:
        u = path[-1]
        cand = outm[u] & alive & ~used
        if inm[v] >> u & 1:
            # u closes a cycle; longer continuations through u would carry
            # the chord u->v and are skipped
            if len(path) >= 2:
                res.append([v] + path)
            return
        cand &= ~outm[v] | (1 << path[0])  # no second out-arc from v allowed
        for w in bits(cand & ~(1 << v)):
            path.append(w)
            extend(path, used | (1 << w))
            path.pop()

    for first in bits(start_mask):
        extend([first], (1 << v) | (1 << first))
    return res


def _nu_value(D: OrientedGraph, alive: int, memo: dict) -> int:
    if alive in memo:
        return memo[alive]
    # drop vertices on no cycle (iterated source/sink peeling)
    changed = True
    while changed:
        changed = False
        m = alive
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if D._in[u] & alive == 0 or D._out[u] & alive == 0:
                alive ^= low
                changed = True
            m ^= low
    if alive == 0:
        return 0
    if alive in memo:
        return memo[alive]
    cyc = _shortest_cycle(D, alive)
    if cyc is None:
        memo[alive] = 0
        return 0
    v = min(cyc)
    best = 0
    for cstar in _pivot_clean_cycles(D, alive, v):
        cmask = 0
        for w in cstar:
            cmask |= 1 << w
        cand = 1 + _nu_value(D, alive & ~cmask, memo)
        if cand > best:
            best = cand
    cand = _nu_value(D, alive ^ (1 << v), memo)
    if cand > best:
        best = cand
    memo[alive] = best
    return best


def _nu_witness(D: OrientedGraph, alive: int, target: int, memo: dict) -> list[list[int]]:
    if target == 0:
        return []
    cyc = _shortest_cycle(D, alive)
    assert cyc is not None
    v = min(cyc)
    for cstar in _pivot_clean_cycles(D, alive, v):
        cmask = 0
        for w in cstar:
            cmask |= 1 << w
        if _nu_value(D, alive & ~cmask, memo) == target - 1:
            return [cstar] + _nu_witness(D, alive & ~cmask, target - 1, memo)
    assert _nu_value(D, alive ^ (1 << v), memo) == target
    return _nu_witness(D, alive ^ (1 << v), target, memo)


def nu(D: OrientedGraph, max_n: int = DEFAULT_NU_MAX_N) -> ParamResult:
    """Maximum number of vertex-disjoint directed cycles, with a witness."""
    _check_guard(D, max_n, "nu")
    memo: dict[int, int] = {}
    full = (1 << D.n) - 1
    value = _nu_value(D, full, memo)
    witness = _nu_witness(D, full, value, memo)
    return ParamResult(value, tuple(tuple(c) for c in witness))
