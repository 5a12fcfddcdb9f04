"""Polynomial-time decision of inversion number <= 1 and <= 2 on tournaments.

Size 1: for each vertex v, the only inversion that can yield a transitive
tournament with source v is the closed in-neighbourhood of v, so n candidate
sets are tested.

Size 2: after stripping sources and sinks, every ordered vertex pair (s, t)
is tested as (source, sink) of the final transitive tournament under the
five membership placements of s and t in the two sets.  Four placements
force both sets outright; the last ({s,t} in both sets) reduces to
partitioning B(s,t), transitivity of the A(s,t) block, and an interlacing of
the two block orderings decided greedily.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .digraph import DecyclingFamily, InputError, OrientedGraph, bits, verify_family

Pair = tuple[frozenset[int], frozenset[int]]


def inv1_tournament(T: OrientedGraph) -> Optional[frozenset[int]]:
    """A single decycling set, or None (proving two inversions are needed).

    Sources and sinks are stripped first: on the source-free core the final
    source v of the transitive result must have all its in-arcs reversed, so
    the only candidate set for it is its closed in-neighbourhood.  (Without
    stripping the candidate test is incomplete: the final source may be a
    vertex that was already a source, left outside the inverted set.)

    Returns the empty set when T is already transitive.
    """
    if not T.is_tournament():
        raise InputError("inv1_tournament requires a tournament")
    core, kept, _log = T.strip_sources_sinks()
    if core.n == 0:
        return frozenset()
    for v in range(core.n):
        X = frozenset(bits(core.in_mask(v))) | {v}
        if core.invert(X).is_acyclic():
            return frozenset(kept[u] for u in X)
    return None


@dataclass(frozen=True)
class PolarPartition:
    """The four quadrants of V(T) minus {s, t} split by arcs toward s and t."""

    s: int
    t: int
    a: frozenset[int]  # beaten by s, beats t
    b: frozenset[int]  # beats s, beaten by t
    c: frozenset[int]  # beaten by both
    d: frozenset[int]  # beats both


def polar_partition(T: OrientedGraph, s: int, t: int) -> PolarPartition:
    if s == t:
        raise InputError("polar partition needs two distinct vertices")
    if not T.is_tournament():
        raise InputError("polar_partition requires a tournament")
    rest = ((1 << T.n) - 1) ^ (1 << s) ^ (1 << t)
    return PolarPartition(
        s,
        t,
        a=frozenset(bits(T.out_mask(s) & T.in_mask(t) & rest)),
        b=frozenset(bits(T.in_mask(s) & T.out_mask(t) & rest)),
        c=frozenset(bits(T.out_mask(s) & T.out_mask(t) & rest)),
        d=frozenset(bits(T.in_mask(s) & T.in_mask(t) & rest)),
    )


@dataclass(frozen=True)
class MergePlan:
    """Interlacing of an A-ordering into a B-ordering.

    breakpoints[i] is the number of B-vertices placed before the i-th
    A-vertex; z holds the A-vertices whose arcs toward B are reversed once.
    """

    z: frozenset[int]
    breakpoints: tuple[int, ...]


def merge_orderings(
    T: OrientedGraph, pa: Sequence[int], pb: Sequence[int]
) -> Optional[MergePlan]:
    """Decide whether the two orderings interlace into one transitive order.

    For each A-vertex the arcs toward pb must form a prefix/suffix threshold
    pattern, plain (no reversal) or inverted (vertex joins both sets); a
    nondecreasing selection of thresholds is then chosen greedily, smallest
    feasible threshold first.
    """
    if len(set(pa)) != len(pa) or len(set(pb)) != len(pb) or set(pa) & set(pb):
        raise InputError("orderings must enumerate disjoint vertex sets")
    q = len(pb)
    z: list[int] = []
    breakpoints: list[int] = []
    prev = 0
    for a in pa:
        toward = [T.has_arc(b, a) for b in pb]  # True where b -> a in T
        options: list[tuple[int, bool]] = []  # (threshold, a in Z)
        lead = 0
        while lead < q and toward[lead]:
            lead += 1
        if not any(toward[lead:]):
            options.append((lead, False))
        lead0 = 0
        while lead0 < q and not toward[lead0]:
            lead0 += 1
        if all(toward[lead0:]):
            options.append((lead0, True))
        choice = None
        for j, in_z in sorted(options):
            if j >= prev:
                choice = (j, in_z)
                break
        if choice is None:
            return None
        prev = choice[0]
        breakpoints.append(choice[0])
        if choice[1]:
            z.append(a)
    return MergePlan(frozenset(z), tuple(breakpoints))


def _case1(T: OrientedGraph, s: int, t: int) -> Optional[Pair]:
    # both s and t in the first set only
    if not T.has_arc(t, s):
        return None
    pp = polar_partition(T, s, t)
    if pp.c or pp.d:
        return None
    X1 = pp.b | {s, t}
    T1 = T.invert(X1)
    full = (1 << T.n) - 1
    assert T1.out_mask(s) == full ^ (1 << s), "s must become a source"
    assert T1.in_mask(t) == full ^ (1 << t), "t must become a sink"
    sub, kept = T1.delete([s, t])
    if sub.n == 0:
        return X1, frozenset()
    X2sub = inv1_tournament(sub)
    if X2sub is None:
        return None
    return X1, frozenset(kept[v] for v in X2sub)


def _case2(T: OrientedGraph, s: int, t: int) -> Optional[Pair]:
    # s in the first set only, t in the second only
    if not T.has_arc(s, t):
        return None
    pp = polar_partition(T, s, t)
    X1 = pp.b | pp.d | {s}
    X2 = pp.b | pp.c | {t}
    if T.apply_family([X1, X2]).is_transitive_with(s, t):
        return X1, X2
    return None


def _case3(T: OrientedGraph, s: int, t: int) -> Optional[Pair]:
    # s in both sets, t in the first only
    if not T.has_arc(t, s):
        return None
    pp = polar_partition(T, s, t)
    X1 = pp.b | pp.c | {s, t}
    X2 = pp.c | pp.d | {s}
    if T.apply_family([X1, X2]).is_transitive_with(s, t):
        return X1, X2
    return None


def _b_partitions(
    T: OrientedGraph, bset: frozenset[int]
) -> Iterator[tuple[frozenset[int], frozenset[int], list[int]]]:
    """Candidate partitions (X1', X2') of B with the transformed block
    transitive, together with the block's ordering (original vertex ids)."""
    if not bset:
        yield frozenset(), frozenset(), []
        return
    if len(bset) == 1:
        (b,) = bset
        yield frozenset({b}), frozenset(), [b]
        yield frozenset(), frozenset({b}), [b]
        return
    TB, kept = T.induced(bset)
    nb = TB.n
    for sp in range(nb):
        for tp in range(nb):
            if sp == tp:
                continue
            ppb = polar_partition(TB, sp, tp)
            if TB.has_arc(tp, sp) and not ppb.c and not ppb.d:
                # both block endpoints in X1' only
                X1 = ppb.b | {sp, tp}
                X2 = frozenset(range(nb)) - X1
                gb = TB.apply_family([X1, X2])
                ordering = gb.acyclic_ordering()
                if ordering is not None:
                    yield (
                        frozenset(kept[v] for v in X1),
                        frozenset(kept[v] for v in X2),
                        [kept[v] for v in ordering],
                    )
            if TB.has_arc(sp, tp) and not ppb.a and not ppb.b:
                # block source in X1' only, block sink in X2' only
                X1 = ppb.d | {sp}
                X2 = ppb.c | {tp}
                gb = TB.apply_family([X1, X2])
                ordering = gb.acyclic_ordering()
                if ordering is not None:
                    yield (
                        frozenset(kept[v] for v in X1),
                        frozenset(kept[v] for v in X2),
                        [kept[v] for v in ordering],
                    )


def _case4(T: OrientedGraph, s: int, t: int) -> Optional[Pair]:
    # both s and t in both sets
    if not T.has_arc(s, t):
        return None
    pp = polar_partition(T, s, t)
    if pp.c or pp.d:
        return None
    TA, keptA = T.induced(pp.a)
    orda = TA.acyclic_ordering()
    if orda is None:
        return None  # the A block is untouched, so it must already be transitive
    pa = [keptA[v] for v in orda]
    for X1b, X2b, pb in _b_partitions(T, pp.b):
        plan = merge_orderings(T, pa, pb)
        if plan is None:
            continue
        X1 = X1b | plan.z | {s, t}
        X2 = X2b | plan.z | {s, t}
        assert T.apply_family([X1, X2]).is_transitive_with(s, t)
        return X1, X2
    return None


def _inv2_core(T: OrientedGraph) -> Optional[Pair]:
    rev = T.reverse()
    for s in range(T.n):
        for t in range(T.n):
            if s == t:
                continue
            res = _case1(T, s, t)
            if res is not None:
                return res
            res = _case2(T, s, t)
            if res is not None:
                return res
            res = _case3(T, s, t)
            if res is not None:
                return res
            res = _case3(rev, s, t)
            if res is not None:
                # a decycling pair of the reverse decycles the original too
                return res
            res = _case4(T, s, t)
            if res is not None:
                return res
    return None


def inv2_tournament(T: OrientedGraph) -> Optional[Pair]:
    """A decycling pair (X1, X2), or None proving three inversions are needed.

    When one inversion suffices the pair is padded with an empty second set.
    """
    if not T.is_tournament():
        raise InputError("inv2_tournament requires a tournament")
    X = inv1_tournament(T)
    if X is not None:
        return X, frozenset()
    stripped, kept, _log = T.strip_sources_sinks()
    res = _inv2_core(stripped)
    if res is None:
        return None
    X1 = frozenset(kept[v] for v in res[0])
    X2 = frozenset(kept[v] for v in res[1])
    assert verify_family(T, [X1, X2])
    return X1, X2


def inv_tournament_result(T: OrientedGraph, k: int):
    """CLI-facing decision for k in {1, 2}: (inv value, family) or None."""
    from .solver import InvResult

    if k not in (1, 2):
        raise InputError("tournament decision supports k = 1 or 2 only")
    if T.is_acyclic():
        return InvResult(inv=0, k_max=k, family=DecyclingFamily(()), exhausted_below=True)
    if k == 1:
        X = inv1_tournament(T)
        if X is None:
            return None
        return InvResult(inv=1, k_max=k, family=DecyclingFamily((X,)), exhausted_below=True)
    pair = inv2_tournament(T)
    if pair is None:
        return None
    sets = tuple(s for s in pair if s)
    return InvResult(
        inv=len(sets), k_max=k, family=DecyclingFamily(sets), exhausted_below=True
    )
