"""Monotone 1-in-3 SAT to single-inversion instances, and back.

Each variable gets one gadget per clause, all m copies sharing one hub
vertex; each clause adds a directed triangle on the a-vertices of its three
variables.  The gadget admits exactly two decycling single sets, which makes
the intersection of a decycling set with a variable block read off a truth
value.

Vertex layout: block per variable, sub-block per clause index, member order
(a, b, d, e); the n hub vertices come last.  |V| = n * (4m + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .digraph import InputError, OrientedGraph, verify_family


class CertificationError(RuntimeError):
    """A claimed certificate failed verification during decoding."""


@dataclass(frozen=True)
class MonotoneFormula:
    """All-positive 3-clauses over variables 1..n_vars."""

    n_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    @classmethod
    def of(cls, n_vars: int, clauses: Iterable[Iterable[int]]) -> "MonotoneFormula":
        norm = []
        for cl in clauses:
            trip = tuple(sorted(cl))
            if len(trip) != 3 or len(set(trip)) != 3:
                raise InputError(f"clause {tuple(cl)} must have 3 distinct variables")
            if trip[0] < 1 or trip[-1] > n_vars:
                raise InputError(f"clause {trip} has a variable outside 1..{n_vars}")
            norm.append(trip)
        return cls(n_vars, tuple(norm))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def to_text(self) -> str:
        lines = [f"p o3sat {self.n_vars} {self.m}"]
        lines += [" ".join(map(str, cl)) for cl in self.clauses]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "MonotoneFormula":
        rows = [
            line.split("#", 1)[0].strip()
            for line in text.splitlines()
            if line.split("#", 1)[0].strip()
        ]
        if not rows or not rows[0].startswith("p o3sat"):
            raise InputError("formula file must start with 'p o3sat <n_vars> <m>'")
        head = rows[0].split()
        if len(head) != 4:
            raise InputError("bad formula header")
        try:
            n_vars, m = int(head[2]), int(head[3])
        except ValueError:
            raise InputError("bad formula header") from None
        if len(rows) - 1 != m:
            raise InputError(f"expected {m} clause lines, found {len(rows) - 1}")
        clauses = []
        for line in rows[1:]:
            try:
                clauses.append([int(x) for x in line.split()])
            except ValueError:
                raise InputError(f"bad clause line: {line!r}") from None
        return cls.of(n_vars, clauses)


@dataclass(frozen=True)
class ReductionMap:
    """The compiled instance plus vertex addressing into it."""

    formula: MonotoneFormula
    graph: OrientedGraph

    # gadget members are addressed by variable i and clause index j, 1-based
    def _base(self, i: int, j: int) -> int:
        return ((i - 1) * self.formula.m + (j - 1)) * 4

    def a(self, i: int, j: int) -> int:
        return self._base(i, j)

    def b(self, i: int, j: int) -> int:
        return self._base(i, j) + 1

    def d(self, i: int, j: int) -> int:
        return self._base(i, j) + 2

    def e(self, i: int, j: int) -> int:
        return self._base(i, j) + 3

    def c(self, i: int) -> int:
        return 4 * self.formula.n_vars * self.formula.m + (i - 1)

    def variable_block(self, i: int) -> frozenset[int]:
        members = {self.c(i)}
        for j in range(1, self.formula.m + 1):
            members.update((self.a(i, j), self.b(i, j), self.d(i, j), self.e(i, j)))
        return frozenset(members)

    def true_pattern(self, i: int) -> frozenset[int]:
        out = {self.c(i)}
        for j in range(1, self.formula.m + 1):
            out.update((self.b(i, j), self.d(i, j)))
        return frozenset(out)

    def false_pattern(self, i: int) -> frozenset[int]:
        out = set()
        for j in range(1, self.formula.m + 1):
            out.update((self.a(i, j), self.b(i, j), self.e(i, j)))
        return frozenset(out)


def encode(formula: MonotoneFormula) -> ReductionMap:
    """Compile the formula; the result is decyclable by one inversion iff the
    formula has an exactly-one-true assignment."""
    n, m = formula.n_vars, formula.m
    if m < 1:
        raise InputError("reduction needs at least one clause")
    if n < 3:
        raise InputError("reduction needs at least three variables")

    def a(i, j):
        return ((i - 1) * m + (j - 1)) * 4

    arcs: list[tuple[int, int]] = []
    for i in range(1, n + 1):
        ci = 4 * n * m + (i - 1)
        for j in range(1, m + 1):
            av = a(i, j)
            bv, dv, ev = av + 1, av + 2, av + 3
            arcs += [
                (av, bv), (bv, ci), (ci, ev), (ev, bv),
                (dv, av), (bv, dv), (ev, dv), (ci, av),
            ]
    for j, clause in enumerate(formula.clauses, start=1):
        i1, i2, i3 = clause
        arcs += [
            (a(i1, j), a(i2, j)),
            (a(i2, j), a(i3, j)),
            (a(i3, j), a(i1, j)),
        ]
    graph = OrientedGraph(n * (4 * m + 1), arcs)
    return ReductionMap(formula, graph)


def assignment_to_set(rm: ReductionMap, assignment: Iterable[bool]) -> frozenset[int]:
    """The decycling set induced by a truth assignment.

    Verifies only for exactly-one-true assignments; callers check the result
    with verify_family when the assignment is untrusted.
    """
    values = list(assignment)
    if len(values) != rm.formula.n_vars:
        raise InputError("assignment length must match the variable count")
    X: set[int] = set()
    for i, val in enumerate(values, start=1):
        X |= rm.true_pattern(i) if val else rm.false_pattern(i)
    return frozenset(X)


def decode(rm: ReductionMap, X: Iterable[int]) -> tuple[bool, ...]:
    """Read the assignment off a certified decycling set."""
    Xf = frozenset(X)
    if not verify_family(rm.graph, [Xf]):
        raise CertificationError("set does not decycle the reduction graph")
    out = []
    for i in range(1, rm.formula.n_vars + 1):
        got = Xf & rm.variable_block(i)
        if got == rm.true_pattern(i):
            out.append(True)
        elif got == rm.false_pattern(i):
            out.append(False)
        else:
            raise CertificationError(
                f"variable block {i} matches neither gadget pattern"
            )
    return tuple(out)


def brute_one_in_three(
    formula: MonotoneFormula, max_vars: int = 25
) -> Optional[tuple[bool, ...]]:
    """Exhaustive exactly-one-true search; first assignment in lex order."""
    n = formula.n_vars
    if n > max_vars:
        from .cycleparams import SizeLimitError

        raise SizeLimitError(
            f"one-in-three brute force guard: {n} variables exceeds limit {max_vars}"
        )
    for word in range(1 << n):
        ok = True
        for clause in formula.clauses:
            hits = sum(word >> (v - 1) & 1 for v in clause)
            if hits != 1:
                ok = False
                break
        if ok:
            return tuple(bool(word >> i & 1) for i in range(n))
    return None


def is_one_in_three(formula: MonotoneFormula, assignment: Iterable[bool]) -> bool:
    values = list(assignment)
    return all(sum(values[v - 1] for v in clause) == 1 for clause in formula.clauses)
