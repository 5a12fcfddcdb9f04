"""Oriented graphs (loop-free digraphs without 2-cycles) and the inversion operation.

Vertices are dense integers 0..n-1; adjacency is stored as one out-neighbour
bitmask per vertex, which keeps inversion, acyclicity testing and induced
subgraphs cheap.  All operations return new graphs; instances are immutable
and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class InputError(ValueError):
    """Raised for malformed graphs, vertex sets, families or file contents."""


def _mask_of(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or v < 0 or v >= n:
            raise InputError(f"vertex {v!r} out of range 0..{n - 1}")
        mask |= 1 << v
    return mask


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class OrientedGraph:
    """A digraph with no loops and at most one arc per vertex pair."""

    __slots__ = ("n", "_out", "_in", "labels")

    def __init__(
        self,
        n: int,
        arcs: Iterable[tuple[int, int]] = (),
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        out = [0] * n
        for u, v in arcs:
            if u < 0 or u >= n or v < 0 or v >= n:
                raise InputError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"loop at vertex {u} rejected")
            if out[v] >> u & 1:
                raise InputError(f"2-cycle between {u} and {v} rejected")
            out[u] |= 1 << v
        self.n = n
        self._out = tuple(out)
        inn = [0] * n
        for u in range(n):
            m = out[u]
            while m:
                low = m & -m
                inn[low.bit_length() - 1] |= 1 << u
                m ^= low
        self._in = tuple(inn)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise InputError("labels length must equal vertex count")

    @classmethod
    def _from_masks(cls, out: Sequence[int], labels=None) -> "OrientedGraph":
        g = object.__new__(cls)
        g.n = len(out)
        g._out = tuple(out)
        inn = [0] * g.n
        for u in range(g.n):
            m = out[u]
            while m:
                low = m & -m
                inn[low.bit_length() - 1] |= 1 << u
                m ^= low
        g._in = tuple(inn)
        g.labels = tuple(labels) if labels is not None else None
        return g

    # -- basic accessors ---------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._out[u] >> v & 1)

    def out_mask(self, u: int) -> int:
        return self._out[u]

    def in_mask(self, u: int) -> int:
        return self._in[u]

    def out_degree(self, u: int) -> int:
        return self._out[u].bit_count()

    def in_degree(self, u: int) -> int:
        return self._in[u].bit_count()

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self._out[u])]

    @property
    def m(self) -> int:
        return sum(o.bit_count() for o in self._out)

    def vertex_of(self, label: str) -> int:
        """Index of a labelled vertex; labels must be present."""
        if self.labels is None:
            raise InputError("graph carries no vertex labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"no vertex labelled {label!r}") from None

    def vertex_set(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.vertex_of(s) for s in names)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrientedGraph)
            and self.n == other.n
            and self._out == other._out
        )

    def __hash__(self) -> int:
        return hash((self.n, self._out))

    def __repr__(self) -> str:
        return f"OrientedGraph(n={self.n}, m={self.m})"

    # -- inversion ---------------------------------------------------------

    def invert(self, X: Iterable[int]) -> "OrientedGraph":
        """Reverse every arc with both end-vertices in X."""
        mask = _mask_of(X, self.n)
        out = list(self._out)
        for u in bits(mask):
            out[u] = (self._out[u] & ~mask) | (self._in[u] & mask)
        return OrientedGraph._from_masks(out, self.labels)

    def apply_family(self, family: Iterable[Iterable[int]]) -> "OrientedGraph":
        """Invert the sets of a family one after another (order-independent)."""
        g = self
        for X in family:
            g = g.invert(X)
        return g

    # -- acyclicity --------------------------------------------------------

    def acyclic_ordering(self) -> Optional[list[int]]:
        """Topological ordering, smallest vertex index first among sources.

        Returns None when the graph has a directed cycle.
        """
        alive = (1 << self.n) - 1
        inn = self._in
        order = []
        while alive:
            free = 0
            m = alive
            while m:
                low = m & -m
                v = low.bit_length() - 1
                if inn[v] & alive == 0:
                    free |= low
                m ^= low
            if free == 0:
                return None
            v = (free & -free).bit_length() - 1
            order.append(v)
            alive ^= 1 << v
        return order

    def is_acyclic(self) -> bool:
        return self.acyclic_ordering() is not None

    def find_cycle(self) -> Optional[list[int]]:
        """A directed cycle as a vertex list, or None when acyclic.

        Deterministic: peels vertices of in-degree 0 (restricted to the
        remaining set), then walks backwards from the smallest remaining
        vertex along smallest in-neighbours until a vertex repeats.
        """
        alive = (1 << self.n) - 1
        inn = self._in
        changed = True
        while changed and alive:
            changed = False
            m = alive
            while m:
                low = m & -m
                v = low.bit_length() - 1
                if inn[v] & alive == 0:
                    alive ^= low
                    changed = True
                m ^= low
        if alive == 0:
            return None
        # every remaining vertex has an in-neighbour among the remaining set
        start = (alive & -alive).bit_length() - 1
        seen: dict[int, int] = {}
        path = []
        v = start
        while v not in seen:
            seen[v] = len(path)
            path.append(v)
            v = ((inn[v] & alive) & -(inn[v] & alive)).bit_length() - 1
        cyc = path[seen[v]:]
        cyc.reverse()  # backward walk; reverse to list vertices in arc order
        return cyc

    # -- structure helpers ---------------------------------------------------

    def reverse(self) -> "OrientedGraph":
        return OrientedGraph._from_masks(self._in, self.labels)

    def induced(self, vertices: Iterable[int]) -> tuple["OrientedGraph", list[int]]:
        """Induced subgraph plus the list mapping new indices to old ones."""
        kept = sorted(set(vertices))
        kept_mask = _mask_of(kept, self.n)
        pos = {v: i for i, v in enumerate(kept)}
        out = [0] * len(kept)
        for v in kept:
            for w in bits(self._out[v] & kept_mask):
                out[pos[v]] |= 1 << pos[w]
        labels = [self.labels[v] for v in kept] if self.labels else None
        return OrientedGraph._from_masks(out, labels), kept

    def delete(self, vertices: Iterable[int]) -> tuple["OrientedGraph", list[int]]:
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def strip_sources_sinks(self) -> tuple["OrientedGraph", list[int], list[tuple[int, str]]]:
        """Repeatedly delete sources and sinks.

        Returns (stripped graph, kept-vertex map new->old, removal log of
        (original vertex, "source"|"sink") in removal order).  The stripped
        graph has the same inversion number as the original.
        """
        alive = (1 << self.n) - 1
        log: list[tuple[int, str]] = []
        changed = True
        while changed and alive:
            changed = False
            m = alive
            while m:
                low = m & -m
                v = low.bit_length() - 1
                if self._in[v] & alive == 0:
                    alive ^= low
                    log.append((v, "source"))
                    changed = True
                elif self._out[v] & alive == 0:
                    alive ^= low
                    log.append((v, "sink"))
                    changed = True
                m ^= low
        sub, kept = self.induced(bits(alive))
        return sub, kept, log

    def is_tournament(self) -> bool:
        for u in range(self.n):
            adj = self._out[u] | self._in[u]
            if adj != ((1 << self.n) - 1) ^ (1 << u):
                return False
        return True

    def is_transitive_tournament(self) -> bool:
        return self.is_tournament() and self.is_acyclic()

    def is_transitive_with(self, s: int, t: int) -> bool:
        """True iff this is a transitive tournament with source s and sink t."""
        if not self.is_tournament():
            raise InputError("is_transitive_with requires a tournament")
        full = ((1 << self.n) - 1)
        if self._out[s] != full ^ (1 << s):
            return False
        if self._in[t] != full ^ (1 << t):
            return False
        return self.is_acyclic()

    def is_strong(self) -> bool:
        """Strong connectivity (every vertex reaches every other)."""
        if self.n <= 1:
            return True
        for masks in (self._out, self._in):
            reach = 1
            frontier = 1
            while frontier:
                new = 0
                for v in bits(frontier):
                    new |= masks[v]
                frontier = new & ~reach
                reach |= new
            if reach != (1 << self.n) - 1:
                return False
        return True

    # -- serialization -------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.arcs()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "OrientedGraph":
        rows = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                rows.append(line)
        if not rows:
            raise InputError("empty graph file")
        head = rows[0].split()
        if len(head) != 2:
            raise InputError("header must be 'n m'")
        try:
            n, m = int(head[0]), int(head[1])
        except ValueError:
            raise InputError("header must be two integers") from None
        if len(rows) - 1 != m:
            raise InputError(f"expected {m} arc lines, found {len(rows) - 1}")
        arcs = []
        for line in rows[1:]:
            parts = line.split()
            if len(parts) != 2:
                raise InputError(f"bad arc line: {line!r}")
            try:
                arcs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise InputError(f"bad arc line: {line!r}") from None
        return cls(n, arcs)

    def to_dot(self, name: str = "D") -> str:
        def disp(v: int) -> str:
            return self.labels[v] if self.labels else str(v)

        lines = [f"digraph {name} {{"]
        for v in range(self.n):
            lines.append(f'  "{disp(v)}";')
        for u, v in self.arcs():
            lines.append(f'  "{disp(u)}" -> "{disp(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "arcs": [[u, v] for u, v in self.arcs()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "OrientedGraph":
        try:
            n = data["n"]
            arcs = [(int(u), int(v)) for u, v in data["arcs"]]
        except (KeyError, TypeError, ValueError):
            raise InputError("graph JSON must have 'n' and 'arcs'") from None
        return cls(n, arcs)


@dataclass(frozen=True)
class DecyclingFamily:
    """An ordered list of vertex subsets; semantically an unordered family."""

    sets: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]]) -> "DecyclingFamily":
        return cls(tuple(frozenset(s) for s in sets))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def nonempty(self) -> "DecyclingFamily":
        return DecyclingFamily(tuple(s for s in self.sets if s))

    def as_lists(self) -> list[list[int]]:
        return [sorted(s) for s in self.sets]


def verify_family(D: OrientedGraph, family: Iterable[Iterable[int]]) -> bool:
    """True iff inverting the family's sets makes D acyclic."""
    return D.apply_family(family).is_acyclic()


def ordering_is_acyclic_for(D: OrientedGraph, order: Sequence[int]) -> bool:
    """True iff the given vertex ordering has no backward arc in D."""
    if sorted(order) != list(range(D.n)):
        raise InputError("ordering must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    return all(pos[u] < pos[v] for u, v in D.arcs())
