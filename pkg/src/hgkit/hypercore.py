"""Dual-indexed sparse hypergraph storage.

A hypergraph is held as an n-by-k matrix of optional weights: rows are
vertices (ids 1..n), columns are hyperedges (ids 1..k), and a present
cell (v, e) means v is a member of e with that weight.  Present cells
are stored twice, in a per-vertex and a per-hyperedge hash map, so
incidence queries cost O(1) from either side regardless of n and k.
Every mutator updates the two indexes together; nothing else in the
package writes to them.

Ids stay contiguous across removals: the highest-numbered vertex (or
hyperedge) moves into the freed slot, and the move is reported to the
caller as an id remap ``{old_id: new_id}``.

Empty hyperedges and vertices with no incident hyperedge are legal.
"""

from __future__ import annotations

import math
from typing import Any, Iterable, Iterator, Mapping

from .errors import (
    NonFiniteWeightError,
    NonRectangularError,
    UnknownHyperedgeError,
    UnknownVertexError,
)

__all__ = ["Hypergraph", "IdRemap", "DEFAULT_WEIGHT", "check_weight", "as_weight_map"]

IdRemap = dict[int, int]
WeightMap = dict[int, float]

DEFAULT_WEIGHT = 1.0


def check_weight(value: Any) -> float:
    """Coerce to float, rejecting NaN and infinities."""
    w = float(value)
    if not math.isfinite(w):
        raise NonFiniteWeightError(f"weight must be finite, got {value!r}")
    return w


def as_weight_map(memberships: Any, default: float = DEFAULT_WEIGHT) -> WeightMap:
    """Normalize a membership argument.

    Accepts None, a mapping id -> weight, or a bare iterable of ids
    (each of which gets the default weight).
    """
    if memberships is None:
        return {}
    if isinstance(memberships, Mapping):
        return {int(i): check_weight(w) for i, w in memberships.items()}
    return {int(i): default for i in memberships}


class Hypergraph:
    """Mutable weighted hypergraph with optional per-id metadata.

    Metadata values are opaque to the structure; they ride along with
    their id through moves and are dropped only when the id itself is
    removed.
    """

    __slots__ = ("_v2he", "_he2v", "_vmeta", "_hemeta")

    def __init__(self, n: int = 0, k: int = 0) -> None:
        if n < 0 or k < 0:
            raise ValueError("vertex and hyperedge counts must be non-negative")
        self._v2he: list[WeightMap] = [{} for _ in range(n)]
        self._he2v: list[WeightMap] = [{} for _ in range(k)]
        self._vmeta: list[Any] = [None] * n
        self._hemeta: list[Any] = [None] * k

    # --- construction ------------------------------------------------------

    @classmethod
    def from_incidence(cls, matrix: Iterable[Iterable[Any]]) -> "Hypergraph":
        """Build from a dense n-by-k matrix of optional weights.

        A cell that is None means "not a member".  Rows must all have
        the same length; weights must be finite.
        """
        rows = [list(row) for row in matrix]
        n = len(rows)
        k = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != k:
                raise NonRectangularError(
                    f"incidence rows must share one length, saw {len(row)} and {k}"
                )
        h = cls(n, k)
        for v, row in enumerate(rows, start=1):
            for e, cell in enumerate(row, start=1):
                if cell is not None:
                    w = check_weight(cell)
                    h._v2he[v - 1][e] = w
                    h._he2v[e - 1][v] = w
        return h

    # --- sizes and iteration -----------------------------------------------

    @property
    def nhv(self) -> int:
        """Number of vertices."""
        return len(self._v2he)

    @property
    def nhe(self) -> int:
        """Number of hyperedges."""
        return len(self._he2v)

    @property
    def incidence_count(self) -> int:
        """Number of present (vertex, hyperedge) cells."""
        return sum(len(row) for row in self._v2he)

    def vertices(self) -> range:
        return range(1, self.nhv + 1)

    def hyperedges(self) -> range:
        return range(1, self.nhe + 1)

    def degree(self, v: int) -> int:
        """Number of hyperedges incident to v."""
        self._check_vertex(v)
        return len(self._v2he[v - 1])

    def hyperedge_size(self, e: int) -> int:
        """Number of member vertices of e."""
        self._check_hyperedge(e)
        return len(self._he2v[e - 1])

    # --- incidence queries --------------------------------------------------

    def get_hyperedges(self, v: int) -> WeightMap:
        """Snapshot of {hyperedge id: weight} for the hyperedges containing v."""
        self._check_vertex(v)
        return dict(self._v2he[v - 1])

    def get_vertices(self, e: int) -> WeightMap:
        """Snapshot of {vertex id: weight} for the members of e."""
        self._check_hyperedge(e)
        return dict(self._he2v[e - 1])

    def get_weight(self, v: int, e: int) -> float | None:
        self._check_vertex(v)
        self._check_hyperedge(e)
        return self._v2he[v - 1].get(e)

    def set_weight(self, v: int, e: int, weight: Any) -> float | None:
        """Set, overwrite, or (with None) clear one incidence cell.

        Returns the previous weight of the cell, or None if it was absent.
        """
        self._check_vertex(v)
        self._check_hyperedge(e)
        row = self._v2he[v - 1]
        previous = row.get(e)
        if weight is None:
            if e in row:
                del row[e]
                del self._he2v[e - 1][v]
        else:
            w = check_weight(weight)
            row[e] = w
            self._he2v[e - 1][v] = w
        return previous

    # --- mutation -----------------------------------------------------------

    def add_vertex(self, hyperedges: Any = None, meta: Any = None) -> int:
        """Append a vertex; optional memberships are applied atomically.

        ``hyperedges`` may be a mapping {hyperedge id: weight} or an
        iterable of hyperedge ids (default weight 1.0).  Returns the new
        vertex id.
        """
        members = as_weight_map(hyperedges)
        for e in members:
            self._check_hyperedge(e)
        v = self.nhv + 1
        self._v2he.append(members)
        self._vmeta.append(meta)
        for e, w in members.items():
            self._he2v[e - 1][v] = w
        return v

    def add_hyperedge(self, vertices: Any = None, meta: Any = None) -> int:
        """Append a hyperedge; optional memberships are applied atomically."""
        members = as_weight_map(vertices)
        for v in members:
            self._check_vertex(v)
        e = self.nhe + 1
        self._he2v.append(members)
        self._hemeta.append(meta)
        for v, w in members.items():
            self._v2he[v - 1][e] = w
        return e

    def remove_vertex(self, v: int) -> IdRemap:
        """Remove v; the last vertex takes its id.

        Returns {old_id: new_id} for the relocated vertex (empty when v
        was already the last one).
        """
        self._check_vertex(v)
        n = self.nhv
        for e in self._v2he[v - 1]:
            del self._he2v[e - 1][v]
        remap: IdRemap = {}
        if v != n:
            moved = self._v2he[n - 1]
            self._v2he[v - 1] = moved
            self._vmeta[v - 1] = self._vmeta[n - 1]
            for e, w in moved.items():
                column = self._he2v[e - 1]
                del column[n]
                column[v] = w
            remap[n] = v
        self._v2he.pop()
        self._vmeta.pop()
        return remap

    def remove_hyperedge(self, e: int) -> IdRemap:
        """Remove e; the last hyperedge takes its id."""
        self._check_hyperedge(e)
        k = self.nhe
        for v in self._he2v[e - 1]:
            del self._v2he[v - 1][e]
        remap: IdRemap = {}
        if e != k:
            moved = self._he2v[k - 1]
            self._he2v[e - 1] = moved
            self._hemeta[e - 1] = self._hemeta[k - 1]
            for v, w in moved.items():
                row = self._v2he[v - 1]
                del row[k]
                row[e] = w
            remap[k] = e
        self._he2v.pop()
        self._hemeta.pop()
        return remap

    # --- metadata ------------------------------------------------------------

    def set_vertex_meta(self, v: int, value: Any) -> None:
        self._check_vertex(v)
        self._vmeta[v - 1] = value

    def get_vertex_meta(self, v: int) -> Any:
        self._check_vertex(v)
        return self._vmeta[v - 1]

    def set_hyperedge_meta(self, e: int, value: Any) -> None:
        self._check_hyperedge(e)
        self._hemeta[e - 1] = value

    def get_hyperedge_meta(self, e: int) -> Any:
        self._check_hyperedge(e)
        return self._hemeta[e - 1]

    # --- export and comparison ------------------------------------------------

    def to_incidence(self) -> list[list[float | None]]:
        """Dense n-by-k matrix of weights with None for absent cells."""
        k = self.nhe
        return [[row.get(e) for e in range(1, k + 1)] for row in self._v2he]

    def copy(self) -> "Hypergraph":
        dup = Hypergraph.__new__(Hypergraph)
        dup._v2he = [dict(row) for row in self._v2he]
        dup._he2v = [dict(col) for col in self._he2v]
        dup._vmeta = list(self._vmeta)
        dup._hemeta = list(self._hemeta)
        return dup

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self._v2he == other._v2he
            and self._he2v == other._he2v
            and self._vmeta == other._vmeta
            and self._hemeta == other._hemeta
        )

    def __repr__(self) -> str:
        return (
            f"Hypergraph(n={self.nhv}, k={self.nhe}, "
            f"incidences={self.incidence_count})"
        )

    # --- internal -------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= self.nhv:
            raise UnknownVertexError(f"no vertex {v!r} (have 1..{self.nhv})")

    def _check_hyperedge(self, e: int) -> None:
        if not isinstance(e, int) or isinstance(e, bool) or not 1 <= e <= self.nhe:
            raise UnknownHyperedgeError(f"no hyperedge {e!r} (have 1..{self.nhe})")

    def check_dual_consistency(self) -> bool:
        """Verify the two indexes describe the same cell set.

        Intended for tests and debugging; mutators keep this true by
        construction.
        """
        for v, row in enumerate(self._v2he, start=1):
            for e, w in row.items():
                if self._he2v[e - 1].get(v) != w:
                    return False
        for e, column in enumerate(self._he2v, start=1):
            for v, w in column.items():
                if self._v2he[v - 1].get(e) != w:
                    return False
        return True
