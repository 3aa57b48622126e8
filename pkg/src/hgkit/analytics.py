"""Connectivity, random walks, degree summaries, and modularity.

Unless stated otherwise these operations ignore incidence weights:
degree is the count of incident hyperedges, walks pick uniformly, and
both modularity scores are driven by counts.
"""

from __future__ import annotations

import math
import random
from collections import Counter, deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .centrality import CentralityVector
from .errors import (
    EmptyGraphError,
    IsolatedVertexError,
    NoHyperedgesError,
    NoUsableHyperedgesError,
    PartitionNotTotalError,
)
from .hypercore import Hypergraph
from .partition import Partition
from .views import MaterializedGraph, TwoSectionView

__all__ = [
    "connected_components",
    "random_walk_step",
    "one_step_distribution",
    "DegreeSummary",
    "degree_summary",
    "degree_centrality",
    "graph_degree_centrality",
    "hypergraph_modularity",
    "graph_modularity",
]

HyperedgeSelector = Callable[[Hypergraph, int, random.Random], int]
VertexSelector = Callable[[Hypergraph, int, int, random.Random], int]


# --- connectivity ------------------------------------------------------------


def connected_components(h: Hypergraph) -> list[set[int]]:
    """Vertex sets reachable through alternating vertex/hyperedge hops.

    Vertices with no incident hyperedge come back as singletons.  The
    list is ordered by each component's smallest vertex id.
    """
    seen = [False] * h.nhv
    seen_edge = [False] * h.nhe
    components: list[set[int]] = []
    for start in h.vertices():
        if seen[start - 1]:
            continue
        component = {start}
        seen[start - 1] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for e in h._v2he[v - 1]:
                if seen_edge[e - 1]:
                    continue
                seen_edge[e - 1] = True
                for u in h._he2v[e - 1]:
                    if not seen[u - 1]:
                        seen[u - 1] = True
                        component.add(u)
                        queue.append(u)
        components.append(component)
    return components


# --- random walks -------------------------------------------------------------


def _uniform_hyperedge(h: Hypergraph, v: int, rng: random.Random) -> int:
    return rng.choice(sorted(h._v2he[v - 1]))


def _uniform_member(h: Hypergraph, v: int, e: int, rng: random.Random) -> int:
    return rng.choice(sorted(h._he2v[e - 1]))


def random_walk_step(
    h: Hypergraph,
    v: int,
    rng: random.Random,
    *,
    heselect: HyperedgeSelector | None = None,
    vselect: VertexSelector | None = None,
) -> int:
    """One walk step: pick an incident hyperedge, then a member of it.

    Defaults pick uniformly at both stages, so staying put is possible.
    Custom selectors may bias either stage; the vertex they return must
    be a member of the chosen hyperedge.
    """
    if h.degree(v) == 0:
        raise IsolatedVertexError(f"vertex {v} has no incident hyperedge")
    e = (heselect or _uniform_hyperedge)(h, v, rng)
    members = h.get_vertices(e)
    u = (vselect or _uniform_member)(h, v, e, rng)
    if u not in members:
        raise ValueError(f"selector returned {u}, not a member of hyperedge {e}")
    return u


def one_step_distribution(h: Hypergraph, v: int) -> dict[int, float]:
    """Exact one-step law of the default walk from v.

    P(u | v) sums 1/(deg(v) * |e|) over the hyperedges containing both
    u and v.  Rows of this kernel sum to 1.
    """
    deg = h.degree(v)
    if deg == 0:
        raise IsolatedVertexError(f"vertex {v} has no incident hyperedge")
    dist: dict[int, float] = {}
    for e in h._v2he[v - 1]:
        members = h._he2v[e - 1]
        share = 1.0 / (deg * len(members))
        for u in members:
            dist[u] = dist.get(u, 0.0) + share
    return dist


# --- degrees ------------------------------------------------------------------


@dataclass
class DegreeSummary:
    """Degree sequence, total volume, and hyperedge size tallies.

    ``size_counts`` maps hyperedge size d to the number of hyperedges
    of that size; empty hyperedges are excluded.
    """

    degrees: dict[int, int]
    volume: int
    size_counts: dict[int, int]

    @property
    def usable_hyperedges(self) -> int:
        return sum(self.size_counts.values())


def degree_summary(h: Hypergraph) -> DegreeSummary:
    degrees = {v: len(h._v2he[v - 1]) for v in h.vertices()}
    sizes = Counter(
        len(h._he2v[e - 1]) for e in h.hyperedges() if h._he2v[e - 1]
    )
    return DegreeSummary(
        degrees=degrees,
        volume=sum(degrees.values()),
        size_counts=dict(sorted(sizes.items())),
    )


def degree_centrality(h: Hypergraph) -> CentralityVector:
    """Score each vertex by its incident hyperedge count."""
    return CentralityVector({v: float(len(h._v2he[v - 1])) for v in h.vertices()})


def graph_degree_centrality(view: TwoSectionView) -> CentralityVector:
    """Score each vertex by its number of distinct co-members."""
    return CentralityVector(
        {v: float(len(view.neighbors(v))) for v in view.nodes()}
    )


# --- modularity ----------------------------------------------------------------


def _check_total(labels: dict[int, int], universe: Iterable[int], what: str) -> None:
    missing = [v for v in universe if v not in labels]
    if missing:
        raise PartitionNotTotalError(f"{what} {missing[:5]} missing from partition")
    extra = set(labels) - set(universe)
    if extra:
        raise PartitionNotTotalError(
            f"partition labels unknown {what} {sorted(extra)[:5]}"
        )


def hypergraph_modularity(h: Hypergraph, partition: Partition) -> float:
    """Strict modularity of a partition of a hypergraph.

    The coverage term is the fraction of nonempty hyperedges entirely
    inside one community.  The expectation term charges each hyperedge
    size d a (volume share)**d tax.  Empty hyperedges are ignored on
    both sides.  The one-community partition scores 0.
    """
    labels = partition.labels
    _check_total(labels, h.vertices(), "vertices")
    if h.nhe == 0:
        raise NoHyperedgesError("modularity needs at least one hyperedge")
    m = 0
    monochrome = 0
    size_counts: Counter[int] = Counter()
    for e in h.hyperedges():
        members = h._he2v[e - 1]
        if not members:
            continue
        m += 1
        size_counts[len(members)] += 1
        it = iter(members)
        first = labels[next(it)]
        if all(labels[v] == first for v in it):
            monochrome += 1
    if m == 0:
        raise NoUsableHyperedgesError("all hyperedges are empty")
    volume: Counter[int] = Counter()
    total = 0
    for v in h.vertices():
        d = len(h._v2he[v - 1])
        volume[labels[v]] += d
        total += d
    shares = [x / total for x in volume.values()]
    tax = math.fsum(
        (count / m) * math.fsum(share**d for share in shares)
        for d, count in sorted(size_counts.items())
    )
    return monochrome / m - tax


def _iter_weighted_edges(
    g: MaterializedGraph | TwoSectionView,
) -> Iterator[tuple[int, int, float]]:
    if isinstance(g, MaterializedGraph):
        yield from g.edges
    elif isinstance(g, TwoSectionView):
        for u in g.nodes():
            for v, w in g.neighbors(u).items():
                if u < v:
                    yield (u, v, float(w))
    else:
        raise TypeError(f"expected a graph, got {type(g).__name__}")


def graph_modularity(
    g: MaterializedGraph | TwoSectionView, partition: Partition
) -> float:
    """Newman modularity of a weighted simple graph partition.

    Computed per community as (internal weight / total weight) minus
    (community strength / twice total weight) squared.
    """
    labels = partition.labels
    _check_total(labels, range(1, g.n_nodes + 1), "nodes")
    edges = list(_iter_weighted_edges(g))
    total = math.fsum(w for _, _, w in edges)
    if total <= 0.0:
        raise EmptyGraphError("graph modularity needs positive total edge weight")
    internal: dict[int, float] = {}
    strength: dict[int, float] = {}
    for u, v, w in edges:
        lu, lv = labels[u], labels[v]
        strength[lu] = strength.get(lu, 0.0) + w
        strength[lv] = strength.get(lv, 0.0) + w
        if lu == lv:
            internal[lu] = internal.get(lu, 0.0) + w
    communities = sorted(set(labels.values()))
    return math.fsum(
        internal.get(c, 0.0) / total - (strength.get(c, 0.0) / (2.0 * total)) ** 2
        for c in communities
    )
