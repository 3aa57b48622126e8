"""Label propagation community detection and partition comparison.

Two propagation variants are provided.  The graph variant runs on a
weighted graph (typically the two-section view): each vertex repeatedly
adopts the label with the largest weighted frequency among its
neighbors, updates applied in place one vertex at a time so that a
sweep sees the freshest labels.  The hypergraph variant alternates two
phases per iteration: every hyperedge takes the most frequent label of
its members, then every vertex takes the most frequent label of its
incident hyperedges (each counted once).

Both start from unique per-vertex labels, break frequency ties
uniformly at random from the seeded source, shuffle processing order
every iteration, and stop after a sweep that changes no vertex label
or after ``max_iterations`` sweeps.  Fixed seed means bit-identical
output.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass

from .errors import DomainMismatchError, EmptyDomainError
from .hypercore import Hypergraph
from .partition import Partition
from .views import MaterializedGraph, TwoSectionView

__all__ = [
    "LpConfig",
    "graph_label_propagation",
    "hypergraph_label_propagation",
    "nmi",
]


@dataclass
class LpConfig:
    max_iterations: int = 100
    seed: int = 0
    shuffle_order: bool = True

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


def _argmax_label(counts: Counter[int] | dict[int, float], rng: random.Random) -> int:
    best = max(counts.values())
    candidates = sorted(lab for lab, c in counts.items() if c == best)
    if len(candidates) == 1:
        return candidates[0]
    return candidates[rng.randrange(len(candidates))]


def graph_label_propagation(
    g: MaterializedGraph | TwoSectionView, config: LpConfig | None = None
) -> tuple[Partition, int]:
    """Weighted label propagation on a graph.

    Returns the final partition and the number of sweeps executed
    (counting the final unchanged one).  Isolated nodes keep their
    initial unique labels.
    """
    cfg = config or LpConfig()
    rng = random.Random(cfg.seed)
    if isinstance(g, MaterializedGraph):
        adjacency = g.adjacency()
        neighbors = adjacency.__getitem__
    elif isinstance(g, TwoSectionView):
        neighbors = g.neighbors
    else:
        raise TypeError(f"expected a graph, got {type(g).__name__}")
    nodes = list(range(1, g.n_nodes + 1))
    labels = {v: v for v in nodes}
    if not nodes:
        return Partition({}), 0
    order = list(nodes)
    iterations = 0
    for iterations in range(1, cfg.max_iterations + 1):
        if cfg.shuffle_order:
            rng.shuffle(order)
        changed = False
        for v in order:
            counts: dict[int, float] = {}
            for u, w in neighbors(v).items():
                lab = labels[u]
                counts[lab] = counts.get(lab, 0.0) + w
            if not counts:
                continue
            new = _argmax_label(counts, rng)
            if new != labels[v]:
                labels[v] = new
                changed = True
        if not changed:
            break
    return Partition(labels), iterations


def hypergraph_label_propagation(
    h: Hypergraph, config: LpConfig | None = None
) -> tuple[Partition, int]:
    """Two-phase label propagation on a hypergraph.

    Phase one labels hyperedges from current vertex labels; phase two
    relabels vertices from the fresh hyperedge labels.  Isolated
    vertices and empty hyperedges never change.
    """
    cfg = config or LpConfig()
    rng = random.Random(cfg.seed)
    vlabels = {v: v for v in h.vertices()}
    elabels: dict[int, int | None] = {e: None for e in h.hyperedges()}
    if not vlabels:
        return Partition({}), 0
    vorder = list(h.vertices())
    eorder = list(h.hyperedges())
    iterations = 0
    for iterations in range(1, cfg.max_iterations + 1):
        if cfg.shuffle_order:
            rng.shuffle(eorder)
            rng.shuffle(vorder)
        for e in eorder:
            members = h._he2v[e - 1]
            if not members:
                continue
            counts = Counter(vlabels[v] for v in members)
            elabels[e] = _argmax_label(counts, rng)
        changed = False
        for v in vorder:
            incident = h._v2he[v - 1]
            if not incident:
                continue
            counts = Counter(elabels[e] for e in incident)
            new = _argmax_label(counts, rng)
            if new != vlabels[v]:
                vlabels[v] = new
                changed = True
        if not changed:
            break
    return Partition(vlabels), iterations


# --- partition comparison -------------------------------------------------------


def _entropy_terms(counts: list[int], n: int) -> list[float]:
    return [(c / n) * math.log(n / c) for c in counts]


def nmi(x: Partition, y: Partition) -> float:
    """Normalized mutual information between two partitions.

    Natural-log mutual information scaled by the mean of the two
    entropies: 2 I(X,Y) / (H(X) + H(Y)).  Equals 1 for identical
    partitions (including two trivial ones, by convention) and 0 for
    independent ones.  Both partitions must cover the same nonempty
    vertex set.
    """
    if x.vertices() != y.vertices():
        raise DomainMismatchError("partitions cover different vertex sets")
    vertices = x.labels.keys()
    n = len(x.labels)
    if n == 0:
        raise EmptyDomainError("cannot compare partitions of nothing")
    xc = Counter(x.labels.values())
    yc = Counter(y.labels.values())
    joint = Counter((x.labels[v], y.labels[v]) for v in vertices)
    hx = math.fsum(sorted(_entropy_terms(list(xc.values()), n)))
    hy = math.fsum(sorted(_entropy_terms(list(yc.values()), n)))
    if hx + hy == 0.0:
        return 1.0
    # c*n and the marginal product are exact integers, so each term is
    # the correctly rounded p*log(p / (px*py)); identical partitions
    # reproduce the entropy terms bit for bit.
    terms = [
        (c / n) * math.log((c * n) / (xc[a] * yc[b]))
        for (a, b), c in joint.items()
    ]
    mi = math.fsum(sorted(terms))
    return min(1.0, max(0.0, 2.0 * mi / (hx + hy)))
