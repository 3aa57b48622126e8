"""Shared fixtures generators and independent reference implementations.

The reference implementations here deliberately avoid the package's
code paths: betweenness is recomputed from scratch (both a separate
textbook implementation and an exact path enumerator), and both
modularity scores are evaluated directly from their definitions in
exact rational arithmetic.
"""

from __future__ import annotations

import random
from collections import deque
from fractions import Fraction

from hgkit import Hypergraph, Partition, connected_components

# --- random structures ---------------------------------------------------------


def random_hypergraph(
    rng: random.Random,
    max_n: int = 10,
    max_k: int = 8,
    weighted: bool = False,
    allow_empty: bool = True,
) -> Hypergraph:
    """Random sparse hypergraph, possibly with empty hyperedges and
    isolated vertices."""
    n = rng.randint(0 if allow_empty else 1, max_n)
    k = rng.randint(0, max_k)
    h = Hypergraph(n, k)
    for e in range(1, k + 1):
        if n == 0:
            break
        size = rng.randint(0, min(n, 5))
        for v in rng.sample(range(1, n + 1), size):
            h.set_weight(v, e, rng.choice((0.5, 1.0, 2.0, 3.25)) if weighted else 1.0)
    return h


def random_json_meta(rng: random.Random):
    choices = (
        None,
        "plain text",
        42,
        1.5,
        True,
        ["a", 1, None],
        {"nested": {"deep": [1, 2]}, "flag": False},
    )
    return rng.choice(choices)


def random_partition(rng: random.Random, vertices, max_labels: int = 4) -> Partition:
    labels = {v: rng.randint(1, max_labels) for v in vertices}
    return Partition(labels)


def planted_two_cluster(
    seed: int,
    group: int = 20,
    edges_per_group: int = 30,
    size_range: tuple[int, int] = (10, 16),
) -> tuple[Hypergraph, Partition]:
    """Two vertex-disjoint groups of heavily overlapping hyperedges.

    Resamples (deterministically) until each group is one connected
    component, then returns the hypergraph with the ground truth.
    """
    rng = random.Random(seed)
    while True:
        h = Hypergraph(2 * group, 0)
        for g in (0, 1):
            pool = list(range(g * group + 1, (g + 1) * group + 1))
            for _ in range(edges_per_group):
                h.add_hyperedge(rng.sample(pool, rng.randint(*size_range)))
        components = connected_components(h)
        if len(components) == 2 and all(len(c) == group for c in components):
            return h, Partition.from_communities(components)


# --- independent two-section assembly ---------------------------------------------


def two_section_adjacency(h: Hypergraph) -> dict[int, dict[int, int]]:
    """Pair co-occurrence counts assembled directly from hyperedge lists."""
    adj: dict[int, dict[int, int]] = {v: {} for v in h.vertices()}
    for e in h.hyperedges():
        members = sorted(h.get_vertices(e))
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                adj[u][v] = adj[u].get(v, 0) + 1
                adj[v][u] = adj[v].get(u, 0) + 1
    return adj


# --- reference betweenness ----------------------------------------------------------


def textbook_betweenness(adj: dict[int, dict[int, int] | set[int]]) -> dict[int, float]:
    """Classic shortest-path betweenness, accumulation style, written
    against a plain adjacency mapping.  Unordered pairs, unnormalized."""
    nodes = sorted(adj)
    score = {v: 0.0 for v in nodes}
    for s in nodes:
        stack: list[int] = []
        pred: dict[int, list[int]] = {v: [] for v in nodes}
        npaths = {v: 0 for v in nodes}
        npaths[s] = 1
        depth = {v: -1 for v in nodes}
        depth[s] = 0
        frontier = deque([s])
        while frontier:
            v = frontier.popleft()
            stack.append(v)
            for w in adj[v]:
                if depth[w] < 0:
                    depth[w] = depth[v] + 1
                    frontier.append(w)
                if depth[w] == depth[v] + 1:
                    npaths[w] += npaths[v]
                    pred[w].append(v)
        credit = {v: 0.0 for v in nodes}
        while stack:
            w = stack.pop()
            for v in pred[w]:
                credit[v] += npaths[v] / npaths[w] * (1.0 + credit[w])
            if w != s:
                score[w] += credit[w]
    return {v: x / 2.0 for v, x in score.items()}


def enumerated_betweenness(adj: dict[int, dict[int, int] | set[int]]) -> dict[int, Fraction]:
    """Betweenness by listing every geodesic explicitly (exact)."""
    nodes = sorted(adj)
    score = {v: Fraction(0) for v in nodes}
    for i, x in enumerate(nodes):
        dist = {x: 0}
        frontier = deque([x])
        while frontier:
            a = frontier.popleft()
            for b in adj[a]:
                if b not in dist:
                    dist[b] = dist[a] + 1
                    frontier.append(b)
        for y in nodes[i + 1 :]:
            if y not in dist or x == y:
                continue

            def all_geodesics(cur: int) -> list[tuple[int, ...]]:
                if cur == y:
                    return [(y,)]
                paths = []
                for nxt in adj[cur]:
                    if dist.get(nxt) == dist[cur] + 1 and dist[nxt] <= dist[y]:
                        for tail in all_geodesics(nxt):
                            paths.append((cur,) + tail)
                return paths

            geodesics = [p for p in all_geodesics(x) if p[-1] == y]
            total = len(geodesics)
            if total == 0:
                continue
            passes: dict[int, int] = {}
            for p in geodesics:
                for mid in p[1:-1]:
                    passes[mid] = passes.get(mid, 0) + 1
            for mid, cnt in passes.items():
                score[mid] += Fraction(cnt, total)
    return score


# --- reference modularity -------------------------------------------------------------


def hyper_modularity_exact(h: Hypergraph, partition: Partition) -> Fraction:
    """Strict hypergraph modularity straight from the definition."""
    labels = partition.labels
    nonempty = [e for e in h.hyperedges() if h.hyperedge_size(e) > 0]
    m = len(nonempty)
    blocks = partition.communities()
    covered = 0
    for e in nonempty:
        members = set(h.get_vertices(e))
        if any(members <= block for block in blocks.values()):
            covered += 1
    volume = {lab: 0 for lab in blocks}
    total = 0
    for v in h.vertices():
        d = h.degree(v)
        volume[labels[v]] += d
        total += d
    q = Fraction(covered, m)
    sizes: dict[int, int] = {}
    for e in nonempty:
        d = h.hyperedge_size(e)
        sizes[d] = sizes.get(d, 0) + 1
    for d, count in sizes.items():
        q -= Fraction(count, m) * sum(
            Fraction(volume[lab], total) ** d for lab in blocks
        )
    return q


def newman_modularity_exact(
    n_nodes: int, edges: list[tuple[int, int, int]], partition: Partition
) -> Fraction:
    """Newman modularity via the full pairwise sum with integer weights."""
    labels = partition.labels
    weight: dict[tuple[int, int], int] = {}
    for u, v, w in edges:
        weight[(u, v)] = weight.get((u, v), 0) + int(w)
        weight[(v, u)] = weight.get((v, u), 0) + int(w)
    strength = {u: 0 for u in range(1, n_nodes + 1)}
    for (u, _), w in weight.items():
        strength[u] += w
    two_m = sum(strength.values())
    q = Fraction(0)
    for u in range(1, n_nodes + 1):
        for v in range(1, n_nodes + 1):
            if labels[u] != labels[v]:
                continue
            a = weight.get((u, v), 0)
            q += Fraction(a, 1) - Fraction(strength[u] * strength[v], two_m)
    return q / two_m


# --- misc -------------------------------------------------------------------------------


def hypergraph_from_edges(n: int, edges: list[tuple[int, ...]]) -> Hypergraph:
    h = Hypergraph(n, 0)
    for members in edges:
        h.add_hyperedge(members)
    return h
