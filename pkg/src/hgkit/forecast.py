"""Rating forecasts from hypergraph and two-section neighborhoods.

Given a per-vertex rating table, each vertex gets up to two predicted
values:

* hypergraph route - average, over its incident hyperedges with at
  least two members, of the mean rating of the other members
* graph route - co-occurrence-weighted mean of its two-section
  neighbors' ratings

A vertex with no usable hyperedge (or no neighbor) gets None.
"""

from __future__ import annotations

from math import fsum
from typing import Mapping

from .errors import DomainMismatchError, EmptyEvaluationSetError
from .hypercore import Hypergraph
from .views import TwoSectionView

__all__ = [
    "forecast_hypergraph",
    "forecast_graph",
    "average_error",
    "evaluation_size",
]

Predictions = dict[int, "float | None"]


def _check_ratings(ratings: Mapping[int, float], n: int) -> None:
    missing = [v for v in range(1, n + 1) if v not in ratings]
    if missing:
        raise DomainMismatchError(f"ratings missing for vertices {missing[:5]}")


def forecast_hypergraph(h: Hypergraph, ratings: Mapping[int, float]) -> Predictions:
    """Predict each vertex's rating from its hyperedge neighborhoods."""
    _check_ratings(ratings, h.nhv)
    out: Predictions = {}
    for u in h.vertices():
        per_edge: list[float] = []
        for e in h._v2he[u - 1]:
            members = h._he2v[e - 1]
            if len(members) < 2:
                continue
            others = [ratings[v] for v in members if v != u]
            per_edge.append(fsum(others) / len(others))
        out[u] = fsum(per_edge) / len(per_edge) if per_edge else None
    return out


def forecast_graph(
    g: Hypergraph | TwoSectionView, ratings: Mapping[int, float]
) -> Predictions:
    """Predict each vertex's rating from its weighted two-section neighbors."""
    view = TwoSectionView(g) if isinstance(g, Hypergraph) else g
    _check_ratings(ratings, view.n_nodes)
    out: Predictions = {}
    for u in view.nodes():
        nbrs = view.neighbors(u)
        if not nbrs:
            out[u] = None
            continue
        weight = fsum(float(w) for w in nbrs.values())
        out[u] = fsum(ratings[v] * w for v, w in nbrs.items()) / weight
    return out


def evaluation_size(predictions: Predictions) -> int:
    """Number of vertices with a defined prediction."""
    return sum(1 for p in predictions.values() if p is not None)


def average_error(predictions: Predictions, ratings: Mapping[int, float]) -> float:
    """Mean absolute error over the vertices with defined predictions."""
    errors = [
        abs(ratings[v] - p) for v, p in predictions.items() if p is not None
    ]
    if not errors:
        raise EmptyEvaluationSetError("no vertex received a defined prediction")
    return fsum(errors) / len(errors)
