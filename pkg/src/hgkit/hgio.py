"""Serialization and dataset ingestion.

Text format (HGF)
    Header line ``n k``, then exactly k lines, one per hyperedge, each
    a single-space-joined list of ``vertex=weight`` tokens in vertex
    order.  Weights are written in shortest round-trip float form (so
    they always carry a decimal point or an exponent).  An empty
    hyperedge is an empty line.  Metadata is not part of this format.
    Readers tolerate extra blanks between tokens.

JSON format
    Object with ``format_version`` (1), ``n``, ``k``, ``v2he`` and
    ``he2v`` (arrays of {id: weight} objects, position i holding id
    i+1), and ``vmeta``/``hemeta`` (aligned arrays of arbitrary JSON
    values).  Both incidence directions are stored and must agree.
    Round-trips preserve metadata.

Dataset builders turn review CSVs (``user_id,item_id,stars``) and
scene JSON (array of ``{"id": ..., "members": [...]}``) into
hypergraphs, keeping the external ids as labels and metadata.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Iterable

from .analytics import connected_components
from .errors import (
    BadWeightTokenError,
    DualInconsistencyError,
    IndexOutOfRangeError,
    LineCountMismatchError,
    MalformedHeaderError,
    MalformedRecordError,
    SchemaViolationError,
)
from .hypercore import Hypergraph, IdRemap

__all__ = [
    "FORMAT_VERSION",
    "write_hgf",
    "read_hgf",
    "write_json",
    "read_json",
    "ReviewRecord",
    "SceneRecord",
    "read_reviews_csv",
    "read_scenes_json",
    "build_from_reviews",
    "build_from_scenes",
    "induced_subhypergraph",
    "largest_connected_component",
]

FORMAT_VERSION = 1


# --- HGF text format -----------------------------------------------------------


def write_hgf(h: Hypergraph) -> str:
    lines = [f"{h.nhv} {h.nhe}"]
    for e in h.hyperedges():
        members = h._he2v[e - 1]
        lines.append(" ".join(f"{v}={members[v]!r}" for v in sorted(members)))
    return "\n".join(lines) + "\n"


def read_hgf(text: str) -> Hypergraph:
    lines = text.splitlines()
    if not lines:
        raise MalformedHeaderError("missing header line")
    header = lines[0].split()
    if len(header) != 2:
        raise MalformedHeaderError(f"header must be two integers, got {lines[0]!r}")
    try:
        n, k = int(header[0]), int(header[1])
    except ValueError:
        raise MalformedHeaderError(
            f"header must be two integers, got {lines[0]!r}"
        ) from None
    if n < 0 or k < 0:
        raise MalformedHeaderError("vertex and hyperedge counts must be non-negative")
    body = lines[1:]
    if len(body) != k:
        raise LineCountMismatchError(
            f"expected {k} hyperedge lines, found {len(body)}"
        )
    h = Hypergraph(n, k)
    for e, line in enumerate(body, start=1):
        for token in line.split():
            left, sep, right = token.partition("=")
            if not sep or not left or not right:
                raise BadWeightTokenError(
                    f"token {token!r} is not of the form vertex=weight"
                )
            try:
                v = int(left)
            except ValueError:
                raise BadWeightTokenError(f"vertex id {left!r} is not an integer") from None
            try:
                w = float(right)
            except ValueError:
                raise BadWeightTokenError(f"weight {right!r} is not a float") from None
            if not math.isfinite(w):
                raise BadWeightTokenError(f"weight {right!r} is not finite")
            if not 1 <= v <= n:
                raise IndexOutOfRangeError(
                    f"vertex {v} outside 1..{n} on hyperedge line {e}"
                )
            h._v2he[v - 1][e] = w
            h._he2v[e - 1][v] = w
    return h


# --- JSON format -----------------------------------------------------------------


def write_json(h: Hypergraph) -> str:
    doc = {
        "format_version": FORMAT_VERSION,
        "n": h.nhv,
        "k": h.nhe,
        "v2he": [
            {str(e): row[e] for e in sorted(row)} for row in h._v2he
        ],
        "he2v": [
            {str(v): col[v] for v in sorted(col)} for col in h._he2v
        ],
        "vmeta": list(h._vmeta),
        "hemeta": list(h._hemeta),
    }
    return json.dumps(doc, indent=2) + "\n"


def _parse_weight_object(obj: object, limit: int, what: str) -> dict[int, float]:
    if not isinstance(obj, dict):
        raise SchemaViolationError(f"{what} entries must be objects")
    out: dict[int, float] = {}
    for key, value in obj.items():
        try:
            ident = int(key)
        except (TypeError, ValueError):
            raise SchemaViolationError(f"{what} key {key!r} is not an integer") from None
        if not 1 <= ident <= limit:
            raise SchemaViolationError(f"{what} id {ident} outside 1..{limit}")
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaViolationError(f"{what} weight {value!r} is not a number")
        w = float(value)
        if not math.isfinite(w):
            raise SchemaViolationError(f"{what} weight {value!r} is not finite")
        out[ident] = w
    return out


def read_json(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolationError(f"document is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaViolationError("document must be a JSON object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise SchemaViolationError(
            f"format_version must be {FORMAT_VERSION}, got {doc.get('format_version')!r}"
        )
    n, k = doc.get("n"), doc.get("k")
    for name, value in (("n", n), ("k", k)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise SchemaViolationError(f"{name} must be a non-negative integer")
    v2he, he2v = doc.get("v2he"), doc.get("he2v")
    if not isinstance(v2he, list) or len(v2he) != n:
        raise SchemaViolationError("v2he must be an array of length n")
    if not isinstance(he2v, list) or len(he2v) != k:
        raise SchemaViolationError("he2v must be an array of length k")
    vmeta = doc.get("vmeta", [None] * n)
    hemeta = doc.get("hemeta", [None] * k)
    if not isinstance(vmeta, list) or len(vmeta) != n:
        raise SchemaViolationError("vmeta must be an array of length n")
    if not isinstance(hemeta, list) or len(hemeta) != k:
        raise SchemaViolationError("hemeta must be an array of length k")
    h = Hypergraph(n, k)
    for v, obj in enumerate(v2he, start=1):
        h._v2he[v - 1] = _parse_weight_object(obj, k, "v2he")
    for e, obj in enumerate(he2v, start=1):
        h._he2v[e - 1] = _parse_weight_object(obj, n, "he2v")
    for v in h.vertices():
        for e, w in h._v2he[v - 1].items():
            if h._he2v[e - 1].get(v) != w:
                raise DualInconsistencyError(
                    f"cell (vertex {v}, hyperedge {e}) differs between directions"
                )
    for e in h.hyperedges():
        for v in h._he2v[e - 1]:
            if e not in h._v2he[v - 1]:
                raise DualInconsistencyError(
                    f"cell (vertex {v}, hyperedge {e}) present in he2v only"
                )
    h._vmeta = list(vmeta)
    h._hemeta = list(hemeta)
    return h


# --- dataset records ---------------------------------------------------------------


@dataclass
class ReviewRecord:
    """One review: a user rated an item with 1..5 stars."""

    user_id: str
    item_id: str
    stars: int

    def __post_init__(self) -> None:
        if not isinstance(self.stars, int) or isinstance(self.stars, bool):
            raise MalformedRecordError(f"stars must be an integer, got {self.stars!r}")
        if not 1 <= self.stars <= 5:
            raise MalformedRecordError(f"stars must be in 1..5, got {self.stars}")


@dataclass
class SceneRecord:
    """One scene: an identifier and the characters appearing in it.

    Members are deduplicated, first occurrence wins; at least one is
    required.
    """

    scene_id: str
    members: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        deduped: list[str] = []
        seen: set[str] = set()
        for m in self.members:
            if m not in seen:
                seen.add(m)
                deduped.append(m)
        if not deduped:
            raise MalformedRecordError(f"scene {self.scene_id!r} has no members")
        self.members = deduped


def read_reviews_csv(text: str) -> list[ReviewRecord]:
    """Parse a review CSV with header ``user_id,item_id,stars``.

    An empty document (or just the header) yields no records.
    """
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if not rows:
        return []
    if [c.strip() for c in rows[0]] != ["user_id", "item_id", "stars"]:
        raise MalformedRecordError(
            "review CSV must start with header user_id,item_id,stars"
        )
    records = []
    for row in rows[1:]:
        if len(row) != 3:
            raise MalformedRecordError(f"review row {row!r} must have three fields")
        try:
            stars = int(row[2])
        except ValueError:
            raise MalformedRecordError(f"stars {row[2]!r} is not an integer") from None
        records.append(ReviewRecord(user_id=row[0], item_id=row[1], stars=stars))
    return records


def read_scenes_json(text: str) -> list[SceneRecord]:
    """Parse scene JSON: an array of {"id": text, "members": [text, ...]}.

    Scenes whose member list is empty are skipped.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedRecordError(f"scene document is not valid JSON: {exc}") from None
    if not isinstance(doc, list):
        raise MalformedRecordError("scene document must be a JSON array")
    records = []
    for entry in doc:
        if not isinstance(entry, dict) or "id" not in entry or "members" not in entry:
            raise MalformedRecordError(f"scene entry {entry!r} needs id and members")
        members = entry["members"]
        if not isinstance(members, list) or not all(isinstance(m, str) for m in members):
            raise MalformedRecordError(f"scene {entry['id']!r} members must be strings")
        if not members:
            continue
        records.append(SceneRecord(scene_id=str(entry["id"]), members=list(members)))
    return records


# --- dataset builders -----------------------------------------------------------------


def build_from_reviews(
    records: Iterable[ReviewRecord], star_filter: Iterable[int] | None = None
) -> tuple[Hypergraph, list[str], list[str]]:
    """One vertex per distinct item, one hyperedge per distinct user.

    With a star filter, only reviews whose star value is in the filter
    survive; users and items left without any surviving review get no
    id.  Duplicate (user, item) pairs collapse to a single membership
    of weight 1.  Returns the hypergraph plus item and user label
    tables (position i-1 labels id i); labels are also stored as
    metadata.
    """
    allowed = None if star_filter is None else set(star_filter)
    item_ids: dict[str, int] = {}
    user_ids: dict[str, int] = {}
    memberships: set[tuple[int, int]] = set()
    for record in records:
        if allowed is not None and record.stars not in allowed:
            continue
        v = item_ids.setdefault(record.item_id, len(item_ids) + 1)
        e = user_ids.setdefault(record.user_id, len(user_ids) + 1)
        memberships.add((v, e))
    h = Hypergraph(len(item_ids), len(user_ids))
    for v, e in memberships:
        h._v2he[v - 1][e] = 1.0
        h._he2v[e - 1][v] = 1.0
    item_labels = sorted(item_ids, key=item_ids.get)
    user_labels = sorted(user_ids, key=user_ids.get)
    h._vmeta = list(item_labels)
    h._hemeta = list(user_labels)
    return h, item_labels, user_labels


def build_from_scenes(
    records: Iterable[SceneRecord],
) -> tuple[Hypergraph, list[str]]:
    """One vertex per distinct character, one hyperedge per scene.

    Returns the hypergraph and the character label table; character
    labels and scene ids are also stored as metadata.
    """
    char_ids: dict[str, int] = {}
    scenes = list(records)
    h = Hypergraph(0, 0)
    for record in scenes:
        for name in record.members:
            if name not in char_ids:
                char_ids[name] = h.add_vertex(meta=name)
    for record in scenes:
        h.add_hyperedge({char_ids[m]: 1.0 for m in record.members}, meta=record.scene_id)
    return h, sorted(char_ids, key=char_ids.get)


# --- component extraction ----------------------------------------------------------------


def induced_subhypergraph(
    h: Hypergraph, keep: Iterable[int]
) -> tuple[Hypergraph, IdRemap, IdRemap]:
    """Restrict to a vertex subset, renumbering ids contiguously.

    Hyperedges keep only surviving members; hyperedges left empty are
    dropped.  Metadata follows the surviving ids.  Returns the new
    hypergraph with vertex and hyperedge remaps {old: new}.
    """
    kept = sorted(set(keep))
    vmap: IdRemap = {old: new for new, old in enumerate(kept, start=1)}
    emap: IdRemap = {}
    sub = Hypergraph(len(kept), 0)
    for new_v, old_v in enumerate(kept, start=1):
        sub._vmeta[new_v - 1] = h._vmeta[old_v - 1]
    for old_e in h.hyperedges():
        members = {
            vmap[v]: w for v, w in h._he2v[old_e - 1].items() if v in vmap
        }
        if not members:
            continue
        new_e = sub.add_hyperedge(members, meta=h._hemeta[old_e - 1])
        emap[old_e] = new_e
    return sub, vmap, emap


def largest_connected_component(h: Hypergraph) -> tuple[Hypergraph, IdRemap]:
    """Extract the largest component (ties: smallest minimum vertex id).

    Returns the component as its own hypergraph and the vertex remap
    {old: new}.  The empty hypergraph maps to itself.
    """
    components = connected_components(h)
    if not components:
        return Hypergraph(0, 0), {}
    champion = max(components, key=lambda c: (len(c), -min(c)))
    sub, vmap, _ = induced_subhypergraph(h, champion)
    return sub, vmap
