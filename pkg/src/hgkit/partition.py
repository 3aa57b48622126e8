"""Vertex partitions: every vertex gets exactly one community label.

Serialized forms:

* JSON - object mapping label -> sorted list of vertex ids
* CSV  - header ``vertex,label``, one row per vertex, sorted by vertex
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Mapping

from .errors import FormatError

__all__ = ["Partition"]


class Partition:
    """Immutable-by-convention map of vertex id -> community label."""

    __slots__ = ("labels",)

    def __init__(self, labels: Mapping[int, int]) -> None:
        self.labels: dict[int, int] = dict(labels)

    @classmethod
    def from_communities(cls, communities: Iterable[Iterable[int]]) -> "Partition":
        labels: dict[int, int] = {}
        for idx, block in enumerate(communities, start=1):
            for v in block:
                if v in labels:
                    raise ValueError(f"vertex {v} appears in two communities")
                labels[v] = idx
        return cls(labels)

    def vertices(self) -> set[int]:
        return set(self.labels)

    def communities(self) -> dict[int, set[int]]:
        """Label -> set of member vertices."""
        blocks: dict[int, set[int]] = {}
        for v, lab in self.labels.items():
            blocks.setdefault(lab, set()).add(v)
        return blocks

    @property
    def community_count(self) -> int:
        return len(set(self.labels.values()))

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.labels == other.labels

    def same_blocks(self, other: "Partition") -> bool:
        """True when the two partitions induce the same communities,
        ignoring the label values themselves."""
        if self.vertices() != other.vertices():
            return False
        mine = sorted(frozenset(b) for b in self.communities().values())
        theirs = sorted(frozenset(b) for b in other.communities().values())
        return mine == theirs

    def __repr__(self) -> str:
        return f"Partition(vertices={len(self.labels)}, communities={self.community_count})"

    # --- serialization -------------------------------------------------------

    def to_json_text(self) -> str:
        blocks = {
            str(lab): sorted(members)
            for lab, members in sorted(self.communities().items())
        }
        return json.dumps(blocks, indent=2) + "\n"

    @classmethod
    def from_json_text(cls, text: str) -> "Partition":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"partition JSON unparseable: {exc}") from None
        if not isinstance(obj, dict):
            raise FormatError("partition JSON must be an object of label -> [vertex]")
        labels: dict[int, int] = {}
        for key, members in obj.items():
            try:
                lab = int(key)
            except ValueError:
                raise FormatError(f"partition label {key!r} is not an integer") from None
            if not isinstance(members, list):
                raise FormatError(f"community {key!r} must be a list of vertex ids")
            for v in members:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise FormatError(f"vertex id {v!r} is not an integer")
                if v in labels:
                    raise FormatError(f"vertex {v} labeled twice")
                labels[v] = lab
        return cls(labels)

    def to_csv_text(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["vertex", "label"])
        for v in sorted(self.labels):
            writer.writerow([v, self.labels[v]])
        return out.getvalue()

    @classmethod
    def from_csv_text(cls, text: str) -> "Partition":
        reader = csv.reader(io.StringIO(text))
        rows = [row for row in reader if row]
        if not rows or [c.strip() for c in rows[0]] != ["vertex", "label"]:
            raise FormatError("partition CSV must start with header vertex,label")
        labels: dict[int, int] = {}
        for row in rows[1:]:
            if len(row) != 2:
                raise FormatError(f"partition CSV row {row!r} must have two fields")
            try:
                v, lab = int(row[0]), int(row[1])
            except ValueError:
                raise FormatError(f"partition CSV row {row!r} is not integer,integer") from None
            if v in labels:
                raise FormatError(f"vertex {v} labeled twice")
            labels[v] = lab
        return cls(labels)
