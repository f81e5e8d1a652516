"""Persisted, queryable collection of the classified 2-clubs of a network.

Records are one JSON object per line behind a comment header, sorted by
(borough_id, size descending, club_id); club ids are a stable 64-bit hash
of the sorted member list, so the same node set always gets the same id.
"""

from __future__ import annotations

import csv
import hashlib
import json
import statistics
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable

from .borough import Borough
from .classify import ClassifiedClub
from .graph import Graph

_HEADER = "# clubnet clubs v1"
_FIELDS = ("club_id", "borough_id", "type", "size", "nodes",
           "central_nodes", "central_pairs", "countries")


def club_id_for(nodes: Iterable[str]) -> str:
    data = "\x1f".join(sorted(nodes)).encode("utf-8")
    return hashlib.blake2b(data, digest_size=8).hexdigest()


@dataclass(frozen=True)
class ClubRecord:
    club_id: str
    borough_id: int
    type: str
    size: int
    nodes: tuple[str, ...]
    central_nodes: tuple[str, ...]
    central_pairs: tuple[tuple[str, str], ...]
    countries: tuple[str, ...]  # one entry per member (a multiset)

    def to_json(self) -> str:
        doc = {
            "club_id": self.club_id,
            "borough_id": self.borough_id,
            "type": self.type,
            "size": self.size,
            "nodes": list(self.nodes),
            "central_nodes": list(self.central_nodes),
            "central_pairs": [list(p) for p in self.central_pairs],
            "countries": list(self.countries),
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str, line: int | None = None) -> "ClubRecord":
        try:
            doc = json.loads(text)
            return cls(
                club_id=doc["club_id"],
                borough_id=int(doc["borough_id"]),
                type=doc["type"],
                size=int(doc["size"]),
                nodes=tuple(doc["nodes"]),
                central_nodes=tuple(doc["central_nodes"]),
                central_pairs=tuple(tuple(p) for p in doc["central_pairs"]),
                countries=tuple(doc["countries"]),
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            where = f"line {line}: " if line is not None else ""
            raise StoreFormatError(f"{where}bad club record: {exc}") from None


class StoreFormatError(ValueError):
    pass


def record_for(classified: ClassifiedClub, g: Graph) -> ClubRecord:
    nodes = classified.nodes
    countries = tuple(sorted(g.attrs(v).country for v in nodes))
    return ClubRecord(
        club_id=club_id_for(nodes),
        borough_id=classified.club.borough_id,
        type=classified.type.value,
        size=len(nodes),
        nodes=nodes,
        central_nodes=classified.central_nodes,
        central_pairs=classified.central_pairs,
        countries=countries,
    )


def _store_order(r: ClubRecord):
    return (r.borough_id, -r.size, r.club_id)


def persist(records: list[ClubRecord], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_HEADER + "\n")
        for r in sorted(records, key=_store_order):
            fh.write(r.to_json() + "\n")


def load(path) -> list[ClubRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            records.append(ClubRecord.from_json(line, line=lineno))
    return records


@dataclass
class ClubQuery:
    types: set[str] | None = None
    min_size: int | None = None
    max_size: int | None = None
    contains_all: set[str] | None = None
    contains_any: set[str] | None = None
    borough_id: int | None = None
    country_majority: str | None = None  # strict majority of members


class ClubStore:
    """In-memory, read-only view over club records.

    `known_nodes`, when given, is the node universe used to validate query
    filters (a node in no club is still a legal filter value).
    """

    def __init__(self, records: Iterable[ClubRecord],
                 known_nodes: Iterable[str] | None = None):
        self.records: list[ClubRecord] = sorted(records, key=_store_order)
        self.known_nodes = frozenset(known_nodes) if known_nodes is not None else None
        seen: dict[str, tuple] = {}
        for r in self.records:
            if r.club_id in seen and seen[r.club_id] != r.nodes:
                raise StoreFormatError(f"club_id collision: {r.club_id}")
            seen[r.club_id] = r.nodes

    @classmethod
    def from_file(cls, path, known_nodes=None) -> "ClubStore":
        return cls(load(path), known_nodes=known_nodes)

    def __len__(self):
        return len(self.records)

    def by_id(self, club_id: str) -> ClubRecord:
        for r in self.records:
            if r.club_id == club_id:
                return r
        raise KeyError(club_id)

    def _check_nodes(self, nodes):
        if self.known_nodes is None:
            return
        unknown = set(nodes) - self.known_nodes
        if unknown:
            raise ValueError(f"unknown node ids in filter: {sorted(unknown)}")

    def query(self, q: ClubQuery) -> list[ClubRecord]:
        if q.contains_all:
            self._check_nodes(q.contains_all)
        if q.contains_any:
            self._check_nodes(q.contains_any)
        out = []
        for r in self.records:
            if q.types is not None and r.type not in q.types:
                continue
            if q.min_size is not None and r.size < q.min_size:
                continue
            if q.max_size is not None and r.size > q.max_size:
                continue
            if q.borough_id is not None and r.borough_id != q.borough_id:
                continue
            if q.contains_all and not set(q.contains_all) <= set(r.nodes):
                continue
            if q.contains_any and not set(q.contains_any) & set(r.nodes):
                continue
            if q.country_majority is not None:
                if 2 * r.countries.count(q.country_majority) <= r.size:
                    continue
            out.append(r)
        return out


def round_pct(count: int, total: int) -> float:
    """Percentage with one decimal, round-half-up."""
    if total == 0:
        raise ValueError("percentage of an empty total")
    pct = Decimal(100 * count) / Decimal(total)
    return float(pct.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class TypeRow:
    count: int
    node_coverage_pct: float
    median_size: float | None


@dataclass(frozen=True)
class TypeStats:
    per_type: dict[str, TypeRow]
    total: TypeRow


def stats(store: ClubStore, borough: Borough) -> TypeStats:
    """Per-type club counts, borough node coverage, and size medians."""
    if not borough.nodes:
        raise ValueError("empty borough")
    records = store.query(ClubQuery(borough_id=borough.id))
    per_type = {}
    for kind in ("coterie", "social_circle", "hamlet"):
        rs = [r for r in records if r.type == kind]
        covered = set().union(*(set(r.nodes) for r in rs)) if rs else set()
        per_type[kind] = TypeRow(
            count=len(rs),
            node_coverage_pct=round_pct(len(covered & borough.nodes),
                                        len(borough.nodes)),
            median_size=statistics.median([r.size for r in rs]) if rs else None,
        )
    covered = set().union(*(set(r.nodes) for r in records)) if records else set()
    total = TypeRow(
        count=len(records),
        node_coverage_pct=round_pct(len(covered & borough.nodes),
                                    len(borough.nodes)),
        median_size=(statistics.median([r.size for r in records])
                     if records else None),
    )
    return TypeStats(per_type=per_type, total=total)


def write_stats_csv(s: TypeStats, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["type", "count", "node_coverage_pct", "median_size"])
        for kind, row in s.per_type.items():
            w.writerow([kind, row.count, row.node_coverage_pct,
                        "" if row.median_size is None else row.median_size])
        w.writerow(["total", s.total.count, s.total.node_coverage_pct,
                    "" if s.total.median_size is None else s.total.median_size])
