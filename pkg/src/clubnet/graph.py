"""Immutable simple undirected graphs with node attributes and CSV ingestion.

Nodes carry an external string id plus optional attributes (name, country,
sector, rank).  Internally nodes are dense integers 0..n-1 assigned in
sorted external-id order, so dense order and external lexicographic order
coincide; this makes every downstream algorithm trivially independent of
input edge ordering.
"""

from __future__ import annotations

import csv
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

INFINITE = math.inf


class IngestError(ValueError):
    """Malformed input; carries the offending 1-based line/record number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class NodeAttrs:
    name: str = ""
    country: str = ""
    sector: str = ""
    rank: int | None = None


class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    Immutable after construction; safe to share across threads.
    """

    def __init__(self, ids, adj, attrs, multiplicity, self_loop_count=0):
        self._ids: tuple[str, ...] = tuple(ids)
        self._index: dict[str, int] = {s: i for i, s in enumerate(self._ids)}
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self._attrs: tuple[NodeAttrs, ...] = tuple(attrs)
        # multiplicity: collapsed duplicate-row count per edge, reporting only
        self._multiplicity: dict[tuple[int, int], int] = dict(multiplicity)
        self.self_loop_count = self_loop_count

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._ids)

    def node_ids(self) -> tuple[str, ...]:
        return self._ids

    def index_of(self, node: str) -> int:
        try:
            return self._index[node]
        except KeyError:
            raise ValueError(f"unknown node id: {node!r}") from None

    def id_of(self, i: int) -> str:
        return self._ids[i]

    def attrs(self, node: str) -> NodeAttrs:
        return self._attrs[self.index_of(node)]

    def edges(self) -> list[tuple[str, str]]:
        out = []
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    out.append((self._ids[u], self._ids[v]))
        return sorted(out)

    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def has_edge(self, u: str, v: str) -> bool:
        return self.index_of(v) in self._adj[self.index_of(u)]

    def multiplicity(self, u: str, v: str) -> int:
        i, j = self.index_of(u), self.index_of(v)
        return self._multiplicity.get((min(i, j), max(i, j)), 0)

    def degree(self, node: str) -> int:
        return len(self._adj[self.index_of(node)])

    # dense adjacency, for algorithm modules
    def adj_dense(self) -> tuple[frozenset[int], ...]:
        return self._adj

    # -- neighborhoods -----------------------------------------------------

    def neighbors(self, node: str) -> tuple[str, ...]:
        """Open neighborhood, sorted by external id."""
        i = self.index_of(node)
        return tuple(self._ids[j] for j in sorted(self._adj[i]))

    def ego_network(self, node: str) -> frozenset[str]:
        """Closed neighborhood N[v]."""
        i = self.index_of(node)
        return frozenset(self._ids[j] for j in self._adj[i]) | {node}

    # -- derived graphs ----------------------------------------------------

    def induced(self, nodes: Iterable[str]) -> "Graph":
        """Subgraph on `nodes` with exactly the edges inside that set."""
        keep = sorted(set(nodes))
        dense = [self.index_of(s) for s in keep]
        dense_set = set(dense)
        remap = {old: new for new, old in enumerate(dense)}
        adj = [frozenset(remap[w] for w in self._adj[old] if w in dense_set)
               for old in dense]
        attrs = [self._attrs[old] for old in dense]
        mult = {}
        for (a, b), m in self._multiplicity.items():
            if a in dense_set and b in dense_set:
                i, j = remap[a], remap[b]
                mult[(min(i, j), max(i, j))] = m
        return Graph(keep, adj, attrs, mult)

    def _with_edges(self, edges_dense: set[tuple[int, int]]) -> "Graph":
        """Same nodes and attributes, different edge set (dense pairs)."""
        adj = [set() for _ in range(self.n)]
        for u, v in edges_dense:
            adj[u].add(v)
            adj[v].add(u)
        mult = {e: m for e, m in self._multiplicity.items() if e in edges_dense}
        return Graph(self._ids, adj, self._attrs, mult)

    # -- metrics -------------------------------------------------------------

    def _bfs_dense(self, src: int) -> list[int]:
        dist = [-1] * self.n
        dist[src] = 0
        q = deque([src])
        while q:
            u = q.popleft()
            for w in self._adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return dist

    def distances(self, node: str) -> dict[str, int | float]:
        dist = self._bfs_dense(self.index_of(node))
        return {self._ids[i]: (d if d >= 0 else INFINITE)
                for i, d in enumerate(dist)}

    def diameter(self) -> int | float:
        """Longest shortest-path distance; INFINITE if disconnected."""
        if self.n == 0:
            raise ValueError("diameter of an empty graph is undefined")
        best = 0
        for src in range(self.n):
            dist = self._bfs_dense(src)
            for d in dist:
                if d < 0:
                    return INFINITE
                best = max(best, d)
        return best

    def connected_components(self) -> list[frozenset[str]]:
        """Partition into components, largest first, ties by smallest id."""
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            q = deque([start])
            while q:
                u = q.popleft()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        q.append(w)
            comps.append(frozenset(self._ids[i] for i in comp))
        comps.sort(key=lambda c: (-len(c), min(c)))
        return comps

    # -- equality (used by tests) --------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._ids == other._ids and self._adj == other._adj
                and self._attrs == other._attrs)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def load_graph(edge_records: Iterable[Sequence],
               node_records: Iterable[dict] | None = None,
               strict: bool = False) -> Graph:
    """Build a Graph from raw edge rows and optional attribute rows.

    Edge rows are (source, target) or (source, target, weight).  Duplicate
    edges collapse to one (the collapsed count is kept as an annotation),
    zero-weight edges are dropped, self-loops are dropped and counted.
    Nodes appearing only in node_records become isolated nodes unless
    `strict` is set, in which case they are an error.
    """
    edge_multiplicity: dict[frozenset, int] = {}
    edge_nodes: set[str] = set()
    self_loops = 0
    for lineno, row in enumerate(edge_records, start=1):
        if len(row) not in (2, 3):
            raise IngestError(f"expected 2 or 3 fields, got {len(row)}", lineno)
        src, dst = row[0], row[1]
        if not isinstance(src, str) or not isinstance(dst, str) or not src or not dst:
            raise IngestError("node ids must be non-empty strings", lineno)
        weight = 1.0
        if len(row) == 3 and row[2] not in ("", None):
            try:
                weight = float(row[2])
            except (TypeError, ValueError):
                raise IngestError(f"bad weight {row[2]!r}", lineno) from None
            if weight < 0:
                raise IngestError(f"negative weight {weight}", lineno)
        edge_nodes.add(src)
        edge_nodes.add(dst)
        if src == dst:
            self_loops += 1
            continue
        if weight == 0:
            continue
        key = frozenset((src, dst))
        edge_multiplicity[key] = edge_multiplicity.get(key, 0) + 1

    attr_by_id: dict[str, NodeAttrs] = {}
    if node_records is not None:
        for lineno, rec in enumerate(node_records, start=1):
            node = rec.get("id", "")
            if not node:
                raise IngestError("missing node id", lineno)
            if strict and node not in edge_nodes:
                raise IngestError(f"attribute row for unknown node {node!r}",
                                  lineno)
            rank = rec.get("rank")
            if rank in ("", None):
                rank = None
            else:
                try:
                    rank = int(rank)
                except (TypeError, ValueError):
                    raise IngestError(f"bad rank {rank!r}", lineno) from None
                if rank <= 0:
                    raise IngestError(f"rank must be positive, got {rank}",
                                      lineno)
            attr_by_id[node] = NodeAttrs(name=rec.get("name", "") or "",
                                         country=rec.get("country", "") or "",
                                         sector=rec.get("sector", "") or "",
                                         rank=rank)

    ids = sorted(edge_nodes | set(attr_by_id))
    index = {s: i for i, s in enumerate(ids)}
    adj = [set() for _ in ids]
    mult = {}
    for key, m in edge_multiplicity.items():
        a, b = sorted(index[s] for s in key)
        adj[a].add(b)
        adj[b].add(a)
        mult[(a, b)] = m
    attrs = [attr_by_id.get(s, NodeAttrs()) for s in ids]
    return Graph(ids, adj, attrs, mult, self_loop_count=self_loops)


def read_edges_csv(path) -> list[tuple]:
    """Read `source,target[,weight]` rows; header required."""
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            return rows
        header = [h.strip().lower() for h in header]
        if header[:2] != ["source", "target"]:
            raise IngestError("expected header source,target[,weight]", 1)
        for lineno, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) not in (2, 3):
                raise IngestError(f"expected 2 or 3 fields, got {len(row)}",
                                  lineno)
            rows.append(tuple(f.strip() for f in row))
    return rows


def read_nodes_csv(path) -> list[dict]:
    """Read `id,name,country,sector[,rank]` rows; header required."""
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            return rows
        fields = [f.strip().lower() for f in reader.fieldnames]
        if "id" not in fields:
            raise IngestError("nodes file needs an `id` column", 1)
        for lineno, rec in enumerate(reader, start=2):
            clean = {k.strip().lower(): (v or "").strip()
                     for k, v in rec.items() if k is not None}
            if not clean.get("id"):
                raise IngestError("missing node id", lineno)
            rows.append(clean)
    return rows
