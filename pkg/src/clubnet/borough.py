"""Borough decomposition by iterative short-cycle edge peeling.

A borough is a maximal subgraph in which every edge lies on a cycle of
length 3, 4, or 5.  Peeling deletes, in simultaneous rounds, every edge of
the current residual graph that is on no such cycle, until a fixpoint; the
boroughs are the residual components that still carry edges.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class Borough:
    id: int
    nodes: frozenset[str]
    edges: frozenset[tuple[str, str]]

    @property
    def size(self) -> int:
        return len(self.nodes)

    def subgraph(self, g: Graph) -> Graph:
        """The borough proper: its nodes with its residual edges only."""
        sub = g.induced(self.nodes)
        dense_edges = {(sub.index_of(u), sub.index_of(v)) for u, v in self.edges}
        dense_edges = {(min(e), max(e)) for e in dense_edges}
        return sub._with_edges(dense_edges)


def _on_short_cycle(adj, u: int, v: int) -> bool:
    au = adj[u] - {v}
    av = adj[v] - {u}
    if au & av:  # triangle
        return True
    for x in au:
        if (adj[x] & av) - {u, v, x}:  # square: u-x-y-v
            return True
    for x in au:
        for w in adj[x] - {u, v, x}:
            if (adj[w] & av) - {u, v, x, w}:  # pentagon: u-x-w-y-v
                return True
    return False


def edge_on_short_cycle(g: Graph, edge: tuple[str, str]) -> bool:
    """True iff the edge lies on a triangle, square, or pentagon of g."""
    u, v = g.index_of(edge[0]), g.index_of(edge[1])
    if v not in g.adj_dense()[u]:
        raise ValueError(f"no such edge: {edge[0]!r}-{edge[1]!r}")
    return _on_short_cycle(g.adj_dense(), u, v)


def peel(g: Graph) -> Graph:
    """Delete edges off short cycles, in simultaneous rounds, to a fixpoint."""
    adj = [set(a) for a in g.adj_dense()]
    while True:
        doomed = []
        for u in range(len(adj)):
            for v in adj[u]:
                if u < v and not _on_short_cycle(adj, u, v):
                    doomed.append((u, v))
        if not doomed:
            break
        for u, v in doomed:
            adj[u].discard(v)
            adj[v].discard(u)
    edges = {(u, v) for u in range(len(adj)) for v in adj[u] if u < v}
    return g._with_edges(edges)


def boroughs(g: Graph) -> list[Borough]:
    """Edge-bearing components of the peeled graph, largest first."""
    residual = peel(g)
    out = []
    for comp in residual.connected_components():
        if len(comp) < 3:
            continue
        members = sorted(comp)
        edges = frozenset(
            (u, v)
            for u in members
            for v in residual.neighbors(u)
            if u < v
        )
        if not edges:
            continue
        out.append((frozenset(comp), edges))
    out.sort(key=lambda b: (-len(b[0]), min(b[0])))
    result = [Borough(i, nodes, edges) for i, (nodes, edges) in enumerate(out)]
    for b in result:
        _verify(g, b)
    return result


def _verify(g: Graph, b: Borough) -> None:
    sub = g.induced(b.nodes)
    for u, v in b.edges:
        if not edge_on_short_cycle(sub, (u, v)):
            raise RuntimeError(
                f"borough {b.id}: edge {u}-{v} lost short-cycle support")
    proper = b.subgraph(g)
    if proper.connected_components()[0] != b.nodes:
        raise RuntimeError(f"borough {b.id} is not connected")


def write_boroughs_csv(g: Graph, bs: list[Borough], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["borough_id", "size", "diameter", "node_ids"])
        for b in bs:
            diam = b.subgraph(g).diameter()
            w.writerow([b.id, b.size, diam, ";".join(sorted(b.nodes))])
