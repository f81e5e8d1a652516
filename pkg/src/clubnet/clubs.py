"""Maximal 2-club enumeration inside a borough.

A 2-club is a maximal node set whose induced subgraph has diameter at most
2 (paths must stay inside the set).  Enumeration is by recursive splitting:
starting from a candidate universe, while some pair sits at distance > 2 in
the current induced subgraph, branch on dropping either endpoint; record
candidates at diameter <= 2, then keep only the maximal ones.

oracle_enumerate is the deliberately-dumb exhaustive counterpart used to
test the real enumerator; keep it independent of the code above it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .borough import Borough
from .graph import Graph

BOROUGH = "borough"
GLOBAL = "global"


@dataclass(frozen=True)
class TwoClub:
    nodes: tuple[str, ...]
    borough_id: int

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass
class EnumConfig:
    min_size: int = 4
    maximality_universe: str = BOROUGH
    node_budget: int | None = None      # max branch expansions
    time_budget: float | None = None    # seconds
    restrict_neighborhood: bool = True  # anchor search inside N^2[v]

    def __post_init__(self):
        if self.min_size < 2:
            raise ValueError("min_size must be >= 2")
        if self.maximality_universe not in (BOROUGH, GLOBAL):
            raise ValueError(f"bad universe {self.maximality_universe!r}")


class BudgetExceeded(RuntimeError):
    """Enumeration ran out of budget; carries the partial result."""

    def __init__(self, completed_fraction: float, partial: list[TwoClub]):
        super().__init__(
            f"enumeration budget exceeded ({completed_fraction:.0%} complete)")
        self.completed_fraction = completed_fraction
        self.partial = partial


def is_2club(g: Graph, s) -> bool:
    """Every pair in s adjacent or sharing a common neighbor inside s."""
    if not s:
        raise ValueError("empty node set")
    dense = frozenset(g.index_of(v) for v in s)
    return _is_2club_dense(g.adj_dense(), dense)


def _is_2club_dense(adj, s: frozenset[int]) -> bool:
    for u, v in combinations(s, 2):
        if v not in adj[u] and not (adj[u] & adj[v] & s):
            return False
    return True


def _extends(adj, s: frozenset[int], w: int) -> bool:
    """Does s + {w} still have diameter <= 2?  Existing pairs cannot worsen."""
    ws = adj[w] & s
    for u in s:
        if u not in ws and not (adj[u] & ws):
            return False
    return True


def is_maximal(g: Graph, s, universe) -> bool:
    """No node of `universe` outside s can be added keeping diameter <= 2."""
    dense = frozenset(g.index_of(v) for v in s)
    uni = frozenset(g.index_of(v) for v in universe)
    if not dense <= uni:
        raise ValueError("s must be a subset of the universe")
    adj = g.adj_dense()
    if not _is_2club_dense(adj, dense):
        raise ValueError("s is not a 2-club")
    return not any(_extends(adj, dense, w) for w in uni - dense)


def _first_violating_pair(adj, s: frozenset[int]):
    """Smallest (u, v) in s with induced distance > 2, or None."""
    members = sorted(s)
    for u in members:
        near = adj[u] & s
        reach2 = {u} | near
        for x in near:
            reach2 |= adj[x] & s
        for v in members:
            if v > u and v not in reach2:
                return (u, v)
    return None


class _Search:
    def __init__(self, adj, cfg: EnumConfig, total_anchors: int):
        self.adj = adj
        self.cfg = cfg
        self.total_anchors = max(total_anchors, 1)
        self.anchors_done = 0
        self.expansions = 0
        self.deadline = (time.monotonic() + cfg.time_budget
                         if cfg.time_budget else None)
        self.candidates: set[frozenset[int]] = set()

    def _charge(self):
        self.expansions += 1
        over_nodes = (self.cfg.node_budget is not None
                      and self.expansions > self.cfg.node_budget)
        over_time = (self.deadline is not None
                     and time.monotonic() > self.deadline)
        if over_nodes or over_time:
            raise _BudgetSignal(self.anchors_done / self.total_anchors)

    def split(self, start: frozenset[int], anchor: int | None):
        visited: set[frozenset[int]] = set()
        stack = [start]
        while stack:
            s = stack.pop()
            if s in visited:
                continue
            visited.add(s)
            self._charge()
            pair = _first_violating_pair(self.adj, s)
            if pair is None:
                self.candidates.add(s)
                continue
            for drop in pair:
                if drop == anchor:
                    continue
                stack.append(s - {drop})


class _BudgetSignal(Exception):
    def __init__(self, fraction: float):
        self.fraction = fraction


def enumerate_max_2clubs(g: Graph, borough: Borough,
                         cfg: EnumConfig | None = None) -> list[TwoClub]:
    """All maximal 2-clubs of the borough, canonically sorted.

    Maximality is checked against the borough's node set by default, or the
    whole graph in GLOBAL mode.  Clubs below cfg.min_size are dropped only
    after the maximality filter.
    """
    cfg = cfg or EnumConfig()
    adj = g.adj_dense()
    borough_dense = frozenset(g.index_of(v) for v in borough.nodes)
    if cfg.maximality_universe == BOROUGH:
        universe = borough_dense
    else:
        universe = frozenset(range(g.n))

    members = sorted(borough_dense)
    search = _Search(adj, cfg, total_anchors=len(members))
    try:
        if cfg.restrict_neighborhood:
            for v in members:
                near = adj[v] & borough_dense
                reach2 = {v} | near
                for x in near:
                    reach2 |= adj[x] & borough_dense
                start = frozenset(w for w in reach2 if w >= v)
                search.split(start, anchor=v)
                search.anchors_done += 1
        else:
            search.split(borough_dense, anchor=None)
    except _BudgetSignal as sig:
        partial = _finish(g, search.candidates, adj, universe,
                          borough.id, cfg.min_size)
        raise BudgetExceeded(sig.fraction, partial) from None

    return _finish(g, search.candidates, adj, universe, borough.id,
                   cfg.min_size)


def _finish(g, candidates, adj, universe, borough_id, min_size):
    # Diameter-2 is not hereditary, so a candidate can be single-node
    # unextendable yet still sit inside a larger 2-club; containment against
    # the other candidates catches those (every maximal club is a candidate).
    survivors: list[frozenset[int]] = []
    for s in sorted(set(candidates), key=len, reverse=True):
        if any(s < bigger for bigger in survivors):
            continue
        if any(_extends(adj, s, w) for w in universe - s):
            continue
        survivors.append(s)
    clubs = [
        TwoClub(tuple(sorted(g.id_of(i) for i in s)), borough_id)
        for s in survivors
        if len(s) >= min_size
    ]
    return sorted(clubs, key=lambda c: c.nodes)


def oracle_enumerate(g: Graph, cfg: EnumConfig | None = None) -> set[frozenset[str]]:
    """Exhaustive-subset reference enumerator; guard: at most 20 nodes."""
    cfg = cfg or EnumConfig()
    if g.n > 20:
        raise ValueError(f"oracle guard: {g.n} nodes > 20")
    adj = g.adj_dense()
    all_nodes = list(range(g.n))
    clubs = []
    for k in range(1, g.n + 1):
        for combo in combinations(all_nodes, k):
            s = frozenset(combo)
            if _is_2club_dense(adj, s):
                clubs.append(s)
    clubs.sort(key=len, reverse=True)
    maximal: list[frozenset[int]] = []
    for s in clubs:
        if not any(s < bigger for bigger in maximal):
            maximal.append(s)
    return {frozenset(g.id_of(i) for i in s)
            for s in maximal if len(s) >= cfg.min_size}
