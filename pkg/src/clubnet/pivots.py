"""Scope, coterie rankings, regional pivot selection, and pivot interlocks.

The scope of a node set is how many of the borough's stored clubs share at
least one node with it.  A regional pivot is a single representative club
found by accumulating the region's firms (best coterie first) while their
set of common clubs stays nonempty, then preferring the largest common
hamlet, falling back to a hamlet nearly covering the largest common social
circle, then to that social circle itself.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

from .borough import Borough
from .graph import Graph
from .store import ClubQuery, ClubRecord, ClubStore, round_pct

STOP = "stop"
SKIP = "skip"


@dataclass(frozen=True)
class ScopeResult:
    count: int
    total: int
    pct: float


def scope(store: ClubStore, borough: Borough, target) -> ScopeResult:
    """Clubs of the borough sharing at least one node with `target`."""
    target = set(target)
    if not target:
        raise ValueError("empty target set")
    total = len(store.query(ClubQuery(borough_id=borough.id)))
    if total == 0:
        raise ValueError(f"borough {borough.id} has no stored clubs")
    count = len(store.query(ClubQuery(borough_id=borough.id,
                                      contains_any=target)))
    return ScopeResult(count=count, total=total,
                       pct=round_pct(count, total))


def coterie_ranking(store: ClubStore, graph: Graph, region: str) -> list[str]:
    """Region's firms: coterie centers by coterie size, then the rest by rank."""
    firms = [v for v in graph.node_ids() if graph.attrs(v).country == region]
    if not firms:
        raise ValueError(f"unknown region: {region!r}")
    coterie_size: dict[str, int] = {}
    for r in store.records:
        if r.type == "coterie":
            for c in r.central_nodes:
                coterie_size[c] = max(coterie_size.get(c, 0), r.size)
    with_coterie = sorted((f for f in firms if f in coterie_size),
                          key=lambda f: (-coterie_size[f], f))
    without = sorted(
        (f for f in firms if f not in coterie_size),
        key=lambda f: (graph.attrs(f).rank is None,
                       graph.attrs(f).rank if graph.attrs(f).rank is not None else 0,
                       f))
    return with_coterie + without


@dataclass(frozen=True)
class PivotReport:
    region: str
    seed_sequence: tuple[str, ...]
    common_club_ids: tuple[str, ...]
    pivot: ClubRecord
    scope: ScopeResult
    composition: tuple[str, ...]  # country multiset of the pivot
    rule: str
    decision_trace: tuple[str, ...]


def _best(records: list[ClubRecord]) -> tuple[ClubRecord, bool]:
    """Largest record, ties by smallest node tuple; flags whether a tie occurred."""
    top = max(r.size for r in records)
    tied = sorted((r for r in records if r.size == top), key=lambda r: r.nodes)
    return tied[0], len(tied) > 1


def select_pivot(store: ClubStore, borough: Borough, region: str,
                 ranking: list[str], policy: str = STOP) -> PivotReport:
    if not ranking:
        raise ValueError("empty ranking")
    if policy not in (STOP, SKIP):
        raise ValueError(f"bad policy {policy!r}")

    trace: list[str] = []
    seeds: list[str] = []
    common: list[ClubRecord] = []
    for firm in ranking:
        candidate = store.query(ClubQuery(borough_id=borough.id,
                                          contains_all=set(seeds) | {firm}))
        if not candidate:
            if policy == STOP:
                trace.append(f"stop: no common club with {firm}")
                break
            trace.append(f"skip {firm}: no common club")
            continue
        seeds.append(firm)
        common = candidate
        trace.append(f"accumulate {firm}: {len(candidate)} common club(s)")
    if not seeds:
        raise ValueError(f"region has no clubs: {region!r}")

    hamlets = [r for r in common if r.type == "hamlet"]
    circles = [r for r in common if r.type == "social_circle"]
    if hamlets:
        pivot, tie = _best(hamlets)
        rule = "1"
        trace.append("rule 1: largest common hamlet"
                     + (" (tie broken lexicographically)" if tie else ""))
    elif circles:
        circle, tie = _best(circles)
        if tie:
            trace.append("largest common social circle tie broken lexicographically")
        pool = store.query(ClubQuery(borough_id=borough.id, types={"hamlet"}))
        near = [h for h in pool
                if len(set(circle.nodes) - set(h.nodes)) <= 1]
        if near:
            pivot, tie = _best(near)
            rule = "2"
            trace.append("rule 2: largest hamlet covering the social circle"
                         " but for at most one firm"
                         + (" (tie broken lexicographically)" if tie else ""))
        else:
            pivot = circle
            rule = "3"
            trace.append("rule 3: the social circle itself")
    else:
        # Common set held only coteries; the preference rules are silent, so
        # take the largest of those.
        pivot, tie = _best(common)
        rule = "coterie-fallback"
        trace.append("fallback: largest common coterie"
                     + (" (tie broken lexicographically)" if tie else ""))

    return PivotReport(
        region=region,
        seed_sequence=tuple(seeds),
        common_club_ids=tuple(r.club_id for r in common),
        pivot=pivot,
        scope=scope(store, borough, pivot.nodes),
        composition=pivot.countries,
        rule=rule,
        decision_trace=tuple(trace),
    )


@dataclass(frozen=True)
class InterlockMatrix:
    regions: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    def overlap(self, a: str, b: str) -> int:
        return self.entries[self.regions.index(a)][self.regions.index(b)]

    def partners(self, region: str) -> list[tuple[str, int]]:
        i = self.regions.index(region)
        return [(other, n) for other, n in zip(self.regions, self.entries[i])
                if other != region and n >= 1]


def interlock_matrix(reports: list[PivotReport]) -> InterlockMatrix:
    """Pairwise pivot overlap counts; diagonal is the pivot size."""
    if len(reports) < 2:
        raise ValueError("need at least two pivots")
    sets = [set(r.pivot.nodes) for r in reports]
    entries = tuple(
        tuple(len(sets[i] & sets[j]) for j in range(len(sets)))
        for i in range(len(sets))
    )
    return InterlockMatrix(regions=tuple(r.region for r in reports),
                           entries=entries)


def write_pivots_csv(reports: list[PivotReport], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["region", "pivot_type", "size", "scope_count",
                    "scope_pct", "rule", "node_ids"])
        for r in reports:
            w.writerow([r.region, r.pivot.type, r.pivot.size,
                        r.scope.count, r.scope.pct, r.rule,
                        ";".join(r.pivot.nodes)])


def write_interlocks_csv(m: InterlockMatrix, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["region", *m.regions])
        for region, row in zip(m.regions, m.entries):
            w.writerow([region, *row])
