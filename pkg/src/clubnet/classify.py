"""Classification of 2-clubs into coteries, social circles, and hamlets.

A coterie has a central node adjacent to every other member; a social
circle has no central node but at least one central pair (an adjacent pair
jointly dominating the club); a hamlet has neither.  Precedence is central
node first, so the three types partition the clubs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .clubs import TwoClub, is_2club
from .graph import Graph


class ClubType(str, enum.Enum):
    COTERIE = "coterie"
    SOCIAL_CIRCLE = "social_circle"
    HAMLET = "hamlet"


@dataclass(frozen=True)
class ClassifiedClub:
    club: TwoClub
    type: ClubType
    central_nodes: tuple[str, ...]
    central_pairs: tuple[tuple[str, str], ...]

    @property
    def nodes(self) -> tuple[str, ...]:
        return self.club.nodes

    @property
    def size(self) -> int:
        return self.club.size


def central_nodes(g: Graph, s) -> tuple[str, ...]:
    """Members adjacent (within s) to every other member, sorted."""
    if not is_2club(g, s):
        raise ValueError("node set is not a 2-club")
    dense = {g.index_of(v) for v in s}
    adj = g.adj_dense()
    out = [v for v in s if dense - {g.index_of(v)} <= adj[g.index_of(v)]]
    return tuple(sorted(out))


def central_pairs(g: Graph, s) -> tuple[tuple[str, str], ...]:
    """Adjacent pairs {u, v} in s where every other member touches u or v."""
    if not is_2club(g, s):
        raise ValueError("node set is not a 2-club")
    dense = {g.index_of(v) for v in s}
    adj = g.adj_dense()
    pairs = []
    for u, v in combinations(sorted(dense), 2):
        if v not in adj[u]:
            continue
        if dense - {u, v} <= adj[u] | adj[v]:
            pairs.append(tuple(sorted((g.id_of(u), g.id_of(v)))))
    return tuple(sorted(pairs))


def classify(g: Graph, club: TwoClub) -> ClassifiedClub:
    centers = central_nodes(g, club.nodes)
    pairs = central_pairs(g, club.nodes)
    if centers:
        kind = ClubType.COTERIE
    elif pairs:
        kind = ClubType.SOCIAL_CIRCLE
    else:
        kind = ClubType.HAMLET
    return ClassifiedClub(club=club, type=kind,
                          central_nodes=centers, central_pairs=pairs)
