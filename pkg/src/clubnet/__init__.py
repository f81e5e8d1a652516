"""clubnet: borough decomposition and maximal 2-club mining for networks."""

from .borough import Borough, boroughs, edge_on_short_cycle, peel
from .classify import ClassifiedClub, ClubType, central_nodes, central_pairs, classify
from .clubs import (
    BOROUGH,
    GLOBAL,
    BudgetExceeded,
    EnumConfig,
    TwoClub,
    enumerate_max_2clubs,
    is_2club,
    is_maximal,
    oracle_enumerate,
)
from .graph import (
    INFINITE,
    Graph,
    IngestError,
    NodeAttrs,
    load_graph,
    read_edges_csv,
    read_nodes_csv,
)
from .pivots import (
    InterlockMatrix,
    PivotReport,
    ScopeResult,
    coterie_ranking,
    interlock_matrix,
    scope,
    select_pivot,
)
from .store import ClubQuery, ClubRecord, ClubStore, club_id_for, record_for, stats

__version__ = "0.1.0"

__all__ = [
    "Borough", "boroughs", "edge_on_short_cycle", "peel",
    "ClassifiedClub", "ClubType", "central_nodes", "central_pairs", "classify",
    "BOROUGH", "GLOBAL", "BudgetExceeded", "EnumConfig", "TwoClub",
    "enumerate_max_2clubs", "is_2club", "is_maximal", "oracle_enumerate",
    "INFINITE", "Graph", "IngestError", "NodeAttrs", "load_graph",
    "read_edges_csv", "read_nodes_csv",
    "InterlockMatrix", "PivotReport", "ScopeResult",
    "coterie_ranking", "interlock_matrix", "scope", "select_pivot",
    "ClubQuery", "ClubRecord", "ClubStore", "club_id_for", "record_for",
    "stats",
]
