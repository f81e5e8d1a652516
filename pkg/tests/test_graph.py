import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clubnet import INFINITE, IngestError, load_graph
from clubnet.graph import read_edges_csv, read_nodes_csv

from conftest import random_graph


def test_duplicate_edges_collapse():
    g = load_graph([("A", "B"), ("B", "A"), ("A", "B")])
    assert g.n == 2
    assert g.edge_count() == 1
    assert g.multiplicity("A", "B") == 3


def test_self_loop_dropped_with_warning_count():
    g = load_graph([("A", "A")])
    assert g.n == 1
    assert g.edge_count() == 0
    assert g.self_loop_count == 1


def test_bridge2t_counts(bridge2t):
    assert bridge2t.n == 6
    assert bridge2t.edge_count() == 7


def test_zero_weight_edge_dropped():
    g = load_graph([("A", "B", "0"), ("B", "C", "2")])
    assert g.edge_count() == 1
    assert not g.has_edge("A", "B")


def test_negative_weight_rejected():
    with pytest.raises(IngestError):
        load_graph([("A", "B", "-1")])


def test_malformed_row_names_record():
    with pytest.raises(IngestError, match="line 2"):
        load_graph([("A", "B"), ("C",)])


def test_attribute_only_node_becomes_isolated():
    g = load_graph([("A", "B")], [{"id": "C", "name": "Orphan"}])
    assert g.n == 3
    assert g.degree("C") == 0


def test_strict_mode_rejects_unknown_attribute_row():
    with pytest.raises(IngestError, match="line 1"):
        load_graph([("A", "B")], [{"id": "C"}], strict=True)


def test_attribute_defaults():
    g = load_graph([("A", "B")], [{"id": "A", "name": "Alpha"}])
    a = g.attrs("A")
    assert a.name == "Alpha" and a.country == "" and a.rank is None
    assert g.attrs("B").name == ""


def test_neighbors_star(star4):
    assert star4.neighbors("c") == ("x", "y", "z")


def test_neighbors_c5(c5):
    assert set(c5.neighbors("a")) == {"b", "e"}


def test_petersen_is_3_regular(petersen):
    assert all(petersen.degree(v) == 3 for v in petersen.node_ids())


def test_unknown_node_errors(k3):
    with pytest.raises(ValueError):
        k3.neighbors("zzz")


def test_ego_network(star4, bowtie, k3):
    assert star4.ego_network("c") == {"c", "x", "y", "z"}
    assert bowtie.ego_network("c") == {"a", "b", "c", "d", "e"}
    assert k3.ego_network("a") == {"a", "b", "c"}


def test_induced_path_from_c5(c5):
    sub = c5.induced({"a", "b", "c"})
    assert sub.edges() == [("a", "b"), ("b", "c")]


def test_induced_opposite_c4(c4):
    sub = c4.induced({"a", "c"})
    assert sub.n == 2 and sub.edge_count() == 0


def test_induced_independent_set_petersen(petersen):
    # independence number of the Petersen graph is 4; brute-force one
    from itertools import combinations
    names = petersen.node_ids()
    assert not any(
        not any(petersen.has_edge(u, v) for u, v in combinations(combo, 2))
        for combo in combinations(names, 5))
    indep = next(
        set(combo) for combo in combinations(names, 4)
        if not any(petersen.has_edge(u, v)
                   for u, v in combinations(combo, 2)))
    sub = petersen.induced(indep)
    assert sub.n == 4 and sub.edge_count() == 0


def test_diameter(c5, p4, petersen):
    assert c5.diameter() == 2
    assert p4.diameter() == 3
    assert petersen.diameter() == 2


def test_diameter_disconnected_and_singleton():
    g = load_graph([("a", "b")], [{"id": "c"}])
    assert g.diameter() == INFINITE
    assert load_graph([], [{"id": "x"}]).diameter() == 0


def test_petersen_diameter_matches_bfs_oracle(petersen):
    # all-pairs BFS oracle written directly over the edge relation
    names = petersen.node_ids()
    best = 0
    for s in names:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in petersen.neighbors(u):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        best = max(best, max(dist.values()))
    assert petersen.diameter() == best == 2


def test_components(bridge2t):
    comps = bridge2t.connected_components()
    assert len(comps) == 1 and len(comps[0]) == 6


def test_components_two_triangles():
    g = load_graph([("a", "b"), ("b", "c"), ("a", "c"),
                    ("d", "e"), ("e", "f"), ("d", "f")])
    comps = g.connected_components()
    assert [len(c) for c in comps] == [3, 3]
    assert min(comps[0]) == "a"  # tie broken by smallest member


def test_components_edgeless():
    g = load_graph([], [{"id": s} for s in "abcd"])
    assert [len(c) for c in g.connected_components()] == [1, 1, 1, 1]


@given(st.integers(0, 2 ** 32 - 1), st.integers(2, 10),
       st.sampled_from([0.2, 0.5]))
@settings(max_examples=40, deadline=None)
def test_properties_hold_on_random_graphs(seed, n, p):
    g = random_graph(random.Random(seed), n, p)
    for v in g.node_ids():
        ego = g.ego_network(v)
        assert v in ego
        assert ego == set(g.neighbors(v)) | {v}
        if g.degree(v) >= 1:
            assert g.induced(ego).diameter() <= 2
    assert g.induced(g.node_ids()).edges() == g.edges()
    comps = g.connected_components()
    seen = set().union(*comps)
    assert seen == set(g.node_ids())
    assert sum(len(c) for c in comps) == g.n
    for u, v in g.edges():
        assert any(u in c and v in c for c in comps)


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=25, deadline=None)
def test_load_graph_edge_order_invariant(seed):
    rng = random.Random(seed)
    edges = [(f"v{i}", f"v{j}") for i in range(6) for j in range(i + 1, 6)
             if rng.random() < 0.5]
    shuffled = edges[:]
    rng.shuffle(shuffled)
    flipped = [(b, a) if rng.random() < 0.5 else (a, b) for a, b in shuffled]
    assert load_graph(edges) == load_graph(flipped)


def test_csv_round_trip(tmp_path):
    edges = tmp_path / "edges.csv"
    edges.write_text('source,target,weight\n"a",b,2\nb,c,\n')
    nodes = tmp_path / "nodes.csv"
    nodes.write_text("id,name,country,sector,rank\na,Alpha,FR,energy,10\n")
    g = load_graph(read_edges_csv(edges), read_nodes_csv(nodes))
    assert g.edges() == [("a", "b"), ("b", "c")]
    assert g.attrs("a").country == "FR"
    assert g.attrs("a").rank == 10


def test_csv_bad_row_reports_line(tmp_path):
    edges = tmp_path / "edges.csv"
    edges.write_text("source,target\na,b\na,b,c,d\n")
    with pytest.raises(IngestError, match="line 3"):
        read_edges_csv(edges)
