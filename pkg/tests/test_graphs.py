import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dtcolor.graphs import (
    Graph,
    Graph6Error,
    Bipartition,
    all_spanning_trees,
    canonical_graph6,
    closed_twin_pairs,
    complement,
    cut_edges,
    degree_stats,
    enumerate_connected,
    enumerate_graphs,
    erdos_bipartition,
    family,
    hamilton_cycle,
    hamilton_path,
    is_connected,
    is_in_f3s,
    max_independent_set_size,
    min_cover_size,
    min_vertex_cover,
    parse_family_spec,
    parse_graph6,
    spanning_tree,
    to_graph6,
    try_bipartition,
)

INF = math.inf


def random_graph(rng, n):
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# graph6

def test_parse_known_star():
    # hand-decoded: 'D' gives n=5, payload '?{' sets exactly the last column
    g = parse_graph6("D?{")
    assert g.n == 5
    assert g.edges == ((0, 4), (1, 4), (2, 4), (3, 4))


def test_parse_k2_and_single_vertex():
    g = parse_graph6("A_")
    assert (g.n, g.edges) == (2, ((0, 1),))
    g1 = parse_graph6("@")
    assert (g1.n, g1.edges) == (1, ())


def test_c5_encoding(c5):
    assert to_graph6(c5) == "Dhc"
    assert parse_graph6("Dhc") == c5


def test_header_is_optional(c5):
    assert parse_graph6(">>graph6<<Dhc") == c5


def test_bw_is_a_valid_triangle():
    # 3 bits fit one payload byte, so 'Bw' is complete and decodes to K3
    assert parse_graph6("Bw") == family("complete", 3)


@pytest.mark.parametrize("bad, offset_hint", [
    ("B", "payload too short"),
    ("Dhcc", "trailing garbage"),
    ("A" + chr(30), "outside graph6 range"),
    ("", "empty"),
])
def test_parse_errors(bad, offset_hint):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(bad)
    assert offset_hint.split()[0] in str(err.value)


def test_nonzero_padding_rejected():
    # K2 payload with a stray low bit set
    bad = "A" + chr(63 + 0b100001)
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_round_trip_all_small_graphs():
    for n in range(1, 6):
        for g in enumerate_graphs(n, connected_only=False):
            assert parse_graph6(to_graph6(g)) == g


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_round_trip_random(data):
    n = data.draw(st.integers(1, 8))
    pairs = list(itertools.combinations(range(n), 2))
    edges = [e for e in pairs if data.draw(st.booleans())]
    g = Graph(n, edges)
    assert parse_graph6(to_graph6(g)) == g


def test_to_graph6_size_cap():
    with pytest.raises(ValueError):
        to_graph6(Graph(63, []))


# ---------------------------------------------------------------------------
# families

def test_cycle_family(c5):
    st_ = degree_stats(c5)
    assert c5.n == 5 and c5.q == 5
    assert set(st_.degrees) == {2}


def test_star_family():
    g = family("star", 4)
    assert sorted(degree_stats(g).degrees, reverse=True) == [3, 1, 1, 1]
    assert g.degree(0) == 3


def test_complete_bipartite_family():
    g = family("complete_bipartite", 3, 2)
    assert (g.n, g.q) == (5, 6)


def test_family_spec_strings():
    assert parse_family_spec("cycle:5") == family("cycle", 5)
    assert parse_family_spec("kb:3,2") == family("complete_bipartite", 3, 2)
    with pytest.raises(ValueError):
        parse_family_spec("nope:3")
    with pytest.raises(ValueError):
        parse_family_spec("cycle:0")
    with pytest.raises(ValueError):
        family("complete_bipartite", 2, 3)


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 5)])
    # parallel edges collapse
    assert Graph(3, [(0, 1), (1, 0)]).q == 1


# ---------------------------------------------------------------------------
# stats

def test_degree_stats_cycle(c5):
    st_ = degree_stats(c5)
    assert (st_.max_degree, st_.min_degree) == (2, 2)
    assert st_.degree_counts == {2: 5}
    assert st_.diameter == 2
    assert st_.girth == 5


def test_degree_stats_star():
    st_ = degree_stats(family("star", 4))
    assert st_.max_degree == 3
    assert st_.degree_counts == {3: 1, 1: 3}
    assert st_.diameter == 2
    assert st_.girth == INF


def test_degree_stats_complete():
    st_ = degree_stats(family("complete", 4))
    assert st_.diameter == 1
    assert st_.girth == 3


def test_disconnected_diameter_infinite():
    g = Graph(4, [(0, 1), (2, 3)])
    assert degree_stats(g).diameter == INF


def test_degree_sum(c5):
    st_ = degree_stats(c5)
    assert sum(st_.degrees) == 2 * c5.q
    assert sum(st_.degree_counts.values()) == c5.n


# ---------------------------------------------------------------------------
# family membership and twins

def test_f3s_membership(c5):
    assert is_in_f3s(c5)
    assert not is_in_f3s(family("complete", 2))
    tri_plus_two = Graph(5, [(0, 1), (1, 2), (0, 2)])
    assert not is_in_f3s(tri_plus_two)  # two isolated vertices
    tri_plus_one = Graph(4, [(0, 1), (1, 2), (0, 2)])
    assert is_in_f3s(tri_plus_one)
    assert not is_in_f3s(Graph(4, [(0, 1), (2, 3)]))  # isolated edges


def test_twins_complete():
    assert len(closed_twin_pairs(family("complete", 4))) == 6


def test_twins_cycle_empty(c5):
    # oracle: direct check of all 10 pairs
    direct = [
        (u, v)
        for u, v in itertools.combinations(range(5), 2)
        if c5.adj[u] | {u} == c5.adj[v] | {v}
    ]
    assert direct == []
    assert closed_twin_pairs(c5) == []


def test_twins_bipartite_adjacent_only():
    g = family("complete_bipartite", 3, 2)
    assert closed_twin_pairs(g, adjacent_only=True) == []


def test_twins_always_adjacent():
    rng = __import__("random").Random(5)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 7))
        assert closed_twin_pairs(g) == closed_twin_pairs(g, adjacent_only=True)


# ---------------------------------------------------------------------------
# vertex cover

def brute_cover_size(g):
    for size in range(g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            s = set(sub)
            if all(u in s or v in s for u, v in g.edges):
                return size
    return g.n


def test_cover_cycle(c5):
    cov = min_vertex_cover(c5)
    assert len(cov) == 3 == brute_cover_size(c5)
    assert all(u in cov or v in cov for u, v in c5.edges)


def test_cover_star_and_complete():
    assert min_vertex_cover(family("star", 4)) == frozenset({0})
    assert len(min_vertex_cover(family("complete", 4))) == 3


def test_cover_is_lexicographically_least(c5):
    # all minimum covers of the 5-cycle, by brute force
    best = min(
        (tuple(sorted(s)) for s in map(set, itertools.combinations(range(5), 3))
         if all(u in s or v in s for u, v in c5.edges)),
    )
    assert tuple(sorted(min_vertex_cover(c5))) == best


def test_gallai_identity():
    for n in range(2, 7):
        for g in enumerate_graphs(n, connected_only=False):
            beta = len(min_vertex_cover(g))
            assert beta == brute_cover_size(g)
            alpha_brute = max(
                len(s)
                for size in range(g.n + 1)
                for s in map(set, itertools.combinations(range(g.n), size))
                if not any(u in s and v in s for u, v in g.edges)
            )
            assert beta + alpha_brute == g.n
            assert max_independent_set_size(g) == alpha_brute


# ---------------------------------------------------------------------------
# bipartitions

def test_erdos_properties_small():
    for n in range(2, 7):
        for g in enumerate_connected(n):
            if g.q == 0:
                continue
            bip = erdos_bipartition(g)
            cut = cut_edges(g, bip)
            assert len(cut) >= g.q / 2
            crossing = {e: True for e in cut}
            for u in range(g.n):
                cross = sum(
                    1 for v in g.adj[u]
                    if (min(u, v), max(u, v)) in crossing
                )
                assert cross >= math.ceil(g.degree(u) / 2)


def test_bipartite_graphs_keep_their_split():
    g = family("complete_bipartite", 3, 2)
    bip = erdos_bipartition(g)
    assert len(cut_edges(g, bip)) == g.q  # every edge crosses
    # the natural split is a fixed point of the move rule
    nat = try_bipartition(g)
    for u in range(g.n):
        same = sum(1 for v in g.adj[u]
                   if (v in nat.side_a) == (u in nat.side_a))
        assert same <= g.degree(u) - same


# ---------------------------------------------------------------------------
# hamilton

def test_hamilton_cycle_graph(c5):
    path = hamilton_path(c5)
    assert path is not None
    assert sorted(path) == list(range(5))
    assert all(c5.has_edge(a, b) for a, b in zip(path, path[1:]))


def test_hamilton_star_none():
    g = family("star", 4)
    # oracle: all 24 orders fail
    assert not any(
        all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
        for p in itertools.permutations(range(4))
    )
    assert hamilton_path(g) is None


def test_hamilton_complete():
    assert hamilton_path(family("complete", 4)) is not None
    assert hamilton_cycle(family("complete", 4)) is not None
    assert hamilton_cycle(family("path", 4)) is None


# ---------------------------------------------------------------------------
# spanning trees

def test_spanning_tree_complete():
    st_ = spanning_tree(family("complete", 4))
    assert st_.tree == family("star", 4)
    assert (st_.leaves, st_.degree_two) == (3, 0)
    assert st_.rest.q == 6 - 3


def test_spanning_tree_cycle(c5):
    st_ = spanning_tree(c5)
    assert st_.tree.q == 4
    assert (st_.leaves, st_.degree_two) == (2, 3)
    assert st_.rest.q == 1


def test_spanning_tree_path_is_self():
    p5 = family("path", 5)
    st_ = spanning_tree(p5)
    assert st_.tree == p5
    assert st_.rest.q == 0


def test_spanning_tree_disconnected_rejected():
    with pytest.raises(ValueError):
        spanning_tree(Graph(4, [(0, 1), (2, 3)]))


def test_all_spanning_trees_count(c5):
    assert sum(1 for _ in all_spanning_trees(c5)) == 5
    assert sum(1 for _ in all_spanning_trees(family("complete", 4))) == 16


# ---------------------------------------------------------------------------
# enumeration and canonical forms

def test_connected_counts():
    expected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
    for n, count in expected.items():
        assert sum(1 for _ in enumerate_connected(n)) == count


def test_all_graph_counts():
    expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}
    for n, count in expected.items():
        assert sum(1 for _ in enumerate_graphs(n, connected_only=False)) == count


def test_enumeration_yields_distinct_canonical_forms():
    seen = set()
    for g in enumerate_connected(5):
        code = canonical_graph6(g)
        assert code not in seen
        seen.add(code)


def test_canonical_invariant_under_relabeling():
    rng = __import__("random").Random(11)
    for _ in range(200):
        n = rng.randint(1, 7)
        g = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        h = Graph(n, [(perm[u], perm[v]) for u, v in g.edges])
        assert canonical_graph6(g) == canonical_graph6(h)


def test_enumeration_range_check():
    with pytest.raises(ValueError):
        list(enumerate_graphs(9))


# ---------------------------------------------------------------------------
# complement

def test_complement_basics(c5):
    assert complement(family("complete", 4)).q == 0
    assert canonical_graph6(complement(c5)) == canonical_graph6(c5)


def test_complement_involution_and_degrees():
    rng = __import__("random").Random(3)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 7))
        assert complement(complement(g)) == g
        st_g, st_c = degree_stats(g), degree_stats(complement(g))
        assert st_c.max_degree == g.n - 1 - st_g.min_degree
