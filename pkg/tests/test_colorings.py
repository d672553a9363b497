import json

import pytest

from dtcolor.graphs import Graph, family
from dtcolor.colorings import (
    ColoringError,
    PRESETS,
    TotalColoring,
    color_signature,
    constraint_set,
    is_proper_total,
    preset,
    relabel_colors,
    satisfies,
)

#: the 20 published set entries for the ring fixture, per vertex
RING_TABLE = {
    0: ({1, 5}, {3, 4, 5}, {1, 4, 5}, {1, 3, 4, 5}),
    1: ({1, 2}, {1, 4, 5}, {1, 2, 5}, {1, 2, 4, 5}),
    2: ({2, 3}, {1, 2, 5}, {1, 2, 3}, {1, 2, 3, 5}),
    3: ({3, 4}, {1, 2, 3}, {2, 3, 4}, {1, 2, 3, 4}),
    4: ({4, 5}, {2, 3, 4}, {3, 4, 5}, {2, 3, 4, 5}),
}


def test_ring_fixture_is_proper(c5, ring_fixture):
    assert is_proper_total(c5, ring_fixture).ok


def test_ring_fixture_satisfies_everything(c5, ring_fixture):
    assert satisfies(c5, ring_fixture, preset("all8")).ok


def test_ring_fixture_signatures_match_table(c5, ring_fixture):
    for u, (es, vc, ec, fu) in RING_TABLE.items():
        sig = color_signature(c5, ring_fixture, u)
        assert sig.edge_set == frozenset(es)
        assert sig.vertex_closed == frozenset(vc)
        assert sig.edge_closed == frozenset(ec)
        assert sig.full == frozenset(fu)


def test_signature_cardinalities(c5, ring_fixture):
    for u in range(5):
        sig = color_signature(c5, ring_fixture, u)
        d = c5.degree(u)
        assert len(sig.edge_set) == d
        assert len(sig.edge_closed) == d + 1
        assert 2 <= len(sig.vertex_closed) <= d + 1
        assert d + 1 <= len(sig.full) <= 2 * d + 1


def test_isolated_vertex_signature():
    g = Graph(4, [(0, 1), (1, 2), (0, 2)])  # triangle plus isolated vertex 3
    f = TotalColoring(graph=g, k=7, vertex_colors=(1, 2, 3, 4),
                      edge_colors=(5, 6, 7))
    sig = color_signature(g, f, 3)
    assert sig.edge_set == frozenset()
    assert sig.vertex_closed == frozenset({4})
    assert sig.full == frozenset({4})


def test_all_ones_coloring_clashes_everywhere(c5):
    f = TotalColoring(graph=c5, k=1, vertex_colors=(1,) * 5, edge_colors=(1,) * 5)
    verdict = is_proper_total(c5, f)
    assert not verdict.ok
    kinds = {v.kind for v in verdict.violations}
    assert kinds == {"vertex_pair", "edge_pair", "edge_endpoint"}
    # every edge clashes with both endpoints
    assert sum(1 for v in verdict.violations if v.kind == "edge_endpoint") == 10


def test_single_incidence_clash():
    g = family("complete", 2)
    f = TotalColoring(graph=g, k=2, vertex_colors=(1, 2), edge_colors=(1,))
    verdict = is_proper_total(g, f)
    assert not verdict.ok
    assert len(verdict.violations) == 1
    assert verdict.violations[0].kind == "edge_endpoint"


def test_p3_adjacent_conditions():
    p3 = family("path", 3)
    f = TotalColoring(graph=p3, k=3, vertex_colors=(2, 3, 1), edge_colors=(1, 2))
    assert satisfies(p3, f, constraint_set({6})).ok
    verdict = satisfies(p3, f, constraint_set({8}))
    assert not verdict.ok
    assert all(v.kind == "C8" for v in verdict.violations)
    # the clash is on an edge of the path
    assert verdict.violations[0].where in [(0, 1), (1, 2)]


def test_improper_coloring_reported_as_own_class(c5, ring_fixture):
    twisted = TotalColoring(graph=c5, k=5,
                            vertex_colors=(4, 4, 1, 2, 3),
                            edge_colors=ring_fixture.edge_colors)
    verdict = satisfies(c5, twisted, preset("all8"))
    assert not verdict.ok
    assert any(v.kind == "vertex_pair" for v in verdict.violations)


def test_verdict_lists_all_violations(c5):
    f = TotalColoring(graph=c5, k=2,
                      vertex_colors=(1, 2, 1, 2, 1),
                      edge_colors=(1, 2, 2, 1, 2))
    verdict = satisfies(c5, f, preset("all8"))
    assert len(verdict.violations) > 1


# ---------------------------------------------------------------------------
# constraint sets and presets

def test_preset_vocabulary_is_complete():
    assert len(PRESETS) == 17
    assert preset("all8").conditions == frozenset(range(1, 9))
    assert preset("six").conditions == frozenset({1, 2, 5, 6, 7, 8})
    assert preset("four_as").conditions == frozenset({2, 4, 6, 8})
    assert preset("three_as").conditions == frozenset({2, 6, 8})
    assert preset("chi").mode == "vertex_only"
    assert preset("chi_prime_s").mode == "edge_only"
    assert preset("chi_prime_s").conditions == frozenset({1})


def test_mode_condition_compatibility():
    with pytest.raises(ValueError):
        constraint_set({3}, "edge_only")
    with pytest.raises(ValueError):
        constraint_set({1}, "vertex_only")
    with pytest.raises(ValueError):
        constraint_set({9})
    with pytest.raises(ValueError):
        preset("does_not_exist")


def test_edge_mode_satisfaction():
    p3 = family("path", 3)
    f = TotalColoring(graph=p3, k=2, edge_colors=(1, 2))
    assert satisfies(p3, f, preset("chi_prime")).ok
    assert satisfies(p3, f, preset("chi_prime_s")).ok  # sets {1},{1,2},{2}


# ---------------------------------------------------------------------------
# relabeling

def test_relabel_identity(c5, ring_fixture):
    same = relabel_colors(ring_fixture, {i: i for i in range(1, 6)})
    assert same.vertex_colors == ring_fixture.vertex_colors


def test_relabel_swap_preserves_everything(c5, ring_fixture):
    perm = {1: 2, 2: 1, 3: 3, 4: 4, 5: 5}
    swapped = relabel_colors(ring_fixture, perm)
    assert satisfies(c5, swapped, preset("all8")).ok


def test_relabel_rejects_non_bijections(ring_fixture):
    with pytest.raises(ValueError):
        relabel_colors(ring_fixture, {1: 2, 2: 2, 3: 3, 4: 4, 5: 5})
    with pytest.raises(ValueError):
        relabel_colors(ring_fixture, {1: 1})


# ---------------------------------------------------------------------------
# serialization

def test_coloring_json_round_trip(c5, ring_fixture):
    blob = json.dumps(ring_fixture.to_json())
    back = TotalColoring.from_json(c5, json.loads(blob))
    assert back == ring_fixture


def test_color_zero_rejected(c5):
    with pytest.raises(ColoringError):
        TotalColoring(graph=c5, k=5, vertex_colors=(0, 1, 2, 3, 4),
                      edge_colors=(1, 2, 3, 4, 5))


def test_color_above_palette_rejected(c5):
    with pytest.raises(ColoringError):
        TotalColoring(graph=c5, k=3, vertex_colors=(4, 5, 1, 2, 3),
                      edge_colors=(1, 5, 2, 3, 4))


def test_wrong_lengths_rejected(c5):
    with pytest.raises(ColoringError):
        TotalColoring(graph=c5, k=5, vertex_colors=(1, 2), edge_colors=(1,) * 5)
