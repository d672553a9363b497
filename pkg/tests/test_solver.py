import pytest

from dtcolor.graphs import Graph, family, enumerate_connected, is_in_f3s
from dtcolor.colorings import constraint_set, preset, satisfies
from dtcolor.solver import (
    BUDGET_EXHAUSTED,
    EXACT,
    INFEASIBLE,
    LOWER_BOUND_ONLY,
    REFUTED,
    SearchBudget,
    WITNESS,
    chromatic_number,
    feasible_at,
    lower_bound,
    structural_feasibility,
)


# ---------------------------------------------------------------------------
# structural gate

def test_complete_graphs_blocked_for_neighbor_conditions():
    for n in range(3, 7):
        g = family("complete", n)
        pairs = structural_feasibility(g, preset("v_vdtc"))
        assert len(pairs) == n * (n - 1) // 2
        assert structural_feasibility(g, preset("v_avdtc"))
        assert structural_feasibility(g, preset("all8"))


def test_cycle_passes_gate(c5):
    assert structural_feasibility(c5, preset("all8")) == []


def test_complete_bipartite_gate():
    g = family("complete_bipartite", 3, 3)
    # same-side vertices are not closed twins (u is in its own closed set);
    # opposite sides differ outright, so both variants stay available
    assert structural_feasibility(g, preset("v_avdtc")) == []
    assert structural_feasibility(g, preset("v_vdtc")) == []


# ---------------------------------------------------------------------------
# lower bounds

def test_lower_bound_floor(c5):
    assert lower_bound(c5, preset("chi_total")) == 3  # max degree + 1
    assert lower_bound(c5, preset("chi_prime")) == 2
    assert lower_bound(c5, preset("chi")) == 2


def test_lower_bound_counting(c5):
    # five degree-2 vertices need five distinct incident 2-sets / closed 3-sets
    assert lower_bound(c5, preset("e_vdtc")) == 4   # C(4,2) = 6 >= 5
    assert lower_bound(c5, preset("vdtc")) == 5     # C(4,3) = 4 < 5
    assert lower_bound(c5, preset("all8")) == 5


def test_lower_bound_repeated_degree():
    assert lower_bound(family("star", 4), preset("mu")) == 4  # max degree + 1
    # two leaves share degree 1, giving the d+2 floor
    assert lower_bound(family("path", 3), preset("mu")) == 3


def test_lower_bound_distance_three():
    p4 = family("path", 4)
    # ends are at distance 3 with degree sum 2: need C(m, 2) >= 4
    assert lower_bound(p4, preset("mu")) == 4


def test_lower_bound_never_exceeds_value():
    for n in (3, 4, 5):
        for g in enumerate_connected(n):
            if not is_in_f3s(g):
                continue
            for name in ("e_vdtc", "vdtc", "mu", "chi_total"):
                r = chromatic_number(g, preset(name))
                assert r.status == EXACT
                assert lower_bound(g, preset(name)) <= r.value


# ---------------------------------------------------------------------------
# feasibility decisions

def test_ring_feasibility_boundary(c5):
    outcome, witness, _ = feasible_at(c5, 5, preset("all8"))
    assert outcome == WITNESS
    assert satisfies(c5, witness, preset("all8")).ok
    outcome, witness, _ = feasible_at(c5, 4, preset("all8"))
    assert outcome == REFUTED and witness is None


def test_path_adjacent_full_boundary():
    p3 = family("path", 3)
    assert feasible_at(p3, 3, preset("mu_e"))[0] == REFUTED
    outcome, witness, _ = feasible_at(p3, 4, preset("mu_e"))
    assert outcome == WITNESS
    assert satisfies(p3, witness, preset("mu_e")).ok


def test_feasibility_monotone_in_k(c5):
    # once feasible, stays feasible for larger palettes
    for k in (5, 6, 7):
        assert feasible_at(c5, k, preset("all8"))[0] == WITNESS


# ---------------------------------------------------------------------------
# chromatic numbers

def test_ring_all8(c5):
    r = chromatic_number(c5, preset("all8"))
    assert (r.status, r.value) == (EXACT, 5)
    assert satisfies(c5, r.witness, preset("all8")).ok


def test_star_full_family_values():
    for m in (3, 4, 5):
        r = chromatic_number(family("star", m + 1), preset("mu"))
        assert (r.status, r.value) == (EXACT, m + 1)


def test_complete_bipartite_edge_variant():
    r = chromatic_number(family("complete_bipartite", 3, 2),
                         preset("chi_prime_s"))
    assert (r.status, r.value) == (EXACT, 4)


def test_classical_values():
    assert chromatic_number(family("complete", 4), preset("chi")).value == 4
    assert chromatic_number(c5_ := family("cycle", 5), preset("chi")).value == 3
    assert chromatic_number(c5_, preset("chi_prime")).value == 3
    assert chromatic_number(c5_, preset("chi_total")).value == 4
    assert chromatic_number(family("path", 5), preset("chi_prime")).value == 2


def test_infeasible_result_shape():
    r = chromatic_number(family("complete", 5), preset("v_vdtc"))
    assert r.status == INFEASIBLE
    assert r.value is None and r.witness is None
    assert len(r.infeasible_pairs) == 10


def test_family_gate_raises():
    with pytest.raises(ValueError):
        chromatic_number(family("complete", 2), preset("mu"))
    # classical variants accept anything
    assert chromatic_number(family("complete", 2), preset("chi_total")).value == 3


def test_empty_edge_set_chromatic_index():
    g = Graph(3, [])
    r = chromatic_number(g, preset("chi_prime"))
    assert (r.status, r.value) == (EXACT, 0)
    assert chromatic_number(g, preset("chi")).value == 1


def test_determinism(c5):
    a = chromatic_number(c5, preset("mu"))
    b = chromatic_number(c5, preset("mu"))
    assert (a.status, a.value, a.nodes) == (b.status, b.value, b.nodes)


def test_budget_exhaustion_reports_lower_bound():
    g = family("complete", 5)
    tight = SearchBudget(max_nodes=50, max_seconds=60)
    r = chromatic_number(g, preset("mu"), tight)
    assert r.status == LOWER_BOUND_ONLY
    assert r.value == lower_bound(g, preset("mu"))
    assert r.witness is None


def test_antichain_consistency():
    for spec in ("cycle:5", "star:5", "kb:3,2", "path:4"):
        from dtcolor.graphs import parse_family_spec
        g = parse_family_spec(spec)
        val = {p: chromatic_number(g, preset(p)).value
               for p in ("e_vdtc", "e_avdtc", "chi_prime_s", "chi_prime_as",
                         "mu", "mu_e", "chi_total")}
        assert val["e_vdtc"] >= val["chi_prime_s"]
        assert val["e_vdtc"] >= val["e_avdtc"]
        assert val["e_avdtc"] >= val["chi_prime_as"]
        assert val["mu"] >= val["mu_e"] >= val["chi_total"]


def test_subset_monotone_values(c5):
    small = chromatic_number(c5, constraint_set({7})).value
    big = chromatic_number(c5, constraint_set({5, 7})).value
    assert small <= big


def test_witnesses_always_verify():
    for n in (3, 4):
        for g in enumerate_connected(n):
            if not is_in_f3s(g):
                continue
            for name in ("six", "mu", "e_avdtc", "vdtc"):
                r = chromatic_number(g, preset(name))
                assert r.status == EXACT
                assert satisfies(g, r.witness, preset(name)).ok
                assert max(r.witness.colors_used()) <= r.value
