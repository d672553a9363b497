"""Exact minimum-palette search for constrained proper colorings.

For a graph, a mode (total / edge-only / vertex-only) and a set of
distinguishing conditions, :func:`chromatic_number` computes the least palette
size k admitting a proper coloring that satisfies every condition.  The search
is a lower-bound-seeded iterative deepening: for each candidate k a complete
backtracking pass either produces a witness or refutes feasibility.

Soundness of the speedups rests on one fact, tested in the suite: all the
conditions compare color *sets*, so satisfaction is invariant under any
permutation of the palette.  That licenses two canonicalizations:

* the star of one maximum-degree vertex is pre-assigned fixed colors, and
* a color larger than all used so far may only be introduced in increasing
  order (first-use order).

Neither affects the witness/refuted outcome, only the node counts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .graphs import Graph, _bfs_distances, closed_twin_pairs, degree_stats, is_in_f3s
from .colorings import (
    ADJACENT_CONDITIONS,
    ALL_PAIRS_CONDITIONS,
    CONDITION_FAMILY,
    ConstraintSet,
    EDGE_ONLY,
    TOTAL,
    TotalColoring,
    VERTEX_ONLY,
)

EXACT = "exact"
LOWER_BOUND_ONLY = "lower_bound_only"
INFEASIBLE = "infeasible_structurally"

WITNESS = "witness"
REFUTED = "refuted"
BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10_000_000
    max_seconds: float = 60.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class SolveResult:
    status: str
    value: Optional[int]
    witness: Optional[TotalColoring]
    nodes: int = 0
    millis: int = 0
    infeasible_pairs: tuple = ()

    def to_json(self, graph6: str = "", cs: ConstraintSet | None = None,
                with_witness: bool = True) -> dict:
        out = {
            "graph6": graph6,
            "constraint_set": cs.names() if cs else [],
            "mode": cs.mode if cs else "",
            "status": self.status,
            "value": self.value,
            "nodes": self.nodes,
            "millis": self.millis,
        }
        if self.status == INFEASIBLE:
            out["infeasible_pairs"] = [list(p) for p in self.infeasible_pairs]
        if with_witness and self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


class _Budget(Exception):
    pass


def structural_feasibility(g: Graph, cs: ConstraintSet):
    """Closed-twin gate for the neighbor-color conditions.

    Returns the offending pairs (empty means feasible).  Coincident closed
    neighborhoods force equal neighbor-color sets under any proper coloring,
    and twin-free graphs always admit the all-distinct construction, so this
    test is exact for C3/C4; every other condition is always attainable.
    """
    if 3 in cs.conditions:
        return closed_twin_pairs(g, adjacent_only=False)
    if 4 in cs.conditions:
        return closed_twin_pairs(g, adjacent_only=True)
    return []


def lower_bound(g: Graph, cs: ConstraintSet) -> int:
    """Max over proven necessary conditions; never exceeds the optimum."""
    st = degree_stats(g)
    counts = st.degree_counts
    if cs.mode == TOTAL:
        bound = st.max_degree + 1 if g.n else 0
    elif cs.mode == EDGE_ONLY:
        bound = st.max_degree
    else:
        bound = 0 if g.n == 0 else (2 if g.q else 1)

    def min_k(requirement) -> int:
        k = 0
        while any(not requirement(k, d, nd) for d, nd in counts.items()):
            k += 1
            if k > 4 * (g.n + g.q) + 8:
                raise AssertionError("runaway counting bound")
        return k

    if 1 in cs.conditions:
        # incident-edge color sets are d-subsets, distinct over all vertices
        bound = max(bound, min_k(lambda k, d, nd: comb(k, d) >= nd))
    if 5 in cs.conditions:
        # closed incident sets are (d+1)-subsets, distinct over all vertices
        bound = max(bound, min_k(lambda k, d, nd: comb(k, d + 1) >= nd))
    if 7 in cs.conditions:
        repeated = [d for d, nd in counts.items() if nd >= 2]
        if repeated:
            # two degree-d vertices cannot both fill the whole palette
            bound = max(bound, max(repeated) + 2)
        if st.diameter >= 3:
            delta = st.min_degree
            need = 0
            for u in range(g.n):
                dist = _bfs_distances(g, u)
                for v in range(u + 1, g.n):
                    if dist[v] >= 3 or dist[v] < 0:
                        need = max(need, g.degree(u) + g.degree(v) + 2)
            if need:
                m = 0
                while comb(m, delta + 1) < need:
                    m += 1
                bound = max(bound, m)
    return bound


class _Search:
    """One feasibility decision: is there a satisfying coloring with <= k colors."""

    def __init__(self, g: Graph, k: int, cs: ConstraintSet, budget: SearchBudget):
        self.g = g
        self.k = k
        self.cs = cs
        self.budget = budget
        self.nodes = 0
        self._deadline = None

        mode = cs.mode
        self.use_vertices = mode in (TOTAL, VERTEX_ONLY)
        self.use_edges = mode in (TOTAL, EDGE_ONLY)

        # Element table: vertices first, then edges, both by index.  eids are
        # positions in this table; the search order is built separately.
        self.elements = []
        self.vid = [-1] * g.n
        self.eid = [-1] * g.q
        if self.use_vertices:
            for u in range(g.n):
                self.vid[u] = len(self.elements)
                self.elements.append(("v", u))
        if self.use_edges:
            for j in range(g.q):
                self.eid[j] = len(self.elements)
                self.elements.append(("e", j))
        m = len(self.elements)
        self.colors = [0] * m

        # Clash lists (elements that must take different colors).
        conflicts = [[] for _ in range(m)]
        if self.use_vertices:
            for u, v in g.edges:
                conflicts[self.vid[u]].append(self.vid[v])
                conflicts[self.vid[v]].append(self.vid[u])
        if self.use_edges:
            for u in range(g.n):
                inc = g.incident[u]
                for a in range(len(inc)):
                    for b in range(a + 1, len(inc)):
                        conflicts[self.eid[inc[a]]].append(self.eid[inc[b]])
                        conflicts[self.eid[inc[b]]].append(self.eid[inc[a]])
        if mode == TOTAL:
            for j, (u, v) in enumerate(g.edges):
                conflicts[self.eid[j]].append(self.vid[u])
                conflicts[self.eid[j]].append(self.vid[v])
                conflicts[self.vid[u]].append(self.eid[j])
                conflicts[self.vid[v]].append(self.eid[j])
        self.conflicts = [tuple(dict.fromkeys(c)) for c in conflicts]

        # Signature machinery.  A vertex "completes" once every element its
        # needed color sets depend on is assigned; completed signatures are
        # immutable afterwards, so equality checks happen exactly once per
        # vertex pair along any search path.
        self.fams = sorted({CONDITION_FAMILY[c] for c in cs.conditions})
        self.fam_pos = {f: i for i, f in enumerate(self.fams)}
        self.all_pair_fams = sorted(
            {self.fam_pos[CONDITION_FAMILY[c]]
             for c in cs.conditions & ALL_PAIRS_CONDITIONS})
        self.adjacent_fams = sorted(
            {self.fam_pos[CONDITION_FAMILY[c]]
             for c in cs.conditions & ADJACENT_CONDITIONS})
        closure = [set() for _ in range(g.n)]
        for fam in self.fams:
            for u in range(g.n):
                if fam in ("edge_set", "edge_closed", "full"):
                    closure[u].update(self.eid[j] for j in g.incident[u])
                if fam in ("vertex_closed", "edge_closed", "full"):
                    closure[u].add(self.vid[u])
                if fam in ("vertex_closed", "full"):
                    closure[u].update(self.vid[v] for v in g.adj[u])
        self.remaining = [len(c) for c in closure]
        member_of = [[] for _ in range(m)]
        for u in range(g.n):
            for e in closure[u]:
                member_of[e].append(u)
        self.member_of = [tuple(x) for x in member_of]
        self.completed: list[int] = []
        self.completed_flag = [False] * g.n
        self.sigs: list = [None] * g.n

    # -- signature helpers -------------------------------------------------

    def _signature(self, u: int) -> tuple:
        g, colors = self.g, self.colors
        edge_mask = 0
        if self.use_edges:
            for j in g.incident[u]:
                edge_mask |= 1 << colors[self.eid[j]]
        out = []
        for fam in self.fams:
            if fam == "edge_set":
                out.append(edge_mask)
            elif fam == "vertex_closed":
                mask = 1 << colors[self.vid[u]]
                for v in g.adj[u]:
                    mask |= 1 << colors[self.vid[v]]
                out.append(mask)
            elif fam == "edge_closed":
                out.append(edge_mask | (1 << colors[self.vid[u]]))
            else:  # full
                mask = 1 << colors[self.vid[u]] if self.use_vertices else 0
                for v in g.adj[u]:
                    mask |= 1 << colors[self.vid[v]]
                out.append(edge_mask | mask)
        return tuple(out)

    def _admit(self, u: int) -> bool:
        sig = self._signature(u)
        for fi in self.all_pair_fams:
            mark = sig[fi]
            for w in self.completed:
                if self.sigs[w][fi] == mark:
                    return False
        if self.adjacent_fams:
            for w in self.g.adj[u]:
                if self.completed_flag[w]:
                    for fi in self.adjacent_fams:
                        if self.sigs[w][fi] == sig[fi]:
                            return False
        self.sigs[u] = sig
        self.completed.append(u)
        self.completed_flag[u] = True
        return True

    def _assign(self, eid: int, c: int):
        """Place a color; returns (ok, undo list of vertices completed)."""
        self.colors[eid] = c
        added = []
        for u in self.member_of[eid]:
            self.remaining[u] -= 1
        for u in self.member_of[eid]:
            if self.remaining[u] == 0:
                if self._admit(u):
                    added.append(u)
                else:
                    self._unassign(eid, added)
                    return False, added
        return True, added

    def _unassign(self, eid: int, added: list):
        for u in reversed(added):
            self.completed.pop()
            self.completed_flag[u] = False
            self.sigs[u] = None
        for u in self.member_of[eid]:
            self.remaining[u] += 1
        self.colors[eid] = 0

    # -- search ------------------------------------------------------------

    def _preassignment(self):
        """Canonical star of one maximum-degree vertex, or None if k is too
        small for any proper coloring of that star."""
        g = self.g
        if g.n == 0:
            return []
        u0 = max(range(g.n), key=lambda u: (g.degree(u), -u))
        pre = []
        nxt = 1
        if self.use_vertices:
            pre.append((self.vid[u0], nxt))
            nxt += 1
        if self.use_edges:
            for j in g.incident[u0]:
                pre.append((self.eid[j], nxt))
                nxt += 1
        if nxt - 1 > self.k:
            return None
        return pre

    def run(self):
        # Vertices whose needed sets depend on nothing (isolated vertices
        # under the incident-edge family) are complete before any assignment.
        if self.fams:
            for u in range(self.g.n):
                if self.remaining[u] == 0 and not self.completed_flag[u]:
                    if not self._admit(u):
                        return REFUTED, None
        pre = self._preassignment()
        if pre is None:
            return REFUTED, None  # the densest star already needs > k colors
        assigned = set()
        max_used = 0
        for eid, c in pre:
            ok, _ = self._assign(eid, c)
            if not ok:
                return REFUTED, None  # canonical star forces a clash
            assigned.add(eid)
            max_used = max(max_used, c)

        structure = [self.g.degree(u) for u in range(self.g.n)]

        def weight(item):
            kind, idx = self.elements[item]
            if kind == "v":
                return (-structure[idx], 0, idx)
            u, v = self.g.edges[idx]
            return (-(structure[u] + structure[v]), 1, idx)

        order = sorted((e for e in range(len(self.elements)) if e not in assigned),
                       key=weight)
        colors = self.colors
        conflicts = self.conflicts
        k = self.k
        t0 = time.monotonic()
        check_mask = 0x0FFF

        def dfs(pos: int, max_used: int) -> bool:
            if pos == len(order):
                return True
            eid = order[pos]
            forbidden = 0
            for other in conflicts[eid]:
                forbidden |= 1 << colors[other]
            limit = max_used + 1 if max_used < k else k
            for c in range(1, limit + 1):
                if (forbidden >> c) & 1:
                    continue
                self.nodes += 1
                if (self.nodes & check_mask) == 0:
                    if self.nodes > self.budget.max_nodes:
                        raise _Budget
                    if time.monotonic() - t0 > self.budget.max_seconds:
                        raise _Budget
                ok, added = self._assign(eid, c)
                if ok:
                    if dfs(pos + 1, max_used if c <= max_used else c):
                        return True
                    self._unassign(eid, added)
            return False

        try:
            found = dfs(0, max_used)
        except _Budget:
            return BUDGET_EXHAUSTED, None
        if not found:
            return REFUTED, None
        vc = tuple(colors[self.vid[u]] for u in range(self.g.n)) if self.use_vertices else ()
        ec = tuple(colors[self.eid[j]] for j in range(self.g.q)) if self.use_edges else ()
        return WITNESS, TotalColoring(graph=self.g, k=k,
                                      vertex_colors=vc, edge_colors=ec)


def feasible_at(g: Graph, k: int, cs: ConstraintSet,
                budget: SearchBudget = DEFAULT_BUDGET):
    """Decide palette-k feasibility.

    Returns ``(outcome, witness_or_None, nodes)`` with outcome one of
    ``witness`` / ``refuted`` / ``budget_exhausted``.  Assumes the structural
    gate has passed.  The outcome does not depend on search order, only the
    node count does.
    """
    if k < 0:
        raise ValueError("palette size must be nonnegative")
    search = _Search(g, k, cs, budget)
    outcome, witness = search.run()
    return outcome, witness, search.nodes


def _palette_cap(g: Graph, cs: ConstraintSet) -> int:
    if cs.mode == VERTEX_ONLY:
        return g.n
    if cs.mode == EDGE_ONLY:
        return g.q
    return g.n + g.q


def chromatic_number(g: Graph, cs: ConstraintSet,
                     budget: SearchBudget = DEFAULT_BUDGET) -> SolveResult:
    """Least k admitting a satisfying coloring, by ascending feasibility tests.

    Distinguishing variants require membership in the working family (n >= 3,
    no isolated edges, at most one isolated vertex); the classical variants
    accept any simple graph.  Budget exhaustion is reported as a status, never
    an exception.
    """
    if cs.conditions and not is_in_f3s(g):
        raise ValueError(
            "distinguishing variants need n >= 3, no isolated edges and "
            "at most one isolated vertex")
    t0 = time.monotonic()
    pairs = structural_feasibility(g, cs)
    if pairs:
        return SolveResult(
            status=INFEASIBLE, value=None, witness=None,
            millis=int(1000 * (time.monotonic() - t0)),
            infeasible_pairs=tuple(tuple(p) for p in pairs))
    total_nodes = 0
    cap = _palette_cap(g, cs)
    k = lower_bound(g, cs)
    while True:
        outcome, witness, nodes = feasible_at(g, k, cs, budget)
        total_nodes += nodes
        if outcome == WITNESS:
            return SolveResult(
                status=EXACT, value=k, witness=witness, nodes=total_nodes,
                millis=int(1000 * (time.monotonic() - t0)))
        if outcome == BUDGET_EXHAUSTED:
            return SolveResult(
                status=LOWER_BOUND_ONLY, value=k, witness=None,
                nodes=total_nodes,
                millis=int(1000 * (time.monotonic() - t0)))
        k += 1
        if k > cap:
            raise RuntimeError(
                f"no satisfying coloring up to the structural cap {cap}; "
                "this should be impossible for admissible inputs")
