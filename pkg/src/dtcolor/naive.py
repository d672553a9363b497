"""Reference oracle: exhaustive enumeration with no cleverness.

This module recomputes chromatic values the slow, obviously-correct way so the
real solver can be tested against it.  Colorings are enumerated recursively in
natural element order (vertices, then edges, both by index), rejecting only
assignments that already break properness; every complete proper coloring is
then checked against the requested conditions from scratch with plain set
comparisons.  No lower bounds, no symmetry breaking, no condition-based
pruning, no ordering heuristics.

Several constraint sets of the same mode can be resolved in one sweep: the
enumeration for palette k is shared and each pending constraint set records
the first k at which some coloring satisfies it.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .graphs import Graph
from .colorings import (
    ADJACENT_CONDITIONS,
    CONDITION_FAMILY,
    ConstraintSet,
    EDGE_ONLY,
    TOTAL,
    VERTEX_ONLY,
)

#: value used for structurally unattainable variants
UNATTAINABLE = None


def has_closed_twins(g: Graph, adjacent_only: bool) -> bool:
    """Direct closed-neighborhood comparison, independent of graphs helpers."""
    closed = [set(g.adj[u]) | {u} for u in range(g.n)]
    if adjacent_only:
        return any(closed[u] == closed[v] for u, v in g.edges)
    return any(
        closed[u] == closed[v]
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )


def _mode_cap(g: Graph, mode: str) -> int:
    if mode == VERTEX_ONLY:
        return g.n
    if mode == EDGE_ONLY:
        return g.q
    return g.n + g.q


_FAM_INDEX = {"edge_set": 0, "vertex_closed": 1, "edge_closed": 2, "full": 3}


def _condition_checks(g: Graph, cs: ConstraintSet) -> tuple:
    """(family index, pair tuple) per condition."""
    all_pairs = tuple((u, v) for u in range(g.n) for v in range(u + 1, g.n))
    out = []
    for c in sorted(cs.conditions):
        pairs = tuple(g.edges) if c in ADJACENT_CONDITIONS else all_pairs
        out.append((_FAM_INDEX[CONDITION_FAMILY[c]], pairs))
    return tuple(out)


def _sweep_mode(g: Graph, mode: str, pending: list, results: dict):
    """Resolve every pending constraint set of one mode by shared enumeration.

    Color sets are represented as bitmasks (bit c for color c); this changes
    nothing about what is enumerated or checked, only how fast set equality
    compares.  Vertex-color families are computed once per vertex-part prefix
    since the edge subtree below cannot change them.
    """
    use_vertices = mode in (TOTAL, VERTEX_ONLY)
    use_edges = mode in (TOTAL, EDGE_ONLY)
    n = g.n
    nv = n if use_vertices else 0

    # element -> tuple of earlier elements it must differ from
    earlier: list[tuple] = []
    if use_vertices:
        for u in range(n):
            earlier.append(tuple(v for v in g.adj[u] if v < u))
    if use_edges:
        for j, (u, v) in enumerate(g.edges):
            prev = []
            if use_vertices:
                prev += [u, v]
            for w in (u, v):
                prev += [nv + i for i in g.incident[w] if i < j]
            earlier.append(tuple(sorted(set(prev))))
    m = len(earlier)
    colors = [0] * m
    cap = _mode_cap(g, mode)
    checks = {cs: _condition_checks(g, cs) for cs in pending}
    incident = [tuple(nv + j for j in g.incident[u]) for u in range(n)]
    neighbors = [tuple(g.adj[u]) for u in range(n)]
    rng_n = tuple(range(n))

    for k in range(0, cap + 1):
        active = list(pending)
        if not active:
            return
        snapshot = tuple(active)
        need = [False] * 4
        for cs in active:
            for fi, _ in checks[cs]:
                need[fi] = True
        need_edge_part = need[0] or need[2] or need[3]
        vc_cache = [0] * n

        def compute_vertex_closed():
            for u in rng_n:
                acc = 1 << colors[u]
                for v in neighbors[u]:
                    acc |= 1 << colors[v]
                vc_cache[u] = acc

        def leaf() -> bool:
            nonlocal snapshot, need_edge_part
            if nv == m and (need[1] or need[3]) and use_vertices:
                compute_vertex_closed()  # no edge positions, so no boundary hook
            fams = [None, vc_cache, None, None]
            if need_edge_part:
                es = [0] * n
                for u in rng_n:
                    acc = 0
                    for e in incident[u]:
                        acc |= 1 << colors[e]
                    es[u] = acc
                fams[0] = es
                if need[2]:
                    fams[2] = [es[u] | (1 << colors[u]) for u in rng_n]
                if need[3]:
                    fams[3] = [es[u] | vc_cache[u] for u in rng_n]
            changed = False
            for cs in snapshot:
                good = True
                for fi, pairs in checks[cs]:
                    masks = fams[fi]
                    for u, v in pairs:
                        if masks[u] == masks[v]:
                            good = False
                            break
                    if not good:
                        break
                if good:
                    results[cs] = k
                    active.remove(cs)
                    pending.remove(cs)
                    changed = True
            if changed:
                snapshot = tuple(active)
                for i in range(4):
                    need[i] = False
                for cs in active:
                    for fi, _ in checks[cs]:
                        need[fi] = True
                need_edge_part = need[0] or need[2] or need[3]
            return bool(active)

        last = m - 1

        def rec(pos: int) -> bool:
            if pos == nv and (need[1] or need[3]) and use_vertices:
                compute_vertex_closed()
            forbidden = 0
            for other in earlier[pos]:
                forbidden |= 1 << colors[other]
            if pos == last:
                for c in range(1, k + 1):
                    if (forbidden >> c) & 1:
                        continue
                    colors[pos] = c
                    if not leaf():
                        return False
                return True
            nxt = pos + 1
            for c in range(1, k + 1):
                if (forbidden >> c) & 1:
                    continue
                colors[pos] = c
                if not rec(nxt):
                    return False
            return True

        if m == 0:
            leaf()
        else:
            rec(0)
    if pending:
        raise RuntimeError(
            f"enumeration exhausted palette cap {cap} with unresolved "
            f"constraint sets; input outside the admissible family?")


def naive_values(g: Graph, constraint_sets: Iterable[ConstraintSet]) -> dict:
    """First feasible palette size per constraint set, or None when the
    closed-twin obstruction applies."""
    results: dict[ConstraintSet, Optional[int]] = {}
    by_mode: dict[str, list] = {}
    for cs in constraint_sets:
        if cs in results or cs in sum(by_mode.values(), []):
            continue
        if 3 in cs.conditions and has_closed_twins(g, adjacent_only=False):
            results[cs] = UNATTAINABLE
        elif 4 in cs.conditions and has_closed_twins(g, adjacent_only=True):
            results[cs] = UNATTAINABLE
        else:
            by_mode.setdefault(cs.mode, []).append(cs)
    for mode, group in by_mode.items():
        _sweep_mode(g, mode, group, results)
    return results


def naive_chromatic_number(g: Graph, cs: ConstraintSet) -> Optional[int]:
    return naive_values(g, [cs])[cs]
