"""Colorings, per-vertex color signatures and the eight distinguishing conditions.

A total coloring assigns positive colors to every vertex and edge.  Four color
sets are derived per vertex u:

* ``edge_set``          colors on edges incident to u
* ``vertex_closed``     colors of u's neighbors together with u's own color
* ``edge_closed``       incident-edge colors together with u's own color
* ``full``              union of ``edge_set`` and ``vertex_closed``

The conditions C1..C8 demand one of these families be distinct either over all
vertex pairs (odd conditions) or over adjacent pairs (even conditions):

=========  ================  ============
condition  family            pairs
=========  ================  ============
C1 / C2    edge_set          all / edges
C3 / C4    vertex_closed     all / edges
C5 / C6    edge_closed       all / edges
C7 / C8    full              all / edges
=========  ================  ============

Improper colorings are representable on purpose (tests need negatives); all
verdicts are produced by :func:`is_proper_total` / :func:`satisfies`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .graphs import Graph

TOTAL = "total"
EDGE_ONLY = "edge_only"
VERTEX_ONLY = "vertex_only"

ALL_PAIRS_CONDITIONS = frozenset({1, 3, 5, 7})
ADJACENT_CONDITIONS = frozenset({2, 4, 6, 8})

#: family key per condition id
CONDITION_FAMILY = {
    1: "edge_set", 2: "edge_set",
    3: "vertex_closed", 4: "vertex_closed",
    5: "edge_closed", 6: "edge_closed",
    7: "full", 8: "full",
}


def condition_name(c: int) -> str:
    return f"C{c}"


@dataclass(frozen=True)
class ConstraintSet:
    """A subset of C1..C8 plus the coloring mode being sought."""

    conditions: frozenset
    mode: str = TOTAL

    def __post_init__(self):
        conds = frozenset(int(c) for c in self.conditions)
        object.__setattr__(self, "conditions", conds)
        if not conds <= frozenset(range(1, 9)):
            raise ValueError(f"unknown condition ids in {sorted(conds)}")
        if self.mode not in (TOTAL, EDGE_ONLY, VERTEX_ONLY):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == EDGE_ONLY and not conds <= {1, 2}:
            raise ValueError("edge_only mode admits only C1 and C2")
        if self.mode == VERTEX_ONLY and conds:
            raise ValueError("vertex_only mode admits no conditions")

    def names(self) -> list:
        return [condition_name(c) for c in sorted(self.conditions)]

    def __le__(self, other: "ConstraintSet") -> bool:
        return self.mode == other.mode and self.conditions <= other.conditions


def constraint_set(conditions: Iterable[int], mode: str = TOTAL) -> ConstraintSet:
    return ConstraintSet(frozenset(conditions), mode)


#: the fixed preset vocabulary; 12 total-mode variants plus 5 classical ones
PRESETS: dict[str, ConstraintSet] = {
    "e_vdtc": constraint_set({1}),
    "e_avdtc": constraint_set({2}),
    "v_vdtc": constraint_set({3}),
    "v_avdtc": constraint_set({4}),
    "vdtc": constraint_set({5}),
    "avdtc": constraint_set({6}),
    "mu": constraint_set({7}),
    "mu_e": constraint_set({8}),
    "all8": constraint_set(range(1, 9)),
    "six": constraint_set({1, 2, 5, 6, 7, 8}),
    "four_as": constraint_set({2, 4, 6, 8}),
    "three_as": constraint_set({2, 6, 8}),
    "chi": constraint_set((), VERTEX_ONLY),
    "chi_prime": constraint_set((), EDGE_ONLY),
    "chi_total": constraint_set(()),
    "chi_prime_s": constraint_set({1}, EDGE_ONLY),
    "chi_prime_as": constraint_set({2}, EDGE_ONLY),
}


def preset(name: str) -> ConstraintSet:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; known: {', '.join(PRESETS)}") from None


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class TotalColoring:
    """Color assignment for a graph; properness is NOT enforced here.

    ``vertex_colors`` may be empty for edge-only colorings and
    ``edge_colors`` empty for vertex-only ones.  All colors lie in [1, k].
    """

    graph: Graph
    k: int
    vertex_colors: tuple = ()
    edge_colors: tuple = ()

    def __post_init__(self):
        vc = tuple(int(c) for c in self.vertex_colors)
        ec = tuple(int(c) for c in self.edge_colors)
        object.__setattr__(self, "vertex_colors", vc)
        object.__setattr__(self, "edge_colors", ec)
        if self.k < 0:
            raise ColoringError("palette size must be nonnegative")
        if vc and len(vc) != self.graph.n:
            raise ColoringError(f"expected {self.graph.n} vertex colors, got {len(vc)}")
        if ec and len(ec) != self.graph.q:
            raise ColoringError(f"expected {self.graph.q} edge colors, got {len(ec)}")
        for c in vc + ec:
            if not 1 <= c <= self.k:
                raise ColoringError(f"color {c} outside [1, {self.k}]")

    @property
    def covers_vertices(self) -> bool:
        return len(self.vertex_colors) == self.graph.n or self.graph.n == 0

    @property
    def covers_edges(self) -> bool:
        return len(self.edge_colors) == self.graph.q or self.graph.q == 0

    def colors_used(self) -> frozenset:
        return frozenset(self.vertex_colors) | frozenset(self.edge_colors)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "vertex_colors": list(self.vertex_colors),
            "edge_colors": list(self.edge_colors),
        }

    @staticmethod
    def from_json(graph: Graph, data: Mapping) -> "TotalColoring":
        try:
            return TotalColoring(
                graph=graph,
                k=int(data["k"]),
                vertex_colors=tuple(data.get("vertex_colors", ())),
                edge_colors=tuple(data.get("edge_colors", ())),
            )
        except (KeyError, TypeError) as exc:
            raise ColoringError(f"bad coloring record: {exc}") from None


@dataclass(frozen=True)
class ColorSignature:
    """The four per-vertex color sets."""

    edge_set: frozenset
    vertex_closed: frozenset
    edge_closed: frozenset
    full: frozenset

    def family(self, key: str) -> frozenset:
        return getattr(self, {"edge_set": "edge_set",
                              "vertex_closed": "vertex_closed",
                              "edge_closed": "edge_closed",
                              "full": "full"}[key])


def color_signature(g: Graph, f: TotalColoring, u: int) -> ColorSignature:
    """All four color sets of vertex u under a full total coloring."""
    if not (0 <= u < g.n):
        raise ValueError(f"vertex {u} out of range")
    if not (f.covers_vertices and f.covers_edges):
        raise ColoringError("signature needs a coloring covering vertices and edges")
    edge_set = frozenset(f.edge_colors[j] for j in g.incident[u])
    vertex_closed = frozenset(f.vertex_colors[v] for v in g.adj[u]) | {f.vertex_colors[u]}
    return ColorSignature(
        edge_set=edge_set,
        vertex_closed=vertex_closed,
        edge_closed=edge_set | {f.vertex_colors[u]},
        full=edge_set | vertex_closed,
    )


@dataclass(frozen=True)
class Violation:
    kind: str          # "vertex_pair" | "edge_pair" | "edge_endpoint" | "C1".."C8"
    where: tuple       # offending vertices / edges
    detail: str = ""

    def to_json(self) -> dict:
        return {"kind": self.kind, "where": list(self.where), "detail": self.detail}


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violations: tuple = ()

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}


def _verdict(violations: list) -> Verdict:
    return Verdict(ok=not violations, violations=tuple(violations))


def is_proper(g: Graph, f: TotalColoring, mode: str = TOTAL) -> Verdict:
    """Properness under the given mode; lists every clash found."""
    bad: list[Violation] = []
    check_vertices = mode in (TOTAL, VERTEX_ONLY)
    check_edges = mode in (TOTAL, EDGE_ONLY)
    if check_vertices and not f.covers_vertices:
        return _verdict([Violation("coverage", (), "vertex colors missing")])
    if check_edges and not f.covers_edges:
        return _verdict([Violation("coverage", (), "edge colors missing")])
    if check_vertices:
        for u, v in g.edges:
            if f.vertex_colors[u] == f.vertex_colors[v]:
                bad.append(Violation("vertex_pair", (u, v),
                                     f"adjacent vertices share color {f.vertex_colors[u]}"))
    if check_edges:
        for u in range(g.n):
            inc = g.incident[u]
            for a in range(len(inc)):
                for b in range(a + 1, len(inc)):
                    if f.edge_colors[inc[a]] == f.edge_colors[inc[b]]:
                        bad.append(Violation(
                            "edge_pair", (g.edges[inc[a]], g.edges[inc[b]]),
                            f"edges at vertex {u} share color {f.edge_colors[inc[a]]}"))
    if mode == TOTAL:
        for j, (u, v) in enumerate(g.edges):
            for end in (u, v):
                if f.edge_colors[j] == f.vertex_colors[end]:
                    bad.append(Violation("edge_endpoint", ((u, v), end),
                                         f"edge and endpoint share color {f.edge_colors[j]}"))
    return _verdict(bad)


def is_proper_total(g: Graph, f: TotalColoring) -> Verdict:
    return is_proper(g, f, TOTAL)


def _edge_mode_sets(g: Graph, f: TotalColoring) -> list:
    return [frozenset(f.edge_colors[j] for j in g.incident[u]) for u in range(g.n)]


def satisfies(g: Graph, f: TotalColoring, cs: ConstraintSet) -> Verdict:
    """Properness plus every condition in ``cs``; reports all violations."""
    bad = list(is_proper(g, f, cs.mode).violations)
    if any(v.kind == "coverage" for v in bad):
        return _verdict(bad)
    if not cs.conditions:
        return _verdict(bad)
    if cs.mode == EDGE_ONLY:
        fams = {"edge_set": _edge_mode_sets(g, f)}
    else:
        sigs = [color_signature(g, f, u) for u in range(g.n)]
        fams = {
            key: [getattr(s, key) for s in sigs]
            for key in ("edge_set", "vertex_closed", "edge_closed", "full")
        }
    for c in sorted(cs.conditions):
        sets = fams[CONDITION_FAMILY[c]]
        if c in ALL_PAIRS_CONDITIONS:
            pair_range = ((u, v) for u in range(g.n) for v in range(u + 1, g.n))
        else:
            pair_range = iter(g.edges)
        for u, v in pair_range:
            if sets[u] == sets[v]:
                bad.append(Violation(
                    condition_name(c), (u, v),
                    f"equal {CONDITION_FAMILY[c]} sets {sorted(sets[u])}"))
    return _verdict(bad)


def relabel_colors(f: TotalColoring, perm: Mapping) -> TotalColoring:
    """Apply a color bijection on [1, k] pointwise."""
    mapping = {int(a): int(b) for a, b in perm.items()}
    domain = set(range(1, f.k + 1))
    if set(mapping) != domain or set(mapping.values()) != domain:
        raise ValueError("perm must be a bijection on [1, k]")
    return TotalColoring(
        graph=f.graph,
        k=f.k,
        vertex_colors=tuple(mapping[c] for c in f.vertex_colors),
        edge_colors=tuple(mapping[c] for c in f.edge_colors),
    )
