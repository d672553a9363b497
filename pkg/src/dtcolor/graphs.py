"""Simple undirected graphs with dense indices, graph6 IO and small-graph machinery.

Vertices are ``0..n-1``.  Edges carry stable indices: the edge list is always
sorted lexicographically by endpoint pair, so colorings can be stored as flat
arrays keyed by edge index.  Everything here is immutable after construction
and safe to share across workers.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional, Sequence

INF = math.inf


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the offending byte offset."""

    def __init__(self, offset: int, message: str):
        self.offset = offset
        super().__init__(f"byte {offset}: {message}")


class Graph:
    """Simple undirected graph: no loops, no parallel edges."""

    __slots__ = ("n", "edges", "label", "adj", "incident", "_edge_index")

    def __init__(self, n: int, edges, label: str | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            canon.add((min(u, v), max(u, v)))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        self.label = label
        adj = [set() for _ in range(n)]
        incident = [[] for _ in range(n)]
        for j, (u, v) in enumerate(self.edges):
            adj[u].add(v)
            adj[v].add(u)
            incident[u].append(j)
            incident[v].append(j)
        self.adj = tuple(frozenset(s) for s in adj)
        self.incident = tuple(tuple(ids) for ids in incident)
        self._edge_index = {e: j for j, e in enumerate(self.edges)}

    @property
    def q(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def neighbors(self, u: int) -> frozenset:
        return self.adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        return self._edge_index[(min(u, v), max(u, v))]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"Graph(n={self.n}, q={self.q}{tag})"

    # Structure edits used by sweeps; each returns a fresh Graph.

    def without_edge(self, u: int, v: int) -> "Graph":
        e = (min(u, v), max(u, v))
        return Graph(self.n, [x for x in self.edges if x != e])

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, list(self.edges) + [(u, v)])

    def without_vertex(self, w: int) -> "Graph":
        remap = {v: i for i, v in enumerate(x for x in range(self.n) if x != w)}
        edges = [(remap[u], remap[v]) for u, v in self.edges if w not in (u, v)]
        return Graph(self.n - 1, edges)

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", dict]:
        """Induced subgraph plus the old->new vertex map."""
        vs = sorted(set(vertices))
        remap = {v: i for i, v in enumerate(vs)}
        edges = [
            (remap[u], remap[v])
            for u, v in self.edges
            if u in remap and v in remap
        ]
        return Graph(len(vs), edges), remap


@dataclass(frozen=True)
class DegreeStats:
    degrees: tuple
    max_degree: int
    min_degree: int
    degree_counts: dict
    diameter: float
    girth: float


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset
    side_b: frozenset


# ---------------------------------------------------------------------------
# graph6 encoding (standard 63-offset short form, n <= 62)

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    line = text.rstrip("\n\r")
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise Graph6Error(0, "empty graph6 line")
    for i, ch in enumerate(line):
        if not (63 <= ord(ch) <= 126):
            raise Graph6Error(i, f"character {ch!r} outside graph6 range")
    first = ord(line[0]) - 63
    if first == 63:
        raise Graph6Error(0, "long-form vertex counts (n > 62) not supported")
    n = first
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = line[1:]
    if len(payload) < nbytes:
        raise Graph6Error(len(line), f"payload too short: need {nbytes} bytes, got {len(payload)}")
    if len(payload) > nbytes:
        raise Graph6Error(1 + nbytes, "trailing garbage after graph6 payload")
    bits = []
    for ch in payload:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    for pos in range(nbits, len(bits)):
        if bits[pos]:
            raise Graph6Error(1 + pos // 6, "nonzero padding bits")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 line (short form)."""
    if g.n > 62:
        raise ValueError("graph6 short form supports at most 62 vertices")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Named families

def family(kind: str, *params: int) -> Graph:
    """Construct a named graph family member.

    Kinds: path, cycle, star, complete, complete_bipartite.  Sizes count
    vertices; vertex 0 is the star center; complete_bipartite takes (m, n)
    with m >= n >= 1 and puts the m-side first.
    """
    if any(p <= 0 for p in params):
        raise ValueError(f"family parameters must be positive, got {params}")
    if kind == "path":
        (n,) = params
        return Graph(n, [(i, i + 1) for i in range(n - 1)], label=f"P{n}")
    if kind == "cycle":
        (n,) = params
        if n < 3:
            raise ValueError("cycles need at least 3 vertices")
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
        return Graph(n, edges, label=f"C{n}")
    if kind == "star":
        (n,) = params
        return Graph(n, [(0, i) for i in range(1, n)], label=f"K1,{n - 1}")
    if kind == "complete":
        (n,) = params
        return Graph(n, list(combinations(range(n), 2)), label=f"K{n}")
    if kind == "complete_bipartite":
        m, n = params
        if m < n:
            raise ValueError("complete_bipartite expects (m, n) with m >= n")
        edges = [(i, m + j) for i in range(m) for j in range(n)]
        return Graph(m + n, edges, label=f"K{m},{n}")
    raise ValueError(f"unknown family {kind!r}")


def parse_family_spec(spec: str) -> Graph:
    """Parse CLI-friendly family specifiers like ``cycle:5`` or ``kb:3,2``."""
    if ":" not in spec:
        raise ValueError(f"bad family spec {spec!r}, expected kind:params")
    kind, _, rest = spec.partition(":")
    kind = {"kb": "complete_bipartite"}.get(kind, kind)
    try:
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise ValueError(f"bad family parameters in {spec!r}") from None
    return family(kind, *params)


# ---------------------------------------------------------------------------
# Invariants

def _bfs_distances(g: Graph, source: int) -> list:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def degree_stats(g: Graph) -> DegreeStats:
    """Degrees, degree counts, diameter and girth (inf when undefined)."""
    degrees = tuple(g.degree(u) for u in range(g.n))
    counts: dict[int, int] = {}
    for d in degrees:
        counts[d] = counts.get(d, 0) + 1
    diameter: float = 0
    for u in range(g.n):
        dist = _bfs_distances(g, u)
        if any(d < 0 for d in dist):
            diameter = INF
            break
        diameter = max(diameter, max(dist))
    girth: float = INF
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    girth = min(girth, dist[u] + dist[v] + 1)
        if girth == 3:
            break
    return DegreeStats(
        degrees=degrees,
        max_degree=max(degrees) if degrees else 0,
        min_degree=min(degrees) if degrees else 0,
        degree_counts=counts,
        diameter=diameter,
        girth=girth,
    )


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return all(d >= 0 for d in _bfs_distances(g, 0))


def components(g: Graph) -> list:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        out.append(sorted(comp))
    return out


def is_in_f3s(g: Graph) -> bool:
    """Membership in the working family: n >= 3, no isolated-edge component,
    at most one isolated vertex."""
    if g.n < 3:
        return False
    isolated = sum(1 for u in range(g.n) if g.degree(u) == 0)
    if isolated > 1:
        return False
    for comp in components(g):
        if len(comp) == 2:
            return False
    return True


def closed_twin_pairs(g: Graph, adjacent_only: bool = False) -> list:
    """Pairs {u, v} whose closed neighborhoods coincide.

    Such pairs are necessarily adjacent, so the flag only restricts the
    candidate pairs scanned, not the mathematical outcome.
    """
    pairs = []
    if adjacent_only:
        candidates = g.edges
    else:
        candidates = combinations(range(g.n), 2)
    for u, v in candidates:
        if g.adj[u] | {u} == g.adj[v] | {v}:
            pairs.append((u, v))
    return pairs


def complement(g: Graph) -> Graph:
    edges = [
        (u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


# ---------------------------------------------------------------------------
# Vertex cover (exact branch and bound) and independence

def _cover_branch(adj: list, best: int) -> int:
    """Size of a minimum cover of the residual adjacency structure."""
    active = [u for u, s in enumerate(adj) if s]
    if not active:
        return 0
    if best <= 0:
        return 10 ** 9
    u = max(active, key=lambda x: (len(adj[x]), -x))
    # Branch 1: take u.
    removed = [(u, v) for v in adj[u]]
    for _, v in removed:
        adj[v].discard(u)
    saved = adj[u]
    adj[u] = set()
    take = 1 + _cover_branch(adj, best - 1)
    adj[u] = saved
    for _, v in removed:
        adj[v].add(u)
    # Branch 2: take all neighbors of u.
    nbrs = sorted(adj[u])
    undo = []
    for w in nbrs:
        for x in adj[w]:
            undo.append((w, x))
            adj[x].discard(w)
        adj[w] = set()
    leave = len(nbrs) + _cover_branch(adj, best - len(nbrs))
    for w in nbrs:
        adj[w] = set()
    for w, x in reversed(undo):
        adj[w].add(x)
        adj[x].add(w)
    return min(take, leave)


def min_cover_size(g: Graph, forced_in: frozenset = frozenset()) -> int:
    """Exact minimum vertex cover size among covers containing ``forced_in``."""
    adj = [set(g.adj[u]) for u in range(g.n)]
    base = 0
    for u in forced_in:
        base += 1
        for v in list(adj[u]):
            adj[v].discard(u)
        adj[u] = set()
    return base + _cover_branch(adj, g.n - base)


def min_vertex_cover(g: Graph) -> frozenset:
    """Lexicographically least minimum vertex cover (exact, n <= 20)."""
    if g.n > 20:
        raise ValueError("vertex cover enumeration budget is n <= 20")
    beta = min_cover_size(g)
    chosen: list[int] = []
    for _ in range(beta):
        lo = chosen[-1] + 1 if chosen else 0
        for v in range(lo, g.n):
            if min_cover_size(g, frozenset(chosen + [v])) == beta:
                chosen.append(v)
                break
        else:
            raise AssertionError("cover reconstruction failed")
    return frozenset(chosen)


def max_independent_set_size(g: Graph) -> int:
    """Via the complement identity alpha = n - beta."""
    return g.n - min_cover_size(g)


# ---------------------------------------------------------------------------
# Erdos-style bipartition by local moves

def try_bipartition(g: Graph) -> Optional[Bipartition]:
    """Proper 2-coloring split if the graph is bipartite, else None."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    a = frozenset(u for u in range(g.n) if color[u] == 0)
    return Bipartition(a, frozenset(range(g.n)) - a)


def erdos_bipartition(g: Graph) -> Bipartition:
    """Split where every vertex keeps at least half its neighbors across.

    Starts from a BFS 2-coloring attempt (so bipartite graphs are returned
    unchanged) and then moves any vertex with more same-side than cross-side
    neighbors.  Each move grows the cut, so this terminates.
    """
    if g.q < 1:
        raise ValueError("bipartition needs at least one edge")
    start = try_bipartition(g)
    if start is not None:
        side = [0 if u in start.side_a else 1 for u in range(g.n)]
    else:
        side = [u % 2 for u in range(g.n)]
    moved = True
    while moved:
        moved = False
        for u in range(g.n):
            same = sum(1 for v in g.adj[u] if side[v] == side[u])
            if same > g.degree(u) - same:
                side[u] ^= 1
                moved = True
    a = frozenset(u for u in range(g.n) if side[u] == 0)
    return Bipartition(a, frozenset(range(g.n)) - a)


def cut_edges(g: Graph, bip: Bipartition) -> list:
    return [
        (u, v)
        for u, v in g.edges
        if (u in bip.side_a) != (v in bip.side_a)
    ]


# ---------------------------------------------------------------------------
# Hamilton path / cycle by backtracking

def hamilton_path(g: Graph, max_nodes: int = 10 ** 7) -> Optional[list]:
    """First Hamilton path in deterministic order, or None."""
    if g.n == 0:
        return None
    if g.n == 1:
        return [0]
    nodes = 0

    def extend(path: list, used: set) -> Optional[list]:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise RuntimeError("hamilton_path budget exhausted")
        if len(path) == g.n:
            return path
        for v in sorted(g.adj[path[-1]]):
            if v not in used:
                used.add(v)
                path.append(v)
                if extend(path, used) is not None:
                    return path
                path.pop()
                used.discard(v)
        return None

    for start in range(g.n):
        found = extend([start], {start})
        if found is not None:
            return list(found)
    return None


def hamilton_cycle(g: Graph, max_nodes: int = 10 ** 7) -> Optional[list]:
    """First Hamilton cycle (as a vertex sequence starting at 0), or None."""
    if g.n < 3:
        return None
    nodes = 0

    def extend(path: list, used: set) -> Optional[list]:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise RuntimeError("hamilton_cycle budget exhausted")
        if len(path) == g.n:
            return path if g.has_edge(path[-1], path[0]) else None
        for v in sorted(g.adj[path[-1]]):
            if v not in used:
                used.add(v)
                path.append(v)
                if extend(path, used) is not None:
                    return path
                path.pop()
                used.discard(v)
        return None

    return extend([0], {0})


# ---------------------------------------------------------------------------
# Spanning trees

@dataclass(frozen=True)
class SpanningTree:
    tree: Graph
    leaves: int
    degree_two: int
    rest: Graph  # the input minus the tree edges


def spanning_tree(g: Graph, root: int = 0) -> SpanningTree:
    """Breadth-first spanning tree with leaf/degree-2 counts and the co-tree."""
    if not is_connected(g):
        raise ValueError("spanning tree requires a connected graph")
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    tree_edges = []
    while queue:
        u = queue.popleft()
        for v in sorted(g.adj[u]):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                tree_edges.append((u, v))
                queue.append(v)
    tree = Graph(g.n, tree_edges)
    rest = Graph(g.n, [e for e in g.edges if not tree.has_edge(*e)])
    n1 = sum(1 for u in range(g.n) if tree.degree(u) == 1)
    n2 = sum(1 for u in range(g.n) if tree.degree(u) == 2)
    return SpanningTree(tree=tree, leaves=n1, degree_two=n2, rest=rest)


def all_spanning_trees(g: Graph) -> Iterator[Graph]:
    """Every spanning tree (as an edge-subset subgraph); desk scale only."""
    if not is_connected(g) or g.n == 0:
        return
    for subset in combinations(range(g.q), g.n - 1):
        t = Graph(g.n, [g.edges[j] for j in subset])
        if is_connected(t):
            yield t


# ---------------------------------------------------------------------------
# Canonical form and isomorphism-free enumeration

def _canonical_order(g: Graph) -> tuple:
    """Vertex order minimizing the column-major upper-triangle bit string.

    The chosen bit string equals the graph6 edge payload, so relabeling by
    this order and encoding gives the minimum graph6 line over all labelings.
    Branch and bound with twin collapsing keeps this cheap for n <= 8.
    """
    n = g.n
    if n == 0:
        return ()
    adjmask = [0] * n
    for u in range(n):
        for v in g.adj[u]:
            adjmask[u] |= 1 << v
    best_cols: list | None = None
    best_order: tuple = tuple(range(n))
    generation = 0

    def place(order: list, cols: list, remaining: list, tied: bool):
        # tied: cols equals the best prefix so far; otherwise strictly less.
        nonlocal best_cols, best_order, generation
        depth = len(order)
        if depth == n:
            if best_cols is None or cols < best_cols:
                best_cols = list(cols)
                best_order = tuple(order)
                generation += 1
            return
        cands = []
        seen_twins = []
        for v in remaining:
            skip = False
            for w in seen_twins:
                both = (1 << v) | (1 << w)
                if adjmask[v] | both == adjmask[w] | both:
                    skip = True
                    break
            if skip:
                continue
            seen_twins.append(v)
            col = 0
            for u in order:
                col = (col << 1) | ((adjmask[v] >> u) & 1)
            cands.append((col, v))
        cands.sort()
        for col, v in cands:
            if best_cols is not None and tied:
                ref = best_cols[depth]
                if col > ref:
                    break  # ascending columns: all later candidates worse
                child_tied = col == ref
            else:
                child_tied = False
            cols.append(col)
            order.append(v)
            gen_before = generation
            place(order, cols, [x for x in remaining if x != v], child_tied)
            order.pop()
            cols.pop()
            if generation != gen_before:
                # A descendant became the best; our prefix is now its prefix.
                tied = True

    place([], [], list(range(n)), False)
    return best_order


def canonical_form(g: Graph) -> Graph:
    """Isomorphism-class representative (minimum adjacency bit string)."""
    order = _canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    return Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges], label=g.label)


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_form(g))


def enumerate_graphs(n: int, connected_only: bool = True) -> Iterator[Graph]:
    """All graphs on n vertices, one per isomorphism class.

    Grown by repeated vertex addition with canonical-form dedup.  Supported
    for n <= 8.
    """
    if not 1 <= n <= 8:
        raise ValueError("enumeration supported for 1 <= n <= 8")
    layer = {canonical_graph6(Graph(1, []))}
    for size in range(2, n + 1):
        nxt = set()
        for code in layer:
            parent = parse_graph6(code)
            for mask in range(1 << (size - 1)):
                edges = list(parent.edges) + [
                    (i, size - 1) for i in range(size - 1) if (mask >> i) & 1
                ]
                nxt.add(canonical_graph6(Graph(size, edges)))
        layer = nxt
    for code in sorted(layer):
        g = parse_graph6(code)
        if connected_only and not is_connected(g):
            continue
        yield g


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Connected graphs on n vertices up to isomorphism."""
    yield from enumerate_graphs(n, connected_only=True)
