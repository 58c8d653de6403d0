"""Small simple graphs with stable edge indices, plus structural primitives.

Vertices of a :class:`Graph` are ``0..n-1``.  Edges are stored as ordered
pairs ``(u, v)`` with ``u < v``; the position of an edge in the ``edges``
tuple is its index, fixed at construction.  Edge indices are the reference
frame for edge orderings, sign vectors, and every certificate produced by
the rest of the package, so all generators document their indexing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GraphParseError, NotEulerianError

INFINITE = math.inf


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph with indexed vertices and edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range or not ordered u<v")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuple of (neighbor, edge index), sorted ascending."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighbor sets as bitmasks, for bit-parallel component scans."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {pair: i for i, pair in enumerate(self.edges)}

    @cached_property
    def edge_vertex_masks(self) -> tuple[int, ...]:
        return tuple((1 << u) | (1 << v) for u, v in self.edges)

    @cached_property
    def edge_disjoint_masks(self) -> tuple[int, ...]:
        """For each edge, the bitmask of vertex-disjoint edge indices."""
        vm = self.edge_vertex_masks
        out = []
        for i in range(self.m):
            mask = 0
            for j in range(self.m):
                if i != j and not (vm[i] & vm[j]):
                    mask |= 1 << j
            out.append(mask)
        return tuple(out)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Generators.  Canonical indexing is part of the contract: orderings and
# reports must be reproducible byte for byte.
# ---------------------------------------------------------------------------

def make_cycle(n: int) -> Graph:
    """Cycle C_n.  Edge i joins vertices i and (i+1) mod n, in cyclic order."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(n, tuple(edges))


def make_complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: left part 0..m-1, right part m..m+n-1.

    Edges are lexicographic by (left, right): edge i*n + j joins i and m+j.
    """
    if m < 1 or n < 1:
        raise ValueError("both sides need at least one vertex")
    edges = tuple((i, m + j) for i in range(m) for j in range(n))
    return Graph(m + n, edges)


def make_disjoint_matching(n: int) -> Graph:
    """n disjoint edges (nK_2): edge i joins vertices 2i and 2i+1."""
    if n < 1:
        raise ValueError("need at least one edge")
    return Graph(2 * n, tuple((2 * i, 2 * i + 1) for i in range(n)))


def make_complete(n: int) -> Graph:
    """Complete graph K_n, edges in lexicographic order."""
    if n < 1:
        raise ValueError("need at least one vertex")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def make_path(n: int) -> Graph:
    """Path P_n: edge i joins vertices i and i+1."""
    if n < 1:
        raise ValueError("need at least one vertex")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


# ---------------------------------------------------------------------------
# Structural primitives.
# ---------------------------------------------------------------------------

def component_masks(g: Graph, removed: Iterable[int] = ()) -> list[int]:
    """Connected components of g minus `removed`, as vertex bitmasks."""
    dead = 0
    for v in removed:
        if not 0 <= v < g.n:
            raise ValueError(f"removed vertex {v} not in graph")
        dead |= 1 << v
    alive = ((1 << g.n) - 1) & ~dead
    masks = g.adj_masks
    out = []
    while alive:
        seed = alive & -alive
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            f = frontier
            while f:
                bit = f & -f
                f ^= bit
                nxt |= masks[bit.bit_length() - 1]
            frontier = nxt & alive & ~comp
            comp |= frontier
        out.append(comp)
        alive &= ~comp
    return out


def odd_components(g: Graph, removed: Iterable[int] = ()) -> int:
    """Number of connected components of g - removed with an odd vertex count."""
    return sum(1 for c in component_masks(g, removed) if c.bit_count() % 2 == 1)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(component_masks(g)) == 1


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Two-coloring by BFS; returns the side masks, or None if not bipartite."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for w, _ in g.adjacency[v]:
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = sum(1 << v for v in range(g.n) if color[v] == 0)
    side1 = ((1 << g.n) - 1) ^ side0
    return side0, side1


def odd_girth(g: Graph) -> int | float:
    """Length of a shortest odd cycle; INFINITE when the graph is bipartite.

    BFS from every vertex; an edge inside one BFS level closes an odd walk of
    length level(u) + level(v) + 1, and the minimum over all roots is the odd
    girth.
    """
    if bipartition(g) is not None:
        return INFINITE
    best = INFINITE
    for root in range(g.n):
        dist = [-1] * g.n
        dist[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w, _ in g.adjacency[v]:
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        for u, v in g.edges:
            if dist[u] != -1 and dist[u] == dist[v]:
                best = min(best, 2 * dist[u] + 1)
    return best


# ---------------------------------------------------------------------------
# Degree orders.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeOrder:
    """Vertex permutation sorted by non-increasing degree in its host graph."""

    perm: tuple[int, ...]
    tie_policy: str

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm is not a vertex permutation")


def degree_order(g: Graph, require_independent_prefix: int | None = None) -> DegreeOrder | None:
    """Non-increasing degree order, ties broken by ascending vertex index.

    When ``require_independent_prefix=k`` is given, vertices are permuted
    only inside equal-degree classes so that the first k vertices are
    pairwise non-adjacent.  Returns None when no degree-respecting order
    has such a prefix.
    """
    base = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))
    if require_independent_prefix is None:
        return DegreeOrder(tuple(base), "ascending-index")
    k = require_independent_prefix
    if k < 0 or k > g.n:
        return None
    if k <= 1:
        return DegreeOrder(tuple(base), f"independent-prefix({k})")

    # Split into maximal equal-degree classes, in order.
    classes: list[list[int]] = []
    for v in base:
        if classes and g.degrees[classes[-1][0]] == g.degrees[v]:
            classes[-1].append(v)
        else:
            classes.append([v])

    prefix: list[int] = []
    taken = 0
    for ci, cls in enumerate(classes):
        if taken + len(cls) <= k:
            prefix.extend(cls)
            taken += len(cls)
            if taken == k:
                boundary = ci + 1
                chosen_tail: list[int] = []
                break
        else:
            need = k - taken
            chosen_tail = _independent_extension(g, prefix, cls, need)
            if chosen_tail is None:
                return None
            prefix.extend(chosen_tail)
            boundary = ci
            break
    else:
        boundary = len(classes)
        chosen_tail = []

    if not _pairwise_independent(g, prefix):
        return None

    rest: list[int] = []
    if chosen_tail:
        rest.extend(v for v in classes[boundary] if v not in chosen_tail)
        boundary += 1
    for cls in classes[boundary:]:
        rest.extend(cls)
    return DegreeOrder(tuple(prefix + rest), f"independent-prefix({k})")


def _pairwise_independent(g: Graph, vertices: Sequence[int]) -> bool:
    return all(
        not g.has_edge(vertices[i], vertices[j])
        for i in range(len(vertices))
        for j in range(i + 1, len(vertices))
    )


def _independent_extension(g: Graph, fixed: list[int], cls: list[int], need: int):
    """Lexicographically smallest `need`-subset of cls independent with fixed."""
    if not _pairwise_independent(g, fixed):
        return None
    chosen: list[int] = []

    def ok(v):
        return all(not g.has_edge(v, w) for w in fixed) and all(
            not g.has_edge(v, w) for w in chosen
        )

    def search(start: int) -> bool:
        if len(chosen) == need:
            return True
        for idx in range(start, len(cls)):
            if len(cls) - idx < need - len(chosen):
                return False
            v = cls[idx]
            if ok(v):
                chosen.append(v)
                if search(idx + 1):
                    return True
                chosen.pop()
        return False

    return chosen if search(0) else None


# ---------------------------------------------------------------------------
# Multigraph views and Eulerian tours.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiGraphView:
    """A base graph plus extra edges that may duplicate base pairs.

    Used only for Eulerian auxiliary constructions (apex vertices, doubled
    edges).  Edge ids: base edge i keeps id i; extra edge j has id
    ``base.m + j``.  ``n`` may exceed ``base.n`` so extra edges can attach
    to auxiliary vertices.
    """

    base: Graph
    extra: tuple[tuple[int, int], ...] = ()
    n: int | None = None

    def __post_init__(self):
        n = self.base.n if self.n is None else self.n
        if n < self.base.n:
            raise ValueError("view cannot have fewer vertices than its base")
        object.__setattr__(self, "n", n)
        for u, v in self.extra:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad extra edge ({u},{v})")

    @property
    def m(self) -> int:
        return self.base.m + len(self.extra)

    def edge_pair(self, eid: int) -> tuple[int, int]:
        if eid < self.base.m:
            return self.base.edges[eid]
        u, v = self.extra[eid - self.base.m]
        return (u, v) if u < v else (v, u)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex (neighbor, edge id) pairs sorted ascending."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid in range(self.m):
            u, v = self.edge_pair(eid)
            inc[u].append((v, eid))
            inc[v].append((u, eid))
        return tuple(tuple(sorted(a)) for a in inc)


def _as_view(g: Graph | MultiGraphView) -> MultiGraphView:
    return g if isinstance(g, MultiGraphView) else MultiGraphView(g)


def eulerian_tour(
    g: Graph | MultiGraphView,
    start: int,
    edge_ids: Iterable[int] | None = None,
) -> list[int]:
    """Deterministic Eulerian tour as a sequence of edge ids.

    Hierholzer with splicing; at every vertex the unused incident edge with
    the smallest (neighbor, edge id) is taken, which pins down the tour.
    When ``edge_ids`` is given, only that edge subset is toured.

    Raises NotEulerianError (naming a violating vertex) if some vertex of
    the selected subgraph has odd degree, or if its nonzero-degree part is
    disconnected or does not contain ``start``.
    """
    view = _as_view(g)
    if not 0 <= start < view.n:
        raise ValueError(f"start vertex {start} not in graph")
    selected = set(range(view.m)) if edge_ids is None else set(edge_ids)
    inc = [
        [(w, eid) for (w, eid) in view.incidence[v] if eid in selected]
        for v in range(view.n)
    ]
    for v in range(view.n):
        if len(inc[v]) % 2 == 1:
            raise NotEulerianError(f"vertex {v} has odd degree", vertex=v)
    total = len(selected)
    if total == 0:
        return []
    if not inc[start]:
        raise NotEulerianError(
            f"start vertex {start} has no selected edges", vertex=start
        )

    pointer = [0] * view.n
    used = set()
    stack: list[tuple[int, int | None]] = [(start, None)]
    out: list[int] = []
    while stack:
        v, entering = stack[-1]
        lst = inc[v]
        i = pointer[v]
        while i < len(lst) and lst[i][1] in used:
            i += 1
        pointer[v] = i
        if i == len(lst):
            stack.pop()
            if entering is not None:
                out.append(entering)
        else:
            w, eid = lst[i]
            used.add(eid)
            stack.append((w, eid))
    if len(out) != total:
        # Some selected edges were unreachable from start.
        remaining = selected - used
        eid = min(remaining)
        u, _ = view.edge_pair(eid)
        raise NotEulerianError(
            f"edges unreachable from start {start} (e.g. at vertex {u})", vertex=u
        )
    out.reverse()
    return out


# ---------------------------------------------------------------------------
# Text format:  line 1 "n m", then m lines "u v" (0 <= u < v < n), ASCII
# decimal, single spaces, '\n' terminators; lines starting '#' ignored.
# Edge index = position among non-comment edge lines.
# ---------------------------------------------------------------------------

def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}\n"]
    lines.extend(f"{u} {v}\n" for u, v in g.edges)
    return "".join(lines)


def parse_graph(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("#"):
            continue
        parts = raw.split(" ")
        if len(parts) != 2:
            raise GraphParseError(f"expected two fields, got {raw!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer field in {raw!r}", lineno) from None
        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise GraphParseError("missing 'n m' header", 1)
    n, m = header
    if len(edges) != m:
        raise GraphParseError(
            f"header announced {m} edges, found {len(edges)}", 1
        )
    try:
        return Graph(n, tuple(edges))
    except ValueError as exc:
        raise GraphParseError(str(exc), 1) from None


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(format_graph(g))


def read_graph(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_graph(fh.read())
