"""Hypergraphs, the general Kneser construction, and matching hypergraphs.

The general Kneser graph of a hypergraph has one vertex per hyperedge, two
vertices adjacent exactly when the hyperedges are disjoint.  Matching graphs
arise from the hypergraph whose ground set is the edge set of a graph and
whose hyperedges are the r-edge matchings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations

from .errors import CapacityError, GraphParseError
from .graphs import Graph
from .matching import enumerate_matchings


@dataclass(frozen=True)
class Hypergraph:
    """Ground set [0, ground_n) plus distinct nonempty hyperedges.

    Hyperedges are stored as sorted tuples; their list position is a stable
    index, which the Kneser construction inherits as vertex numbering.
    """

    ground_n: int
    hyperedges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.ground_n < 0:
            raise ValueError("ground set size must be nonnegative")
        canon = tuple(tuple(sorted(set(e))) for e in self.hyperedges)
        object.__setattr__(self, "hyperedges", canon)
        seen = set()
        for e in canon:
            if not e:
                raise ValueError("empty hyperedge")
            if e[0] < 0 or e[-1] >= self.ground_n:
                raise ValueError(f"hyperedge {e} out of ground range")
            if e in seen:
                raise ValueError(f"duplicate hyperedge {e}")
            seen.add(e)

    @property
    def k(self) -> int:
        return len(self.hyperedges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in e) for e in self.hyperedges)

    @cached_property
    def masks_through(self) -> tuple[tuple[int, ...], ...]:
        """For each ground element, indices of hyperedges containing it."""
        through: list[list[int]] = [[] for _ in range(self.ground_n)]
        for i, e in enumerate(self.hyperedges):
            for v in e:
                through[v].append(i)
        return tuple(tuple(t) for t in through)


@dataclass(frozen=True)
class KneserGraph:
    """A graph on hyperedge indices, adjacency = disjointness, plus provenance."""

    graph: Graph
    source: Hypergraph


def general_kneser(h: Hypergraph) -> KneserGraph:
    """General Kneser graph of h: vertex i per hyperedge i, edges = disjoint pairs."""
    masks = h.masks
    edges = tuple(
        (i, j)
        for i in range(h.k)
        for j in range(i + 1, h.k)
        if not masks[i] & masks[j]
    )
    return KneserGraph(Graph(h.k, edges), h)


def matching_hypergraph(g: Graph, r: int) -> Hypergraph:
    """Hypergraph on the edge indices of g whose hyperedges are the r-matchings."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return Hypergraph(g.m, tuple(m.edges for m in enumerate_matchings(g, r)))


def matching_graph(g: Graph, r: int) -> KneserGraph:
    """Kneser graph of the r-matchings of g; adjacency = edge-disjointness."""
    return general_kneser(matching_hypergraph(g, r))


def f_subgraph_hypergraph(g: Graph, f: Graph, cap: int = 200_000) -> Hypergraph:
    """Hypergraph of the edge sets of subgraphs of g isomorphic to f.

    Brute force over all |E(f)|-subsets of E(g); raises CapacityError when
    there are more than ``cap`` candidate subsets.  The pattern f must have
    no isolated vertices (its edge set determines it).
    """
    kf = f.m
    if kf < 1:
        raise ValueError("pattern must have at least one edge")
    if any(d == 0 for d in f.degrees):
        raise ValueError("pattern must have no isolated vertices")
    total = 1
    for i in range(kf):
        total = total * (g.m - i) // (i + 1)
    if total > cap:
        raise CapacityError(f"{total} candidate edge subsets exceed cap {cap}")
    hyperedges = []
    for subset in combinations(range(g.m), kf):
        if _edge_subset_isomorphic(g, subset, f):
            hyperedges.append(tuple(subset))
    return Hypergraph(g.m, tuple(hyperedges))


def _edge_subset_isomorphic(g: Graph, subset: tuple[int, ...], f: Graph) -> bool:
    """Is the subgraph spanned by these edges of g isomorphic to f?"""
    vertices = sorted({v for e in subset for v in g.edges[e]})
    if len(vertices) != sum(1 for d in f.degrees if d > 0):
        return False
    pairs = {g.edges[e] for e in subset}
    degs = {}
    for u, v in pairs:
        degs[u] = degs.get(u, 0) + 1
        degs[v] = degs.get(v, 0) + 1
    f_vertices = [v for v in range(f.n) if f.degrees[v] > 0]
    if sorted(degs[v] for v in vertices) != sorted(f.degrees[v] for v in f_vertices):
        return False
    f_pairs = {(u, v) for u, v in f.edges}
    for perm in permutations(vertices):
        mapping = dict(zip(f_vertices, perm))
        ok = True
        for u, v in f_pairs:
            a, b = mapping[u], mapping[v]
            if a > b:
                a, b = b, a
            if (a, b) not in pairs:
                ok = False
                break
        if ok:
            return True
    return False


# ---------------------------------------------------------------------------
# Text format: line 1 "n k"; then k lines of space-separated ascending
# vertex indices.
# ---------------------------------------------------------------------------

def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.ground_n} {h.k}\n"]
    lines.extend(" ".join(str(v) for v in e) + "\n" for e in h.hyperedges)
    return "".join(lines)


def parse_hypergraph(text: str) -> Hypergraph:
    header = None
    hyperedges: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("#"):
            continue
        parts = raw.split(" ")
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise GraphParseError(f"non-integer field in {raw!r}", lineno) from None
        if header is None:
            if len(values) != 2:
                raise GraphParseError("header must be 'n k'", lineno)
            header = tuple(values)
        else:
            if values != sorted(values):
                raise GraphParseError("hyperedge not in ascending order", lineno)
            hyperedges.append(tuple(values))
    if header is None:
        raise GraphParseError("missing 'n k' header", 1)
    n, k = header
    if len(hyperedges) != k:
        raise GraphParseError(f"header announced {k} hyperedges, found {len(hyperedges)}", 1)
    try:
        return Hypergraph(n, tuple(hyperedges))
    except ValueError as exc:
        raise GraphParseError(str(exc), 1) from None
