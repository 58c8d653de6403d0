"""Matching-number machinery: maximum matchings, Tutte-Berge certificates,
r-matching enumeration and existence tests."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityError
from .graphs import Graph


@dataclass(frozen=True)
class Matching(object):
    """A set of pairwise vertex-disjoint edges of a host graph."""

    host: Graph
    edges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        used = 0
        for e in self.edges:
            if not 0 <= e < self.host.m:
                raise ValueError(f"edge index {e} not in host")
            vm = self.host.edge_vertex_masks[e]
            if used & vm:
                raise ValueError("edges are not pairwise vertex-disjoint")
            used |= vm

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class TutteBergeWitness:
    """A set S minimizing |V| - o(G-S) + |S|, certifying the matching number."""

    s: frozenset[int]
    deficiency: int
    nu: int


# ---------------------------------------------------------------------------
# Maximum matching (augmenting paths with blossom contraction).
# ---------------------------------------------------------------------------

def _augmenting_matcher(n: int, adj: Sequence[Sequence[int]], stop_at: int | None = None):
    """Match array of a maximum matching; stops early once size stop_at is hit."""
    match = [-1] * n
    size = 0
    for v in range(n):  # cheap greedy seed
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v] = w
                    match[w] = v
                    size += 1
                    break
    if stop_at is not None and size >= stop_at:
        return match, size

    p = [-1] * n
    base = list(range(n))

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = p[match[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root):
        nonlocal p, base
        used = [False] * n
        p = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if stop_at is not None and size >= stop_at:
            break
        if match[v] == -1 and find_path(v):
            size += 1
    return match, size


def max_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching; its size is the matching number."""
    adj = tuple(tuple(w for w, _ in a) for a in g.adjacency)
    match, _ = _augmenting_matcher(g.n, adj)
    edges = tuple(
        g.edge_index[(v, match[v])] for v in range(g.n) if match[v] > v
    )
    return Matching(g, edges)


def matching_number(g: Graph) -> int:
    return len(max_matching(g))


def has_r_matching(g: Graph, r: int) -> bool:
    """True iff the graph has a matching of r edges."""
    if r <= 0:
        return True
    if 2 * r > g.n or r > g.m:
        return False
    adj = tuple(tuple(w for w, _ in a) for a in g.adjacency)
    _, size = _augmenting_matcher(g.n, adj, stop_at=r)
    return size >= r


def edge_subset_has_r_matching(g: Graph, edge_ids: Iterable[int], r: int) -> bool:
    """True iff the spanning subgraph on the given edges has an r-matching."""
    if r <= 0:
        return True
    ids = list(edge_ids)
    if len(ids) < r:
        return False
    # Greedy pass settles most calls without touching the matcher.
    used = 0
    greedy = 0
    vm = g.edge_vertex_masks
    for e in ids:
        if not used & vm[e]:
            used |= vm[e]
            greedy += 1
            if greedy >= r:
                return True
    if 2 * greedy < r:
        return False
    vertices = sorted({v for e in ids for v in g.edges[e]})
    relabel = {v: i for i, v in enumerate(vertices)}
    adj: list[list[int]] = [[] for _ in vertices]
    for e in ids:
        u, v = g.edges[e]
        adj[relabel[u]].append(relabel[v])
        adj[relabel[v]].append(relabel[u])
    _, size = _augmenting_matcher(len(vertices), adj, stop_at=r)
    return size >= r


# ---------------------------------------------------------------------------
# Tutte-Berge certificates (exhaustive minimization at desk scale).
# ---------------------------------------------------------------------------

def tutte_berge(g: Graph, max_n: int = 20) -> TutteBergeWitness:
    """Witness S attaining min over all S of |V| - o(G-S) + |S|.

    Exhausts all 2^n subsets, so the certificate is unconditional; graphs
    larger than ``max_n`` raise CapacityError.  Among minimizers the one
    with the numerically smallest bitmask is returned.  The value is
    cross-checked against the augmenting-path matching number.
    """
    n = g.n
    if n > max_n:
        raise CapacityError(f"tutte_berge is exhaustive; n={n} exceeds bound {max_n}")
    masks = g.adj_masks
    full = (1 << n) - 1
    best_val = None
    best_s = 0
    for s_mask in range(1 << n):
        alive0 = full & ~s_mask
        odd = 0
        alive = alive0
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
                frontier = nxt & alive0 & ~comp
                comp |= frontier
            if comp.bit_count() & 1:
                odd += 1
            alive &= ~comp
        val = n - odd + s_mask.bit_count()
        if best_val is None or val < best_val:
            best_val = val
            best_s = s_mask
    nu = best_val // 2
    if nu != matching_number(g):
        raise AssertionError(
            "Tutte-Berge minimum disagrees with augmenting-path matching number"
        )
    s = frozenset(v for v in range(n) if best_s >> v & 1)
    o = n + len(s) - 2 * nu
    return TutteBergeWitness(s=s, deficiency=o - len(s), nu=nu)


# ---------------------------------------------------------------------------
# r-matching enumeration.
# ---------------------------------------------------------------------------

def enumerate_matchings(g: Graph, r: int) -> list[Matching]:
    """All r-edge matchings, each once, lexicographic by edge-index set."""
    if r < 1:
        raise ValueError("r must be at least 1")
    out: list[Matching] = []
    vm = g.edge_vertex_masks
    m = g.m
    chosen: list[int] = []

    def extend(start: int, used: int):
        if len(chosen) == r:
            out.append(Matching(g, tuple(chosen)))
            return
        # Not enough edges left to finish.
        for e in range(start, m - (r - len(chosen)) + 1):
            if not used & vm[e]:
                chosen.append(e)
                extend(e + 1, used | vm[e])
                chosen.pop()

    extend(0, 0)
    return out
