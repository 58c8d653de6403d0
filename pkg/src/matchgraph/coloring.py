"""Exact chromatic numbers with certificates.

The solver is a DSATUR-style branch and bound: vertices are colored in
order of saturation degree, a greedy clique seeds the lower bound, and a
node budget guards against runaway searches.  When the budget runs out the
result is an explicit [lb, ub] interval, never a wrong exact claim.  A
caller holding an external lower bound (for instance an alternation bound
on a matching graph) can pass it in together with a starting coloring,
which lets the search terminate as soon as the bound is met.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Sequence

from .errors import CertificateError
from .graphs import Graph
from .hypergraphs import KneserGraph, matching_graph
from .turan import is_f_free


@dataclass(frozen=True)
class ChromaticCertificate:
    """Exact chromatic number, or a sound interval when inexact.

    ``lower_witness`` is a (kind, payload) pair with kind one of
    "empty", "clique" (payload: vertex tuple), "exhausted" (search proved
    no smaller coloring), or "external" (payload: caller's label for a
    trusted bound).
    """

    chi: int | None
    coloring: tuple[int, ...]
    lower_witness: tuple[str, object]
    exact: bool
    bounds: tuple[int, int]
    nodes: int

    @property
    def lb(self) -> int:
        return self.bounds[0]

    @property
    def ub(self) -> int:
        return self.bounds[1]


def is_proper(g: Graph, coloring: Sequence[int]) -> bool:
    """True iff the coloring is total on vertices and no edge is monochromatic."""
    if len(coloring) != g.n or any(c is None or c < 0 for c in coloring):
        raise ValueError("coloring must assign a color to every vertex")
    return all(coloring[u] != coloring[v] for u, v in g.edges)


def greedy_clique(g: Graph) -> tuple[int, ...]:
    """Deterministic greedy clique, used as an initial chromatic lower bound."""
    if g.n == 0:
        return ()
    masks = g.adj_masks
    order = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))
    best: tuple[int, ...] = (order[0],)
    for start in order:
        clique = [start]
        common = masks[start]
        for v in order:
            if common >> v & 1:
                clique.append(v)
                common &= masks[v]
        if len(clique) > len(best):
            best = tuple(sorted(clique))
    return best


def _greedy_dsatur(g: Graph) -> tuple[int, ...]:
    n = g.n
    masks = g.adj_masks
    colors = [-1] * n
    forbidden = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] == -1),
            key=lambda u: (forbidden[u].bit_count(), g.degrees[u], -u),
        )
        c = 0
        while forbidden[v] >> c & 1:
            c += 1
        colors[v] = c
        nb = masks[v]
        while nb:
            bit = nb & -nb
            nb ^= bit
            forbidden[bit.bit_length() - 1] |= 1 << c
    return tuple(colors)


def _canonicalize(coloring: Sequence[int]) -> tuple[int, ...]:
    remap: dict[int, int] = {}
    out = []
    for c in coloring:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return tuple(out)


class _Budget(Exception):
    pass


def chromatic_number(
    g: Graph | KneserGraph,
    node_budget: int = 10_000_000,
    known_lower: int | None = None,
    known_lower_label: str = "external",
    initial_coloring: Sequence[int] | None = None,
) -> ChromaticCertificate:
    """Exact chromatic number with a proper coloring and a lower-bound witness.

    The value (not the coloring) is deterministic across runs.  On budget
    exhaustion the certificate carries ``exact=False`` and sound bounds.
    ``known_lower`` must be a sound lower bound; it is trusted and recorded
    as an "external" witness when it ends up being the binding one.
    """
    if isinstance(g, KneserGraph):
        g = g.graph
    n = g.n
    if n == 0:
        return ChromaticCertificate(0, (), ("empty", None), True, (0, 0), 0)

    clique = greedy_clique(g)
    lb = max(len(clique), 1)
    if known_lower is not None:
        lb = max(lb, known_lower)

    if initial_coloring is not None:
        start = tuple(initial_coloring)
        if not is_proper(g, start):
            raise CertificateError("initial coloring is not proper")
    else:
        start = _greedy_dsatur(g)
    ub = len(set(start))
    best_coloring = start

    def witness(chi: int, exhausted: bool) -> tuple[str, object]:
        if chi == len(clique):
            return ("clique", clique)
        if known_lower is not None and chi == known_lower and chi > len(clique):
            return ("external", known_lower_label)
        return ("exhausted", None) if exhausted else ("external", known_lower_label)

    if ub <= lb:
        return ChromaticCertificate(
            ub, _canonicalize(best_coloring), witness(ub, False), True, (ub, ub), 0
        )

    # DSATUR branch and bound.
    masks = g.adj_masks
    degrees = g.degrees
    colors = [-1] * n
    forbidden = [0] * n
    nodes = 0
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

    def descend(colored: int, used: int):
        nonlocal nodes, ub, best_coloring
        if ub <= lb:
            return
        nodes += 1
        if nodes > node_budget:
            raise _Budget
        if colored == n:
            if used < ub:
                ub = used
                best_coloring = tuple(colors)
            return
        v = max(
            (u for u in range(n) if colors[u] == -1),
            key=lambda u: (forbidden[u].bit_count(), degrees[u], -u),
        )
        limit = min(used + 1, ub - 1)
        for c in range(limit):
            if forbidden[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            bit_c = 1 << c
            nb = masks[v]
            while nb:
                bit = nb & -nb
                nb ^= bit
                w = bit.bit_length() - 1
                if colors[w] == -1 and not forbidden[w] & bit_c:
                    forbidden[w] |= bit_c
                    touched.append(w)
            descend(colored + 1, max(used, c + 1))
            colors[v] = -1
            for w in touched:
                forbidden[w] &= ~bit_c
            if ub <= lb:
                return

    exhausted = True
    try:
        descend(0, 0)
    except _Budget:
        exhausted = False

    if exhausted or ub <= lb:
        chi = ub
        return ChromaticCertificate(
            chi,
            _canonicalize(best_coloring),
            witness(chi, exhausted),
            True,
            (chi, chi),
            nodes,
        )
    return ChromaticCertificate(
        None,
        _canonicalize(best_coloring),
        ("clique", clique) if lb == len(clique) else ("external", known_lower_label),
        False,
        (lb, ub),
        nodes,
    )


# ---------------------------------------------------------------------------
# Colorings of matching graphs from rK2-free edge sets.
# ---------------------------------------------------------------------------

def coloring_from_extremal(g: Graph, r: int, extremal) -> tuple[int, ...]:
    """Proper coloring of matching_graph(g, r) from an rK2-free edge set.

    Each r-matching is colored by the rank (among edges outside the set) of
    the smallest edge index it uses outside the set, so at most
    |E(g)| - |extremal| colors appear.  An edge set containing an
    r-matching is rejected.
    """
    extremal = frozenset(extremal)
    if any(not 0 <= e < g.m for e in extremal):
        raise ValueError("extremal edge index out of range")
    if not is_f_free(extremal, g, r):
        raise CertificateError("extremal set contains an r-matching")
    outside = [e for e in range(g.m) if e not in extremal]
    rank = {e: i for i, e in enumerate(outside)}
    mg = matching_graph(g, r)
    colors = []
    for hedge in mg.source.hyperedges:
        smallest = min(e for e in hedge if e not in extremal)
        colors.append(rank[smallest])
    return tuple(colors)


def extend_bipartite_matching_coloring(
    m: int, n: int, r: int, coloring: Sequence[int]
) -> tuple[int, ...]:
    """Extend a proper coloring of the r-matching Kneser graph of K_{m,n}
    (m >= n) to one of K_{m,m}.

    Matchings inside the K_{m,n} copy keep their color; every other
    matching is colored by the smallest edge it uses among the added ones,
    shifted past the original palette.  Properness is preserved because
    same-colored new matchings share an added edge.
    """
    from .graphs import make_complete_bipartite
    from .matching import enumerate_matchings

    if m < n:
        raise ValueError("expects m >= n")
    small = make_complete_bipartite(m, n)
    big = make_complete_bipartite(m, m)
    small_matchings = enumerate_matchings(small, r)
    if len(coloring) != len(small_matchings):
        raise ValueError("coloring size does not match the K_{m,n} matching count")
    palette = max(coloring, default=-1) + 1

    # Edge (i, m+j) of K_{m,n} has index i*n + j; in K_{m,m} it is i*m + j.
    old_color = {}
    for matching, c in zip(small_matchings, coloring):
        key = tuple(sorted((e // n) * m + (e % n) for e in matching.edges))
        old_color[key] = c

    out = []
    for matching in enumerate_matchings(big, r):
        key = matching.edges
        if key in old_color:
            out.append(old_color[key])
        else:
            added = min(e for e in key if e % m >= n)
            out.append(palette + added)
    return _canonicalize(out)


def export_dimacs(g: Graph) -> str:
    """DIMACS .col text (1-indexed) for cross-checking with external tools."""
    lines = [f"p edge {g.n} {g.m}\n"]
    lines.extend(f"e {u + 1} {v + 1}\n" for u, v in g.edges)
    return "".join(lines)
