"""Constructive edge orderings and the certificates that power them.

Two ordering constructions are provided.  ``euler_ordering`` tours the
graph (after attaching an auxiliary vertex to the odd-degree vertices when
needed) and lists the edges in tour order; along such an ordering no color
of an alternating coloring can meet more than half of the edges at any
non-start vertex, which is what makes the top-degree chromatic formula
work on sparse graphs.  ``apex_ordering`` builds the staged tour through
an apex vertex with doubled edges, guided by a locally-Eulerian
certificate; it is the dense-graph counterpart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .alternation import EdgeOrdering
from .errors import CertificateError, NotEulerianError
from .graphs import (
    DegreeOrder,
    Graph,
    MultiGraphView,
    degree_order,
    eulerian_tour,
    is_connected,
    odd_girth,
)


# ---------------------------------------------------------------------------
# Applicability of the top-degree chromatic formula
# chi(KG(G, rK2)) = |E| - sum of the r-1 largest degrees.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StarFormulaReport:
    """Condition-by-condition applicability of the top-degree formula."""

    r: int
    connected: bool
    odd_girth: float
    order: DegreeOrder | None
    independent_prefix_ok: bool
    top_degree: int | None          # degree of v_{r-1}
    next_degree: int | None         # degree of v_r
    degree_threshold: float         # max(odd_girth/2, (top_degree+1)/4)
    ratio_ok: bool
    parity_ok: bool                 # top degree even, or strictly above next
    odd_top_count: int | None       # odd degrees among the first r-1
    sum_top_degrees: int | None
    formula_value: int | None       # |E| - sum_top_degrees
    applicable: bool


def star_formula_conditions(g: Graph, r: int) -> StarFormulaReport:
    """Evaluate every hypothesis of the top-degree formula; never raises."""
    connected = is_connected(g)
    girth = odd_girth(g)
    order = degree_order(g, require_independent_prefix=r - 1) if 2 <= r <= g.n else None
    if order is None:
        return StarFormulaReport(
            r, connected, girth, None, False, None, None, -math.inf,
            False, False, None, None, None, False,
        )
    degs = [g.degrees[v] for v in order.perm]
    top_degree = degs[r - 2]
    next_degree = degs[r - 1] if r - 1 < g.n else None
    threshold = max(girth / 2, (top_degree + 1) / 4)
    ratio_ok = r <= threshold
    parity_ok = top_degree % 2 == 0 or (
        next_degree is not None and top_degree > next_degree
    )
    odd_top = sum(1 for d in degs[: r - 1] if d % 2 == 1)
    sum_top = sum(degs[: r - 1])
    applicable = connected and r >= 2 and ratio_ok and parity_ok and next_degree is not None
    return StarFormulaReport(
        r, connected, girth, order, True, top_degree, next_degree,
        threshold, ratio_ok, parity_ok, odd_top, sum_top,
        g.m - sum_top, applicable,
    )


def euler_ordering(g: Graph) -> EdgeOrdering:
    """Edge ordering from a deterministic Eulerian tour.

    If the graph has odd-degree vertices, an auxiliary vertex joined to each
    of them is added and the tour starts there; otherwise the tour starts at
    the last vertex of the degree order.  The tour is then projected onto
    the graph's own edges in traversal order.
    """
    if not is_connected(g):
        raise NotEulerianError("graph is not connected")
    if g.m == 0:
        return EdgeOrdering(())
    odd = [v for v in range(g.n) if g.degrees[v] % 2 == 1]
    if odd:
        view = MultiGraphView(g, tuple((v, g.n) for v in odd), n=g.n + 1)
        tour = eulerian_tour(view, g.n)
    else:
        start = degree_order(g).perm[-1]
        tour = eulerian_tour(g, start)
    return EdgeOrdering(tuple(e for e in tour if e < g.m))


# ---------------------------------------------------------------------------
# Locally-Eulerian certificates.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocallyEulerianCertificate:
    """Per-vertex edge-disjoint Eulerian subgraphs with dominant root degree.

    ``roots`` must be a permutation of the host's vertices; ``subgraphs[i]``
    is the edge-index set of the subgraph rooted at ``roots[i]``.  Validity
    for parameters (r, c) means every root degree is at least
    (r-1) * (any other degree in its subgraph) + c.
    """

    host: Graph
    roots: tuple[int, ...]
    subgraphs: tuple[frozenset[int], ...]
    r: int
    c: int

    def to_json_dict(self) -> dict:
        return {
            "host": {"n": self.host.n, "edges": [list(e) for e in self.host.edges]},
            "roots": list(self.roots),
            "subgraphs": [sorted(s) for s in self.subgraphs],
            "r": self.r,
            "c": self.c,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "LocallyEulerianCertificate":
        host = Graph(data["host"]["n"], tuple(tuple(e) for e in data["host"]["edges"]))
        return cls(
            host,
            tuple(data["roots"]),
            tuple(frozenset(s) for s in data["subgraphs"]),
            data["r"],
            data["c"],
        )


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    violation: str | None = None


def verify_locally_eulerian(cert: LocallyEulerianCertificate) -> VerificationResult:
    """Check every certificate clause; reports the first violation found."""
    host = cert.host
    n = host.n

    def fail(msg):
        return VerificationResult(False, msg)

    if sorted(cert.roots) != list(range(n)):
        return fail("roots do not cover every host vertex exactly once")
    if len(cert.subgraphs) != n:
        return fail(f"expected {n} subgraphs, got {len(cert.subgraphs)}")

    seen = 0
    for i, sub in enumerate(cert.subgraphs):
        mask = 0
        for e in sub:
            if not 0 <= e < host.m:
                return fail(f"subgraph {i}: edge index {e} not in host")
            mask |= 1 << e
        if mask & seen:
            return fail(f"subgraph {i} shares an edge with an earlier subgraph")
        seen |= mask

    for i, sub in enumerate(cert.subgraphs):
        root = cert.roots[i]
        if not sub:
            return fail(f"subgraph {i} (root {root}) is trivial")
        deg: dict[int, int] = {}
        for e in sub:
            u, v = host.edges[e]
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if root not in deg:
            return fail(f"root {root} is not a vertex of subgraph {i}")
        odd = [v for v, d in deg.items() if d % 2 == 1]
        if odd:
            return fail(f"subgraph {i}: vertex {odd[0]} has odd degree")
        if not _edges_connected(host, sub):
            return fail(f"subgraph {i} is not connected")
        need = cert.r - 1
        for v, d in deg.items():
            if v != root and deg[root] < need * d + cert.c:
                return fail(
                    f"subgraph {i}: root degree {deg[root]} below "
                    f"(r-1)*{d}+{cert.c} at vertex {v}"
                )
    return VerificationResult(True)


def _edges_connected(host: Graph, edge_ids) -> bool:
    ids = list(edge_ids)
    if not ids:
        return True
    vertices = {v for e in ids for v in host.edges[e]}
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for e in ids:
        u, v = host.edges[e]
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vertices


# ---------------------------------------------------------------------------
# The apex ordering for dense graphs.
# ---------------------------------------------------------------------------

def apex_ordering(g: Graph, host: Graph, cert: LocallyEulerianCertificate) -> EdgeOrdering:
    """Edge ordering of g from the staged apex tour over a certified host.

    An apex vertex is joined to every host vertex by a doubled edge (ids
    2i and 2i+1 within the auxiliary block, in certificate order); if the
    resulting multigraph has odd vertices a parity vertex is joined to
    them.  Step i tours: apex spoke out, the certified subgraph rooted at
    roots[i], at most one still-untraversed leftover component containing
    the root, then the spoke back.  The concatenation is an Eulerian tour
    of the auxiliary multigraph; projecting it to E(g) gives the ordering.
    """
    check = verify_locally_eulerian(cert)
    if not check.ok:
        raise CertificateError(check.violation)
    if cert.host != host:
        raise CertificateError("certificate was issued for a different host")
    if g.n > host.n:
        raise ValueError("g has more vertices than the host")
    for u, v in g.edges:
        if not host.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) of g is not a host edge")

    n = host.n
    apex = n
    odd = [v for v in range(n) if host.degrees[v] % 2 == 1]
    parity = n + 1 if odd else None
    extra: list[tuple[int, int]] = []
    for i in range(n):
        root = cert.roots[i]
        extra.append((root, apex))
        extra.append((root, apex))
    z_offset = host.m + len(extra)
    if odd:
        extra.extend((v, parity) for v in odd)
    view = MultiGraphView(host, tuple(extra), n=n + (2 if odd else 1))

    covered = reduce(lambda acc, s: acc | frozenset(s), cert.subgraphs, frozenset())
    leftover = [e for e in range(host.m) if e not in covered]
    leftover_ids = leftover + list(range(z_offset, view.m))
    comp_edges, comp_of_vertex = _edge_components(view, leftover_ids)

    tour: list[int] = []
    done_components: set[int] = set()
    for i in range(n):
        root = cert.roots[i]
        tour.append(host.m + 2 * i)
        tour.extend(eulerian_tour(view, root, edge_ids=cert.subgraphs[i]))
        cid = comp_of_vertex.get(root)
        if cid is not None and cid not in done_components:
            done_components.add(cid)
            tour.extend(eulerian_tour(view, root, edge_ids=comp_edges[cid]))
        tour.append(host.m + 2 * i + 1)
    if sorted(tour) != list(range(view.m)):
        raise AssertionError("staged walk is not an Eulerian tour of the auxiliary graph")

    g_ids = []
    for eid in tour:
        if eid < host.m:
            pair = host.edges[eid]
            idx = g.edge_index.get(pair)
            if idx is not None:
                g_ids.append(idx)
    return EdgeOrdering(tuple(g_ids))


def _edge_components(view: MultiGraphView, edge_ids: list[int]):
    """Group edges into connected components; maps vertices to component ids."""
    parent: dict[int, int] = {}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for eid in edge_ids:
        u, v = view.edge_pair(eid)
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv

    comp_index: dict[int, int] = {}
    comp_edges: list[list[int]] = []
    comp_of_vertex: dict[int, int] = {}
    for eid in edge_ids:
        u, _ = view.edge_pair(eid)
        root = find(u)
        if root not in comp_index:
            comp_index[root] = len(comp_edges)
            comp_edges.append([])
        comp_edges[comp_index[root]].append(eid)
    for v in parent:
        comp_of_vertex[v] = comp_index[find(v)]
    return comp_edges, comp_of_vertex
