"""Monogamous C4 decompositions of complete bipartite graphs and the
locally-Eulerian certificates built from them.

A C4 decomposition of K_{m,n} partitions the edge set into 4-cycles; it is
monogamous when no vertex pair (same side or crossing) lies in two of the
4-cycles.  Crossing pairs are automatically monogamous because they are
edges, so the real constraint is that all left pairs and all right pairs
of the blocks are distinct.  The constructor is a backtracking search over
the lexicographically first uncovered edge, which makes success a
checkable witness and a completed empty search an exhaustive refutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificateError
from .graphs import make_complete_bipartite
from .orderings import LocallyEulerianCertificate, VerificationResult, verify_locally_eulerian

Block = tuple[tuple[int, int], ...]   # 4 (left, right) pairs of one 4-cycle


@dataclass(frozen=True)
class C4Decomposition:
    m: int
    n: int
    blocks: tuple[Block, ...]

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "blocks": [[list(p) for p in block] for block in self.blocks],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "C4Decomposition":
        blocks = tuple(
            tuple(tuple(p) for p in block) for block in data["blocks"]
        )
        return cls(data["m"], data["n"], blocks)


def make_block(a: int, b: int, x: int, y: int) -> Block:
    """Canonical block on left pair {a,b} and right pair {x,y}."""
    a, b = min(a, b), max(a, b)
    x, y = min(x, y), max(x, y)
    return ((a, x), (a, y), (b, x), (b, y))


@dataclass(frozen=True)
class C4SearchResult:
    status: str                      # "found" | "none" | "indeterminate"
    decomposition: C4Decomposition | None
    nodes: int                       # block placements tried (search trace size)


def verify_c4_decomposition(dec: C4Decomposition) -> VerificationResult:
    """Partition-of-edges and monogamy audit; reports the first violation."""
    m, n = dec.m, dec.n
    if m < 2 or n < 2 or m % 2 or n % 2:
        return VerificationResult(False, "side sizes must be even and at least 2")
    covered: set[tuple[int, int]] = set()
    left_pairs: set[tuple[int, int]] = set()
    right_pairs: set[tuple[int, int]] = set()
    for idx, block in enumerate(dec.blocks):
        lefts = sorted({p[0] for p in block})
        rights = sorted({p[1] for p in block})
        if len(block) != 4 or len(lefts) != 2 or len(rights) != 2:
            return VerificationResult(False, f"block {idx} is not a 4-cycle")
        if set(block) != {(l, r) for l in lefts for r in rights}:
            return VerificationResult(False, f"block {idx} edges do not form a 4-cycle")
        if not (0 <= lefts[0] < lefts[1] < m and 0 <= rights[0] < rights[1] < n):
            return VerificationResult(False, f"block {idx} out of range")
        lp, rp = (lefts[0], lefts[1]), (rights[0], rights[1])
        if lp in left_pairs:
            return VerificationResult(False, f"left pair {lp} appears in two blocks")
        if rp in right_pairs:
            return VerificationResult(False, f"right pair {rp} appears in two blocks")
        left_pairs.add(lp)
        right_pairs.add(rp)
        for edge in block:
            if edge in covered:
                return VerificationResult(False, f"edge {edge} covered twice")
            covered.add(edge)
    if len(covered) != m * n:
        return VerificationResult(False, "blocks do not cover every edge")
    return VerificationResult(True)


def monogamous_c4_decomposition(
    m: int, n: int, node_budget: int = 50_000_000
) -> C4SearchResult:
    """Search for a monogamous C4 decomposition of K_{m,n}.

    Returns a verified decomposition when found, a certified "none" when
    the exhaustive backtracking completes empty, and "indeterminate" when
    the node budget runs out first.  Requires both sides even.
    """
    if m < 2 or n < 2 or m % 2 or n % 2:
        raise ValueError("both sides must be even and at least 2")
    # Counting refutation: blocks consume distinct same-side pairs.
    blocks_needed = m * n // 4
    if blocks_needed > m * (m - 1) // 2 or blocks_needed > n * (n - 1) // 2:
        return C4SearchResult("none", None, 0)

    cover = [[False] * n for _ in range(m)]
    left_used = set()
    right_used = set()
    chosen: list[tuple[int, int, int, int]] = []
    nodes = 0
    exceeded = False

    def first_uncovered():
        for a in range(m):
            row = cover[a]
            for x in range(n):
                if not row[x]:
                    return a, x
        return None

    def descend() -> bool:
        nonlocal nodes, exceeded
        spot = first_uncovered()
        if spot is None:
            return True
        a, x = spot
        # The first uncovered edge forces b > a and y > x: earlier rows and
        # earlier entries of row a are already covered.
        for b in range(a + 1, m):
            if (a, b) in left_used or cover[b][x]:
                continue
            for y in range(x + 1, n):
                if (x, y) in right_used or cover[a][y] or cover[b][y]:
                    continue
                nodes += 1
                if nodes > node_budget:
                    exceeded = True
                    return False
                cover[a][x] = cover[a][y] = cover[b][x] = cover[b][y] = True
                left_used.add((a, b))
                right_used.add((x, y))
                chosen.append((a, b, x, y))
                if descend():
                    return True
                if exceeded:
                    return False
                chosen.pop()
                left_used.discard((a, b))
                right_used.discard((x, y))
                cover[a][x] = cover[a][y] = cover[b][x] = cover[b][y] = False
        return False

    found = descend()
    if found:
        dec = C4Decomposition(m, n, tuple(make_block(a, b, x, y) for a, b, x, y in chosen))
        check = verify_c4_decomposition(dec)
        if not check.ok:
            raise AssertionError(f"constructed decomposition failed audit: {check.violation}")
        return C4SearchResult("found", dec, nodes)
    if exceeded:
        return C4SearchResult("indeterminate", None, nodes)
    return C4SearchResult("none", None, nodes)


# ---------------------------------------------------------------------------
# Locally-Eulerian certificates for K_{t,t'} from block assignments.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocallyEulerianBuild:
    status: str                      # "ok" | "infeasible" | "indeterminate"
    certificate: LocallyEulerianCertificate | None
    message: str
    copies_floor: int                # floor((t-3)/8) blocks assigned per vertex
    copies_ceil: int                 # ceil((t-3)/8), reported alongside
    inside_blocks: int


def locally_eulerian_from_c4(
    t: int,
    t_prime: int,
    r: int,
    c: int,
    decomposition: C4Decomposition | None = None,
    node_budget: int = 50_000_000,
) -> LocallyEulerianBuild:
    """Build an (r, c)-locally-Eulerian certificate for K_{t,t'}.

    Rounds both sides up to even sizes T, T', takes a monogamous C4
    decomposition of K_{T,T'} (searched for, or supplied), keeps the blocks
    lying entirely inside K_{t,t'}, and assigns floor((t-3)/8) blocks to
    each vertex through a saturating matching found by augmenting paths.
    Each vertex's subgraph is the union of its assigned blocks: root degree
    2*floor((t-3)/8), every other degree 2.  The ceiling variant of the
    copy count is reported next to the floor whenever the two differ.
    """
    if t < 1 or t_prime < 1:
        raise ValueError("side sizes must be positive")
    copies = (t - 3) // 8 if t >= 3 else 0
    copies_ceil = -((3 - t) // 8) if t >= 3 else 0  # ceil((t-3)/8)
    if copies < 1:
        return LocallyEulerianBuild(
            "infeasible", None,
            f"floor((t-3)/8) = {copies} gives every vertex an empty subgraph",
            copies, copies_ceil, 0,
        )
    big_t = t + t % 2
    big_tp = t_prime + t_prime % 2

    if decomposition is None:
        result = monogamous_c4_decomposition(big_t, big_tp, node_budget=node_budget)
        if result.status == "indeterminate":
            return LocallyEulerianBuild(
                "indeterminate", None,
                f"no decomposition of K_{{{big_t},{big_tp}}} found within budget;"
                " supply one explicitly",
                copies, copies_ceil, 0,
            )
        if result.status == "none":
            return LocallyEulerianBuild(
                "infeasible", None,
                f"K_{{{big_t},{big_tp}}} has no monogamous C4 decomposition",
                copies, copies_ceil, 0,
            )
        decomposition = result.decomposition
    else:
        if (decomposition.m, decomposition.n) != (big_t, big_tp):
            raise CertificateError(
                f"supplied decomposition is for K_{{{decomposition.m},{decomposition.n}}},"
                f" expected K_{{{big_t},{big_tp}}}"
            )
        check = verify_c4_decomposition(decomposition)
        if not check.ok:
            raise CertificateError(f"supplied decomposition invalid: {check.violation}")

    inside = [
        block for block in decomposition.blocks
        if all(l < t and rr < t_prime for l, rr in block)
    ]

    # Bipartite assignment: `copies` slots per vertex of K_{t,t'} vs blocks.
    host = make_complete_bipartite(t, t_prime)
    slots: list[int] = []           # slot -> host vertex
    for v in range(t + t_prime):
        slots.extend([v] * copies)
    block_vertices = []
    for block in inside:
        verts = sorted({l for l, _ in block}) + sorted({t + rr for _, rr in block})
        block_vertices.append(verts)
    slot_adj = [
        [bi for bi, verts in enumerate(block_vertices) if slots[si] in verts]
        for si in range(len(slots))
    ]
    assignment = _saturating_assignment(slot_adj, len(inside))
    if assignment is None:
        return LocallyEulerianBuild(
            "infeasible", None,
            "Hall condition fails: the inside blocks cannot saturate every vertex slot",
            copies, copies_ceil, len(inside),
        )

    subgraph_edges: list[set[int]] = [set() for _ in range(t + t_prime)]
    for si, bi in enumerate(assignment):
        v = slots[si]
        for l, rr in inside[bi]:
            subgraph_edges[v].add(l * t_prime + rr)
    cert = LocallyEulerianCertificate(
        host,
        tuple(range(t + t_prime)),
        tuple(frozenset(s) for s in subgraph_edges),
        r,
        c,
    )
    check = verify_locally_eulerian(cert)
    if not check.ok:
        return LocallyEulerianBuild(
            "infeasible", cert,
            f"built subgraphs do not satisfy (r={r}, c={c}): {check.violation};"
            f" root degree is {2 * copies}, other degrees 2",
            copies, copies_ceil, len(inside),
        )
    return LocallyEulerianBuild("ok", cert, "certificate verified", copies, copies_ceil, len(inside))


def _saturating_assignment(left_adj: list[list[int]], n_right: int) -> list[int] | None:
    """Left-saturating bipartite matching by augmenting paths (or None)."""
    match_right = [-1] * n_right
    match_left = [-1] * len(left_adj)

    def augment(u: int, seen: list[bool]) -> bool:
        for b in left_adj[u]:
            if seen[b]:
                continue
            seen[b] = True
            if match_right[b] == -1 or augment(match_right[b], seen):
                match_right[b] = u
                match_left[u] = b
                return True
        return False

    for u in range(len(left_adj)):
        if not augment(u, [False] * n_right):
            return None
    return match_left
