"""Alternation invariants of hypergraphs and alternating Turan numbers.

For a sign vector X over a hypergraph's ground set read along an ordering
sigma, alt(X) is the length of a longest alternating subsequence of its
nonzero entries.  alt_sigma(H) maximizes alt(X) over vectors whose plus
and minus supports both avoid containing a hyperedge; salt_sigma allows
one support to contain hyperedges.  On the matching hypergraph of a graph
these equal the alternating Turan numbers ex_alt / ex_salt, computed here
directly on the graph side as well, which gives two independent engines
for the same quantities.

Both quantities yield chromatic lower bounds for general Kneser graphs:
    chi(KG(H)) >= |ground| - alt_sigma(H)
    chi(KG(H)) >= |ground| + 1 - salt_sigma(H)   (when H has a hyperedge)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .errors import CapacityError
from .graphs import Graph
from .hypergraphs import Hypergraph
from .matching import edge_subset_has_r_matching


@dataclass(frozen=True)
class EdgeOrdering:
    """A permutation of the edge indices (or ground elements) of a host."""

    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("ordering is not a permutation of 0..m-1")

    def __len__(self):
        return len(self.perm)

    @classmethod
    def identity(cls, m: int) -> "EdgeOrdering":
        return cls(tuple(range(m)))

    def to_line(self) -> str:
        return " ".join(str(p) for p in self.perm)

    @classmethod
    def from_line(cls, line: str) -> "EdgeOrdering":
        return cls(tuple(int(tok) for tok in line.split()))


def alt(x: Sequence[int]) -> int:
    """Longest alternating subsequence of the nonzero entries; all-zero -> 0."""
    runs = 0
    last = 0
    for v in x:
        if v not in (-1, 0, 1):
            raise ValueError("sign vector entries must be -1, 0, or +1")
        if v != 0 and v != last:
            runs += 1
            last = v
    return runs


# ---------------------------------------------------------------------------
# Hypergraph-side engine: branch and bound over sign vectors in sigma order.
# ---------------------------------------------------------------------------

def _check_ordering(h: Hypergraph, sigma: EdgeOrdering):
    if len(sigma) != h.ground_n:
        raise ValueError("ordering length does not match ground set size")


def _sign_search(h: Hypergraph, sigma: EdgeOrdering, strong: bool, cap: int,
                 stop_at: int | None = None) -> int:
    """Max alt(X) with at most zero (strong=False) or one (strong=True) of the
    supports containing a hyperedge."""
    _check_ordering(h, sigma)
    n = h.ground_n
    if n > cap:
        raise CapacityError(f"ground set of size {n} exceeds search cap {cap}")
    masks = h.masks
    through = h.masks_through
    order = sigma.perm
    best = 0

    def completes(side_mask_with_bit: int, elem: int) -> bool:
        for i in through[elem]:
            if not masks[i] & ~side_mask_with_bit:
                return True
        return False

    def descend(pos: int, plus: int, minus: int, dead_plus: bool,
                dead_minus: bool, last: int, count: int):
        nonlocal best
        if count > best:
            best = count
        if pos == n or count + (n - pos) <= best:
            return
        if stop_at is not None and best >= stop_at:
            return
        elem = order[pos]
        bit = 1 << elem
        # Try the alternation-extending sign first so the bound prunes early.
        for sign in ((-last, last) if last else (1, -1)):
            if sign > 0:
                now_dead = dead_plus or completes(plus | bit, elem)
                if now_dead and (not strong or dead_minus):
                    continue
                descend(pos + 1, plus | bit, minus, now_dead, dead_minus,
                        sign, count + (1 if sign != last else 0))
            else:
                now_dead = dead_minus or completes(minus | bit, elem)
                if now_dead and (not strong or dead_plus):
                    continue
                descend(pos + 1, plus, minus | bit, dead_plus, now_dead,
                        sign, count + (1 if sign != last else 0))
        descend(pos + 1, plus, minus, dead_plus, dead_minus, last, count)

    descend(0, 0, 0, False, False, 0, 0)
    return best


def alt_sigma(h: Hypergraph, sigma: EdgeOrdering, cap: int = 18) -> int:
    """Largest alt(X) with neither support containing any hyperedge."""
    return _sign_search(h, sigma, strong=False, cap=cap)


def salt_sigma(h: Hypergraph, sigma: EdgeOrdering, cap: int = 18) -> int:
    """Largest alt(X) with at most one support containing some hyperedge."""
    return _sign_search(h, sigma, strong=True, cap=cap)


@dataclass(frozen=True)
class OrderingMinimum:
    value: int
    ordering: EdgeOrdering
    certified: bool


def _minimize(h: Hypergraph, strong: bool, cap: int, heuristic: bool,
              restarts: int, seed: int) -> OrderingMinimum:
    n = h.ground_n
    if not heuristic:
        if n > cap:
            raise CapacityError(
                f"certified minimization over {n}! orderings exceeds cap {cap};"
                " pass heuristic=True for an upper bound"
            )
        best_val = None
        best_sigma = None
        for perm in permutations(range(n)):
            sigma = EdgeOrdering(perm)
            val = _sign_search(h, sigma, strong, cap=max(cap, n), stop_at=best_val)
            if best_val is None or val < best_val:
                best_val, best_sigma = val, sigma
                if best_val == 0:
                    break
        return OrderingMinimum(best_val, best_sigma, True)

    import random

    rng = random.Random(seed)
    evaluate = salt_sigma if strong else alt_sigma
    best_sigma = EdgeOrdering.identity(n)
    best_val = evaluate(h, best_sigma, cap=max(cap, n))
    for _ in range(restarts):
        perm = list(range(n))
        rng.shuffle(perm)
        current = perm
        current_val = evaluate(h, EdgeOrdering(tuple(current)), cap=max(cap, n))
        improved = True
        while improved:
            improved = False
            for i in range(n - 1):
                trial = list(current)
                trial[i], trial[i + 1] = trial[i + 1], trial[i]
                val = evaluate(h, EdgeOrdering(tuple(trial)), cap=max(cap, n))
                if val < current_val:
                    current, current_val = trial, val
                    improved = True
        if current_val < best_val:
            best_val = current_val
            best_sigma = EdgeOrdering(tuple(current))
    return OrderingMinimum(best_val, best_sigma, False)


def alt_min(h: Hypergraph, cap: int = 8, heuristic: bool = False,
            restarts: int = 8, seed: int = 0) -> OrderingMinimum:
    """min over orderings of alt_sigma; factorial search unless heuristic."""
    return _minimize(h, strong=False, cap=cap, heuristic=heuristic,
                     restarts=restarts, seed=seed)


def salt_min(h: Hypergraph, cap: int = 8, heuristic: bool = False,
             restarts: int = 8, seed: int = 0) -> OrderingMinimum:
    """min over orderings of salt_sigma; factorial search unless heuristic."""
    return _minimize(h, strong=True, cap=cap, heuristic=heuristic,
                     restarts=restarts, seed=seed)


# ---------------------------------------------------------------------------
# Graph-side engine: alternating colorings along an edge ordering.
# ---------------------------------------------------------------------------

class _ClassState:
    """One color class of a growing alternating coloring.

    Tracks whether the class contains an r-matching; r = 2 runs on
    precomputed disjointness bitmasks, larger r re-solves the small class.
    """

    __slots__ = ("g", "r", "ids", "mask", "dead", "_trail")

    def __init__(self, g: Graph, r: int):
        self.g = g
        self.r = r
        self.ids: list[int] = []
        self.mask = 0
        self.dead = False
        self._trail: list[bool] = []

    def would_die(self, e: int) -> bool:
        if self.dead:
            return True
        if self.r == 2:
            return bool(self.g.edge_disjoint_masks[e] & self.mask)
        return edge_subset_has_r_matching(self.g, self.ids + [e], self.r)

    def push(self, e: int):
        self._trail.append(self.dead)
        if not self.dead and self.would_die(e):
            self.dead = True
        self.ids.append(e)
        self.mask |= 1 << e

    def pop(self):
        e = self.ids.pop()
        self.mask &= ~(1 << e)
        self.dead = self._trail.pop()


def _alternating_search(g: Graph, r: int, sigma: EdgeOrdering, strong: bool,
                        cap: int) -> int:
    """Max size of an edge subset whose alternating 2-coloring along sigma
    keeps both (strong=False) or at least one (strong=True) class free of
    r-matchings.

    Feasible sizes are downward closed (dropping the last colored edge keeps
    the classes' prefixes intact), so the maximum found by this search is
    the alternating Turan value.
    """
    if len(sigma) != g.m:
        raise ValueError("ordering length does not match edge count")
    if r < 1:
        raise ValueError("r must be at least 1")
    if g.m > cap:
        raise CapacityError(f"edge count {g.m} exceeds search cap {cap}")
    m = g.m
    order = sigma.perm
    classes = (_ClassState(g, r), _ClassState(g, r))
    best = 0

    def descend(pos: int, colored: int):
        nonlocal best
        if colored > best:
            best = colored
        if pos == m or colored + (m - pos) <= best:
            return
        e = order[pos]
        cls = classes[colored & 1]
        other = classes[1 - (colored & 1)]
        dies = cls.would_die(e)
        if not dies or (strong and not other.dead):
            cls.push(e)
            descend(pos + 1, colored + 1)
            cls.pop()
        descend(pos + 1, colored)

    descend(0, 0)
    return best


def ex_alt_sigma(g: Graph, r: int, sigma: EdgeOrdering, cap: int = 30) -> int:
    """Alternating Turan number of rK2 along sigma: both classes rK2-free."""
    return _alternating_search(g, r, sigma, strong=False, cap=cap)


def ex_salt_sigma(g: Graph, r: int, sigma: EdgeOrdering, cap: int = 30) -> int:
    """Strong variant: at least one class must be rK2-free."""
    return _alternating_search(g, r, sigma, strong=True, cap=cap)


# ---------------------------------------------------------------------------
# Chromatic lower bounds.
# ---------------------------------------------------------------------------

def chi_lower_bounds(h: Hypergraph, sigma: EdgeOrdering, cap: int = 18) -> tuple[int, int]:
    """(|ground| - alt_sigma, |ground| + 1 - salt_sigma): both are lower
    bounds on chi(KG(h)).

    A hypergraph without hyperedges has an empty Kneser graph, for which
    both bounds degenerate; they are clamped to 0 there.
    """
    if h.k == 0:
        return (0, 0)
    n = h.ground_n
    return (n - alt_sigma(h, sigma, cap=cap), n + 1 - salt_sigma(h, sigma, cap=cap))


def matching_chi_lower_bound(g: Graph, r: int, sigma: EdgeOrdering) -> int:
    """Best alternation lower bound for chi(KG(g, rK2)) from one ordering.

    Uses the graph-side engines: chi >= |E| - ex_alt_sigma and
    chi >= |E| + 1 - ex_salt_sigma.  Clamped to 0 when g has no r-matching
    (empty Kneser graph).
    """
    if not edge_subset_has_r_matching(g, range(g.m), r):
        return 0
    return max(
        g.m - ex_alt_sigma(g, r, sigma),
        g.m + 1 - ex_salt_sigma(g, r, sigma),
    )
