"""Layer-decomposition approximation schemes on leveled planar graphs.

Levels index the rings obtained by repeatedly peeling the outer face of a
planar embedding; the caller supplies them (level file) or the outer face
itself, from which `compute_levels` peels combinatorially.  Removing every
(lambda+1)-th level splits the graph into components that are pairwise
non-adjacent, so nonempty equivalence classes counted inside components
add up; a group-knapsack DP distributes the vertex budget and the best
residue wins.  For the minimization variant, overlapping slabs are solved
for "separate everything and dominate everything" and their union is a
distinguishing transversal of the whole graph.

Component and slab subproblems are solved by exhaustive enumeration under
an explicit candidate ceiling; blowing the ceiling is a CapacityError
naming the offender, never a silent approximation.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .approx import ApproxResult, upper_bound_classes
from .core import (
    CapacityError,
    Graph,
    InputError,
    class_count,
    neighborhood_hypergraph,
)
from .exact import SolveResult, _next_mask


@dataclass(frozen=True)
class LeveledPlanarGraph:
    """A graph with a 1-based outerplanarity level per vertex.

    Levels are contiguous (every value 1..t occurs) and every edge joins
    vertices whose levels differ by at most one.
    """

    graph: Graph
    level: tuple[int, ...]
    t: int

    def __post_init__(self):
        G = self.graph
        if len(self.level) != G.n:
            raise InputError("level vector length does not match vertex count")
        if G.n == 0:
            return
        present = set(self.level)
        if min(present) < 1 or present != set(range(1, self.t + 1)):
            raise InputError("levels must cover 1..t with no gaps")
        for u in range(1, G.n + 1):
            for v in G.adj[u - 1]:
                if abs(self.level[u - 1] - self.level[v - 1]) > 1:
                    raise InputError(
                        f"edge {u}-{v} spans levels "
                        f"{self.level[u - 1]} and {self.level[v - 1]}")

    @classmethod
    def from_levels(cls, G: Graph, level) -> "LeveledPlanarGraph":
        level = tuple(level)
        return cls(G, level, max(level, default=0))


def compute_levels(G: Graph, outer_face) -> LeveledPlanarGraph:
    """Peel levels starting from the supplied outer face.

    Level 1 is the outer face; level i+1 contains the remaining vertices
    adjacent to level i.  This matches outer-face peeling on the supported
    families (grids, trees, outerplanar graphs).  Components that the
    peeling never reaches (interior islands of the embedding) are
    rejected: supply a precomputed level file for those.
    """
    outer = set(outer_face)
    for v in outer:
        if not 1 <= v <= G.n:
            raise InputError(f"outer-face vertex {v} out of range 1..{G.n}")
    if G.n and not outer:
        raise InputError("outer face must be non-empty")
    level = [0] * G.n
    frontier = sorted(outer)
    current = 1
    seen = len(frontier)
    for v in frontier:
        level[v - 1] = current
    while frontier:
        nxt = []
        for u in frontier:
            for v in G.adj[u - 1]:
                if not level[v - 1]:
                    level[v - 1] = current + 1
                    nxt.append(v)
        frontier = sorted(nxt)
        seen += len(nxt)
        current += 1
    if seen != G.n:
        missing = next(v for v in range(1, G.n + 1) if not level[v - 1])
        raise InputError(
            f"vertex {missing} is unreachable from the outer face; "
            "supply explicit levels instead")
    return LeveledPlanarGraph(G, tuple(level), max(level, default=0))


@dataclass(frozen=True)
class ComponentTable:
    """Per-budget optima for one component.

    best[y] = (value, witness) where value is the maximum number of
    nonempty equivalence classes a size-y subset of the component induces
    in the component's own neighborhood hypergraph; witnesses are masks in
    the original vertex numbering.  Values are nondecreasing in y and
    budgets beyond the component size reuse the full-component optimum.
    """

    component: tuple[int, ...]
    best: tuple[tuple[int, int], ...]


def lambda_for_max(epsilon: float) -> int:
    """Band width parameter for the maximization scheme: 2 + ceil(3/eps)."""
    if epsilon <= 0:
        raise InputError(f"epsilon must be positive, got {epsilon}")
    return 2 + math.ceil(3 / epsilon)


def lambda_for_min(epsilon: float) -> int:
    """Band width parameter for the minimization scheme: ceil(2/eps)."""
    if epsilon <= 0:
        raise InputError(f"epsilon must be positive, got {epsilon}")
    return math.ceil(2 / epsilon)


def _induced(G: Graph, vertices: list[int]) -> Graph:
    pos = {v: i + 1 for i, v in enumerate(vertices)}
    adj = []
    for v in vertices:
        adj.append(tuple(sorted(pos[u] for u in G.adj[v - 1] if u in pos)))
    return Graph(len(vertices), tuple(adj))


def _components(G: Graph, kept: set[int]) -> list[list[int]]:
    comps = []
    unvisited = set(kept)
    while unvisited:
        start = min(unvisited)
        stack = [start]
        unvisited.discard(start)
        comp = [start]
        while stack:
            u = stack.pop()
            for v in G.adj[u - 1]:
                if v in unvisited:
                    unvisited.discard(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def component_exact_solver(subgraph: Graph, k_max: int, labels=None, *,
                           ceiling: int = 10**8) -> ComponentTable:
    """Exhaustive per-budget optima of nonempty class counts in a component.

    `labels` maps the subgraph's vertices back to original ids (identity
    by default); witnesses are emitted in label space.
    """
    n = subgraph.n
    if labels is None:
        labels = tuple(range(1, n + 1))
    masks = neighborhood_hypergraph(subgraph).edges
    total = sum(math.comb(n, y) for y in range(min(k_max, n) + 1))
    if total > ceiling:
        raise CapacityError(
            f"component {labels} needs {total} candidate sets, over the "
            f"ceiling of {ceiling}")
    best: list[tuple[int, int]] = []
    for y in range(k_max + 1):
        if y > n:
            best.append(best[-1])
            continue
        if y == 0:
            best.append((0, 0))
            continue
        c = (1 << y) - 1
        top = 1 << n
        best_val, best_mask = -1, 0
        while c < top:
            traces = {e & c for e in masks}
            traces.discard(0)
            if len(traces) > best_val:
                best_val, best_mask = len(traces), c
            c = _next_mask(c)
        witness = 0
        for b in range(n):
            if best_mask >> b & 1:
                witness |= 1 << (labels[b] - 1)
        best.append((best_val, witness))
    return ComponentTable(tuple(labels), tuple(best))


def knapsack_combine(tables, k: int) -> tuple[int, tuple[int, ...]]:
    """Group knapsack over component tables: maximize the summed values.

    Returns (value, per-table budget allocation).  Ties are resolved
    toward earlier components taking larger budgets.
    """
    if k < 0:
        raise InputError(f"negative budget {k}")
    tables = list(tables)
    dp = [0] + [-1] * k
    choices: list[list[int]] = []
    for table in tables:
        vals = [table.best[min(y, len(table.best) - 1)][0] for y in range(k + 1)]
        new_dp = [-1] * (k + 1)
        choice = [0] * (k + 1)
        for y in range(k + 1):
            best_val, best_x = -1, 0
            for x in range(y + 1):
                if dp[y - x] < 0:
                    continue
                cand = dp[y - x] + vals[x]
                # Smallest x wins ties: later components take less, so
                # earlier ones keep the larger share.
                if cand > best_val:
                    best_val, best_x = cand, x
            new_dp[y] = best_val
            choice[y] = best_x
        dp = new_dp
        choices.append(choice)
    alloc = [0] * len(tables)
    y = k
    for q in range(len(tables) - 1, -1, -1):
        alloc[q] = choices[q][y]
        y -= alloc[q]
    return dp[k] if tables else 0, tuple(alloc)


def baker_max_partial_vc(L: LeveledPlanarGraph, k: int, epsilon: float, *,
                         ceiling: int = 10**8) -> ApproxResult:
    """Budgeted class maximization within factor 1+epsilon on leveled graphs.

    For each residue class of levels mod (lambda+1) the matching levels
    are deleted, each remaining component is solved exactly per budget,
    and the knapsack DP distributes the budget.  Nonempty classes from
    distinct components add (the deleted level keeps chosen sets
    non-interacting), the empty class is credited once when realized, and
    the reported value is always a whole-graph re-evaluation of the
    witness.
    """
    G = L.graph
    if not 0 <= k <= G.n:
        raise InputError(f"budget {k} outside 0..{G.n}")
    lam = lambda_for_max(epsilon)
    H_full = neighborhood_hypergraph(G)
    best_value = -1
    best_witness = 0
    for residue in range(lam + 1):
        kept = {v for v in range(1, G.n + 1)
                if L.level[v - 1] % (lam + 1) != residue}
        tables = []
        for comp in _components(G, kept):
            sub = _induced(G, comp)
            tables.append(component_exact_solver(sub, min(k, sub.n),
                                                 labels=tuple(comp),
                                                 ceiling=ceiling))
        dp_value, alloc = knapsack_combine(tables, k)
        witness = 0
        for table, y in zip(tables, alloc):
            witness |= table.best[min(y, len(table.best) - 1)][1]
        for v in range(1, G.n + 1):
            if witness.bit_count() >= k:
                break
            witness |= 1 << (v - 1)
        value = class_count(H_full, witness)
        claimed = dp_value + (1 if any((e & witness) == 0 for e in H_full.edges)
                              else 0)
        assert value >= claimed, "component accounting exceeded the real value"
        if value > best_value:
            best_value = value
            best_witness = witness
    ub = upper_bound_classes(H_full, k)
    return ApproxResult(best_witness, best_value, ub,
                        Fraction(ub, best_value) if best_value else None,
                        "baker-max")


def _min_separate_dominate(sub: Graph, labels, *, ceiling: int,
                           budget_used: int) -> tuple[int, int]:
    """Smallest slab set separating all slab vertices and dominating each.

    Returns (witness mask in label space, candidates examined).  Raises
    InputError when two slab vertices have identical closed neighborhoods
    inside the slab (no set can separate them).
    """
    masks = neighborhood_hypergraph(sub).edges
    n = sub.n
    seen: dict[int, int] = {}
    for idx, e in enumerate(masks, 1):
        if e in seen:
            raise InputError(
                f"slab vertices {labels[seen[e] - 1]} and {labels[idx - 1]} "
                "have identical closed neighborhoods inside their slab")
        seen[e] = idx
    used = 0
    for y in range(n + 1):
        count = math.comb(n, y)
        if budget_used + used + count > ceiling:
            raise CapacityError(
                f"slab {labels} exceeds the enumeration ceiling of {ceiling}")
        if y == 0:
            used += 1
            if n == 0:
                return 0, used
            continue
        c = (1 << y) - 1
        top = 1 << n
        found = -1
        while c < top:
            used += 1
            traces = [e & c for e in masks]
            if 0 not in traces and len(set(traces)) == n:
                found = c
                break
            c = _next_mask(c)
        if found >= 0:
            witness = 0
            for b in range(n):
                if found >> b & 1:
                    witness |= 1 << (labels[b] - 1)
            return witness, used
    raise AssertionError("taking every slab vertex always separates and dominates")


def baker_min_distinguishing(L: LeveledPlanarGraph, epsilon: float, *,
                             ceiling: int = 10**8) -> SolveResult:
    """Minimum distinguishing transversal within factor 1+epsilon.

    For each residue, overlapping slabs of at most lambda+2 consecutive
    levels (consecutive slabs share two levels) are solved exactly for the
    separate-and-dominate subproblem; the union of slab solutions
    distinguishes the whole graph.  The smallest verified union over the
    residues is returned.
    """
    t0 = time.perf_counter()
    G = L.graph
    H_full = neighborhood_hypergraph(G)
    dup: dict[int, int] = {}
    for v, e in enumerate(H_full.edges, 1):
        if e in dup:
            raise InputError(
                f"vertices {dup[e]} and {v} have identical closed "
                "neighborhoods; no distinguishing transversal exists")
        dup[e] = v
    lam = lambda_for_min(epsilon)
    best_witness = None
    total_used = 0
    for residue in range(lam):
        witness = 0
        used = 0
        j_start = -1 if residue >= 2 else 0
        j = j_start
        slabs = []
        while True:
            lo = j * lam + residue
            hi = lo + lam + 1
            if lo > L.t:
                break
            lo_c, hi_c = max(1, lo), min(L.t, hi)
            if lo_c <= hi_c:
                slabs.append((lo_c, hi_c))
            j += 1
        covered = set()
        for lo_c, hi_c in slabs:
            covered.update(range(lo_c, hi_c + 1))
        assert covered >= set(range(1, L.t + 1)), "slabs must cover every level"
        for lo_c, hi_c in slabs:
            verts = [v for v in range(1, G.n + 1)
                     if lo_c <= L.level[v - 1] <= hi_c]
            if not verts:
                continue
            sub = _induced(G, verts)
            part, used_here = _min_separate_dominate(
                sub, tuple(verts), ceiling=ceiling,
                budget_used=total_used + used)
            witness |= part
            used += used_here
        total_used += used
        if class_count(H_full, witness) == H_full.m:
            size = witness.bit_count()
            if best_witness is None or size < best_witness.bit_count():
                best_witness = witness
    if best_witness is None:
        raise AssertionError("every residue yields a distinguishing union")
    return SolveResult("min-distinguishing-transversal", best_witness,
                       best_witness.bit_count(), None, None, None,
                       (time.perf_counter() - t0) * 1e3, total_used)
