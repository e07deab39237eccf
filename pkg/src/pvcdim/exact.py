"""Exact solvers: enumeration oracles for the four problem variants.

Candidate vertex sets are enumerated in increasing mask order (Gosper
stepping), which fixes every tie deterministically: maximization returns
the first witness attaining the optimum, decision problems the first
witness attaining the target.  The candidate space splits into contiguous
rank intervals, so multi-threaded runs produce byte-identical results:
chunks are merged by global rank, never by completion order.

Enumeration refuses to start (or continue) past a configurable ceiling on
the number of candidate sets; exceeding it raises CapacityError rather
than truncating silently.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .approx import greedy_vertex_order
from .core import (
    CapacityError,
    Hypergraph,
    InputError,
    class_count,
    find_twin_edges,
    remove_twins,
    vertices_of,
)

DEFAULT_CEILING = 10**8


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    `witness` re-evaluated through `trace_profile` reproduces `value`;
    for decision problems `decided=True` implies value >= ell.
    `enumerated` counts candidate sets examined up to and including the
    accepted witness (the full space when nothing was accepted early; DFS
    extension checks for the shattered-set search), making it independent
    of the thread count.
    """

    problem: str
    witness: int
    value: int
    decided: bool | None
    k: int | None
    ell: int | None
    elapsed_ms: float
    enumerated: int
    reason: str | None = None

    @property
    def witness_vertices(self) -> tuple[int, ...]:
        return vertices_of(self.witness)


def combination_at_rank(rank: int, k: int) -> int:
    """The rank-th k-subset mask in increasing mask (colex) order."""
    mask = 0
    for i in range(k, 0, -1):
        c = i - 1
        while math.comb(c + 1, i) <= rank:
            c += 1
        mask |= 1 << c
        rank -= math.comb(c, i)
    return mask


def _next_mask(c: int) -> int:
    # Gosper's hack: next k-subset mask in increasing order.
    u = c & -c
    v = c + u
    return v | (((v ^ c) // u) >> 2)


def _scan_chunk(edges, start_rank, length, k, target):
    """Scan `length` masks from colex rank `start_rank`.

    Returns (best_value, best_mask, hit_rank, scanned): best over the
    chunk with the earliest mask winning ties; `hit_rank` is the global
    rank of the first mask reaching `target` (None without a target or a
    hit), in which case scanning stops there.
    """
    c = combination_at_rank(start_rank, k)
    best_val = -1
    best_mask = 0
    for i in range(length):
        val = len({e & c for e in edges})
        if val > best_val:
            best_val = val
            best_mask = c
            if target is not None and val >= target:
                return best_val, best_mask, start_rank + i, i + 1
        if i + 1 < length:
            c = _next_mask(c)
    return best_val, best_mask, None, length


def _scan(edges, n, k, *, threads=1, ceiling=DEFAULT_CEILING, target=None,
          budget_used=0):
    """Best (value, mask) over all k-subsets plus the enumerated count.

    With `target` set the scan stops at the first qualifying mask in
    global order.  `budget_used` charges earlier enumeration (ascending-k
    searches) against the same ceiling.
    """
    total = math.comb(n, k)
    if budget_used + total > ceiling:
        raise CapacityError(
            f"enumerating C({n},{k}) = {total} candidate sets exceeds the "
            f"ceiling of {ceiling}")
    if k == 0:
        return len({e & 0 for e in edges}), 0, 1
    if threads <= 1 or total < 4096:
        best_val, best_mask, hit, scanned = _scan_chunk(edges, 0, total, k, target)
        return best_val, best_mask, (hit + 1 if hit is not None else scanned)
    n_chunks = threads
    base, extra = divmod(total, n_chunks)
    bounds = []
    start = 0
    for i in range(n_chunks):
        length = base + (1 if i < extra else 0)
        if length:
            bounds.append((start, length))
        start += length
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(
            lambda b: _scan_chunk(edges, b[0], b[1], k, target), bounds))
    # Deterministic merge by chunk ordinal, never completion order.
    if target is not None:
        for res in results:
            if res[2] is not None:
                return res[0], res[1], res[2] + 1
        return (max((r[0] for r in results), default=-1),
                _merge_best(results), total)
    return max((r[0] for r in results), default=-1), _merge_best(results), total


def _merge_best(results):
    best_val = -1
    best_mask = 0
    for val, mask, _, _ in results:
        if val > best_val:
            best_val = val
            best_mask = mask
    return best_mask


def _pad_to_size(n: int, mask: int, k: int) -> int:
    for v in range(1, n + 1):
        if mask.bit_count() >= k:
            break
        mask |= 1 << (v - 1)
    return mask


def solve_partial_vc_decision(H: Hypergraph, k: int, ell: int, *,
                              ceiling: int = DEFAULT_CEILING,
                              threads: int = 1) -> SolveResult:
    """Is there a size-k set inducing at least ell classes?

    For k < ell the k-subsets are enumerated directly.  For k >= ell the
    greedy on the twin-reduced instance already reaches ell classes
    whenever ell distinct hyperedges exist (and fewer distinct hyperedges
    is an immediate NO), so no enumeration is needed.  Witnesses have size
    exactly k, padded with the lowest unused vertices.
    """
    t0 = time.perf_counter()
    if not 0 <= k <= H.n:
        raise InputError(f"budget {k} outside 0..{H.n}")
    if ell < 0:
        raise InputError(f"negative class target {ell}")

    def done(witness, value, decided, enumerated, reason=None):
        return SolveResult("partial-vc-decision", witness, value, decided, k, ell,
                           (time.perf_counter() - t0) * 1e3, enumerated, reason)

    if ell == 0:
        witness = _pad_to_size(H.n, 0, k)
        return done(witness, class_count(H, witness), True, 0)

    if ell > min(1 << k, H.m):
        return done(0, class_count(H, 0), False, 0, reason="cap")

    if k < ell:
        best_val, best_mask, enumerated = _scan(
            H.edges, H.n, k, threads=threads, ceiling=ceiling, target=ell)
        if best_val >= ell:
            return done(best_mask, best_val, True, enumerated)
        return done(best_mask, best_val, False, enumerated)

    reduced, vmap, _ = remove_twins(H)
    if reduced.m < ell:
        return done(0, class_count(H, 0), False, 0,
                    reason="fewer distinct hyperedges than ell")
    if ell > reduced.n:
        local = (1 << reduced.n) - 1
    else:
        local = 0
        for v in greedy_vertex_order(reduced, ell - 1):
            local |= 1 << (v - 1)
    witness = 0
    for new_idx, old_v in enumerate(vmap):
        if local >> new_idx & 1:
            witness |= 1 << (old_v - 1)
    witness = _pad_to_size(H.n, witness, k)
    value = class_count(H, witness)
    assert value >= ell
    return done(witness, value, True, 0)


def solve_max_partial_vc(H: Hypergraph, k: int, *,
                         ceiling: int = DEFAULT_CEILING,
                         threads: int = 1) -> SolveResult:
    """Exhaustive maximum class count over size-k sets; first witness wins ties."""
    t0 = time.perf_counter()
    if not 0 <= k <= H.n:
        raise InputError(f"budget {k} outside 0..{H.n}")
    value, witness, enumerated = _scan(H.edges, H.n, k, threads=threads,
                                       ceiling=ceiling)
    return SolveResult("max-partial-vc", witness, value, None, k, None,
                       (time.perf_counter() - t0) * 1e3, enumerated)


def vc_dimension(H: Hypergraph, *, ceiling: int = DEFAULT_CEILING,
                 threads: int = 1) -> SolveResult:
    """Largest d with a shattered d-set; witness is the first one found.

    Shattered sets are downward closed, so a depth-first search extending
    only shattered prefixes visits exactly the shattered sets.  Extensions
    are pruned by the incidence-count bound (each vertex of a shattered
    (s+1)-set lies in at least 2^s edges) and depth is capped at
    log2(#distinct edges).  Single-threaded; output does not depend on
    `threads`.  The edgeless hypergraph has dimension 0 by convention.
    """
    t0 = time.perf_counter()
    m = H.m
    if m == 0:
        return SolveResult("vc-dimension", 0, 0, None, None, None,
                           (time.perf_counter() - t0) * 1e3, 0)
    d_cap = H.distinct_edge_count().bit_length() - 1
    # Per-vertex incidence over edge positions; cells are masks of edge
    # positions realizing one trace pattern each.
    cols = H.incidence_columns()
    full = (1 << m) - 1
    best = [0, 0]  # size, mask
    checks = 0

    def extend(prefix_mask, cells, depth, start_bit):
        nonlocal checks
        if depth > best[0]:
            best[0] = depth
            best[1] = prefix_mask
        if depth == d_cap:
            return
        need = 1 << depth
        for b in range(start_bit, H.n):
            col = cols[b]
            if col.bit_count() < need:
                continue
            checks += 1
            if checks > ceiling:
                raise CapacityError(
                    f"shattered-set search exceeded the ceiling of {ceiling} "
                    "extension checks")
            new_cells = []
            ok = True
            for cell in cells:
                inside = cell & col
                outside = cell & ~col
                if not inside or not outside:
                    ok = False
                    break
                new_cells.append(outside)
                new_cells.append(inside)
            if ok:
                extend(prefix_mask | (1 << b), new_cells, depth + 1, b + 1)

    extend(0, [full], 0, 0)
    return SolveResult("vc-dimension", best[1], best[0], None, None, None,
                       (time.perf_counter() - t0) * 1e3, checks)


def min_distinguishing_transversal(H: Hypergraph, *,
                                   ceiling: int = DEFAULT_CEILING,
                                   threads: int = 1) -> SolveResult:
    """Smallest set inducing m distinct classes, by ascending-size enumeration.

    Requires edge-twin-freeness (twins make m classes unreachable); twin
    vertices are permitted, they are merely useless.
    """
    t0 = time.perf_counter()
    pair = find_twin_edges(H)
    if pair is not None:
        raise InputError(
            f"twin hyperedges at positions {pair[0]} and {pair[1]}; "
            "reduce twins before solving")
    m = H.m
    used = 0
    for k in range(H.n + 1):
        value, witness, enumerated = _scan(H.edges, H.n, k, threads=threads,
                                           ceiling=ceiling, target=m,
                                           budget_used=used)
        used += enumerated
        if value >= m:
            return SolveResult("min-distinguishing-transversal", witness, k,
                               None, None, None,
                               (time.perf_counter() - t0) * 1e3, used)
    raise AssertionError("the full vertex set always distinguishes distinct edges")
