"""Seeded random instance generators.

All randomness flows through a caller-supplied seed; string-keyed
`random.Random` seeding is stable across platforms and runs, so equal
seeds always reproduce equal instances byte for byte.
"""

from __future__ import annotations

import random

from .core import Graph, Hypergraph, InputError, is_twin_free


def rng_from(seed) -> random.Random:
    """A Random keyed by str(seed); pass a Random through unchanged."""
    if isinstance(seed, random.Random):
        return seed
    return random.Random(str(seed))


def random_hypergraph(n: int, m: int, density: float = 0.5, seed=0) -> Hypergraph:
    """m random edges; each vertex joins an edge independently with `density`."""
    rng = rng_from(seed)
    edges = []
    for _ in range(m):
        mask = 0
        for b in range(n):
            if rng.random() < density:
                mask |= 1 << b
        edges.append(mask)
    return Hypergraph(n, tuple(edges))


def random_twin_free_hypergraph(n: int, m: int, density: float = 0.5,
                                seed=0, max_attempts: int = 500) -> Hypergraph:
    """Random hypergraph rejected and resampled until twin-free.

    Needs 2^m >= n (otherwise two incidence columns must coincide) and
    enough headroom for rejection sampling; raises InputError when the
    parameters leave no room.
    """
    if n > 0 and m < 64 and (1 << m) < n:
        raise InputError(f"no twin-free hypergraph with n={n}, m={m}: 2^m < n")
    rng = rng_from(seed)
    for _ in range(max_attempts):
        edges: set[int] = set()
        tries = 0
        while len(edges) < m and tries < 50 * m + 100:
            mask = 0
            for b in range(n):
                if rng.random() < density:
                    mask |= 1 << b
            edges.add(mask)
            tries += 1
        if len(edges) < m:
            continue
        ordered = tuple(sorted(edges))
        H = Hypergraph(n, ordered)
        if is_twin_free(H):
            return H
    raise InputError(
        f"could not sample a twin-free hypergraph with n={n}, m={m}, "
        f"density={density} in {max_attempts} attempts")


def random_graph(n: int, p: float = 0.5, seed=0) -> Graph:
    """Simple G(n, p)."""
    rng = rng_from(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_cubic_graph(n: int, seed=0, max_attempts: int = 2000) -> Graph:
    """Random 3-regular graph via the pairing model with simplicity rejection.

    Three stubs per vertex are matched uniformly; matchings with loops or
    parallel edges are rejected and redrawn (expected ~e^2 ≈ 7.4 draws).
    n must be even and at least 4.
    """
    if n < 4 or n % 2:
        raise InputError(f"cubic graphs need an even vertex count >= 4, got {n}")
    rng = rng_from(seed)
    for _ in range(max_attempts):
        stubs = [v for v in range(1, n + 1) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
        seen = set()
        ok = True
        for u, v in pairs:
            if u == v or (min(u, v), max(u, v)) in seen:
                ok = False
                break
            seen.add((min(u, v), max(u, v)))
        if ok:
            return Graph.from_edges(n, pairs)
    raise InputError(f"no simple cubic graph found for n={n} after "
                     f"{max_attempts} pairings")


def grid_graph(rows: int, cols: int) -> tuple[Graph, tuple[int, ...]]:
    """rows x cols grid with its outerplanarity levels (concentric rings).

    Vertex (r, c) has index (r-1)*cols + c; its level is its ring number,
    1 on the boundary.
    """
    if rows < 1 or cols < 1:
        raise InputError("grid dimensions must be positive")

    def vid(r, c):
        return (r - 1) * cols + c

    edges = []
    for r in range(1, rows + 1):
        for c in range(1, cols + 1):
            if c < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    levels = tuple(
        min(r - 1, rows - r, c - 1, cols - c) + 1
        for r in range(1, rows + 1) for c in range(1, cols + 1))
    return Graph.from_edges(rows * cols, edges), levels


def random_linear_hypergraph(n: int, m: int, seed=0, max_edge: int = 4,
                             max_attempts_per_edge: int = 200) -> Hypergraph:
    """Random hypergraph in which any two edges share at most one vertex.

    Edges are drawn and kept only when compatible with everything kept so
    far; gives up (InputError) when the target count is unreachable.
    """
    rng = rng_from(seed)
    kept: list[int] = []
    while len(kept) < m:
        for _ in range(max_attempts_per_edge):
            size = rng.randint(1, min(max_edge, max(1, n)))
            mask = 0
            for v in rng.sample(range(n), size):
                mask |= 1 << v
            if mask in kept:
                continue
            if all((mask & e).bit_count() <= 1 for e in kept):
                kept.append(mask)
                break
        else:
            raise InputError(
                f"could not place {m} pairwise almost-disjoint edges on "
                f"{n} vertices")
    return Hypergraph(n, tuple(kept))
