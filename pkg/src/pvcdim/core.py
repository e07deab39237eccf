"""Bit-mask hypergraphs, trace profiles, and twin reduction.

Vertices are numbered 1..n externally and map to bits 0..n-1 internally,
so a hyperedge is a plain int whose set bits are its members and every
edge intersection is a single AND.  All types are frozen dataclasses:
instances are immutable after construction and safe to share between
workers.

The *trace* of a hyperedge e under a chosen vertex set C is e & C.  The
number of distinct traces is the number of neighborhood equivalence
classes induced by C; a set C is *shattered* when its traces realize all
2^|C| subsets of C.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

# Masks grow in 64-bit words for free (Python ints); the hard cap keeps
# the artifact at desk scale.
MAX_VERTICES = 4096


class InputError(ValueError):
    """Malformed instance, argument or file (CLI exit code 2)."""


class CapacityError(RuntimeError):
    """Search space or instance beyond the configured limits (CLI exit code 3)."""


def _as_mask(n: int, C) -> int:
    """Normalize a vertex set (iterable of 1-based ids, or a mask) to a mask."""
    if isinstance(C, int):
        if C < 0 or C >> n:
            raise InputError(f"vertex mask {C:#x} does not fit 1..{n}")
        return C
    mask = 0
    for v in C:
        if not 1 <= v <= n:
            raise InputError(f"vertex {v} out of range 1..{n}")
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    """The 1-based, ascending vertex tuple of a mask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    """A set system on vertices 1..n with an ordered list of edge masks.

    Invariants: every edge is a subset of 1..n (the empty edge is fine),
    edge order is stable, and duplicates are retained until an explicit
    `remove_twins`.
    """

    n: int
    edges: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"negative vertex count {self.n}")
        if self.n > MAX_VERTICES:
            raise CapacityError(
                f"{self.n} vertices exceed the {MAX_VERTICES}-vertex capacity")
        for pos, e in enumerate(self.edges, 1):
            if e < 0 or e >> self.n:
                raise InputError(f"edge {pos} is not a subset of 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_vertices(self, i: int) -> tuple[int, ...]:
        """Members of edge i (1-based) as a vertex tuple."""
        return vertices_of(self.edges[i - 1])

    def distinct_edge_count(self) -> int:
        return len(set(self.edges))

    def incidence_columns(self) -> list[int]:
        """Per-vertex masks over edge positions (bit j = membership in edge j+1)."""
        cols = [0] * self.n
        for j, e in enumerate(self.edges):
            while e:
                low = e & -e
                cols[low.bit_length() - 1] |= 1 << j
                e ^= low
        return cols

    def degrees(self) -> list[int]:
        return [c.bit_count() for c in self.incidence_columns()]


def build_hypergraph(n: int, edge_sets: Iterable[Iterable[int]], name: str = "") -> Hypergraph:
    """Build a hypergraph from 1-based vertex index sets, keeping edge order.

    Raises InputError naming the offending edge position on a bad index.
    """
    masks = []
    for pos, es in enumerate(edge_sets, 1):
        mask = 0
        for v in es:
            if not 1 <= v <= n:
                raise InputError(f"edge {pos}: vertex {v} out of range 1..{n}")
            mask |= 1 << (v - 1)
        masks.append(mask)
    return Hypergraph(n, tuple(masks), name)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph: per-vertex sorted neighbor tuples, 1-based."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InputError("adjacency length does not match vertex count")
        for u, nbrs in enumerate(self.adj, 1):
            last = 0
            for v in nbrs:
                if not 1 <= v <= self.n:
                    raise InputError(f"vertex {v} out of range 1..{self.n}")
                if v == u:
                    raise InputError(f"self-loop at vertex {u}")
                if v <= last:
                    raise InputError(f"unsorted or duplicate neighbors at vertex {u}")
                last = v
                if u not in self.adj[v - 1]:
                    raise InputError(f"asymmetric edge {u}-{v}")

    @classmethod
    def from_edges(cls, n: int, edge_list: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edge_list:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge {u}-{v} out of range 1..{n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            nbrs[u - 1].add(v)
            nbrs[v - 1].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v - 1])

    def edge_list(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(1, self.n + 1) for v in self.adj[u - 1] if u < v]


@dataclass(frozen=True)
class TraceProfile:
    """Distinct traces of a hypergraph's edges under a solution set.

    `traces` is sorted ascending by mask value; `representatives[i]` is the
    lowest 1-based edge index realizing `traces[i]`.  The traces partition
    the edge list; `class_count == len(traces)`.
    """

    solution: int
    traces: tuple[int, ...]
    class_count: int
    representatives: tuple[int, ...]


def class_count(H: Hypergraph, C) -> int:
    """Number of neighborhood equivalence classes induced by C (0 when m=0)."""
    cmask = _as_mask(H.n, C)
    return len({e & cmask for e in H.edges})


def trace_profile(H: Hypergraph, C) -> TraceProfile:
    """Distinct traces {e & C} with their lowest realizing edge indexes."""
    cmask = _as_mask(H.n, C)
    first: dict[int, int] = {}
    for idx, e in enumerate(H.edges, 1):
        t = e & cmask
        if t not in first:
            first[t] = idx
    traces = tuple(sorted(first))
    return TraceProfile(
        solution=cmask,
        traces=traces,
        class_count=len(traces),
        representatives=tuple(first[t] for t in traces),
    )


def is_shattered(H: Hypergraph, C) -> bool:
    """True iff the traces of C realize all 2^|C| subsets of C."""
    cmask = _as_mask(H.n, C)
    want = 1 << cmask.bit_count()
    return len({e & cmask for e in H.edges}) == want


def remove_twins(H: Hypergraph) -> tuple[Hypergraph, tuple[int, ...], tuple[int, ...]]:
    """Drop duplicate edges and duplicate incidence columns, lowest index kept.

    Returns (reduced, vertex_map, edge_map) where the maps send the new
    1-based indexes to the original ones.  Class counts are preserved for
    any C within the surviving vertices.
    """
    kept_edges: list[int] = []
    edge_map: list[int] = []
    seen = set()
    for idx, e in enumerate(H.edges, 1):
        if e not in seen:
            seen.add(e)
            kept_edges.append(e)
            edge_map.append(idx)

    # Columns over the deduped edges induce the same twin-vertex partition
    # as over the originals (duplicates replicate whole columns bitwise).
    cols = [0] * H.n
    for j, e in enumerate(kept_edges):
        while e:
            low = e & -e
            cols[low.bit_length() - 1] |= 1 << j
            e ^= low
    vertex_map: list[int] = []
    col_seen = set()
    for v in range(1, H.n + 1):
        c = cols[v - 1]
        if c not in col_seen:
            col_seen.add(c)
            vertex_map.append(v)

    new_edges = []
    for e in kept_edges:
        mask = 0
        for new_idx, old_v in enumerate(vertex_map):
            if e >> (old_v - 1) & 1:
                mask |= 1 << new_idx
        new_edges.append(mask)
    reduced = Hypergraph(len(vertex_map), tuple(new_edges), H.name)
    return reduced, tuple(vertex_map), tuple(edge_map)


def find_twin_edges(H: Hypergraph) -> tuple[int, int] | None:
    """A pair of 1-based positions of equal edges, or None if edge-twin-free."""
    seen: dict[int, int] = {}
    for idx, e in enumerate(H.edges, 1):
        if e in seen:
            return seen[e], idx
        seen[e] = idx
    return None


def is_twin_free(H: Hypergraph) -> bool:
    if find_twin_edges(H) is not None:
        return False
    cols = H.incidence_columns()
    return len(set(cols)) == H.n


def dual(H: Hypergraph) -> Hypergraph:
    """Transpose the incidence matrix: |E| vertices, |X| edges."""
    cols = H.incidence_columns()
    return Hypergraph(H.m, tuple(cols), H.name)


def neighborhood_hypergraph(G: Graph) -> Hypergraph:
    """Edge i = closed neighborhood N[v_i]; edge order follows vertex order."""
    edges = []
    for v in range(1, G.n + 1):
        mask = 1 << (v - 1)
        for u in G.adj[v - 1]:
            mask |= 1 << (u - 1)
        edges.append(mask)
    return Hypergraph(G.n, tuple(edges))


def max_degree(H: Hypergraph) -> int:
    """Maximum number of edges any single vertex belongs to (0 when empty)."""
    degs = H.degrees()
    return max(degs, default=0)
