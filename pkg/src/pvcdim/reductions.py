"""Hardness constructions as certified hard-instance generators.

Each generator emits a target instance together with a certificate
recording the transported parameters and the numeric identity the pair
must satisfy; `verify_reduction` re-derives both sides by brute force and
checks the identity, refusing (CapacityError) rather than passing
silently when an instance is too large to enumerate.

Vertex numbering inside every construction is fixed and documented in the
generator docstrings, so emitted instances are byte-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .core import (
    CapacityError,
    Graph,
    Hypergraph,
    InputError,
    build_hypergraph,
    neighborhood_hypergraph,
)
from .exact import (
    min_distinguishing_transversal,
    solve_max_partial_vc,
    vc_dimension,
)

CLIQUE_VARIANTS = ("bipartite", "split", "co-bipartite")


@dataclass(frozen=True)
class ReductionCertificate:
    """Paired source/target instances with the identity they must satisfy."""

    kind: str
    variant: str | None
    source_graph: Graph
    source_param: int
    target_graph: Graph | None
    target_hypergraph: Hypergraph | None
    k_prime: int
    forward_map: str
    identity: str


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    source_value: int
    target_value: int
    detail: str


def _check_capacity(n: int, k: int, ceiling: int, what: str) -> None:
    total = math.comb(n, k)
    if total > ceiling:
        raise CapacityError(
            f"{what}: C({n},{k}) = {total} candidates exceed the ceiling "
            f"of {ceiling}")


def has_clique(G: Graph, k: int, *, ceiling: int = 10**8) -> bool:
    """Brute-force k-clique test."""
    if k <= 0:
        return True
    if k > G.n:
        return False
    _check_capacity(G.n, k, ceiling, "clique search")
    adj = [set(a) for a in G.adj]
    for combo in combinations(range(1, G.n + 1), k):
        if all(v in adj[u - 1] for u, v in combinations(combo, 2)):
            return True
    return False


def has_independent_set(G: Graph, s: int, *, ceiling: int = 10**8) -> bool:
    """Brute-force independent-set test."""
    if s <= 0:
        return True
    if s > G.n:
        return False
    _check_capacity(G.n, s, ceiling, "independent-set search")
    adj = [set(a) for a in G.adj]
    for combo in combinations(range(1, G.n + 1), s):
        if all(v not in adj[u - 1] for u, v in combinations(combo, 2)):
            return True
    return False


def max_partial_vertex_cover(G: Graph, k: int, *,
                             ceiling: int = 10**8) -> tuple[int, int]:
    """Maximum number of edges covered by k vertices, with first witness.

    Enumeration oracle for the source side of the gadget reduction.
    """
    if not 0 <= k <= G.n:
        raise InputError(f"budget {k} outside 0..{G.n}")
    _check_capacity(G.n, k, ceiling, "partial vertex cover")
    edges = G.edge_list()
    best_val, best_mask = -1, 0
    for combo in combinations(range(1, G.n + 1), k):
        chosen = set(combo)
        val = sum(1 for u, v in edges if u in chosen or v in chosen)
        if val > best_val:
            best_val = val
            best_mask = 0
            for v in combo:
                best_mask |= 1 << (v - 1)
    return best_val, best_mask


def clique_to_vcdim(G: Graph, k: int, variant: str = "bipartite") -> ReductionCertificate:
    """Clique instance -> graph whose neighborhood hypergraph has VC
    dimension >= k iff the clique exists.

    Target layout (1-based ids): pair vertices (u, i) for u in V(G),
    i in 1..k at id (u-1)*k + i; one selector per (edge t, i, j) in
    1..k x 1..k at id nk + (t-1)k^2 + (i-1)k + j, adjacent to (u, i) and
    (v, j) for the t-th edge uv; one selector per index set L of {1..k}
    with |L| != 2 (ordered by L as an ascending bitmask) adjacent to every
    (u, i) with i in L.  The split variant adds all edges inside the pair
    side; the co-bipartite variant also completes the selector side.
    """
    if k <= 3:
        raise InputError(f"the construction needs k > 3, got {k}")
    if G.n < k:
        raise InputError(f"source graph has {G.n} < k = {k} vertices")
    if variant not in CLIQUE_VARIANTS:
        raise InputError(f"unknown variant {variant!r}; pick one of "
                         f"{', '.join(CLIQUE_VARIANTS)}")
    n, edges = G.n, G.edge_list()
    nk = n * k

    def xid(u, i):
        return (u - 1) * k + i

    target_edges: list[tuple[int, int]] = []
    next_id = nk
    pair_side = list(range(1, nk + 1))
    selector_side = []
    for t, (u, v) in enumerate(edges):
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                next_id += 1
                selector_side.append(next_id)
                target_edges.append((xid(u, i), next_id))
                target_edges.append((xid(v, j), next_id))
    index_sets = [L for L in range(1 << k) if bin(L).count("1") != 2]
    for L in index_sets:
        next_id += 1
        selector_side.append(next_id)
        for u in range(1, n + 1):
            for i in range(1, k + 1):
                if L >> (i - 1) & 1:
                    target_edges.append((xid(u, i), next_id))
    if variant in ("split", "co-bipartite"):
        target_edges.extend(combinations(pair_side, 2))
    if variant == "co-bipartite":
        target_edges.extend(combinations(selector_side, 2))
    target = Graph.from_edges(next_id, target_edges)
    return ReductionCertificate(
        kind="clique-to-vcdim",
        variant=variant,
        source_graph=G,
        source_param=k,
        target_graph=target,
        target_hypergraph=None,
        k_prime=k,
        forward_map="clique {v_1..v_k} -> shattered set {(v_i, i)}",
        identity="clique(k) exists <=> vc-dimension(target) >= k",
    )


def is_to_disting_transversal(G: Graph, s: int) -> ReductionCertificate:
    """Independent-set instance -> hypergraph with a distinguishing set of
    size |X| - s iff the independent set exists.

    Hypergraph layout: vertex x_v = v for v in V(G); x_e = n + t for the
    t-th edge (edges sorted).  For each edge e = uv, in edge order: the
    hyperedge {x_u, x_v, x_e} then {x_e}; one empty hyperedge last, so
    m = 2|E| + 1.
    """
    if s < 0:
        raise InputError(f"negative independent-set size {s}")
    n, edges = G.n, G.edge_list()
    edge_sets: list[list[int]] = []
    for t, (u, v) in enumerate(edges, 1):
        edge_sets.append([u, v, n + t])
        edge_sets.append([n + t])
    edge_sets.append([])
    H = build_hypergraph(n + len(edges), edge_sets)
    return ReductionCertificate(
        kind="is-to-dt",
        variant=None,
        source_graph=G,
        source_param=s,
        target_graph=None,
        target_hypergraph=H,
        k_prime=H.n - s,
        forward_map="independent set I -> distinguishing set X \\ {x_v : v in I}",
        identity="independent-set(s) exists <=> min-distinguishing-transversal"
                 " <= |X| - s",
    )


# Adjacency patterns of the eight auxiliary gadget vertices, in fixed order.
_AUX_SETS = ((4,), (2, 3), (1, 3), (2, 4), (1, 4), (1, 3, 4), (1, 2, 4),
             (1, 2, 3, 4))


def mpvc_to_mpvcd(G: Graph, k: int) -> ReductionCertificate:
    """Partial vertex cover on a cubic graph -> budgeted class maximization
    on a degree-7 graph, an approximation-preserving reduction.

    Target layout: vertex v of G owns the block (v-1)*12 + 1 .. v*12 with
    anchors f_v^i at offsets 1..4 (path edges f1-f2, f2-f3, f3-f4) and
    eight auxiliaries at offsets 5..12 adjacent to the anchor subsets
    {4}, {2,3}, {1,3}, {2,4}, {1,4}, {1,3,4}, {1,2,4}, {1,2,3,4} in that
    order.  The t-th edge uv of G becomes a middle vertex 12n + t joined to
    f_u^i and f_v^j, where i is the rank of the edge among u's incident
    edges in sorted-neighbor order.  The budget maps to k' = 4k and optima
    satisfy opt(target, 4k) = opt(source, k) + 12k + 1.
    """
    if not 0 <= k <= G.n:
        raise InputError(f"budget {k} outside 0..{G.n}")
    for v in range(1, G.n + 1):
        if G.degree(v) != 3:
            raise InputError(f"vertex {v} has degree {G.degree(v)}; "
                             "the construction needs a cubic graph")
    n, edges = G.n, G.edge_list()

    def fid(v, i):
        return (v - 1) * 12 + i

    target_edges: list[tuple[int, int]] = []
    for v in range(1, n + 1):
        target_edges += [(fid(v, 1), fid(v, 2)), (fid(v, 2), fid(v, 3)),
                         (fid(v, 3), fid(v, 4))]
        for off, anchors in enumerate(_AUX_SETS, 5):
            for i in anchors:
                target_edges.append((fid(v, i), fid(v, off)))
    rank: dict[tuple[int, int], int] = {}
    for v in range(1, n + 1):
        for r, u in enumerate(G.adj[v - 1], 1):
            rank[(v, u)] = r
    for t, (u, v) in enumerate(edges, 1):
        mid = 12 * n + t
        target_edges.append((fid(u, rank[(u, v)]), mid))
        target_edges.append((fid(v, rank[(v, u)]), mid))
    target = Graph.from_edges(12 * n + len(edges), target_edges)
    return ReductionCertificate(
        kind="mpvc-to-mpvcd",
        variant=None,
        source_graph=G,
        source_param=k,
        target_graph=target,
        target_hypergraph=None,
        k_prime=4 * k,
        forward_map="cover S -> anchor sets {f_v^1..f_v^4 : v in S}",
        identity="opt(target, 4k) = opt(source, k) + 12k + 1; "
                 "approximation-preserving with alpha=26, beta=1",
    )


def verify_reduction(cert: ReductionCertificate, *,
                     ceiling: int = 10**8) -> VerificationReport:
    """Brute-force both sides of a certificate and check its identity.

    CapacityError when either side is beyond the enumeration ceiling;
    never a silent pass.
    """
    if cert.kind == "clique-to-vcdim":
        yes = has_clique(cert.source_graph, cert.source_param, ceiling=ceiling)
        H = neighborhood_hypergraph(cert.target_graph)
        dim = vc_dimension(H, ceiling=ceiling).value
        ok = yes == (dim >= cert.k_prime)
        return VerificationReport(
            ok, int(yes), dim,
            f"clique({cert.source_param})={yes}, target vc-dimension={dim}, "
            f"threshold {cert.k_prime}")
    if cert.kind == "is-to-dt":
        s = cert.source_param
        yes = has_independent_set(cert.source_graph, s, ceiling=ceiling)
        H = cert.target_hypergraph
        dt = min_distinguishing_transversal(H, ceiling=ceiling).value
        ok = yes == (dt <= H.n - s)
        return VerificationReport(
            ok, int(yes), dt,
            f"independent-set({s})={yes}, min transversal={dt}, "
            f"threshold {H.n - s}")
    if cert.kind == "mpvc-to-mpvcd":
        k = cert.source_param
        src, _ = max_partial_vertex_cover(cert.source_graph, k, ceiling=ceiling)
        H = neighborhood_hypergraph(cert.target_graph)
        tgt = solve_max_partial_vc(H, cert.k_prime, ceiling=ceiling).value
        ok = tgt == src + 12 * k + 1
        return VerificationReport(
            ok, src, tgt,
            f"opt(source,{k})={src}, opt(target,{cert.k_prime})={tgt}, "
            f"expected {src + 12 * k + 1}")
    raise InputError(f"unknown reduction kind {cert.kind!r}")
