#!/usr/bin/env python3
"""Walkthrough: layer decomposition on grids, both scheme variants.

Usage: python demos/04_planar_schemes.py
"""

from pvcdim import (
    baker_max_partial_vc,
    baker_min_distinguishing,
    compute_levels,
    lambda_for_max,
    lambda_for_min,
    min_distinguishing_transversal,
    neighborhood_hypergraph,
    solve_max_partial_vc,
)
from pvcdim.generate import grid_graph

G, levels = grid_graph(5, 5)
boundary = [v for v in range(1, 26) if levels[v - 1] == 1]
L = compute_levels(G, boundary)
print("5x5 grid peels into", L.t, "concentric rings:")
for ring in range(1, L.t + 1):
    members = [v for v in range(1, 26) if L.level[v - 1] == ring]
    print(f"  ring {ring}: {members}")

H = neighborhood_hypergraph(G)
print()
print("budgeted class maximization, scheme vs exact:")
print(f"  {'eps':>5} {'lambda':>6} {'k':>3} {'scheme':>7} {'opt':>4}")
for eps in (2.0, 1.0, 0.5):
    lam = lambda_for_max(eps)
    for k in (3, 4):
        res = baker_max_partial_vc(L, k, eps)
        opt = solve_max_partial_vc(H, k).value
        print(f"  {eps:>5} {lam:>6} {k:>3} {res.value:>7} {opt:>4}")
print("small grids sit inside one band, so most cells are solved exactly")

print()
opt_dt = min_distinguishing_transversal(H).value
print(f"minimum distinguishing transversal of the 5x5 grid: {opt_dt}")
for eps in (1.0, 2.0):
    res = baker_min_distinguishing(L, eps)
    print(f"  eps={eps}: slab-union size {res.value} "
          f"(lambda={lambda_for_min(eps)}, bound {(1 + eps) * opt_dt:.0f})")
