#!/usr/bin/env python3
"""Walkthrough: the four exact solvers and their agreement.

Usage: python demos/02_exact_solvers.py
"""

import random

from pvcdim import (
    min_distinguishing_transversal,
    solve_max_partial_vc,
    solve_partial_vc_decision,
    vc_dimension,
)
from pvcdim.generate import random_twin_free_hypergraph

H = random_twin_free_hypergraph(n=10, m=16, density=0.45, seed=2024)
print(f"instance: n={H.n}, m={H.m}, twin-free")
print()

print("budget sweep (exact maximum classes per k):")
for k in range(H.n + 1):
    res = solve_max_partial_vc(H, k)
    print(f"  k={k:2d}: value={res.value:3d}  witness={res.witness_vertices}")

print()
dim = vc_dimension(H)
print(f"VC dimension: {dim.value}, shattered set {dim.witness_vertices}")
print("consistency: largest k with max value 2^k =",
      max(k for k in range(H.n + 1)
          if solve_max_partial_vc(H, k).value == 1 << k))

dt = min_distinguishing_transversal(H)
print(f"min distinguishing transversal: {dt.value} vertices "
      f"{dt.witness_vertices}")
print("consistency: smallest k whose max value reaches m =",
      min(k for k in range(H.n + 1)
          if solve_max_partial_vc(H, k).value == H.m))

print()
print("decision probes (YES iff max value >= target):")
rng = random.Random(7)
for _ in range(5):
    k = rng.randint(1, 5)
    ell = rng.randint(1, 12)
    res = solve_partial_vc_decision(H, k, ell)
    tag = "YES" if res.decided else ("NO  (" + (res.reason or "searched") + ")")
    print(f"  k={k}, ell={ell:2d}: {tag:18s} enumerated={res.enumerated}")
