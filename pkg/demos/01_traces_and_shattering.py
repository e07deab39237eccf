#!/usr/bin/env python3
"""Walkthrough: hypergraphs, traces, equivalence classes, shattering.

Usage: python demos/01_traces_and_shattering.py
"""

from pvcdim import (
    Graph,
    Hypergraph,
    build_hypergraph,
    class_count,
    dual,
    is_shattered,
    neighborhood_hypergraph,
    remove_twins,
    trace_profile,
    vertices_of,
)

print("=" * 64)
print("  Traces and equivalence classes on the path a-b-c")
print("=" * 64)

P3 = Graph.from_edges(3, [(1, 2), (2, 3)])
H = neighborhood_hypergraph(P3)
print("closed neighborhoods:", [vertices_of(e) for e in H.edges])

for C in ([1], [2], [1, 3]):
    prof = trace_profile(H, C)
    printable = [vertices_of(t) for t in prof.traces]
    print(f"C={C}: {prof.class_count} classes, traces {printable}")

print()
print("A single endpoint already separates N[a] from N[c]: two classes.")
print("Both endpoints give three classes, one per vertex: a distinguishing")
print("transversal of the path.")

print()
print("=" * 64)
print("  Shattering")
print("=" * 64)

power = Hypergraph(3, tuple(range(8)))
print("power set of {1,2,3} shatters {1,2,3}:", is_shattered(power, {1, 2, 3}))

small = Hypergraph(4, tuple(m for m in range(16) if m.bit_count() <= 1))
print("all subsets of size <= 1 of {1..4}, C={1,2} shattered:",
      is_shattered(small, {1, 2}))

print()
print("=" * 64)
print("  Twins and duality")
print("=" * 64)

H2 = build_hypergraph(3, [{1, 2}, {1, 2}, {3}])
reduced, vmap, emap = remove_twins(H2)
print(f"twin removal: {H2.m} edges / {H2.n} vertices ->",
      f"{reduced.m} edges / {reduced.n} vertices",
      f"(surviving vertices {vmap}, edges {emap})")

D = dual(H2)
print("dual instance:", D.n, "vertices,", D.m, "edges;",
      "class counts transfer to the transposed incidence matrix")
print("dual(dual(H)) == H:", dual(D).edges == H2.edges)
