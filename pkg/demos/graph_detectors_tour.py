"""
A tour of the subgraph detectors
================================

Everything the search engine knows about a single color class comes from a
handful of exact detectors: cherry packings, star packings, matchings, fixed
cycle lengths and longest paths.  This script points them all at the Petersen
graph, whose structure makes the answers easy to sanity-check by hand.
"""

from cherry_ramsey import (
    graph_from_edges,
    has_cycle_length,
    is_matching,
    longest_path,
    max_matching,
    max_p3_packing,
    max_star_packing,
    one_factorization,
)

outer = [(i, (i + 1) % 5) for i in range(5)]
spokes = [(i, i + 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
g = graph_from_edges(10, outer + spokes + inner)

# ten vertices admit at most three disjoint cherries, and the Petersen graph
# actually reaches that bound.
pack = max_p3_packing(g)
print(f"cherry packing: {pack.size} copies, witness {pack.witness}")

# with a cap the packer stops as soon as the cap many copies are certain,
# which is all the search engine ever needs.
print(f"capped at 1: {max_p3_packing(g, cap=1)}")

# two disjoint claws would need six distinct leaves, but any two nonadjacent
# vertices share a neighbor and adjacent centers steal each other's leaves.
claws = max_star_packing(g, 3)
print(f"claw packing: {claws.size} copies, witness {claws.witness}")

# the Petersen graph has a perfect matching and a Hamiltonian path, yet no
# Hamiltonian cycle and nothing shorter than a pentagon.
print(f"maximum matching: {max_matching(g).size} edges")
print(f"longest path visits {len(longest_path(g))} of 10 vertices")
for length in (3, 4, 5, 10):
    w = has_cycle_length(g, length)
    print(f"cycle of length {length}: {w.copies[0] if w else 'none'}")

# round-robin rounds of a clique on six vertices: five rounds, each one a
# perfect matching, fifteen edges in total.
rounds = one_factorization(6)
print(f"\nclique on 6 vertices splits into {len(rounds)} rounds:")
for r in rounds:
    assert is_matching(graph_from_edges(6, r))
    print(f"  {r}")
print(f"edges covered: {sum(len(r) for r in rounds)}")
