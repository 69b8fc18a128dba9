"""
Building extremal colorings and checking them
=============================================

Each lower-bound witness is a complete graph edge-coloring in which color i
misses its target.  We build the three parameterized families plus the
sporadic ten-vertex coloring, then let the detectors confirm every claim.
"""

from cherry_ramsey import (
    contains_target,
    cycle_vs_stars_construction,
    gallai_nested_construction,
    is_gallai,
    k10_six_coloring,
    matching_base_construction,
    parse_target_list,
    serialize,
)

# a palette of three cherry targets: 3 disjoint cherries in color 1,
# 2 in color 2, a single one in color 3
counts = (3, 2, 1)
targets = parse_target_list("3P3,2P3,P3")

# the matching-base family: an even clique split into perfect matchings,
# one matching per color, then one block of count-1 fresh vertices per color
c = matching_base_construction(3, counts)
print(f"matching base on {c.n_vertices} vertices:")
for color, target in enumerate(targets, start=1):
    hit = contains_target(c, color, target)
    print(f"  color {color} contains {target.describe()}: {hit is not None}")

# the nested family keeps the coloring rainbow-triangle-free, which costs a
# bigger base clique for color 1 but survives the rainbow-free restriction
c = gallai_nested_construction(3, counts)
print(f"nested substitution on {c.n_vertices} vertices, "
      f"rainbow-triangle-free: {is_gallai(c)}")
for color, target in enumerate(targets, start=1):
    print(f"  color {color} contains {target.describe()}: "
          f"{contains_target(c, color, target) is not None}")

# a long cycle against star forests: color 1 fills a clique one vertex short
# of the cycle length, the star colors live on small vertex blocks
c = cycle_vs_stars_construction(6, 3, (2, 2))
print(f"cycle versus stars on {c.n_vertices} vertices:")
for color, target in enumerate(parse_target_list("C6,2K1s2,2K1s2"), start=1):
    print(f"  color {color} contains {target.describe()}: "
          f"{contains_target(c, color, target) is not None}")

# the sporadic six-coloring of K_10: two color-1 cliques of five, and the
# twenty-five bipartite edges split into five parallel matchings
c = k10_six_coloring()
print("sporadic ten-vertex coloring:")
for color, target in enumerate(parse_target_list("3P3,P3,P3,P3,P3,P3"), start=1):
    print(f"  color {color} contains {target.describe()}: "
          f"{contains_target(c, color, target) is not None}")

# every coloring serializes to a plain text format: a header line with the
# vertex and color counts, then one line per edge
print("first lines of the file form:")
print("\n".join(serialize(c).splitlines()[:4]))
