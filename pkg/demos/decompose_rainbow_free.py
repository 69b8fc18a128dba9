"""
Taking a rainbow-triangle-free coloring apart
=============================================

Colorings without a rainbow triangle decompose into at least two parts with
at most two colors between parts and exactly one color per part pair.  We
generate one at random, recover its largest such partition, and pull out the
monochromatic cherries the decomposition guarantees.
"""

from cherry_ramsey import (
    find_rainbow_triangle,
    from_edge_colors,
    gallai_extract,
    gallai_partition,
    mono_star_or_proper_cycle,
    parse_target_list,
    partition_is_valid,
    random_gallai,
    witness_is_valid,
)

# a seeded random coloring built by recursive substitution, so it is
# rainbow-triangle-free by construction
c = random_gallai(14, 3, seed=42)
print(f"random coloring: {c.n_vertices} vertices, {c.n_colors} colors, "
      f"rainbow triangle: {find_rainbow_triangle(c)}")

# the partition with the most parts, found by trying every color pair
gp = gallai_partition(c)
print(f"maximum partition has {len(gp.parts)} parts:")
for i, part in enumerate(gp.parts):
    print(f"  part {i}: vertices {list(part)}")
print(f"  colors between parts: {sorted(set(col for _, _, col in gp.reduced))}")
print(f"  independent recheck: {partition_is_valid(c, gp)}")

# at 2*max + sum - k + 1 vertices some color must hold its cherry union;
# for targets (2P3, P3, P3) that bound is 4 + 4 - 3 + 1 = 6 <= 14
targets = parse_target_list("2P3,P3,P3")
color, copies = gallai_extract(c, targets)
print(f"guaranteed find: color {color} holds {targets[color - 1].describe()}, "
      f"copies {copies.copies}, "
      f"valid: {witness_is_valid(c, color, targets[color - 1], copies)}")

# two-coloring dichotomy: every 2-coloring of a complete graph has either a
# monochromatic spanning star or a properly colored cycle on an even number
# of vertices.  On four vertices, recoloring a perfect matching kills every
# spanning star, so the cycle branch must fire.
c2 = from_edge_colors(4, 2, lambda u, v: 2 if (u, v) in ((0, 1), (2, 3)) else 1)
out = mono_star_or_proper_cycle(c2)
print(f"dichotomy outcome: {out.kind.value}, cycle {out.cycle}")
