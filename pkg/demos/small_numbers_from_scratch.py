"""
Small Ramsey numbers from scratch
=================================

The closed forms in :mod:`cherry_ramsey.formulas` rest on structural proofs.
For small targets the exhaustive search engine can recompute the same numbers
with no theory at all, so this script does exactly that and compares.
"""

from cherry_ramsey import (
    RamseyInstance,
    SearchStatus,
    cockayne_lorimer,
    compute_ramsey,
    exists_good_coloring,
    gr_cherries,
    irving,
    parse_target_list,
    serialize,
)

# a cherry in every color: the search walks N upward until no coloring of the
# complete graph avoids all targets, and the closed form should agree.
for k in (2, 3):
    inst = RamseyInstance(parse_target_list(",".join(["P3"] * k)))
    found = compute_ramsey(inst)
    print(f"{inst.describe()} = {found}, closed form {irving(k).value}")

# two disjoint edges against two disjoint edges
inst = RamseyInstance(parse_target_list("2P2,2P2"))
print(f"{inst.describe()} = {compute_ramsey(inst)}, "
      f"closed form {cockayne_lorimer((2, 2)).value}")

# doubled cherries in both colors.  With two colors no triangle can be
# rainbow, so the rainbow-free closed form is the plain Ramsey number.
inst = RamseyInstance(parse_target_list("2P3,2P3"))
print(f"{inst.describe()} = {compute_ramsey(inst)}, "
      f"closed form {gr_cherries(2, (2, 2))}")

# the same machinery restricted to rainbow-triangle-free colorings
inst = RamseyInstance(parse_target_list("2P3,P3,P3"), gallai_only=True)
print(f"{inst.describe()} = {compute_ramsey(inst)}, "
      f"closed form {gr_cherries(3, (2, 1, 1))}")

# one step below the threshold a good coloring exists; ask the search to
# produce one and look at it.
inst = RamseyInstance(parse_target_list("2P3,2P3"))
out = exists_good_coloring(6, inst)
print(f"\nsix vertices, {inst.describe()}: {out.status.name} "
      f"after {out.nodes_explored} nodes")
assert out.status is SearchStatus.WITNESS_FOUND
print("witness coloring:")
print(serialize(out.witness))
