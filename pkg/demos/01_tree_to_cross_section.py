"""Build the R-cross-section of a decreasing tree and print it as a table."""

from ordcross import OrderedTree, is_decreasing, phi_semigroup, render_diagram
from ordcross.rsections import phi_table_text
from ordcross.transformations import is_cross_section

# root 3, son 1, daughter 4; 1 has daughter 2, 4 has daughter 5
t = OrderedTree.from_children(5, 3, {3: 1}, {1: 2, 3: 4, 4: 5})
print(render_diagram(t))
print("decreasing:", is_decreasing(t))

sg = phi_semigroup(t)
print(f"{len(sg)} maps, one per convex partition of 1..5\n")
print(phi_table_text(sg))
print("closed and one map per kernel:", is_cross_section(sg.cross_section()))
