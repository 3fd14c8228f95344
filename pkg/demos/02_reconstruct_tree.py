"""Recover the tree behind an R-cross-section from its images alone."""

from ordcross import CrossSection, Transformation, reconstruct_tree, render_diagram, w_chain
from ordcross.transformations import fixed_points

maps = [(1, 2, 3, 3), (1, 3, 3, 4), (1, 1, 3, 4), (1, 3, 3, 3),
        (1, 1, 3, 3), (1, 1, 1, 3), (1, 1, 1, 1), (1, 2, 3, 4)]
S = CrossSection(4, [Transformation(m) for m in maps])
print("fixed points:", sorted(fixed_points(S)))

chain = w_chain(S)
for i, layer in enumerate(chain.levels):
    print(f"level {i}: {sorted(layer)}")

t = reconstruct_tree(S)
print()
print(render_diagram(t))
