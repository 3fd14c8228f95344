"""L-cross-sections from respectful trees, and their duals in O_{n+1}."""

from ordcross import elementary_from_respectful, enumerate_respectful, l_cross_section, render_diagram
from ordcross.lsections import RespectfulTree, dual_identity_holds, render_dual_listing
from ordcross.trees import shape_to_text

for k in range(1, 6):
    print(k, "leaves:", [shape_to_text(s) for s in enumerate_respectful(k)])

g = RespectfulTree(enumerate_respectful(3)[0])
print("\nmarking:", {p or "root": pts for p, pts in g.marking().items()})
L = l_cross_section(g, validate=True)
print()
print(render_dual_listing(L))

for root in (1, 4):
    t = elementary_from_respectful(g, root)
    print(f"elementary tree with root {root}:")
    print(render_diagram(t))
    print("duals equal its cross-section minus the constant:", dual_identity_holds(g, root))

# marking along another linear order gives an L-cross-section of the full monoid
twisted = l_cross_section(RespectfulTree(g.shape, (3, 1, 2)), validate=True)
print("\ntwisted order:", sorted(a.images for a in twisted))
