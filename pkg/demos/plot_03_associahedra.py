"""
Directed associahedra and multiplihedra
=======================================

A frontier such as ``A@B*C*D@E`` fixes the generators and connectives.  Its
bracketings are the vertices of a graph whose edges are the whiskered
structural generators.  In functor mode the vertices also record which
pieces sit inside ``F``.
"""

from ldc import build_graph, export_graph, frontier_vertices

# Catalan many bracketings
for fr in ("A*B", "A*B*C", "A@B*C*D", "A@B*C*D@E"):
    print(fr, len(frontier_vertices(fr)))

# the pentagon with two distributors, as Graphviz text
print(export_graph(build_graph("A@B*C@D"), "dot"))

# the multiplihedron for F(A) * F(B) * F(C) @ F(D)
g = build_graph("A*B*C@D", functor=True)
print(len(g), "vertices,", len(g.edges), "edges")
