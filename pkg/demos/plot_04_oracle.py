"""
Checking the engines against graph search
=========================================

For every pair of vertices of a bracketing graph, breadth-first search
decides reachability and all walks up to a length bound are normalized.
Every pair must give a single canonical form, equal to the synthesized one.
"""

from ldc import Mode, enumerate_paths, parse_object, verify_frontier, verify_suite
from ldc.oracle import path_term
from ldc.normalizer import normalize
from ldc.polytope import build_graph

report = verify_frontier("A@B*C*D@E")
print(report.to_json())

# the two directed sides of the pentagon
g = build_graph("A@B*C@D")
paths = enumerate_paths(g, parse_object("(A@B)*(C@D)"), parse_object("A@((B*C)@D)"), 3)
for p in paths:
    print(" ; ".join(e.label for e in p))
print("one normal form:", len({normalize(path_term(p)) for p in paths}) == 1)

# every frontier pattern with up to four letters, in every mode
reports = verify_suite(4, modes=tuple(Mode))
print(len(reports), "frontiers,", sum(len(r.failures) for r in reports), "failures")
