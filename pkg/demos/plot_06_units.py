"""
Units break coherence
=====================

Bimodules over ``S = C[x,y]/(x^2, y^2, xy)`` form a linearly distributive
category with units.  The counit of ``L = S* (x) -`` against ``R = S (+) -``
gives two maps ``LRLR(S) -> LR(S)`` that differ on an explicit element,
computed here in exact arithmetic.
"""

import json

from ldc import run_counterexample

report = run_counterexample()
print(json.dumps(report.to_json(), indent=2))
