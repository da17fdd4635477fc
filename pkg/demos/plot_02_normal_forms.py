"""
Deciding existence and computing canonical forms
================================================

Between two objects there is at most one structural morphism.  Synthesis
reads it off the endpoints; normalization computes it from a term by
pushing one atomic factor at a time.  The two always agree.
"""

import json

from ldc import Mode, cf_to_json, hom_exists, normalize, parse_morphism, parse_object, reify, render, synthesize
from ldc.axioms import PENTAGONS, pentagon

src, tgt = parse_object("(A@B)*C"), parse_object("A@(B*C)")
cf = synthesize(src, tgt)
print("canonical form:", json.dumps(cf_to_json(cf)))
print("as a term:", render(reify(cf)))
print("normalizing dr gives the same form:", normalize(parse_morphism("dr{A,B,C}")) == cf)

# no structural morphism turns a tensor into a par
print("(A*B) -> (A@B) exists:", hom_exists(parse_object("A*B"), parse_object("A@B")))

# lax modes drop the inverse associators
x, y = parse_object("(A*B)*C"), parse_object("A*(B*C)")
for mode in Mode:
    print(f"{mode.value:>13}: (A*B)*C -> A*(B*C) exists = {hom_exists(x, y, mode)}")

# both sides of every pentagon normalize to the same form
for name in PENTAGONS:
    f, g = pentagon(name)
    print(name, normalize(f) == normalize(g))
