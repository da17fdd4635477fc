"""
Objects, terms and their types
==============================

Objects are fully bracketed words in generators joined by ``*`` (tensor)
and ``@`` (par).  Terms are built from identities, the six structural
generators, composition and the two tensors.
"""

from ldc import parse_morphism, parse_object, rank, render, typecheck

# parse an object and print it back
x = parse_object("(A@B)*C")
print(render(x), "has rank", rank(x))

# ranks can weight generators differently
print("weighted rank:", rank(x, {"A": 2, "C": 5}))

# the right distributor and its endpoints
dr = parse_morphism("dr{A,B,C}")
source, target = typecheck(dr)
print(render(dr), ":", render(source), "->", render(target))

# a composite that does not typecheck reports where it fails
from ldc import TypeMismatch

try:
    typecheck(parse_morphism("(id{A} * (dl{A,B,C} . dr{A,B,C}))"))
except TypeMismatch as e:
    print("type error:", e.message, "at path", e.path)
