"""
Frobenius functors and spiders
==============================

In functor mode objects are built from images ``F(X)`` and terms may use
``mu{X,Y}``, ``cm{X,Y}`` and ``F[f]``.  Over the one-object category every
map from a tensor power of ``F(*)`` to a par power is the spider
``cm^(n) . mu^(m)``.
"""

from ldc import f_normalize, f_synthesize, parse_morphism, parse_object, render, spider_check, spider_emit
from ldc.axioms import HEXAGONS, hexagon

for name in HEXAGONS:
    f, g = hexagon(name)
    print(name, f_normalize(f) == f_normalize(g))

src = parse_object("(F(A)*F((B@C)))", functor=True)
tgt = parse_object("(F((A*B))@F(C))", functor=True)
print("morphism exists:", bool(f_synthesize(src, tgt)))

print(render(spider_emit(3, 2)))
t = parse_morphism("((id{F(*)} @ mu{*,*}) . (dr{F(*),F(*),F(*)} . (cm{*,*} * id{F(*)})))", "functor")
print("spider arities:", spider_check(t))
