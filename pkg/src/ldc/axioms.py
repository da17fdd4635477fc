"""The pentagon and hexagon axioms as pairs of parallel terms.

Each axiom is stated on generators ``A``, ``B``, ``C`` (and ``D``) and can be
instantiated at arbitrary objects.
"""

from __future__ import annotations

from .syntax import parse_morphism, substitute

PENTAGONS = {
    "P1": (
        "(al{(A*B),C,D} . al{A,B,(C*D)})",
        "((al{A,B,C} * id{D}) . (al{A,(B*C),D} . (id{A} * al{B,C,D})))",
    ),
    "P2": (
        "(dl{(A*B),C,D} . al{A,B,(C@D)})",
        "((al{A,B,C} @ id{D}) . (dl{A,(B*C),D} . (id{A} * dl{B,C,D})))",
    ),
    "P3": (
        "(dl{A,B,(C*D)} . (id{A} * dr{B,C,D}))",
        "(dr{(A*B),C,D} . ((dl{A,B,C} * id{D}) . al{A,(B@C),D}))",
    ),
    "P4": (
        "(ap{(A*B),C,D} . dl{A,B,(C@D)})",
        "((dl{A,B,C} @ id{D}) . (dl{A,(B@C),D} . (id{A} * ap{B,C,D})))",
    ),
    "P5": (
        "((id{A} @ al{B,C,D}) . dr{A,B,(C*D)})",
        "(dr{A,(B*C),D} . ((dr{A,B,C} * id{D}) . al{(A@B),C,D}))",
    ),
    "P6": (
        "((dr{A,B,C} @ id{D}) . dl{(A@B),C,D})",
        "(ap{A,(B*C),D} . ((id{A} @ dl{B,C,D}) . dr{A,B,(C@D)}))",
    ),
    "P7": (
        "(dr{(A@B),C,D} . (ap{A,B,C} * id{D}))",
        "(ap{A,B,(C*D)} . ((id{A} @ dr{B,C,D}) . dr{A,(B@C),D}))",
    ),
    "P8": (
        "(ap{(A@B),C,D} . ap{A,B,(C@D)})",
        "((ap{A,B,C} @ id{D}) . (ap{A,(B@C),D} . (id{A} @ ap{B,C,D})))",
    ),
}

HEXAGONS = {
    "H1": (
        "(mu{(A*B),C} . ((mu{A,B} * id{F(C)}) . al{F(A),F(B),F(C)}))",
        "(F[al{A,B,C}] . (mu{A,(B*C)} . (id{F(A)} * mu{B,C})))",
    ),
    "H2": (
        "((mu{A,B} @ id{F(C)}) . (dl{F(A),F(B),F(C)} . (id{F(A)} * cm{B,C})))",
        "(cm{(A*B),C} . (F[dl{A,B,C}] . mu{A,(B@C)}))",
    ),
    "H3": (
        "((id{F(A)} @ mu{B,C}) . (dr{F(A),F(B),F(C)} . (cm{A,B} * id{F(C)})))",
        "(cm{A,(B*C)} . (F[dr{A,B,C}] . mu{(A@B),C}))",
    ),
    "H4": (
        "(ap{F(A),F(B),F(C)} . ((id{F(A)} @ cm{B,C}) . cm{A,(B@C)}))",
        "((cm{A,B} @ id{F(C)}) . (cm{(A@B),C} . F[ap{A,B,C}]))",
    ),
}

_NAMES = "ABCD"


def pentagon(name, *objects):
    """Both sides of pentagon ``name`` at four plain objects."""
    lhs, rhs = PENTAGONS[name]
    return _instance(lhs, rhs, objects, "plain")


def hexagon(name, *objects):
    """Both sides of hexagon ``name`` at three plain objects."""
    lhs, rhs = HEXAGONS[name]
    return _instance(lhs, rhs, objects, "functor")


def _instance(lhs, rhs, objects, mode):
    mapping = dict(zip(_NAMES, objects))
    f = parse_morphism(lhs, mode)
    g = parse_morphism(rhs, mode)
    if not mapping:
        return f, g
    return substitute(f, mapping), substitute(g, mapping)
