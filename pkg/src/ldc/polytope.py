"""Graphs of bracketings of a fixed frontier.

A frontier is a word of generators separated by connectives, written like
``A@B*C*D@E``.  Its vertices are all the ways of bracketing it (in functor
mode additionally all ways of grouping contiguous pieces inside ``F``), and
its edges are the whiskered structural generators between them.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache

from .analysis import AtomicFactor
from .errors import ParseError
from .normalizer import Mode, as_mode
from .syntax import (
    OT,
    PAR,
    Alpha,
    AlphaBar,
    AlphaBarInv,
    AlphaInv,
    DeltaF,
    DeltaL,
    DeltaR,
    FLeaf,
    Id,
    Leaf,
    Lift,
    Mu,
    Node,
    Ot,
    Par,
    Prod,
    _arg,
    prod,
    render,
    tens,
    typecheck,
)

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|([*@]))")


class Frontier(Node):
    __slots__ = ()
    letters = _arg(0)
    gaps = _arg(1)

    def __str__(self):
        out = [self.letters[0].name]
        for g, x in zip(self.gaps, self.letters[1:]):
            out += ["*" if g == OT else "@", x.name]
        return "".join(out)


def parse_frontier(text):
    """Parse ``A@B*C`` into a :class:`Frontier`."""
    letters, gaps, pos = [], [], 0
    expect_letter = True
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", pos)
        name, op = m.groups()
        if expect_letter != bool(name):
            raise ParseError("expected a generator" if expect_letter else "expected '*' or '@'", m.start(0))
        if name:
            letters.append(Leaf(name))
        else:
            gaps.append(OT if op == "*" else PAR)
        expect_letter = not expect_letter
        pos = m.end()
    if expect_letter:
        raise ParseError("frontier must end with a generator", len(text))
    return Frontier(tuple(letters), tuple(gaps))


def frontier_of(x):
    """The frontier read off an object, ignoring brackets and images."""
    letters, gaps = [], []

    def walk(y):
        if isinstance(y, Prod):
            walk(y.left)
            gaps.append(y.conn)
            walk(y.right)
        elif isinstance(y, FLeaf):
            walk(y.inner)
        else:
            letters.append(y)

    walk(x)
    return Frontier(tuple(letters), tuple(gaps))


def frontier_vertices(fr, functor=False):
    """All bracketings of a frontier, ordered by the size of the left split."""
    if isinstance(fr, str):
        fr = parse_frontier(fr)
    n = len(fr.letters)
    return list((_dtrees if functor else _trees)(fr, 0, n))


@lru_cache(maxsize=None)
def _trees(fr, i, j):
    if j - i == 1:
        return (fr.letters[i],)
    out = []
    for k in range(i + 1, j):
        for left in _trees(fr, i, k):
            for right in _trees(fr, k, j):
                out.append(prod(fr.gaps[k - 1], left, right))
    return tuple(out)


@lru_cache(maxsize=None)
def _dtrees(fr, i, j):
    out = [FLeaf(x) for x in _trees(fr, i, j)]
    for k in range(i + 1, j):
        for left in _dtrees(fr, i, k):
            for right in _dtrees(fr, k, j):
                out.append(prod(fr.gaps[k - 1], left, right))
    return tuple(out)


def top_moves(x, mode=Mode.FULL):
    """Structural generators whose source is exactly ``x``."""
    mode = as_mode(mode)
    out = []
    if not isinstance(x, Prod):
        return out
    l, r = x.left, x.right
    if isinstance(x, Ot):
        if isinstance(r, Ot):
            out.append(Alpha(l, r.left, r.right))
        if isinstance(l, Ot) and mode is Mode.FULL:
            out.append(AlphaInv(l.left, l.right, r))
        if mode is not Mode.LAX_MONOIDAL:
            if isinstance(r, Par):
                out.append(DeltaL(l, r.left, r.right))
            if isinstance(l, Par):
                out.append(DeltaR(l.left, l.right, r))
    elif mode is not Mode.LAX_MONOIDAL:
        if isinstance(r, Par):
            out.append(AlphaBar(l, r.left, r.right))
        if isinstance(l, Par) and mode is Mode.FULL:
            out.append(AlphaBarInv(l.left, l.right, r))
    return out


def positions(x, pos=()):
    yield pos
    if isinstance(x, Prod):
        yield from positions(x.left, pos + ("L",))
        yield from positions(x.right, pos + ("R",))


def subtree(x, pos):
    for step in pos:
        x = x.left if step == "L" else x.right
    return x


def whisker_of(x, pos):
    """Whisker steps locating position ``pos`` inside ``x``, outermost first."""
    steps = []
    for step in pos:
        if step == "L":
            steps.append(("L", x.conn, x.right))
            x = x.left
        else:
            steps.append(("R", x.conn, x.left))
            x = x.right
    return tuple(steps)


def place(x, pos, core):
    if not pos:
        return core
    if pos[0] == "L":
        return tens(x.conn, place(x.left, pos[1:], core), Id(x.right))
    return tens(x.conn, Id(x.left), place(x.right, pos[1:], core))


def plain_moves(x, mode=Mode.FULL):
    """All whiskered structural moves out of a plain object, as terms."""
    for pos in positions(x):
        for core in top_moves(subtree(x, pos), mode):
            yield place(x, pos, core)


def _core_moves(s, mode, functor):
    out = list(top_moves(s, mode))
    if functor:
        if isinstance(s, Ot) and isinstance(s.left, FLeaf) and isinstance(s.right, FLeaf):
            out.append(Mu(s.left.inner, s.right.inner))
        if isinstance(s, FLeaf):
            if isinstance(s.inner, Par):
                out.append(DeltaF(s.inner.left, s.inner.right))
            out.extend(Lift(t) for t in plain_moves(s.inner, mode))
    return out


def _inverse_core(core):
    if isinstance(core, Lift):
        inner = _atomic_inverse(core.f)
        return None if inner is None else Lift(inner)
    return core.inverse() if hasattr(core, "inverse") else None


def _atomic_inverse(t):
    from .syntax import Coherence, Tens

    if isinstance(t, Coherence):
        return t.inverse()
    if isinstance(t, Tens):
        if isinstance(t.f, Id):
            inner = _atomic_inverse(t.g)
            return None if inner is None else tens(t.conn, t.f, inner)
        inner = _atomic_inverse(t.f)
        return None if inner is None else tens(t.conn, inner, t.g)
    return None


class Edge(Node):
    __slots__ = ()
    src = _arg(0)
    dst = _arg(1)
    factor = _arg(2)
    label = _arg(3)
    inv = _arg(4)


class Graph:
    """Vertices are objects; edges carry the atomic factor they stand for."""

    def __init__(self, frontier, mode, functor, vertices, edges):
        self.frontier = frontier
        self.mode = mode
        self.functor = functor
        self.vertices = vertices
        self.index = {v: i for i, v in enumerate(vertices)}
        self.edges = edges
        self.out = {v: [] for v in vertices}
        self.inc = {v: [] for v in vertices}
        for e in edges:
            self.out[e.src].append(e)
            self.inc[e.dst].append(e)

    def __len__(self):
        return len(self.vertices)

    def vertex(self, v):
        from .errors import UnknownVertex
        from .syntax import parse_object

        if isinstance(v, str):
            try:
                v = parse_object(v, self.functor)
            except Exception:
                raise UnknownVertex(f"{v!r} is not a vertex") from None
        if v not in self.index:
            raise UnknownVertex(f"{render(v)} is not a vertex")
        return v


def build_graph(fr, mode=Mode.FULL, functor=False):
    """The graph of bracketings of ``fr`` with whiskered generator edges."""
    if isinstance(fr, str):
        fr = parse_frontier(fr)
    mode = as_mode(mode)
    vertices = frontier_vertices(fr, functor)
    index = set(vertices)
    raw = []
    for v in vertices:
        for pos in positions(v):
            for core in _core_moves(subtree(v, pos), mode, functor):
                factor = AtomicFactor(core, whisker_of(v, pos))
                w = factor.target
                assert w in index, render(w)
                raw.append((v, w, factor, _inverse_core(core)))
    present = {(v, w, f.core) for v, w, f, _ in raw}
    edges = []
    for v, w, factor, inv_core in raw:
        inv = inv_core is not None and (w, v, inv_core) in present
        edges.append(Edge(v, w, factor, str(factor), inv))
    return Graph(fr, mode, functor, vertices, edges)


def export_graph(g, fmt="json"):
    """Serialize a graph as ``"json"`` or ``"dot"`` text."""
    names = sorted(render(v) for v in g.vertices)
    pos = {name: i for i, name in enumerate(names)}
    edges = sorted(
        (pos[render(e.src)], pos[render(e.dst)], e.label, e.inv) for e in g.edges
    )
    if fmt == "json":
        return json.dumps(
            {
                "vertices": names,
                "edges": [{"from": a, "to": b, "label": l, "inv": inv} for a, b, l, inv in edges],
            },
            indent=2,
        )
    if fmt == "dot":
        lines = ["digraph bracketings {"]
        for name in names:
            lines.append(f'  "{name}";')
        for a, b, label, inv in edges:
            if inv:
                if a > b:
                    continue
                lines.append(f'  "{names[a]}" -> "{names[b]}" [label="{label}", dir=both];')
            else:
                lines.append(f'  "{names[a]}" -> "{names[b]}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}")
