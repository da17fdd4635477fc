"""Graph-search oracle cross-checking the two engines.

Reachability is plain breadth-first search over the bracketing graph.  Path
agreement is checked two ways: every walk of at most three steps is composed
into a term and normalized, and the set of canonical forms of all walks up to
the length bound is computed by a layered search that precomposes one edge at
a time.  Both must produce a single form per pair, equal to the synthesized
one.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field

from .frobenius import F_REWRITER, f_identity, f_normalize, f_synthesize
from .normalizer import REWRITER, Mode, as_mode, identity_form, normalize, synthesize
from .polytope import Frontier, build_graph, parse_frontier
from .syntax import OT, PAR, Id, Leaf, compose, render

SHORT_WALK = 3


def reachable(g, v):
    """Vertices reachable from ``v`` (including ``v``) along directed edges."""
    v = g.vertex(v)
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for e in g.out[x]:
            if e.dst not in seen:
                seen.add(e.dst)
                queue.append(e.dst)
    return seen


def distances_to(g, w):
    """Length of a shortest directed path from each vertex to ``w``."""
    dist = {w: 0}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for e in g.inc[x]:
            if e.src not in dist:
                dist[e.src] = dist[x] + 1
                queue.append(e.src)
    return dist


def enumerate_paths(g, src, tgt, maxlen):
    """All directed walks from ``src`` to ``tgt`` with at most ``maxlen`` edges.

    Walks may revisit vertices.  They are returned as tuples of edges,
    sorted lexicographically by their edge labels.
    """
    src, tgt = g.vertex(src), g.vertex(tgt)
    dist = distances_to(g, tgt)
    out = []

    def walk(v, path):
        if v == tgt:
            out.append(tuple(path))
        if len(path) == maxlen:
            return
        for e in g.out[v]:
            d = dist.get(e.dst)
            if d is not None and len(path) + 1 + d <= maxlen:
                path.append(e)
                walk(e.dst, path)
                path.pop()

    if src in dist and dist[src] <= maxlen:
        walk(src, [])
    out.sort(key=lambda p: tuple(e.label for e in p))
    return out


def path_term(path, start=None):
    """The composite term of a walk; an identity for the empty walk."""
    if not path:
        return Id(start)
    return compose(*(e.factor.to_term() for e in reversed(path)))


@dataclass
class VerifyReport:
    frontier: str
    mode: str
    vertex_count: int
    reachable_pairs: int = 0
    synth_agreements: int = 0
    path_groups_checked: int = 0
    max_path_len: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {
            "frontier": self.frontier,
            "mode": self.mode,
            "vertex_count": self.vertex_count,
            "reachable_pairs": self.reachable_pairs,
            "synth_agreements": self.synth_agreements,
            "path_groups_checked": self.path_groups_checked,
            "max_path_len": self.max_path_len,
            "failures": list(self.failures),
        }


def verify_frontier(fr, mode=Mode.FULL, maxlen=None, functor=False):
    """Check reachability and path agreement on the graph of ``fr``."""
    if isinstance(fr, str):
        fr = parse_frontier(fr)
    mode = as_mode(mode)
    g = build_graph(fr, mode, functor)
    if maxlen is None:
        maxlen = len(g) + 4
    synth = f_synthesize if functor else synthesize
    norm = f_normalize if functor else normalize
    rewriter = F_REWRITER if functor else REWRITER
    ident = f_identity if functor else identity_form

    report = VerifyReport(str(fr), mode.value, len(g), max_path_len=maxlen)
    fail = report.failures.append
    forms = {}
    for v in g.vertices:
        reach = reachable(g, v)
        for w in g.vertices:
            cf = synth(v, w, mode)
            forms[v, w] = cf
            if (w in reach) != bool(cf):
                fail(f"reachability {render(v)} -> {render(w)}: search {w in reach}, synthesis {bool(cf)}")
            else:
                report.synth_agreements += 1
            if w in reach:
                report.reachable_pairs += 1

    # every short walk, composed and normalized as a term
    for v in g.vertices:
        for length in range(0, SHORT_WALK + 1):
            for path in _walks(g, v, min(length, maxlen)):
                if len(path) != length:
                    continue
                w = path[-1].dst if path else v
                got = norm(path_term(path, v))
                if got != forms[v, w]:
                    fail(f"walk {' ; '.join(e.label for e in path) or 'id'} from {render(v)} normalizes off the synthesized form")

    # all walks up to maxlen, one layer of edges at a time
    for w in g.vertices:
        seen = {w: {ident(w)}}
        layer = {w: {ident(w)}}
        depth = 0
        while layer and depth < maxlen:
            depth += 1
            nxt = {}
            for x, cfs in layer.items():
                for e in g.inc[x]:
                    for cf in cfs:
                        out = rewriter.precompose(cf, e.factor)
                        have = seen.setdefault(e.src, set())
                        if out not in have:
                            have.add(out)
                            nxt.setdefault(e.src, set()).add(out)
            layer = nxt
        for v, cfs in seen.items():
            report.path_groups_checked += 1
            if len(cfs) != 1:
                fail(f"{len(cfs)} distinct forms for walks {render(v)} -> {render(w)}")
            elif next(iter(cfs)) != forms[v, w]:
                fail(f"walks {render(v)} -> {render(w)} disagree with synthesis")
    return report


def _walks(g, v, length):
    if length == 0:
        yield ()
        return
    stack = [(v, ())]
    while stack:
        x, path = stack.pop()
        if len(path) == length:
            yield path
            continue
        for e in g.out[x]:
            stack.append((e.dst, path + (e,)))


def all_frontiers(n, names=None):
    """Every frontier with ``n`` letters: one per pattern of gap connectives."""
    names = names or [Leaf(chr(ord("A") + i)) for i in range(n)]
    for gaps in itertools.product((OT, PAR), repeat=n - 1):
        yield Frontier(tuple(names[:n]), gaps)


def verify_suite(max_letters, seed=None, modes=tuple(Mode), functor=False, min_letters=2,
                 ot_only=False, maxlen=None):
    """Verify every frontier pattern with ``min_letters`` to ``max_letters`` letters.

    With a seed, generator names are drawn at random from a small pool, so
    repeated names occur.
    """
    rng = random.Random(seed) if seed is not None else None
    reports = []
    for n in range(min_letters, max_letters + 1):
        if rng is None:
            names = None
        else:
            names = [Leaf(rng.choice("ABC")) for _ in range(n)]
        for fr in all_frontiers(n, names):
            if ot_only and PAR in fr.gaps:
                continue
            for mode in modes:
                reports.append(verify_frontier(fr, mode, maxlen, functor))
    return reports
