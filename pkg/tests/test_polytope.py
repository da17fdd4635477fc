import json
import math

import pytest

from ldc.errors import ParseError, UnknownVertex
from ldc.normalizer import Mode, hom_exists
from ldc.frobenius import f_synthesize
from ldc.oracle import all_frontiers
from ldc.polytope import (
    build_graph,
    export_graph,
    frontier_of,
    frontier_vertices,
    parse_frontier,
)
from ldc.syntax import OT, PAR, FLeaf, Leaf, Lift, Prod, parse_object, prod, render


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def test_parse_frontier():
    fr = parse_frontier("A@B*C*D@E")
    assert [x.name for x in fr.letters] == list("ABCDE")
    assert fr.gaps == (PAR, OT, OT, PAR)
    assert str(fr) == "A@B*C*D@E"
    for bad in ("", "A*", "*A", "A**B", "(A*B)", "A B"):
        with pytest.raises(ParseError):
            parse_frontier(bad)


def test_frontier_vertices_examples():
    assert [render(v) for v in frontier_vertices("A*B*C")] == ["(A*(B*C))", "((A*B)*C)"]
    assert len(frontier_vertices("A@B*C*D@E")) == 14
    assert len(frontier_vertices("A*B", functor=True)) == 2
    assert len(frontier_vertices("A@B", functor=True)) == 2


def test_catalan_counts():
    for n in range(1, 9):
        for fr in list(all_frontiers(n))[:4]:
            vs = frontier_vertices(fr)
            assert len(vs) == len(set(vs)) == catalan(n - 1)
            assert all(frontier_of(v) == fr for v in vs)


def test_multiplihedron_counts():
    # vertices of the multiplihedra J(n): 1, 2, 6, 21, 80, 322
    for n, count in zip(range(1, 7), (1, 2, 6, 21, 80, 322)):
        for fr in list(all_frontiers(n))[:3]:
            assert len(frontier_vertices(fr, functor=True)) == count


# vertex labels of the displayed multiplihedron for F(A) * F(B) * F(C) @ F(D),
# with connectives left implicit
DRAWN_LABELS = """
F(A)(F(B)(F(C)F(D))) F(A)((F(B)F(C))F(D)) F(A)F(B(CD)) F(A)F((BC)D)
((F(A)F(B))F(C))F(D) (F(A)F(B))F(CD) (F(A)F(BC))F(D) F(A)(F(B)F(CD))
F(A)(F(BC)F(D)) (F(A)F(B))(F(C)F(D)) (F(A)(F(B)F(C)))F(D) F(A((BC)D))
F(A(B(CD))) F((A(BC))D) F(A(BC))F(D) F((AB)C)F(D) (F(AB)F(C))F(D)
F((AB)(CD)) F(AB)(F(C)F(D)) F(AB)F(CD) F(((AB)C)D)
""".split()


def read_label(text, gaps):
    pos = 0

    def first(x):
        while isinstance(x, (Prod, FLeaf)):
            x = x.left if isinstance(x, Prod) else x.inner
        return x

    def seq(stop):
        nonlocal pos
        items = []
        while pos < len(text) and text[pos] != stop:
            if text[pos] == "F":
                pos += 2
                items.append(FLeaf(seq(")")))
                pos += 1
            elif text[pos] == "(":
                pos += 1
                items.append(seq(")"))
                pos += 1
            else:
                items.append(Leaf(text[pos]))
                pos += 1
        out = items[0]
        for y in items[1:]:
            out = prod(gaps[ord(first(y).name) - ord("A") - 1], out, y)
        return out

    return seq(None)


def test_drawn_multiplihedron_vertices():
    fr = parse_frontier("A*B*C@D")
    drawn = {read_label(t, fr.gaps) for t in DRAWN_LABELS}
    assert len(drawn) == 21
    assert drawn == set(frontier_vertices(fr, functor=True))


def test_pentagon_graph():
    g = build_graph("A@B*C@D")
    assert len(g) == 5
    src = parse_object("(A@B)*(C@D)")
    assert sorted(e.factor.core.token for e in g.out[src]) == ["dl", "dr"]
    single = [e for e in g.edges if not e.inv]
    double = [e for e in g.edges if e.inv]
    assert len(single) == 4 and len(double) == 2


def test_tensor_pentagon_all_invertible():
    g = build_graph("A*B*C*D")
    assert len(g) == 5
    assert len(g.edges) == 10 and all(e.inv for e in g.edges)


def test_lax_monoidal_single_edge():
    g = build_graph("A*B*C", Mode.LAX_MONOIDAL)
    assert [(render(e.src), render(e.dst)) for e in g.edges] == [("(A*(B*C))", "((A*B)*C)")]
    g = build_graph("A*B*C", Mode.LAX_LD)
    assert len(g.edges) == 1


def test_edgeless_graph():
    g = build_graph("A*B")
    assert len(g) == 1 and g.edges == []
    assert json.loads(export_graph(g, "json")) == {"vertices": ["(A*B)"], "edges": []}


def test_unknown_vertex():
    g = build_graph("A*B*C")
    with pytest.raises(UnknownVertex):
        g.vertex("(A@(B*C))")
    with pytest.raises(UnknownVertex):
        g.vertex("(A*")


def test_dot_export():
    dot = export_graph(build_graph("A@B*C@D"), "dot")
    lines = dot.strip().splitlines()
    assert lines[0].startswith("digraph") and lines[-1] == "}"
    nodes = [l for l in lines if l.strip().endswith('";') and "->" not in l]
    arrows = [l for l in lines if "->" in l]
    assert len(nodes) == 5
    assert sum("dir=both" in l for l in arrows) == 1
    assert sum("dir=both" not in l for l in arrows) == 4
    with pytest.raises(ValueError):
        export_graph(build_graph("A*B"), "svg")


def test_json_export_round_trip():
    g = build_graph("A@B*C*D@E")
    data = json.loads(export_graph(g, "json"))
    assert data["vertices"] == sorted(data["vertices"])
    assert len(data["vertices"]) == 14
    back = {parse_object(v) for v in data["vertices"]}
    assert back == set(g.vertices)
    pairs = {(data["vertices"][e["from"]], data["vertices"][e["to"]]) for e in data["edges"]}
    assert pairs == {(render(e.src), render(e.dst)) for e in g.edges}


@pytest.mark.parametrize("mode", list(Mode))
def test_edges_are_witnesses(mode):
    for n in range(2, 6):
        for fr in all_frontiers(n):
            g = build_graph(fr, mode)
            for e in g.edges:
                assert hom_exists(e.src, e.dst, mode)
    for fr in all_frontiers(4):
        g = build_graph(fr, mode, functor=True)
        for e in g.edges:
            assert f_synthesize(e.src, e.dst, mode)


def test_renaming_invariance():
    for fr in all_frontiers(5):
        g1 = build_graph(fr)
        renamed = str(fr).translate(str.maketrans("ABCDE", "PQRST"))
        g2 = build_graph(renamed)
        table = str.maketrans("PQRST", "ABCDE")
        e1 = sorted((render(e.src), render(e.dst), e.label, e.inv) for e in g1.edges)
        e2 = sorted(
            (render(e.src).translate(table), render(e.dst).translate(table), e.label.translate(table), e.inv)
            for e in g2.edges
        )
        assert e1 == e2


def test_functor_graph_restricts_to_associahedron():
    for fr in all_frontiers(4):
        plain = build_graph(fr)
        g = build_graph(fr, functor=True)
        single = {v for v in g.vertices if isinstance(v, FLeaf)}
        assert single == {FLeaf(v) for v in plain.vertices}
        lifted = sorted(
            (render(e.src.inner), render(e.dst.inner))
            for e in g.edges
            if e.src in single and e.dst in single
        )
        for e in g.edges:
            if e.src in single and e.dst in single:
                assert isinstance(e.factor.core, Lift)
        assert lifted == sorted((render(e.src), render(e.dst)) for e in plain.edges)
