import pytest

from ldc.errors import ModeError, ParseError, TypeMismatch
from ldc.generate import make_rng, random_object, random_term
from ldc.syntax import (
    Alpha,
    Comp,
    DeltaL,
    DeltaR,
    FLeaf,
    Id,
    Leaf,
    Lift,
    Mu,
    Ot,
    Par,
    TensOt,
    check_ranks,
    parse_morphism,
    parse_object,
    rank,
    render,
    substitute,
    typecheck,
)

A, B, C, D = (Leaf(n) for n in "ABCD")


def test_parse_object_examples():
    assert parse_object("(A*B)") == Ot(A, B)
    assert parse_object("A@(B*C)") == Par(A, Ot(B, C))
    with pytest.raises(ParseError):
        parse_object("A*B*C")


def test_parse_error_has_position():
    with pytest.raises(ParseError) as e:
        parse_object("(A*B")
    assert e.value.position == 4
    with pytest.raises(ParseError) as e:
        parse_object("(A#B)")
    assert e.value.position == 2


@pytest.mark.parametrize("text", ["", "()", "(A*)", "A B", "1A", "(A*B))"])
def test_parse_object_rejects(text):
    with pytest.raises(ParseError):
        parse_object(text)


def test_parse_morphism_examples():
    assert parse_morphism("dr{A,B,C}") == DeltaR(A, B, C)
    assert parse_morphism("(al{A,B,C} . (id{A} * id{(B*C)}))") == Comp(
        Alpha(A, B, C), TensOt(Id(A), Id(Ot(B, C)))
    )
    with pytest.raises(ModeError):
        parse_morphism("mu{A,B}")
    with pytest.raises(ModeError):
        parse_morphism("F[id{A}]")


def test_functor_terms():
    t = parse_morphism("(F[dl{A,B,C}] . mu{A,(B@C)})", "functor")
    assert t == Comp(Lift(DeltaL(A, B, C)), Mu(A, Par(B, C)))
    assert typecheck(t) == (Ot(FLeaf(A), FLeaf(Par(B, C))), FLeaf(Par(Ot(A, B), C)))
    assert typecheck(parse_morphism("cm{A,B}", "functor")) == (FLeaf(Par(A, B)), Par(FLeaf(A), FLeaf(B)))


def test_render_examples():
    assert render(Ot(A, B)) == "(A*B)"
    assert render(Par(A, Ot(B, C))) == "(A@(B*C))"
    assert render(DeltaL(A, B, C)) == "dl{A,B,C}"
    assert render(FLeaf(Ot(A, B))) == "F((A*B))"


def test_rank_examples():
    assert rank(parse_object("(A*B)@C")) == 3
    assert rank(A, {"A": 5}) == 5
    assert rank(parse_object("((A@B)*(C@D))")) == 4
    assert rank(parse_object("(A*B)@C"), {"A": 4, "C": 2}) == 7
    assert rank(FLeaf(Ot(A, B)), {"B": 3}) == 4


def test_check_ranks():
    assert check_ranks({"A": 2}) == {"A": 2}
    for bad in ({"A": 0}, {"A": -1}, {"A": 1.5}, {"A": True}):
        with pytest.raises(ValueError):
            check_ranks(bad)


def test_typecheck_examples():
    assert typecheck(parse_morphism("dr{A,B,C}")) == (Ot(Par(A, B), C), Par(A, Ot(B, C)))
    x = Ot(A, Ot(B, C))
    assert typecheck(parse_morphism("(al'{A,B,C} . al{A,B,C})")) == (x, x)
    with pytest.raises(TypeMismatch) as e:
        typecheck(parse_morphism("(dl{A,B,C} . dr{A,B,C})"))
    assert e.value.path == ()


def test_typecheck_reports_path():
    with pytest.raises(TypeMismatch) as e:
        typecheck(parse_morphism("(id{A} * (dl{A,B,C} . dr{A,B,C}))"))
    assert e.value.path == ("r",)


def test_round_trip_random():
    rng = make_rng(11)
    for _ in range(300):
        x = random_object(rng, rng.randint(1, 8))
        assert parse_object(render(x)) == x
        f = random_term(rng, x, 6)
        assert parse_morphism(render(f)) == f


def test_rank_preserved_by_random_terms():
    rng = make_rng(12)
    for _ in range(300):
        ranks = {n: rng.randint(1, 9) for n in "ABCDE"}
        f = random_term(rng, random_object(rng, rng.randint(1, 7)), 6)
        s, t = typecheck(f)
        assert rank(s, ranks) == rank(t, ranks)


def test_substitute():
    t = substitute(parse_morphism("dl{A,B,C}"), {"B": Ot(C, D)})
    assert t == DeltaL(A, Ot(C, D), C)


def test_redundant_parentheses():
    assert parse_object("((A*B))") == Ot(A, B)
    assert parse_morphism("((dr{A,B,C}))") == DeltaR(A, B, C)
