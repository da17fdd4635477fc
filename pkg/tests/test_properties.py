from hypothesis import given, settings
from hypothesis import strategies as st

from ldc.errors import TypeMismatch
from ldc.frobenius import f_normalize, f_synthesize
from ldc.generate import random_functor_object, random_term
from ldc.normalizer import Mode, normalize, reify, synthesize
from ldc.syntax import Comp, Leaf, Ot, Par, parse_morphism, parse_object, rank, render, typecheck

names = st.sampled_from("ABCDE")
objects = st.recursive(
    names.map(Leaf),
    lambda sub: st.tuples(sub, sub).map(lambda p: Ot(*p)) | st.tuples(sub, sub).map(lambda p: Par(*p)),
    max_leaves=10,
)
rank_maps = st.dictionaries(names, st.integers(1, 20))
modes = st.sampled_from(list(Mode))


@given(objects)
def test_object_round_trip(x):
    assert parse_object(render(x)) == x


@given(objects, objects, rank_maps)
def test_rank_additive(x, y, r):
    assert rank(Ot(x, y), r) == rank(x, r) + rank(y, r) == rank(Par(x, y), r)


@settings(max_examples=150, deadline=None)
@given(objects, st.randoms(use_true_random=False), rank_maps, modes)
def test_terms_preserve_rank_and_normalize(x, rng, r, mode):
    f = random_term(rng, x, 6, mode)
    assert parse_morphism(render(f)) == f
    s, t = typecheck(f)
    assert rank(s, r) == rank(t, r)
    cf = normalize(f)
    assert cf == synthesize(s, t, mode, r)
    assert normalize(reify(cf)) == cf


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.randoms(use_true_random=False), modes)
def test_functor_terms_normalize(n, rng, mode):
    x = random_functor_object(rng, n)
    f = random_term(rng, x, 6, mode, functor=True)
    s, t = typecheck(f)
    assert f_normalize(f) == f_synthesize(s, t, mode)


@settings(max_examples=100, deadline=None)
@given(objects, st.randoms(use_true_random=False))
def test_typecheck_total(x, rng):
    f, g = random_term(rng, x, 4), random_term(rng, x, 4)
    term = Comp(g, f)
    try:
        s, t = typecheck(term)
    except TypeMismatch as e:
        assert isinstance(e.path, tuple)
    else:
        assert s == x
