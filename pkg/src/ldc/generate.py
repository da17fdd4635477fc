"""Seeded random generation of objects and well-typed terms."""

from __future__ import annotations

import random

from .normalizer import Mode, as_mode
from .polytope import top_moves
from .syntax import (
    OT,
    PAR,
    TERMINAL,
    Alpha,
    AlphaBar,
    AlphaBarInv,
    AlphaInv,
    Comp,
    DeltaF,
    DeltaL,
    DeltaR,
    FLeaf,
    Id,
    Leaf,
    Lift,
    Mu,
    Ot,
    Par,
    Prod,
    TensOt,
    TensPar,
    prod,
    tens,
    typecheck,
)

GENERATORS = tuple(Leaf(n) for n in "ABCDE")


def random_tree(rng, items, conns=(OT, PAR)):
    """Random binary tree over ``items`` in order, with random connectives."""
    if len(items) == 1:
        return items[0]
    k = rng.randint(1, len(items) - 1)
    return prod(rng.choice(conns), random_tree(rng, items[:k], conns), random_tree(rng, items[k:], conns))


def random_object(rng, n, generators=GENERATORS, conns=(OT, PAR)):
    return random_tree(rng, [rng.choice(generators) for _ in range(n)], conns)


def functor_top_moves(x, mode=Mode.FULL):
    out = top_moves(x, mode)
    if isinstance(x, Ot) and isinstance(x.left, FLeaf) and isinstance(x.right, FLeaf):
        out.append(Mu(x.left.inner, x.right.inner))
    if isinstance(x, FLeaf) and isinstance(x.inner, Par):
        out.append(DeltaF(x.inner.left, x.inner.right))
    return out


def random_term(rng, src, depth=8, mode=Mode.FULL, functor=False):
    """A well-typed term with source ``src`` and nesting depth at most ``depth``."""
    moves = functor_top_moves(src, mode) if functor else top_moves(src, mode)
    if depth <= 1:
        if moves and rng.random() < 0.8:
            return rng.choice(moves)
        if functor and isinstance(src, FLeaf) and rng.random() < 0.5:
            return Lift(random_term(rng, src.inner, 3, mode))
        return Id(src)
    choices = ["comp", "comp", "comp"]
    if isinstance(src, Prod):
        choices += ["tens", "tens"]
    if moves:
        choices += ["gen"]
    if functor and isinstance(src, FLeaf):
        choices += ["lift"]
    kind = rng.choice(choices)
    if kind == "gen":
        return rng.choice(moves)
    if kind == "tens":
        return tens(
            src.conn,
            random_term(rng, src.left, depth - 1, mode, functor),
            random_term(rng, src.right, depth - 1, mode, functor),
        )
    if kind == "lift":
        return Lift(random_term(rng, src.inner, depth - 1, mode))
    f = random_term(rng, src, depth - 1, mode, functor)
    mid = typecheck(f)[1]
    g = random_term(rng, mid, depth - 1, mode, functor)
    return Comp(g, f)


def random_functor_object(rng, n, generators=GENERATORS):
    """Random functor-mode object whose leaves are images of random plain trees."""
    items = [rng.choice(generators) for _ in range(n)]
    return _random_functor_tree(rng, items)


def _random_functor_tree(rng, items):
    if len(items) == 1 or rng.random() < 0.3:
        return FLeaf(random_tree(rng, items))
    k = rng.randint(1, len(items) - 1)
    return prod(
        rng.choice((OT, PAR)),
        _random_functor_tree(rng, items[:k]),
        _random_functor_tree(rng, items[k:]),
    )


def make_rng(seed):
    return random.Random(seed)


STAR = FLeaf(TERMINAL)


# ------------------------------------------------------------------ spiders


def subtree(x, pos):
    for step in pos:
        x = x.left if step == "L" else x.right
    return x


def replace(x, pos, y):
    if not pos:
        return y
    if pos[0] == "L":
        return prod(x.conn, replace(x.left, pos[1:], y), x.right)
    return prod(x.conn, x.left, replace(x.right, pos[1:], y))


def place(x, pos, core):
    """Whisker ``core`` into position ``pos`` of ``x``."""
    if not pos:
        return core
    if pos[0] == "L":
        return tens(x.conn, place(x.left, pos[1:], core), Id(x.right))
    return tens(x.conn, Id(x.left), place(x.right, pos[1:], core))


def positions(x, pos=()):
    yield pos
    if isinstance(x, Prod):
        yield from positions(x.left, pos + ("L",))
        yield from positions(x.right, pos + ("R",))


def _step(x, pos, core):
    term = place(x, pos, core)
    return term, typecheck(term, terminal=True)[1]


def _to_right_comb(x, conn):
    """Moves turning a ``conn``-only tree into the right comb."""
    inv = AlphaInv if conn == OT else AlphaBarInv
    steps = []
    while True:
        for pos in positions(x):
            s = subtree(x, pos)
            if isinstance(s, Prod) and isinstance(s.left, Prod):
                core = inv(s.left.left, s.left.right, s.right)
                term, x = _step(x, pos, core)
                steps.append((pos, core, term))
                break
        else:
            return steps, x


def assoc_path(rng, x, y, conn, wander=3):
    """A composite of associators from ``x`` to ``y`` (same leaves, one connective)."""
    fwd, bwd = (Alpha, AlphaInv) if conn == OT else (AlphaBar, AlphaBarInv)
    terms = []
    for _ in range(rng.randint(0, wander)):
        moves = []
        for pos in positions(x):
            s = subtree(x, pos)
            if isinstance(s, Prod) and isinstance(s.right, Prod):
                moves.append((pos, fwd(s.left, s.right.left, s.right.right)))
            if isinstance(s, Prod) and isinstance(s.left, Prod):
                moves.append((pos, bwd(s.left.left, s.left.right, s.right)))
        if not moves:
            break
        pos, core = rng.choice(moves)
        term, x = _step(x, pos, core)
        terms.append(term)
    steps, x = _to_right_comb(x, conn)
    terms.extend(t for _, _, t in steps)
    back, _ = _to_right_comb(y, conn)
    for pos, core, _ in reversed(back):
        term, x = _step(x, pos, core.inverse())
        terms.append(term)
    return terms


def power(conn, k, x=STAR):
    out = x
    for _ in range(k - 1):
        out = prod(conn, x, out)
    return out


def _chain(terms, x):
    if not terms:
        return Id(x)
    out = terms[0]
    for t in terms[1:]:
        out = Comp(t, out)
    return out


def _random_spider_basic(rng, m, n):
    """Associate, collapse with ``mu`` in random order, split with ``cm``, associate."""
    star = TERMINAL
    src = power(OT, m)
    shaped = random_tree(rng, [STAR] * m, (OT,))
    terms = assoc_path(rng, src, shaped, OT)
    x = shaped
    while isinstance(x, Prod):
        spots = [p for p in positions(x)
                 if isinstance(subtree(x, p), Ot)
                 and isinstance(subtree(x, p).left, FLeaf)
                 and isinstance(subtree(x, p).right, FLeaf)]
        term, x = _step(x, rng.choice(spots), Mu(star, star))
        terms.append(term)
    for _ in range(n - 1):
        spots = [p for p in positions(x) if isinstance(subtree(x, p), FLeaf)]
        term, x = _step(x, rng.choice(spots), DeltaF(star, star))
        terms.append(term)
    terms += assoc_path(rng, x, power(PAR, n), PAR)
    return _chain(terms, src)


def _merge(rng, p, q):
    """Spider from ``par^p * par^q`` to ``par^(p+q-1)`` built from distributors and ``mu``."""
    star = TERMINAL
    x = Ot(power(PAR, p), power(PAR, q))
    if p == 1 and q == 1:
        return Mu(star, star)
    if p == 1 or (q > 1 and rng.random() < 0.5):
        a, rest = x.left, x.right
        step = DeltaL(a, rest.left, rest.right)
        inner = _merge(rng, p, 1)
        mid = Par(Ot(a, rest.left), rest.right)
        y = Par(power(PAR, p), rest.right)
        assoc = assoc_path(rng, y, power(PAR, p + q - 1), PAR, wander=1)
        terms = [step, TensPar(inner, Id(rest.right))] + assoc
        return _chain(terms, x)
    head, rest = x.left.left, x.left.right
    step = DeltaR(head, rest, x.right)
    inner = _merge(rng, p - 1, q)
    return _chain([step, TensPar(Id(head), inner)], x)


def random_spider(rng, m, n, depth=3):
    """Random spider term from ``F(*)^*m`` to ``F(*)^@n`` in the terminal category."""
    if depth <= 0 or (m == 1 and n == 1) or rng.random() < 0.35:
        return _random_spider_basic(rng, m, n)
    if m >= 2 and rng.random() < 0.7:
        m1 = rng.randint(1, m - 1)
        n1 = rng.randint(1, n)
        n2 = n + 1 - n1
        f1 = random_spider(rng, m1, n1, depth - 1)
        f2 = random_spider(rng, m - m1, n2, depth - 1)
        src = power(OT, m)
        split_at = Ot(power(OT, m1), power(OT, m - m1))
        terms = assoc_path(rng, src, split_at, OT) + [TensOt(f1, f2), _merge(rng, n1, n2)]
        return _chain(terms, src)
    return Comp(random_spider(rng, 1, n, depth - 1), random_spider(rng, m, 1, depth - 1))
