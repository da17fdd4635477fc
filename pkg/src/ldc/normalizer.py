"""Canonical forms of structural morphisms.

A canonical form is either a leaf (an identity on a generator) or a node
``(left # right) . k`` where ``k`` is the morphism named by an analysis
``(word, vector, base)`` of the source and ``#`` is the top connective of
the target.

Two independent engines produce canonical forms:

* :func:`synthesize` reads the form off the endpoints by rank comparison;
* :func:`normalize` factors a term into atomic pieces and folds them into
  the identity form with :func:`precompose`, a rewrite system built from
  the pushing relations between words and the structural generators.

Agreement of the two engines on every term is the coherence property.
"""

from __future__ import annotations

import enum

from .analysis import (
    BACK,
    FRONT,
    LETTER_SHAPE,
    AtomicFactor,
    BaseSplit,
    DBase,
    _hlr,
    atomize,
    build_kappa,
    build_tau,
    eval_hlr,
    split,
    word_from_json,
    word_to_json,
)
from .errors import InternalTypeError, TypeMismatch
from .syntax import (
    OT,
    PAR,
    Alpha,
    AlphaBar,
    AlphaBarInv,
    AlphaInv,
    Comp,
    DeltaL,
    DeltaR,
    Id,
    Leaf,
    Node,
    Ot,
    Par,
    Prod,
    _arg,
    check_ranks,
    parse_object,
    prod,
    rank,
    render,
    tens,
    typecheck,
)


class Mode(enum.Enum):
    FULL = "full"
    LAX_LD = "lax-ld"
    LAX_MONOIDAL = "lax-monoidal"

    @property
    def letters(self):
        return _MODE_LETTERS[self]


_MODE_LETTERS = {
    Mode.FULL: frozenset(("al", "al'", "ap", "ap'", "dl", "dr")),
    Mode.LAX_LD: frozenset(("al", "ap", "dl", "dr")),
    Mode.LAX_MONOIDAL: frozenset(("al",)),
}


def as_mode(mode):
    return mode if isinstance(mode, Mode) else Mode(mode)


class NoMorphism:
    """Result of a failed synthesis; falsy."""

    def __init__(self, reason):
        self.reason = reason

    def __bool__(self):
        return False

    def __repr__(self):
        return f"NoMorphism({self.reason!r})"


# --------------------------------------------------------- canonical forms


class CLeaf(Node):
    __slots__ = ()
    obj = _arg(0)


class CNode(Node):
    __slots__ = ()
    conn = _arg(0)
    word = _arg(1)
    vector = _arg(2)
    base = _arg(3)
    left = _arg(4)
    right = _arg(5)


def cf_source(cf):
    if isinstance(cf, CNode):
        return eval_hlr(cf.base, cf.word, cf.vector)[0]
    return cf.source


def cf_target(cf):
    if isinstance(cf, CNode):
        return prod(cf.conn, cf_target(cf.left), cf_target(cf.right))
    return cf.target


CLeaf.source = property(lambda self: self.obj)
CLeaf.target = property(lambda self: self.obj)


def identity_form(x):
    """The canonical form of the identity on a plain object."""
    if isinstance(x, Prod):
        return CNode(
            x.conn, (), (), BaseSplit(x.left, x.right, x.conn),
            identity_form(x.left), identity_form(x.right),
        )
    return CLeaf(x)


def analysis_term(cf):
    if cf.conn == OT:
        return build_tau(cf.base, cf.word, cf.vector)
    return build_kappa(cf.base, cf.word, cf.vector)


def reify(cf):
    """The term ``(reify(left) # reify(right)) . k`` denoted by a canonical form."""
    if isinstance(cf, CLeaf):
        return Id(cf.obj)
    if isinstance(cf, CNode):
        return Comp(tens(cf.conn, reify(cf.left), reify(cf.right)), analysis_term(cf))
    return cf.reify()


# --------------------------------------------------------------- synthesis


class Synthesizer:
    """Rank-driven construction of the canonical form between two objects."""

    def __init__(self, mode=Mode.FULL, ranks=None):
        self.mode = as_mode(mode)
        self.letters = self.mode.letters
        self.ranks = check_ranks(ranks)
        self.rank = (lambda x: x.rank) if not self.ranks else (lambda x: rank(x, self.ranks))

    def __call__(self, src, tgt):
        rs, rt = self.rank(src), self.rank(tgt)
        if rs != rt:
            return NoMorphism(f"ranks differ: {rs} and {rt}")
        return self.synth(src, tgt)

    def synth(self, src, tgt):
        if isinstance(tgt, Prod):
            found = self.drill(src, tgt.conn, self.rank(tgt.left))
            if not found:
                return found
            word, vector, base = found
            _, l, r = _hlr(base, word, vector)
            left = self.synth(l, tgt.left)
            if not left:
                return left
            right = self.synth(r, tgt.right)
            if not right:
                return right
            return CNode(tgt.conn, word, vector, base, left, right)
        return self.leaf(src, tgt)

    def leaf(self, src, tgt):
        if src == tgt:
            return CLeaf(tgt)
        return NoMorphism(f"{render(src)} is not {render(tgt)}")

    def leaf_base(self, src, conn, need):
        return NoMorphism(f"generator {render(src)} cannot be split")

    def drill(self, src, conn, need):
        """Find the analysis of ``src`` whose left side has rank ``need``."""
        word, front, back = [], [], []
        while True:
            if not isinstance(src, Prod):
                base = self.leaf_base(src, conn, need)
                if not base:
                    return base
                break
            lam, p = src.left, src.right
            rl = self.rank(lam)
            if conn == OT:
                if src.conn != OT:
                    return NoMorphism(f"par {render(src)} cannot map to a tensor")
                if need == rl:
                    base = BaseSplit(lam, p, OT)
                    break
                letter = "al" if need > rl else "al'"
            elif src.conn == OT:
                if need == rl:
                    return NoMorphism(f"tensor {render(src)} splits at the demanded rank")
                letter = "dl" if need > rl else "dr"
            else:
                if need == rl:
                    base = BaseSplit(lam, p, PAR)
                    break
                letter = "ap" if need > rl else "ap'"
            if letter not in self.letters:
                return NoMorphism(f"{letter} is not available in mode {self.mode.value}")
            word.append(letter)
            if letter in FRONT:
                front.append(lam)
                src, need = p, need - rl
            else:
                back.append(p)
                src = lam
        return tuple(word), tuple(front) + tuple(reversed(back)), base


def synthesize(src, tgt, mode=Mode.FULL, ranks=None):
    """Canonical form of the unique structural morphism, or :class:`NoMorphism`."""
    return Synthesizer(mode, ranks)(src, tgt)


def hom_exists(src, tgt, mode=Mode.FULL, ranks=None):
    return bool(synthesize(src, tgt, mode, ranks))


# ------------------------------------------------------------------ rewrite


class Rewriter:
    """Precomposition of canonical forms with atomic factors."""

    def __init__(self):
        self._memo = {}

    def precompose(self, cf, h):
        key = (cf, h)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = self._precompose(cf, h)
        if len(self._memo) > 500_000:
            self._memo.clear()
        self._memo[key] = out
        return out

    def precompose_all(self, cf, factors):
        """``cf . f_n . ... . f_1`` for factors listed in application order."""
        for h in reversed(factors):
            cf = self.precompose(cf, h)
        return cf

    def _precompose(self, cf, h):
        if isinstance(cf, CNode):
            word, vector, base, rl, rr = self.push(cf.word, cf.vector, cf.base, h)
            left = self.precompose_all(cf.left, rl)
            right = self.precompose_all(cf.right, rr)
            return CNode(cf.conn, word, vector, base, left, right)
        raise InternalTypeError(f"cannot precompose {h} into {cf!r}")

    def identity(self, x):
        return identity_form(x)

    # Each push returns (word, vector, base, left residuals, right residuals)
    # with  k(word, vector, base) . h = (rl # rr) . k(new analysis).

    def push(self, word, vector, base, h):
        if not word:
            return self.push_base(base, h)
        letter, a, w, rest = split(word, vector)
        conn = LETTER_SHAPE[letter][0]
        if h.whisker:
            side = h.whisker[0][0]
            inner = h.peel()
            if letter in FRONT:
                if side == "L":
                    _, lw, _ = _hlr(base, w, rest)
                    return word, (inner.source,) + rest, base, [inner.wrap("L", conn, lw)], []
                w2, rest2, base2, rl, rr = self.push(w, rest, base, inner)
                return (letter,) + w2, (a,) + rest2, base2, [x.wrap("R", conn, a) for x in rl], rr
            if side == "R":
                _, _, rw = _hlr(base, w, rest)
                return word, rest + (inner.source,), base, [], [inner.wrap("R", conn, rw)]
            w2, rest2, base2, rl, rr = self.push(w, rest, base, inner)
            return (letter,) + w2, rest2 + (a,), base2, rl, [x.wrap("L", conn, a) for x in rr]
        out = self.push_core(letter, a, w, rest, base, h.core)
        if out is None:
            raise InternalTypeError(f"no rewrite for {h} against letter {letter}")
        return out

    def push_base(self, base, h):
        if not isinstance(base, BaseSplit):
            return self.push_base_extra(base, h)
        if h.whisker:
            side = h.whisker[0][0]
            inner = h.peel()
            if side == "L":
                return (), (), BaseSplit(inner.source, base.right, base.conn), [inner], []
            return (), (), BaseSplit(base.left, inner.source, base.conn), [], [inner]
        c = h.core
        t = type(c)
        if base.conn == OT:
            if t is Alpha:
                return ("al",), (c.a,), BaseSplit(c.b, c.c, OT), [], []
            if t is AlphaInv:
                return ("al'",), (c.c,), BaseSplit(c.a, c.b, OT), [], []
        else:
            if t is AlphaBar:
                return ("ap",), (c.a,), BaseSplit(c.b, c.c, PAR), [], []
            if t is AlphaBarInv:
                return ("ap'",), (c.c,), BaseSplit(c.a, c.b, PAR), [], []
            if t is DeltaL:
                return ("dl",), (c.a,), BaseSplit(c.b, c.c, PAR), [], []
            if t is DeltaR:
                return ("dr",), (c.c,), BaseSplit(c.a, c.b, PAR), [], []
        return self.push_base_extra(base, h)

    def push_base_extra(self, base, h):
        raise InternalTypeError(f"no rewrite for {h} against base {base!r}")

    def push_core(self, letter, a, w, rest, base, c):
        t = type(c)
        word = (letter,) + w
        vector = (a,) + rest if letter in FRONT else rest + (a,)
        inner = w[0] if w else None

        def inner_split():
            _, a2, w2, rest2 = split(w, rest)
            _, lw2, rw2 = _hlr(base, w2, rest2)
            return a2, w2, rest2, lw2, rw2

        def side(sel):
            _, lw, rw = _hlr(base, w, rest)
            return lw if sel == "L" else rw

        if letter == "al":
            if t is Alpha:
                return ("al", "al") + w, (c.a, c.b) + rest, base, [AtomicFactor(Alpha(c.a, c.b, side("L")))], []
            if t is AlphaInv:
                if inner is None:
                    return (), (), BaseSplit(Ot(a, base.left), base.right, OT), [], []
                if inner == "al":
                    a2, w2, rest2, lw2, _ = inner_split()
                    return ("al",) + w2, (Ot(a, a2),) + rest2, base, [AtomicFactor(AlphaInv(a, a2, lw2))], []
                return ("al'", "al") + w[1:], vector, base, [], []
        elif letter == "al'":
            if t is AlphaInv:
                return ("al'", "al'") + w, rest + (c.b, c.c), base, [], [AtomicFactor(AlphaInv(side("R"), c.b, c.c))]
            if t is Alpha:
                if inner is None:
                    return (), (), BaseSplit(base.left, Ot(base.right, a), OT), [], []
                if inner == "al'":
                    a2, w2, rest2, _, rw2 = inner_split()
                    return ("al'",) + w2, rest2 + (Ot(a2, a),), base, [], [AtomicFactor(Alpha(rw2, a2, a))]
                return ("al", "al'") + w[1:], vector, base, [], []
        elif letter == "ap":
            if t is AlphaBar:
                return ("ap", "ap") + w, (c.a, c.b) + rest, base, [AtomicFactor(AlphaBar(c.a, c.b, side("L")))], []
            if t is AlphaBarInv:
                if inner is None:
                    if not isinstance(base, BaseSplit):
                        return None
                    return (), (), BaseSplit(Par(a, base.left), base.right, PAR), [], []
                if inner == "ap":
                    a2, w2, rest2, lw2, _ = inner_split()
                    return ("ap",) + w2, (Par(a, a2),) + rest2, base, [AtomicFactor(AlphaBarInv(a, a2, lw2))], []
                if inner == "ap'":
                    return ("ap'", "ap") + w[1:], vector, base, [], []
            if t is DeltaL:
                return ("dl", "ap") + w, (c.a, c.b) + rest, base, [AtomicFactor(DeltaL(c.a, c.b, side("L")))], []
            if t is DeltaR:
                if inner == "dl":
                    a2, w2, rest2, lw2, _ = inner_split()
                    return ("dl",) + w2, (Par(a, a2),) + rest2, base, [AtomicFactor(DeltaR(a, a2, lw2))], []
                if inner == "dr":
                    return ("dr", "ap") + w[1:], vector, base, [], []
        elif letter == "ap'":
            if t is AlphaBarInv:
                return ("ap'", "ap'") + w, rest + (c.b, c.c), base, [], [AtomicFactor(AlphaBarInv(side("R"), c.b, c.c))]
            if t is AlphaBar:
                if inner is None:
                    if not isinstance(base, BaseSplit):
                        return None
                    return (), (), BaseSplit(base.left, Par(base.right, a), PAR), [], []
                if inner == "ap'":
                    a2, w2, rest2, _, rw2 = inner_split()
                    return ("ap'",) + w2, rest2 + (Par(a2, a),), base, [], [AtomicFactor(AlphaBar(rw2, a2, a))]
                if inner == "ap":
                    return ("ap", "ap'") + w[1:], vector, base, [], []
            if t is DeltaL:
                if inner == "dl":
                    return ("dl", "ap'") + w[1:], vector, base, [], []
                if inner == "dr":
                    a2, w2, rest2, _, rw2 = inner_split()
                    return ("dr",) + w2, rest2 + (Par(a2, a),), base, [], [AtomicFactor(DeltaL(rw2, a2, a))]
            if t is DeltaR:
                return ("dr", "ap'") + w, rest + (c.b, c.c), base, [], [AtomicFactor(DeltaR(side("R"), c.b, c.c))]
        elif letter == "dl":
            if t is Alpha:
                return ("dl", "dl") + w, (c.a, c.b) + rest, base, [AtomicFactor(Alpha(c.a, c.b, side("L")))], []
            if t is AlphaInv:
                if inner == "dl":
                    a2, w2, rest2, lw2, _ = inner_split()
                    return ("dl",) + w2, (Ot(a, a2),) + rest2, base, [AtomicFactor(AlphaInv(a, a2, lw2))], []
                if inner == "dr":
                    return ("dr", "dl") + w[1:], vector, base, [], []
        elif letter == "dr":
            if t is AlphaInv:
                return ("dr", "dr") + w, rest + (c.b, c.c), base, [], [AtomicFactor(AlphaInv(side("R"), c.b, c.c))]
            if t is Alpha:
                if inner == "dr":
                    a2, w2, rest2, _, rw2 = inner_split()
                    return ("dr",) + w2, rest2 + (Ot(a2, a),), base, [], [AtomicFactor(Alpha(rw2, a2, a))]
                if inner == "dl":
                    return ("dl", "dr") + w[1:], vector, base, [], []
        return self.push_core_extra(letter, a, w, rest, base, c)

    def push_core_extra(self, letter, a, w, rest, base, c):
        return None


REWRITER = Rewriter()


def precompose(cf, h):
    """Canonical form of ``cf . h`` for an atomic factor ``h``."""
    return REWRITER.precompose(cf, h)


def normalize(term):
    """Canonical form of a plain term, computed by the rewrite engine."""
    _, tgt = typecheck(term)
    return REWRITER.precompose_all(identity_form(tgt), atomize(term))


def equal(f, g):
    """Whether two plain terms have equal endpoints and equal canonical forms."""
    if typecheck(f) != typecheck(g):
        return False
    return normalize(f) == normalize(g)


# -------------------------------------------------------------------- json


def base_to_json(base):
    if isinstance(base, DBase):
        return {
            "kind": "dbase",
            "cword": word_to_json(base.cword),
            "cvector": [render(x) for x in base.cvector],
            "cbase": base_to_json(base.cbase),
        }
    return {"left": render(base.left), "right": render(base.right)}


def cf_to_json(cf):
    if isinstance(cf, CLeaf):
        return {"kind": "leaf", "object": render(cf.obj)}
    if isinstance(cf, CNode):
        return {
            "kind": "node",
            "conn": cf.conn,
            "word": word_to_json(cf.word),
            "vector": [render(x) for x in cf.vector],
            "base": base_to_json(cf.base),
            "l": cf_to_json(cf.left),
            "r": cf_to_json(cf.right),
        }
    return cf.to_json()


def base_from_json(data, conn, functor=False):
    if data.get("kind") == "dbase":
        return DBase(
            word_from_json(data["cword"]),
            tuple(parse_object(x) for x in data["cvector"]),
            base_from_json(data["cbase"], PAR),
        )
    return BaseSplit(parse_object(data["left"], functor), parse_object(data["right"], functor), conn)


def cf_from_json(data, functor=False):
    kind = data["kind"]
    if kind == "leaf":
        return CLeaf(parse_object(data["object"], functor))
    if kind == "node":
        conn = data["conn"]
        return CNode(
            conn,
            word_from_json(data["word"]),
            tuple(parse_object(x, functor) for x in data["vector"]),
            base_from_json(data["base"], conn, functor),
            cf_from_json(data["l"], functor),
            cf_from_json(data["r"], functor),
        )
    from .frobenius import flift_from_json

    return flift_from_json(data)
