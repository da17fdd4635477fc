"""Analyses of objects: words, vectors, bases and the morphisms they name.

A word is a tuple of letter tokens.  Index 0 is the terminal (outermost)
letter.  Tensor words use ``al`` and ``al'``; par words use ``ap``, ``ap'``,
``dl`` and ``dr``.  Front letters (``al``, ``ap``, ``dl``) bind the first
remaining vector entry and back letters (``al'``, ``ap'``, ``dr``) bind the
last one, so the vector lists the bound objects in left-to-right order.

An analysis of ``H`` over a base ``B # C`` produces ``H`` itself together
with the two sides ``L`` and ``R`` of the composite morphism
``H -> L # R`` named by the word.
"""

from __future__ import annotations

from .errors import AlphabetMismatch, LengthMismatch
from .syntax import (
    OT,
    PAR,
    Alpha,
    AlphaBar,
    AlphaBarInv,
    AlphaInv,
    Comp,
    Coherence,
    DeltaF,
    DeltaL,
    DeltaR,
    FLeaf,
    Id,
    Lift,
    Mu,
    Node,
    Ot,
    Par,
    Tens,
    TensOt,
    TensPar,
    _arg,
    prod,
    render,
    tens,
    typecheck,
)

Y_LETTERS = ("al", "al'")
Z_LETTERS = ("ap", "ap'", "dl", "dr")
FRONT = frozenset(("al", "ap", "dl"))
BACK = frozenset(("al'", "ap'", "dr"))

# letter -> (connective joining the bound entry, entry binds at the front)
LETTER_SHAPE = {
    "al": (OT, True),
    "al'": (OT, False),
    "ap": (PAR, True),
    "ap'": (PAR, False),
    "dl": (OT, True),
    "dr": (OT, False),
}


def alphabet_of(conn):
    return Y_LETTERS if conn == OT else Z_LETTERS


class BaseSplit(Node):
    """Identity base ``left # right`` with ``#`` given by ``conn``."""

    __slots__ = ()
    left = _arg(0)
    right = _arg(1)
    conn = _arg(2)

    def hlr(self):
        return prod(self.conn, self.left, self.right), self.left, self.right


class DBase(Node):
    """Functor-mode base ``cm . F[k]`` where ``k`` is a par analysis in the source category."""

    __slots__ = ()
    cword = _arg(0)
    cvector = _arg(1)
    cbase = _arg(2)
    conn = PAR

    def hlr(self):
        h, l, r = eval_hlr(self.cbase, self.cword, self.cvector)
        return FLeaf(h), FLeaf(l), FLeaf(r)


def split(word, vector):
    """Split ``(word, vector)`` at the terminal letter.

    Returns ``(letter, bound entry, inner word, inner vector)``.
    """
    letter = word[0]
    if letter in FRONT:
        return letter, vector[0], word[1:], vector[1:]
    return letter, vector[-1], word[1:], vector[:-1]


def check_word(base, word, vector):
    if len(word) != len(vector):
        raise LengthMismatch(f"word of length {len(word)} with vector of length {len(vector)}")
    allowed = alphabet_of(base.conn)
    for letter in word:
        if letter not in allowed:
            raise AlphabetMismatch(f"letter {letter!r} not allowed over a {base.conn} base")


def eval_hlr(base, word, vector):
    """Return ``(H, L, R)`` for the analysis ``(base, word, vector)``."""
    word, vector = tuple(word), tuple(vector)
    check_word(base, word, vector)
    return _hlr(base, word, vector)


def _hlr(base, word, vector):
    if not word:
        return base.hlr()
    letter, a, w, rest = split(word, vector)
    h, l, r = _hlr(base, w, rest)
    conn, front = LETTER_SHAPE[letter]
    if front:
        return prod(conn, a, h), prod(conn, a, l), r
    if letter == "al'":
        return Ot(h, a), l, Ot(r, a)
    if letter == "ap'":
        return Par(h, a), l, Par(r, a)
    return Ot(h, a), l, Ot(r, a)  # dr


def build_tau(base, word, vector):
    """Morphism ``H -> L * R`` named by a tensor analysis."""
    if base.conn != OT:
        raise AlphabetMismatch("tensor analyses need a tensor base")
    word, vector = tuple(word), tuple(vector)
    check_word(base, word, vector)
    return _build(base, word, vector)


def build_kappa(base, word, vector):
    """Morphism ``H -> L @ R`` named by a par analysis."""
    if base.conn != PAR:
        raise AlphabetMismatch("par analyses need a par base")
    word, vector = tuple(word), tuple(vector)
    check_word(base, word, vector)
    return _build(base, word, vector)


def base_term(base):
    if isinstance(base, DBase):
        _, l, r = eval_hlr(base.cbase, base.cword, base.cvector)
        return Comp(DeltaF(l, r), Lift(build_kappa(base.cbase, base.cword, base.cvector)))
    return Id(prod(base.conn, base.left, base.right))


def _build(base, word, vector):
    if not word:
        return base_term(base)
    letter, a, w, rest = split(word, vector)
    inner = _build(base, w, rest)
    _, l, r = _hlr(base, w, rest)
    if letter == "al":
        return Comp(Alpha(a, l, r), TensOt(Id(a), inner))
    if letter == "al'":
        return Comp(AlphaInv(l, r, a), TensOt(inner, Id(a)))
    if letter == "ap":
        return Comp(AlphaBar(a, l, r), TensPar(Id(a), inner))
    if letter == "ap'":
        return Comp(AlphaBarInv(l, r, a), TensPar(inner, Id(a)))
    if letter == "dl":
        return Comp(DeltaL(a, l, r), TensOt(Id(a), inner))
    return Comp(DeltaR(l, r, a), TensOt(inner, Id(a)))


# ------------------------------------------------------------ atomic factors


class AtomicFactor(Node):
    """A structural component placed inside a context of identities.

    ``whisker`` lists ``(side, conn, other)`` steps from the outside in.
    ``side`` is ``"L"`` when the active part sits to the left of ``other``
    (``h # id``) and ``"R"`` when it sits to the right (``id # h``).
    """

    __slots__ = ("_ends",)
    core = _arg(0)
    whisker = _arg(1)
    terminal = _arg(2)

    def __init__(self, core, whisker=(), terminal=False):
        super().__init__(core, tuple(whisker), terminal)
        s, t = typecheck(core, terminal)
        for side, conn, other in reversed(self.whisker):
            if side == "L":
                s, t = prod(conn, s, other), prod(conn, t, other)
            else:
                s, t = prod(conn, other, s), prod(conn, other, t)
        object.__setattr__(self, "_ends", (s, t))

    @property
    def source(self):
        return self._ends[0]

    @property
    def target(self):
        return self._ends[1]

    def peel(self):
        """Drop the outermost whisker step."""
        return AtomicFactor(self.core, self.whisker[1:], self.terminal)

    def wrap(self, side, conn, other):
        """Place this factor inside one more context step, as the new outermost step."""
        return AtomicFactor(self.core, ((side, conn, other),) + self.whisker, self.terminal)

    def to_term(self):
        t = self.core
        for side, conn, other in reversed(self.whisker):
            t = tens(conn, t, Id(other)) if side == "L" else tens(conn, Id(other), t)
        return t

    def __str__(self):
        return render(self.to_term())


def atomize(term, terminal=False):
    """Factor a term into atomic factors, listed in order of application.

    Tensors are split as ``f # g = (f # id) . (id # g)``, so the right
    factor of a tensor is applied first.  A lifted plain term ``F[f]``
    becomes one lifted factor per atomic factor of ``f``.
    """
    out = []
    _atomize(term, (), terminal, out)
    return out


def _atomize(t, whisker, terminal, out):
    if isinstance(t, Id):
        return
    if isinstance(t, (Coherence, Mu, DeltaF)):
        out.append(AtomicFactor(t, whisker, terminal))
        return
    if isinstance(t, Lift):
        for a in atomize(t.f):
            out.append(AtomicFactor(Lift(a.to_term()), whisker, terminal))
        return
    if isinstance(t, Comp):
        _atomize(t.f, whisker, terminal, out)
        _atomize(t.g, whisker, terminal, out)
        return
    if isinstance(t, Tens):
        sf = typecheck(t.f, terminal)[0]
        tg = typecheck(t.g, terminal)[1]
        _atomize(t.g, whisker + (("R", t.conn, sf),), terminal, out)
        _atomize(t.f, whisker + (("L", t.conn, tg),), terminal, out)
        return
    raise TypeError(f"not a morphism term: {t!r}")


_JSON_LETTER = {"al'": "ali", "ap'": "api"}
_LETTER_JSON = {v: k for k, v in _JSON_LETTER.items()}


def word_to_json(word):
    return [_JSON_LETTER.get(letter, letter) for letter in word]


def word_from_json(data):
    word = tuple(_LETTER_JSON.get(letter, letter) for letter in data)
    for letter in word:
        if letter not in LETTER_SHAPE:
            raise AlphabetMismatch(f"unknown letter {letter!r}")
    return word
