"""Objects, morphism terms, their textual form, ranks and typechecking.

Objects are binary trees over generator names joined by ``*`` (tensor) and
``@`` (par).  In functor mode the leaves of an object are images ``F(X)`` of
plain objects.  Morphism terms are built from identities, the six coherence
generators, composition ``(g . f)`` and the two tensors ``(f * g)`` and
``(f @ g)``; functor mode adds ``mu{X,Y}``, ``cm{X,Y}`` and ``F[f]``.

All trees are immutable, hashable and compare structurally.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ModeError, ParseError, TypeMismatch

OT, PAR = "ot", "par"
SYMBOL = {OT: "*", PAR: "@"}


class Node:
    """Immutable tree node with a cached structural hash."""

    __slots__ = ("_args", "_hash")

    def __init__(self, *args):
        object.__setattr__(self, "_args", args)
        object.__setattr__(self, "_hash", hash((type(self).__name__, args)))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        return (
            type(self) is type(other)
            and self._hash == other._hash
            and self._args == other._args
        )

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(map(repr, self._args))})"

    def __reduce__(self):
        return (type(self), self._args)


def _arg(i):
    return property(lambda self: self._args[i])


# ----------------------------------------------------------------- objects


class Obj(Node):
    __slots__ = ("rank",)

    def __str__(self):
        return render(self)


class Leaf(Obj):
    __slots__ = ()
    name = _arg(0)

    def __init__(self, name):
        super().__init__(name)
        object.__setattr__(self, "rank", 1)


class FLeaf(Obj):
    """The image ``F(x)`` of a plain object, a leaf of a functor-mode object."""

    __slots__ = ()
    inner = _arg(0)

    def __init__(self, inner):
        super().__init__(inner)
        object.__setattr__(self, "rank", inner.rank)


class Prod(Obj):
    __slots__ = ()
    conn = None
    left = _arg(0)
    right = _arg(1)

    def __init__(self, left, right):
        super().__init__(left, right)
        object.__setattr__(self, "rank", left.rank + right.rank)


class Ot(Prod):
    __slots__ = ()
    conn = OT


class Par(Prod):
    __slots__ = ()
    conn = PAR


def prod(conn, left, right):
    return Ot(left, right) if conn == OT else Par(left, right)


def rank(x, ranks=None):
    """Rank of an object: the sum of its generators' ranks.

    ``ranks`` maps generator names to positive integers; missing names and
    the default assignment count 1.
    """
    if not ranks:
        return x.rank
    if isinstance(x, Prod):
        return rank(x.left, ranks) + rank(x.right, ranks)
    if isinstance(x, FLeaf):
        return rank(x.inner, ranks)
    return ranks.get(x.name, 1)


def check_ranks(ranks):
    """Validate a rank assignment, returning it as a plain dict."""
    out = {}
    for name, value in dict(ranks or {}).items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ValueError(f"rank of {name!r} must be a positive integer, got {value!r}")
        out[str(name)] = value
    return out


def leaves(x):
    if isinstance(x, Prod):
        return leaves(x.left) + leaves(x.right)
    return [x]


def is_functor_object(x):
    if isinstance(x, Prod):
        return is_functor_object(x.left) and is_functor_object(x.right)
    return isinstance(x, FLeaf)


TERMINAL = Leaf("*")


def collapse(x):
    """Replace every ``F(X)`` by ``F(*)``: the image in the terminal category."""
    if isinstance(x, Prod):
        return prod(x.conn, collapse(x.left), collapse(x.right))
    if isinstance(x, FLeaf):
        return FLeaf(TERMINAL)
    return x


# --------------------------------------------------------------- morphisms


class Mor(Node):
    __slots__ = ()

    def __str__(self):
        return render(self)


class Id(Mor):
    __slots__ = ()
    obj = _arg(0)


class Coherence(Mor):
    """A component of one of the six structural transformations."""

    __slots__ = ()
    token = None
    a = _arg(0)
    b = _arg(1)
    c = _arg(2)

    def __init__(self, a, b, c):
        super().__init__(a, b, c)

    def endpoints(self):
        raise NotImplementedError

    def inverse(self):
        inv = INVERSE.get(type(self))
        return inv(*self._args) if inv else None


class Alpha(Coherence):
    __slots__ = ()
    token = "al"

    def endpoints(self):
        a, b, c = self._args
        return Ot(a, Ot(b, c)), Ot(Ot(a, b), c)


class AlphaInv(Coherence):
    __slots__ = ()
    token = "al'"

    def endpoints(self):
        a, b, c = self._args
        return Ot(Ot(a, b), c), Ot(a, Ot(b, c))


class AlphaBar(Coherence):
    __slots__ = ()
    token = "ap"

    def endpoints(self):
        a, b, c = self._args
        return Par(a, Par(b, c)), Par(Par(a, b), c)


class AlphaBarInv(Coherence):
    __slots__ = ()
    token = "ap'"

    def endpoints(self):
        a, b, c = self._args
        return Par(Par(a, b), c), Par(a, Par(b, c))


class DeltaL(Coherence):
    __slots__ = ()
    token = "dl"

    def endpoints(self):
        a, b, c = self._args
        return Ot(a, Par(b, c)), Par(Ot(a, b), c)


class DeltaR(Coherence):
    __slots__ = ()
    token = "dr"

    def endpoints(self):
        a, b, c = self._args
        return Ot(Par(a, b), c), Par(a, Ot(b, c))


COHERENCE = {cls.token: cls for cls in (Alpha, AlphaInv, AlphaBar, AlphaBarInv, DeltaL, DeltaR)}
INVERSE = {Alpha: AlphaInv, AlphaInv: Alpha, AlphaBar: AlphaBarInv, AlphaBarInv: AlphaBar}


class Comp(Mor):
    """``g . f``: first ``f`` then ``g``."""

    __slots__ = ()
    g = _arg(0)
    f = _arg(1)


class Tens(Mor):
    __slots__ = ()
    conn = None
    f = _arg(0)
    g = _arg(1)


class TensOt(Tens):
    __slots__ = ()
    conn = OT


class TensPar(Tens):
    __slots__ = ()
    conn = PAR


def tens(conn, f, g):
    return TensOt(f, g) if conn == OT else TensPar(f, g)


class Mu(Mor):
    """Multiplicative structure ``F(x) * F(y) -> F(x*y)``."""

    __slots__ = ()
    x = _arg(0)
    y = _arg(1)


class DeltaF(Mor):
    """Comultiplicative structure ``F(x@y) -> F(x) @ F(y)``."""

    __slots__ = ()
    x = _arg(0)
    y = _arg(1)


class Lift(Mor):
    """``F[f]`` for a plain morphism ``f``."""

    __slots__ = ()
    f = _arg(0)


def substitute(t, mapping):
    """Replace generator leaves of an object or term by the objects in ``mapping``."""
    if isinstance(t, Leaf):
        return mapping.get(t.name, t)
    if isinstance(t, Node):
        return type(t)(*(substitute(a, mapping) for a in t._args))
    return t


def compose(*terms):
    """``compose(h, g, f)`` is ``h . g . f``, right-nested."""
    out = terms[-1]
    for t in reversed(terms[:-1]):
        out = Comp(t, out)
    return out


# ------------------------------------------------------------------ render


def render(t):
    if isinstance(t, Leaf):
        return t.name
    if isinstance(t, FLeaf):
        return f"F({render(t.inner)})"
    if isinstance(t, Prod):
        return f"({render(t.left)}{SYMBOL[t.conn]}{render(t.right)})"
    if isinstance(t, Id):
        return f"id{{{render(t.obj)}}}"
    if isinstance(t, Coherence):
        return f"{t.token}{{{','.join(render(o) for o in t._args)}}}"
    if isinstance(t, Comp):
        return f"({render(t.g)} . {render(t.f)})"
    if isinstance(t, Tens):
        return f"({render(t.f)} {SYMBOL[t.conn]} {render(t.g)})"
    if isinstance(t, Mu):
        return f"mu{{{render(t.x)},{render(t.y)}}}"
    if isinstance(t, DeltaF):
        return f"cm{{{render(t.x)},{render(t.y)}}}"
    if isinstance(t, Lift):
        return f"F[{render(t.f)}]"
    raise TypeError(f"cannot render {t!r}")


# ------------------------------------------------------------------- parse


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def ident(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if start == self.pos or self.text[start].isdigit():
            raise ParseError("expected identifier", start)
        return self.text[start:self.pos]

    def lookahead_word(self):
        self.skip()
        end = self.pos
        while end < len(self.text) and (self.text[end].isalnum() or self.text[end] == "_"):
            end += 1
        word = self.text[self.pos:end]
        while end < len(self.text) and self.text[end].isspace():
            end += 1
        nxt = self.text[end] if end < len(self.text) else ""
        return word, nxt

    def done(self):
        if self.peek():
            raise ParseError(f"unexpected {self.peek()!r}", self.pos)

    # objects

    def atom(self, functor):
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            left = self.atom(functor)
            op = self.peek()
            if op == ")":
                self.pos += 1
                return left
            if op not in ("*", "@"):
                raise ParseError("expected '*' or '@'", self.pos)
            self.pos += 1
            right = self.atom(functor)
            self.expect(")")
            return prod(OT if op == "*" else PAR, left, right)
        if ch == "*":
            self.pos += 1
            if functor:
                raise ParseError("functor-mode leaves must be F(...)", start)
            return TERMINAL
        word, nxt = self.lookahead_word()
        if word == "F" and nxt == "(":
            if not functor:
                raise ModeError(f"F(...) at position {start} requires functor mode")
            self.ident()
            self.expect("(")
            inner = self.top_object(False)
            self.expect(")")
            return FLeaf(inner)
        name = self.ident()
        if functor:
            raise ParseError("functor-mode leaves must be F(...)", start)
        return Leaf(name)

    def top_object(self, functor):
        left = self.atom(functor)
        op = self.peek()
        if op in ("*", "@"):
            self.pos += 1
            right = self.atom(functor)
            return prod(OT if op == "*" else PAR, left, right)
        return left

    # morphisms

    def objects(self, functor, count):
        self.expect("{")
        out = [self.top_object(functor)]
        for _ in range(count - 1):
            self.expect(",")
            out.append(self.top_object(functor))
        self.expect("}")
        return out

    def mor_atom(self, functor):
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            term = self.mor_binary(functor)
            self.expect(")")
            return term
        word, nxt = self.lookahead_word()
        if word == "F" and nxt == "[":
            if not functor:
                raise ModeError(f"F[...] at position {start} requires functor mode")
            self.ident()
            self.expect("[")
            inner = self.mor_top(False)
            self.expect("]")
            return Lift(inner)
        name = self.ident()
        if self.peek() == "'":
            self.pos += 1
            name += "'"
        if name == "id":
            return Id(*self.objects(functor, 1))
        if name in COHERENCE:
            return COHERENCE[name](*self.objects(functor, 3))
        if name in ("mu", "cm"):
            if not functor:
                raise ModeError(f"{name}{{...}} at position {start} requires functor mode")
            x, y = self.objects(False, 2)
            return Mu(x, y) if name == "mu" else DeltaF(x, y)
        raise ParseError(f"unknown morphism constructor {name!r}", start)

    def mor_binary(self, functor):
        left = self.mor_atom(functor)
        op = self.peek()
        if op == ")":
            return left
        if op not in (".", "*", "@"):
            raise ParseError("expected '.', '*' or '@'", self.pos)
        self.pos += 1
        right = self.mor_atom(functor)
        if op == ".":
            return Comp(left, right)
        return TensOt(left, right) if op == "*" else TensPar(left, right)

    def mor_top(self, functor):
        left = self.mor_atom(functor)
        if self.peek() in (".", "*", "@"):
            op = self.peek()
            self.pos += 1
            right = self.mor_atom(functor)
            if op == ".":
                return Comp(left, right)
            return TensOt(left, right) if op == "*" else TensPar(left, right)
        return left


def parse_object(text, functor=False):
    """Parse an object; outermost parentheses may be omitted."""
    p = _Parser(text)
    if not p.peek():
        raise ParseError("empty input", 0)
    x = p.top_object(functor)
    p.done()
    return x


def parse_morphism(text, mode="plain"):
    """Parse a morphism term.  ``mode`` is ``"plain"`` or ``"functor"``."""
    if mode not in ("plain", "functor"):
        raise ValueError(f"unknown mode {mode!r}")
    p = _Parser(text)
    if not p.peek():
        raise ParseError("empty input", 0)
    t = p.mor_top(mode == "functor")
    p.done()
    return t


# --------------------------------------------------------------- typecheck


def typecheck(term, terminal=False):
    """Return ``(source, target)`` of a term or raise :class:`TypeMismatch`.

    With ``terminal=True`` every functor image is read in the terminal
    category, so all ``F(X)`` collapse to ``F(*)``.
    """
    return _typecheck(term, terminal)


@lru_cache(maxsize=1 << 18)
def _typecheck(t, terminal):
    if isinstance(t, Id):
        x = collapse(t.obj) if terminal else t.obj
        return x, x
    if isinstance(t, Coherence):
        s, g = t.endpoints()
        return (collapse(s), collapse(g)) if terminal else (s, g)
    if isinstance(t, Mu):
        if terminal:
            star = FLeaf(TERMINAL)
            return Ot(star, star), star
        return Ot(FLeaf(t.x), FLeaf(t.y)), FLeaf(Ot(t.x, t.y))
    if isinstance(t, DeltaF):
        if terminal:
            star = FLeaf(TERMINAL)
            return star, Par(star, star)
        return FLeaf(Par(t.x, t.y)), Par(FLeaf(t.x), FLeaf(t.y))
    if isinstance(t, Lift):
        s, g = _sub(t.f, False, "F")
        if terminal:
            return FLeaf(TERMINAL), FLeaf(TERMINAL)
        return FLeaf(s), FLeaf(g)
    if isinstance(t, Comp):
        s1, t1 = _sub(t.f, terminal, "f")
        s2, t2 = _sub(t.g, terminal, "g")
        if t1 != s2:
            raise TypeMismatch(
                f"cannot compose: {render(t1)} is not {render(s2)}"
            )
        return s1, t2
    if isinstance(t, Tens):
        s1, t1 = _sub(t.f, terminal, "l")
        s2, t2 = _sub(t.g, terminal, "r")
        return prod(t.conn, s1, s2), prod(t.conn, t1, t2)
    raise TypeMismatch(f"not a morphism term: {t!r}")


def _sub(t, terminal, label):
    try:
        return _typecheck(t, terminal)
    except TypeMismatch as e:
        raise TypeMismatch(e.message, (label,) + e.path) from None


def source(t, terminal=False):
    return typecheck(t, terminal)[0]


def target(t, terminal=False):
    return typecheck(t, terminal)[1]
