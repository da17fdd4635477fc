"""Coherence for a Frobenius LD-functor ``F``.

Functor-mode objects are trees whose leaves are images ``F(X)``.  Besides the
structural generators there are ``mu{X,Y}: F(X)*F(Y) -> F(X*Y)``,
``cm{X,Y}: F(X@Y) -> F(X)@F(Y)`` and lifted plain terms ``F[f]``.

Canonical forms reuse :class:`~ldc.normalizer.CNode` with one extra base,
:class:`~ldc.analysis.DBase` (``cm . F[k]``), and one extra leaf form,
:class:`FLift`: a plain canonical form ``g`` lifted along a multiplicative
form, denoting ``F[g] . m``.
"""

from __future__ import annotations

from .analysis import (
    LETTER_SHAPE,
    AtomicFactor,
    BaseSplit,
    DBase,
    _hlr,
    atomize,
    split,
)
from .errors import DomainError, InternalTypeError, NotSpiderTyped, TypeMismatch, VerificationFailure
from .normalizer import (
    CLeaf,
    CNode,
    Mode,
    NoMorphism,
    Rewriter,
    Synthesizer,
    cf_target,
    identity_form,
    reify,
    REWRITER,
)
from .syntax import (
    OT,
    PAR,
    TERMINAL,
    Alpha,
    AlphaBar,
    AlphaBarInv,
    AlphaInv,
    Coherence,
    Comp,
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
    TensOt,
    TensPar,
    _arg,
    compose,
    parse_object,
    prod,
    render,
    tens,
    typecheck,
)


# ----------------------------------------------------- multiplicative forms


def value(x):
    """The plain object obtained by reading ``*`` inside ``F``."""
    if isinstance(x, FLeaf):
        return x.inner
    if isinstance(x, Ot):
        return Ot(value(x.left), value(x.right))
    raise TypeMismatch(f"{render(x)} is not multiplicative")


def is_multiplicative(x):
    if isinstance(x, FLeaf):
        return True
    return isinstance(x, Ot) and is_multiplicative(x.left) and is_multiplicative(x.right)


class MultForm(Node):
    """The composite of ``mu``'s collapsing a tensor tree of images to one image."""

    __slots__ = ()
    source = _arg(0)

    @property
    def target(self):
        return FLeaf(value(self.source))

    def term(self):
        return mult_term(self.source)


def mult_term(x):
    if isinstance(x, FLeaf):
        return Id(x)
    return Comp(Mu(value(x.left), value(x.right)), TensOt(mult_term(x.left), mult_term(x.right)))


def multiplicative_of(x):
    """The multiplicative form with source ``x``, or ``None`` if ``x`` has a par."""
    return MultForm(x) if is_multiplicative(x) else None


class FLift(Node):
    """``F[g] . m`` for a multiplicative form ``m`` and a plain canonical form ``g``."""

    __slots__ = ()
    mult = _arg(0)
    g = _arg(1)

    @property
    def source(self):
        return self.mult.source

    @property
    def target(self):
        return FLeaf(cf_target(self.g))

    def reify(self):
        return Comp(Lift(reify(self.g)), self.mult.term())

    def to_json(self):
        from .normalizer import cf_to_json

        return {"kind": "flift", "mult": {"source": render(self.mult.source)}, "g": cf_to_json(self.g)}


class FId(Node):
    """Identity on an object that is neither a product nor an image; never produced."""

    __slots__ = ()
    obj = _arg(0)


def flift_from_json(data):
    from .normalizer import cf_from_json

    if data["kind"] != "flift":
        raise ValueError(f"unknown canonical form kind {data['kind']!r}")
    return FLift(MultForm(parse_object(data["mult"]["source"], True)), cf_from_json(data["g"]))


def f_identity(x):
    """Canonical form of the identity on a functor-mode object."""
    if isinstance(x, Prod):
        return CNode(x.conn, (), (), BaseSplit(x.left, x.right, x.conn), f_identity(x.left), f_identity(x.right))
    if isinstance(x, FLeaf):
        return FLift(MultForm(x), identity_form(x.inner))
    return FId(x)


# ---------------------------------------------------------------- synthesis


class FSynthesizer(Synthesizer):
    def __init__(self, mode=Mode.FULL, ranks=None):
        super().__init__(mode, ranks)
        self.plain = Synthesizer(mode, ranks)

    def leaf(self, src, tgt):
        if not isinstance(tgt, FLeaf):
            return NoMorphism(f"{render(tgt)} is not a functor-mode object")
        m = multiplicative_of(src)
        if m is None:
            return NoMorphism(f"{render(src)} is not multiplicative")
        g = self.plain(value(src), tgt.inner)
        if not g:
            return g
        return FLift(m, g)

    def leaf_base(self, src, conn, need):
        if conn != PAR or not isinstance(src, FLeaf):
            return NoMorphism(f"{render(src)} cannot map to a tensor split")
        found = self.plain.drill(src.inner, PAR, need)
        if not found:
            return found
        word, vector, base = found
        return DBase(word, vector, base)


def f_synthesize(src, tgt, mode=Mode.FULL, ranks=None):
    """Canonical form between functor-mode objects, or :class:`NoMorphism`."""
    return FSynthesizer(mode, ranks)(src, tgt)


# ------------------------------------------------------------------ rewrite


def _is_identity(cf):
    return cf == identity_form(cf_target(cf))


class FRewriter(Rewriter):
    def __init__(self, plain=REWRITER):
        super().__init__()
        self.plain = plain

    def _precompose(self, cf, h):
        if isinstance(cf, FLift):
            src, g = self.mult_push(cf.mult.source, h)
            return FLift(MultForm(src), self.plain.precompose_all(cf.g, atomize(g)))
        return super()._precompose(cf, h)

    def mult_push(self, x, h):
        """Return ``(x', g)`` with ``m(x) . h = F[g] . m(x')``."""
        if h.whisker:
            side = h.whisker[0][0]
            inner = h.peel()
            if side == "L":
                src, g = self.mult_push(x.left, inner)
                return Ot(src, x.right), TensOt(g, Id(value(x.right)))
            src, g = self.mult_push(x.right, inner)
            return Ot(x.left, src), TensOt(Id(value(x.left)), g)
        c = h.core
        if isinstance(c, Lift):
            return FLeaf(typecheck(c.f)[0]), c.f
        if isinstance(c, Mu):
            return Ot(FLeaf(c.x), FLeaf(c.y)), Id(Ot(c.x, c.y))
        if isinstance(c, Alpha):
            return Ot(c.a, Ot(c.b, c.c)), Alpha(value(c.a), value(c.b), value(c.c))
        if isinstance(c, AlphaInv):
            return Ot(Ot(c.a, c.b), c.c), AlphaInv(value(c.a), value(c.b), value(c.c))
        raise InternalTypeError(f"cannot push {h} into a multiplicative form")

    def push_base_extra(self, base, h):
        c = h.core
        if isinstance(base, BaseSplit):
            if isinstance(c, DeltaF) and not h.whisker:
                return (), (), DBase((), (), BaseSplit(c.x, c.y, PAR)), [], []
            raise InternalTypeError(f"no rewrite for {h} against base {base!r}")
        if h.whisker:
            raise InternalTypeError(f"whiskered {h} cannot reach an image base")
        if isinstance(c, Lift):
            _, l, r = _hlr(base.cbase, base.cword, base.cvector)
            start = CNode(PAR, base.cword, base.cvector, base.cbase, identity_form(l), identity_form(r))
            out = self.plain.precompose_all(start, atomize(c.f))
            rl = [] if _is_identity(out.left) else [AtomicFactor(Lift(reify(out.left)))]
            rr = [] if _is_identity(out.right) else [AtomicFactor(Lift(reify(out.right)))]
            return (), (), DBase(out.word, out.vector, out.base), rl, rr
        if isinstance(c, Mu) and base.cword:
            letter, a, w, rest = split(base.cword, base.cvector)
            _, lw, rw = _hlr(base.cbase, w, rest)
            inner = DBase(w, rest, base.cbase)
            if letter == "dl":
                return ("dl",), (FLeaf(a),), inner, [AtomicFactor(Mu(a, lw))], []
            if letter == "dr":
                return ("dr",), (FLeaf(a),), inner, [], [AtomicFactor(Mu(rw, a))]
        raise InternalTypeError(f"no rewrite for {h} against base {base!r}")

    def push_core_extra(self, letter, a, w, rest, base, c):
        if isinstance(c, DeltaF) and not w and isinstance(base, DBase):
            _, l, r = _hlr(base.cbase, base.cword, base.cvector)
            if letter == "ap":
                inner = DBase(("ap",) + base.cword, (c.x,) + base.cvector, base.cbase)
                return (), (), inner, [AtomicFactor(DeltaF(c.x, l))], []
            if letter == "ap'":
                inner = DBase(("ap'",) + base.cword, base.cvector + (c.y,), base.cbase)
                return (), (), inner, [], [AtomicFactor(DeltaF(r, c.y))]
        return None


F_REWRITER = FRewriter()


def f_precompose(cf, h):
    return F_REWRITER.precompose(cf, h)


def f_normalize(term):
    """Canonical form of a functor-mode term, computed by the rewrite engine."""
    _, tgt = typecheck(term)
    return F_REWRITER.precompose_all(f_identity(tgt), atomize(term))


def f_equal(f, g):
    if typecheck(f) != typecheck(g):
        return False
    return f_normalize(f) == f_normalize(g)


# ------------------------------------------------------------------ spiders

STAR = FLeaf(TERMINAL)


def power(conn, k, x=STAR):
    """Right-combed ``k``-fold power of ``x``."""
    out = x
    for _ in range(k - 1):
        out = prod(conn, x, out)
    return out


def mu_power(k):
    if k == 1:
        return Id(STAR)
    if k == 2:
        return Mu(TERMINAL, TERMINAL)
    return Comp(Mu(TERMINAL, TERMINAL), TensOt(Id(STAR), mu_power(k - 1)))


def delta_power(k):
    if k == 1:
        return Id(STAR)
    if k == 2:
        return DeltaF(TERMINAL, TERMINAL)
    return Comp(TensPar(Id(STAR), delta_power(k - 1)), DeltaF(TERMINAL, TERMINAL))


def spider_emit(m, n):
    """The normal form ``cm^(n) . mu^(m)`` from ``m`` tensored to ``n`` parred copies."""
    if m < 1 or n < 1:
        raise DomainError("spider arities must be at least 1")
    if m == 1:
        return delta_power(n)
    if n == 1:
        return mu_power(m)
    return Comp(delta_power(n), mu_power(m))


def comb_count(x, conn):
    """``k`` if ``x`` is the right-combed ``k``-fold power of ``F(*)``, else ``None``."""
    k = 1
    while isinstance(x, Prod) and x.conn == conn and x.left == STAR:
        x, k = x.right, k + 1
    return k if x == STAR else None


def spider_check(term):
    """Check a spider term against its normal form; return ``(m, n)``.

    The term is typed in the terminal category, where every image is
    ``F(*)``.  To compare it with the normal form it is lifted to the free
    Frobenius functor: each input wire gets its own variable, and an image
    is refined on demand when ``cm`` splits it.  The normal form is lifted
    to the same endpoint labels and both lifts are normalized.
    """
    try:
        src, tgt = typecheck(term, terminal=True)
    except TypeMismatch as e:
        raise NotSpiderTyped(str(e)) from None
    m, n = comb_count(src, OT), comb_count(tgt, PAR)
    if m is None or n is None:
        raise NotSpiderTyped(f"{render(src)} -> {render(tgt)} is not between powers of F(*)")
    lifted, s, t = lift_terminal(term, m)
    normal = lifted_normal_form(s, t)
    if not normal:
        raise VerificationFailure(f"no lifted normal form for {render(term)}: {normal.reason}")
    if f_normalize(lifted) != f_normalize(normal):
        raise VerificationFailure(f"{render(term)} differs from spider_emit({m}, {n})")
    return m, n


class _Lifter:
    def __init__(self):
        self.count = 0
        self.subst = {}

    def fresh(self):
        self.count += 1
        return Leaf(f"v{self.count}")

    def resolve(self, x):
        if isinstance(x, Leaf):
            y = self.subst.get(x.name)
            return self.resolve(y) if y is not None else x
        if isinstance(x, Prod):
            return prod(x.conn, self.resolve(x.left), self.resolve(x.right))
        if isinstance(x, FLeaf):
            return FLeaf(self.resolve(x.inner))
        return x

    def resolve_term(self, t):
        if isinstance(t, Id):
            return Id(self.resolve(t.obj))
        if isinstance(t, Coherence):
            return type(t)(*(self.resolve(o) for o in t._args))
        if isinstance(t, (Mu, DeltaF)):
            return type(t)(self.resolve(t.x), self.resolve(t.y))
        if isinstance(t, Lift):
            return Lift(self.resolve_term(t.f))
        if isinstance(t, Comp):
            return Comp(self.resolve_term(t.g), self.resolve_term(t.f))
        return tens(t.conn, self.resolve_term(t.f), self.resolve_term(t.g))

    def make_par(self, z):
        """Return ``(g, p, q)`` with ``g: z -> p @ q`` (``None`` for identity), refining variables."""
        if isinstance(z, Par):
            return None, z.left, z.right
        if isinstance(z, Leaf):
            v1, v2 = self.fresh(), self.fresh()
            self.subst[z.name] = Par(v1, v2)
            return None, v1, v2
        g, y1, y2 = self.make_par(z.right)
        step = DeltaL(z.left, y1, y2)
        g = step if g is None else Comp(step, TensOt(Id(z.left), g))
        return g, Ot(z.left, y1), y2

    def apply(self, x, whisker, core):
        if whisker:
            side, conn, _ = whisker[0]
            if side == "L":
                y, terms = self.apply(x.left, whisker[1:], core)
                return prod(conn, y, x.right), [tens(conn, t, Id(x.right)) for t in terms]
            y, terms = self.apply(x.right, whisker[1:], core)
            return prod(conn, x.left, y), [tens(conn, Id(x.left), t) for t in terms]
        if isinstance(core, Coherence):
            if isinstance(core, (Alpha, AlphaBar, DeltaL)):
                labelled = type(core)(x.left, x.right.left, x.right.right)
            else:
                labelled = type(core)(x.left.left, x.left.right, x.right)
            return typecheck(labelled)[1], [labelled]
        if isinstance(core, Mu):
            mu = Mu(x.left.inner, x.right.inner)
            return FLeaf(Ot(mu.x, mu.y)), [mu]
        if isinstance(core, DeltaF):
            g, p, q = self.make_par(x.inner)
            terms = [] if g is None else [Lift(g)]
            return Par(FLeaf(p), FLeaf(q)), terms + [DeltaF(p, q)]
        return x, []


def lift_terminal(term, m):
    """Lift a terminal-typed term to labelled images; return ``(term, source, target)``."""
    lifter = _Lifter()
    labels = [FLeaf(lifter.fresh()) for _ in range(m)]
    x = labels[-1]
    for leaf in reversed(labels[:-1]):
        x = Ot(leaf, x)
    src = x
    steps = []
    for h in atomize(term, terminal=True):
        x, terms = lifter.apply(x, h.whisker, h.core)
        steps.extend(terms)
    steps = [lifter.resolve_term(t) for t in steps]
    src, x = lifter.resolve(src), lifter.resolve(x)
    lifted = compose(*reversed(steps)) if steps else Id(src)
    return lifted, src, x


def _comb_labels(x, conn):
    out = []
    while isinstance(x, Prod) and x.conn == conn:
        out.append(x.left.inner)
        x = x.right
    out.append(x.inner)
    return out


def lifted_normal_form(src, tgt):
    """``cm-chain . F[g] . mu-chain`` between the given labelled powers."""
    xs, ys = _comb_labels(src, OT), _comb_labels(tgt, PAR)

    def mus(labels):
        if len(labels) == 1:
            return Id(FLeaf(labels[0])), labels[0]
        rest, v = mus(labels[1:])
        return Comp(Mu(labels[0], v), TensOt(Id(FLeaf(labels[0])), rest)), Ot(labels[0], v)

    def deltas(labels):
        if len(labels) == 1:
            return Id(FLeaf(labels[0])), labels[0]
        rest, v = deltas(labels[1:])
        return Comp(TensPar(Id(FLeaf(labels[0])), rest), DeltaF(labels[0], v)), Par(labels[0], v)

    mu, x = mus(xs)
    delta, y = deltas(ys)
    g = Synthesizer(Mode.FULL)(x, y)
    if not g:
        return g
    return compose(delta, Lift(reify(g)), mu)
