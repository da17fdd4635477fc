"""A linearly distributive category of bimodules where units break the adjunction.

Let ``S = C[x,y]/(x^2, y^2, xy)`` with basis ``1, x, y``.  Bimodules over
``S`` carry two monoidal products: ``(x)`` is the tensor over ``S`` (a
quotient of the plain tensor) and ``(+)`` is the cotensor over the dual
coalgebra ``S*`` (a subspace of it).  ``L = S* (x) -`` and ``R = S (+) -``
come with a counit and unit built from the distributors and the unit laws.
This module computes everything with exact rational matrices and exhibits
an element on which the two maps ``LRLR(S) -> LR(S)`` differ, so the
counit is not an honest transformation of the expected kind.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy import Matrix, eye, zeros

from .errors import VerificationFailure

SCALARS = ("1", "x", "y")
GENS = ("x", "y")

# structure constants of S: PRODUCT[a][b] is the basis index of a*b, or None for 0
PRODUCT = {
    "1": {"1": 0, "x": 1, "y": 2},
    "x": {"1": 1, "x": None, "y": None},
    "y": {"1": 2, "x": None, "y": None},
}


def _mult_matrix(s):
    m = zeros(3, 3)
    for j, b in enumerate(SCALARS):
        k = PRODUCT[s][b]
        if k is not None:
            m[k, j] = 1
    return m


@dataclass
class Bimodule:
    """Finite-dimensional ``S``-bimodule with actions of ``1, x, y`` as matrices."""

    name: str
    labels: list
    left: dict
    right: dict
    info: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self):
        return len(self.labels)

    def check(self):
        for s in SCALARS:
            for t in SCALARS:
                k = PRODUCT[s][t]
                st = zeros(self.dim, self.dim) if k is None else self.left[SCALARS[k]]
                if self.left[s] * self.left[t] != st:
                    raise VerificationFailure(f"left action of {self.name} is not associative")
                st = zeros(self.dim, self.dim) if k is None else self.right[SCALARS[k]]
                if self.right[t] * self.right[s] != st:
                    raise VerificationFailure(f"right action of {self.name} is not associative")
                if self.left[s] * self.right[t] != self.right[t] * self.left[s]:
                    raise VerificationFailure(f"actions of {self.name} do not commute")
        return self


@dataclass
class LinMap:
    source: Bimodule
    target: Bimodule
    matrix: Matrix

    def __call__(self, v):
        return self.matrix * v

    def __matmul__(self, other):
        """``self @ other`` is ``self`` after ``other``."""
        if other.target.labels != self.source.labels:
            raise VerificationFailure(f"cannot compose {other.target.name} with {self.source.name}")
        return LinMap(other.source, self.target, self.matrix * other.matrix)

    def check(self):
        """Assert the map commutes with both actions."""
        for s in GENS:
            if self.matrix * self.source.left[s] != self.target.left[s] * self.matrix:
                raise VerificationFailure(f"map {self.source.name} -> {self.target.name} breaks the left action")
            if self.matrix * self.source.right[s] != self.target.right[s] * self.matrix:
                raise VerificationFailure(f"map {self.source.name} -> {self.target.name} breaks the right action")
        return self


def regular():
    acts = {s: _mult_matrix(s) for s in SCALARS}
    return Bimodule("S", list(SCALARS), acts, dict(acts)).check()


def dual():
    """``S*`` with ``(s.f.t)(a) = f(s a t)``."""
    acts = {s: _mult_matrix(s).T for s in SCALARS}
    return Bimodule("S*", [f"{s}*" for s in SCALARS], acts, dict(acts)).check()


def identity(m):
    return LinMap(m, m, eye(m.dim))


def _kron(a, b):
    rows, cols = a.rows * b.rows, a.cols * b.cols
    out = zeros(rows, cols)
    for i in range(a.rows):
        for j in range(a.cols):
            if a[i, j] != 0:
                out[i * b.rows:(i + 1) * b.rows, j * b.cols:(j + 1) * b.cols] = a[i, j] * b
    return out


def _plain_labels(m, n):
    return [f"{a}(x){b}" for a in m.labels for b in n.labels]


def _relations(m, n):
    """Columns spanning ``{(a.s)(x)b - a(x)(s.b)}`` for every scalar ``s``."""
    blocks = [_kron(m.right[s], eye(n.dim)) - _kron(eye(m.dim), n.left[s]) for s in SCALARS]
    return Matrix.hstack(*blocks)


def tensor_over_S(m, n):
    """``m (x)_S n``: the plain tensor modulo the balancing relations.

    The quotient basis is the set of non-pivot coordinates of the reduced
    relation matrix, kept in lexicographic order.
    """
    rel = _relations(m, n)
    dim = m.dim * n.dim
    reduced, pivots = rel.T.rref()
    free = [j for j in range(dim) if j not in pivots]
    proj = zeros(len(free), dim)
    where = {j: k for k, j in enumerate(free)}
    for j in free:
        proj[where[j], j] = 1
    for row, p in enumerate(pivots):
        for j in free:
            proj[where[j], p] = -reduced[row, j]
    section = zeros(dim, len(free))
    for j in free:
        section[j, where[j]] = 1
    if proj * rel != zeros(len(free), rel.cols):
        raise VerificationFailure("projection does not kill the relations")
    plain = _plain_labels(m, n)
    left = {s: proj * _kron(m.left[s], eye(n.dim)) * section for s in SCALARS}
    right = {s: proj * _kron(eye(m.dim), n.right[s]) * section for s in SCALARS}
    for s in SCALARS:
        if proj * _kron(m.left[s], eye(n.dim)) * rel != zeros(len(free), rel.cols):
            raise VerificationFailure("left action does not descend to the quotient")
        if proj * _kron(eye(m.dim), n.right[s]) * rel != zeros(len(free), rel.cols):
            raise VerificationFailure("right action does not descend to the quotient")
    info = {"kind": "tensor", "factors": (m, n), "proj": proj, "section": section, "relations": rel}
    return Bimodule(f"({m.name} (x) {n.name})", [f"[{plain[j]}]" for j in free], left, right, info).check()


def cotensor_over_Sdual(m, n):
    """``m (+) n``: plain tensors ``t`` with ``(a.s)(x)b = a(x)(s.b)`` for all ``s``.

    This is the kernel of the stacked comparison map, one block per scalar.
    """
    dim = m.dim * n.dim
    compare = Matrix.vstack(*[
        _kron(m.right[s], eye(n.dim)) - _kron(eye(m.dim), n.left[s]) for s in SCALARS
    ])
    basis = compare.nullspace()
    incl = Matrix.hstack(*basis) if basis else zeros(dim, 0)
    retract = (incl.T * incl).inv() * incl.T if basis else zeros(0, dim)
    left, right = {}, {}
    for s in SCALARS:
        for acts, op in ((left, _kron(m.left[s], eye(n.dim))), (right, _kron(eye(m.dim), n.right[s]))):
            image = op * incl
            coords = retract * image
            if incl * coords != image:
                raise VerificationFailure("cotensor is not closed under the actions")
            acts[s] = coords
    plain = _plain_labels(m, n)
    labels = [_describe(incl[:, k], plain) for k in range(incl.cols)]
    info = {"kind": "cotensor", "factors": (m, n), "incl": incl, "retract": retract, "compare": compare}
    return Bimodule(f"({m.name} (+) {n.name})", labels, left, right, info).check()


def _describe(v, labels):
    terms = []
    for coef, label in zip(v, labels):
        if coef == 0:
            continue
        terms.append(label if coef == 1 else f"{coef}*{label}")
    return " + ".join(terms) if terms else "0"


def _into_cotensor(target, v):
    """Coordinates in a cotensor of a plain vector that must lie in it."""
    incl, retract = target.info["incl"], target.info["retract"]
    if target.info["compare"] * v != zeros(target.info["compare"].rows, v.cols):
        raise VerificationFailure(f"vector does not satisfy the equations of {target.name}")
    coords = retract * v
    if incl * coords != v:
        raise VerificationFailure(f"vector is not in {target.name}")
    return coords


def _from_tensor(source, plain_map):
    """Matrix of a map out of a quotient, given on the plain tensor; checks it descends."""
    rel = source.info["relations"]
    if plain_map * rel != zeros(plain_map.rows, rel.cols):
        raise VerificationFailure(f"map out of {source.name} is not balanced")
    return plain_map * source.info["section"]


def tensor_map(f, g):
    """``f (x) g`` between tensors over ``S``."""
    src = tensor_over_S(f.source, g.source)
    tgt = tensor_over_S(f.target, g.target)
    plain = tgt.info["proj"] * _kron(f.matrix, g.matrix)
    return LinMap(src, tgt, _from_tensor(src, plain)).check()


def cotensor_map(f, g):
    """``f (+) g`` between cotensors."""
    src = cotensor_over_Sdual(f.source, g.source)
    tgt = cotensor_over_Sdual(f.target, g.target)
    image = _kron(f.matrix, g.matrix) * src.info["incl"]
    return LinMap(src, tgt, _into_cotensor(tgt, image)).check()


def delta_left(a, b, c):
    """``a (x) (b (+) c) -> (a (x) b) (+) c``."""
    bc = cotensor_over_Sdual(b, c)
    src = tensor_over_S(a, bc)
    ab = tensor_over_S(a, b)
    tgt = cotensor_over_Sdual(ab, c)
    plain = _kron(ab.info["proj"], eye(c.dim)) * _kron(eye(a.dim), bc.info["incl"])
    image = _from_tensor(src, plain)
    return LinMap(src, tgt, _into_cotensor(tgt, image)).check()


def delta_right(a, b, c):
    """``(a (+) b) (x) c -> a (+) (b (x) c)``."""
    ab = cotensor_over_Sdual(a, b)
    src = tensor_over_S(ab, c)
    bc = tensor_over_S(b, c)
    tgt = cotensor_over_Sdual(a, bc)
    plain = _kron(eye(a.dim), bc.info["proj"]) * _kron(ab.info["incl"], eye(c.dim))
    image = _from_tensor(src, plain)
    return LinMap(src, tgt, _into_cotensor(tgt, image)).check()


def tensor_right_unit(m):
    """``m (x) S -> m``, ``a (x) s |-> a.s``."""
    src = tensor_over_S(m, regular())
    plain = Matrix.hstack(*[m.right[s][:, i] for i in range(m.dim) for s in SCALARS])
    return LinMap(src, m, _from_tensor(src, plain)).check()


def tensor_left_unit(m):
    """``S (x) m -> m``, ``s (x) a |-> s.a``."""
    src = tensor_over_S(regular(), m)
    plain = Matrix.hstack(*[m.left[s][:, i] for s in SCALARS for i in range(m.dim)])
    return LinMap(src, m, _from_tensor(src, plain)).check()


def cotensor_left_unit(m):
    """``S* (+) m -> m``, ``f (x) a |-> f(1) a``."""
    src = cotensor_over_Sdual(dual(), m)
    counit = Matrix([[1, 0, 0]])
    return LinMap(src, m, _kron(counit, eye(m.dim)) * src.info["incl"]).check()


def cotensor_right_unit(m):
    """``m (+) S* -> m``, ``a (x) f |-> f(1) a``."""
    src = cotensor_over_Sdual(m, dual())
    counit = Matrix([[1, 0, 0]])
    return LinMap(src, m, _kron(eye(m.dim), counit) * src.info["incl"]).check()


def invert(f):
    if f.matrix.rows != f.matrix.cols or f.matrix.det() == 0:
        raise VerificationFailure(f"{f.source.name} -> {f.target.name} is not invertible")
    return LinMap(f.target, f.source, f.matrix.inv()).check()


def L(m):
    return tensor_over_S(dual(), m)


def R(m):
    return cotensor_over_Sdual(regular(), m)


def L_map(f):
    return tensor_map(identity(dual()), f)


def R_map(f):
    return cotensor_map(identity(regular()), f)


def counit(a):
    """``LR(a) -> a``: distribute, then drop both units."""
    d = delta_left(dual(), regular(), a)
    drop = cotensor_map(tensor_right_unit(dual()), identity(a))
    return cotensor_left_unit(a) @ drop @ d


def unit(a):
    """``a -> RL(a)``: insert both units, then distribute."""
    add = invert(tensor_left_unit(a))
    swap = tensor_map(invert(cotensor_right_unit(regular())), identity(a))
    d = delta_right(regular(), dual(), a)
    return d @ swap @ add


def basis_vector(m, label):
    v = zeros(m.dim, 1)
    v[m.labels.index(label), 0] = 1
    return v


def pure_tensor(m, n, u, v, over):
    """Class of ``u (x) v`` in ``over``, a tensor or cotensor of ``m`` and ``n``."""
    plain = _kron(u, v)
    if over.info["kind"] == "tensor":
        return over.info["proj"] * plain
    return _into_cotensor(over, plain)


@dataclass
class CounterexampleReport:
    element: str
    counit_then: Matrix
    lifted_counit: Matrix
    expected_nonzero: Matrix
    dims: dict
    snake_ok: bool
    matrices_differ: bool = True

    @property
    def differs(self):
        return self.counit_then != self.lifted_counit

    def to_json(self):
        return {
            "element": self.element,
            "epsilon_LR": [str(c) for c in self.counit_then],
            "LR_epsilon": [str(c) for c in self.lifted_counit],
            "epsilon_LR_value": _name(self.counit_then, self.expected_nonzero),
            "LR_epsilon_value": _name(self.lifted_counit, self.expected_nonzero),
            "differ": self.differs,
            "matrices_differ": self.matrices_differ,
            "dims": self.dims,
            "snake_identity": self.snake_ok,
        }


def _key(v):
    return tuple(v)


def _name(v, nonzero):
    if all(c == 0 for c in v):
        return "0"
    if v == nonzero:
        return "[x*(x)(y(x)y)]"
    return "other"


def run_counterexample():
    """Evaluate both maps ``LRLR(S) -> LR(S)`` on ``[x*(x)(x(x)[x*(x)(y(x)y)])]``."""
    s, sd = regular(), dual()
    rs = R(s)
    lrs = L(rs)
    rlrs = R(lrs)
    lrlrs = L(rlrs)

    vx, vy = basis_vector(s, "x"), basis_vector(s, "y")
    fx = basis_vector(sd, "x*")
    yy = pure_tensor(s, s, vy, vy, rs)
    inner = pure_tensor(sd, rs, fx, yy, lrs)
    if all(c == 0 for c in inner):
        raise VerificationFailure("[x*(x)(y(x)y)] vanishes in LR(S)")
    middle = pure_tensor(s, lrs, vx, inner, rlrs)
    element = pure_tensor(sd, rlrs, fx, middle, lrlrs)

    c1 = counit(lrs)
    c2 = L_map(R_map(counit(s)))
    v1, v2 = c1(element), c2(element)
    zero = inner.zeros(*inner.shape)
    if {_key(v1), _key(v2)} != {_key(zero), _key(inner)}:
        raise VerificationFailure("the two composites do not give {0, [x*(x)(y(x)y)]} on the element")

    ls = L(s)
    snake = counit(ls) @ L_map(unit(s))
    snake_ok = snake.matrix == eye(ls.dim)
    if not snake_ok:
        raise VerificationFailure("snake identity fails")

    dims = {
        "S(x)S": tensor_over_S(s, s).dim,
        "S(+)S": rs.dim,
        "LR(S)": lrs.dim,
        "RLR(S)": rlrs.dim,
        "LRLR(S)": lrlrs.dim,
    }
    if c1.matrix == c2.matrix:
        raise VerificationFailure("the two composites agree as matrices")
    return CounterexampleReport("[x*(x)(x(x)[x*(x)(y(x)y)])]", v1, v2, inner, dims, snake_ok, True)
