"""Coherence for unitless linearly distributive categories and Frobenius functors."""

from .errors import (
    AlphabetMismatch,
    DomainError,
    InternalTypeError,
    LDCError,
    LengthMismatch,
    ModeError,
    NotSpiderTyped,
    ParseError,
    TypeMismatch,
    UnknownVertex,
    VerificationFailure,
)
from .analysis import AtomicFactor, BaseSplit, DBase, atomize, build_kappa, build_tau, eval_hlr
from .frobenius import (
    f_equal,
    f_normalize,
    f_synthesize,
    multiplicative_of,
    spider_check,
    spider_emit,
)
from .normalizer import (
    CLeaf,
    CNode,
    Mode,
    NoMorphism,
    cf_from_json,
    cf_to_json,
    equal,
    hom_exists,
    normalize,
    precompose,
    reify,
    synthesize,
)
from .oracle import enumerate_paths, reachable, verify_frontier, verify_suite
from .polytope import Frontier, build_graph, export_graph, frontier_vertices, parse_frontier
from .syntax import parse_morphism, parse_object, rank, render, typecheck
from .unitscx import run_counterexample

__version__ = "0.1.0"
