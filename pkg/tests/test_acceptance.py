"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` or directly as a script.
"""

import math
import sys
import time
from collections import deque

import pytest

from ldc.axioms import HEXAGONS, PENTAGONS, hexagon, pentagon
from ldc.frobenius import f_normalize, f_synthesize, spider_check, spider_emit
from ldc.generate import make_rng, random_functor_object, random_object, random_spider, random_term
from ldc.normalizer import Mode, hom_exists, normalize, synthesize
from ldc.oracle import all_frontiers, enumerate_paths, path_term, reachable, verify_suite
from ldc.polytope import build_graph, frontier_vertices, plain_moves
from ldc.syntax import OT, PAR, Prod, parse_object, typecheck
from ldc.unitscx import run_counterexample

SEED = 2024


def report(record, number, title, ok, elapsed, limit, detail=""):
    ok = ok and (limit is None or elapsed < limit)
    bound = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {elapsed:.2f}s{bound}"
    if detail:
        line += f" {detail}"
    record(line)
    return ok


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def test_01_pentagons(record):
    rng = make_rng(SEED)
    start = time.perf_counter()
    bad = 0
    for _ in range(50):
        objs = [random_object(rng, rng.randint(1, 3)) for _ in range(4)]
        for name in PENTAGONS:
            f, g = pentagon(name, *objs)
            if typecheck(f) != typecheck(g) or normalize(f) != normalize(g):
                bad += 1
    elapsed = time.perf_counter() - start
    assert report(record, 1, "pentagons P1-P8 on 50 quadruples", bad == 0, elapsed, 5, f"{bad} failures")


def test_02_hexagons(record):
    rng = make_rng(SEED + 1)
    start = time.perf_counter()
    bad = 0
    for _ in range(50):
        objs = [random_object(rng, rng.randint(1, 3)) for _ in range(3)]
        for name in HEXAGONS:
            f, g = hexagon(name, *objs)
            if typecheck(f) != typecheck(g) or f_normalize(f) != f_normalize(g):
                bad += 1
    elapsed = time.perf_counter() - start
    assert report(record, 2, "hexagons H1-H4 on 50 triples", bad == 0, elapsed, 5, f"{bad} failures")


def test_03_engine_agreement(record):
    rng = make_rng(SEED + 2)
    start = time.perf_counter()
    plain_bad = 0
    for _ in range(1000):
        f = random_term(rng, random_object(rng, rng.randint(1, 8)), 8)
        s, t = typecheck(f)
        plain_bad += normalize(f) != synthesize(s, t)
    plain_time = time.perf_counter() - start
    start = time.perf_counter()
    functor_bad = 0
    for _ in range(1000):
        f = random_term(rng, random_functor_object(rng, rng.randint(1, 7)), 7, functor=True)
        s, t = typecheck(f)
        functor_bad += f_normalize(f) != f_synthesize(s, t)
    functor_time = time.perf_counter() - start
    ok = plain_bad == 0 and functor_bad == 0 and plain_time < 30 and functor_time < 60
    assert report(
        record, 3, "engine agreement, 1000 plain + 1000 functor terms", ok, plain_time + functor_time, None,
        f"plain {plain_time:.2f}s/30s with {plain_bad} failures, functor {functor_time:.2f}s/60s with {functor_bad} failures",
    )


def test_04_oracle_suite(record):
    start = time.perf_counter()
    reports = verify_suite(6, modes=tuple(Mode))
    failures = sum(len(r.failures) for r in reports)
    counts_ok = all(r.vertex_count == catalan(len(r.frontier.replace("*", " ").replace("@", " ").split()) - 1)
                    for r in reports)
    per_size = sorted({(len(r.frontier) // 2 + 1, r.vertex_count) for r in reports})
    fig = len(frontier_vertices("A@B*C*D@E"))
    patterns = sum(2 ** (n - 1) for n in range(2, 7)) * 3
    elapsed = time.perf_counter() - start
    ok = failures == 0 and counts_ok and len(reports) == patterns and fig == 14
    assert report(
        record, 4, "verify-suite, 2-6 letters, all patterns and modes", ok, elapsed, 60,
        f"{len(reports)} reports, {failures} failures, counts {[c for _, c in per_size]}, A@B*C*D@E has {fig}",
    )


def test_05_pentagon_paths(record):
    start = time.perf_counter()
    g = build_graph("A@B*C@D")
    src, tgt = parse_object("(A@B)*(C@D)"), parse_object("A@((B*C)@D)")
    paths = enumerate_paths(g, src, tgt, 3)
    lengths = sorted(len(p) for p in paths)
    forms = {normalize(path_term(p)) for p in paths}
    elapsed = time.perf_counter() - start
    ok = lengths == [2, 3] and len(forms) == 1
    assert report(record, 5, "directed pentagon paths", ok, elapsed, 1, f"lengths {lengths}, {len(forms)} normal form")


def search(x, mode):
    """Every object reachable from ``x`` by whiskered moves, without a frontier."""
    seen, queue = {x}, deque([x])
    while queue:
        v = queue.popleft()
        for t in plain_moves(v, mode):
            w = typecheck(t)[1]
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def test_06_no_morphism(record):
    start = time.perf_counter()
    x, y = parse_object("(A*B)"), parse_object("(A@B)")
    ok = True
    for mode in Mode:
        ok &= not hom_exists(x, y, mode)
        ok &= y not in search(x, mode)
    elapsed = time.perf_counter() - start
    assert report(record, 6, "(A*B) -> (A@B) absent in every mode", ok, elapsed, 1)


def bracket_vector(x):
    """For each leaf, the rightmost leaf of the largest subtree starting there."""
    out = {}

    def walk(t, lo):
        if not isinstance(t, Prod):
            out.setdefault(lo, lo)
            return lo
        mid = walk(t.left, lo)
        hi = walk(t.right, mid + 1)
        out[lo] = max(out[lo], hi)
        return hi

    walk(x, 0)
    return [out[i] for i in sorted(out)]


def tamari_leq(x, y):
    """Whether ``x`` lies above ``y`` in the Tamari order oriented along ``al``."""
    return all(a >= b for a, b in zip(bracket_vector(x), bracket_vector(y)))


def test_07_laxmonoidal(record):
    start = time.perf_counter()
    reports = verify_suite(7, modes=(Mode.LAX_MONOIDAL,), ot_only=True)
    failures = sum(len(r.failures) for r in reports)
    tamari_bad = 0
    for n in range(2, 8):
        fr = next(fr for fr in all_frontiers(n) if PAR not in fr.gaps)
        g = build_graph(fr, Mode.LAX_MONOIDAL)
        for v in g.vertices:
            reach = reachable(g, v)
            for w in g.vertices:
                tamari_bad += (w in reach) != tamari_leq(v, w)
    elapsed = time.perf_counter() - start
    ok = failures == 0 and tamari_bad == 0 and len(reports) == 6
    assert report(
        record, 7, "lax monoidal suite up to 7 letters and Tamari order", ok, elapsed, 30,
        f"{failures} failures, {tamari_bad} Tamari disagreements",
    )


def test_08_spiders(record):
    rng = make_rng(SEED + 8)
    start = time.perf_counter()
    bad = 0
    for m in range(1, 6):
        for n in range(1, 6):
            bad += spider_check(spider_emit(m, n)) != (m, n)
            for _ in range(200):
                bad += spider_check(random_spider(rng, m, n)) != (m, n)
    elapsed = time.perf_counter() - start
    assert report(record, 8, "spider normal form, m,n <= 5, 200 terms each", bad == 0, elapsed, 60, f"{bad} failures")


def test_09_units(record):
    start = time.perf_counter()
    r = run_counterexample()
    data = r.to_json()
    values = {data["epsilon_LR_value"], data["LR_epsilon_value"]}
    elapsed = time.perf_counter() - start
    ok = values == {"0", "[x*(x)(y(x)y)]"} and r.matrices_differ and r.snake_ok
    assert report(record, 9, "units counterexample", ok, elapsed, 5, f"values {sorted(values)}")


def test_10_mode_soundness(record):
    start = time.perf_counter()
    ok = True
    for n in range(2, 6):
        fr = next(fr for fr in all_frontiers(n) if PAR not in fr.gaps)
        vs = frontier_vertices(fr)
        for v in vs:
            for w in vs:
                if hom_exists(v, w, Mode.LAX_MONOIDAL):
                    ok &= hom_exists(v, w, Mode.FULL)
    x, y = parse_object("((A*B)*C)"), parse_object("(A*(B*C))")
    ok &= not hom_exists(x, y, Mode.LAX_MONOIDAL) and hom_exists(x, y, Mode.FULL)
    elapsed = time.perf_counter() - start
    assert report(record, 10, "lax monoidal existence implies full existence", ok, elapsed, 1)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
