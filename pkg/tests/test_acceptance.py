"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the summary section at the
end of the run lists every criterion.
"""
import functools
import itertools
import json
import time
from fractions import Fraction as F
from math import comb

import mpmath
import numpy as np

from obsnum import bounds as bnd
from obsnum.cli import main as cli_main
from obsnum.experiments import sot_preserving_perturbation
from obsnum.geometry import (
    Point,
    Sextuple,
    concurrency_poly,
    is_admissible,
    is_degenerate,
    parallel_poly,
    point,
)
from obsnum.io import instance_json
from obsnum.minimizer import (
    FACES,
    VERTEX_CLUSTERS,
    SearchConfig,
    exhaustive_min_faces,
    min_obstacles_fixed,
    obstacle_number_search,
    random_simple_embedding,
    slab_report,
)
from obsnum.representation import (
    Embedding,
    Graph,
    intersect_edges,
    midpoint_representation,
    per_obstacle_decomposition,
    verify,
)
from obsnum.super_order import enumerate_admissible, is_simple, pstar_sign

from conftest import crafted_degenerate_sequences, random_graph, random_points, record


def _factor_zero(T: Sextuple) -> bool:
    a1, a2, b1, b2, c1, c2 = T
    return (parallel_poly(a1, a2, b1, b2) == 0 or parallel_poly(a1, a2, c1, c2) == 0
            or concurrency_poly(T) == 0)


def _crafted_sextuples():
    o = point(0, 0)
    X = Point(F(2), F(1))
    out = [
        # vertical A, B or C
        Sextuple(o, point(0, 5), point(1, 1), point(4, 2), point(-1, 3), point(2, -2)),
        Sextuple(point(1, 1), point(4, 2), point(3, 0), point(3, 9), point(-1, 3), point(2, -2)),
        Sextuple(point(1, 1), point(4, 2), point(-1, 3), point(2, -2), point(-6, 0), point(-6, 1)),
        # A parallel to B, A parallel to C
        Sextuple(o, point(2, 1), point(0, 3), point(4, 5), point(-1, 3), point(2, -2)),
        Sextuple(o, point(2, 1), point(-1, 3), point(2, -2), point(1, -4), point(5, -2)),
        # identical supporting lines
        Sextuple(o, point(2, 1), point(4, 2), point(6, 3), point(-1, 3), point(2, -2)),
        # three lines through X
        Sextuple(o, point(4, 2), point(0, 3), point(4, -1), point(1, -1), point(3, 3)),
        Sextuple(point(-2, -1), X + point(1, F(1, 2)), X + point(-3, 1), X + point(3, -1),
                 X + point(1, 5), X + point(-1, -5)),
    ]
    # collinear-derived: a shared collinear triple makes A and B identical
    for k in range(1, 7):
        out.append(Sextuple(o, point(k, 2 * k), point(2 * k, 4 * k), point(3 * k, 6 * k),
                            point(-k, 1), point(k, -3)))
    # concurrency at generic rational points
    for k in range(1, 7):
        X = Point(F(k, 3), F(-k, 7))
        d = [point(1, k), point(2, -1), point(k, 3)]
        out.append(Sextuple(X - d[0], X + d[0].scale(2), X - d[1], X + d[1], X + d[2], X - d[2].scale(3)))
    return out


def test_criterion_1_predicate_polynomial_equivalence():
    rng = np.random.default_rng(1)
    start = time.perf_counter()
    crafted = _crafted_sextuples()
    assert all(is_admissible(T) for T in crafted)
    mism, degenerate_random, tested = 0, 0, 0
    while tested < 10_000:
        # coarse grid for half the draws so degenerate cases appear naturally
        coarse = tested % 2 == 0
        pts = random_points(rng, 6, lo=-4 if coarse else -10 ** 4, hi=5 if coarse else 10 ** 4,
                            max_den=1 if coarse else 9)
        T = Sextuple(*pts)
        if not is_admissible(T):
            continue
        tested += 1
        d = is_degenerate(T)
        degenerate_random += d
        mism += d != _factor_zero(T)
    crafted_mism = sum(not is_degenerate(T) or not _factor_zero(T) for T in crafted)
    elapsed = time.perf_counter() - start
    ok = mism == 0 and crafted_mism == 0 and len(crafted) >= 20 and elapsed < 10
    record(1, ok, f"{tested} random ({degenerate_random} degenerate) + {len(crafted)} crafted, "
                  f"{mism + crafted_mism} mismatches, {elapsed:.2f}s (limit 10s)")
    assert ok


def test_criterion_2_pstar_iff_not_simple():
    rng = np.random.default_rng(2)
    crafted = crafted_degenerate_sequences()[:20]
    seqs = []
    for i in range(500):
        n = int(rng.integers(3, 7))
        coarse = i % 3 == 0
        seqs.append(random_points(rng, n, lo=-5 if coarse else -1000, hi=6 if coarse else 1000,
                                  max_den=1 if coarse else 7))
    mism = sum((pstar_sign(P) == 0) != (not is_simple(P)) for P in seqs + crafted)
    zero = sum(pstar_sign(P) == 0 for P in seqs)
    ok = mism == 0 and len(crafted) == 20
    record(2, ok, f"500 random ({zero} non-simple) + {len(crafted)} crafted, {mism} mismatches")
    assert ok


def _brute_r(n):
    seen = set()
    for t in itertools.product(range(1, n + 1), repeat=6):
        pairs = [frozenset(t[0:2]), frozenset(t[2:4]), frozenset(t[4:6])]
        if any(len(p) < 2 for p in pairs) or len(set(pairs)) < 3 or pairs[0] & pairs[1] & pairs[2]:
            continue
        seen.add(tuple(x for p in pairs for x in sorted(p)))
    return len(seen)


def test_criterion_3_enumeration():
    r3, r4 = len(enumerate_admissible(3)), len(enumerate_admissible(4))
    b3, b4 = _brute_r(3), _brute_r(4)
    bound_ok = all(len(enumerate_admissible(n)) < comb(n, 2) ** 3 for n in range(3, 9))
    ok = (r3, r4) == (6, 96) == (b3, b4) and bound_ok
    record(3, ok, f"r(3)={r3} (brute {b3}), r(4)={r4} (brute {b4}), r(n)<C(n,2)^3 for n<=8: {bound_ok}")
    assert ok


@functools.lru_cache(maxsize=None)
def _criterion_4_runs():
    rng = np.random.default_rng(4)
    runs = []
    for _ in range(100):
        n = int(rng.integers(3, 8))
        G = random_graph(rng, n, 0.5)
        emb = random_simple_embedding(n, rng)
        res = min_obstacles_fixed(G, emb, FACES)
        runs.append((G, emb, res, exhaustive_min_faces(G, emb)[0]))
    return runs


def test_criterion_4_solver_exactness(tmp_path):
    start = time.perf_counter()
    runs = _criterion_4_runs()
    wrong = sum(res.count != oracle for _, _, res, oracle in runs)
    rejected = 0
    for i, (G, emb, res, _) in enumerate(runs):
        cert = tmp_path / f"cert{i}.json"
        cert.write_text(json.dumps(instance_json(G, emb, res.certificate.obstacles)))
        out = tmp_path / f"rep{i}.json"
        code = cli_main(["--out", str(out), "verify", str(cert)])
        rejected += code != 0 or not json.loads(out.read_text())["results"]["valid"]
    elapsed = time.perf_counter() - start
    ok = wrong == 0 and rejected == 0 and elapsed < 300
    record(4, ok, f"100 instances: {wrong} count mismatches vs exhaustive, "
                  f"{rejected} certificates rejected by verify, {elapsed:.1f}s (limit 300s)")
    assert ok


@functools.lru_cache(maxsize=None)
def _criterion_5_runs():
    rng = np.random.default_rng(5)
    runs, attempts = [], 0
    while len(runs) < 100:
        attempts += 1
        n = int(rng.integers(3, 7))
        G = random_graph(rng, n, 0.5)
        emb = random_simple_embedding(n, rng)
        moved = sot_preserving_perturbation(emb.points, rng, F(n ** 4, 8))
        if moved is None or tuple(moved) == emb.points:
            continue
        emb2 = Embedding(tuple(moved))
        runs.append((G, emb, emb2, min_obstacles_fixed(G, emb), min_obstacles_fixed(G, emb2)))
    return runs, attempts


def test_criterion_5_super_order_invariance():
    runs, attempts = _criterion_5_runs()
    bad = [(G, a.count, b.count) for G, _, _, a, b in runs if a.count != b.count]
    ok = not bad
    record(5, ok, f"{len(runs)} sigma-preserving perturbations ({attempts} attempts), "
                  f"{len(bad)} changed the minimum")
    assert ok


@functools.lru_cache(maxsize=None)
def _criterion_6_runs():
    return {name: obstacle_number_search(G, SearchConfig(budget=1000, seed=1))
            for name, G in (("2x2", Graph.grid(2, 2)), ("2x3", Graph.grid(2, 3)))}


def test_criterion_6_grid_search():
    runs = _criterion_6_runs()
    counts = {k: (v.best.count, v.samples) for k, v in runs.items()}
    valid = all(verify(v.best.certificate).valid for v in runs.values())
    ok = all(c == 1 for c, _ in counts.values()) and valid
    record(6, ok, ", ".join(f"{k} grid: {c} obstacle after {s} samples" for k, (c, s) in counts.items())
           + f", certificates valid: {valid}")
    assert ok


@functools.lru_cache(maxsize=None)
def _criterion_7_runs():
    rng = np.random.default_rng(7)
    reps = []
    while len(reps) < 50:
        pts = random_points(rng, 6)
        if not is_simple(pts):
            continue
        G = random_graph(rng, 6, 0.5)
        reps.append(midpoint_representation(G, Embedding(tuple(pts))))
    return reps


def test_criterion_7_midpoint_construction():
    reps = _criterion_7_runs()
    bad = sum(not verify(r).valid or r.h != 15 - len(r.graph.edges) for r in reps)
    ok = bad == 0
    record(7, ok, f"50 random G(6,1/2): {bad} failures of validity or |S| = 15 - |E|")
    assert ok


def test_criterion_8_intersection_decomposition():
    certs = [res.certificate for _, _, res, _ in _criterion_4_runs()]
    for _, _, _, a, b in _criterion_5_runs()[0]:
        certs += [a.certificate, b.certificate]
    certs += [r.best.certificate for r in _criterion_6_runs().values()]
    certs += list(_criterion_7_runs())
    checked, bad = 0, 0
    for rep in certs:
        if not verify(rep).valid:
            continue
        checked += 1
        if rep.obstacles:
            bad += intersect_edges(per_obstacle_decomposition(rep)) != rep.graph.edges
        else:
            bad += not rep.graph.is_complete()     # empty intersection means every pair is visible
    ok = bad == 0 and checked == len(certs)
    record(8, ok, f"{checked} valid certificates from criteria 4-7, {bad} decomposition mismatches")
    assert ok


def test_criterion_9_chernoff():
    unsound = 0
    for p in (F(1, 4), F(1, 2), F(3, 4)):
        for m in range(1, 31):
            for t in range(m + 1):
                if t <= m * p:
                    continue
                exact = bnd.binomial_tail_exact(m, p, t)
                with mpmath.workprec(bnd.PREC):
                    ln_exact = mpmath.log(mpmath.mpf(exact.numerator) / exact.denominator)
                unsound += bnd.chernoff_tail_log(m, p, t).log_bound < ln_exact
    worst = mpmath.mpf(0)
    for n in (10 ** 3, 10 ** 4, 10 ** 6, 10 ** 9):
        rep = bnd.lemma1_report(n)
        with mpmath.workprec(bnd.PREC):
            rel = abs(rep.log_prob_chain - rep.log_prob_chernoff) / abs(rep.log_prob_chernoff)
        worst = max(worst, rel)
    chain_ok = worst <= mpmath.mpf(10) ** -9
    ok = unsound == 0 and chain_ok
    record(9, ok, f"tail soundness: {unsound} violations; chain vs direct Chernoff worst "
                  f"relative gap {mpmath.nstr(worst, 4)} (tolerance 1e-9)")
    assert unsound == 0
    assert chain_ok, "closed chain value disagrees with the direct Chernoff evaluation"


def test_criterion_10_hhat_calculus():
    cfg = bnd.BoundConfig(c=32.0, enc=1.0)
    closed_bad, ratios = 0, []
    for e in range(8, 21):
        n = 1 << e
        closed_bad += bnd.hhat(n, cfg) != n // (4 * e * e)
        with mpmath.workprec(bnd.PREC):
            ratios.append(bnd.wn_lower_bound(n, cfg) / (n / mpmath.log(e, 2) ** 2))
    lo, hi = min(ratios), max(ratios)
    ok = closed_bad == 0 and lo >= mpmath.mpf(1) / 64 and hi <= 64
    record(10, ok, f"hhat closed form mismatches over 2^8..2^20: {closed_bad}; "
                   f"w(n)/(n/(log2 log2 n)^2) in [{mpmath.nstr(lo, 4)}, {mpmath.nstr(hi, 4)}] "
                   f"with c=32, enc=1 (allowed [1/64, 64])")
    assert ok


def test_criterion_11_monotonicity():
    rng = np.random.default_rng(11)
    slab_bad = cluster_bad = 0
    gaps = []
    for i in range(50):
        n = int(rng.integers(4, 8))
        G = random_graph(rng, n, 0.5)
        emb = random_simple_embedding(n, rng)
        rep = slab_report(G, emb, max(2, n // 2))
        slab_bad += any(s.minimum > rep.whole_minimum for s in rep.slabs)
        faces = min_obstacles_fixed(G, emb, FACES).count
        clusters = min_obstacles_fixed(G, emb, VERTEX_CLUSTERS).count
        cluster_bad += clusters > faces
        if clusters < faces:
            gaps.append((i, faces, clusters))
    ok = slab_bad == 0 and cluster_bad == 0
    record(11, ok, f"50 instances: {slab_bad} slab violations, {cluster_bad} cluster > faces; "
                   f"strict gaps (instance, faces, clusters): {gaps or 'none'}")
    assert ok


def test_criterion_12_determinism(tmp_path):
    emb = random_simple_embedding(6, np.random.default_rng(12))
    G = Graph.grid(2, 3)
    inst = tmp_path / "g.json"
    inst.write_text(json.dumps(instance_json(G, emb)))
    other = tmp_path / "h.json"
    other.write_text(json.dumps(instance_json(G, Embedding(tuple(Point(p.x + 1, p.y) for p in emb.points)))))
    col = tmp_path / "col.json"
    col.write_text(json.dumps(instance_json(Graph(4, frozenset({(1, 2)})),
                                            Embedding((point(0, 0), point(1, 1), point(2, 2), point(5, -1))))))
    commands = {
        "verify": ["verify", str(inst)],
        "minimize": ["minimize", str(inst)],
        "search": ["search", str(inst), "--budget", "5", "--seed", "3"],
        "sot": ["sot", str(inst), str(other)],
        "perturb": ["perturb", str(col), "--seed", "3"],
        "slab": ["slab", str(inst), "--k", "3"],
        "census": ["census", "--n", "4", "--samples", "20", "--seed", "3"],
        "bounds": ["bounds", "--n", "100000"],
        "ordertype-gap": ["ordertype-gap", "--n", "4", "--budget", "5", "--seed", "3"],
    }
    differ = []
    for name, argv in commands.items():
        blobs = []
        for run in range(2):
            out = tmp_path / f"{name}-{run}.json"
            cli_main(["--out", str(out), *argv])
            blobs.append(out.read_bytes())
        if blobs[0] != blobs[1]:
            differ.append(name)
    ok = not differ
    record(12, ok, f"{len(commands)} commands run twice, byte differences: {differ or 'none'}")
    assert ok


if __name__ == "__main__":
    import sys

    import pytest
    sys.exit(pytest.main([__file__, "-v"]))
