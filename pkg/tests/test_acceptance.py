"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line shown in the "acceptance criteria"
section of the pytest terminal summary.
"""

import random
import statistics
import subprocess
import sys
import time
from itertools import chain
from math import floor, log2

import numpy as np
import pytest

from tripattern import BinaryMatrix, SimpleGraph, dedup_columns, parse_matrix, serialize_matrix
from tripattern.generators import generate
from tripattern.homogenize import HomogenizeConfig, find_homogeneous, upper_graph
from tripattern.oracle import max_homogeneous_set, max_inhomogeneous_size, vc_dimension_naive
from tripattern.patterns import parse_certificate, serialize_certificate, verify_certificate
from tripattern.pipeline import extract_structure, run_experiment
from tripattern.switch import calibrated_constant, extract_switch
from tripattern.vcdim import SetSystem, graph_vc_dimension, growth_function, matrix_vc_dimension, phi, vc_dimension

pytestmark = pytest.mark.acceptance


def _report(log, number, title, failures, elapsed, limit, detail=""):
    ok = failures == 0 and (limit is None or elapsed < limit)
    budget = f" (limit {limit:.0f}s)" if limit else ""
    extra = f"; {detail}" if detail else ""
    log(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {failures} violations, {elapsed:.1f}s{budget}{extra}")
    return ok


def _random_spec(rng, family, n):
    if family in ("half_graph", "matching", "co_matching"):
        return f"{family}:n={n}"
    seed = rng.randrange(2**63)
    if family == "interval":
        return f"interval:points={rng.randint(2, 256)},intervals={n},seed={seed}"
    if family == "boxes":
        return f"boxes:points={rng.randint(2, 256)},boxes={n},k={rng.randint(1, 3)},seed={seed}"
    return f"random_bipartite:m={rng.randint(2, 256)},n={n},p={rng.uniform(0.05, 0.95):.3f},seed={seed}"


FAMILY_NAMES = ("half_graph", "matching", "co_matching", "interval", "boxes", "random_bipartite")


def test_01_end_to_end_soundness(acceptance_log):
    rng = random.Random(1001)
    start = time.perf_counter()
    failures, sizes = [], []
    for i in range(1000):
        spec = _random_spec(rng, FAMILY_NAMES[i % 6], rng.randint(2, 256))
        A = generate(spec)
        report = extract_structure(A, vc_budget=0)
        cert = parse_certificate(serialize_certificate(report.certificate))
        if not verify_certificate(A, cert):
            failures.append(spec)
        sizes.append(report.final_size)
    elapsed = time.perf_counter() - start
    ok = _report(acceptance_log, 1, "end-to-end soundness (1000 matrices)", len(failures), elapsed, 180,
                 f"median final size {statistics.median(sizes)}")
    assert ok, failures[:5]


def _switch_bound_inputs(rng):
    """Yield twin-free matrices from all families with n <= 512 distinct columns."""
    while True:
        family = rng.choice(FAMILY_NAMES)
        seed = rng.randrange(2**63)
        n = rng.randint(2, 512)
        if family in ("half_graph", "matching", "co_matching"):
            spec = f"{family}:n={n}"
        elif family == "interval":
            spec = f"interval:points={rng.randint(2, 48)},intervals={n},seed={seed}"
        elif family == "boxes":
            spec = f"boxes:points={rng.randint(2, 12)},boxes={n},k={rng.randint(1, 2)},seed={seed}"
        else:
            spec = f"random_bipartite:m={rng.randint(2, 4)},n={n},seed={seed}"
        yield spec, dedup_columns(generate(spec))[0]


def test_02_switch_size_bound(acceptance_log):
    rng = random.Random(2002)
    start = time.perf_counter()
    checked, violations, skipped = 0, [], 0
    for spec, D in _switch_bound_inputs(rng):
        d = matrix_vc_dimension(D, budget=None)
        if d > 3 or D.n > 512:
            skipped += 1
            continue
        k = extract_switch(D).size
        c = calibrated_constant(max(d, 1), D.n)
        if not c * (2 * k + 2) ** max(d, 1) > D.n:
            violations.append((spec, d, k, D.n))
        checked += 1
        if checked == 200:
            break
    elapsed = time.perf_counter() - start
    ok = _report(acceptance_log, 2, "switch size bound c(2k+2)^d > n (200 matrices)", len(violations), elapsed, 120,
                 f"{skipped} draws with d > 3 skipped")
    assert ok, violations[:5]


def test_03_upper_graph_vc_bound(acceptance_log):
    rng = np.random.default_rng(3003)
    start = time.perf_counter()
    violations = []
    for _ in range(500):
        m = int(rng.integers(1, 15))
        arr = rng.random((m, m)) < rng.uniform(0.05, 0.95)
        np.fill_diagonal(arr, False)
        A = BinaryMatrix.from_array(arr)
        g, d = graph_vc_dimension(upper_graph(A)), matrix_vc_dimension(A)
        if g > 4 * d + 3:
            violations.append((A, g, d))
    elapsed = time.perf_counter() - start
    ok = _report(acceptance_log, 3, "upper-graph VC <= 4d+3 (500 matrices)", len(violations), elapsed, 120)
    assert ok, violations[:3]


def _random_system(rng, max_ground=12):
    N = rng.randint(0, max_ground)
    size = rng.randint(0, min(2**N, 80))
    return SetSystem(N, [rng.getrandbits(N) if N else 0 for _ in range(size)])


def test_04_sauer_shelah(acceptance_log):
    rng = random.Random(4004)
    start = time.perf_counter()
    violations = []
    for _ in range(500):
        S = _random_system(rng)
        d = vc_dimension(S)
        for n in range(S.ground_size + 1):
            if growth_function(S, n) > phi(d, n):
                violations.append((S, n))
    elapsed = time.perf_counter() - start
    ok = _report(acceptance_log, 4, "Sauer-Shelah growth bound (500 systems)", len(violations), elapsed, 60)
    assert ok, violations[:3]


def _all_small_matrices(max_side=4):
    for m in range(1, max_side + 1):
        for n in range(1, max_side + 1):
            for bits in range(1 << (m * n)):
                yield BinaryMatrix(m, n, [(bits >> (i * n)) & ((1 << n) - 1) for i in range(m)])


def test_05_oracle_dominance_and_agreement(acceptance_log):
    rng = random.Random(5005)
    start = time.perf_counter()
    violations, total = [], 0
    randoms = (
        BinaryMatrix.from_lists([[rng.randint(0, 1) for _ in range(n)] for _ in range(m)], n=n)
        for m, n in ((rng.randint(1, 7), rng.randint(1, 7)) for _ in range(300))
    )
    for A in chain(_all_small_matrices(4), randoms):
        total += 1
        if extract_structure(A, vc_budget=0).final_size > max_inhomogeneous_size(A):
            violations.append(A)
    disagreements = 0
    for _ in range(500):
        S = _random_system(rng)
        if vc_dimension(S) != vc_dimension_naive(S):
            disagreements += 1
    elapsed = time.perf_counter() - start
    ok = _report(acceptance_log, 5, f"oracle dominance ({total} matrices) and VC agreement (500 systems)",
                 len(violations) + disagreements, elapsed, 180)
    assert ok, (violations[:3], disagreements)


def test_06_homogeneous_finder(acceptance_log):
    rng = np.random.default_rng(6006)
    start = time.perf_counter()
    violations = 0
    for _ in range(300):
        n = int(rng.integers(1, 13))
        G = _random_graph(rng, n, rng.uniform(0.05, 0.95))
        if find_homogeneous(G, HomogenizeConfig(exact_threshold=40)).size != max_homogeneous_set(G)[0]:
            violations += 1
    greedy = HomogenizeConfig(exact_threshold=0)
    for _ in range(100):
        n = int(rng.integers(1, 2049))
        G = _random_graph(rng, n, rng.uniform(0.0, 1.0))
        X = find_homogeneous(G, greedy)
        valid = G.is_clique(X.vertices) if X.kind == "clique" else G.is_independent(X.vertices)
        if X.size < floor(log2(n) / 2) or not valid:
            violations += 1
    elapsed = time.perf_counter() - start
    ok = _report(acceptance_log, 6, "exact finder = brute force (300), greedy >= floor(log2 n / 2) (100)",
                 violations, elapsed, 120)
    assert ok


def _random_graph(rng, n, p):
    upper = np.triu(rng.random((n, n)) < p, 1)
    return SimpleGraph.from_adjacency_matrix(BinaryMatrix.from_array(upper | upper.T))


def test_07_interval_growth(acceptance_log):
    start = time.perf_counter()
    sizes = [32, 64, 128, 256, 512]
    records = list(run_experiment("interval", sizes, list(range(20)), vc_budget=0))
    errors = sum(1 for r in records if r["error"])
    medians = [statistics.median(r["final_size"] for r in records if r["n_cols"] == n and not r["error"]) for n in sizes]
    violations = errors
    violations += sum(1 for a, b in zip(medians, medians[1:]) if b < a)
    violations += sum(1 for m in medians if m < 2)
    elapsed = time.perf_counter() - start
    shown = ", ".join(f"{n}:{m:g}" for n, m in zip(sizes, medians))
    ok = _report(acceptance_log, 7, "interval medians non-decreasing and >= 2", violations, elapsed, 120,
                 f"medians {shown}")
    assert ok, medians


def _run_cli(*args):
    return subprocess.run([sys.executable, "-m", "tripattern", *args], capture_output=True)


def test_08_determinism(acceptance_log, tmp_path):
    start = time.perf_counter()
    mismatches = []
    bench = ["bench", "--family", "boxes:k=2", "--sizes", "16,64,128", "--seeds", "0,1,2"]
    runs = [_run_cli(*bench), _run_cli(*bench), _run_cli(*bench, "--jobs", "3")]
    if any(r.returncode for r in runs) or len({r.stdout for r in runs}) != 1:
        mismatches.append("bench")
    for spec in ("interval:points=64,intervals=128,seed=5", "random_bipartite:m=40,n=90,seed=3", "half_graph:n=50"):
        path = tmp_path / "m.txt"
        path.write_text(serialize_matrix(generate(spec)))
        outs = []
        for name in ("a", "b"):
            cert = tmp_path / f"{name}.cert"
            proc = _run_cli("extract", str(path), "--out", str(cert))
            outs.append((proc.returncode, proc.stdout, cert.read_bytes()))
        if outs[0] != outs[1]:
            mismatches.append(spec)
    elapsed = time.perf_counter() - start
    ok = _report(acceptance_log, 8, "byte-identical bench CSV and bit-stable extract", len(mismatches), elapsed, None)
    assert ok, mismatches


def test_09_round_trips(acceptance_log):
    rng = np.random.default_rng(9009)
    start = time.perf_counter()
    failures = 0
    for _ in range(500):
        m, n = int(rng.integers(0, 40)), int(rng.integers(0, 40))
        A = BinaryMatrix.from_array(rng.random((m, n)) < rng.random())
        text = serialize_matrix(A)
        if parse_matrix(text) != A or serialize_matrix(parse_matrix(text)) != text:
            failures += 1
    pyrng = random.Random(909)
    for i in range(200):
        A = generate(_random_spec(pyrng, FAMILY_NAMES[i % 6], pyrng.randint(2, 96)))
        cert = extract_structure(A, vc_budget=0).certificate
        text = serialize_certificate(cert)
        back = parse_certificate(text)
        if back != cert or serialize_certificate(back) != text or not verify_certificate(A, back):
            failures += 1
    elapsed = time.perf_counter() - start
    ok = _report(acceptance_log, 9, "matrix and certificate round-trips", failures, elapsed, 30)
    assert ok
