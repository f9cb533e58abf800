"""Acceptance gate: the headline results, one pass/fail line per criterion.

Power runs are memoized so later criteria (flags, fits) reuse the runs that
earlier criteria computed instead of repeating hours of work.
"""

import sys
import time

import numpy as np

from skewtensor.decompose import decompose
from skewtensor.homology import omega_power, omega_probe, strip_free, syzygy
from skewtensor.modules import (GroupSchemeParams, SkewPartition, dual_alpha,
                                dual_group, from_skew_partition, iso_test,
                                tensor_alpha, tensor_group)
from skewtensor.powerlab import pv_sequence
from skewtensor.qpfit import fit
from skewtensor.shapes import enumerate_shapes
from skewtensor.tabledata import (DIM3_MULTISETS, DIM5_MULTISETS,
                                  DIM7_MULTISETS, TABLE12_SUBSET)

_RUNS = {}
_VVSTAR = {}


def get_run(text, rs, n_max, seed=0):
    key = (text, rs, n_max, seed)
    if key not in _RUNS:
        _RUNS[key] = pv_sequence(SkewPartition.parse(text),
                                 GroupSchemeParams(*rs), n_max=n_max, seed=seed)
    return _RUNS[key]


def vvstar_dims(shape, params, seed=0):
    key = (str(shape), params.r, params.s, seed)
    if key not in _VVSTAR:
        v = from_skew_partition(shape, params)
        _VVSTAR[key] = decompose(tensor_alpha(v, dual_alpha(v)),
                                 seed=seed).dims()
    return _VVSTAR[key]


ACCEPTANCE_LINES = []


def record(num, ok, elapsed, desc):
    status = "PASS" if ok else "FAIL"
    line = f"ACCEPTANCE {num}: {status} ({elapsed:.1f}s) {desc}"
    ACCEPTANCE_LINES.append(line)
    print(line, file=sys.__stdout__, flush=True)


def dim_table_ok(dim, table):
    from skewtensor.shapes import canonicalize
    by_orbit = {canonicalize(SkewPartition.parse(t)).cells: sorted(want)
                for t, want in table.items()}
    shapes = enumerate_shapes(dim, 4, 4)
    if len(shapes) != len(table):
        return False
    return all(vvstar_dims(cs.shape, cs.params) == by_orbit[cs.cells]
               for cs in shapes)


def test_criterion_01_table1():
    t0 = time.monotonic()
    ok = dim_table_ok(3, DIM3_MULTISETS)
    el = time.monotonic() - t0
    record(1, ok and el < 5, el, "Table 1: both dim-3 shapes give {1,4,4}")
    assert ok and el < 5


def test_criterion_02_table2():
    t0 = time.monotonic()
    ok = dim_table_ok(5, DIM5_MULTISETS)
    el = time.monotonic() - t0
    record(2, ok and el < 30, el, "Table 2: all 7 dim-5 multisets match")
    assert ok and el < 30


def test_criterion_03_table3():
    t0 = time.monotonic()
    ok = dim_table_ok(7, DIM7_MULTISETS)
    el = time.monotonic() - t0
    record(3, ok and el < 600, el, "Table 3: all 31 dim-7 multisets match")
    assert ok and el < 600


def test_criterion_04_p41():
    t0 = time.monotonic()
    run = get_run("4,1", (1, 2), 12)
    ok = run.dims() == [4 * n + 1 for n in range(1, 13)]
    el = time.monotonic() - t0
    record(4, ok and el < 120, el, "P_V(n) = 4n+1 for (4,1), n <= 12")
    assert ok and el < 120


def test_criterion_05_p311():
    t0 = time.monotonic()
    run = get_run("3,1,1", (2, 2), 8)
    want = [10 * n - 5 if n % 2 else 6 * n + 1 for n in range(1, 9)]
    ok = run.dims() == want
    el = time.monotonic() - t0
    record(5, ok and el < 600, el, "P_V(n) = [10n-5, 6n+1] for (3,1,1), n <= 8")
    assert ok and el < 600


def test_criterion_06_p421():
    t0 = time.monotonic()
    run = get_run("4,2/1", (1, 2), 10)
    want = [6 * n - 1 if n % 2 else 6 * n + 1 for n in range(1, 11)]
    ok = run.dims() == want
    el = time.monotonic() - t0
    record(6, ok and el < 600, el, "P_V(n) = [6n-1, 6n+1] for (4,2)/(1), n <= 10")
    assert ok and el < 600


def test_criterion_07_p61():
    t0 = time.monotonic()
    run = get_run("6,1", (1, 3), 6)
    ok = run.dims() == [2 * n * n + 4 * n + 1 for n in range(1, 7)]
    el = time.monotonic() - t0
    record(7, ok and el < 900, el, "P_V(n) = 2n^2+4n+1 for (6,1), n <= 6")
    assert ok and el < 900


def _staircase_text(m):
    lam = ",".join(str(k) for k in range(m, 0, -1))
    mu = ",".join(str(k) for k in range(m - 2, 0, -1))
    return lam + ("/" + mu if mu else "")


def test_criterion_08_staircases():
    t0 = time.monotonic()
    ok = True
    k = from_skew_partition(SkewPartition.parse("1"), GroupSchemeParams(1, 1))
    for m in (2, 3, 4):
        run = get_run(_staircase_text(m), (1, 1), 10)
        ok &= run.dims() == [(2 * m - 2) * n + 1 for n in range(1, 11)]
        st = from_skew_partition(SkewPartition.parse(_staircase_text(m)),
                                 GroupSchemeParams(1, 1))
        verdict = iso_test(omega_power(k, -(m - 1)), st, seed=0)
        ok &= verdict.isomorphic and verdict.witness is not None
    el = time.monotonic() - t0
    record(8, ok and el < 120, el,
           "staircases: P_V(n) = (2m-2)n+1 and Omega^{1-m}(k) witness, m <= 4")
    assert ok and el < 120


def test_criterion_09_syzygy_method():
    t0 = time.monotonic()
    p = GroupSchemeParams(1, 2)
    v41 = from_skew_partition(SkewPartition.parse("4,1"), p)
    v3 = from_skew_partition(SkewPartition.parse("3"), p)
    fwd = iso_test(syzygy(v41), v3, seed=0)
    back = iso_test(strip_free(omega_power(v3, -1)), v41, seed=0)
    ok = fwd.isomorphic and fwd.witness is not None and back.isomorphic
    el = time.monotonic() - t0
    record(9, ok, el, "Omega((4,1)) = (3) with witness; Omega^{-1}((3)) = (4,1)")
    assert ok


def test_criterion_10_group_vs_alpha():
    t0 = time.monotonic()
    ok = True
    for dim in (3, 5):
        for cs in enumerate_shapes(dim, 4, 4):
            v = from_skew_partition(cs.shape, cs.params)
            alpha_dims = vvstar_dims(cs.shape, cs.params)
            u = v.ungraded()
            dg = decompose(tensor_group(u, dual_group(u)), seed=0,
                           graded_first=False)
            ok &= dg.dims() == alpha_dims
    el = time.monotonic() - t0
    record(10, ok, el, "group vs alpha: V(x)V* multisets agree, dims 3 and 5")
    assert ok


def test_criterion_11_table12_fits():
    t0 = time.monotonic()
    ok = True
    for text, rs, period, polys in TABLE12_SUBSET:
        run = get_run(text, rs, 8)
        qp = fit(run.sequence)
        ok &= (qp is not None and qp.period == period
               and qp.polys == tuple(tuple(c) for c in polys))
    el = time.monotonic() - t0
    record(11, ok, el, "Table 12 subset: qpfit recovers all five reported fits")
    assert ok


def test_criterion_12a_module_axioms():
    t0 = time.monotonic()
    rng = np.random.default_rng(12)
    pool = [cs for d in range(1, 8) for cs in enumerate_shapes(d, 3, 3)]
    checked = 0
    ok = True
    while checked < 500:
        cs = pool[rng.integers(len(pool))]
        r = int(rng.integers(cs.params.r, cs.params.r + 2))
        s = int(rng.integers(cs.params.s, cs.params.s + 2))
        v = from_skew_partition(cs.shape, GroupSchemeParams(r, s))
        try:
            v.validate()
        except AssertionError:
            ok = False
            break
        checked += 1
    el = time.monotonic() - t0
    record("12a", ok and checked >= 500, el,
           f"module axioms on {checked} random constructions")
    assert ok and checked >= 500


def test_criterion_12b_dim_sum_and_seeds():
    t0 = time.monotonic()
    ok = True
    for d in range(1, 8):
        for cs in enumerate_shapes(d, 4, 4):
            v = from_skew_partition(cs.shape, cs.params)
            t = tensor_alpha(v, v)
            multisets = set()
            for seed in range(5):
                dec = decompose(t, seed=seed)
                ok &= sum(dec.dims()) == t.dim
                multisets.add(tuple(dec.dims()))
            ok &= len(multisets) == 1
    el = time.monotonic() - t0
    record("12b", ok, el,
           "dim sums and 5-seed independence, V(x)V over all shapes dim <= 7")
    assert ok


def test_criterion_12c_trivial_multiplicity():
    t0 = time.monotonic()
    ok = True
    for d in (1, 3, 5, 7):
        for cs in enumerate_shapes(d, 4, 4):
            dims = vvstar_dims(cs.shape, cs.params)
            ok &= dims.count(1) == 1
    el = time.monotonic() - t0
    record("12c", ok, el,
           "trivial summand multiplicity 1 in V(x)V*, odd shapes dim <= 7")
    assert ok


def test_criterion_12d_mod4_flags():
    t0 = time.monotonic()
    runs = [get_run("4,1", (1, 2), 12), get_run("3,1,1", (2, 2), 8),
            get_run("4,2/1", (1, 2), 10), get_run("6,1", (1, 3), 6)]
    runs += [get_run(_staircase_text(m), (1, 1), 10) for m in (2, 3, 4)]
    ok = all(r.mod4_congruent for r in runs)
    ok &= all(st.others_div4 for r in runs for st in r.steps)
    el = time.monotonic() - t0
    record("12d", ok, el, "mod-4 flags hold on every criteria-4..8 run")
    assert ok


def test_criterion_12e_dual_rotation():
    t0 = time.monotonic()
    ok = True
    for d in range(1, 8):
        for cs in enumerate_shapes(d, 4, 4):
            v = from_skew_partition(cs.shape, cs.params)
            rot = from_skew_partition(cs.shape.rotate180(), cs.params)
            ok &= iso_test(dual_alpha(v), rot, seed=0).isomorphic
    el = time.monotonic() - t0
    record("12e", ok, el, "dual = 180-degree rotation for all shapes dim <= 7")
    assert ok


def test_criterion_12f_flip_invariance():
    t0 = time.monotonic()
    ok = True
    for cs in enumerate_shapes(5, 4, 4):
        flip = cs.shape.flip_diagonal()
        fparams = GroupSchemeParams(cs.params.s, cs.params.r)
        ok &= (vvstar_dims(cs.shape, cs.params)
               == vvstar_dims(flip, fparams))
    el = time.monotonic() - t0
    record("12f", ok, el, "flip-diagonal multiset invariance, dim-5 shapes")
    assert ok


def test_criterion_12g_omega_tensor():
    t0 = time.monotonic()
    rng = np.random.default_rng(127)
    p = GroupSchemeParams(1, 1)
    pool = [cs for d in range(1, 6) for cs in enumerate_shapes(d, 1, 1)]
    ok = True
    for _ in range(20):
        a = pool[rng.integers(len(pool))]
        b = pool[rng.integers(len(pool))]
        v = from_skew_partition(a.shape, p)
        w = from_skew_partition(b.shape, p)
        left = strip_free(tensor_alpha(syzygy(v), w))
        right = syzygy(strip_free(tensor_alpha(v, w)))
        if left.dim == right.dim == 0:
            continue
        ok &= iso_test(left, right, seed=0).isomorphic
    el = time.monotonic() - t0
    record("12g", ok, el,
           "Omega(V)(x)W = Omega(V(x)W) up to frees, 20 pairs over alpha(1,1)")
    assert ok


def test_criterion_12h_bitlinalg_fuzz():
    t0 = time.monotonic()
    from test_bitmat import test_fuzz_oracle_equivalence
    test_fuzz_oracle_equivalence()
    el = time.monotonic() - t0
    record("12h", True, el, "bitlinalg oracle fuzz, >= 1000 cases")


def test_criterion_13_omega_probe():
    t0 = time.monotonic()
    v = from_skew_partition(SkewPartition.parse("4,2/1"),
                            GroupSchemeParams(1, 2))
    report = omega_probe(v, i_max=4, k_max=3, seed=0)
    ok = report.all_distinct and report.inconclusive == 0
    el = time.monotonic() - t0
    record(13, ok, el,
           "(4,2)/(1): no V_i = Omega^{-k}(V_j) for i != j <= 4, k <= 3")
    assert ok
