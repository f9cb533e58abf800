"""Tensor-power pipeline: sequences, flags, structure comparison."""

import pytest

from skewtensor.modules import GroupSchemeParams, SkewPartition, from_skew_partition
from skewtensor.powerlab import (ConjectureViolation, compare_structures,
                                 next_odd, pv_sequence)
from skewtensor.shapes import enumerate_shapes


def mod(text, r, s):
    return from_skew_partition(SkewPartition.parse(text), GroupSchemeParams(r, s))


def test_next_odd_examples():
    v41 = mod("4,1", 1, 2)
    v2, rep = next_odd(v41, v41, n=2)
    assert v2.dim == 9 and rep.even_dims == [4, 4, 8]
    assert rep.others_div4
    col3 = mod("1,1,1", 2, 1)
    k, rep = next_odd(col3, col3, n=2)
    assert k.dim == 1
    v61 = mod("6,1", 1, 3)
    v2, rep = next_odd(v61, v61, n=2)
    assert v2.dim == 17 and rep.even_dims == [8, 8, 16]


def test_next_odd_rejects_even_input():
    v = mod("2,2", 1, 1)
    with pytest.raises(ValueError):
        next_odd(v, v)


def test_pv_41():
    run = pv_sequence(SkewPartition.parse("4,1"), GroupSchemeParams(1, 2),
                      n_max=6, seed=0)
    assert run.dims() == [5, 9, 13, 17, 21, 25]
    assert run.mod4_congruent and run.trivial_mult_one
    assert all(st.others_div4 for st in run.steps)


def test_pv_311():
    run = pv_sequence(SkewPartition.parse("3,1,1"), GroupSchemeParams(2, 2),
                      n_max=4, seed=0)
    assert run.dims() == [5, 13, 25, 25]


def test_pv_staircase():
    sp = SkewPartition((3, 2, 1), (1,))
    run = pv_sequence(sp, GroupSchemeParams(1, 1), n_max=5, seed=0)
    assert run.dims() == [5, 9, 13, 17, 21]


def test_self_dual_alternation():
    # 180-degree symmetric shapes alternate (dim V, 1, dim V, 1, ...)
    for text, r, s in (("1,1,1", 2, 1), ("3", 1, 2), ("3,2,2/1,1", 2, 2)):
        sp = SkewPartition.parse(text)
        run = pv_sequence(sp, GroupSchemeParams(r, s), n_max=4, seed=0)
        d = run.dims()[0]
        assert run.dims() == [d, 1, d, 1], (text, run.dims())


def test_pv_rejects_bad_input():
    with pytest.raises(ValueError):
        pv_sequence(SkewPartition.parse("2,2"), GroupSchemeParams(1, 1))
    with pytest.raises(ValueError):
        pv_sequence(SkewPartition.parse("5,4,2,2,1,1/3,2"), GroupSchemeParams(2, 1))


def test_seed_independence_of_sequence():
    sp = SkewPartition.parse("3,2")
    dims = {tuple(pv_sequence(sp, GroupSchemeParams(1, 2), n_max=4,
                              seed=s).dims()) for s in (0, 1, 2)}
    assert len(dims) == 1


def test_compare_structures_dim3():
    for cs in enumerate_shapes(3, 2, 2):
        report = compare_structures(cs.shape, cs.params, n_max=3, seed=0)
        assert report.all_equal, (str(cs.shape), report.steps)


def test_compare_structures_dim5_vvdual():
    for cs in enumerate_shapes(5, 2, 2):
        report = compare_structures(cs.shape, cs.params, n_max=1, seed=0)
        assert report.all_equal, (str(cs.shape), report.steps)


def test_run_serializes():
    run = pv_sequence(SkewPartition.parse("2,1"), GroupSchemeParams(1, 1),
                      n_max=3, seed=0)
    data = run.to_json()
    assert data["sequence"] == [[1, 3], [2, 5], [3, 7]] or \
        data["sequence"] == [(1, 3), (2, 5), (3, 7)]
    assert data["structure"] == "alpha"
