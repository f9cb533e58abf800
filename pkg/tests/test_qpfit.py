"""Exact quasi-polynomial fitting."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewtensor.qpfit import QuasiPolynomial, evaluate, fit


def test_linear_period_one():
    qp = fit([(n, 4 * n + 1) for n in range(1, 7)])
    assert qp.period == 1 and qp.polys == ((1, 4),)
    assert str(qp) == "4x + 1"


def test_period_two():
    seq = [(1, 5), (2, 13), (3, 25), (4, 25), (5, 45), (6, 37)]
    qp = fit(seq)
    assert qp.period == 2
    assert qp.polys[1] == (-5, 10) and qp.polys[0] == (1, 6)
    assert all(qp.eval(n) == v for n, v in seq)
    assert str(qp) == "[10x - 5, 6x + 1]"


def test_constant():
    qp = fit([(n, 1) for n in range(1, 5)])
    assert qp.period == 1 and qp.polys == ((1,),)


def test_quadratic():
    qp = fit([(n, 2 * n * n + 4 * n + 1) for n in range(1, 5)])
    assert qp.polys == ((1, 4, 2),)
    assert evaluate(qp, 3) == 31


def test_eval_examples():
    qp = QuasiPolynomial(1, ((1, 4),), 1)
    assert evaluate(qp, 10) == 41
    qp2 = QuasiPolynomial(2, ((1, 6), (-1, 6)), 1)     # [6n-1 odd, 6n+1 even]
    assert evaluate(qp2, 4) == 25
    with pytest.raises(ValueError):
        evaluate(qp, 0)


def test_evidence_bar():
    # three points interpolate a quadratic exactly but fail the bar
    assert fit([(n, 2 * n * n + 4 * n + 1) for n in range(1, 4)]) is None
    # exponential data fits nothing within bounds
    assert fit([(n, 2 ** n) for n in range(1, 9)], m_max=2, d_max=3) is None


def test_non_integer_coefficients_rejected():
    # n(n+1)/2 has integer values but the fit wants integer coefficients
    assert fit([(n, n * (n + 1) // 2) for n in range(1, 6)]) is None


def test_alternating_constants():
    qp = fit([(1, 3), (2, 1), (3, 3), (4, 1), (5, 3), (6, 1)])
    assert qp.period == 2 and qp.polys == ((1,), (3,))
    assert str(qp) == "[3, 1]"


def test_non_consecutive_rejected():
    with pytest.raises(ValueError):
        fit([(1, 1), (3, 3)])


def test_json_round_trip():
    qp = fit([(n, 6 * n + 1) for n in range(1, 5)])
    assert QuasiPolynomial.from_json(qp.to_json()) == qp


@given(st.integers(1, 2),
       st.lists(st.lists(st.integers(-9, 9), min_size=1, max_size=3),
                min_size=1, max_size=2),
       st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_fit_recovers_generated(period, polys, n0):
    """fit() on data generated from a quasi-polynomial reproduces its values."""
    if len(polys) != period:
        polys = (polys * period)[:period]
    qp = QuasiPolynomial(period, tuple(tuple(c) for c in polys), n0)
    pts = [(n, qp.eval(n)) for n in range(n0, n0 + 4 * period + 8)]
    got = fit(pts)
    assert got is not None
    assert all(got.eval(n) == v for n, v in pts)
    # minimality: never a longer period than the generator needed
    assert got.period <= period
