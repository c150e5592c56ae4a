import math

import numpy as np
import pytest

from hyperlap.errors import DivergentSeries, DomainError, PoleError
from hyperlap.hypergeom import (
    Kind,
    SeriesSpec,
    classify,
    gauss_sum_2f1_unit,
    kummer_sum_2f1_neg1,
    sum_4f3_neg1,
    sum_series,
)
from hyperlap.special import gamma, gamma_ratio

# reference values computed with mpmath at 25 digits
F21_CONDITIONAL = 0.7723799043798093  # 2F1(0.3,0.5;0.4;-1)
F21_HALF = 1.0823922002923940  # 2F1(0.25,0.75;1.5;0.5)
F32_UNIT = 1.2972710053344303  # 3F2(0.5,0.6,0.7;1.8,0.9;1)
F21_BALANCED = 0.4718411625786043  # 2F1(1.5,2.25;3.25;-1)


def test_classify_kinds():
    assert classify(SeriesSpec([0.5], [1.5], 0.3)).kind == Kind.ALL_Z
    assert classify(SeriesSpec([0.5, 0.5], [1.5], 0.3)).kind == Kind.UNIT_DISK
    assert classify(SeriesSpec([-3.0, 0.5], [1.5], 2.0)).kind == Kind.TERMINATING
    assert (
        classify(SeriesSpec([0.5, 0.6, 0.7], [1.8, 0.9], 1.0)).kind
        == Kind.UNIT_CIRCLE_ABSOLUTE
    )
    assert (
        classify(SeriesSpec([1.5, 2.25], [3.25], -1.0)).kind
        == Kind.UNIT_CIRCLE_CONDITIONAL
    )
    assert classify(SeriesSpec([0.5, 0.5], [1.5], 1.5)).kind == Kind.DIVERGENT


def test_classify_balance():
    cc = classify(SeriesSpec([1.5, 2.25], [3.25], -1.0))
    np.testing.assert_allclose(cc.balance.real, -0.5, rtol=1e-14)


def test_terminating_exact():
    # 2F1(-2, 1; 2; -1) = 1 + 1 + 1/3
    val = sum_series(SeriesSpec([-2.0, 1.0], [2.0], -1.0))
    np.testing.assert_allclose(val.real, 7.0 / 3.0, rtol=1e-15)
    # 1F0(-3; ; z) = (1-z)^3 at z = 0.4
    val = sum_series(SeriesSpec([-3.0], [], 0.4))
    np.testing.assert_allclose(val.real, 0.6**3, rtol=1e-14)


def test_interior_point():
    val = sum_series(SeriesSpec([0.25, 0.75], [1.5], 0.5))
    np.testing.assert_allclose(val.real, F21_HALF, rtol=1e-12)


def test_unit_circle_absolute():
    val = sum_series(SeriesSpec([0.5, 0.6, 0.7], [1.8, 0.9], 1.0))
    np.testing.assert_allclose(val.real, F32_UNIT, rtol=1e-10)


def test_unit_circle_conditional():
    val = sum_series(SeriesSpec([0.3, 0.5], [0.4], -1.0))
    np.testing.assert_allclose(val.real, F21_CONDITIONAL, rtol=1e-10)
    val = sum_series(SeriesSpec([1.5, 2.25], [3.25], -1.0))
    np.testing.assert_allclose(val.real, F21_BALANCED, rtol=1e-10)


def test_divergent_raises():
    with pytest.raises(DivergentSeries):
        sum_series(SeriesSpec([0.5, 0.5], [1.5], 1.5))
    # z = 1 with balance <= 0 diverges
    with pytest.raises(DivergentSeries):
        sum_series(SeriesSpec([1.0, 1.0], [1.0], 1.0))


def test_gauss_theorem_against_series():
    rng = np.random.default_rng(21)
    checked = 0
    while checked < 50:
        a = complex(rng.uniform(-1, 1.5), rng.uniform(-1, 1))
        b = complex(rng.uniform(-1, 1.5), rng.uniform(-1, 1))
        excess = 0.2 + rng.uniform(0, 1.5)
        d = a + b + excess
        if any(
            abs(z.real - round(z.real)) < 0.3 and abs(z.imag) < 0.3 and z.real < 0.5
            for z in (d, d - a, d - b, d - a - b)
        ):
            continue
        closed = gauss_sum_2f1_unit(a, b, d)
        series = sum_series(SeriesSpec([a, b], [d], 1.0))
        np.testing.assert_allclose(
            complex(closed), complex(series), rtol=1e-9, atol=1e-12
        )
        checked += 1


def test_gauss_theorem_known_value():
    # 2F1(1,1;3;1): Gamma(3)Gamma(1)/Gamma(2)^2 = 2
    np.testing.assert_allclose(complex(gauss_sum_2f1_unit(1.0, 1.0, 3.0)), 2.0)


def test_kummer_theorem_against_series():
    rng = np.random.default_rng(22)
    checked = 0
    while checked < 50:
        a = complex(rng.uniform(-1.5, 2), rng.uniform(-1, 1))
        b = complex(rng.uniform(-1.5, 0.4), rng.uniform(-1, 1))
        # convergence of 2F1(a,b;1+a-b;-1) needs Re(b) < 1/2 + margin
        if b.real > 0.35:
            continue
        if any(
            abs(z.real - round(z.real)) < 0.3 and abs(z.imag) < 0.3 and z.real < 0.5
            for z in (1 + a - b, 1 + a, 1 + a / 2 - b, 1 + a / 2, a)
        ):
            continue
        closed = kummer_sum_2f1_neg1(a, b)
        series = sum_series(SeriesSpec([a, b], [1 + a - b], -1.0))
        np.testing.assert_allclose(
            complex(closed), complex(series), rtol=1e-9, atol=1e-12
        )
        checked += 1


def test_kummer_negative_even_integer_limit():
    # a = -2m hits a pole/pole limit: (-1)^m 2 (2m-1)!/(m-1)!
    for m in (1, 2, 3, 4):
        a = -2.0 * m
        b = 0.3
        closed = kummer_sum_2f1_neg1(a, b)
        series = sum_series(SeriesSpec([a, b], [1 + a - b], -1.0))
        np.testing.assert_allclose(complex(closed), complex(series), rtol=1e-12)


def test_4f3_theorem_against_series():
    rng = np.random.default_rng(23)
    checked = 0
    while checked < 30:
        b = complex(rng.uniform(-0.8, 0.6), rng.uniform(-0.5, 0.5))
        c = complex(rng.uniform(-0.8, 0.6), rng.uniform(-0.5, 0.5))
        margin = 0.2 + rng.uniform(0, 1)
        a = 2 * b + 2 * c - 1 + margin
        bad = False
        for z in (a, 1 + a / 2, b, c, a / 2, 1 + a - b, 1 + a - c, 1 + a,
                  1 + a - b - c):
            if abs(z.real - round(z.real)) < 0.3 and abs(z.imag) < 0.3 and z.real < 0.5:
                bad = True
        if bad:
            continue
        closed = sum_4f3_neg1(a, b, c)
        series = sum_series(
            SeriesSpec([a, 1 + a / 2, b, c], [a / 2, 1 + a - b, 1 + a - c], -1.0)
        )
        np.testing.assert_allclose(
            complex(closed), complex(series), rtol=1e-9, atol=1e-12
        )
        checked += 1


def test_4f3_closed_form_expression():
    a, b, c = 1.2, 0.3, 0.25
    closed = sum_4f3_neg1(a, b, c)
    direct = gamma_ratio([1 + a - b, 1 + a - c], [1 + a, 1 + a - b - c])
    np.testing.assert_allclose(complex(closed), complex(direct), rtol=1e-13)


def test_series_pole_in_denominator():
    with pytest.raises(DomainError):
        sum_series(SeriesSpec([0.5, 0.5], [-2.0], 0.3))


def test_terminating_before_denominator_pole():
    # numerator terminates at k=2 before the denominator parameter -5 is hit
    val = sum_series(SeriesSpec([-2.0, 1.0], [-5.0], 1.0))
    np.testing.assert_allclose(val.real, 1.0 + 2.0 / 5.0 + 1.0 / 10.0, rtol=1e-14)
