import numpy as np
import pytest

from hyperlap.errors import PoleError
from hyperlap.special import (
    beta,
    gamma,
    gamma_ratio,
    is_nonpositive_integer,
    log_gamma,
    pochhammer,
)

# reference values computed with mpmath at 25 digits
GAMMA_HALF_PLUS_I = 0.3006946172606558 - 0.4249678794331238j
GAMMA_M25 = -0.9453087204829419
GAMMA_37 = 4.170651783796604
GAMMA_M15_2J = -0.0018843965411520957 + 0.020932721986921831j
LOGGAMMA_1005 = 361.43554046777762
BETA_25_1J_13 = 0.20721314448106462 - 0.10581550718613842j
RF_25_1J_3 = 28.875 + 34.75j
RF_03_M04 = -3.5721345772652321


def test_gamma_known_values():
    np.testing.assert_allclose(gamma(1.0), 1.0, rtol=1e-14)
    np.testing.assert_allclose(gamma(5.0), 24.0, rtol=1e-14)
    np.testing.assert_allclose(gamma(0.5), np.sqrt(np.pi), rtol=1e-14)
    np.testing.assert_allclose(gamma(3.7), GAMMA_37, rtol=1e-13)
    np.testing.assert_allclose(gamma(-2.5), GAMMA_M25, rtol=1e-13)


def test_gamma_complex_values():
    z = gamma(0.5 + 1j)
    np.testing.assert_allclose(
        [z.real, z.imag],
        [GAMMA_HALF_PLUS_I.real, GAMMA_HALF_PLUS_I.imag],
        rtol=1e-13,
    )
    w = gamma(-1.5 + 2j)
    np.testing.assert_allclose(
        [w.real, w.imag], [GAMMA_M15_2J.real, GAMMA_M15_2J.imag], rtol=1e-12
    )


def test_gamma_poles_raise():
    for z in (0.0, -1.0, -2.0, -7.0):
        with pytest.raises(PoleError):
            gamma(z)
        with pytest.raises(PoleError):
            log_gamma(z)


def test_recurrence_random():
    rng = np.random.default_rng(7)
    worst = 0.0
    count = 0
    while count < 2000:
        z = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        if is_nonpositive_integer(z, tol=0.05) or is_nonpositive_integer(
            z + 1, tol=0.05
        ):
            continue
        lhs = gamma(z + 1)
        rhs = z * gamma(z)
        worst = max(worst, abs(lhs - rhs) / abs(lhs))
        count += 1
    assert worst < 1e-11


def test_log_gamma_consistency():
    np.testing.assert_allclose(log_gamma(100.5), LOGGAMMA_1005, rtol=1e-14)
    rng = np.random.default_rng(11)
    for _ in range(200):
        z = complex(rng.uniform(0.5, 6), rng.uniform(-4, 4))
        np.testing.assert_allclose(
            complex(np.exp(log_gamma(z))), complex(gamma(z)), rtol=1e-12
        )


def test_beta_values_and_symmetry():
    np.testing.assert_allclose(beta(0.5, 0.5), np.pi, rtol=1e-13)
    np.testing.assert_allclose(beta(1.0, 1.0), 1.0, rtol=1e-14)
    np.testing.assert_allclose(beta(3.0, 4.0), 1.0 / 60.0, rtol=1e-13)
    z = beta(2.5 + 1j, 1.3)
    np.testing.assert_allclose(
        [z.real, z.imag], [BETA_25_1J_13.real, BETA_25_1J_13.imag], rtol=1e-12
    )
    rng = np.random.default_rng(3)
    for _ in range(50):
        a = complex(rng.uniform(0.2, 3), rng.uniform(-1, 1))
        b = complex(rng.uniform(0.2, 3), rng.uniform(-1, 1))
        np.testing.assert_allclose(complex(beta(a, b)), complex(beta(b, a)), rtol=1e-12)


def test_gamma_ratio_pole_cancellation():
    # pole in a denominator forces the whole ratio to zero
    assert gamma_ratio([1.0], [-2.0]) == 0.0
    assert gamma_ratio([2.5, 1.5], [0.0, 1.0]) == 0.0
    # pole in a numerator without a balancing denominator is an error
    with pytest.raises(PoleError):
        gamma_ratio([-1.0], [2.0])
    # regular ratio agrees with the direct quotient
    np.testing.assert_allclose(
        complex(gamma_ratio([5.0], [3.0])), 24.0 / 2.0, rtol=1e-13
    )


def test_pochhammer_integer_orders():
    np.testing.assert_allclose(pochhammer(1.0, 5), 120.0, rtol=1e-14)
    np.testing.assert_allclose(pochhammer(3.0, 0), 1.0, rtol=0)
    np.testing.assert_allclose(pochhammer(0.5, 3), 0.5 * 1.5 * 2.5, rtol=1e-14)
    z = pochhammer(2.5 + 1j, 3)
    np.testing.assert_allclose(
        [z.real, z.imag], [RF_25_1J_3.real, RF_25_1J_3.imag], rtol=1e-13
    )
    # integer base continues through what would be a gamma pole
    np.testing.assert_allclose(pochhammer(-4.0, 3), -4.0 * -3.0 * -2.0, rtol=1e-14)
    assert pochhammer(-2.0, 4) == 0.0


def test_pochhammer_fractional_order():
    np.testing.assert_allclose(pochhammer(0.3, -0.4), RF_03_M04, rtol=1e-12)
    rng = np.random.default_rng(9)
    for _ in range(100):
        lam = complex(rng.uniform(0.5, 4), rng.uniform(-2, 2))
        v = complex(rng.uniform(-1, 2), rng.uniform(-1, 1))
        direct = gamma(lam + v) / gamma(lam)
        np.testing.assert_allclose(
            complex(pochhammer(lam, v)), complex(direct), rtol=1e-11
        )


def test_is_nonpositive_integer():
    assert is_nonpositive_integer(0.0)
    assert is_nonpositive_integer(-3.0)
    assert is_nonpositive_integer(-3.0 + 1e-14j)
    assert not is_nonpositive_integer(2.0)
    assert not is_nonpositive_integer(-2.5)
    assert not is_nonpositive_integer(-3.0 + 0.5j)
