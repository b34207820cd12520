import math

import numpy as np
import pytest

from domain.entities.response import ResponseCoefficients
from domain.exceptions.custom_exceptions import DomainError


def test_even_length_orders():
    """Testa as ordens de Fourier de L par."""
    rc = ResponseCoefficients(4, [0.5, 0.0, 0.5], [0.1, 0.2])

    assert rc.parity == "even"
    assert rc.a_orders == (0, 1, 2)
    assert rc.c_orders == (1, 2)


def test_odd_length_orders():
    """Testa as potências ímpares de L ímpar."""
    rc = ResponseCoefficients(3, [-1.0, 2.0], [-1.5 * math.sqrt(2), math.sqrt(2)])

    assert rc.parity == "odd"
    assert rc.a_orders == (1, 3)
    A, C = rc.evaluate(math.pi / 2)
    assert A == pytest.approx(0.0, abs=1e-12)
    assert C == pytest.approx(-1.0)


def test_wrong_coefficient_count():
    with pytest.raises(DomainError):
        ResponseCoefficients(4, [1.0, 0.0], [0.0, 0.0])


def test_a_at_zero_and_vector():
    rc = ResponseCoefficients(4, [1 / 3, 0.0, 2 / 3], [-0.7698, -0.3849])

    assert rc.a_at_zero() == pytest.approx(1.0)
    assert rc.as_vector().shape == (5,)
    assert rc.max_abs_difference(ResponseCoefficients.from_dict(rc.to_dict())) == 0.0


def test_evaluate_vectorized():
    rc = ResponseCoefficients(4, [0.0, 0.0, 1.0], [0.0, 1.0])
    thetas = np.linspace(0, math.pi, 5)
    A, C = rc.evaluate(thetas)

    np.testing.assert_allclose(A, np.cos(2 * thetas))
    np.testing.assert_allclose(C, np.sin(2 * thetas))
