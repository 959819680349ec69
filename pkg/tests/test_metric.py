import math

import numpy as np

from pytest                       import approx
from pytest                       import mark
from pytest                       import raises
from hypothesis                   import given
from hypothesis.strategies        import floats

from ptep.matmodel import (
    DimensionError, ModelParams, ParameterDomainError, RealSquareMatrix,
    build_hamiltonian
)
from ptep.metric import (
    ContractError, EpDegenerateError, build_metric, ep_degeneration_scan,
    metric_report, positivity_certificate, quasi_hermiticity_residual
)


A_GRID = np.linspace(-0.99, 0.99, 50)
GAMMA_GRID = np.linspace(0.0, math.pi / 2 - 0.01, 10)


def two_level(a):
    return build_hamiltonian(ModelParams.two_level(a))


def test_identity_at_zero_coupling():
    theta = build_metric(0.0, 0.0).theta
    assert np.allclose(np.asarray(theta), np.eye(2), atol = 1e-15)


def test_diagonal_member():
    theta = np.asarray(build_metric(0.0, math.pi / 3).theta)
    expected = np.diag([1 + math.sqrt(3) / 2, 1 - math.sqrt(3) / 2])
    assert np.allclose(theta, expected, atol = 1e-15)


def test_hermitian_member():
    candidate = build_metric(0.5, 0.0)
    assert np.allclose(np.asarray(candidate.theta),
                       [[1.0, -0.5], [-0.5, 1.0]], atol = 1e-15)
    assert candidate.xi == 0.0
    assert positivity_certificate(candidate.theta) == (True, approx(0.5))


@mark.parametrize("gamma", (0.0, 1.0))
def test_intertwining(gamma):
    candidate = build_metric(0.5, gamma)
    assert quasi_hermiticity_residual(two_level(0.5), candidate) <= 1e-14


def test_identity_is_not_a_metric_for_coupled_model():
    identity = RealSquareMatrix(np.eye(2))
    assert quasi_hermiticity_residual(two_level(0.5), identity) == 1.0


def test_family_on_grid():
    for a in A_GRID:
        H = two_level(a)
        for gamma in GAMMA_GRID:
            candidate = build_metric(a, gamma)
            theta = candidate.theta
            assert theta.is_symmetric()
            assert quasi_hermiticity_residual(H, theta) <= 1e-13
            positive, smallest = positivity_certificate(theta)
            assert positive and smallest > 0.0
            closed = (1.0 - a * a) * math.cos(gamma) ** 2
            assert abs(candidate.determinant - closed) <= 1e-14
            assert abs(np.linalg.det(np.asarray(theta)) - closed) <= 1e-14


@given(floats(min_value = -0.99, max_value = 0.99),
       floats(min_value = 0.0, max_value = 1.5),
       floats(min_value = 0.01, max_value = 100.0))
def test_scale_is_free(a, gamma, scale):
    candidate = build_metric(a, gamma, scale = scale)
    H = two_level(a)
    assert quasi_hermiticity_residual(H, candidate) <= 1e-13 * scale
    assert positivity_certificate(candidate)[0]
    unscaled = build_metric(a, gamma).theta
    assert np.allclose(np.asarray(candidate.theta),
                       scale * np.asarray(unscaled))


def test_rank_one_matrix_is_not_positive():
    assert positivity_certificate(RealSquareMatrix([[1, -1], [-1, 1]])) == (
        False, 0.0)


def test_identity_certificate():
    assert positivity_certificate(RealSquareMatrix(np.eye(2))) == (True, 1.0)


def test_asymmetric_metric():
    with raises(ContractError):
        positivity_certificate(RealSquareMatrix([[1, 0.5], [0, 1]]))
    with raises(ContractError):
        quasi_hermiticity_residual(two_level(0.5),
                                   RealSquareMatrix([[1, 0.5], [0, 1]]))


def test_order_mismatch():
    with raises(DimensionError):
        quasi_hermiticity_residual(two_level(0.5),
                                   RealSquareMatrix(np.eye(3)))
    with raises(DimensionError):
        positivity_certificate(RealSquareMatrix(np.eye(3)))


@mark.parametrize("a", (1.0, -1.0, 1.5))
def test_no_metric_at_or_beyond_exceptional_points(a):
    with raises(EpDegenerateError):
        build_metric(a, 0.0)


@mark.parametrize("gamma", (-0.1, math.pi / 2, 2.0))
def test_gamma_range(gamma):
    with raises(ParameterDomainError):
        build_metric(0.5, gamma)


@mark.parametrize("scale", (0.0, -1.0, math.inf))
def test_scale_range(scale):
    with raises(ParameterDomainError):
        build_metric(0.5, 0.0, scale = scale)


def test_degeneration_scan():
    dets = ep_degeneration_scan(0.0, [0.9, 0.99, 0.999])
    assert dets == approx([0.19, 0.0199, 0.001999], rel = 1e-9)
    assert ep_degeneration_scan(math.pi / 4, [0.99]) == approx([0.00995])
    assert ep_degeneration_scan(1.2, [0.0]) == approx([math.cos(1.2) ** 2])


@mark.parametrize("gamma", GAMMA_GRID)
def test_determinant_vanishes_at_exceptional_points(gamma):
    dets = ep_degeneration_scan(gamma, [0.9, 0.99, 0.999, 0.9999])
    assert all(x > y for x, y in zip(dets, dets[1:]))
    assert dets[-1] < 2e-4


def test_report():
    candidate, residual, positive, smallest = metric_report(0.5, 0.0)
    assert candidate.determinant == approx(0.75)
    assert residual <= 1e-14
    assert positive
    assert smallest == approx(0.5)
