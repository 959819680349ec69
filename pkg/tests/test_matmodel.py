import math

import numpy as np

from pytest                       import mark
from pytest                       import raises
from hypothesis                   import given
from hypothesis.strategies        import floats

from ptep.matmodel import (
    DimensionError, ModelParams, ParameterDomainError, ParityMatrix,
    RealSquareMatrix, build_hamiltonian, build_parity, decoupled_blocks,
    ep_distance, pseudo_hermiticity_residual
)


couplings = floats(min_value = -10, max_value = 10)
shifts = floats(min_value = -10, max_value = 10).filter(
    lambda c: abs(c + 2) > 1e-3 and abs(c + 4) > 1e-3)


def test_two_level_hamiltonian():
    H = build_hamiltonian(ModelParams.two_level(0.5))
    assert H == RealSquareMatrix([[-1, 0.5], [-0.5, 1]])
    assert H.order == 2


def test_three_level_hamiltonian():
    H = build_hamiltonian(ModelParams.three_level(0.5, 0.25, c = 1.0))
    expected = [[-1, 0.5, 0], [-0.5, 1, 0.25], [0, -0.25, 4]]
    assert np.array_equal(np.asarray(H), np.array(expected))


def test_matrices_are_read_only():
    H = build_hamiltonian(ModelParams.two_level(0.3))
    with raises(ValueError):
        H.entries[0, 0] = 2.0


def test_params_are_immutable():
    params = ModelParams.three_level(1.0, 2.0)
    with raises(AttributeError):
        params.a = 3.0
    assert params.replace(a = 3.0) == ModelParams.three_level(3.0, 2.0)


def test_parity_matrices():
    assert build_parity(2).signature == (1, -1)
    assert build_parity(3).signature == (1, -1, 1)
    assert build_parity(3).squares_to_identity()


@mark.parametrize("entries", ([[1, 0], [0, 2]], [[1, 1], [0, -1]]))
def test_parity_rejects_non_signature_matrices(entries):
    with raises(ParameterDomainError):
        ParityMatrix(entries)


@mark.parametrize("params", (
    ModelParams(4, 0.5),
    ModelParams(2, 0.5, b = 1.0),
    ModelParams(2, 0.5, c = 1.0),
    ModelParams.three_level(0.5, 0.5, c = -2.0),
    ModelParams.three_level(0.5, 0.5, c = -4.0),
    ModelParams.three_level(math.nan, 0.5),
    ModelParams.three_level(0.5, math.inf),
))
def test_invalid_parameters(params):
    with raises(ParameterDomainError):
        build_hamiltonian(params)


def test_unsupported_parity_dimension():
    with raises(ParameterDomainError):
        build_parity(4)


@given(couplings)
def test_two_level_is_pseudo_hermitian(a):
    H = build_hamiltonian(ModelParams.two_level(a))
    assert pseudo_hermiticity_residual(H, build_parity(2)) == 0.0


@given(couplings, couplings, shifts)
def test_three_level_is_pseudo_hermitian(a, b, c):
    H = build_hamiltonian(ModelParams.three_level(a, b, c = c))
    assert pseudo_hermiticity_residual(H, build_parity(3)) == 0.0


def test_plain_non_hermitian_matrix_is_not_pseudo_hermitian():
    H = RealSquareMatrix([[0, 1], [0, 0]])
    assert pseudo_hermiticity_residual(H, build_parity(2)) == 1.0


def test_symmetric_flip_matrix_is_not_pseudo_hermitian():
    H = RealSquareMatrix([[0, 1], [1, 0]])
    assert pseudo_hermiticity_residual(H, build_parity(2)) == 2.0


@given(couplings, couplings, shifts)
def test_coupling_sign_flip(a, b, c):
    H = np.asarray(build_hamiltonian(ModelParams.three_level(a, b, c = c)))
    flipped = np.asarray(build_hamiltonian(
        ModelParams.three_level(-a, -b, c = c)))
    diagonal = np.eye(3, dtype = bool)
    assert np.array_equal(flipped[diagonal], H[diagonal])
    assert np.array_equal(flipped[~diagonal], -H[~diagonal])


def test_residual_order_mismatch():
    H = build_hamiltonian(ModelParams.two_level(0.5))
    with raises(DimensionError):
        pseudo_hermiticity_residual(H, build_parity(3))


def test_square_matrices_only():
    with raises(DimensionError):
        RealSquareMatrix([[1, 2, 3], [4, 5, 6]])


@given(couplings, shifts)
def test_observer_level_decouples_at_zero_b(a, c):
    block, level = decoupled_blocks(ModelParams.three_level(a, 0.0, c = c))
    assert block == build_hamiltonian(ModelParams.two_level(a))
    assert level == 3.0 + c


def test_decoupling_needs_zero_b():
    with raises(ParameterDomainError):
        decoupled_blocks(ModelParams.three_level(0.5, 0.1))
    with raises(ParameterDomainError):
        decoupled_blocks(ModelParams.two_level(0.5))


@mark.parametrize("a, expected", ((0.0, 1.0), (0.5, 0.5), (-1.0, 0.0),
                                  (1.5, -0.5)))
def test_ep_distance(a, expected):
    assert ep_distance(a) == expected
