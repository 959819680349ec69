import math

import numpy as np

from pytest                       import approx
from pytest                       import mark
from pytest                       import raises
from hypothesis                   import assume
from hypothesis                   import given
from hypothesis.strategies        import floats

from ptep.cubic import (
    CubicPoly, DegeneratePolynomialError, UnsupportedDimensionError,
    characteristic_coefficients, cubic_discriminant, ep_cubic,
    secular_cubic, solve_cubic, solve_quadratic, split_repeated
)
from ptep.matmodel import ModelParams, build_hamiltonian


def matches(values, oracle, tol):
    # every value has a partner in the oracle and vice versa
    values = np.asarray(values, dtype = complex)
    oracle = np.asarray(oracle, dtype = complex)
    scale = max(1.0, float(np.max(np.abs(oracle))))
    forward = max(np.min(np.abs(oracle - v)) for v in values)
    backward = max(np.min(np.abs(values - w)) for w in oracle)
    return max(forward, backward) <= tol * scale


def residuals_are_small(poly, roots):
    limit = 1e-12 * poly.coefficient_scale
    return all(abs(poly(value)) <= limit for value in roots.values())


def reconstructs(poly, roots):
    error = max(abs(x - y) for x, y in zip(roots.reconstruct(),
                                           poly.coefficients))
    return error <= 1e-10 * poly.coefficient_scale


###############################################################################
# Quadratic
###############################################################################

@given(floats(min_value = -0.999, max_value = 0.999))
def test_quadratic_inside_domain(a):
    roots = solve_quadratic(a)
    e = math.sqrt(1.0 - a * a)
    assert roots.multiplicities == (1, 1)
    assert roots.roots[0] == approx(-e, abs = 1e-14)
    assert roots.roots[1] == approx(e, abs = 1e-14)


@mark.parametrize("a", (1.0, -1.0))
def test_quadratic_exceptional_points(a):
    roots = solve_quadratic(a)
    assert roots.roots == (0.0,)
    assert roots.multiplicities == (2,)


def test_quadratic_complex_pair():
    roots = solve_quadratic(2.0)
    assert not roots.is_real
    assert roots.complex_pair == approx((0.0, math.sqrt(3.0)))


###############################################################################
# Secular Polynomial
###############################################################################

def test_secular_cubic_at_origin():
    poly = secular_cubic(ModelParams.three_level(0.0, 0.0))
    assert poly.coefficients == (-1.0, 3.0, 1.0, -3.0)


def test_secular_cubic_needs_three_levels():
    with raises(UnsupportedDimensionError):
        secular_cubic(ModelParams.two_level(0.5))


@given(floats(min_value = -3, max_value = 3),
       floats(min_value = -3, max_value = 3),
       floats(min_value = -1, max_value = 3))
def test_secular_cubic_matches_cofactor_expansion(a, b, c):
    params = ModelParams.three_level(a, b, c = c)
    poly = secular_cubic(params)
    oracle = characteristic_coefficients(build_hamiltonian(params))
    limit = 1e-12 * poly.coefficient_scale
    for mine, theirs in zip(poly.coefficients, oracle.coefficients):
        assert abs(mine - theirs) <= limit


def test_two_level_characteristic_coefficients():
    H = build_hamiltonian(ModelParams.two_level(0.5))
    assert characteristic_coefficients(H) == (1.0, 0.0, -0.75)


def test_zero_leading_coefficient():
    with raises(DegeneratePolynomialError):
        CubicPoly(0.0, 1.0, 2.0, 3.0)


###############################################################################
# Discriminant
###############################################################################

def test_discriminant_of_distinct_levels():
    # roots -1, 1, 3: product of squared differences 4 * 16 * 4
    poly = CubicPoly(-1.0, 3.0, 1.0, -3.0)
    assert cubic_discriminant(poly) == approx(256.0)


def test_discriminant_of_triple_root():
    assert cubic_discriminant(CubicPoly(-1.0, 3.0, -3.0, 1.0)) == 0.0


def test_discriminant_sign_for_complex_pair():
    # E^3 + E has roots 0 and +-i
    assert cubic_discriminant(CubicPoly(1.0, 0.0, 1.0, 0.0)) < 0.0


###############################################################################
# Cubic Solver
###############################################################################

def test_solver_matches_eigenvalues_on_random_models():
    rng = np.random.default_rng(20261018)
    checked = 0
    while checked < 1000:
        a, b = rng.uniform(-3.0, 3.0, size = 2)
        c = rng.uniform(-1.0, 3.0)
        if abs(c + 2.0) < 0.1 or abs(c + 4.0) < 0.1:
            continue
        params = ModelParams.three_level(a, b, c = c)
        roots = solve_cubic(secular_cubic(params))
        oracle = np.linalg.eigvals(np.asarray(build_hamiltonian(params)))
        assert matches(roots.values(), oracle, 1e-9), (params, roots)
        assert residuals_are_small(secular_cubic(params), roots), params
        checked += 1


@given(floats(min_value = -5, max_value = 5),
       floats(min_value = 0.5, max_value = 5),
       floats(min_value = 0.5, max_value = 5))
def test_three_distinct_roots(r1, gap1, gap2):
    expected = [r1, r1 + gap1, r1 + gap1 + gap2]
    poly = CubicPoly(*(-np.poly(expected)))
    roots = solve_cubic(poly)
    assert roots.multiplicities == (1, 1, 1)
    assert list(roots.roots) == approx(expected, abs = 1e-9 * poly.scale)
    assert residuals_are_small(poly, roots)
    assert reconstructs(poly, roots)


@given(floats(min_value = -3, max_value = 3),
       floats(min_value = -3, max_value = 3),
       floats(min_value = 0.5, max_value = 3))
def test_complex_pair(r, s, t):
    expected = [r, complex(s, -t), complex(s, t)]
    poly = CubicPoly(*np.real(-np.poly(expected)))
    roots = solve_cubic(poly)
    assert not roots.is_real
    assert matches(roots.values(), expected, 1e-9)
    assert residuals_are_small(poly, roots)
    assert reconstructs(poly, roots)


@given(floats(min_value = -5, max_value = 5),
       floats(min_value = -5, max_value = 5))
def test_double_root(z, y):
    assume(abs(z - y) >= 0.1)
    poly = ep_cubic(z, y)
    assert split_repeated(poly) == approx((z, y), abs = 1e-9)
    roots = solve_cubic(poly)
    assert roots.has_repeated_root
    assert roots.repeated_roots()[0][0] == approx(z, abs = 1e-9)
    assert roots.degree == 3
    assert residuals_are_small(poly, roots)
    assert reconstructs(poly, roots)


def test_triple_root_at_maximal_coupling():
    s = math.sqrt(2.0)
    poly = secular_cubic(ModelParams.three_level(s, s))
    for mine, expected in zip(poly.coefficients, (-1.0, 3.0, -3.0, 1.0)):
        assert abs(mine - expected) <= 1e-12
    roots = solve_cubic(poly)
    assert roots.multiplicities == (3,)
    assert abs(roots.roots[0] - 1.0) <= 1e-6


def test_triple_root_from_rounded_couplings():
    poly = secular_cubic(ModelParams.three_level(1.4142135, 1.4142135))
    roots = solve_cubic(poly)
    assert roots.max_multiplicity == 3
    assert roots.roots[0] == approx(1.0, abs = 1e-3)


@mark.parametrize("roots", ([-1.0, 1.0, 3.0], [0.5, 2.0, 7.0]))
def test_reconstruct(roots):
    poly = CubicPoly(*(-np.poly(roots)))
    assert solve_cubic(poly).reconstruct() == approx(poly.coefficients)


def test_roots_ascending():
    roots = solve_cubic(CubicPoly(-1.0, 3.0, 1.0, -3.0))
    assert list(roots.roots) == approx([-1.0, 1.0, 3.0])
