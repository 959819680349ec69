#Copyright (c) 2026 ptep contributors
#
#Permission is hereby granted, free of charge, to any person obtaining a copy
#of this software and associated documentation files (the "Software"), to deal
#in the Software without restriction, including without limitation the rights
#to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
#copies of the Software, and to permit persons to whom the Software is
#furnished to do so, subject to the following conditions:

#The above copyright notice and this permission notice shall be included in
#all copies or substantial portions of the Software.

#THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
#OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
#THE SOFTWARE.

###############################################################################
# Notes
###############################################################################

# At c = 0 the boundary of the real-spectrum domain of H(3) is the closed
# star-shaped curve
#
#   a = +-sqrt((4 - 3 beta^2 - beta^3) / 2)
#   b = +-sqrt((4 - 3 beta^2 + beta^3) / 2),     beta in [-1, 1],
#
# with a double energy z = 1 + beta and a single energy y = 1 - 2 beta.
# beta = -1 and beta = 1 give the two-level exceptional points (1, 0) and
# (0, 1); beta = 0 gives the triple-root vertex (sqrt 2, sqrt 2).
#
# For any c the boundary is also traced numerically, along rays from the
# origin of the (a, b) plane, as the first sign change of the discriminant
# of the secular cubic.  The origin is interior whenever the diagonal
# levels -1, 1 and 3 + c are distinct.


###############################################################################
# Imports
###############################################################################

import logging
import math

from .cubic import (
    CubicPoly, cubic_discriminant, secular_cubic,
    solve_cubic, split_repeated
)
from .matmodel import ModelParams, ParameterDomainError
from .util import PtepError


###############################################################################
# Constants
###############################################################################

BRACKET_STEP = 0.05
MAX_RADIUS = 8.0
BISECT_TOL = 1e-13
MIN_TOL = 1e-14
SWEEP_DELTA = 1e-3

QUADRANTS = ((1, 1), (-1, 1), (-1, -1), (1, -1))

_log = logging.getLogger(__name__)


###############################################################################
# Exceptions
###############################################################################

class NoBoundaryOnRayError(PtepError):
    pass


class NoRealDepError(PtepError, ValueError):
    pass


class LemmaRegimeError(PtepError, ValueError):
    pass


###############################################################################
# Boundary Data
###############################################################################

class BoundaryPoint(object):
    def __init__(self, a, b, double_root_z, single_root_y, beta = None,
                 theta = None, c = 0.0, merging_levels = None):
        self.a = float(a)
        self.b = float(b)
        self.double_root_z = float(double_root_z)
        self.single_root_y = float(single_root_y)
        self.beta = None if beta is None else float(beta)
        self.theta = None if theta is None else float(theta)
        self.c = float(c)
        self.merging_levels = merging_levels or _merging_levels(
            self.double_root_z, self.single_root_y)

    @property
    def radius(self):
        return math.hypot(self.a, self.b)

    @property
    def alpha(self):
        # y = -1 + 2 alpha, and alpha + beta = 1 on the analytic curve
        return (self.single_root_y + 1.0) / 2.0

    @property
    def trace_residual(self):
        return abs(2.0 * self.double_root_z + self.single_root_y
                   - (3.0 + self.c))

    def to_JSON_object(self):
        return {
            "a": self.a,
            "b": self.b,
            "beta": self.beta,
            "theta": self.theta,
            "c": self.c,
            "z": self.double_root_z,
            "y": self.single_root_y,
            "mergingLevels": list(self.merging_levels)
        }

    def __repr__(self):
        return "BoundaryPoint(a={!r}, b={!r}, z={!r}, y={!r})".format(
            self.a, self.b, self.double_root_z, self.single_root_y)


class BoundaryCurve(object):
    PARAMETRIC = "Parametric"
    BISECTION = "Bisection"

    def __init__(self, points, method, c = 0.0):
        if method not in (self.PARAMETRIC, self.BISECTION):
            raise ValueError("unknown boundary method: " + repr(method))
        if method == self.PARAMETRIC and c != 0.0:
            raise ParameterDomainError("the parametric boundary exists "
                                       "only at c = 0")
        self.points = list(points)
        self.method = method
        self.c = float(c)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def to_JSON_object(self):
        return {
            "method": self.method,
            "c": self.c,
            "points": [p.to_JSON_object() for p in self.points]
        }


class DepPoint(object):
    def __init__(self, a, b, c, z):
        self.a = float(a)
        self.b = float(b)
        self.c = float(c)
        self.z = float(z)

    @property
    def params(self):
        return ModelParams.three_level(self.a, self.b, c = self.c)

    def to_JSON_object(self):
        return {"a": self.a, "b": self.b, "c": self.c, "z": self.z}

    def __repr__(self):
        return "DepPoint(a={!r}, b={!r}, c={!r}, z={!r})".format(
            self.a, self.b, self.c, self.z)


def _merging_levels(z, y):
    if z == y:
        return (0, 1, 2)
    if z < y:
        return (0, 1)
    return (1, 2)


###############################################################################
# Analytic Boundary (c = 0)
###############################################################################

def parametric_boundary(beta, signs = (1, 1)):
    beta = float(beta)
    if not abs(beta) <= 1.0:
        raise ParameterDomainError("beta must lie in [-1, 1], got "
                                   + repr(beta))
    sa, sb = _check_signs(signs)
    cube = beta ** 3
    square = 3.0 * beta * beta
    a = sa * math.sqrt(max(0.0, (4.0 - square - cube) / 2.0))
    b = sb * math.sqrt(max(0.0, (4.0 - square + cube) / 2.0))
    if beta < 0.0:
        levels = (0, 1)
    elif beta > 0.0:
        levels = (1, 2)
    else:
        levels = (0, 1, 2)
    return BoundaryPoint(a, b, 1.0 + beta, 1.0 - 2.0 * beta, beta = beta,
                         theta = math.atan2(b, a), merging_levels = levels)


def parametric_curve(resolution, delta = 0.0):
    """Four arcs, one per sign quadrant, each ordered by ascending beta
    over [-1 + delta, 1 - delta]."""
    if resolution < 2:
        raise ParameterDomainError("resolution must be at least 2")
    if not 0.0 <= delta < 1.0:
        raise ParameterDomainError("delta must lie in [0, 1)")
    lo = -1.0 + delta
    hi = 1.0 - delta
    betas = [lo + (hi - lo) * k / (resolution - 1) for k in range(resolution)]
    arcs = []
    for signs in QUADRANTS:
        points = [parametric_boundary(beta, signs) for beta in betas]
        arcs.append(BoundaryCurve(points, BoundaryCurve.PARAMETRIC))
    return arcs


def closed_loop(arcs):
    """Chain the four quadrant arcs into one loop, reversing every second
    arc so consecutive arcs meet at their shared endpoints."""
    points = []
    for i, arc in enumerate(arcs):
        arc_points = list(arc.points)
        if i % 2 == 1:
            arc_points.reverse()
        points.extend(arc_points)
    return points


def axis_exceptional_points(c = 0.0):
    """(+-1, 0) and (0, +-1): the ends of the axis sections (-1, 1) of the
    real-spectrum domain."""
    if c != 0.0:
        raise ParameterDomainError("closed-form axis sections need c = 0")
    return [
        parametric_boundary(-1.0, (1, 1)),
        parametric_boundary(1.0, (1, 1)),
        parametric_boundary(-1.0, (-1, 1)),
        parametric_boundary(1.0, (1, -1))
    ]


def _check_signs(signs):
    try:
        sa, sb = signs
    except (TypeError, ValueError):
        raise ParameterDomainError("signs must be a pair of +1/-1")
    if sa not in (1, -1) or sb not in (1, -1):
        raise ParameterDomainError("signs must be a pair of +1/-1")
    return sa, sb


###############################################################################
# Numerical Boundary (any c)
###############################################################################

def ray_discriminant(radius, theta, c = 0.0):
    params = ModelParams.three_level(radius * math.cos(theta),
                                     radius * math.sin(theta), c = c)
    return cubic_discriminant(secular_cubic(params))


def boundary_radius(theta, c = 0.0, tol = BISECT_TOL, step = BRACKET_STEP,
                    max_radius = MAX_RADIUS):
    _check_tol(tol)
    ModelParams.three_level(0.0, 0.0, c = c).validate()
    f = lambda r: ray_discriminant(r, theta, c)
    if not f(0.0) > 0.0:
        raise NoBoundaryOnRayError("origin is not interior at c = {}"
                                   .format(c))
    return _first_crossing(f, 0.0, step, max_radius, tol,
                           "ray theta = {}, c = {}".format(theta, c))


def bisect_boundary(ray_angle, c = 0.0, tol = BISECT_TOL,
                    step = BRACKET_STEP, max_radius = MAX_RADIUS):
    radius = boundary_radius(ray_angle, c = c, tol = tol, step = step,
                             max_radius = max_radius)
    a = radius * math.cos(ray_angle)
    b = radius * math.sin(ray_angle)
    z, y = split_repeated(secular_cubic(ModelParams.three_level(a, b, c = c)))
    return BoundaryPoint(a, b, z, y, theta = ray_angle, c = c)


def bisection_curve(resolution, c = 0.0, tol = BISECT_TOL,
                    step = BRACKET_STEP, max_radius = MAX_RADIUS,
                    mapper = map):
    """Boundary points on `resolution` rays with ascending angle in
    [0, 2 pi).  `mapper` evaluates the rays (builtin map by default; any
    order-preserving parallel map works, each ray being independent)."""
    if resolution < 2:
        raise ParameterDomainError("resolution must be at least 2")
    _check_tol(tol)
    angles = [2.0 * math.pi * k / resolution for k in range(resolution)]
    worker = _RayWorker(c, tol, step, max_radius)
    points = list(mapper(worker, angles))
    return BoundaryCurve(points, BoundaryCurve.BISECTION, c = c)


class _RayWorker(object):
    # picklable stand-in for a closure, so process pools can map it
    def __init__(self, c, tol, step, max_radius):
        self.c = c
        self.tol = tol
        self.step = step
        self.max_radius = max_radius

    def __call__(self, theta):
        return bisect_boundary(theta, c = self.c, tol = self.tol,
                               step = self.step, max_radius = self.max_radius)


def _first_crossing(f, start, step, limit, tol, what):
    """First point beyond `start` where f turns from positive to
    non-positive, bracketed on a grid of `step` and then bisected."""
    lo = start
    k = 1
    hi = start + step
    while hi <= limit + 1e-12:
        value = f(hi)
        if value == 0.0:
            return hi
        if value < 0.0:
            break
        lo = hi
        k += 1
        hi = start + k * step
    else:
        raise NoBoundaryOnRayError("no sign change of the discriminant "
                                   "up to {} on {}".format(limit, what))
    _log.debug("bracket [%s, %s] on %s", lo, hi, what)
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        value = f(mid)
        if value == 0.0:
            return mid
        if value > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _check_tol(tol):
    if not tol >= MIN_TOL:
        raise ParameterDomainError("tolerance must be at least {}, got {}"
                                   .format(MIN_TOL, tol))


###############################################################################
# Doubly Exceptional Points
###############################################################################

def dep_points(c = 0.0):
    """The four triple-root vertices (+-a, +-b) at shift c.

    Matching the secular cubic with -(E - z)^3 coefficient by coefficient:
    3 z = 3 + c, a^2 + b^2 = 1 + 3 z^2, (3 + c) a^2 - b^2 = z^3 + 3 + c.
    """
    c = float(c)
    ModelParams.three_level(0.0, 0.0, c = c).validate()
    z = 1.0 + c / 3.0
    a2 = (4.0 + c + 3.0 * z * z + z ** 3) / (4.0 + c)
    b2 = 1.0 + 3.0 * z * z - a2
    if a2 < 0.0 or b2 < 0.0:
        raise NoRealDepError("no real triple-root point at c = {} "
                             "(a^2 = {}, b^2 = {})".format(c, a2, b2))
    a = math.sqrt(a2)
    b = math.sqrt(b2)
    return [DepPoint(sa * a, sb * b, c, z) for sa, sb in QUADRANTS]


def rescaled_dep_relation(c):
    """(a^2, b^2) from a^2 = 2 - c / (4 + c) = 4 - b^2.

    That relation keeps z = 1 in the linear and constant coefficient
    matches, so it only yields a triple root at c = 0; `dep_points` solves
    the consistent system.
    """
    c = float(c)
    ModelParams.three_level(0.0, 0.0, c = c).validate()
    a2 = 2.0 - c / (4.0 + c)
    return a2, 4.0 - a2


###############################################################################
# Growth of the Domain near the Two-Level Exceptional Points
###############################################################################

def ep_coupling(b, c = 0.0, tol = BISECT_TOL, step = BRACKET_STEP,
                max_coupling = MAX_RADIUS):
    """a^EP(b): the outer edge of the real-spectrum interval at fixed b.

    The scan starts on the diagonal a = |b|, which is interior for every
    |b| < sqrt 2 at c = 0 (there the depressed cubic has q = 0, p < 0).
    """
    b = float(b)
    _check_tol(tol)
    f = lambda a: cubic_discriminant(
        secular_cubic(ModelParams.three_level(a, b, c = c)))
    start = abs(b)
    if not f(start) > 0.0:
        raise NoBoundaryOnRayError("a = |b| is not interior at b = {}, "
                                   "c = {}".format(b, c))
    return _first_crossing(f, start, step, max_coupling, tol,
                           "fixed b = {}".format(b))


def lemma_eta(b, c = 0.0, tol = BISECT_TOL):
    b = float(b)
    if c != 0.0:
        raise ParameterDomainError("the domain growth estimate holds at "
                                   "c = 0 only")
    if b == 0.0:
        raise LemmaRegimeError("b must be non-zero")
    if abs(b) >= math.sqrt(2.0):
        raise LemmaRegimeError("|b| must stay below sqrt 2, beyond the "
                               "triple-root vertex; got b = {}".format(b))
    eta = ep_coupling(b, c = 0.0, tol = tol) - 1.0
    _log.debug("lemma_eta(%s) = %s", b, eta)
    return eta


def analytic_ep_coupling(b):
    """a^EP(b) from the analytic curve: solve
    beta^3 - 3 beta^2 + 4 - 2 b^2 = 0 on the branch beta in [-1, 0]."""
    b = float(b)
    if abs(b) >= math.sqrt(2.0):
        raise LemmaRegimeError("|b| must stay below sqrt 2; got b = {}"
                               .format(b))
    roots = solve_cubic(CubicPoly(1.0, -3.0, 0.0, 4.0 - 2.0 * b * b))
    candidates = [r for r in roots.roots if -1.0 - 1e-12 <= r <= 1e-12]
    if not candidates:
        raise LemmaRegimeError("no curve parameter in [-1, 0] for b = {}"
                               .format(b))
    beta = min(max(candidates[-1], -1.0), 0.0)
    return parametric_boundary(beta).a


def epsilon_expansion_check(epsilon):
    """Deviations of the curve near (1, 0) from its leading expansions
    b ~ 3 eps / sqrt 2 and a ~ 1 + 3 eps^2 / 4, at beta = -1 + eps^2."""
    epsilon = float(epsilon)
    if not 0.0 < epsilon <= 0.1:
        raise ParameterDomainError("epsilon must lie in (0, 0.1]")
    point = parametric_boundary(-1.0 + epsilon * epsilon)
    a_err = abs(point.a - 1.0 - 0.75 * epsilon * epsilon)
    b_err = abs(point.b - 3.0 * epsilon / math.sqrt(2.0))
    return a_err, b_err
