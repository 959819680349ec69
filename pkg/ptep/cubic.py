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

# Secular polynomial of H(3):
#
#   -E^3 + (3 + c) E^2 + (1 - a^2 - b^2) E + (-3 + 3a^2 - c + c a^2 - b^2)
#
# Roots are classified by the sign of the discriminant, with a scale-aware
# zero band.  Writing the polynomial in monic form E^3 + B E^2 + C E + D,
#
#   S    = max(1, |B|, |C|^(1/2), |D|^(1/3))
#   band = ZERO_THRESHOLD * S^4 * c3^4
#
# and |discriminant| <= band counts as a repeated root.  Inside the band the
# roots come from the closed repeated-root formulas (the trigonometric branch
# loses half of the digits next to a double root).  A repeated root is triple
# when the depressed coefficient p is itself negligible, |p| <= TRIPLE_FACTOR
# * S^2: triple roots move like the square or cube root of any coefficient
# error, so their band has to be much wider than the double-root one.


###############################################################################
# Imports
###############################################################################

import logging
import math

import numpy as np

from .matmodel import ParameterDomainError, RealSquareMatrix
from .util import PtepError


###############################################################################
# Constants
###############################################################################

ZERO_THRESHOLD = 1e-10
TRIPLE_FACTOR = 1e-6

_SQRT3 = math.sqrt(3.0)

_log = logging.getLogger(__name__)


###############################################################################
# Exceptions
###############################################################################

class UnsupportedDimensionError(ParameterDomainError):
    pass


class DegeneratePolynomialError(PtepError, ValueError):
    pass


###############################################################################
# Polynomials and Root Sets
###############################################################################

class CubicPoly(object):
    """c3 E^3 + c2 E^2 + c1 E + c0 with real coefficients and c3 != 0."""

    __slots__ = ("c3", "c2", "c1", "c0")

    def __init__(self, c3, c2, c1, c0):
        values = (float(c3), float(c2), float(c1), float(c0))
        if not all(math.isfinite(v) for v in values):
            raise DegeneratePolynomialError("coefficients must be finite")
        if values[0] == 0.0:
            raise DegeneratePolynomialError("leading coefficient must be "
                                            "non-zero")
        self.c3, self.c2, self.c1, self.c0 = values

    @property
    def coefficients(self):
        return (self.c3, self.c2, self.c1, self.c0)

    def monic(self):
        return (self.c2 / self.c3, self.c1 / self.c3, self.c0 / self.c3)

    @property
    def scale(self):
        B, C, D = self.monic()
        return max(1.0, abs(B), math.sqrt(abs(C)), abs(D) ** (1.0 / 3.0))

    @property
    def coefficient_scale(self):
        return max(1.0, abs(self.c0), abs(self.c1), abs(self.c2), abs(self.c3))

    def zero_band(self, threshold = ZERO_THRESHOLD):
        return threshold * self.scale ** 4 * self.c3 ** 4

    def depressed(self):
        """(p, q, shift) with E = t + shift and t^3 + p t + q = 0."""
        B, C, D = self.monic()
        p = C - B * B / 3.0
        q = 2.0 * B ** 3 / 27.0 - B * C / 3.0 + D
        return p, q, -B / 3.0

    def __call__(self, x):
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0

    def derivative(self, x):
        return (3.0 * self.c3 * x + 2.0 * self.c2) * x + self.c1

    def to_JSON_object(self):
        return {"c3": self.c3, "c2": self.c2, "c1": self.c1, "c0": self.c0}

    def __eq__(self, other):
        if not isinstance(other, CubicPoly):
            return False
        return self.coefficients == other.coefficients

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return "CubicPoly({!r}, {!r}, {!r}, {!r})".format(*self.coefficients)


class RootSet(object):
    """Roots of a real quadratic or cubic.

    `roots` holds the distinct real roots in ascending order and
    `multiplicities` their counts; a complex conjugate pair, if any, is
    kept apart as `(real part, imaginary part > 0)`.
    """

    def __init__(self, roots, multiplicities, discriminant,
                 complex_pair = None, threshold = 0.0, leading = 1.0):
        if len(roots) != len(multiplicities):
            raise ValueError("one multiplicity per root")
        order = sorted(range(len(roots)), key = lambda i: roots[i])
        self.roots = tuple(float(roots[i]) for i in order)
        self.multiplicities = tuple(int(multiplicities[i]) for i in order)
        self.discriminant = float(discriminant)
        self.complex_pair = (None if complex_pair is None
                             else (float(complex_pair[0]),
                                   abs(float(complex_pair[1]))))
        self.threshold = float(threshold)
        self.leading = float(leading)

    @property
    def degree(self):
        return sum(self.multiplicities) + (2 if self.complex_pair else 0)

    @property
    def is_real(self):
        return self.complex_pair is None

    @property
    def max_multiplicity(self):
        return max(self.multiplicities) if self.multiplicities else 0

    @property
    def has_repeated_root(self):
        return self.max_multiplicity > 1

    def repeated_roots(self):
        return [(r, m) for r, m in zip(self.roots, self.multiplicities)
                if m > 1]

    def real_values(self):
        values = []
        for r, m in zip(self.roots, self.multiplicities):
            values.extend([r] * m)
        return values

    def values(self):
        values = list(self.real_values())
        if self.complex_pair:
            re, im = self.complex_pair
            values.append(complex(re, -im))
            values.append(complex(re, im))
        return values

    def reconstruct(self):
        """Coefficients of leading * prod(E - r), highest power first."""
        coefficients = np.real(np.poly(np.array(self.values(), dtype=complex)))
        return tuple(float(x) for x in self.leading * coefficients)

    def to_JSON_object(self):
        return {
            "roots": list(self.roots),
            "multiplicities": list(self.multiplicities),
            "complexPair": (list(self.complex_pair)
                            if self.complex_pair else None),
            "discriminant": self.discriminant,
            "threshold": self.threshold
        }

    def __repr__(self):
        return ("RootSet(roots={}, multiplicities={}, complex_pair={}, "
                "discriminant={!r})").format(self.roots, self.multiplicities,
                                             self.complex_pair,
                                             self.discriminant)


###############################################################################
# Secular Polynomials
###############################################################################

def secular_cubic(params):
    params.validate()
    if params.dimension != 3:
        raise UnsupportedDimensionError(
            "the secular cubic needs dimension 3; the two-level model "
            "goes through solve_quadratic")
    a2 = params.a * params.a
    b2 = params.b * params.b
    c = params.c
    return CubicPoly(-1.0, 3.0 + c, 1.0 - a2 - b2,
                     -3.0 + 3.0 * a2 - c + c * a2 - b2)


def ep_cubic(z, y):
    """-(E - z)^2 (E - y): a double root z plus a single root y."""
    return CubicPoly(-1.0, 2.0 * z + y, -(z * z + 2.0 * y * z), y * z * z)


def characteristic_coefficients(H):
    """det(H - E I) by cofactor expansion, highest power first.

    Order 3 gives a CubicPoly; order 2 gives the tuple (1, -tr H, det H).
    """
    if not isinstance(H, RealSquareMatrix):
        H = RealSquareMatrix(H)
    h = H.entries
    if H.order == 2:
        return (1.0, -(h[0, 0] + h[1, 1]),
                h[0, 0] * h[1, 1] - h[0, 1] * h[1, 0])
    if H.order == 3:
        trace = h[0, 0] + h[1, 1] + h[2, 2]
        minors = (h[0, 0] * h[1, 1] - h[0, 1] * h[1, 0]
                  + h[0, 0] * h[2, 2] - h[0, 2] * h[2, 0]
                  + h[1, 1] * h[2, 2] - h[1, 2] * h[2, 1])
        det = (h[0, 0] * (h[1, 1] * h[2, 2] - h[1, 2] * h[2, 1])
               - h[0, 1] * (h[1, 0] * h[2, 2] - h[1, 2] * h[2, 0])
               + h[0, 2] * (h[1, 0] * h[2, 1] - h[1, 1] * h[2, 0]))
        return CubicPoly(-1.0, trace, -minors, det)
    raise UnsupportedDimensionError("characteristic polynomial only for "
                                    "orders 2 and 3")


###############################################################################
# Solvers
###############################################################################

def solve_quadratic(a, threshold = ZERO_THRESHOLD):
    """Spectrum of H(2): E^2 - (1 - a^2) = 0, so E = +-sqrt(1 - a^2)."""
    a = float(a)
    gap = 1.0 - a * a
    discriminant = 4.0 * gap
    band = threshold * max(1.0, a * a)
    if abs(gap) <= band:
        return RootSet((0.0,), (2,), discriminant, threshold = band)
    if gap > 0.0:
        e = math.sqrt(gap)
        return RootSet((-e, e), (1, 1), discriminant, threshold = band)
    return RootSet((), (), discriminant, complex_pair = (0.0, math.sqrt(-gap)),
                   threshold = band)


def cubic_discriminant(poly):
    """Discriminant of the cubic,

        18 c3 c2 c1 c0 - 4 c2^3 c0 + c2^2 c1^2 - 4 c3 c1^3 - 27 c3^2 c0^2,

    evaluated through the depressed form c3^4 (-4 p^3 - 27 q^2), which is
    algebraically identical and keeps its digits next to a triple root,
    where p and q vanish separately.
    """
    p, q, _ = poly.depressed()
    return poly.c3 ** 4 * (-4.0 * p ** 3 - 27.0 * q * q)


def split_repeated(poly, triple_tol = TRIPLE_FACTOR):
    """(z, y): double root z and single root y of a cubic whose
    discriminant is negligible; z == y when the root is triple."""
    p, q, shift = poly.depressed()
    if abs(p) <= triple_tol * poly.scale ** 2:
        return shift, shift
    return shift - 1.5 * q / p, shift + 3.0 * q / p


def solve_cubic(poly, threshold = ZERO_THRESHOLD,
                triple_tol = TRIPLE_FACTOR):
    discriminant = cubic_discriminant(poly)
    band = poly.zero_band(threshold)
    if abs(discriminant) <= band:
        double, single = split_repeated(poly, triple_tol)
        if double == single:
            _log.debug("solve_cubic: triple root at %s", double)
            return RootSet((double,), (3,), discriminant, threshold = band,
                           leading = poly.c3)
        _log.debug("solve_cubic: double root %s, single root %s",
                   double, single)
        return RootSet((double, single), (2, 1), discriminant,
                       threshold = band, leading = poly.c3)
    p, q, shift = poly.depressed()
    if discriminant > 0.0:
        raw = _three_cosines(p, q)
        gaps = [min(abs(t - s) for j, s in enumerate(raw) if j != i)
                for i, t in enumerate(raw)]
        roots = [_polish(poly, shift + t, gap / 2.0)
                 for t, gap in zip(raw, gaps)]
        return RootSet(roots, (1, 1, 1), discriminant, threshold = band,
                       leading = poly.c3)
    real, pair = _cardano(p, q)
    real = _polish(poly, shift + real)
    return RootSet((real,), (1,), discriminant,
                   complex_pair = (shift + pair[0], pair[1]),
                   threshold = band, leading = poly.c3)


def _three_cosines(p, q):
    # three distinct real roots, so p < 0
    m = 2.0 * math.sqrt(-p / 3.0)
    argument = (3.0 * q / (2.0 * p)) * math.sqrt(-3.0 / p)
    theta = math.acos(min(1.0, max(-1.0, argument))) / 3.0
    return [m * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]


def _cardano(p, q):
    root = math.sqrt(max(0.0, q * q / 4.0 + p ** 3 / 27.0))
    # pick the sign that avoids cancellation
    u = -math.copysign(float(np.cbrt(abs(q) / 2.0 + root)), q)
    v = -p / (3.0 * u) if u != 0.0 else 0.0
    return u + v, (-(u + v) / 2.0, _SQRT3 / 2.0 * abs(u - v))


def _polish(poly, x, max_step = math.inf):
    """One guarded Newton step on the original polynomial."""
    slope = poly.derivative(x)
    if slope == 0.0:
        return x
    value = poly(x)
    step = value / slope
    if abs(step) >= max_step:
        return x
    candidate = x - step
    if abs(poly(candidate)) < abs(value):
        return candidate
    return x

