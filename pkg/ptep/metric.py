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
# Imports
###############################################################################

import logging
import math

from .matmodel import (
    DimensionError, ModelParams, ParameterDomainError, RealSquareMatrix,
    build_hamiltonian
)
from .util import PtepError, max_abs


###############################################################################
# Constants
###############################################################################

SYMMETRY_TOL = 1e-14

_log = logging.getLogger(__name__)


###############################################################################
# Exceptions
###############################################################################

class EpDegenerateError(PtepError, ValueError):
    pass


class ContractError(PtepError, ValueError):
    pass


###############################################################################
# Metric Family
###############################################################################

class MetricCandidate(object):
    """Positive metric Theta making H(2)(a) self-adjoint.

    `alpha` is the sector angle with a = cos(alpha); `gamma` in [0, pi/2)
    selects a member of the family and `scale` is the free overall factor.
    """

    def __init__(self, theta, alpha, gamma, xi, scale = 1.0):
        self.theta = theta
        self.alpha = float(alpha)
        self.gamma = float(gamma)
        self.xi = float(xi)
        self.scale = float(scale)

    @property
    def a(self):
        return math.cos(self.alpha)

    @property
    def determinant(self):
        return (self.scale * math.sin(self.alpha)
                * math.cos(self.gamma)) ** 2

    def to_JSON_object(self):
        return {
            "a": self.a,
            "alpha": self.alpha,
            "gamma": self.gamma,
            "xi": self.xi,
            "scale": self.scale,
            "theta": self.theta.to_JSON_object(),
            "determinant": self.determinant
        }

    def __repr__(self):
        return "MetricCandidate(alpha={!r}, gamma={!r}, scale={!r})".format(
            self.alpha, self.gamma, self.scale)


def build_metric(a, gamma, scale = 1.0):
    a = float(a)
    gamma = float(gamma)
    if not math.isfinite(a):
        raise ParameterDomainError("a must be finite")
    if abs(a) >= 1.0:
        raise EpDegenerateError("no invertible metric at |a| >= 1 "
                                "(a = {})".format(a))
    if not 0.0 <= gamma < math.pi / 2.0:
        raise ParameterDomainError("gamma must lie in [0, pi/2), got "
                                   + repr(gamma))
    if not scale > 0.0 or not math.isfinite(scale):
        raise ParameterDomainError("scale must be positive and finite")
    alpha = math.acos(a)
    xi = math.sin(alpha) * math.sin(gamma)
    off = -math.cos(alpha)
    theta = RealSquareMatrix([[1.0 + xi, off],
                              [off, 1.0 - xi]])
    if scale != 1.0:
        theta = theta.scaled(scale)
    return MetricCandidate(theta, alpha, gamma, xi, scale = scale)


def quasi_hermiticity_residual(H, theta):
    """Max-entry norm of Theta H - H^T Theta."""
    if isinstance(theta, MetricCandidate):
        theta = theta.theta
    if H.order != theta.order:
        raise DimensionError("order mismatch: H is {0}x{0}, Theta is {1}x{1}"
                             .format(H.order, theta.order))
    if not theta.is_symmetric(SYMMETRY_TOL):
        raise ContractError("metric must be symmetric")
    h = H.entries
    t = theta.entries
    return max_abs(t @ h - h.T @ t)


def positivity_certificate(theta):
    """(min eigenvalue > 0, min eigenvalue) of a symmetric 2x2 matrix."""
    if isinstance(theta, MetricCandidate):
        theta = theta.theta
    if theta.order != 2:
        raise DimensionError("positivity certificate covers 2x2 only")
    if not theta.is_symmetric(SYMMETRY_TOL):
        raise ContractError("metric must be symmetric")
    t = theta.entries
    half_trace = 0.5 * (t[0, 0] + t[1, 1])
    det = t[0, 0] * t[1, 1] - t[0, 1] * t[1, 0]
    spread = math.sqrt(max(0.0, half_trace * half_trace - det))
    smallest = float(half_trace - spread)
    return smallest > 0.0, smallest


def ep_degeneration_scan(gamma, a_sequence, scale = 1.0):
    """det Theta(a, gamma) along `a_sequence`, which should approach 1."""
    dets = []
    for a in a_sequence:
        candidate = build_metric(a, gamma, scale = scale)
        dets.append(candidate.determinant)
    _log.debug("degeneration scan at gamma = %s: %s", gamma, dets)
    return dets


def metric_report(a, gamma, scale = 1.0):
    """Metric together with its residual against H(2)(a) and positivity."""
    candidate = build_metric(a, gamma, scale = scale)
    H = build_hamiltonian(ModelParams.two_level(a))
    residual = quasi_hermiticity_residual(H, candidate.theta)
    positive, smallest = positivity_certificate(candidate.theta)
    return candidate, residual, positive, smallest
