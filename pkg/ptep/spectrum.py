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

import numpy as np

from .cubic import (
    ZERO_THRESHOLD, TRIPLE_FACTOR, characteristic_coefficients, secular_cubic,
    solve_cubic, solve_quadratic
)
from .matmodel import RealSquareMatrix, build_hamiltonian
from .util import PtepError


###############################################################################
# Constants
###############################################################################

RANK_PIVOT = 1e-9

_log = logging.getLogger(__name__)


###############################################################################
# Exceptions
###############################################################################

class PreconditionError(PtepError, ValueError):
    pass


###############################################################################
# Spectrum Classification
###############################################################################

class SpectrumClassification(object):
    REAL_SIMPLE = "RealSimple"
    EXCEPTIONAL_DOUBLE = "ExceptionalDouble"
    EXCEPTIONAL_TRIPLE = "ExceptionalTriple"
    COMPLEX_PAIR = "ComplexPair"

    CLASSES = (REAL_SIMPLE, EXCEPTIONAL_DOUBLE, EXCEPTIONAL_TRIPLE,
               COMPLEX_PAIR)

    def __init__(self, cls, roots, jordan_defect = 0):
        if cls not in self.CLASSES:
            raise ValueError("unknown spectrum class: " + repr(cls))
        self.cls = cls
        self.roots = roots
        self.jordan_defect = jordan_defect

    @property
    def threshold(self):
        # width of the discriminant band that counted as zero
        return self.roots.threshold

    @property
    def is_exceptional(self):
        return self.cls in (self.EXCEPTIONAL_DOUBLE, self.EXCEPTIONAL_TRIPLE)

    def to_JSON_object(self):
        data = self.roots.to_JSON_object()
        data["class"] = self.cls
        data["jordanDefect"] = self.jordan_defect
        return data

    def __repr__(self):
        return "SpectrumClassification({}, {!r}, defect={})".format(
            self.cls, self.roots, self.jordan_defect)


def class_of(roots):
    if not roots.is_real:
        return SpectrumClassification.COMPLEX_PAIR
    multiplicity = roots.max_multiplicity
    if multiplicity >= 3:
        return SpectrumClassification.EXCEPTIONAL_TRIPLE
    if multiplicity == 2:
        return SpectrumClassification.EXCEPTIONAL_DOUBLE
    return SpectrumClassification.REAL_SIMPLE


def classify(params, threshold = ZERO_THRESHOLD, triple_tol = TRIPLE_FACTOR,
             rank_pivot = RANK_PIVOT):
    params.validate()
    if params.dimension == 2:
        roots = solve_quadratic(params.a, threshold = threshold)
    else:
        roots = solve_cubic(secular_cubic(params), threshold = threshold,
                            triple_tol = triple_tol)
    cls = class_of(roots)
    defect = 0
    if cls != SpectrumClassification.REAL_SIMPLE:
        H = build_hamiltonian(params)
        for value, multiplicity in roots.repeated_roots():
            defect += jordan_defect(H, value, multiplicity,
                                    pivot = rank_pivot,
                                    triple_tol = triple_tol)
    if cls in (SpectrumClassification.EXCEPTIONAL_DOUBLE,
               SpectrumClassification.EXCEPTIONAL_TRIPLE):
        _log.debug("classify: %r inside the zero band (%s): %s",
                   params, roots.threshold, cls)
    return SpectrumClassification(cls, roots, jordan_defect = defect)


def in_domain(params, threshold = ZERO_THRESHOLD):
    cls = classify(params, threshold = threshold).cls
    return cls == SpectrumClassification.REAL_SIMPLE


###############################################################################
# Jordan Defect
###############################################################################

def jordan_defect(H, eigenvalue, algebraic_multiplicity, pivot = RANK_PIVOT,
                  triple_tol = TRIPLE_FACTOR):
    if not isinstance(H, RealSquareMatrix):
        H = RealSquareMatrix(H)
    if algebraic_multiplicity < 2:
        raise PreconditionError("jordan_defect needs a repeated eigenvalue, "
                                "got multiplicity "
                                + str(algebraic_multiplicity))
    if not _is_repeated_root(H, eigenvalue, triple_tol):
        raise PreconditionError("{!r} is not a repeated eigenvalue of the "
                                "matrix".format(eigenvalue))
    shifted = H.entries - eigenvalue * np.eye(H.order)
    geometric = H.order - matrix_rank(shifted, pivot)
    _log.debug("jordan_defect: eigenvalue %s algebraic %s geometric %s",
               eigenvalue, algebraic_multiplicity, geometric)
    return max(0, algebraic_multiplicity - geometric)


def matrix_rank(matrix, pivot = RANK_PIVOT):
    """Row reduction with partial pivoting; pivots below
    `pivot * max|entry|` count as zero."""
    m = np.array(matrix, dtype=float)
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    if scale == 0.0:
        return 0
    cutoff = pivot * scale
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        best = rank + int(np.argmax(np.abs(m[rank:, col])))
        if abs(m[best, col]) <= cutoff:
            continue
        if best != rank:
            m[[rank, best]] = m[[best, rank]]
        for row in range(rank + 1, rows):
            m[row, col:] -= (m[row, col] / m[rank, col]) * m[rank, col:]
        rank += 1
    return rank


def _is_repeated_root(H, value, triple_tol = TRIPLE_FACTOR):
    # a repeated root annuls both the characteristic polynomial and its
    # derivative, up to the width of the triple-root band
    coefficients = characteristic_coefficients(H)
    if not isinstance(coefficients, tuple):
        coefficients = coefficients.coefficients
    monic = np.array(coefficients, dtype=float) / coefficients[0]
    degree = len(monic) - 1
    scale = max([1.0] + [abs(monic[k]) ** (1.0 / k)
                         for k in range(1, degree + 1)])
    value_at = np.polyval(monic, value)
    slope_at = np.polyval(np.polyder(monic), value)
    return (abs(slope_at) <= triple_tol * scale ** (degree - 1)
            and abs(value_at) <= triple_tol * scale ** degree)
