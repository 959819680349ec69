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

# The two schematic Hamiltonians and their parities:
#
#   H(2) = [[-1,  a],        P(2) = diag(1, -1)
#           [-a,  1]]
#
#   H(3) = [[-1,  a,   0  ],  P(3) = diag(1, -1, 1)
#           [-a,  1,   b  ],
#           [ 0, -b, 3 + c]]
#
# Construction is plain assignment, so every equality check on the
# matrices built here can be exact.


###############################################################################
# Imports
###############################################################################

import math

import numpy as np

from .util import PtepError, max_abs


###############################################################################
# Exceptions
###############################################################################

class ParameterDomainError(PtepError, ValueError):
    pass


class DimensionError(PtepError, ValueError):
    pass


###############################################################################
# Model Parameters
###############################################################################

SUPPORTED_DIMENSIONS = (2, 3)

# diagonal degeneracy guard for the observer level 3 + c
FORBIDDEN_SHIFTS = (-2.0, -4.0)


class ModelParams(object):
    """Couplings of the two- or three-level model.

    Instances are not validated on creation; `validate()` is called by
    every operation that consumes them, so a bad value is reported at the
    point of use with the invariant it breaks.
    """

    __slots__ = ("dimension", "a", "b", "c")

    def __init__(self, dimension, a, b = 0.0, c = 0.0):
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "a", float(a))
        object.__setattr__(self, "b", float(b))
        object.__setattr__(self, "c", float(c))

    @classmethod
    def two_level(cls, a):
        return cls(2, a)

    @classmethod
    def three_level(cls, a, b, c = 0.0):
        return cls(3, a, b = b, c = c)

    def validate(self):
        if self.dimension not in SUPPORTED_DIMENSIONS:
            raise ParameterDomainError("dimension must be 2 or 3, got "
                                       + repr(self.dimension))
        for name in ("a", "b", "c"):
            if not math.isfinite(getattr(self, name)):
                raise ParameterDomainError(name + " must be a finite real")
        if self.dimension == 2:
            if self.b != 0.0:
                raise ParameterDomainError("b must be 0 for the two-level model")
            if self.c != 0.0:
                raise ParameterDomainError("c must be 0 for the two-level model")
        elif self.c in FORBIDDEN_SHIFTS:
            raise ParameterDomainError(
                "c must differ from -2 and -4: the observer level 3 + c "
                "would coincide with a diagonal entry -1 or 1 of the "
                "two-level block (c = {})".format(self.c))
        return self

    def replace(self, **kwargs):
        values = {"a": self.a, "b": self.b, "c": self.c}
        values.update(kwargs)
        return ModelParams(kwargs.get("dimension", self.dimension),
                           values["a"], b = values["b"], c = values["c"])

    def to_JSON_object(self):
        return {
            "dimension": self.dimension,
            "a": self.a,
            "b": self.b,
            "c": self.c
        }

    def __setattr__(self, name, value):
        raise AttributeError("ModelParams is immutable")

    def __reduce__(self):
        return (ModelParams, (self.dimension, self.a, self.b, self.c))

    def __eq__(self, other):
        if not isinstance(other, ModelParams):
            return False
        return (self.dimension == other.dimension and self.a == other.a
                and self.b == other.b and self.c == other.c)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.dimension, self.a, self.b, self.c))

    def __repr__(self):
        return "ModelParams(dimension={}, a={!r}, b={!r}, c={!r})".format(
            self.dimension, self.a, self.b, self.c)


###############################################################################
# Matrices
###############################################################################

class RealSquareMatrix(object):
    """Read-only dense real square matrix."""

    def __init__(self, entries):
        array = np.array(entries, dtype=float)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise DimensionError("not a square matrix: shape "
                                 + str(array.shape))
        if array.shape[0] < 1:
            raise DimensionError("matrix order must be positive")
        array.setflags(write=False)
        self.entries = array

    @property
    def order(self):
        return self.entries.shape[0]

    @property
    def T(self):
        return RealSquareMatrix(self.entries.T)

    def is_symmetric(self, tol = 0.0):
        return max_abs(self.entries - self.entries.T) <= tol

    def scaled(self, factor):
        return RealSquareMatrix(factor * self.entries)

    def to_JSON_object(self):
        return [[float(x) for x in row] for row in self.entries]

    def __getitem__(self, key):
        return self.entries[key]

    def __array__(self, dtype = None, copy = None):
        if dtype is None:
            return self.entries
        return self.entries.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, RealSquareMatrix):
            return False
        return (self.order == other.order
                and bool(np.array_equal(self.entries, other.entries)))

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):
        return "RealSquareMatrix({})".format(self.to_JSON_object())


class ParityMatrix(object):
    """Diagonal indefinite metric with entries +1/-1."""

    def __init__(self, matrix):
        if not isinstance(matrix, RealSquareMatrix):
            matrix = RealSquareMatrix(matrix)
        diagonal = np.diag(matrix.entries)
        off = matrix.entries - np.diag(diagonal)
        if np.any(off != 0.0) or not np.all(np.abs(diagonal) == 1.0):
            raise ParameterDomainError("parity must be diagonal with "
                                       "entries +1 or -1")
        self.matrix = matrix

    @property
    def order(self):
        return self.matrix.order

    @property
    def signature(self):
        return tuple(int(x) for x in np.diag(self.matrix.entries))

    def squares_to_identity(self):
        square = self.matrix.entries @ self.matrix.entries
        return bool(np.array_equal(square, np.eye(self.order)))

    def to_JSON_object(self):
        return self.matrix.to_JSON_object()

    def __eq__(self, other):
        return isinstance(other, ParityMatrix) and self.matrix == other.matrix

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):
        return "ParityMatrix(diag{})".format(self.signature)


###############################################################################
# Operations
###############################################################################

def build_hamiltonian(params):
    params.validate()
    a, b, c = params.a, params.b, params.c
    if params.dimension == 2:
        return RealSquareMatrix([[-1.0, a],
                                 [-a, 1.0]])
    return RealSquareMatrix([[-1.0, a, 0.0],
                             [-a, 1.0, b],
                             [0.0, -b, 3.0 + c]])


def build_parity(dimension):
    if dimension == 2:
        return ParityMatrix([[1.0, 0.0],
                             [0.0, -1.0]])
    if dimension == 3:
        return ParityMatrix([[1.0, 0.0, 0.0],
                             [0.0, -1.0, 0.0],
                             [0.0, 0.0, 1.0]])
    raise ParameterDomainError("unsupported dimension: " + repr(dimension))


def pseudo_hermiticity_residual(H, P):
    """Max-entry norm of H^T P - P H (real matrices, so H^dagger = H^T)."""
    if isinstance(P, ParityMatrix):
        P = P.matrix
    if H.order != P.order:
        raise DimensionError("order mismatch: H is {0}x{0}, P is {1}x{1}"
                             .format(H.order, P.order))
    h = H.entries
    p = P.entries
    return max_abs(h.T @ p - p @ h)


def decoupled_blocks(params):
    """Split H(3) at b = 0 into the two-level block and the observer level."""
    params.validate()
    if params.dimension != 3:
        raise ParameterDomainError("decoupling needs the three-level model")
    if params.b != 0.0:
        raise ParameterDomainError("the observer level decouples only at b = 0")
    H = build_hamiltonian(params)
    return RealSquareMatrix(H.entries[:2, :2]), float(H.entries[2, 2])


def ep_distance(a):
    # positive inside D(H2), zero at the exceptional points, negative outside
    return 1.0 - abs(float(a))
