"""Multivectors, vectors and rotors of the real Clifford algebra Cl(3,0).

A :class:`Multivector` holds 8 real coefficients in the fixed blade order
``(1, e1, e2, e3, e12, e13, e23, e123)``; see :data:`BLADE_NAMES`.  The
pseudoscalar ``e123`` squares to -1, commutes with everything, and plays the
role of the imaginary unit (written ``iota`` below).

All values are immutable.  ``a * b`` is the geometric product and ``~a`` the
reverse.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from ._blades import BLADE_GRADES, BLADE_NAMES
from .errors import InvalidInputError

__all__ = [
    "BLADE_NAMES",
    "Multivector",
    "Rotor",
    "Vector3",
    "exp_bivector",
    "exp_iota",
    "geometric_product",
    "grade_project",
    "iota_vector",
    "reverse",
    "rotate_vector",
    "to_pauli",
]

ROTOR_TOLERANCE = 1e-9
_TAYLOR_CUTOFF = 1e-6
_GRADE_MASKS = tuple(np.array([g == k for g in BLADE_GRADES]) for k in range(4))
_REVERSE_SIGNS = np.array([1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0])


def _frozen(values):
    arr = np.array(values, dtype=np.float64)
    if arr.shape != (8,):
        raise InvalidInputError(f"a multivector needs 8 coefficients, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


class Multivector:
    """An element of Cl(3,0)."""

    __slots__ = ("_c",)

    def __init__(self, coefficients):
        self._c = _frozen(coefficients)

    @classmethod
    def _wrap(cls, arr):
        obj = cls.__new__(cls)
        arr.setflags(write=False)
        obj._c = arr
        return obj

    @classmethod
    def from_scalar(cls, value):
        c = np.zeros(8)
        c[0] = value
        return Multivector._wrap(c)

    @classmethod
    def from_vector(cls, x, y, z):
        return Multivector._wrap(np.array([0.0, x, y, z, 0.0, 0.0, 0.0, 0.0]))

    @classmethod
    def blade(cls, name, value=1.0):
        c = np.zeros(8)
        c[BLADE_NAMES.index(name)] = value
        return Multivector._wrap(c)

    @property
    def coefficients(self):
        """Read-only float64 array of the 8 blade coefficients."""
        return self._c

    @property
    def scalar(self):
        return float(self._c[0])

    def __getitem__(self, name):
        return float(self._c[BLADE_NAMES.index(name)])

    def grade(self, k):
        return grade_project(self, k)

    @property
    def grades(self):
        """Set of grades carrying a nonzero coefficient."""
        return {BLADE_GRADES[i] for i in np.flatnonzero(self._c)}

    def norm(self):
        """Euclidean norm of the coefficients, equal to sqrt(<a a~>_0) in Cl(3,0)."""
        return float(np.sqrt(self._c @ self._c))

    def isclose(self, other, atol=1e-12):
        other = other.coefficients if isinstance(other, Multivector) else _frozen(other)
        return bool(np.all(np.abs(self._c - other) <= atol))

    def max_abs_diff(self, other):
        return float(np.max(np.abs(self._c - other.coefficients)))

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector._wrap(self._c * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector._wrap(self._c * float(other))
        return NotImplemented

    def __truediv__(self, other):
        return Multivector._wrap(self._c / float(other))

    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = Multivector.from_scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return Multivector._wrap(self._c + other._c)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, float)):
            other = Multivector.from_scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return Multivector._wrap(self._c - other._c)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return type(self)._wrap(-self._c)

    def __invert__(self):
        return reverse(self)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash(self._c.tobytes())

    def __repr__(self):
        terms = [f"{float(c)!r}*{n}" if n != "1" else repr(float(c)) for c, n in zip(self._c, BLADE_NAMES) if c != 0]
        return f"{type(self).__name__}({' + '.join(terms) or '0.0'})"

    def to_list(self):
        return [float(c) for c in self._c]

    def to_json(self):
        """JSON array of the 8 coefficients in blade order; round-trips bit-exactly."""
        return json.dumps(self.to_list())

    @classmethod
    def from_json(cls, text):
        return cls(json.loads(text))


class Rotor(Multivector):
    """Even-grade multivector ``s + b12 e12 + b13 e13 + b23 e23``.

    Construction checks evenness only; unit norm is a property of a valid
    rotor that :meth:`drift` measures and :meth:`normalized` restores.
    """

    __slots__ = ()

    def __init__(self, coefficients):
        super().__init__(coefficients)
        odd = self._c[[1, 2, 3, 7]]
        if np.any(np.abs(odd) > 1e-12):
            raise InvalidInputError(f"rotor must be even grade, odd part is {odd.tolist()}")

    @classmethod
    def from_even(cls, scalar, e12=0.0, e13=0.0, e23=0.0):
        return cls._wrap(np.array([scalar, 0.0, 0.0, 0.0, e12, e13, e23, 0.0]))

    @classmethod
    def identity(cls):
        return cls.from_even(1.0)

    def drift(self):
        """Largest coefficient deviation of R R~ from 1."""
        rr = geometric_product(self, reverse(self)).coefficients
        return float(np.max(np.abs(rr - np.eye(8)[0])))

    def normalized(self):
        return Rotor._wrap(self._c / self.norm())


@dataclass(frozen=True)
class Vector3:
    """Real three-space vector ``x e1 + y e2 + z e3``."""

    x: float
    y: float
    z: float

    @classmethod
    def from_array(cls, arr):
        x, y, z = (float(v) for v in arr)
        return cls(x, y, z)

    @classmethod
    def from_multivector(cls, mv, atol=1e-9):
        c = mv.coefficients
        stray = np.abs(c[[0, 4, 5, 6, 7]])
        if np.any(stray > atol):
            raise InvalidInputError(f"not a pure vector: non-grade-1 part {stray.max():.3g}")
        return cls(float(c[1]), float(c[2]), float(c[3]))

    def to_multivector(self):
        return Multivector.from_vector(self.x, self.y, self.z)

    def as_array(self):
        return np.array([self.x, self.y, self.z])

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def dot(self, other):
        return self.x * other.x + self.y * other.y + self.z * other.z

    def norm(self):
        return math.sqrt(self.dot(self))

    def normalized(self):
        n = self.norm()
        return Vector3(self.x / n, self.y / n, self.z / n)

    def max_abs_diff(self, other):
        return max(abs(a - b) for a, b in zip(self, other))


def geometric_product(a, b):
    """Geometric product ``a b``; returns a :class:`Rotor` when both factors are rotors."""
    out = kernels.geometric_product(a.coefficients, b.coefficients)
    if isinstance(a, Rotor) and isinstance(b, Rotor):
        return Rotor._wrap(out)
    return Multivector._wrap(out)


def reverse(a):
    """Reverse the order of basis vectors in every blade (negates grades 2 and 3)."""
    return type(a)._wrap(a.coefficients * _REVERSE_SIGNS)


def grade_project(a, k):
    """Keep only the grade-``k`` coefficients of ``a``."""
    if k not in (0, 1, 2, 3):
        raise InvalidInputError(f"grade must be one of 0, 1, 2, 3, got {k!r}")
    return Multivector._wrap(np.where(_GRADE_MASKS[k], a.coefficients, 0.0))


def iota_vector(v):
    """The bivector ``iota v`` dual to a vector.

    With the stored blade order, iota e1 = e23, iota e2 = -e13, iota e3 = e12.
    """
    x, y, z = v
    return Multivector._wrap(np.array([0.0, 0.0, 0.0, 0.0, z, -y, x, 0.0]))


def exp_bivector(b):
    """``exp(B) = cos|B| + (B/|B|) sin|B|`` for a pure bivector ``B``."""
    c = b.coefficients
    if np.any(np.abs(c[[0, 1, 2, 3, 7]]) > 1e-12):
        raise InvalidInputError("exp_bivector needs a pure grade-2 argument")
    mag = math.sqrt(c[4] ** 2 + c[5] ** 2 + c[6] ** 2)
    if mag < _TAYLOR_CUTOFF:
        sinc = 1.0 - mag * mag / 6.0
    else:
        sinc = math.sin(mag) / mag
    return Rotor.from_even(math.cos(mag), c[4] * sinc, c[5] * sinc, c[6] * sinc)


def exp_iota(axis, angle):
    """``exp(iota * angle * axis)`` for a unit ``axis``; rotates by ``-2*angle`` about it."""
    return exp_bivector(iota_vector(axis) * angle)


def rotate_vector(r, v):
    """Conjugate ``v`` by the unit rotor ``r``: ``r v r~``."""
    if r.drift() > ROTOR_TOLERANCE:
        raise InvalidInputError(f"rotor is not unit norm (drift {r.drift():.3g})")
    out = kernels.geometric_product(
        kernels.geometric_product(r.coefficients, v.to_multivector().coefficients),
        r.coefficients * _REVERSE_SIGNS,
    )
    return Vector3(float(out[1]), float(out[2]), float(out[3]))


_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def _blade_matrix(name):
    out = np.eye(2, dtype=np.complex128)
    for digit in name[1:] if name != "1" else "":
        out = out @ _PAULI[int(digit) - 1]
    return out


PAULI_BLADES = np.stack([_blade_matrix(n) for n in BLADE_NAMES])


def to_pauli(a):
    """Complex 2x2 image of ``a`` under e_k -> Pauli matrix sigma_k."""
    return np.tensordot(a.coefficients, PAULI_BLADES, axes=1)
