"""NumPy implementations of the hot loops.

Used when the compiled ``_kernels`` extension is unavailable, or when
``GA_GROVER_PURE_PYTHON=1`` is set.  Signatures and return values match the
extension exactly.
"""

import numpy as np

from ._blades import PRODUCT_INDEX, PRODUCT_SIGN

# structure[i, j, k] = coefficient of blade k in (blade i)(blade j)
_STRUCTURE = np.zeros((8, 8, 8))
for _i in range(8):
    for _j in range(8):
        _STRUCTURE[_i, _j, PRODUCT_INDEX[_i][_j]] = PRODUCT_SIGN[_i][_j]
_STRUCTURE.setflags(write=False)
_REVERSE_SIGNS = np.array([1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0])

BACKEND = "numpy"


def geometric_product(a, b):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    # (8,) @ (8, 8*8) -> reshape keeps this a single BLAS call
    return (a @ _STRUCTURE.reshape(8, 64)).reshape(8, 8).T @ b


def _left_matrix(r):
    # L[k, j] = coefficient k of r * e_j
    return np.einsum("i,ijk->kj", r, _STRUCTURE)


def _right_matrix(r):
    # Q[k, i] = coefficient k of e_i * r
    return np.einsum("j,ijk->ki", r, _STRUCTURE)


def conjugate_orbit(rotor, v, steps):
    """Return the (steps + 1, 8) array v, R v R~, R (R v R~) R~, ..."""
    rotor = np.asarray(rotor, dtype=np.float64)
    sandwich = _left_matrix(rotor) @ _right_matrix(rotor * _REVERSE_SIGNS)
    out = np.empty((steps + 1, 8))
    out[0] = v
    for k in range(steps):
        out[k + 1] = sandwich @ out[k]
    return out


def grover_run(amplitudes, solution_mask, axis, phi1, phi2, steps):
    """Iterate the generalized Grover step, returning (final amplitudes, probabilities).

    One step is: multiply solution amplitudes by exp(i phi2), apply
    s -> s + (exp(i phi1) - 1) <axis|s> axis, then negate.
    """
    s = np.array(amplitudes, dtype=np.complex128)
    mask = np.asarray(solution_mask, dtype=bool)
    axis = np.asarray(axis, dtype=np.complex128)
    oracle_phase = np.exp(1j * phi2)
    diffusion = np.exp(1j * phi1) - 1.0
    probs = np.empty(steps + 1)
    probs[0] = np.sum(np.abs(s[mask]) ** 2)
    for k in range(steps):
        s[mask] *= oracle_phase
        s += diffusion * np.vdot(axis, s) * axis
        s = -s
        probs[k + 1] = np.sum(np.abs(s[mask]) ** 2)
    return s, probs
