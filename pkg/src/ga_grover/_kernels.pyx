# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops: the Cl(3,0) product, iterated rotor conjugation and
the statevector Grover iteration.  Mirrors ``_pykernels`` exactly."""

import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin

from ._blades import PRODUCT_INDEX, PRODUCT_SIGN

cnp.import_array()

cdef int _IDX[8][8]
cdef double _SGN[8][8]
cdef double _REV[8]

for _i in range(8):
    _REV[_i] = 1.0 if _i < 4 else -1.0
    for _j in range(8):
        _IDX[_i][_j] = PRODUCT_INDEX[_i][_j]
        _SGN[_i][_j] = PRODUCT_SIGN[_i][_j]

BACKEND = "cython"


cdef inline void _gp(const double* a, const double* b, double* out) noexcept nogil:
    cdef int i, j
    cdef double ai
    for i in range(8):
        out[i] = 0.0
    for i in range(8):
        ai = a[i]
        if ai == 0.0:
            continue
        for j in range(8):
            out[_IDX[i][j]] += _SGN[i][j] * ai * b[j]


def geometric_product(a, b):
    cdef const double[::1] av = np.ascontiguousarray(a, dtype=np.float64)
    cdef const double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    if av.shape[0] != 8 or bv.shape[0] != 8:
        raise ValueError("multivectors need exactly 8 coefficients")
    out = np.empty(8)
    cdef double[::1] ov = out
    _gp(&av[0], &bv[0], &ov[0])
    return out


def conjugate_orbit(rotor, v, Py_ssize_t steps):
    """Return the (steps + 1, 8) array v, R v R~, R (R v R~) R~, ..."""
    cdef const double[::1] rv = np.ascontiguousarray(rotor, dtype=np.float64)
    cdef const double[::1] vv = np.ascontiguousarray(v, dtype=np.float64)
    cdef double rrev[8]
    cdef double tmp[8]
    cdef Py_ssize_t k
    cdef int i
    out = np.empty((steps + 1, 8))
    cdef double[:, ::1] ov = out
    for i in range(8):
        rrev[i] = rv[i] * _REV[i]
        ov[0, i] = vv[i]
    with nogil:
        for k in range(steps):
            _gp(&rv[0], &ov[k, 0], tmp)
            _gp(tmp, rrev, &ov[k + 1, 0])
    return out


def grover_run(amplitudes, solution_mask, axis, double phi1, double phi2, Py_ssize_t steps):
    """Iterate the generalized Grover step, returning (final amplitudes, probabilities)."""
    s_arr = np.array(amplitudes, dtype=np.complex128)
    cdef double complex[::1] s = s_arr
    cdef const cnp.uint8_t[::1] mask = np.ascontiguousarray(solution_mask, dtype=np.uint8)
    cdef const double complex[::1] ax = np.ascontiguousarray(axis, dtype=np.complex128)
    cdef Py_ssize_t n = s.shape[0]
    if mask.shape[0] != n or ax.shape[0] != n:
        raise ValueError("dimension mismatch")
    cdef double complex oracle_phase = cos(phi2) + 1j * sin(phi2)
    cdef double complex diffusion = cos(phi1) - 1.0 + 1j * sin(phi1)
    cdef double complex overlap, c
    cdef double p
    cdef Py_ssize_t k, x
    probs_arr = np.empty(steps + 1)
    cdef double[::1] probs = probs_arr
    with nogil:
        p = 0.0
        for x in range(n):
            if mask[x]:
                p += s[x].real * s[x].real + s[x].imag * s[x].imag
        probs[0] = p
        for k in range(steps):
            overlap = 0.0
            for x in range(n):
                if mask[x]:
                    s[x] = s[x] * oracle_phase
                overlap = overlap + ax[x].conjugate() * s[x]
            c = diffusion * overlap
            p = 0.0
            for x in range(n):
                s[x] = -(s[x] + c * ax[x])
                if mask[x]:
                    p += s[x].real * s[x].real + s[x].imag * s[x].imag
            probs[k + 1] = p
    return s_arr, probs_arr
