# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi kernel for Hermitian eigenvalues.

Hot loop of the eigensolver; the pure-Python twin lives in
``entmon._jacobi_py`` and is selected at import time when this extension
is not built.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, hypot, sqrt

cnp.import_array()

COMPILED = True


cdef double _offdiagonal_norm(double complex[:, :] a, Py_ssize_t n) nogil:
    cdef Py_ssize_t i, j
    cdef double acc = 0.0, re, im
    for i in range(n):
        for j in range(n):
            if i != j:
                re = a[i, j].real
                im = a[i, j].imag
                acc += re * re + im * im
    return sqrt(acc)


def jacobi_eigenvalues(a, double tol=1e-12, int max_sweeps=100):
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ``(eigenvalues, sweeps, converged)`` with unsorted real
    eigenvalues; the input is not modified.
    """
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] work = np.array(
        a, dtype=np.complex128, order="C")
    cdef double complex[:, :] m = work
    cdef Py_ssize_t n = work.shape[0]
    cdef Py_ssize_t p, q, k
    cdef int sweeps = 0
    cdef bint converged
    cdef double mag, tau, t, c, s, sign
    cdef double complex apq, phase, cphase, vp, vq

    if n == 1:
        return np.array([work[0, 0].real]), 0, True

    converged = _offdiagonal_norm(m, n) <= tol
    while not converged and sweeps < max_sweeps:
        with nogil:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = m[p, q]
                    mag = hypot(apq.real, apq.imag)
                    if mag == 0.0:
                        continue
                    phase = apq / mag
                    cphase = phase.conjugate()
                    tau = (m[q, q].real - m[p, p].real) / (2.0 * mag)
                    sign = 1.0 if tau >= 0.0 else -1.0
                    t = sign / (fabs(tau) + hypot(1.0, tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    # A <- A U, mixing columns p and q
                    for k in range(n):
                        vp = m[k, p]
                        vq = m[k, q]
                        m[k, p] = c * vp - s * cphase * vq
                        m[k, q] = s * phase * vp + c * vq
                    # A <- U^dagger A, mixing rows p and q
                    for k in range(n):
                        vp = m[p, k]
                        vq = m[q, k]
                        m[p, k] = c * vp - s * phase * vq
                        m[q, k] = s * cphase * vp + c * vq
                    m[p, q] = 0.0
                    m[q, p] = 0.0
                    m[p, p] = m[p, p].real
                    m[q, q] = m[q, q].real
        sweeps += 1
        converged = _offdiagonal_norm(m, n) <= tol

    return np.diag(work).real.copy(), sweeps, converged
