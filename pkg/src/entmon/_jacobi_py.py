"""Pure-Python (numpy) cyclic Jacobi kernel for Hermitian eigenvalues.

Fallback used when the compiled extension is unavailable. Same contract as
``entmon._jacobi_cy.jacobi_eigenvalues``: diagonalize a complex Hermitian
matrix in place by cyclic complex Jacobi rotations.
"""

import numpy as np

COMPILED = False


def _offdiagonal_norm(a):
    n = a.shape[0]
    mask = ~np.eye(n, dtype=bool)
    return float(np.sqrt(np.sum(np.abs(a[mask]) ** 2)))


def jacobi_eigenvalues(a, tol=1e-12, max_sweeps=100):
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.

    Parameters
    ----------
    a : ndarray
        Square complex Hermitian matrix; not modified.
    tol : float
        Off-diagonal Frobenius-norm convergence threshold.
    max_sweeps : int
        Hard cap on the number of full upper-triangle sweeps.

    Returns
    -------
    (eigenvalues, sweeps, converged) : (ndarray, int, bool)
        Unsorted real eigenvalues, sweeps used, and a convergence flag.
    """
    a = np.array(a, dtype=np.complex128)
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0].real]), 0, True

    sweeps = 0
    converged = _offdiagonal_norm(a) <= tol
    while not converged and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                m = abs(apq)
                if m == 0.0:
                    continue
                phase = apq / m
                tau = (a[q, q].real - a[p, p].real) / (2.0 * m)
                t = np.sign(tau) if tau != 0 else 1.0
                t = t / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c

                # column update: A <- A U with U mixing columns p, q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(phase) * col_q
                a[:, q] = s * phase * col_p + c * col_q
                # row update: A <- U^dagger A
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * np.conj(phase) * row_p + c * row_q
                # the (p, q) element is annihilated exactly
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
        sweeps += 1
        converged = _offdiagonal_norm(a) <= tol

    return np.diag(a).real.copy(), sweeps, converged
