"""Hypercube-to-state maps and the partial-transpose separability test.

A two-qubit density matrix is assembled from a point of the unit cube as
rho = U diag(lam) U*, where ``lam`` comes from a stick-breaking map of the
first block of coordinates and ``U`` from a composition of two-level
rotations (Hurwitz ordering) of the remaining twelve.  Uniform cube input
pushes forward to the uniform measure on the eigenvalue simplex and the
Haar-induced measure on the flag manifold U(4)/U(1)^4, so the integrand of
the volume computation reduces to the eigenvalue weight alone.

All maps accept a single point ``(d,)`` or a batch ``(n, d)``.
"""

from __future__ import annotations

import numpy as np
from scipy.special import betaincinv

#: PPT decision tolerance on the minimum partial-transpose eigenvalue
SEP_EIG_TOL = -1e-13

_HERMITICITY_TOL = 1e-10


def _batched(u, width):
    u = np.asarray(u, dtype=float)
    single = u.ndim == 1
    u = np.atleast_2d(u)
    if u.shape[1] != width:
        raise ValueError(f"expected {width} coordinates, got {u.shape[1]}")
    return u, single


def simplex_from_cube(u) -> np.ndarray:
    """Stick-breaking map of ``N-1`` cube coordinates to the uniform simplex.

    Level i peels off a Beta(1, N-1-i)-distributed fraction of the remaining
    mass via its inverse CDF, so uniform input yields a uniformly distributed
    spectrum; the last entry is the exact remainder.
    """
    u, single = _batched(u, np.shape(u)[-1])
    n, m = u.shape
    levels = m + 1
    lam = np.empty((n, levels))
    rest = np.ones(n)
    for i in range(m):
        frac = 1.0 - u[:, i] ** (1.0 / (m - i))
        lam[:, i] = rest * frac
        rest = rest * (1.0 - frac)
    lam[:, m] = rest
    return lam[0] if single else lam


def sqrt_simplex_from_cube(u) -> np.ndarray:
    """Stick-breaking map to the Dirichlet(1/2, ..., 1/2) measure.

    The pushforward density is proportional to prod(lam)**-0.5, absorbing
    the square-root singularity of the eigenvalue weight; used by the
    importance-sampled integration path.  Levels with k remaining stick
    halves use the Beta(1/2, k/2) inverse CDF (closed forms for k = 1, 2).
    """
    u, single = _batched(u, np.shape(u)[-1])
    n, m = u.shape
    lam = np.empty((n, m + 1))
    rest = np.ones(n)
    for i in range(m):
        k = m - i
        if k == 1:
            frac = np.sin(0.5 * np.pi * u[:, i]) ** 2
        elif k == 2:
            frac = u[:, i] ** 2
        else:
            frac = betaincinv(0.5, 0.5 * k, u[:, i])
        lam[:, i] = rest * frac
        rest = rest * (1.0 - frac)
    lam[:, m] = rest
    return lam[0] if single else lam


# Rotation schedule for the flag map: (row pair p, level index k, slot of
# theta input, slot of phi input), applied as successive left-multiplications.
# Grouped right-to-left this is W1(cols 1) . W2(col 2) . W3(col 3) with
# W1 = R23 R12 R01, W2 = R23 R12, W3 = R23.
_FLAG_SCHEDULE = (
    (2, 1, 10, 11),
    (1, 2, 6, 7),
    (2, 1, 8, 9),
    (0, 3, 0, 1),
    (1, 2, 2, 3),
    (2, 1, 4, 5),
)


def flag_from_cube(u) -> np.ndarray:
    """Map 12 cube coordinates to a flag coset representative in U(4).

    Composite of six elementary two-level rotations E(theta, phi) in the
    Hurwitz ordering with phi = 2 pi u and theta = arcsin(xi**(1/(2k))),
    k the rotation's level index; uniform input induces the Haar measure
    on U(4)/U(1)^4 (column phases are immaterial after conjugation).
    """
    u, single = _batched(u, 12)
    n = u.shape[0]
    mat = np.zeros((n, 4, 4), dtype=complex)
    mat[:, range(4), range(4)] = 1.0
    for p, k, slot_t, slot_p in _FLAG_SCHEDULE:
        theta = np.arcsin(u[:, slot_t] ** (1.0 / (2.0 * k)))
        phi = 2.0 * np.pi * u[:, slot_p]
        c = np.cos(theta)[:, None]
        s = np.sin(theta)[:, None]
        e = np.exp(1j * phi)[:, None]
        top = c * mat[:, p, :] - s * np.conj(e) * mat[:, p + 1, :]
        bot = s * e * mat[:, p, :] + c * mat[:, p + 1, :]
        mat[:, p, :] = top
        mat[:, p + 1, :] = bot
    return mat[0] if single else mat


def assemble(lam, unitary) -> np.ndarray:
    """Spectral assembly rho = U diag(lam) U*."""
    lam = np.asarray(lam, dtype=float)
    unitary = np.asarray(unitary, dtype=complex)
    if unitary.ndim == 2:
        return (unitary * lam) @ unitary.conj().T
    return np.einsum("nij,nj,nkj->nik", unitary, lam.astype(complex),
                     unitary.conj())


def partial_transpose(rho) -> np.ndarray:
    """Transpose the second-qubit indices: ((a,b),(c,d)) -> ((a,d),(c,b))."""
    rho = np.asarray(rho)
    if rho.ndim == 2:
        return rho.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)
    n = rho.shape[0]
    return rho.reshape(n, 2, 2, 2, 2).transpose(0, 1, 4, 3, 2).reshape(n, 4, 4)


def hermitian_eigenvalues(mat) -> np.ndarray:
    """All four eigenvalues of a Hermitian 4x4 matrix, ascending.

    Rejects inputs that are not Hermitian within 1e-10 of their norm.
    """
    mat = np.asarray(mat, dtype=complex)
    if mat.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    scale = max(float(np.abs(mat).max()), 1e-300)
    if float(np.abs(mat - mat.conj().T).max()) > _HERMITICITY_TOL * scale:
        raise ValueError("matrix is not Hermitian within tolerance")
    from . import _backend

    return _backend.get().hermitian_eigenvalues4(mat)


def is_separable(rho) -> bool:
    """Peres-Horodecki test: nonnegative partial-transpose spectrum."""
    evals = hermitian_eigenvalues(partial_transpose(rho))
    return bool(evals[0] >= SEP_EIG_TOL)
