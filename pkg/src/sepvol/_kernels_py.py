"""Pure-NumPy evaluation kernels (fallback backend).

Same interface as the compiled extension ``sepvol._kernels``: batched
weight evaluation plus the PPT separability decision, and a 4x4 Hermitian
eigensolver.  Batches should be pre-chunked by the caller; a 2**18-point
chunk of 4x4 complex matrices costs about 70 MB here.
"""

from __future__ import annotations

import numpy as np

from . import metrics, states

BACKEND_NAME = "python"


def _weights(lam: np.ndarray, metric_names, with_det: bool) -> np.ndarray:
    n, levels = lam.shape
    base = -0.5 * np.log(lam).sum(axis=1) if with_det else np.zeros(n)
    out = np.empty((n, len(metric_names)))
    for col, name in enumerate(metric_names):
        logw = base.copy()
        for i in range(levels):
            for j in range(i + 1, levels):
                logw += metrics.pair_log_terms(name, lam[:, i], lam[:, j])
        out[:, col] = np.exp(logw)
    return out


def simplex_weights(lam: np.ndarray, metric_names, with_det: bool) -> np.ndarray:
    """Eigenvalue weights for each metric; (n, len(metric_names))."""
    return _weights(np.asarray(lam, dtype=float), metric_names, with_det)


def evaluate_batch(u_flag: np.ndarray, lam: np.ndarray, metric_names,
                   with_det: bool):
    """Weights plus PPT separability flags for a batch of cube points."""
    w = _weights(lam, metric_names, with_det)
    unitary = states.flag_from_cube(u_flag)
    rho = states.assemble(lam, unitary)
    evals = np.linalg.eigvalsh(states.partial_transpose(rho))
    sep = evals[:, 0] >= states.SEP_EIG_TOL
    return w, sep


def hermitian_eigenvalues4(mat: np.ndarray) -> np.ndarray:
    return np.linalg.eigvalsh(mat)
