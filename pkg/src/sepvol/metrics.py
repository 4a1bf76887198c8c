"""Monotone-metric registry: operator monotone functions, Morozova-Chentsov
kernels, and the eigenvalue weight used as the integrand.

Each metric variant is identified by a lowercase name and supplies the
operator monotone function ``f(t)`` (normalized so f(1) = 1) and the
Morozova-Chentsov kernel ``c(x, y) = 1 / (y * f(x/y))``, which satisfies
c(x, x) = 1/x and is symmetric in its arguments.  The eigenvalue weight

    w(lam) = prod(lam)**-0.5 * prod_{i<j} (lam_i - lam_j)**2 * c(lam_i, lam_j) / 2

is the volume-element factor on the eigenvalue simplex obtained by swapping
the Bures kernel for the chosen metric's kernel; the determinant factor is
kernel-independent.
"""

from __future__ import annotations

import math

import numpy as np

VARIANTS = ("bures", "km", "max", "average", "wy", "gks", "ni")

METRIC_IDS = {name: i for i, name in enumerate(VARIANTS)}

# below this relative separation, c(x, y) switches to series/limit forms
_DIAG_REL = 1e-8


def _check_variant(metric: str) -> None:
    if metric not in METRIC_IDS:
        raise ValueError(f"unknown metric {metric!r}; expected one of {VARIANTS}")


def f(metric: str, t: float) -> float:
    """Operator monotone function of the metric, normalized to f(1) = 1."""
    _check_variant(metric)
    if t <= 0:
        raise ValueError("f(t) requires t > 0")
    if metric == "bures":
        return (1.0 + t) / 2.0
    if metric == "max":
        return 2.0 * t / (1.0 + t)
    if metric == "average":
        return (1.0 + 6.0 * t + t * t) / (4.0 + 4.0 * t)
    if metric == "wy":
        return 0.25 * (math.sqrt(t) + 1.0) ** 2
    if metric == "km":
        return (t - 1.0) / math.log(t) if t != 1.0 else 1.0
    if metric == "gks":
        if abs(t - 1.0) < _DIAG_REL:
            # t**(t/(t-1)) -> e as t -> 1; expand the exponent around 1
            s = t - 1.0
            return math.exp(s / 2.0 - s * s / 6.0)
        return t ** (t / (t - 1.0)) / math.e
    # ni
    if abs(t - 1.0) < _DIAG_REL:
        s = t - 1.0
        return 1.0 + s / 2.0  # 2(t-1)^2 / ((1+t) log(t)^2) to first order
    return 2.0 * (t - 1.0) ** 2 / ((1.0 + t) * math.log(t) ** 2)


def mc(metric: str, x: float, y: float) -> float:
    """Morozova-Chentsov kernel c(x, y); symmetric, with c(x, x) = 1/x."""
    _check_variant(metric)
    if x <= 0 or y <= 0:
        raise ValueError("mc(x, y) requires x, y > 0")
    if metric == "bures":
        return 2.0 / (x + y)
    if metric == "max":
        return (x + y) / (2.0 * x * y)
    if metric == "average":
        return 4.0 * (x + y) / (x * x + 6.0 * x * y + y * y)
    if metric == "wy":
        return 4.0 / (math.sqrt(x) + math.sqrt(y)) ** 2

    d = x - y
    m = 0.5 * (x + y)
    near = abs(d) < _DIAG_REL * max(x, y)
    if metric == "km":
        if near:
            u = d / (2.0 * m)
            return (1.0 + u * u / 3.0) / m
        return (math.log(x) - math.log(y)) / d
    if metric == "ni":
        if near:
            u = d / (2.0 * m)
            return (1.0 + 2.0 * u * u / 3.0) / m
        lr = math.log(x) - math.log(y)
        return (x + y) * lr * lr / (2.0 * d * d)
    # gks: log c = 1 - (x log x - y log y)/(x - y), manifestly symmetric
    if near:
        return math.exp(d * d / (24.0 * m * m)) / m
    return math.exp(1.0 - (x * math.log(x) - y * math.log(y)) / d)


def pair_log_terms(metric: str, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """log of the pair factor (x-y)^2 c(x,y)/2, vectorized and stable.

    Equal arguments give -inf (the factor vanishes).  Cancellation-prone
    kernels (km, ni, gks) use algebraic forms whose rounding stays bounded
    relative to the factor itself.
    """
    _check_variant(metric)
    d = x - y
    s = x + y
    with np.errstate(divide="ignore", invalid="ignore"):
        if metric == "bures":
            t = d * d / s
        elif metric == "max":
            t = d * d * s / (4.0 * x * y)
        elif metric == "average":
            t = 2.0 * d * d * s / (x * x + 6.0 * x * y + y * y)
        elif metric == "wy":
            r = np.sqrt(x) - np.sqrt(y)
            t = 2.0 * r * r
        elif metric == "km":
            t = 0.5 * d * (np.log(x) - np.log(y))
        elif metric == "ni":
            lr = np.log(x) - np.log(y)
            t = 0.25 * s * lr * lr
        else:  # gks
            g = (x * np.log(x) - y * np.log(y)) / np.where(d == 0.0, 1.0, d)
            t = 0.5 * d * d * np.exp(1.0 - g)
        out = np.log(t)
    out = np.where(d == 0.0, -np.inf, out)
    return out


def eigenvalue_weight(metric: str, lam) -> float:
    """Ansatz weight of a spectrum; accumulates in log space.

    Degenerate spectra return 0 exactly (a squared-difference factor
    vanishes).
    """
    _check_variant(metric)
    lam = np.asarray(lam, dtype=float)
    if np.any(lam <= 0):
        raise ValueError("spectrum entries must be positive")
    n = lam.shape[0]
    logw = -0.5 * float(np.log(lam).sum())
    for i in range(n):
        for j in range(i + 1, n):
            term = float(pair_log_terms(metric, lam[i:i + 1], lam[j:j + 1])[0])
            if term == -np.inf:
                return 0.0
            logw += term
    return math.exp(logw)


def bloch_radial_profile(metric: str, r: float) -> float:
    """N=2 weight at spectrum ((1+r)/2, (1-r)/2); closed-form check hook."""
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie in (0, 1)")
    return eigenvalue_weight(metric, np.array([(1.0 + r) / 2.0, (1.0 - r) / 2.0]))


def hall_constant(n_levels: int) -> float:
    """Normalization constant of the Bures eigenvalue density.

    The integral of prod(lam)**-0.5 * Q_N over the (N-1)-simplex equals the
    reciprocal of this constant.
    """
    if n_levels < 2:
        raise ValueError("n_levels must be >= 2")
    n = n_levels
    log_num = (n * n - n) * math.log(2.0) + math.lgamma(n * n / 2.0)
    log_den = (n / 2.0) * math.log(math.pi)
    log_den += sum(math.lgamma(k) for k in range(1, n + 2))
    return math.exp(log_num - log_den)
