"""Low-discrepancy point streams: Halton, scrambled Halton, scrambled Faure.

All generators are deterministic functions of ``(kind, dim, seed, index)``,
so any index range of a stream can be produced independently and in
parallel; concatenating disjoint ranges reproduces the single stream
bit for bit.  A counter-based pseudo-random stream (Philox) with the same
partition property is included as a baseline.

Index 0 is never used by the radical-inverse generators: it would map to
the corner of the cube.  Streams are conventionally started at index 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, log
from typing import Iterator

import numpy as np
from numpy.random import Generator, Philox

# First 64 primes; coordinate j of a Halton point uses base PRIMES[j].
PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
    59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
    211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281,
    283, 293, 307, 311,
)

VARIANTS = ("halton", "scrambled-halton", "scrambled-faure", "pseudo")

#: coordinates exactly 0 or 1 are nudged inward by this amount
EDGE_NUDGE = 1e-12

_CHUNK = 1 << 18
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class StreamConfig:
    """A reproducible, splittable segment of a point stream."""

    kind: str
    dim: int
    seed: int
    start_index: int
    count: int

    def __post_init__(self):
        if self.kind not in VARIANTS:
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        if not 1 <= self.dim <= len(PRIMES):
            raise ValueError(f"dim must be in 1..{len(PRIMES)}, got {self.dim}")
        if self.start_index < 0:
            raise ValueError("start_index must be nonnegative")
        if self.count < 1:
            raise ValueError("count must be positive")


def _splitmix64(state: int) -> tuple[int, int]:
    # Counter-based 64-bit hash step (SplitMix64); returns (next state, output).
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4B8D9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, (z ^ (z >> 31)) & _MASK64


def mix64(*parts: int) -> int:
    """Deterministic 64-bit hash of a tuple of integers."""
    state = 0x243F6A8885A308D3
    out = 0
    for p in parts:
        state ^= p & _MASK64
        state, out = _splitmix64(state)
    return out


def _digit_permutation(base: int, seed: int) -> np.ndarray:
    # Fisher-Yates permutation of 0..base-1 from a SplitMix64 stream keyed
    # by (seed, base); one permutation per base, shared by all digit slots.
    perm = np.arange(base, dtype=np.int64)
    state = mix64(seed, base)
    for i in range(base - 1, 0, -1):
        state, z = _splitmix64(state)
        j = z % (i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return perm


def _halton_digits_needed(base: int, max_index: int) -> int:
    # Enough digits to cover the index range exactly, and (except base 2,
    # which uses 32) enough that base**-digits < 2**-52.
    need_index = max(1, int(ceil(log(max_index + 1) / log(base))) + 1)
    need_precision = 32 if base == 2 else int(ceil(52 * log(2) / log(base))) + 1
    return max(need_index, need_precision)


def _radical_inverse_batch(indices: np.ndarray, base: int,
                           perm: np.ndarray | None = None) -> np.ndarray:
    """Vectorized (scrambled) radical inverse of integer indices in ``base``.

    With a permutation, the value of the infinite scrambled digit string is
    returned: the all-zero tail beyond the stored digits contributes the
    closed-form term perm[0] * base**-D / (base - 1).
    """
    digits = _halton_digits_needed(base, int(indices.max(initial=1)))
    vals = np.zeros(len(indices))
    rem = indices.astype(np.int64, copy=True)
    scale = 1.0 / base
    for _ in range(digits):
        d = rem % base
        vals += (perm[d] if perm is not None else d) * scale
        rem //= base
        scale /= base
    if perm is not None and perm[0] != 0:
        vals += perm[0] * (scale * base) / (base - 1)
    return vals


def _halton_batch(start: int, count: int, dim: int,
                  seed: int | None = None) -> np.ndarray:
    idx = np.arange(start, start + count, dtype=np.int64)
    out = np.empty((count, dim))
    for j in range(dim):
        base = PRIMES[j]
        perm = None if seed is None else _digit_permutation(base, seed)
        out[:, j] = _radical_inverse_batch(idx, base, perm)
    return out


def faure_base(dim: int) -> int:
    """Base of the Faure sequence in ``dim`` dimensions: smallest prime >= dim."""
    for p in PRIMES:
        if p >= dim:
            return p
    raise ValueError(f"dim {dim} exceeds the prime table")


def _pascal_power(base: int, j: int, size: int) -> np.ndarray:
    # j-th power of the upper-triangular Pascal matrix over GF(base):
    # P^j[r, s] = C(s, r) * j**(s-r)  (mod base).
    binom = np.zeros((size, size), dtype=np.int64)
    binom[0, :] = 1
    for s in range(1, size):
        for r in range(1, s + 1):
            binom[r, s] = (binom[r - 1, s - 1] + binom[r, s - 1]) % base
    jpow = np.ones(size, dtype=np.int64)
    for e in range(1, size):
        jpow[e] = (jpow[e - 1] * (j % base)) % base
    out = np.zeros((size, size), dtype=np.int64)
    for r in range(size):
        out[r, r:] = (binom[r, r:] * jpow[: size - r]) % base
    return out


def _lower_triangular_scramble(base: int, size: int, seed: int) -> np.ndarray:
    # Nonsingular lower-triangular matrix over GF(base): unit diagonal,
    # uniformly random entries below it.
    mat = np.eye(size, dtype=np.int64)
    state = seed
    for r in range(1, size):
        for c in range(r):
            state, z = _splitmix64(state)
            mat[r, c] = z % base
    return mat


def _faure_matrices(dim: int, seed: int, digits: int) -> list[np.ndarray]:
    base = faure_base(dim)
    mats = []
    for j in range(dim):
        lt = _lower_triangular_scramble(base, digits, mix64(seed, j, base))
        mats.append((lt @ _pascal_power(base, j, digits)) % base)
    return mats


def _faure_batch(start: int, count: int, dim: int, seed: int) -> np.ndarray:
    base = faure_base(dim)
    max_index = start + count - 1
    k_digits = max(1, int(ceil(log(max_index + 1) / log(base))) + 1)
    digits = max(k_digits, int(ceil(52 * log(2) / log(base))) + 1)
    mats = _faure_matrices(dim, seed, digits)

    idx = np.arange(start, start + count, dtype=np.int64)
    in_digits = np.empty((count, k_digits))
    rem = idx.copy()
    for t in range(k_digits):
        in_digits[:, t] = rem % base
        rem //= base
    powers = float(base) ** -(np.arange(digits) + 1.0)
    out = np.empty((count, dim))
    for j in range(dim):
        # digit counts stay far below 2**53, so float matmul is exact
        y = in_digits @ mats[j][:, :k_digits].T.astype(np.float64)
        y %= base
        out[:, j] = y @ powers
    return out


def _pseudo_batch(start: int, count: int, dim: int, seed: int) -> np.ndarray:
    # Counter-based: point i consumes doubles [i*dim, (i+1)*dim) of the
    # Philox stream, so disjoint index ranges partition the stream exactly.
    bit = Philox(key=seed & _MASK64)
    skip = start * dim
    bit.advance(skip // 4)  # one Philox counter step yields 4 doubles
    gen = Generator(bit)
    if skip % 4:
        gen.random(skip % 4)
    return gen.random((count, dim))


def _nudge(points: np.ndarray) -> np.ndarray:
    points[points == 0.0] = EDGE_NUDGE
    points[points == 1.0] = 1.0 - EDGE_NUDGE
    return points


def points(config: StreamConfig) -> np.ndarray:
    """All points of the stream segment as a ``(count, dim)`` array."""
    if config.kind == "halton":
        pts = _halton_batch(config.start_index, config.count, config.dim)
    elif config.kind == "scrambled-halton":
        pts = _halton_batch(config.start_index, config.count, config.dim,
                            seed=config.seed)
    elif config.kind == "scrambled-faure":
        pts = _faure_batch(config.start_index, config.count, config.dim,
                           config.seed)
    else:
        pts = _pseudo_batch(config.start_index, config.count, config.dim,
                            config.seed)
    return _nudge(pts)


def stream(config: StreamConfig) -> Iterator[np.ndarray]:
    """Yield the points of the segment one at a time (generated in chunks)."""
    done = 0
    while done < config.count:
        n = min(_CHUNK, config.count - done)
        chunk = points(StreamConfig(config.kind, config.dim, config.seed,
                                    config.start_index + done, n))
        yield from chunk
        done += n


def halton_point(index: int, dim: int) -> np.ndarray:
    """Point ``index`` (>= 1) of the plain Halton sequence."""
    if index < 1:
        raise ValueError("index must be >= 1")
    return points(StreamConfig("halton", dim, 0, index, 1))[0]


def scrambled_halton_point(index: int, dim: int, seed: int) -> np.ndarray:
    """Point ``index`` of the digit-permutation-scrambled Halton sequence."""
    if index < 1:
        raise ValueError("index must be >= 1")
    return points(StreamConfig("scrambled-halton", dim, seed, index, 1))[0]


def scrambled_faure_point(index: int, dim: int, seed: int) -> np.ndarray:
    """Point ``index`` of the linearly scrambled Faure sequence."""
    if index < 1:
        raise ValueError("index must be >= 1")
    return points(StreamConfig("scrambled-faure", dim, seed, index, 1))[0]
