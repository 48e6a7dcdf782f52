"""Deterministic numeric primitives: axis-wise DFTs, magnitude, seeded PRNG.

Complex matrices are plain ``numpy`` arrays of dtype complex128 with shape
(rows, cols); real matrices are float64 arrays.  Rows index azimuth (slow
time) and columns index range (fast time) throughout the toolkit.
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeMismatch

__all__ = [
    "Prng",
    "dft_axis",
    "dft_axis_direct",
    "magnitude",
    "assert_finite",
]


class Prng:
    """Counter-based deterministic random stream.

    Wraps numpy's Philox4x64 bit generator keyed through a
    ``SeedSequence`` spawn path, so streams derived for distinct purposes
    are statistically independent by construction and every draw is
    byte-reproducible for a given (seed, stream path).
    """

    def __init__(self, seed: int, _path: tuple[int, ...] = ()):
        self.seed = int(seed)
        self._path = _path
        ss = np.random.SeedSequence(self.seed, spawn_key=_path)
        self._gen = np.random.Generator(np.random.Philox(ss))

    def stream(self, stream_id: int) -> "Prng":
        """Derive an independent child stream for a distinct purpose."""
        return Prng(self.seed, self._path + (int(stream_id),))

    def uniform(self, n: int) -> np.ndarray:
        """n float64 draws in [0, 1); advances the stream state."""
        return self._gen.random(int(n))

    def normal(self, shape) -> np.ndarray:
        return self._gen.standard_normal(shape)

    def integers(self, low: int, high: int, n: int) -> np.ndarray:
        return self._gen.integers(low, high, size=int(n))

    def permutation(self, n: int) -> np.ndarray:
        return self._gen.permutation(int(n))


def dft_axis(m: np.ndarray, axis: str, inverse: bool = False) -> np.ndarray:
    """1-D discrete Fourier transform of every row or every column.

    ``axis="rows"`` transforms each row (length = number of columns);
    ``axis="cols"`` transforms each column.  Forward transform is
    unnormalized; the inverse carries the 1/N factor so that
    inverse(forward(x)) == x.
    """
    m = np.asarray(m)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a 2-D matrix, got shape {m.shape}")
    ax = _axis_index(axis)
    if inverse:
        return np.fft.ifft(m, axis=ax)
    return np.fft.fft(m, axis=ax)


def dft_axis_direct(m: np.ndarray, axis: str, inverse: bool = False) -> np.ndarray:
    """O(N^2) direct-sum DFT along an axis.

    Reference path for arbitrary lengths; used by tests as an independent
    check on the fast transform.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a 2-D matrix, got shape {m.shape}")
    ax = _axis_index(axis)
    n = m.shape[ax]
    k = np.arange(n)
    sign = 1.0 if inverse else -1.0
    kernel = np.exp(sign * 2j * np.pi * np.outer(k, k) / n)
    if inverse:
        kernel = kernel / n
    if ax == 0:
        return kernel @ m
    return m @ kernel.T


def magnitude(m: np.ndarray) -> np.ndarray:
    """Elementwise complex magnitude sqrt(re^2 + im^2) as float64."""
    return np.abs(np.asarray(m, dtype=np.complex128))


def assert_finite(m: np.ndarray, what: str = "matrix") -> np.ndarray:
    """Raise ShapeMismatch-family error if any value is NaN/Inf."""
    if not np.all(np.isfinite(m.view(np.float64) if np.iscomplexobj(m) else m)):
        raise ShapeMismatch(f"{what} contains non-finite values")
    return m


def _axis_index(axis: str) -> int:
    # "rows" = transform along each row, i.e. over the column index (axis 1)
    if axis == "rows":
        return 1
    if axis == "cols":
        return 0
    raise ShapeMismatch(f"axis must be 'rows' or 'cols', got {axis!r}")
