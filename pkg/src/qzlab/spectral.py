"""Fourier substrate for fields on the 2*pi-periodic torus.

Conventions used throughout the package:

    forward transform   f_hat(k) = (1/2pi) * integral f(x) exp(-i k x) dx
    inverse transform   f(x)     = sum_k f_hat(k) exp(i k x)
    Sobolev norm        |f|_{H^s} = (sum_k <k>^{2s} |f_hat(k)|^2)^{1/2}

with <k> = (1 + k^2)^{1/2}. Every physical-space integral is evaluated as
(1/2pi) times the periodic trapezoid sum, so Parseval is an exact identity
on band-limited fields and conservation checks reduce to exact statements
about coefficient sums.

Coefficients are stored in FFT layout (0, 1, ..., M/2-1, -M/2, ..., -1);
``TorusGrid.freqs`` gives the integer frequency of each slot.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MeanZeroViolation

__all__ = [
    "TorusGrid",
    "SpectralField",
    "GaugeRecord",
    "fft_forward",
    "fft_inverse",
    "sobolev_norm",
    "zero_mean_gauge",
    "gauge_phase",
    "mollify",
    "smooth_plateau",
    "spectral_derivative",
    "japanese_bracket",
]


def japanese_bracket(x):
    """<x> = (1 + x^2)^(1/2), elementwise."""
    x = np.asarray(x, dtype=float)
    return np.sqrt(1.0 + x * x)


@dataclass(frozen=True)
class TorusGrid:
    """Uniform collocation grid x_j = 2*pi*j/M with integer frequencies."""

    size: int

    def __post_init__(self):
        if self.size % 2 != 0 or self.size < 8:
            raise ValueError(f"grid size must be even and >= 8, got {self.size}")

    @property
    def nodes(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.size) / self.size

    @property
    def freqs(self) -> np.ndarray:
        return np.fft.fftfreq(self.size, d=1.0 / self.size).astype(int)

    def index(self, k: int) -> int:
        half = self.size // 2
        if not -half <= k < half:
            raise ValueError(f"frequency {k} outside [{-half}, {half - 1}]")
        return k % self.size


@dataclass
class SpectralField:
    """Fourier coefficients of one field at one instant."""

    grid: TorusGrid
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.shape != (self.grid.size,):
            raise ValueError(
                f"coefficient array has shape {c.shape}, expected ({self.grid.size},)"
            )
        self.coeffs = c

    def coeff(self, k: int) -> complex:
        return complex(self.coeffs[self.grid.index(k)])

    def copy(self) -> "SpectralField":
        return SpectralField(self.grid, self.coeffs.copy())

    def is_real(self, tol: float = 1e-12) -> bool:
        """Conjugate symmetry c(-k) == conj(c(k)), relative to the sup of |c|."""
        c = self.coeffs
        scale = max(np.max(np.abs(c)), 1e-300)
        sym = c - np.conj(c[(-np.arange(self.grid.size)) % self.grid.size])
        return bool(np.max(np.abs(sym)) <= tol * max(scale, 1.0))

    def samples(self) -> np.ndarray:
        return fft_inverse(self)

    def __add__(self, other):
        self._check_grid(other)
        return SpectralField(self.grid, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check_grid(other)
        return SpectralField(self.grid, self.coeffs - other.coeffs)

    def __rmul__(self, scalar):
        return SpectralField(self.grid, scalar * self.coeffs)

    def _check_grid(self, other):
        if other.grid.size != self.grid.size:
            raise ValueError("fields live on different grids")


@dataclass(frozen=True)
class GaugeRecord:
    """Spatial means removed from (n0, n1) by the zero-mean change of variables."""

    mean_n0: float = 0.0
    mean_n1: float = 0.0

    @property
    def is_trivial(self) -> bool:
        return self.mean_n0 == 0.0 and self.mean_n1 == 0.0


def fft_forward(grid: TorusGrid, samples) -> SpectralField:
    """Trapezoid-rule transform; exact for trig polynomials of degree < M/2."""
    samples = np.asarray(samples, dtype=complex)
    if samples.shape != (grid.size,):
        raise ValueError(
            f"sample array has shape {samples.shape}, expected ({grid.size},)"
        )
    return SpectralField(grid, np.fft.fft(samples) / grid.size)


def fft_inverse(field: SpectralField) -> np.ndarray:
    """Values sum_k c(k) exp(i k x_j) at the grid nodes."""
    return np.fft.ifft(field.coeffs) * field.grid.size


def sobolev_norm(field: SpectralField, s: float, homogeneous: bool = False) -> float:
    """H^s norm; with ``homogeneous`` the |k|^s version (k = 0 dropped).

    Raises MeanZeroViolation for a homogeneous norm with s < 0 on a field
    whose mean coefficient is not (numerically) zero.
    """
    c = field.coeffs
    k = field.grid.freqs.astype(float)
    if not homogeneous:
        return float(np.sqrt(np.sum((1.0 + k * k) ** s * np.abs(c) ** 2)))
    mean = abs(c[0])
    if s < 0 and mean > 1e-12 * max(1.0, float(np.max(np.abs(c)))):
        raise MeanZeroViolation(
            f"homogeneous norm with s={s} needs zero mean, |c(0)|={mean:.3e}"
        )
    nz = k != 0
    return float(np.sqrt(np.sum(np.abs(k[nz]) ** (2 * s) * np.abs(c[nz]) ** 2)))


def zero_mean_gauge(u0: SpectralField, n0: SpectralField, n1: SpectralField):
    """Strip the means of n0, n1 and record them; u0 passes through.

    The gauge phase on u acts only at later times (see ``gauge_phase``), so
    the data-level transform leaves u0 untouched.
    """
    m0 = float(np.real(n0.coeffs[0]))
    m1 = float(np.real(n1.coeffs[0]))
    n0z = n0.copy()
    n1z = n1.copy()
    n0z.coeffs[0] = 0.0
    n1z.coeffs[0] = 0.0
    return u0.copy(), n0z, n1z, GaugeRecord(m0, m1)


def gauge_phase(record: GaugeRecord, t: float) -> float:
    """Phase (t^2/2)*mean_n1 + t*mean_n0 accumulated by the gauged u at time t.

    Equals t^2/(4pi) * integral(n1) + t/(2pi) * integral(n0) with the
    integrals recovered from the record (integral = 2pi * mean).
    """
    return 0.5 * t * t * record.mean_n1 + t * record.mean_n0


def smooth_plateau(y):
    """C-infinity bump: 1 on [-1, 1], 0 outside [-2, 2], monotone between.

    Built from the standard exp(-1/x) glue, so it is smooth and compactly
    supported; used as the mollifier profile and as the time cutoff.
    """
    arr = np.asarray(y, dtype=float)
    out = _smoothstep(2.0 - np.abs(arr))
    if np.isscalar(y) or arr.ndim == 0:
        return float(out)
    return out


def _glue(x):
    out = np.zeros_like(x)
    pos = x > 0
    with np.errstate(over="ignore", under="ignore"):
        out[pos] = np.exp(-1.0 / x[pos])
    return out


def _smoothstep(x):
    # 0 for x <= 0, 1 for x >= 1, smooth and increasing in between
    x = np.atleast_1d(np.asarray(x, dtype=float))
    a = _glue(x)
    b = _glue(1.0 - x)
    out = np.empty_like(x)
    mid = (x > 0) & (x < 1)
    out[x <= 0] = 0.0
    out[x >= 1] = 1.0
    out[mid] = a[mid] / (a[mid] + b[mid])
    return out


def mollify(field: SpectralField, h: float, bump=None) -> SpectralField:
    """Multiply coefficients by bump(h*k); bump defaults to ``smooth_plateau``."""
    if h <= 0:
        raise ValueError(f"mollifier scale must be positive, got {h}")
    if bump is None:
        bump = smooth_plateau
    k = field.grid.freqs.astype(float)
    return SpectralField(field.grid, field.coeffs * bump(h * k))


def spectral_derivative(field: SpectralField, order: int = 1) -> SpectralField:
    """(i k)^order multiplier."""
    k = field.grid.freqs.astype(float)
    return SpectralField(field.grid, (1j * k) ** order * field.coeffs)
