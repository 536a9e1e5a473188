"""Initial-data constructors used by experiments and tests."""

from __future__ import annotations

import numpy as np

from .spectral import SpectralField, TorusGrid, sobolev_norm

__all__ = [
    "zero_field",
    "plane_wave",
    "random_complex_field",
    "random_real_field",
    "random_data",
    "normalize_data",
]


def zero_field(grid: TorusGrid) -> SpectralField:
    return SpectralField(grid, np.zeros(grid.size, dtype=complex))


def plane_wave(grid: TorusGrid, N: int, amplitude: complex = 1.0) -> SpectralField:
    c = np.zeros(grid.size, dtype=complex)
    c[grid.index(N)] = amplitude
    return SpectralField(grid, c)


def random_complex_field(grid: TorusGrid, rng, kmax: int, decay: float = 1.0) -> SpectralField:
    """Modes |k| <= kmax with gaussian amplitudes damped by <k>^-decay."""
    c = np.zeros(grid.size, dtype=complex)
    for k in range(-kmax, kmax + 1):
        amp = (rng.standard_normal() + 1j * rng.standard_normal()) * (1.0 + k * k) ** (-decay / 2.0)
        c[grid.index(k)] = amp
    return SpectralField(grid, c)


def random_real_field(
    grid: TorusGrid, rng, kmax: int, decay: float = 1.0, mean_zero: bool = True
) -> SpectralField:
    """Real-valued draw: conjugate-symmetric coefficients on |k| <= kmax."""
    c = np.zeros(grid.size, dtype=complex)
    for k in range(1, kmax + 1):
        amp = (rng.standard_normal() + 1j * rng.standard_normal()) * (1.0 + k * k) ** (-decay / 2.0)
        c[grid.index(k)] = amp
        c[grid.index(-k)] = np.conj(amp)
    if not mean_zero:
        c[0] = rng.standard_normal()
    return SpectralField(grid, c)


def random_data(grid: TorusGrid, rng, kmax: int = 4, decay: float = 2.0, mean_zero: bool = True):
    """A (u0, n0, n1) triple of smooth random fields."""
    u0 = random_complex_field(grid, rng, kmax, decay)
    n0 = random_real_field(grid, rng, kmax, decay, mean_zero=mean_zero)
    n1 = random_real_field(grid, rng, kmax, decay, mean_zero=mean_zero)
    return u0, n0, n1


def normalize_data(data, s: float, l: float, target: float = 1.0):
    """Scale the triple by one factor so |u|_{H^s} + |n|_{H^l} + |n1|_{H^{l-2}}
    equals ``target``."""
    u0, n0, n1 = data
    size = sobolev_norm(u0, s) + sobolev_norm(n0, l) + sobolev_norm(n1, l - 2.0)
    if size == 0:
        raise ValueError("cannot normalize zero data")
    c = target / size
    return c * u0, c * n0, c * n1
