"""Exact linear solution operators as Fourier multipliers.

The Schrodinger group is exp(-i t (alpha k^2 + eps^2 k^4)); the wave pair
is cos(omega_k t) and sin(omega_k t)/omega_k with omega_k =
beta |k| <eps k>. eps = 0 selects the classical (non-quantum) multipliers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingularParameter
from .spectral import SpectralField, japanese_bracket

__all__ = [
    "PropagatorParams",
    "apply_schrodinger",
    "apply_wave_sine",
    "apply_wave_cosine",
    "apply_wave_cosine_dot",
    "duhamel_constant",
]


@dataclass(frozen=True)
class PropagatorParams:
    alpha: float = 1.0
    beta: float = 1.0
    eps: float = 0.0

    def __post_init__(self):
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("alpha and beta must be positive")
        if self.eps < 0:
            raise ValueError("eps must be nonnegative")

    def schrodinger_symbol(self, k) -> np.ndarray:
        """alpha k^2 + eps^2 k^4."""
        k = np.asarray(k, dtype=float)
        return self.alpha * k * k + self.eps**2 * k**4

    def wave_omega(self, k) -> np.ndarray:
        """beta |k| <eps k>; vanishes only at k = 0."""
        k = np.asarray(k, dtype=float)
        return self.beta * np.abs(k) * japanese_bracket(self.eps * k)


def apply_schrodinger(params: PropagatorParams, t: float, field: SpectralField) -> SpectralField:
    """Free Schrodinger flow; an l2 isometry for every t."""
    k = field.grid.freqs
    mult = np.exp(-1j * t * params.schrodinger_symbol(k))
    return SpectralField(field.grid, mult * field.coeffs)


def apply_wave_sine(params: PropagatorParams, t: float, field: SpectralField) -> SpectralField:
    """sin(omega t)/omega multiplier; the k = 0 branch is multiplication by t."""
    k = field.grid.freqs
    omega = params.wave_omega(k)
    mult = np.empty(field.grid.size)
    nz = omega != 0
    mult[nz] = np.sin(omega[nz] * t) / omega[nz]
    mult[~nz] = t
    return SpectralField(field.grid, mult * field.coeffs)


def apply_wave_cosine(params: PropagatorParams, t: float, field: SpectralField) -> SpectralField:
    """cos(omega t) multiplier (equals 1 at k = 0)."""
    omega = params.wave_omega(field.grid.freqs)
    return SpectralField(field.grid, np.cos(omega * t) * field.coeffs)


def apply_wave_cosine_dot(params: PropagatorParams, t: float, field: SpectralField) -> SpectralField:
    """Time derivative of the cosine flow: -omega sin(omega t) (0 at k = 0)."""
    omega = params.wave_omega(field.grid.freqs)
    return SpectralField(field.grid, -omega * np.sin(omega * t) * field.coeffs)


def duhamel_constant(rho: float, params: PropagatorParams) -> float:
    """Constant in the wave Duhamel bound, piecewise in rho over [0, 1].

    rho in (0, 1):  ((1-rho)/(rho eps^2))^((1-rho)/2) / (beta rho^(-1/2))
    rho = 0:        1/(beta eps)
    rho = 1:        1/beta

    The two seams are continuous limits of the middle branch.
    """
    if not 0.0 <= rho <= 1.0:
        raise ValueError(f"rho must lie in [0, 1], got {rho}")
    if rho < 1.0 and params.eps == 0.0:
        raise SingularParameter("rho < 1 requires eps > 0")
    if rho == 0.0:
        return 1.0 / (params.beta * params.eps)
    if rho == 1.0:
        return 1.0 / params.beta
    return ((1.0 - rho) / (rho * params.eps**2)) ** ((1.0 - rho) / 2.0) * np.sqrt(rho) / params.beta
