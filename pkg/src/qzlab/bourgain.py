"""Discrete spacetime Fourier analysis: dispersive weights and X/Y/Z norms.

A ``SpacetimeField`` holds coefficients c(k, tau_j) on the product of a
torus frequency set and a uniform symmetric tau window; norms approximate
the L^2_tau integral by Delta-tau sums. The two dispersive weights are

    schrodinger:  <tau + alpha k^2 + eps^2 k^4>
    wave:         <|tau| - beta |k| <eps k>>

Every norm is taken of a concrete extension (time cutoff included by the
caller); no infimum over extensions is attempted. Norms warn when more
than 1e-6 of the mass sits in the outer half of the tau window, since the
weights grow polynomially and a silent truncation would bias them.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.signal import fftconvolve

from .propagators import PropagatorParams
from .spectral import SpectralField, TorusGrid, japanese_bracket, smooth_plateau

__all__ = [
    "TruncationWarning",
    "SpacetimeField",
    "WeightKind",
    "cutoff_psi",
    "spacetime_transform",
    "xsb_norm",
    "y_norm",
    "z_norm",
    "default_tau_window",
    "spacetime_product",
]

TAIL_WARN_FRACTION = 1e-6


class TruncationWarning(UserWarning):
    """The tau window may be too short for the requested norm."""


@dataclass
class SpacetimeField:
    """Coefficients indexed by (k, tau_j) on a truncated spacetime lattice."""

    grid: TorusGrid
    taus: np.ndarray
    coeffs: np.ndarray

    def __post_init__(self):
        self.taus = np.asarray(self.taus, dtype=float)
        self.coeffs = np.asarray(self.coeffs, dtype=complex)
        n = self.taus.size
        if n % 2 != 1:
            raise ValueError("tau_count must be odd so tau = 0 is a node")
        if self.coeffs.shape != (self.grid.size, n):
            raise ValueError(
                f"coefficients have shape {self.coeffs.shape}, expected "
                f"({self.grid.size}, {n})"
            )
        d = np.diff(self.taus)
        if not np.allclose(d, d[0], rtol=1e-9, atol=0.0):
            raise ValueError("tau nodes must be uniform")
        if abs(self.taus[0] + self.taus[-1]) > 1e-9 * max(1.0, abs(self.taus[-1])):
            raise ValueError("tau window must be symmetric about 0")

    @property
    def dtau(self) -> float:
        return float(self.taus[1] - self.taus[0])

    @property
    def tau_max(self) -> float:
        return float(self.taus[-1])

    def tail_fraction(self) -> float:
        """Mass fraction carried by |tau| > tau_max / 2."""
        total = float(np.sum(np.abs(self.coeffs) ** 2))
        if total == 0.0:
            return 0.0
        outer = np.abs(self.taus) > 0.5 * self.tau_max
        return float(np.sum(np.abs(self.coeffs[:, outer]) ** 2)) / total

    def copy(self) -> "SpacetimeField":
        return SpacetimeField(self.grid, self.taus.copy(), self.coeffs.copy())


@dataclass(frozen=True)
class WeightKind:
    """Which dispersion surface the weight measures distance from."""

    kind: str
    params: PropagatorParams

    def __post_init__(self):
        if self.kind not in ("schrodinger", "wave"):
            raise ValueError(f"unknown weight kind {self.kind!r}")

    def weight(self, k, tau):
        """Dispersive weight w(k, tau) >= 1."""
        k = np.asarray(k, dtype=float)
        tau = np.asarray(tau, dtype=float)
        if self.kind == "schrodinger":
            return japanese_bracket(tau + self.params.schrodinger_symbol(k))
        return japanese_bracket(np.abs(tau) - self.params.wave_omega(k))


def cutoff_psi(t):
    """Smooth time cutoff: 1 on [-1, 1], supported in [-2, 2]."""
    return smooth_plateau(t)


def default_tau_window(grid: TorusGrid, params: PropagatorParams, safety: float = 64.0):
    """(tau_max, tau_count) with tau_max = safety * max dispersion and dtau <= 1.

    Only practical for small grids; larger experiments pass explicit
    windows sized to their fields.
    """
    w_max = float(np.max(params.schrodinger_symbol(grid.freqs)))
    tau_max = safety * max(w_max, 1.0)
    count = int(2 * np.ceil(tau_max) + 1)
    return tau_max, count


def _warn_tail(field: SpacetimeField, what: str):
    frac = field.tail_fraction()
    if frac >= TAIL_WARN_FRACTION:
        warnings.warn(
            f"{what}: {frac:.2e} of the mass sits beyond |tau| > tau_max/2; "
            "the tau window may truncate this norm",
            TruncationWarning,
            stacklevel=3,
        )


def spacetime_transform(fields, times, cutoff: bool = True) -> SpacetimeField:
    """Discrete (k, tau) transform of spatial coefficients sampled in time.

    With ``cutoff`` the samples are multiplied by psi(t) first. The tau
    nodes are the angular FFT frequencies of the time grid; tau spacing is
    2 pi / span.
    """
    times = np.asarray(times, dtype=float)
    n_t = times.size
    if n_t < 3 or n_t % 2 == 0:
        raise ValueError("need an odd number (>= 3) of time samples")
    dt = np.diff(times)
    if not np.allclose(dt, dt[0], rtol=1e-9, atol=0.0):
        raise ValueError("time samples must be uniform")
    dt = float(dt[0])
    grid = fields[0].grid
    data = np.stack([f.coeffs for f in fields], axis=1)  # (M, n_t)
    if data.shape != (grid.size, n_t):
        raise ValueError("one spatial field per time sample required")
    if cutoff:
        data = data * cutoff_psi(times)[None, :]

    taus = 2.0 * np.pi * np.fft.fftfreq(n_t, d=dt)
    spect = np.fft.fft(data, axis=1) * (dt / (2.0 * np.pi))
    # absorb the window start phase so the transform matches exp(-i tau t)
    spect = spect * np.exp(-1j * taus * times[0])[None, :]
    taus_sorted = np.fft.fftshift(taus)
    spect = np.fft.fftshift(spect, axes=1)
    return SpacetimeField(grid, taus_sorted, spect)


def _k_weights(field: SpacetimeField, r: float) -> np.ndarray:
    k = field.grid.freqs.astype(float)
    return (1.0 + k * k) ** r  # <k>^{2r}


def xsb_norm(field: SpacetimeField, r: float, b: float, kind: WeightKind) -> float:
    """(sum_k sum_j dtau <k>^{2r} w(k,tau_j)^{2b} |c|^2)^{1/2}."""
    _warn_tail(field, "xsb_norm")
    w = kind.weight(field.grid.freqs[:, None], field.taus[None, :])
    val = np.sum(_k_weights(field, r)[:, None] * w ** (2.0 * b) * np.abs(field.coeffs) ** 2)
    return float(np.sqrt(field.dtau * val))


def y_norm(field: SpacetimeField, r: float, kind: WeightKind) -> float:
    """X^{r,1/2} part plus the l^2_k of tau-L^1 sums with weight <k>^r."""
    _warn_tail(field, "y_norm")
    x_part = xsb_norm(field, r, 0.5, kind)
    l1 = field.dtau * np.sum(np.abs(field.coeffs), axis=1)
    l1_part = float(np.sqrt(np.sum(_k_weights(field, r) * l1**2)))
    return x_part + l1_part


def z_norm(field: SpacetimeField, r: float, kind: WeightKind) -> float:
    """Companion norm: X^{r,-1/2} part plus the weight^{-1} tau-L^1 part."""
    _warn_tail(field, "z_norm")
    x_part = xsb_norm(field, r, -0.5, kind)
    w = kind.weight(field.grid.freqs[:, None], field.taus[None, :])
    l1 = field.dtau * np.sum(np.abs(field.coeffs) / w, axis=1)
    l1_part = float(np.sqrt(np.sum(_k_weights(field, r) * l1**2)))
    return x_part + l1_part


def spacetime_product(
    f: SpacetimeField, g: SpacetimeField, conjugate_second: bool = False
) -> SpacetimeField:
    """(k, tau) convolution of two lattice fields, dealiased in k.

    Computed as a pointwise product in physical (x, t) space on a k-padded
    grid; the k band is truncated back to the input frequency set and the
    tau convolution is truncated back to the input window (with a
    TruncationWarning when the spill is not negligible).
    """
    if f.grid.size != g.grid.size or f.taus.size != g.taus.size:
        raise ValueError("spacetime fields live on different lattices")
    if abs(f.dtau - g.dtau) > 1e-12 * f.dtau:
        raise ValueError("tau spacings differ")
    grid = f.grid
    m = grid.size
    big = 2 * m
    half = m // 2
    idx_small = np.arange(-half, half) % m
    idx_big = np.arange(-half, half) % big

    def to_physical_x(field):
        pad = np.zeros((big, field.taus.size), dtype=complex)
        pad[idx_big, :] = field.coeffs[idx_small, :]
        return np.fft.ifft(pad, axis=0) * big

    fx = to_physical_x(f)
    gx = to_physical_x(g)
    if conjugate_second:
        # conjugating the physical field flips tau as well as the values
        gx = np.conj(gx[:, ::-1])

    conv = fftconvolve(fx, gx, mode="full", axes=1) * f.dtau
    n = f.taus.size
    center = n - 1
    window = conv[:, center - (n // 2): center + n // 2 + 1]
    spill = float(np.sum(np.abs(conv) ** 2) - np.sum(np.abs(window) ** 2))
    total = float(np.sum(np.abs(conv) ** 2))
    if total > 0 and spill / total >= TAIL_WARN_FRACTION:
        warnings.warn(
            f"spacetime_product: {spill / total:.2e} of the product mass "
            "falls outside the tau window and was truncated",
            TruncationWarning,
            stacklevel=2,
        )

    spect = np.fft.fft(window, axis=0) / big
    out = np.empty((m, n), dtype=complex)
    out[idx_small, :] = spect[idx_big, :]
    return SpacetimeField(grid, f.taus.copy(), out)
