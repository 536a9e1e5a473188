"""Conserved quantities, energy-method rates, and functional inequalities.

The energy is evaluated with the package-wide inner product, i.e. every
L^2-type term is a coefficient sum and the cubic coupling term is the
(1/2pi)-normalized trapezoid integral of n |u|^2, so all six summands share
one normalization and conservation is an exact statement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientData, MeanZeroViolation, NotApplicable
from .propagators import PropagatorParams
from . import calibration
from .solver import QZSState
from .spectral import SpectralField, fft_inverse, sobolev_norm

__all__ = [
    "ConservedQuantities",
    "mass",
    "energy",
    "conserved_series",
    "gn_l4_ratio",
    "nonlinear_energy_bound",
    "wave_energy_rate",
    "product_inequality_ratio",
]


@dataclass
class ConservedQuantities:
    """Mass, total energy, and the five-plus-one energy summands."""

    mass: float
    energy: float
    term_grad_u: float       # alpha |dx u|^2
    term_bilap_u: float      # eps^2 |dxx u|^2
    term_n: float            # (1/2) |n|^2
    term_dn: float           # (2 beta^2)^{-1} |dn|^2 in homogeneous H^{-1}
    term_grad_n: float       # (eps^2/2) |dx n|^2
    term_cubic: float        # (1/2pi) integral n |u|^2

    def terms(self):
        return (
            self.term_grad_u,
            self.term_bilap_u,
            self.term_n,
            self.term_dn,
            self.term_grad_n,
            self.term_cubic,
        )


def mass(state: QZSState) -> float:
    """Coefficient-sum L^2 mass of u."""
    return float(np.sum(np.abs(state.u.coeffs) ** 2))


def _require_mean_zero(f: SpectralField, name: str):
    if abs(f.coeffs[0]) > 1e-12 * max(1.0, float(np.max(np.abs(f.coeffs)))):
        raise MeanZeroViolation(f"{name} must have zero mean, got c(0)={f.coeffs[0]:.3e}")


def _cubic_integral(n: SpectralField, u: SpectralField) -> float:
    """(1/2pi) trapezoid integral of n |u|^2 on the shared grid."""
    m = n.grid.size
    n_x = np.real(fft_inverse(n))
    u_x = fft_inverse(u)
    return float(np.sum(n_x * np.abs(u_x) ** 2) / m)


def energy(state: QZSState, params: PropagatorParams) -> ConservedQuantities:
    """All energy summands; requires mean-zero n and dn (gauge first)."""
    _require_mean_zero(state.n, "n")
    _require_mean_zero(state.dn, "dn")
    k = state.u.grid.freqs.astype(float)
    u2 = np.abs(state.u.coeffs) ** 2
    n2 = np.abs(state.n.coeffs) ** 2
    dn2 = np.abs(state.dn.coeffs) ** 2
    nz = k != 0

    t1 = params.alpha * float(np.sum(k * k * u2))
    t2 = params.eps**2 * float(np.sum(k**4 * u2))
    t3 = 0.5 * float(np.sum(n2))
    t4 = float(np.sum(dn2[nz] / (k[nz] ** 2))) / (2.0 * params.beta**2)
    t5 = 0.5 * params.eps**2 * float(np.sum(k * k * n2))
    t6 = _cubic_integral(state.n, state.u)
    total = t1 + t2 + t3 + t4 + t5 + t6
    return ConservedQuantities(mass(state), total, t1, t2, t3, t4, t5, t6)


def conserved_series(trajectory, params: PropagatorParams):
    """ConservedQuantities along a trajectory, with the snapshot times."""
    times = [st.time for st in trajectory]
    rows = [energy(st, params) for st in trajectory]
    return np.asarray(times), rows


def gn_l4_ratio(f: SpectralField) -> float:
    """|f|_{L^4}^4 / (|dx f|_{L^2} |f|_{L^2}^3), quadrature L^4.

    Vacuous for (near-)constant f, where the gradient factor vanishes;
    reported as NotApplicable.
    """
    m = f.grid.size
    k = f.grid.freqs.astype(float)
    l2 = float(np.sqrt(np.sum(np.abs(f.coeffs) ** 2)))
    grad = float(np.sqrt(np.sum(k * k * np.abs(f.coeffs) ** 2)))
    if l2 == 0.0 or grad <= 1e-14 * l2:
        raise NotApplicable("ratio undefined for constant or zero fields")
    l4_fourth = float(np.sum(np.abs(fft_inverse(f)) ** 4) / m)
    return l4_fourth / (grad * l2**3)


def nonlinear_energy_bound(
    state: QZSState, params: PropagatorParams, gn_constant: float | None = None
):
    """Pointwise check of |integral n|u|^2| <= (1/4)|n|^2 + (eps^2/2)|dx u|^2 + C.

    C comes from the Cauchy-Schwarz / four-halves interpolation / Young
    chain: C = C_gn^2 mass^3 / (2 eps^2) with the recorded interpolation
    constant. Returns (lhs, rhs).
    """
    _require_mean_zero(state.n, "n")
    _require_mean_zero(state.dn, "dn")
    if params.eps == 0:
        raise NotApplicable("the absorbed bound needs eps > 0")
    if gn_constant is None:
        gn_constant = calibration.GN_RATIO_MAX
    k = state.u.grid.freqs.astype(float)
    lhs = abs(_cubic_integral(state.n, state.u))
    n_l2_sq = float(np.sum(np.abs(state.n.coeffs) ** 2))
    grad_u_sq = float(np.sum(k * k * np.abs(state.u.coeffs) ** 2))
    m = mass(state)
    c_abs = gn_constant**2 * m**3 / (2.0 * params.eps**2)
    rhs = 0.25 * n_l2_sq + 0.5 * params.eps**2 * grad_u_sq + c_abs
    return lhs, rhs


def wave_energy_rate(trajectory, a: float, params: PropagatorParams):
    """Centered-difference rate of the H^a wave energy vs its claimed bound.

    Returns (times, lhs_rates, rhs_bounds) at the interior snapshots, where
    lhs is d/dt of (1/2)(|dn|_{H^a}^2 + |dx n|_{H^a}^2 + eps^2 |dxx n|_{H^a}^2)
    and rhs is |dn|_{H^a}^2 + |u|_{H^{a+2}}^2.
    """
    if len(trajectory) < 3:
        raise InsufficientData("need at least 3 snapshots for a centered rate")

    def wave_energy(st: QZSState) -> float:
        k = st.n.grid.freqs.astype(float)
        w = (1.0 + k * k) ** a
        dn2 = np.abs(st.dn.coeffs) ** 2
        n2 = np.abs(st.n.coeffs) ** 2
        return 0.5 * float(
            np.sum(w * dn2)
            + np.sum(w * k * k * n2)
            + params.eps**2 * np.sum(w * k**4 * n2)
        )

    energies = np.array([wave_energy(st) for st in trajectory])
    times = np.array([st.time for st in trajectory])
    dt = np.diff(times)
    if not np.allclose(dt, dt[0], rtol=1e-9):
        raise ValueError("trajectory must be uniformly sampled in time")
    lhs = (energies[2:] - energies[:-2]) / (2.0 * dt[0])
    rhs = np.array(
        [
            sobolev_norm(st.dn, a) ** 2 + sobolev_norm(st.u, a + 2.0) ** 2
            for st in trajectory[1:-1]
        ]
    )
    return times[1:-1], lhs, rhs


def product_inequality_ratio(f: SpectralField, g: SpectralField, s: float, delta: float = 0.01) -> float:
    """|fg|_{H^s} / (|f|_{H^{1/2+delta}} |g|_{H^s}) with an alias-free product.

    Meaningful for s in [-1/2, 1/2] (one space dimension).
    """
    if not -0.5 <= s <= 0.5:
        raise ValueError(f"s must lie in [-1/2, 1/2], got {s}")
    from .solver import _padded_product

    denom = sobolev_norm(f, 0.5 + delta) * sobolev_norm(g, s)
    if denom == 0.0:
        raise NotApplicable("zero denominator")
    prod = _padded_product(f, g)
    return sobolev_norm(prod, s) / denom
