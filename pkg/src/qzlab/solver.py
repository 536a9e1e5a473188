"""Nonlinear time integration of the coupled Schrodinger/wave system.

Two integrators share one contract:

* ``picard_step`` iterates the Duhamel (mild) form of the equations to a
  fixed point on each step, with the integrals evaluated by a configured
  quadrature whose nodes freeze the current iterate. Slow, but it is the
  reference path.
* ``strang_step`` composes exact half-step linear flows around a nonlinear
  substep. The substep multiplies u by the pointwise phase exp(-i h n) and
  kicks dn with a Gautschi-filtered source 2 sin(omega h/2)/omega times
  beta^2 dxx|u|^2; sandwiched between the half flows this reproduces the
  Duhamel source integrals with |u|^2 frozen at the substep midpoint. Mass
  is conserved to roundoff and the step is exactly time reversible.

Initial data is gauged to mean-zero (n, dn) before stepping and the output
trajectory is returned in the original variables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import BlowUpDetected, ContractionFailure
from .propagators import (
    PropagatorParams,
    apply_schrodinger,
    apply_wave_cosine,
    apply_wave_cosine_dot,
    apply_wave_sine,
)
from .spectral import (
    GaugeRecord,
    SpectralField,
    fft_forward,
    fft_inverse,
    gauge_phase,
    sobolev_norm,
    spectral_derivative,
    zero_mean_gauge,
)

__all__ = [
    "QZSState",
    "SolverConfig",
    "ungauge",
    "apply_gauge",
    "rhs_residual",
    "picard_step",
    "strang_step",
    "solve",
    "semiclassical_experiment",
    "SemiclassicalTable",
    "discontinuity_demo",
    "DiscontinuityResult",
]


@dataclass
class QZSState:
    """The triple (u, n, dn) at one time, with the gauge that produced it."""

    u: SpectralField
    n: SpectralField
    dn: SpectralField
    time: float
    gauge: GaugeRecord = field(default_factory=GaugeRecord)

    def copy(self) -> "QZSState":
        return QZSState(self.u.copy(), self.n.copy(), self.dn.copy(), self.time, self.gauge)

    def finite(self) -> bool:
        return bool(
            np.all(np.isfinite(self.u.coeffs))
            and np.all(np.isfinite(self.n.coeffs))
            and np.all(np.isfinite(self.dn.coeffs))
        )


@dataclass
class SolverConfig:
    dt: float = 1e-3
    scheme: str = "strang"
    picard_tol: float = 1e-12
    picard_maxiter: int = 60
    dealias: bool = True
    quadrature: str = "trapezoid"

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        if self.scheme not in ("picard", "strang"):
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.quadrature not in ("trapezoid", "midpoint"):
            raise ValueError(f"unknown quadrature {self.quadrature!r}")
        if self.picard_tol < 1e-14:
            raise ValueError("picard_tol must be >= 1e-14")
        if self.picard_maxiter < 1:
            raise ValueError("picard_maxiter must be >= 1")


# ---------------------------------------------------------------------------
# gauge transport between the original and mean-zero variables


def apply_gauge(state: QZSState, record: GaugeRecord) -> QZSState:
    """Original variables -> mean-zero variables at the state's time."""
    t = state.time
    phase = np.exp(1j * gauge_phase(record, t))
    u = SpectralField(state.u.grid, phase * state.u.coeffs)
    n = state.n.copy()
    dn = state.dn.copy()
    n.coeffs[0] -= record.mean_n0 + t * record.mean_n1
    dn.coeffs[0] -= record.mean_n1
    return QZSState(u, n, dn, t, record)


def ungauge(state: QZSState, record: GaugeRecord | None = None) -> QZSState:
    """Mean-zero variables -> original variables at the state's time.

    Exact inverse of ``apply_gauge``; the returned state carries a trivial
    gauge record. The phase factor is exp(-i Phi(t)) so that the ungauged
    trajectory satisfies the original equations.
    """
    rec = state.gauge if record is None else record
    t = state.time
    phase = np.exp(-1j * gauge_phase(rec, t))
    u = SpectralField(state.u.grid, phase * state.u.coeffs)
    n = state.n.copy()
    dn = state.dn.copy()
    n.coeffs[0] += rec.mean_n0 + t * rec.mean_n1
    dn.coeffs[0] += rec.mean_n1
    return QZSState(u, n, dn, t, GaugeRecord())


# ---------------------------------------------------------------------------
# grid products


def _dealias_mask(grid):
    # two-thirds rule: zero everything above |k| = M // 3
    return np.abs(grid.freqs) <= grid.size // 3


def _grid_product(f: SpectralField, g: SpectralField, dealias: bool) -> SpectralField:
    """Collocation product; with ``dealias`` the top third of modes is zeroed
    in both factors and in the result."""
    grid = f.grid
    fc, gc = f.coeffs, g.coeffs
    if dealias:
        mask = _dealias_mask(grid)
        fc = fc * mask
        gc = gc * mask
    prod = np.fft.fft(np.fft.ifft(fc) * np.fft.ifft(gc)) * grid.size
    if dealias:
        prod = prod * _dealias_mask(grid)
    return SpectralField(grid, prod)


def _padded_product(f: SpectralField, g: SpectralField) -> SpectralField:
    """Alias-free product via zero padding, truncated back to the grid band."""
    grid = f.grid
    m = grid.size
    big = 2 * m
    half = m // 2
    idx_small = np.arange(-half, half) % m
    idx_big = np.arange(-half, half) % big
    fpad = np.zeros(big, dtype=complex)
    gpad = np.zeros(big, dtype=complex)
    fpad[idx_big] = f.coeffs[idx_small]
    gpad[idx_big] = g.coeffs[idx_small]
    prod = np.fft.fft(np.fft.ifft(fpad) * np.fft.ifft(gpad)) * big
    out = np.empty(m, dtype=complex)
    out[idx_small] = prod[idx_big]
    return SpectralField(grid, out)


def _conj_field(f: SpectralField) -> SpectralField:
    """Coefficients of the complex conjugate field: conj(c(-k))."""
    m = f.grid.size
    return SpectralField(f.grid, np.conj(f.coeffs[(-np.arange(m)) % m]))


# ---------------------------------------------------------------------------
# residual certificate


def rhs_residual(triple, params: PropagatorParams):
    """H^0 residuals of both equations on a uniformly spaced state triple.

    Time derivatives are centered differences at the middle state, spatial
    derivatives are spectral, products alias-free. Returns (r_schrodinger,
    r_wave); both vanish at the scheme's consistency order on solutions.
    """
    prev, mid, nxt = triple
    dt1 = mid.time - prev.time
    dt2 = nxt.time - mid.time
    if not math.isclose(dt1, dt2, rel_tol=1e-9, abs_tol=1e-15):
        raise ValueError("residual triple must be uniformly spaced in time")
    h = dt1
    grid = mid.u.grid

    du_dt = SpectralField(grid, (nxt.u.coeffs - prev.u.coeffs) / (2.0 * h))
    un = _padded_product(mid.u, mid.n)
    res1 = (
        1j * du_dt.coeffs
        + params.alpha * spectral_derivative(mid.u, 2).coeffs
        - params.eps**2 * spectral_derivative(mid.u, 4).coeffs
        - un.coeffs
    )

    d2n_dt2 = (nxt.n.coeffs - 2.0 * mid.n.coeffs + prev.n.coeffs) / (h * h)
    uu = _padded_product(mid.u, _conj_field(mid.u))
    res2 = (
        d2n_dt2 / params.beta**2
        - spectral_derivative(mid.n, 2).coeffs
        + params.eps**2 * spectral_derivative(mid.n, 4).coeffs
        - spectral_derivative(uu, 2).coeffs
    )
    r1 = float(np.linalg.norm(res1))
    r2 = float(np.linalg.norm(res2))
    return r1, r2


# ---------------------------------------------------------------------------
# Picard iteration on the Duhamel form


def _wave_homogeneous(params, t, n, dn):
    n_out = apply_wave_cosine(params, t, n) + apply_wave_sine(params, t, dn)
    dn_out = apply_wave_cosine_dot(params, t, n) + apply_wave_cosine(params, t, dn)
    return n_out, dn_out


def _source_uu(u: SpectralField, params, dealias: bool) -> SpectralField:
    """beta^2 dxx |u|^2 with the two-thirds rule applied to the product."""
    grid = u.grid
    q = np.abs(np.fft.ifft(u.coeffs) * grid.size) ** 2
    qhat = np.fft.fft(q) / grid.size
    if dealias:
        qhat = qhat * _dealias_mask(grid)
    k = grid.freqs.astype(float)
    return SpectralField(grid, -params.beta**2 * k * k * qhat)


def picard_step(state: QZSState, params: PropagatorParams, config: SolverConfig, h: float) -> QZSState:
    """One step of the Duhamel fixed-point iteration over [t, t+h].

    Raises ContractionFailure when successive iterates do not settle below
    ``picard_tol`` in H^0 x H^0 within ``picard_maxiter`` sweeps.
    """
    if h > config.dt * (1.0 + 1e-12):
        raise ValueError("picard step size exceeds config.dt")
    u0, n0, dn0 = state.u, state.n, state.dn

    f0 = _grid_product(u0, n0, config.dealias)          # (u n)(t)
    g0 = _source_uu(u0, params, config.dealias)          # beta^2 dxx|u|^2 (t)

    u_lin = apply_schrodinger(params, h, u0)
    n_lin, dn_lin = _wave_homogeneous(params, h, n0, dn0)

    if config.quadrature == "trapezoid":
        stepper = _picard_trapezoid
    else:
        stepper = _picard_midpoint
    u_new, n_new, dn_new, residual, converged = stepper(
        params, config, h, u0, n0, dn0, f0, g0, u_lin, n_lin, dn_lin
    )
    if not converged:
        raise ContractionFailure(
            f"picard iteration stalled at residual {residual:.3e} "
            f"(h={h:g} too large for this data?)",
            residual,
        )
    return QZSState(u_new, n_new, dn_new, state.time + h, state.gauge)


def _picard_trapezoid(params, config, h, u0, n0, dn0, f0, g0, u_lin, n_lin, dn_lin):
    uf0 = apply_schrodinger(params, h, f0)
    sg0 = apply_wave_sine(params, h, g0)
    cg0 = apply_wave_cosine(params, h, g0)
    u_new, n_new, dn_new = u_lin, n_lin, dn_lin
    residual = np.inf
    for _ in range(config.picard_maxiter):
        f1 = _grid_product(u_new, n_new, config.dealias)
        g1 = _source_uu(u_new, params, config.dealias)
        u_next = SpectralField(u0.grid, u_lin.coeffs - 1j * (h / 2.0) * (uf0.coeffs + f1.coeffs))
        # sin-kernel weight at the right endpoint vanishes, cos weight is 1
        n_next = SpectralField(n0.grid, n_lin.coeffs + (h / 2.0) * sg0.coeffs)
        dn_next = SpectralField(n0.grid, dn_lin.coeffs + (h / 2.0) * (cg0.coeffs + g1.coeffs))
        residual = float(np.linalg.norm(u_next.coeffs - u_new.coeffs)) + float(
            np.linalg.norm(n_next.coeffs - n_new.coeffs)
        )
        u_new, n_new, dn_new = u_next, n_next, dn_next
        if residual < config.picard_tol:
            return u_new, n_new, dn_new, residual, True
    return u_new, n_new, dn_new, residual, False


def _picard_midpoint(params, config, h, u0, n0, dn0, f0, g0, u_lin, n_lin, dn_lin):
    # iterate carries the midpoint values; the endpoint is evaluated with the
    # midpoint rule once the midpoint has converged
    hh = h / 2.0
    u_lin_m = apply_schrodinger(params, hh, u0)
    n_lin_m, dn_lin_m = _wave_homogeneous(params, hh, n0, dn0)
    uf0_m = apply_schrodinger(params, hh, f0)
    sg0_m = apply_wave_sine(params, hh, g0)
    cg0_m = apply_wave_cosine(params, hh, g0)

    u_mid, n_mid, dn_mid = u_lin_m, n_lin_m, dn_lin_m
    residual = np.inf
    converged = False
    for _ in range(config.picard_maxiter):
        f_m = _grid_product(u_mid, n_mid, config.dealias)
        g_m = _source_uu(u_mid, params, config.dealias)
        u_next = SpectralField(u0.grid, u_lin_m.coeffs - 1j * (hh / 2.0) * (uf0_m.coeffs + f_m.coeffs))
        n_next = SpectralField(n0.grid, n_lin_m.coeffs + (hh / 2.0) * sg0_m.coeffs)
        dn_next = SpectralField(n0.grid, dn_lin_m.coeffs + (hh / 2.0) * (cg0_m.coeffs + g_m.coeffs))
        residual = float(np.linalg.norm(u_next.coeffs - u_mid.coeffs)) + float(
            np.linalg.norm(n_next.coeffs - n_mid.coeffs)
        )
        u_mid, n_mid, dn_mid = u_next, n_next, dn_next
        if residual < config.picard_tol:
            converged = True
            break
    f_m = _grid_product(u_mid, n_mid, config.dealias)
    g_m = _source_uu(u_mid, params, config.dealias)
    u_new = SpectralField(
        u0.grid,
        apply_schrodinger(params, h, u0).coeffs - 1j * h * apply_schrodinger(params, hh, f_m).coeffs,
    )
    n_full, dn_full = _wave_homogeneous(params, h, n0, dn0)
    n_new = SpectralField(n0.grid, n_full.coeffs + h * apply_wave_sine(params, hh, g_m).coeffs)
    dn_new = SpectralField(n0.grid, dn_full.coeffs + h * apply_wave_cosine(params, hh, g_m).coeffs)
    return u_new, n_new, dn_new, residual, converged


# ---------------------------------------------------------------------------
# Strang splitting with exact linear flows


def strang_step(state: QZSState, params: PropagatorParams, config: SolverConfig, h: float) -> QZSState:
    grid = state.u.grid
    hh = h / 2.0

    u = apply_schrodinger(params, hh, state.u)
    n, dn = _wave_homogeneous(params, hh, state.n, state.dn)

    # nonlinear substep: pointwise phase on u (mass exact), Gautschi kick on dn;
    # the sandwich of half flows turns the kick into the full-step Duhamel
    # source integrals with |u|^2 frozen at the substep midpoint
    u_x = np.fft.ifft(u.coeffs) * grid.size
    n_x = np.real(np.fft.ifft(n.coeffs) * grid.size)
    u_x = u_x * np.exp(-1j * h * n_x)
    q_hat = np.fft.fft(np.abs(u_x) ** 2) / grid.size
    if config.dealias:
        q_hat = q_hat * _dealias_mask(grid)
    u = SpectralField(grid, np.fft.fft(u_x) / grid.size)

    k = grid.freqs.astype(float)
    omega = params.wave_omega(k)
    kick = np.empty(grid.size)
    nz = omega != 0
    kick[nz] = 2.0 * np.sin(omega[nz] * hh) / omega[nz]
    kick[~nz] = h
    dn = SpectralField(grid, dn.coeffs + kick * (-params.beta**2 * k * k) * q_hat)

    u = apply_schrodinger(params, hh, u)
    n, dn = _wave_homogeneous(params, hh, n, dn)
    return QZSState(u, n, dn, state.time + h, state.gauge)


# ---------------------------------------------------------------------------
# driver


def solve(data, params: PropagatorParams, T: float, config: SolverConfig) -> list[QZSState]:
    """Integrate from t = 0 to T; returns snapshots every config.dt.

    Data (u0, n0, n1) is gauged to mean-zero, stepped, and ungauged, so the
    returned trajectory is in the original variables.
    """
    if T <= 0:
        raise ValueError("T must be positive")
    u0, n0, n1 = data
    u0g, n0g, n1g, record = zero_mean_gauge(u0, n0, n1)
    state = QZSState(u0g, n0g, n1g, 0.0, record)

    n_steps = int(round(T / config.dt))
    if abs(n_steps * config.dt - T) > 1e-9 * max(1.0, T):
        raise ValueError("T must be an integer multiple of dt")

    step = strang_step if config.scheme == "strang" else picard_step
    trajectory = [ungauge(state)]
    for _ in range(n_steps):
        # overflow here is the blow-up path doing its job; detect, don't warn
        with np.errstate(over="ignore", invalid="ignore"):
            state = step(state, params, config, config.dt)
        if not state.finite():
            raise BlowUpDetected(
                f"non-finite values at t={state.time:g}; last finite time "
                f"{trajectory[-1].time:g}",
                last_time=trajectory[-1].time,
                last_state=trajectory[-1],
            )
        trajectory.append(ungauge(state))
    return trajectory


@dataclass
class SemiclassicalTable:
    eps_values: list
    errors: list
    h10_bounds: list
    fitted_rate: float
    times: np.ndarray


def _h10_norm(state: QZSState) -> float:
    return (
        sobolev_norm(state.u, 1.0)
        + sobolev_norm(state.n, 0.0)
        + sobolev_norm(state.dn, -1.0)
    )


def semiclassical_experiment(
    data_family,
    eps_list,
    params: PropagatorParams,
    T: float,
    s: float,
    config: SolverConfig | None = None,
) -> SemiclassicalTable:
    """Distance of the quantum flow from the eps = 0 flow on [0, T].

    For each eps the error is sup over the snapshot grid of

        |u_eps - u_0|_{H^{s-2}} + |n_eps - n_0|_{H^{s-3}} + |dn_eps - dn_0|_{H^{s-4}}

    together with the sup-in-time size of (u, n, dn) in H^1 x H^0 x H^{-1},
    which the uniform bound says is eps-independent.
    """
    if s < 4:
        raise ValueError("the convergence statement needs s >= 4")
    eps_list = list(eps_list)
    if any(e < 0 for e in eps_list):
        raise ValueError("eps values must be nonnegative")
    if sorted(eps_list, reverse=True) != eps_list:
        raise ValueError("eps_list must be sorted decreasing")
    if config is None:
        config = SolverConfig()

    ref_params = replace(params, eps=0.0)
    ref = solve(data_family(0.0), ref_params, T, config)
    times = np.array([st.time for st in ref])

    errors, bounds = [], []
    for eps in eps_list:
        run_params = replace(params, eps=float(eps))
        traj = solve(data_family(float(eps)), run_params, T, config)
        err = 0.0
        bound = 0.0
        for st, st0 in zip(traj, ref):
            du = st.u - st0.u
            dnn = st.n - st0.n
            ddn = st.dn - st0.dn
            err = max(
                err,
                sobolev_norm(du, s - 2)
                + sobolev_norm(dnn, s - 3)
                + sobolev_norm(ddn, s - 4),
            )
            bound = max(bound, _h10_norm(st))
        errors.append(err)
        bounds.append(bound)

    pos = [(e, err) for e, err in zip(eps_list, errors) if e > 0 and err > 0]
    if len(pos) >= 2:
        le = np.log([p[0] for p in pos])
        lr = np.log([p[1] for p in pos])
        rate = float(np.polyfit(le, lr, 1)[0])
    else:
        rate = float("nan")
    return SemiclassicalTable(eps_list, errors, bounds, rate, times)


@dataclass
class DiscontinuityResult:
    value: float
    period: float
    covered: bool

    def __float__(self):
        return self.value


def discontinuity_demo(N: int, eps: float, eps0: float, s: float, t_grid) -> DiscontinuityResult:
    """Largest H^s distance of two normalized plane-wave flows over t_grid.

    The two flows differ only by the quartic phase t (eps^2 - eps0^2) N^4,
    so the normalized distance is |1 - exp(i t (eps^2 - eps0^2) N^4)|; over
    a full period its sup equals 2 independently of s and of sign(N).
    """
    if N == 0:
        raise ValueError("N must be nonzero")
    t_grid = np.asarray(t_grid, dtype=float)
    gap = (eps**2 - eps0**2) * float(N) ** 4
    if gap == 0.0:
        return DiscontinuityResult(0.0, float("inf"), True)
    period = 2.0 * np.pi / abs(gap)
    covered = bool(t_grid.max() - t_grid.min() >= period * (1.0 - 1e-12))

    from .spectral import TorusGrid

    m = max(8, 4 * abs(int(N)))
    if m % 2:
        m += 1
    grid = TorusGrid(m)
    scale = (1.0 + N * N) ** (-s / 2.0)
    idx = grid.index(int(N))
    best = 0.0
    omega1 = N * N + eps**2 * float(N) ** 4
    omega2 = N * N + eps0**2 * float(N) ** 4
    for t in t_grid:
        c = np.zeros(m, dtype=complex)
        c[idx] = scale * (np.exp(-1j * t * omega1) - np.exp(-1j * t * omega2))
        diff = SpectralField(grid, c)
        best = max(best, sobolev_norm(diff, s))
    return DiscontinuityResult(best, period, covered)
