"""Lattice probes for the bilinear estimates behind local well-posedness.

The machinery here is arithmetic on the (k, tau) lattice: the resonance
factorization and its weight h(k, k1), uniformly bounded lattice sums
sigma_1 / sigma_2, lower-bound scans for h, the five case suprema from the
Cauchy-Schwarz proof of the bilinear estimates, ratio probes of the
estimates themselves on spacetime fields, and the single-mode families
that show the exponent conditions are necessary.

Sign branches: the wave dispersive term enters as tau_2 + sign * beta k_2
<eps k_2> with sign = +1 or -1; the matching resonance weight is

    h(k, k1) = (k + k1)(alpha + eps^2 (k^2 + k1^2)) - sign * beta <eps (k - k1)>.

Scans that do not know the sign evaluate both branches and keep the worse
one (smaller |h|, larger summand).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bourgain import SpacetimeField, WeightKind, spacetime_product, xsb_norm
from .errors import HypothesisViolation, InsufficientData, SingularParameter
from .propagators import PropagatorParams
from .spectral import TorusGrid, japanese_bracket, smooth_plateau

__all__ = [
    "ExponentPoint",
    "EstimateReport",
    "region_membership",
    "h_weight",
    "resonance_identity",
    "sigma1",
    "sigma2",
    "HLowerBoundReport",
    "h_lower_bound_scan",
    "case_quantity_sup",
    "bilinear_ratio_schrodinger",
    "bilinear_ratio_wave",
    "counterexample_family",
    "necessity_scan",
    "draw_corpus_pair",
    "resonant_pair",
]


@dataclass(frozen=True)
class ExponentPoint:
    """One choice of Sobolev/modulation exponents (s, l, b, rho)."""

    s: float
    l: float
    b: float = 0.49
    rho: float = 0.5


@dataclass
class EstimateReport:
    """Inputs, sides, and fit of one estimate probe."""

    description: str
    lhs: float
    rhs: float
    ratio: float
    N_values: list = field(default_factory=list)
    ratios: list = field(default_factory=list)
    fitted_exponent: float = float("nan")
    fit_residual: float = float("nan")

    @classmethod
    def from_sides(cls, description, lhs, rhs, **kw):
        ratio = 0.0 if lhs == 0.0 else (lhs / rhs if rhs != 0.0 else float("inf"))
        return cls(description, lhs, rhs, ratio, **kw)


def region_membership(s: float, l: float):
    """(in local region, in global region) for the exponent pair (s, l).

    Local:  s >= 0, -1 <= l < 2s + 1, -2 < s - l <= 2.
    Global: {0 <= s - l <= 2 and s + l >= 4} union {(2, 1)}.
    """
    in_local = (s >= 0.0) and (-1.0 <= l < 2.0 * s + 1.0) and (-2.0 < s - l <= 2.0)
    in_global = (0.0 <= s - l <= 2.0 and s + l >= 4.0) or (s == 2.0 and l == 1.0)
    return in_local, in_global


def h_weight(k, k1, sign: int, params: PropagatorParams):
    """Resonance weight h(k, k1) for the chosen wave-term sign branch.

    Symmetric in (k, k1); |h(k, -k)| = beta <2 eps k> >= beta.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    k = np.asarray(k, dtype=float)
    k1 = np.asarray(k1, dtype=float)
    cubic = (k + k1) * (params.alpha + params.eps**2 * (k * k + k1 * k1))
    out = cubic - sign * params.beta * japanese_bracket(params.eps * (k - k1))
    if out.ndim == 0:
        return float(out)
    return out


def resonance_identity(k, k1, tau, tau1, sign: int, params: PropagatorParams):
    """Both sides of the three-weight difference identity.

    With tau2 = tau - tau1 and k2 = k - k1 implied,

        (tau + W(k)) - (tau1 + W(k1)) - (tau2 + sign beta k2 <eps k2>)
            = (k - k1) h(k, k1),

    where W(k) = alpha k^2 + eps^2 k^4. Returns (lhs, rhs); they agree up
    to rounding.
    """
    a, e, b = params.alpha, params.eps, params.beta
    tau2 = tau - tau1
    k2 = k - k1
    lhs = math.fsum(
        [
            tau,
            a * k * k,
            e * e * k**4,
            -tau1,
            -a * k1 * k1,
            -e * e * k1**4,
            -tau2,
            -sign * b * k2 * math.sqrt(1.0 + (e * k2) ** 2),
        ]
    )
    rhs = (k - k1) * h_weight(k, k1, sign, params)
    return lhs, rhs


# ---------------------------------------------------------------------------
# uniformly bounded lattice sums


def _check_eps(params, who):
    if params.eps <= 0:
        raise SingularParameter(f"{who} requires eps > 0")


def sigma1(k: int, tau: float, e1: float, K_max: int, params: PropagatorParams) -> float:
    """Truncated sum over k1 != k, both sign branches, of
    <eps^2 k1^4 + alpha k1^2 + tau +- beta (k-k1) <eps (k-k1)>>^{-e1},
    plus an integral tail bound from the quartic growth.

    The reported number is an upper bound for the full sum.
    """
    if e1 <= 0.25:
        raise HypothesisViolation("e1 must exceed 1/4")
    if K_max < 1024:
        raise ValueError("K_max must be at least 2^10")
    _check_eps(params, "sigma1")
    a, b, e = params.alpha, params.beta, params.eps

    # beyond k_star the argument dominates eps^2 k1^4 / 2 for both signs
    def safe(x):
        return e * e * x**4 / 2.0 >= abs(tau) + b * (abs(k) + x) * (1.0 + e * (abs(k) + x))

    k_star = max(K_max, abs(k) + 1)
    while not safe(k_star):
        k_star *= 2

    k1 = np.arange(-k_star, k_star + 1, dtype=float)
    k1 = k1[k1 != k]
    body = e * e * k1**4 + a * k1 * k1 + tau
    wave = b * (k - k1) * japanese_bracket(e * (k - k1))
    total = float(
        np.sum(japanese_bracket(body + wave) ** (-e1))
        + np.sum(japanese_bracket(body - wave) ** (-e1))
    )
    tail = 4.0 * (2.0 / (e * e)) ** e1 * k_star ** (1.0 - 4.0 * e1) / (4.0 * e1 - 1.0)
    return total + tail


def _sigma2_cubic(k, tau, params):
    a, e = params.alpha, params.eps
    c2 = -1.5 * k
    c1 = (a + 2.0 * e * e * k * k) / (2.0 * e * e)
    c0 = (tau - a * k * k - e * e * k**4) / (4.0 * e * e * k)
    return c2, c1, c0


def sigma2(k: int, tau: float, e2: float, K_max: int, params: PropagatorParams) -> float:
    """Truncated sum of <p(k1)>^{-e2} over k1, p the resonance cubic, plus a
    cubic-growth tail bound. Undefined at k = 0."""
    if k == 0:
        raise HypothesisViolation("sigma2 is undefined at k = 0")
    if e2 <= 1.0 / 3.0:
        raise HypothesisViolation("e2 must exceed 1/3")
    if K_max < 1024:
        raise ValueError("K_max must be at least 2^10")
    _check_eps(params, "sigma2")
    c2, c1, c0 = _sigma2_cubic(k, tau, params)

    def safe(x):
        return x**3 / 2.0 >= abs(c2) * x * x + abs(c1) * x + abs(c0)

    k_star = max(K_max, 2 * abs(k) + 1)
    while not safe(k_star):
        k_star *= 2

    k1 = np.arange(-k_star, k_star + 1, dtype=float)
    p = k1**3 + c2 * k1 * k1 + c1 * k1 + c0
    total = float(np.sum(japanese_bracket(p) ** (-e2)))
    tail = 2.0 * 2.0**e2 * k_star ** (1.0 - 3.0 * e2) / (3.0 * e2 - 1.0)
    return total + tail


# ---------------------------------------------------------------------------
# lower bounds for the resonance weight


@dataclass
class HLowerBoundReport:
    C_threshold: float
    C1: int
    c_measured: float
    c4_measured: float
    c4_min_k: float


def h_lower_bound_scan(params: PropagatorParams, K_scan: int) -> HLowerBoundReport:
    """Measured infima of |h|/|k-k1| and |k-k1||h|/|k|^4 over the lattice.

    C1 is the smallest integer magnitude from which beta <eps k> stays
    below |k| (alpha + eps^2 k^2); the scan threshold is
    max(C1, sqrt(3 sqrt(2) beta / eps), 1/(3 eps)). Both sign branches are
    scanned and the worse (smaller) value kept.
    """
    _check_eps(params, "h_lower_bound_scan")
    a, b, e = params.alpha, params.beta, params.eps

    k_safe = int(np.ceil(max(b / a, np.sqrt(b / e), 1.0))) + 1
    ks = np.arange(1, k_safe + 1, dtype=float)
    bad = b * japanese_bracket(e * ks) >= ks * (a + e * e * ks * ks)
    C1 = int(ks[bad].max()) + 1 if bad.any() else 1

    C = max(float(C1), np.sqrt(3.0 * np.sqrt(2.0) * b / e), 1.0 / (3.0 * e))
    if K_scan < 4 * C:
        raise ValueError(f"K_scan must be at least 4*C_threshold = {4 * C:.1f}")

    rng = np.arange(-K_scan, K_scan + 1, dtype=float)
    kk, kk1 = np.meshgrid(rng, rng, indexing="ij")
    habs = np.minimum(
        np.abs(h_weight(kk, kk1, +1, params)),
        np.abs(h_weight(kk, kk1, -1, params)),
    )

    region53 = ((np.abs(kk) >= C) | (np.abs(kk1) >= C)) & (kk != kk1)
    c_measured = float(np.min(habs[region53] / np.abs(kk - kk1)[region53]))

    c4_min_k = 10.0 * max(1.0 / e, np.sqrt(b / e))
    region54 = (np.abs(kk) >= np.maximum(2.0 * np.abs(kk1), c4_min_k)) & (kk != kk1)
    if region54.any():
        num = (np.abs(kk - kk1) * habs)[region54]
        c4 = float(np.min(num / kk[region54] ** 4))
    else:
        c4 = float("nan")
    return HLowerBoundReport(float(C), C1, c_measured, c4, c4_min_k)


# ---------------------------------------------------------------------------
# case suprema from the Cauchy-Schwarz argument


def _phi_delta(d, delta):
    d = np.abs(np.asarray(d, dtype=float))
    if delta > 1.0:
        return np.ones_like(d)
    bracket = japanese_bracket(d)
    if delta == 1.0:
        return np.log1p(bracket)
    return bracket ** (1.0 - delta)


def tau_integral_bound(d, delta, gamma):
    """Closed-form bound for int dtau <tau - a1>^{-delta} <tau - a2>^{-gamma},
    evaluated at d = a1 - a2. Needs delta >= gamma >= 0 and delta+gamma > 1."""
    if not (delta >= gamma >= 0.0):
        raise HypothesisViolation("need delta >= gamma >= 0")
    if delta + gamma <= 1.0:
        raise HypothesisViolation("need delta + gamma > 1")
    return japanese_bracket(d) ** (-gamma) * _phi_delta(d, delta)


def _check_point(point: ExponentPoint):
    s, l, b, rho = point.s, point.l, point.b, point.rho
    checks = [
        (0.0 < rho <= 1.0, "0 < rho <= 1"),
        (s >= 0.0, "s >= 0"),
        (l >= -1.0, "l >= -1"),
        (l <= 2.0 * s + 1.0 - rho, "l <= 2s + 1 - rho"),
        (s - l >= -2.0 + rho, "s - l >= -2 + rho"),
        (s - l <= 2.0, "s - l <= 2"),
        (1.0 / 6.0 < b <= 0.5, "b in (1/6, 1/2]"),
    ]
    for ok, clause in checks:
        if not ok:
            raise HypothesisViolation(clause)


def case_quantity_sup(
    which: str,
    point: ExponentPoint,
    params: PropagatorParams,
    K_max: int,
    tau_samples,
    k_samples=None,
) -> float:
    """Truncated supremum of one of the five case quantities I..V.

    The inner tau integrals are replaced by their closed-form bound
    (``tau_integral_bound``); the inner lattice sum is truncated at K_max;
    the sup runs over the provided tau samples crossed with k samples.
    Case IV omits the k = 0 column: with rho > 0 the underlying sum
    legitimately excludes it, and at rho = 0 that column diverges.
    """
    _check_point(point)
    which = which.upper()
    if which not in ("I", "II", "III", "IV", "V"):
        raise ValueError(f"unknown case {which!r}")
    if which in ("I", "IV") and 4.0 * point.b <= 1.0:
        raise HypothesisViolation("b > 1/4 needed for the tau integral in this case")
    s, l, b, rho = point.s, point.l, point.b, point.rho
    tau_samples = np.asarray(tau_samples, dtype=float)
    if k_samples is None:
        k_samples = np.arange(-32, 33)
    k_samples = np.asarray(k_samples, dtype=int)
    if which == "IV":
        k_samples = k_samples[k_samples != 0]

    inner = np.arange(-K_max, K_max + 1, dtype=float)
    W = params.schrodinger_symbol
    Om = params.wave_omega
    jb = japanese_bracket

    best = 0.0
    for k_out in k_samples:
        ko = float(k_out)
        for tau in tau_samples:
            if which == "I":
                k1 = inner[inner != ko]
                pref = jb(ko) ** (2 * s) / jb(tau + W(ko))
                terms = jb(k1) ** (-2 * s) * jb(ko - k1) ** (-2 * l)
                phi = sum(
                    tau_integral_bound(W(k1) + tau + sgn * (ko - k1) * params.beta * jb(params.eps * (ko - k1)), 2 * b, 2 * b)
                    for sgn in (+1.0, -1.0)
                )
                val = pref * float(np.sum(terms * phi))
            elif which == "II":
                kk = inner[inner != ko]
                pref = jb(ko) ** (-2 * s) / jb(tau + W(ko))
                terms = jb(kk) ** (2 * s) * jb(kk - ko) ** (-2 * l)
                phi = sum(
                    tau_integral_bound(W(kk) + tau + sgn * (ko - kk) * params.beta * jb(params.eps * (ko - kk)), 1.0, 2 * b)
                    for sgn in (+1.0, -1.0)
                )
                val = pref * float(np.sum(terms * phi))
            elif which == "III":
                kk = inner
                pref = jb(ko) ** (-2 * l) / jb(abs(tau) - Om(ko))
                terms = jb(kk) ** (2 * s) * jb(kk - ko) ** (-2 * s)
                phi = tau_integral_bound(W(kk) - W(kk - ko) + tau, 1.0, 2 * b)
                val = pref * float(np.sum(terms * phi))
            elif which == "IV":
                k1 = inner
                pref = jb(ko) ** (2 * l + 2 * rho) / jb(abs(tau) - Om(ko))
                terms = jb(k1) ** (-2 * s) * jb(ko - k1) ** (-2 * s)
                phi = tau_integral_bound(W(ko - k1) - W(k1) - tau, 2 * b, 2 * b)
                val = pref * float(np.sum(terms * phi))
            else:  # V
                kk = inner
                pref = jb(ko) ** (-2 * s) / jb(tau + W(ko))
                terms = jb(kk) ** (2 * l + 2 * rho) * jb(kk - ko) ** (-2 * s)
                phi = sum(
                    tau_integral_bound(W(kk - ko) + tau + sgn * Om(kk), 1.0, 2 * b)
                    for sgn in (+1.0, -1.0)
                )
                val = pref * float(np.sum(terms * phi))
            best = max(best, val)
    return best


# ---------------------------------------------------------------------------
# ratio probes of the two bilinear estimates


def bilinear_ratio_schrodinger(
    u: SpacetimeField, n: SpacetimeField, point: ExponentPoint, params: PropagatorParams
) -> EstimateReport:
    """Ratio |u n|_{X_S^{s,-1/2}} over the two-term right side."""
    s, l, b = point.s, point.l, point.b
    ks = WeightKind("schrodinger", params)
    kw = WeightKind("wave", params)
    prod = spacetime_product(u, n)
    lhs = xsb_norm(prod, s, -0.5, ks)
    rhs = xsb_norm(u, s, b, ks) * xsb_norm(n, l, 0.5, kw) + xsb_norm(u, s, 0.5, ks) * xsb_norm(n, l, b, kw)
    return EstimateReport.from_sides("schrodinger-side bilinear ratio", lhs, rhs)


def bilinear_ratio_wave(
    u: SpacetimeField, v: SpacetimeField, point: ExponentPoint, params: PropagatorParams
) -> EstimateReport:
    """Ratio |D^rho (u conj(v))|_{X_W^{l,-1/2}} over the two-term right side."""
    if not 0.0 < point.rho <= 1.0:
        raise HypothesisViolation("0 < rho <= 1")
    s, l, b = point.s, point.l, point.b
    ks = WeightKind("schrodinger", params)
    kw = WeightKind("wave", params)
    prod = spacetime_product(u, v, conjugate_second=True)
    dmul = np.abs(prod.grid.freqs.astype(float)) ** point.rho
    prod = SpacetimeField(prod.grid, prod.taus, dmul[:, None] * prod.coeffs)
    lhs = xsb_norm(prod, l, -0.5, kw)
    rhs = xsb_norm(u, s, b, ks) * xsb_norm(v, s, 0.5, ks) + xsb_norm(u, s, 0.5, ks) * xsb_norm(v, s, b, ks)
    return EstimateReport.from_sides("wave-side bilinear ratio", lhs, rhs)


# ---------------------------------------------------------------------------
# single-mode families: necessity of the exponent conditions


def _recipes(N: int, params: PropagatorParams):
    """Support frequency and tau-profile placement for each family member.

    Entries are (k, center, absolute): ``absolute`` means the profile is
    phi(|tau| - center), i.e. two bumps at +-center.
    """
    a, b, e = params.alpha, params.beta, params.eps
    WN = a * N * N + e * e * float(N) ** 4
    om1 = b * abs(N) * math.sqrt(1.0 + (e * N) ** 2)
    om2 = 2.0 * b * abs(N) * math.sqrt(1.0 + (2.0 * e * N) ** 2)
    u = {
        1: (-N, -WN, False),
        2: (-N, -(WN + om2), False),
        3: (0, 0.0, False),
        4: (0, -(WN + om1), False),
        5: (N, -WN, False),
        6: (N, -WN + om2, False),
        7: (0, 0.0, False),
        8: (0, -(WN + om1), False),
    }
    n = {
        1: (2 * N, om2, True),
        2: (2 * N, om2, True),
        3: (N, om1, True),
        4: (N, om1, True),
    }
    v = {
        5: (-N, -WN, False),
        6: (-N, -WN, False),
        7: (N, -WN, False),
        8: (N, -WN, False),
    }
    return {"u": u, "n": n, "v": v}


def counterexample_family(
    index: int,
    which: str,
    N: int,
    params: PropagatorParams,
    phi=None,
    grid: TorusGrid | None = None,
    taus=None,
) -> SpacetimeField:
    """Materialize one family member as a lattice field.

    The field is a Kronecker delta in k times a compactly supported bump in
    tau, shifted onto (or off) the relevant dispersion surface. The default
    lattice is sized to contain the support; callers probing large N should
    use ``necessity_scan``, which evaluates the same norms patch-locally.
    """
    table = _recipes(N, params).get(which)
    if table is None or index not in table:
        raise ValueError(f"no family member ({index}, {which!r})")
    k_sup, center, absolute = table[index]
    if phi is None:
        phi = smooth_plateau

    if grid is None:
        m = 4 * abs(N) + 8
        grid = TorusGrid(m + (m % 2))
    half = grid.size // 2
    if not -half <= k_sup < half:
        raise ValueError(f"support frequency {k_sup} beyond lattice Nyquist {half}")

    if taus is None:
        t_max = abs(center) + 8.0
        count = int(2 * np.ceil(t_max / 0.25) + 1)
        taus = np.linspace(-t_max, t_max, count)
    taus = np.asarray(taus, dtype=float)

    coeffs = np.zeros((grid.size, taus.size), dtype=complex)
    if absolute:
        profile = phi(np.abs(taus) - center)
    else:
        profile = phi(taus - center)
    coeffs[grid.index(k_sup), :] = profile
    return SpacetimeField(grid, taus, coeffs)


@dataclass
class _ModeField:
    """Single spatial frequency with tau-profile patches (center, values).

    Values sit on symmetric offset grids with spacing dtau; patches are
    assumed pairwise disjoint, which holds for every recipe at N >= 4.
    """

    k: int
    patches: list
    dtau: float

    def conjugated(self) -> "_ModeField":
        return _ModeField(
            -self.k,
            [(-c, np.conj(v[::-1])) for c, v in self.patches],
            self.dtau,
        )

    def product(self, other: "_ModeField") -> "_ModeField":
        if abs(self.dtau - other.dtau) > 1e-15:
            raise ValueError("patch spacings differ")
        patches = []
        for c1, v1 in self.patches:
            for c2, v2 in other.patches:
                patches.append((c1 + c2, np.convolve(v1, v2) * self.dtau))
        return _ModeField(self.k + other.k, patches, self.dtau)

    def xsb(self, r: float, b: float, kind: WeightKind) -> float:
        acc = 0.0
        for c, v in self.patches:
            n = v.size
            offs = (np.arange(n) - (n - 1) / 2.0) * self.dtau
            w = kind.weight(float(self.k), c + offs)
            acc += float(np.sum(w ** (2.0 * b) * np.abs(v) ** 2))
        kb = (1.0 + self.k * self.k) ** r
        return math.sqrt(kb * self.dtau * acc)


def _mode_member(index, which, N, params, dtau):
    k_sup, center, absolute = _recipes(N, params)[which][index]
    n_nodes = int(2 * round(2.0 / dtau) + 1)
    offs = (np.arange(n_nodes) - (n_nodes - 1) / 2.0) * dtau
    values = smooth_plateau(offs)
    if absolute and center != 0.0:
        patches = [(center, values.copy()), (-center, values.copy())]
    else:
        patches = [(center, values)]
    return _ModeField(k_sup, patches, dtau)


def necessity_scan(
    pair_index: int,
    point: ExponentPoint,
    rho: float,
    params: PropagatorParams,
    N_list,
) -> EstimateReport:
    """Growth exponent of the bilinear ratio along one family pair.

    Pairs 1..4 probe |u n|_{X_S^{s,b-1}} <= |u|_{X_S^{s,b}} |n|_{X_W^{l,b}};
    pairs 5..8 probe the wave-side product with D^rho. The ratio is
    computed per N with closed-form single-mode norms and log-log fitted;
    a fitted exponent above ~0.1 flags a violated necessary condition, one
    below ~0.05 is consistent with boundedness.
    """
    N_list = sorted(int(n) for n in N_list)
    if len(N_list) < 4:
        raise InsufficientData("need at least 4 values of N for the fit")
    if not 1 <= pair_index <= 8:
        raise ValueError("pair_index must be in 1..8")
    s, l, b = point.s, point.l, point.b
    ks = WeightKind("schrodinger", params)
    kw = WeightKind("wave", params)
    dtau = 0.125

    ratios = []
    for N in N_list:
        u = _mode_member(pair_index, "u", N, params, dtau)
        if pair_index <= 4:
            n = _mode_member(pair_index, "n", N, params, dtau)
            prod = u.product(n)
            lhs = prod.xsb(s, b - 1.0, ks)
            rhs = u.xsb(s, b, ks) * n.xsb(l, b, kw)
        else:
            v = _mode_member(pair_index, "v", N, params, dtau)
            prod = u.product(v.conjugated())
            lhs = abs(prod.k) ** rho * prod.xsb(l, b - 1.0, kw)
            rhs = u.xsb(s, b, ks) * v.xsb(s, b, ks)
        ratios.append(lhs / rhs)

    logs_n = np.log(np.asarray(N_list, dtype=float))
    logs_r = np.log(np.asarray(ratios))
    slope, intercept = np.polyfit(logs_n, logs_r, 1)
    resid = float(np.max(np.abs(logs_r - (slope * logs_n + intercept))))
    return EstimateReport(
        description=f"necessity pair {pair_index} at (s,l,b,rho)=({s},{l},{b},{rho})",
        lhs=ratios[-1],
        rhs=1.0,
        ratio=ratios[-1],
        N_values=list(N_list),
        ratios=[float(r) for r in ratios],
        fitted_exponent=float(slope),
        fit_residual=resid,
    )


# ---------------------------------------------------------------------------
# corpus draws for the ratio probes


def resonant_pair(params: PropagatorParams, k_range: int = 16):
    """(k, k1, sign) minimizing |h| over the small lattice: the interaction
    where all three dispersive weights can be small at once."""
    best = (0, 1, 1)
    best_val = np.inf
    for k in range(-k_range, k_range + 1):
        for k1 in range(-k_range, k_range + 1):
            if k == k1:
                continue
            for sign in (1, -1):
                val = abs(h_weight(k, k1, sign, params))
                if val < best_val:
                    best_val = val
                    best = (k, k1, sign)
    return best


def _bump_profile(taus, center, width):
    return smooth_plateau((taus - center) / width)


def draw_corpus_pair(rng, grid: TorusGrid, taus, params: PropagatorParams, adversarial: bool = False):
    """One seeded (u, n)-style draw for the ratio probes.

    Generic draws concentrate each frequency column near its dispersion
    surface (clipped to the window) with random amplitudes and widths;
    adversarial draws put u on a single mode and n on the matching
    resonant frequency.
    """
    taus = np.asarray(taus, dtype=float)
    t_max = taus[-1]
    freqs = grid.freqs

    def surface_field(kind):
        coeffs = np.zeros((grid.size, taus.size), dtype=complex)
        decay = rng.uniform(1.0, 2.5)
        for i, k in enumerate(freqs):
            if kind == "schrodinger":
                center = -params.schrodinger_symbol(k)
            else:
                center = params.wave_omega(k) * rng.choice([-1.0, 1.0])
            if abs(center) > 0.4 * t_max:
                center = rng.uniform(-0.3, 0.3) * t_max
            width = rng.uniform(1.0, 3.0)
            amp = (rng.standard_normal() + 1j * rng.standard_normal()) * (1.0 + k * k) ** (-decay / 2.0)
            coeffs[i, :] = amp * _bump_profile(taus, center, width)
        return SpacetimeField(grid, taus.copy(), coeffs)

    if not adversarial:
        return surface_field("schrodinger"), surface_field("wave")

    k, k1, sign = resonant_pair(params, k_range=grid.size // 4)
    k2 = k - k1
    half = grid.size // 2
    k1 = int(np.clip(k1, -half, half - 1))
    k2 = int(np.clip(k2, -half, half - 1))
    u_coeffs = np.zeros((grid.size, taus.size), dtype=complex)
    n_coeffs = np.zeros((grid.size, taus.size), dtype=complex)
    cu = -params.schrodinger_symbol(k1)
    cn = sign * params.wave_omega(k2)
    if abs(cu) > 0.4 * t_max:
        cu = 0.0
    if abs(cn) > 0.4 * t_max:
        cn = 0.0
    u_coeffs[grid.index(k1), :] = _bump_profile(taus, cu, 1.5)
    n_coeffs[grid.index(k2), :] = _bump_profile(taus, cn, 1.5)
    return (
        SpacetimeField(grid, taus.copy(), u_coeffs),
        SpacetimeField(grid, taus.copy(), n_coeffs),
    )
