"""qzlab: spectral simulator and numerical estimate lab for the periodic
quantum Zakharov system."""

from .bourgain import (
    SpacetimeField,
    TruncationWarning,
    WeightKind,
    cutoff_psi,
    default_tau_window,
    spacetime_product,
    spacetime_transform,
    xsb_norm,
    y_norm,
    z_norm,
)
from .diagnostics import (
    ConservedQuantities,
    conserved_series,
    energy,
    gn_l4_ratio,
    mass,
    nonlinear_energy_bound,
    product_inequality_ratio,
    wave_energy_rate,
)
from .errors import (
    BlowUpDetected,
    ContractionFailure,
    HypothesisViolation,
    InsufficientData,
    MeanZeroViolation,
    NotApplicable,
    SingularParameter,
)
from .estimates import (
    EstimateReport,
    ExponentPoint,
    HLowerBoundReport,
    bilinear_ratio_schrodinger,
    bilinear_ratio_wave,
    case_quantity_sup,
    counterexample_family,
    draw_corpus_pair,
    h_lower_bound_scan,
    h_weight,
    necessity_scan,
    region_membership,
    resonance_identity,
    resonant_pair,
    sigma1,
    sigma2,
)
from .propagators import (
    PropagatorParams,
    apply_schrodinger,
    apply_wave_cosine,
    apply_wave_cosine_dot,
    apply_wave_sine,
    duhamel_constant,
)
from .solver import (
    DiscontinuityResult,
    QZSState,
    SemiclassicalTable,
    SolverConfig,
    apply_gauge,
    discontinuity_demo,
    picard_step,
    rhs_residual,
    semiclassical_experiment,
    solve,
    strang_step,
    ungauge,
)
from .spectral import (
    GaugeRecord,
    SpectralField,
    TorusGrid,
    fft_forward,
    fft_inverse,
    gauge_phase,
    japanese_bracket,
    mollify,
    smooth_plateau,
    sobolev_norm,
    spectral_derivative,
    zero_mean_gauge,
)

__version__ = "0.1.0"
