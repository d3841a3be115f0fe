"""Expected worldline interval <s> of free Gaussian wavepackets.

Closed-form momentum moments, the divergent series they feed, the
truncated momentum-space integral, plane-wave and box spectra, and an
estimator working from sampled weak trajectories.
"""

__version__ = "0.1.0"

from .integrate import ConvergenceError, PrecisionWarning, gauss_kronrod
from .moments import (
    GaussianPacket,
    MomentResult,
    moment_closed_form,
    moment_oracle,
    moment_result,
    moment_table,
)
from .quadrature import (
    QuadratureSpec,
    TruncationLimits,
    ds_dt_quadrature,
    log_grid,
    sweep,
    truncation_limits,
    truncation_study,
)
from .series import (
    SeriesReport,
    classical_limit_series,
    ratio_diagnostic,
    s_classical_limit,
    s_series_terms,
)
from .spectra import BoxSpectrumEntry, box_spectrum, planewave_eigenvalue
from .weaktraj import (
    WeakTrajectory,
    finite_diff_velocity,
    superluminal_steps,
    synthesize_linear_trajectory,
    weak_distance_estimate,
)
