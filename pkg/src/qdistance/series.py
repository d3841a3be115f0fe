"""Asymptotic series for the expected interval <s> of a free Gaussian packet.

Term n of the series is

    -(t / (2 sqrt(pi))) * Gamma(n - 1/2) * x**n * L_n^{1/2}(-beta**2 / x)

with x = 1/(m sigma)^2.  The series diverges for every x > 0, so the
canonical result is the partial sum truncated at the smallest term.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .specfun import LOG_SQRT_PI, SQRT_PI, log_gamma_pos_half, log_laguerre_half

DEFAULT_N_MAX = 40
MAX_N = 80
_LOG_DBL_MAX = math.log(np.finfo(float).max)


@dataclass(frozen=True)
class SeriesReport:
    """Terms and truncation diagnostics for one ``(x, beta, t)``.

    ``min_term_index`` is the smallest term reached before the magnitudes
    first start to grow; ``divergent_after`` is the index where they grow,
    or ``None`` if they never do within the computed range.
    ``error_estimate`` is the magnitude of the first omitted term.
    """

    x: float
    beta: float
    t: float
    terms: np.ndarray
    partial_sums: np.ndarray
    min_term_index: int
    min_term_value: float
    truncated_sum: float
    error_estimate: float
    divergent_after: Optional[int]
    classical_ref: float
    overflowed: bool = False

    @property
    def diverges(self):
        return self.divergent_after is not None


def s_classical_limit(beta, t):
    """Classical interval ``t * sqrt(1 - beta**2)``."""
    if not 0 <= beta < 1:
        raise ValueError(f"beta must satisfy 0 <= beta < 1, got {beta}")
    if not t >= 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return t * math.sqrt(1.0 - beta * beta)


def log_unit_term(n, x, beta):
    """``(log|term|, sign)`` of series term ``n`` for ``t = 1``."""
    log_gamma, gamma_sign = log_gamma_pos_half(n)
    log_lag, lag_sign = log_laguerre_half(n, -beta * beta / x)
    log_abs = log_gamma + n * math.log(x) + log_lag - math.log(2.0) - LOG_SQRT_PI
    return log_abs, -gamma_sign * lag_sign


def s_series_terms(x, beta, t=1.0, n_max=DEFAULT_N_MAX):
    """Evaluate series terms ``0..n_max`` and locate the minimal term.

    Terms are built in log space with tracked signs.  If a term would
    overflow a double the series stops at the last finite term and the
    report is flagged ``overflowed``.

    Examples
    --------
    >>> r = s_series_terms(1e-6, 0.0, 1.0, 20)
    >>> r.terms[0], r.terms[1]
    (1.0, -7.5e-07)
    """
    if not x > 0:
        raise ValueError(f"x must be > 0, got {x}")
    if not 0 <= beta < 1:
        raise ValueError(f"beta must satisfy 0 <= beta < 1, got {beta}")
    if not t >= 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if isinstance(n_max, bool) or int(n_max) != n_max or not 1 <= n_max <= MAX_N:
        raise ValueError(f"n_max must be an integer in 1..{MAX_N}, got {n_max!r}")

    terms = []
    overflowed = False
    for n in range(int(n_max) + 1):
        log_abs, sign = log_unit_term(n, x, beta)
        if t > 0:
            log_abs += math.log(t)
            if log_abs > _LOG_DBL_MAX:
                overflowed = True
                break
            terms.append(sign * math.exp(log_abs))
        else:
            terms.append(0.0)
    terms = np.array(terms)
    partial = np.cumsum(terms)

    mags = np.abs(terms)
    growth = np.nonzero(mags[1:] > mags[:-1])[0]
    if growth.size:
        min_idx = int(growth[0])
        divergent_after = min_idx + 1
        error = float(mags[divergent_after])
    else:
        min_idx = int(np.argmin(mags))
        divergent_after = None
        error = float(mags[min_idx + 1]) if min_idx + 1 < len(mags) else float(mags[min_idx])

    return SeriesReport(
        x=float(x),
        beta=float(beta),
        t=float(t),
        terms=terms,
        partial_sums=partial,
        min_term_index=min_idx,
        min_term_value=float(terms[min_idx]),
        truncated_sum=float(partial[min_idx]),
        error_estimate=error,
        divergent_after=divergent_after,
        classical_ref=s_classical_limit(beta, t),
        overflowed=overflowed,
    )


def ratio_diagnostic(report):
    """Ratios ``|terms[n+1] / terms[n]|`` for consecutive terms.

    Zero terms are not special-cased: 0/0 gives nan and x/0 gives inf.
    """
    terms = np.asarray(report.terms, dtype=float)
    if terms.size < 2:
        raise ValueError("ratio test needs at least two terms")
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.abs(terms[1:] / terms[:-1])


def classical_limit_series(beta, t=1.0, rtol=1e-16, max_terms=1_000_000):
    """Sum the series with every Laguerre factor replaced by its leading term.

    That replacement turns term n into
    ``-(t / (2 sqrt(pi))) * Gamma(n - 1/2) / n! * beta**(2n)``, which converges
    for beta < 1 and sums to ``t * sqrt(1 - beta**2)``.
    """
    if not 0 <= beta < 1:
        raise ValueError(f"beta must satisfy 0 <= beta < 1, got {beta}")
    b2 = beta * beta
    coeff = -2.0 * SQRT_PI  # Gamma(-1/2) / 0!
    power = 1.0
    parts = []
    running = 0.0
    for n in range(max_terms):
        term = coeff * power
        parts.append(term)
        running += term
        if n > 0 and abs(term) <= rtol * abs(running):
            break
        coeff *= (n - 0.5) / (n + 1)
        power *= b2
        if power == 0.0:
            break
    return -t / (2.0 * SQRT_PI) * math.fsum(parts)
