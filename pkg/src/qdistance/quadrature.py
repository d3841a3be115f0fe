"""Truncated one-dimensional integral for d<s>/dt.

After exact angular integration and the change of variable rho = sigma*p,

    d<s>/dt = (1/beta) sqrt(x/pi) * [ int_{xi1}^{xi2} e^{-(rho-rho0)^2} w(rho) rho drho
                                     - int_0^{xi3} e^{-(rho+rho0)^2} w(rho) rho drho ]

with w(rho) = sqrt(1 - x rho^2), rho0 = beta/sqrt(x), and limits that keep
rho within ``n_sigma`` standard deviations of each Gaussian and below the
relativistic cutoff 1/sqrt(x).
"""

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .integrate import ConvergenceError, PrecisionWarning, gauss_kronrod


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    n_sigma: float = 3.0
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be > 0, got {self.rel_tol}")
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be > 0, got {self.abs_tol}")
        if not self.n_sigma > 0:
            raise ValueError(f"n_sigma must be > 0, got {self.n_sigma}")
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 1:
            raise ValueError(f"max_subdivisions must be a positive integer, got {self.max_subdivisions}")


@dataclass(frozen=True)
class TruncationLimits:
    xi1: float
    xi2: float
    xi3: float
    rho0: float
    cutoff: float


class SweepRow(NamedTuple):
    beta: float
    x: float
    ds_dt: float
    classical_ref: float
    status: str


class TruncationRow(NamedTuple):
    n_sigma: float
    x: float
    ds_dt: float
    status: str


def _check_point(x, beta):
    if not x > 0 or not math.isfinite(x):
        raise ValueError(f"x must be a finite value > 0, got {x}")
    if not 0 < beta < 1:
        raise ValueError(f"beta must satisfy 0 < beta < 1, got {beta}")


def truncation_limits(x, beta, n_sigma=3.0):
    """Integration limits for a window of ``n_sigma`` standard deviations.

    Each Gaussian e^{-(rho -+ rho0)^2} has standard deviation 1/sqrt(2),
    hence the half-width ``n_sigma/sqrt(2)``.  All limits are clamped to
    the cutoff ``rho0/beta = 1/sqrt(x)``.  ``n_sigma = 0`` is allowed and
    gives an empty window.
    """
    _check_point(x, beta)
    if not n_sigma >= 0:
        raise ValueError(f"n_sigma must be >= 0, got {n_sigma}")
    rho0 = beta / math.sqrt(x)
    cutoff = rho0 / beta
    half = n_sigma / math.sqrt(2.0)
    return TruncationLimits(
        xi1=min(cutoff, max(0.0, rho0 - half)),
        xi2=min(cutoff, rho0 + half),
        xi3=min(cutoff, max(0.0, -rho0 + half)),
        rho0=rho0,
        cutoff=cutoff,
    )


def _piece(weight, lo, hi, x, cutoff, spec):
    """Integrate ``weight(rho) * sqrt(1 - x rho^2)`` over ``[lo, hi]``.

    When ``hi`` sits on the cutoff the square root has an infinite
    derivative there; rho = cutoff*sin(u) turns the whole piece smooth.
    """
    if hi <= lo:
        return 0.0, 0.0
    if hi >= cutoff:
        def f(u):
            c = np.cos(u)
            return weight(cutoff * np.sin(u)) * cutoff * c * c

        u_lo = math.asin(min(1.0, lo / cutoff))
        res = gauss_kronrod(f, u_lo, 0.5 * math.pi, spec.rel_tol, spec.abs_tol,
                            spec.max_subdivisions)
    else:
        def f(rho):
            return weight(rho) * np.sqrt(np.maximum(0.0, 1.0 - x * rho * rho))

        res = gauss_kronrod(f, lo, hi, spec.rel_tol, spec.abs_tol, spec.max_subdivisions)
    return res.value, res.error


def ds_dt_from_limits(x, beta, limits, spec=None):
    """Truncated integral for explicit limits; returns ``(value, error)``.

    The 1/(beta sqrt(pi/x)) prefactor equals 1/(rho0 sqrt(pi)) and is folded
    into the weights.  Where both Gaussians are integrated over the same
    range, [0, xi3], their difference is evaluated as
    ``e^{-(rho-rho0)^2} * (1 - e^{-4 rho rho0})`` through expm1, so small
    rho0 (small beta or large x) does not cancel catastrophically.
    """
    _check_point(x, beta)
    spec = spec or QuadratureSpec()
    rho0, cutoff = limits.rho0, limits.cutoff
    norm = 1.0 / (rho0 * math.sqrt(math.pi))

    def both(rho):
        return norm * rho * np.exp(-(rho - rho0) ** 2) * -np.expm1(-4.0 * rho * rho0)

    def first(rho):
        return norm * rho * np.exp(-(rho - rho0) ** 2)

    def second(rho):
        return norm * rho * np.exp(-(rho + rho0) ** 2)

    xi1, xi2, xi3 = limits.xi1, limits.xi2, limits.xi3
    o_lo, o_hi = xi1, min(xi2, xi3)
    if o_hi > o_lo:
        pieces = [
            (both, o_lo, o_hi, 1.0),
            (first, o_hi, xi2, 1.0),
            (second, 0.0, min(xi1, xi3), -1.0),
            (second, o_hi, xi3, -1.0),
        ]
    else:
        pieces = [(first, xi1, xi2, 1.0), (second, 0.0, xi3, -1.0)]
    value = error = 0.0
    for weight, lo, hi, sign in pieces:
        v, e = _piece(weight, lo, hi, x, cutoff, spec)
        value += sign * v
        error += e
    return value, error


def ds_dt_quadrature(x, beta, spec=None):
    """d<s>/dt for a free Gaussian packet by truncated quadrature.

    Parameters
    ----------
    x : float
        Quantumness parameter 1/(m sigma)^2, > 0.
    beta : float
        Mean speed p0/m, in (0, 1).
    spec : QuadratureSpec, optional
        Tolerances and window width; defaults to three standard deviations.

    Returns
    -------
    float

    Raises
    ------
    ConvergenceError
        If a piece does not converge within ``spec.max_subdivisions``.

    Warns
    -----
    PrecisionWarning
        If the error estimate met ``abs_tol`` but not ``rel_tol``.
    """
    spec = spec or QuadratureSpec()
    limits = truncation_limits(x, beta, spec.n_sigma)
    value, error = ds_dt_from_limits(x, beta, limits, spec)
    if error > spec.rel_tol * abs(value):
        warnings.warn(
            f"d<s>/dt at x={x:g}, beta={beta:g}: error {error:.2g} exceeds "
            f"rel_tol * |value| = {spec.rel_tol * abs(value):.2g}",
            PrecisionWarning,
            stacklevel=2,
        )
    return value


def _evaluate(x, beta, spec):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", PrecisionWarning)
        try:
            value = ds_dt_quadrature(x, beta, spec)
        except ConvergenceError as exc:
            return math.nan, f"error: {exc}"
        except ValueError as exc:
            return math.nan, f"error: {exc}"
    if any(issubclass(w.category, PrecisionWarning) for w in caught):
        return value, "precision"
    return value, "ok"


def log_grid(x_min=1e-8, x_max=1e4, count=61):
    """Log-spaced x values; the default matches the figure grid."""
    return np.logspace(math.log10(x_min), math.log10(x_max), int(count))


def sweep(x_grid, beta_list, spec=None):
    """Evaluate d<s>/dt on a grid, one row per (beta, x), beta-major.

    Individual failures become rows with ``ds_dt = nan`` and an
    ``error: ...`` status instead of aborting the sweep.
    """
    spec = spec or QuadratureSpec()
    rows = []
    for beta in beta_list:
        ref = math.sqrt(1.0 - beta * beta) if 0 <= beta < 1 else math.nan
        for x in x_grid:
            value, status = _evaluate(float(x), float(beta), spec)
            rows.append(SweepRow(float(beta), float(x), value, ref, status))
    return rows


def truncation_study(x_grid, beta, n_sigma_list, spec=None):
    """d<s>/dt for several window widths, one row per (n_sigma, x)."""
    spec = spec or QuadratureSpec()
    rows = []
    for n_sigma in n_sigma_list:
        try:
            point_spec = QuadratureSpec(spec.rel_tol, spec.abs_tol, float(n_sigma),
                                        spec.max_subdivisions)
        except ValueError as exc:
            rows.extend(TruncationRow(float(n_sigma), float(x), math.nan, f"error: {exc}")
                        for x in x_grid)
            continue
        for x in x_grid:
            value, status = _evaluate(float(x), float(beta), point_spec)
            rows.append(TruncationRow(float(n_sigma), float(x), value, status))
    return rows
