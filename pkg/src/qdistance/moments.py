"""Even momentum moments <p^{2n}> of a free Gaussian wavepacket.

The closed form is a product of gamma functions and a Laguerre polynomial.
:func:`moment_oracle` integrates the angular-reduced momentum density
directly and is kept independent of it for cross-checking.
"""

import math
from dataclasses import dataclass

import numpy as np

from .integrate import ConvergenceError, gauss_kronrod
from .specfun import log_abs_gamma_neg_half, log_laguerre_half

MAX_MOMENT_INDEX = 80
_TINY = 1e-300


@dataclass(frozen=True)
class GaussianPacket:
    """Initial minimum-uncertainty wavepacket in natural units.

    Attributes
    ----------
    sigma : float
        Position-space spread.
    p0 : float
        Magnitude of the mean momentum.
    mass : float
        Particle mass.
    """

    sigma: float
    p0: float
    mass: float

    def __post_init__(self):
        if not self.sigma > 0:
            raise ValueError(f"sigma must be > 0, got {self.sigma}")
        if not self.mass > 0:
            raise ValueError(f"mass must be > 0, got {self.mass}")
        if not self.p0 >= 0:
            raise ValueError(f"p0 must be >= 0, got {self.p0}")
        if not self.beta < 1:
            raise ValueError(f"beta must be < 1, got beta = p0/mass = {self.beta}")

    @classmethod
    def from_dimensionless(cls, x, beta, mass=1.0):
        """Packet with ``1/(mass*sigma)**2 == x`` and ``p0/mass == beta``."""
        if not x > 0:
            raise ValueError(f"x must be > 0, got {x}")
        if not 0 <= beta < 1:
            raise ValueError(f"beta must satisfy 0 <= beta < 1, got {beta}")
        return cls(sigma=1.0 / (mass * math.sqrt(x)), p0=beta * mass, mass=mass)

    @property
    def beta(self):
        return self.p0 / self.mass

    @property
    def x(self):
        return 1.0 / (self.mass * self.sigma) ** 2

    @property
    def rho0(self):
        return self.mass * self.sigma * self.beta


@dataclass(frozen=True)
class MomentResult:
    n: int
    closed_form: float
    oracle: float
    rel_discrepancy: float


def _check_n(n):
    if isinstance(n, bool) or int(n) != n or not 0 <= n <= MAX_MOMENT_INDEX:
        raise ValueError(f"moment index must be an integer in 0..{MAX_MOMENT_INDEX}, got {n!r}")
    return int(n)


def log_moment_closed_form(packet, n):
    """Natural log of :func:`moment_closed_form`."""
    n = _check_n(n)
    log_lag, _ = log_laguerre_half(n, -(packet.sigma * packet.p0) ** 2)
    return (
        -math.log(2.0 * math.sqrt(math.pi))
        - 2 * n * math.log(2.0 * packet.sigma)
        + log_abs_gamma_neg_half(n)
        + math.lgamma(2 * n + 2)
        + log_lag
    )


def moment_closed_form(packet, n):
    r"""Closed-form even moment <p^{2n}>.

    .. math::

        \langle p^{2n}\rangle = \frac{1}{2\sqrt\pi}\,(2\sigma)^{-2n}
            \,|\Gamma(-n-\tfrac12)|\,\Gamma(2n+2)\,L_n^{1/2}(-\sigma^2 p_0^2)

    The absolute value keeps every moment positive; the Laguerre factor is
    positive because its argument is never positive.  Evaluated in log
    space so that the huge factorial and the tiny gamma never meet as
    plain floats.

    Raises
    ------
    ValueError
        If ``n`` is outside ``0..80``.
    """
    return math.exp(log_moment_closed_form(packet, n))


def _oracle_upper_limit(packet, n):
    return (n + 1) / packet.sigma + packet.p0 + 10.0 / packet.sigma


def _log_density_integrand(packet, n):
    s2 = packet.sigma ** 2
    p0 = packet.p0

    def log_f(p):
        p = np.asarray(p, dtype=float)
        a = 2.0 * s2 * p * p0
        with np.errstate(divide="ignore", invalid="ignore"):
            # e^{-s2 (p^2 + p0^2)} * 2 sinh(a) / a, regrouped to stay finite
            log_kernel = np.where(
                a < 1e-8,
                math.log(2.0) - s2 * (p * p + p0 * p0),
                -s2 * (p - p0) ** 2 + np.log(-np.expm1(-2.0 * a)) - np.log(a),
            )
            return (2 * n + 2) * np.log(p) + log_kernel

    return log_f


def moment_oracle(packet, n, tol=1e-10, p_max=None, max_subdivisions=2000):
    """<p^{2n}> by adaptive quadrature of the angular-reduced density.

    Integrates ``(2 sigma^3/sqrt(pi)) exp(-sigma^2 p0^2) p^{2n+2}
    exp(-sigma^2 p^2) * 2 sinh(a)/a`` with ``a = 2 sigma^2 p p0`` over
    ``[0, p_max]``.  The integrand is rescaled by its peak so the relative
    tolerance is meaningful even when the moment is astronomically large.

    Raises
    ------
    ConvergenceError
        If the tolerance is not met; carries the best estimate and its error.
    """
    n = _check_n(n)
    if not tol > 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    if p_max is None:
        p_max = _oracle_upper_limit(packet, n)
    log_f = _log_density_integrand(packet, n)
    grid = np.linspace(0.0, p_max, 2049)[1:]
    shift = float(np.max(log_f(grid)))

    def f(p):
        return np.exp(log_f(p) - shift)

    scale = math.log(2.0) + 3 * math.log(packet.sigma) - 0.5 * math.log(math.pi) + shift
    try:
        res = gauss_kronrod(f, 0.0, p_max, rel_tol=tol, abs_tol=_TINY,
                            max_subdivisions=max_subdivisions)
    except ConvergenceError as exc:
        raise ConvergenceError(
            f"moment oracle n={n}: {exc}",
            exc.estimate * math.exp(scale),
            exc.error * math.exp(scale),
        ) from exc
    return math.exp(math.log(res.value) + scale)


def moment_result(packet, n, tol=1e-10):
    closed = moment_closed_form(packet, n)
    oracle = moment_oracle(packet, n, tol=tol)
    return MomentResult(n, closed, oracle, abs(closed - oracle) / max(abs(oracle), _TINY))


def moment_table(packet, n_max, tol=1e-10):
    """:class:`MomentResult` rows for ``n = 0..n_max``."""
    return [moment_result(packet, n, tol) for n in range(n_max + 1)]
