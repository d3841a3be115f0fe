"""Scalar special functions at half-integer orders.

Everything here is a pure function of its arguments and works in 64-bit
floats.  The ``log_*`` companions return ``(log|value|, sign)`` pairs so that
callers can combine very large and very small factors before
exponentiating.
"""

import math

SQRT_PI = math.sqrt(math.pi)
LOG_SQRT_PI = 0.5 * math.log(math.pi)

# Gamma(-n - 1/2) stays a normal double up to n = 170; Gamma(n - 1/2)
# overflows from n = 172 on.
MAX_NEG_HALF_INDEX = 170
MAX_POS_HALF_INDEX = 171

_RESCALE = 1e150
_LOG_DBL_MAX = 709.782712893384


def _check_index(n, upper, name):
    if isinstance(n, bool) or int(n) != n:
        raise TypeError(f"{name} index must be an integer, got {n!r}")
    n = int(n)
    if n < 0:
        raise ValueError(f"{name} index must be non-negative, got {n}")
    if upper is not None and n > upper:
        raise ValueError(f"{name} index {n} exceeds the supported range 0..{upper}")
    return n


def gamma_neg_half(n):
    """Gamma(-n - 1/2) for integer ``n`` in ``0..170``.

    Uses the downward recurrence Gamma(z) = Gamma(z + 1) / z from
    Gamma(-1/2) = -2 sqrt(pi).  The result equals
    ``(-4)**m * m! * sqrt(pi) / (2m)!`` with ``m = n + 1``.

    Raises
    ------
    ValueError
        If ``n`` is negative or larger than 170.
    """
    n = _check_index(n, MAX_NEG_HALF_INDEX, "gamma_neg_half")
    value = -2.0 * SQRT_PI
    for k in range(1, n + 1):
        value /= -k - 0.5
    return value


def gamma_pos_half(n):
    """Gamma(n - 1/2) for integer ``n`` in ``0..171``."""
    n = _check_index(n, MAX_POS_HALF_INDEX, "gamma_pos_half")
    if n == 0:
        return -2.0 * SQRT_PI
    value = SQRT_PI
    for k in range(2, n + 1):
        value *= k - 1.5
    return value


def log_abs_gamma_neg_half(n):
    """log|Gamma(-n - 1/2)| for any non-negative integer ``n``.

    The reflection formula gives |Gamma(-n - 1/2)| = pi / Gamma(n + 3/2).
    The sign is ``(-1)**(n + 1)``.
    """
    n = _check_index(n, None, "log_abs_gamma_neg_half")
    return math.log(math.pi) - math.lgamma(n + 1.5)


def log_gamma_pos_half(n):
    """Return ``(log|Gamma(n - 1/2)|, sign)`` for any non-negative ``n``."""
    n = _check_index(n, None, "log_gamma_pos_half")
    if n == 0:
        return math.log(2.0) + LOG_SQRT_PI, -1.0
    return math.lgamma(n - 0.5), 1.0


def binom_half(n):
    """Generalized binomial coefficient (1/2 choose n)."""
    n = _check_index(n, None, "binom_half")
    c = 1.0
    for k in range(1, n + 1):
        c *= (1.5 - k) / k
    return c


def laguerre_half(n, z):
    """Generalized Laguerre polynomial L_n^{1/2}(z) by three-term recurrence.

    (k + 1) L_{k+1} = (2k + 3/2 - z) L_k - (k + 1/2) L_{k-1},
    with L_0 = 1 and L_1 = 3/2 - z.  The recurrence is forward stable for
    z <= 0, which is the only regime the moment and series code uses.
    """
    n = _check_index(n, None, "laguerre_half")
    z = float(z)
    prev, cur = 1.0, 1.5 - z
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1.5 - z) * cur - (k + 0.5) * prev) / (k + 1)
    if not math.isfinite(cur):
        log_abs, sign = log_laguerre_half(n, z)
        return sign * (math.inf if log_abs > _LOG_DBL_MAX else math.exp(log_abs))
    return cur


def log_laguerre_half(n, z):
    """Return ``(log|L_n^{1/2}(z)|, sign)`` without overflow.

    Same recurrence as :func:`laguerre_half`; both carried values are
    rescaled together whenever they grow large, and the scale is
    accumulated in log form.  Needed for arguments like z = -1e8 where
    L_n itself overflows long before n = 80.
    """
    n = _check_index(n, None, "log_laguerre_half")
    z = float(z)
    log_scale = 0.0
    prev, cur = 1.0, 1.5 - z
    if n == 0:
        return 0.0, 1.0
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1.5 - z) * cur - (k + 0.5) * prev) / (k + 1)
        big = abs(cur)
        if big > _RESCALE:
            prev /= big
            cur /= big
            log_scale += math.log(big)
    if cur == 0.0:
        return -math.inf, 0.0
    return log_scale + math.log(abs(cur)), math.copysign(1.0, cur)
