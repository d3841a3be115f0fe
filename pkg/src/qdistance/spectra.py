"""Interval eigenvalues of plane waves and box momentum modes."""

import math
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class BoxSpectrumEntry:
    n: int
    p_n: float
    s_eigenvalue: Optional[float]
    evaluable: bool


def planewave_eigenvalue(p, mass, t):
    """Interval ``t * sqrt(1 - (p/mass)**2)`` travelled by a plane wave.

    Raises
    ------
    ValueError
        For ``p >= mass``, where the square root is no longer real, and for
        negative ``p`` or ``t``.
    """
    if not mass > 0:
        raise ValueError(f"mass must be > 0, got {mass}")
    if not p >= 0:
        raise ValueError(f"momentum magnitude must be >= 0, got {p}")
    if not p < mass:
        raise ValueError(f"momentum {p} is not below the mass {mass}; eigenvalue is not real")
    if not t >= 0:
        raise ValueError(f"t must be >= 0, got {t}")
    u = p / mass
    return t * math.sqrt(1.0 - u * u)


def box_spectrum(L, mass, t, n_max):
    """Eigenvalues for box modes ``p_n = n*pi/L``, ``n = 1..n_max``.

    Modes with ``p_n >= mass`` are returned with ``evaluable=False`` and no
    eigenvalue rather than raising.
    """
    if not L > 0:
        raise ValueError(f"L must be > 0, got {L}")
    if not mass > 0:
        raise ValueError(f"mass must be > 0, got {mass}")
    if int(n_max) != n_max or n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max!r}")
    entries = []
    for n in range(1, int(n_max) + 1):
        p_n = n * math.pi / L
        if p_n < mass:
            entries.append(BoxSpectrumEntry(n, p_n, planewave_eigenvalue(p_n, mass, t), True))
        else:
            entries.append(BoxSpectrumEntry(n, p_n, None, False))
    return entries
