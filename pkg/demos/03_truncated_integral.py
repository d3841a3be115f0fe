"""
d<s>/dt from the truncated one-dimensional integral
===================================================

Summarizes the two d<s>/dt-versus-x curve families.  The full tables come
from ``qdistance figure1`` and ``qdistance figure2`` as CSV.
"""

import math

from qdistance import QuadratureSpec, ds_dt_quadrature, log_grid, sweep, truncation_study

xs = log_grid()

# one curve per beta, three standard deviations either side of rho0
rows = sweep(xs, [0.01, 0.1, 0.990, 0.999])
for beta in (0.01, 0.1, 0.990, 0.999):
    curve = [r.ds_dt for r in rows if r.beta == beta]
    print(f"beta={beta:<5}  x=1e-8: {curve[0]:.6f}  max: {max(curve):.6f}  "
          f"x=1e4: {curve[-1]:.2e}  sqrt(1-beta^2)={math.sqrt(1 - beta * beta):.6f}")

# the window drops a fraction 1 - erf(n/sqrt 2) of the Gaussian weight,
# which shows up directly at small x
study = truncation_study(xs, 0.1, [1, 2, 3, 4])
for n in (1.0, 2.0, 3.0):
    a = [r.ds_dt for r in study if r.n_sigma == n]
    b = [r.ds_dt for r in study if r.n_sigma == 4.0]
    print(f"n_sigma={n:g} vs 4: max relative gap {max(abs(u - v) / v for u, v in zip(a, b)):.2e}")

for n in (1, 2, 3, 4, 8):
    value = ds_dt_quadrature(1e-8, 0.1, QuadratureSpec(n_sigma=n))
    print(f"n_sigma={n}: {value:.9f}   sqrt(1-beta^2)*erf(n/sqrt 2) = "
          f"{math.sqrt(0.99) * math.erf(n / math.sqrt(2)):.9f}")
