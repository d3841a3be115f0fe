"""
The moment series for <s> and where it stops making sense
=========================================================

Expanding sqrt(1 - p^2/m^2) and averaging term by term gives a series in
x = 1/(m sigma)^2 that diverges for every x > 0.  Truncating at the
smallest term still recovers the classical interval when x is tiny.
"""

import numpy as np

from qdistance import ratio_diagnostic, s_classical_limit, s_series_terms

np.set_printoptions(precision=3, linewidth=100)

beta = 0.1
for x in (1e-8, 1e-4, 0.1, 1.0, 10.0):
    r = s_series_terms(x, beta)
    print(f"x={x:<6g} min term at n={r.min_term_index:2d} |term|={abs(r.min_term_value):.2e} "
          f"sum={r.truncated_sum:.10f} diverges={r.diverges}")

print(f"\nclassical value t sqrt(1 - beta^2) = {s_classical_limit(beta, 1.0):.10f}")

# successive-term ratios: below 1 in the classical regime, growing
# roughly like x*n once the series turns around
print("\nratios at x=1e-8:", ratio_diagnostic(s_series_terms(1e-8, beta))[:8])
print("ratios at x=1:   ", ratio_diagnostic(s_series_terms(1.0, beta))[:8])
