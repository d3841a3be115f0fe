"""
Interval eigenvalues of plane waves in a box
============================================

A momentum eigenstate has a sharp interval t sqrt(1 - p^2/m^2).  Box
modes p_n = n pi / L give a discrete, unevenly spaced set of values;
modes with p_n >= m are flagged rather than continued.
"""

from qdistance import box_spectrum, planewave_eigenvalue

print("p = 0.6 m:", planewave_eigenvalue(0.6, 1.0, 1.0))

entries = box_spectrum(L=3.14159265, mass=10.0, t=1.0, n_max=12)
previous = None
for e in entries:
    if not e.evaluable:
        print(f"n={e.n:2d}  p={e.p_n:.4f}  not evaluable")
        continue
    gap = "" if previous is None else f"  gap {previous - e.s_eigenvalue:.4f}"
    print(f"n={e.n:2d}  p={e.p_n:.4f}  s={e.s_eigenvalue:.6f}{gap}")
    previous = e.s_eigenvalue
