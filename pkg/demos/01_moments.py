"""
Momentum moments of a moving Gaussian packet
============================================

The closed form for <p^{2n}> is a Laguerre polynomial times gamma
factors.  Here it is checked against direct radial quadrature.
"""

from qdistance import GaussianPacket, moment_table

packet = GaussianPacket(sigma=1.0, p0=0.5, mass=1.0)
print(f"x = {packet.x:.3g}, beta = {packet.beta:.3g}")

# n = 0 is the normalization, n = 1 is p0^2 + 3/(2 sigma^2)
for r in moment_table(packet, 10):
    print(f"n={r.n:2d}  closed={r.closed_form:.15e}  oracle={r.oracle:.15e}  rel={r.rel_discrepancy:.1e}")

# Large indices are evaluated in log space and still agree
wide = GaussianPacket(sigma=0.5, p0=0.99, mass=1.0)
last = moment_table(wide, 80)[-1]
print(f"\nn=80: {last.closed_form:.6e}  rel discrepancy {last.rel_discrepancy:.1e}")
