"""
Interval along a weak trajectory
================================

Backward-difference velocities from sampled weak position values give a
discrete estimate of the interval.  On a straight line it is exact; noise
in the samples shortens it.
"""

import numpy as np

from qdistance import superluminal_steps, synthesize_linear_trajectory, weak_distance_estimate

line = synthesize_linear_trajectory((0.0, 0.0, -0.6), t0=0.0, dt=0.1, N=1001)
print(f"exact line: {weak_distance_estimate(line):.12f}  (expected {0.8 * line.duration:.12f})")
print(f"reversed:   {weak_distance_estimate(line.reversed()):.12f}")

# per-component noise sigma turns into velocity noise sqrt(2) sigma / dt
for noise in (1e-4, 1e-3, 1e-2, 3e-2):
    est = [weak_distance_estimate(synthesize_linear_trajectory((0, 0, -0.6), 0.0, 0.1, 1001, noise, s))
           for s in range(20)]
    traj = synthesize_linear_trajectory((0, 0, -0.6), 0.0, 0.1, 1001, noise, 0)
    print(f"noise {noise:.0e}: mean {np.mean(est):.4f}  sd {np.std(est):.4f}  "
          f"superluminal steps {superluminal_steps(traj)}")
