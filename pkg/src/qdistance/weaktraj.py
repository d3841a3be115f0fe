"""Interval estimate from a uniformly sampled weak trajectory.

A trajectory is a list of (real parts of) weak position values taken at
times ``t0 + k*dt``.  Velocities come from backward differences and each
step contributes ``dt * Re sqrt(1 - |v_k|^2)``.

Trajectory files are plain text, one sample per line as ``t x y z``;
blank lines and ``#`` comments are ignored.
"""

import math
from dataclasses import dataclass

import numpy as np

UNIFORM_SPACING_RTOL = 1e-9


@dataclass(frozen=True)
class WeakTrajectory:
    t0: float
    dt: float
    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 3:
            raise ValueError(f"points must have shape (N, 3), got {pts.shape}")
        if pts.shape[0] < 2:
            raise ValueError("a trajectory needs at least 2 points")
        if not self.dt > 0:
            raise ValueError(f"dt must be > 0, got {self.dt}")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return self.points.shape[0]

    @property
    def times(self):
        return self.t0 + self.dt * np.arange(len(self))

    @property
    def duration(self):
        return (len(self) - 1) * self.dt

    def reversed(self):
        """Same samples in reverse order, on the same time grid."""
        return WeakTrajectory(self.t0, self.dt, self.points[::-1])


def finite_diff_velocity(traj, k):
    """Backward-difference velocity ``(r_k - r_{k-1}) / dt`` for ``1 <= k <= N-1``."""
    if isinstance(k, bool) or int(k) != k or not 1 <= k <= len(traj) - 1:
        raise IndexError(f"step index must be in 1..{len(traj) - 1}, got {k!r}")
    k = int(k)
    return (traj.points[k] - traj.points[k - 1]) / traj.dt


def step_velocities(traj):
    """All backward-difference velocities, shape ``(N-1, 3)``."""
    return np.diff(traj.points, axis=0) / traj.dt


def step_intervals(traj):
    """Per-step contributions ``dt * Re sqrt(1 - |v_k|^2)``."""
    v = step_velocities(traj)
    speed2 = np.einsum("ij,ij->i", v, v)
    return traj.dt * np.sqrt(np.clip(1.0 - speed2, 0.0, None))


def superluminal_steps(traj):
    """Number of steps whose finite-difference speed exceeds 1."""
    v = step_velocities(traj)
    return int(np.count_nonzero(np.einsum("ij,ij->i", v, v) > 1.0))


def weak_distance_estimate(traj):
    """Estimate of the interval <s> travelled along ``traj``.

    Steps faster than light contribute nothing (the real part of an
    imaginary root); count them with :func:`superluminal_steps`.
    """
    return math.fsum(step_intervals(traj))


def synthesize_linear_trajectory(v, t0, dt, N, noise_amplitude=0.0, seed=0):
    """Straight line ``r = v t`` sampled at ``t0 + k dt`` plus Gaussian noise.

    Noise is drawn per component with standard deviation
    ``noise_amplitude`` from ``numpy.random.default_rng(seed)``.
    """
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"v must be a 3-vector, got shape {v.shape}")
    if not np.dot(v, v) < 1.0:
        raise ValueError(f"|v| must be < 1, got {math.sqrt(np.dot(v, v))}")
    if not dt > 0:
        raise ValueError(f"dt must be > 0, got {dt}")
    if int(N) != N or N < 2:
        raise ValueError(f"N must be an integer >= 2, got {N!r}")
    if not noise_amplitude >= 0:
        raise ValueError(f"noise_amplitude must be >= 0, got {noise_amplitude}")
    times = t0 + dt * np.arange(int(N))
    points = times[:, None] * v[None, :]
    if noise_amplitude > 0:
        rng = np.random.default_rng(seed)
        points = points + rng.normal(0.0, noise_amplitude, size=points.shape)
    return WeakTrajectory(float(t0), float(dt), points)


def read_trajectory(path):
    """Parse a ``t x y z`` text file into a :class:`WeakTrajectory`.

    Raises ``ValueError`` unless times are strictly increasing and uniformly
    spaced to within ``UNIFORM_SPACING_RTOL``.
    """
    rows = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 4:
                raise ValueError(f"{path}:{lineno}: expected 4 columns 't x y z', got {len(fields)}")
            try:
                rows.append([float(f) for f in fields])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-numeric field in {line!r}") from None
    data = np.array(rows, dtype=float).reshape(-1, 4)
    if data.shape[0] < 2:
        raise ValueError(f"{path}: a trajectory needs at least 2 samples")
    t = data[:, 0]
    steps = np.diff(t)
    if np.any(steps <= 0):
        raise ValueError(f"{path}: times must be strictly increasing")
    dt = (t[-1] - t[0]) / (len(t) - 1)
    if np.max(np.abs(steps - dt)) > UNIFORM_SPACING_RTOL * dt:
        raise ValueError(f"{path}: times are not uniformly spaced")
    return WeakTrajectory(float(t[0]), float(dt), data[:, 1:])


def write_trajectory(path, traj):
    with open(path, "w") as fh:
        for t, (x, y, z) in zip(traj.times, traj.points):
            fh.write(f"{t:.17g} {x:.17g} {y:.17g} {z:.17g}\n")
