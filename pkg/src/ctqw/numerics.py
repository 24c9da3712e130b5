"""Dense numerical kernels.

Three primitives back everything else in the package:

* :func:`sym_eig` -- full eigendecomposition of a real symmetric matrix by
  cyclic Jacobi rotations (guaranteed orthonormal vectors at desk scale);
* :func:`orthonormalize_against` -- tolerance-aware Gram-Schmidt step used
  by the invariant-subspace construction;
* :func:`evolve_trapped` -- fixed-step RK4 integration of the lossy
  Schrodinger equation i d/dt psi = (L - i*kappa |w><w|) psi, accumulating
  the absorbed probability 2*kappa*|<w|psi>|^2 dt by the trapezoid rule.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass

import numpy as np

_JACOBI_SWEEP_LIMIT = 60
_JACOBI_OFF_TOL = 1e-12  # relative to ||A||_F


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues in ascending order; column k of ``vectors`` pairs with
    ``values[k]``."""

    values: np.ndarray
    vectors: np.ndarray


def sym_eig(a: np.ndarray, symmetry_tol: float = 1e-12) -> EigenSystem:
    """Full spectrum of a real symmetric matrix via cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops below
    1e-12 * ||A||_F. Raises ValueError if the input is not symmetric
    within `symmetry_tol` (relative to the largest entry).
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    scale = max(1.0, float(np.max(np.abs(a))) if a.size else 0.0)
    if float(np.max(np.abs(a - a.T))) > symmetry_tol * scale:
        raise ValueError("matrix is not symmetric")

    n = a.shape[0]
    m = (a + a.T) / 2.0
    v = np.eye(n)
    fro = float(np.linalg.norm(m))
    if n == 1 or fro == 0.0:
        return EigenSystem(values=np.diag(m).copy(), vectors=v)

    for _ in range(_JACOBI_SWEEP_LIMIT):
        hollow = m.copy()
        np.fill_diagonal(hollow, 0.0)
        if float(np.linalg.norm(hollow)) <= _JACOBI_OFF_TOL * fro:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if abs(apq) <= 1e-30 * fro:
                    continue
                theta = (m[q, q] - m[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (
                    abs(theta) + math.sqrt(theta * theta + 1.0)
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                mp, mq = m[:, p].copy(), m[:, q].copy()
                m[:, p] = c * mp - s * mq
                m[:, q] = s * mp + c * mq
                mp, mq = m[p, :].copy(), m[q, :].copy()
                m[p, :] = c * mp - s * mq
                m[q, :] = s * mp + c * mq
                m[p, q] = m[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise ArithmeticError("Jacobi iteration did not converge")

    values = np.diag(m).copy()
    order = np.argsort(values, kind="stable")
    return EigenSystem(values=values[order], vectors=v[:, order])


def orthonormalize_against(
    v: np.ndarray, basis: np.ndarray, tol: float = 1e-10
) -> np.ndarray | None:
    """Project `v` against an orthonormal row set and normalize the residual.

    Returns the unit residual, or None when `v` is linearly dependent on the
    basis: residual norm below tol * ||v||. Projection runs twice to keep
    orthogonality near machine precision.
    """
    v = np.asarray(v, dtype=float)
    basis = np.atleast_2d(np.asarray(basis, dtype=float))
    norm_in = float(np.linalg.norm(v))
    if norm_in == 0.0:
        return None
    r = v.copy()
    if basis.size:
        for _ in range(2):
            r = r - basis.T @ (basis @ r)
    norm_out = float(np.linalg.norm(r))
    if norm_out < tol * norm_in:
        return None
    return r / norm_out


@dataclass(frozen=True)
class TrappedEvolution:
    """Final state plus absorbed probability and sampled trajectory data.

    ``times``, ``norm_sq`` and ``absorbed_at`` hold samples taken along the
    integration (always including t = 0 and the final time), so callers can
    check norm monotonicity and the conservation identity
    absorbed(t) + ||psi(t)||^2 = 1 along the way.
    """

    psi: np.ndarray
    absorbed: float
    t_final: float
    times: np.ndarray
    norm_sq: np.ndarray
    absorbed_at: np.ndarray


def evolve_trapped(
    l: np.ndarray,
    w: int,
    kappa: float,
    psi0: np.ndarray,
    dt: float = 1e-3,
    t_max: float = 500.0,
    stop_tol: float | None = 1e-6,
    max_samples: int = 512,
) -> TrappedEvolution:
    """Integrate the trapped walk with classical fixed-step RK4.

    The right-hand side is -i (L - i*kappa |w><w|) psi. The absorbed
    probability accumulates 2*kappa*|<w|psi>|^2 dt by the trapezoid rule, so
    absorbed + ||psi||^2 stays within integration error of 1.

    When `stop_tol` is set, integration stops once the absorbed probability
    grew by less than `stop_tol` over the trailing 10% of elapsed time
    (checked at sample points, and only after any absorption has actually
    happened); this leaves kappa = 0 runs, and runs from states the trap
    never sees, to complete the full horizon.
    """
    l = np.asarray(l, dtype=float)
    n = l.shape[0]
    if l.ndim != 2 or l.shape[1] != n:
        raise ValueError("laplacian must be square")
    if not 0 <= w < n:
        raise ValueError(f"trap vertex {w} out of range")
    if kappa < 0:
        raise ValueError("kappa must be non-negative")
    if dt <= 0 or t_max <= 0:
        raise ValueError("dt and t_max must be positive")
    psi = np.asarray(psi0, dtype=complex).reshape(n).copy()
    if abs(np.linalg.norm(psi) - 1.0) > 1e-8:
        raise ValueError("initial state must be normalized")

    generator = -1j * l.astype(complex)
    generator[w, w] += -kappa  # -1j * (-1j*kappa) contribution of the trap

    nsteps = int(round(t_max / dt))
    stride = max(1, nsteps // max_samples)
    absorbed = 0.0
    f_prev = 2.0 * kappa * abs(psi[w]) ** 2
    times = [0.0]
    norm_sq = [float(np.linalg.norm(psi) ** 2)]
    absorbed_at = [0.0]
    t = 0.0

    for step in range(1, nsteps + 1):
        k1 = generator @ psi
        k2 = generator @ (psi + (0.5 * dt) * k1)
        k3 = generator @ (psi + (0.5 * dt) * k2)
        k4 = generator @ (psi + dt * k3)
        psi = psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        f = 2.0 * kappa * abs(psi[w]) ** 2
        absorbed += 0.5 * dt * (f_prev + f)
        f_prev = f
        t = step * dt
        if step % stride == 0 or step == nsteps:
            times.append(t)
            norm_sq.append(float(np.linalg.norm(psi) ** 2))
            absorbed_at.append(absorbed)
            if stop_tol is not None and absorbed > stop_tol:
                i = bisect_left(times, 0.9 * t)
                if i < len(absorbed_at) - 1 and absorbed - absorbed_at[i] < stop_tol:
                    break

    return TrappedEvolution(
        psi=psi,
        absorbed=absorbed,
        t_final=t,
        times=np.asarray(times),
        norm_sq=np.asarray(norm_sq),
        absorbed_at=np.asarray(absorbed_at),
    )
