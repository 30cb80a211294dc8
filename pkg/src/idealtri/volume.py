"""Hyperbolic volume via angle-structure maximisation.

The volume of an angle structure is the sum of Lob(a) + Lob(b) + Lob(c)
over the tetrahedra, where Lob is the Lobachevsky function.  The
functional is strictly concave on the equality manifold, so its maximum
over the angle polytope is found by projected gradient ascent from the
max-min-angle interior point.  An interior maximiser realises the
complete hyperbolic structure and the maximum is the hyperbolic volume;
a maximiser pushed to the polytope boundary (some angle tending to 0, a
flat tetrahedron) is reported as such rather than claimed converged.

Non-orientable triangulations are handled through the orientation double
cover: the reported volume is half the cover's maximum, and a direct
maximisation of the non-orientable input is run as a cross-check.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .angles import (AnglePoint, angle_equations, coordinate_bounds,
                     feasible_point, _maxmin_interior)
from .builders import double_cover
from .triangulation import is_orientable, validate

INTERIOR_MAX = "interior-max"
BOUNDARY_MAX = "boundary-max"
INFEASIBLE = "infeasible"
NOT_CONVERGED = "not-converged"

# An accepted maximiser counts as interior only if every angle clears
# this threshold; below it the optimum is treated as a boundary point
# (a flat tetrahedron in the making).
INTERIOR_ANGLE_MIN = 1e-3


def lobachevsky(theta, mode=None):
    """The Lobachevsky function, accurate to 1e-10 over the reals.

    Accepts a scalar or an array; pi-periodicity and oddness reduce the
    argument to [0, pi/2] before the series evaluation."""
    lob, _ = _kernels.get_kernels(mode)
    arr = np.asarray(theta, dtype=float)
    out = lob(np.ascontiguousarray(arr.reshape(-1)), _kernels.SERIES_COEFFS)
    if arr.ndim == 0:
        return float(out[0])
    return out.reshape(arr.shape)


@dataclass(frozen=True)
class VolumeResult:
    """Outcome of a volume maximisation.

    residuals carries the convergence diagnostics: equality residual,
    projected-gradient norm, minimum angle, last volume increase, and
    (for non-orientable input) the double-cover and direct figures."""

    volume: float
    point: AnglePoint
    status: str
    iterations: int
    residuals: dict


def _badness(status):
    return (INTERIOR_MAX, BOUNDARY_MAX, NOT_CONVERGED, INFEASIBLE).index(status)


def _infeasible():
    return VolumeResult(volume=float("nan"), point=None, status=INFEASIBLE,
                        iterations=0, residuals={"equality": float("nan")})


def _start_on_face(system, margin):
    """A starting point for the ascent: an interior point when one
    exists, otherwise a relative-interior point of the face carved out by
    the variables the equalities pin to the boundary (the slots of flat
    tetrahedra sit at 0 and pi).

    Returns (x0 in radians, free index array) or None if even that face
    is empty."""
    point = feasible_point(system, margin)
    if point is not None:
        return np.ascontiguousarray(point.flat), np.arange(system.variables)

    bounds = coordinate_bounds(system)
    if bounds is None:
        return None
    lo, hi = bounds
    pinned = hi - lo <= 1e-9
    if not pinned.any():
        return None  # interior thinner than the margin; treat as empty
    vals = (lo + hi) / 2.0
    vals[np.abs(vals) <= 1e-9] = 0.0
    vals[np.abs(vals - 1.0) <= 1e-9] = 1.0
    free = np.where(~pinned)[0]
    x = vals.copy()
    if free.size:
        a = system.matrix.astype(float)
        b = system.rhs.astype(float) - a[:, pinned] @ vals[pinned]
        x_free = _maxmin_interior(a[:, free], b, margin / np.pi)
        if x_free is None:
            return None
        x[free] = x_free
    return np.ascontiguousarray(x * np.pi), free


def _maximise(tri, grad_tol, vol_tol, max_iter, mode):
    system = angle_equations(tri)
    start = _start_on_face(system, margin=1e-6)
    if start is None:
        return _infeasible()
    x0, free = start

    lob, ascend = _kernels.get_kernels(mode)
    x = x0.copy()
    iters, pg_norm, dvol, stop = 0, 0.0, 0.0, 0
    history = np.empty(0)
    if free.size:
        # Equality system restricted to the unpinned variables; pinned
        # variables are constants and never move (Lob is 0 at their
        # values 0 and pi, finite elsewhere, but its derivative diverges
        # there, so they must stay out of the gradient).
        a = np.ascontiguousarray(system.matrix[:, free], dtype=float)
        b = np.ascontiguousarray(
            system.rhs * np.pi - system.matrix.astype(float) @ x0
            + a @ x0[free])
        corr = np.ascontiguousarray(np.linalg.pinv(a))
        proj = np.ascontiguousarray(np.eye(a.shape[1]) - corr @ a)
        vol0 = float(np.sum(lob(np.ascontiguousarray(x0[free]),
                                _kernels.SERIES_COEFFS)))
        x_free, iters, pg_norm, dvol, stop, history = ascend(
            np.ascontiguousarray(x0[free]), vol0, proj, corr, a, b,
            _kernels.SERIES_COEFFS, grad_tol, vol_tol, max_iter)
        x[free] = x_free

    volume = float(np.sum(lob(np.ascontiguousarray(x),
                               _kernels.SERIES_COEFFS)))
    point = AnglePoint(angles=x.reshape(system.tets, 3))
    min_angle = point.min_angle()
    restricted = free.size < system.variables
    if stop == 2:
        status = NOT_CONVERGED
    elif min_angle >= INTERIOR_ANGLE_MIN and not restricted:
        status = INTERIOR_MAX
    else:
        status = BOUNDARY_MAX
    near_zero = [(t, s) for t in range(system.tets) for s in range(3)
                 if point.angles[t, s] < INTERIOR_ANGLE_MIN]
    residuals = {
        "equality": system.residual(point),
        "projected_gradient": float(pg_norm),
        "min_angle": min_angle,
        "last_volume_increase": float(dvol),
        "near_zero_angles": near_zero,
        # History is exposed for the monotonicity property tests.
        "history": history,
    }
    return VolumeResult(volume=volume, point=point, status=status,
                        iterations=int(iters), residuals=residuals)


def max_volume(tri, grad_tol=1e-9, vol_tol=1e-12, max_iter=100000,
               mode=None):
    """Maximal volume of an angle structure on a census-valid
    triangulation.

    For orientable input this is a single ascent.  For non-orientable
    input the reported figure is half the maximum on the orientation
    double cover, cross-checked against a direct maximisation of the
    input itself (whose angle point is the one returned); the two runs'
    figures and the gap between them appear in the residuals.
    """
    report = validate(tri)
    if not report.census_valid:
        raise ValueError("max_volume needs a census-valid triangulation: %s"
                         % "; ".join(report.messages))
    if is_orientable(tri):
        return _maximise(tri, grad_tol, vol_tol, max_iter, mode)

    cover = _maximise(double_cover(tri), grad_tol, vol_tol, max_iter, mode)
    direct = _maximise(tri, grad_tol, vol_tol, max_iter, mode)
    if cover.status == INFEASIBLE or direct.status == INFEASIBLE:
        return VolumeResult(volume=float("nan"), point=None,
                            status=INFEASIBLE, iterations=0,
                            residuals={"equality": float("nan")})
    status = max(cover.status, direct.status, key=_badness)
    residuals = dict(direct.residuals)
    residuals["cover_volume"] = cover.volume
    residuals["direct_volume"] = direct.volume
    residuals["cover_gap"] = abs(cover.volume / 2.0 - direct.volume)
    return VolumeResult(volume=cover.volume / 2.0, point=direct.point,
                        status=status,
                        iterations=cover.iterations + direct.iterations,
                        residuals=residuals)
