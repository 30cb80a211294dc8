"""Numeric kernels for the volume functional.

The two hot loops -- batched Lobachevsky evaluation and the projected
gradient ascent -- are written as plain numpy functions and compiled with
numba's @njit when it is available.  Setting the environment variable
IDEALTRI_NO_NUMBA=1 forces the pure-numpy path; both paths are exposed
directly so they can be benchmarked and cross-checked against each other
(see benchmarks/bench_volume.py).

The Lobachevsky function is evaluated by reducing the argument to
[0, pi/2] via pi-periodicity and oddness and summing the classical zeta
series Lob(r) = r*(1 - log(2r) + sum_k c_k r^(2k)) with
c_k = zeta(2k) / (k*(2k+1)*pi^(2k)); forty terms leave the truncation
error far below double precision on the reduced range.  The ascent loop
carries its own copy of the series so that each compiled kernel is
self-contained.
"""

import os

import numpy as np
from scipy.special import zeta

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None
    HAVE_NUMBA = False

_TERMS = 40
SERIES_COEFFS = np.array(
    [zeta(2 * k) / (k * (2 * k + 1) * np.pi ** (2 * k))
     for k in range(1, _TERMS + 1)])

# Smallest angle the ascent will produce; keeps log() finite while being
# utterly negligible against every tolerance in use.
ANGLE_FLOOR = 1e-280


def _lob_batch_impl(thetas, coeffs):
    """Lobachevsky function on a 1-D array of angles."""
    m = thetas % np.pi
    r0 = np.where(m > 0.5 * np.pi, np.pi - m, m)
    sign = np.where(m > 0.5 * np.pi, -1.0, 1.0)
    r = np.maximum(r0, ANGLE_FLOOR)
    q = r * r
    poly = np.zeros_like(r)
    for k in range(len(coeffs) - 1, -1, -1):
        poly = poly * q + coeffs[k]
    val = sign * r * (1.0 - np.log(2.0 * r) + q * poly)
    return np.where(r0 < ANGLE_FLOOR, 0.0, val)


def _ascend_impl(x0, vol0, proj, corr, a_mat, b_vec, coeffs,
                 grad_tol, vol_tol, max_iter):
    """Maximise the total Lobachevsky volume over the angle polytope.

    x0 must satisfy the equalities with all angles interior and vol0 must
    be its volume; proj is the orthogonal projector onto the null space
    of the equality matrix and corr its pseudo-inverse (used to
    re-project drift).  Steps follow the projected gradient with a
    Barzilai-Borwein trial length, backtracking until the Armijo increase
    condition holds, and are capped so no angle leaves (0, pi).  Accepted
    volumes are therefore non-decreasing.

    Returns (x, iterations, projected-gradient norm, last volume
    increase, stop code, volume history); stop code 0 means the projected
    gradient dropped below grad_tol, 1 that the volume increase dropped
    below vol_tol (or no acceptable step existed), 2 the iteration cap.
    """
    x = x0.copy()
    vol = vol0
    history = np.empty(max_iter)
    alpha_bb = 1.0
    pg_norm = np.inf
    dvol = np.inf
    stop = 2
    iters = 0
    while iters < max_iter:
        g = -np.log(2.0 * np.sin(x))
        d = np.dot(proj, g)
        pg2 = np.dot(d, d)
        pg_norm = np.sqrt(pg2)
        if pg_norm < grad_tol:
            stop = 0
            break

        # Fraction-to-boundary cap: angles stay strictly inside (0, pi).
        alpha_max = 1e300
        for i in range(x.shape[0]):
            if d[i] < 0.0:
                cap = 0.9 * x[i] / (-d[i])
            elif d[i] > 0.0:
                cap = 0.9 * (np.pi - x[i]) / d[i]
            else:
                continue
            if cap < alpha_max:
                alpha_max = cap

        alpha = alpha_bb if alpha_bb < alpha_max else alpha_max
        accepted = False
        xt = x
        vt = vol
        for _bt in range(60):
            xt = np.maximum(x + alpha * d, ANGLE_FLOOR)
            m = xt % np.pi
            r = np.where(m > 0.5 * np.pi, np.pi - m, m)
            sgn = np.where(m > 0.5 * np.pi, -1.0, 1.0)
            r = np.maximum(r, ANGLE_FLOOR)
            q = r * r
            poly = np.zeros_like(r)
            for k in range(len(coeffs) - 1, -1, -1):
                poly = poly * q + coeffs[k]
            vt = np.sum(sgn * r * (1.0 - np.log(2.0 * r) + q * poly))
            if vt >= vol + 1e-4 * alpha * pg2:
                accepted = True
                break
            alpha *= 0.5
        if not accepted:
            dvol = 0.0
            stop = 1
            break

        gt = -np.log(2.0 * np.sin(xt))
        den = -np.dot(xt - x, gt - g)
        if den > 1e-300:
            alpha_bb = np.dot(xt - x, xt - x) / den
            if alpha_bb < 1e-12:
                alpha_bb = 1e-12
            elif alpha_bb > 1e12:
                alpha_bb = 1e12
        else:
            alpha_bb = 1.0

        dvol = vt - vol
        x = xt
        vol = vt
        history[iters] = vol
        iters += 1
        if dvol < vol_tol:
            stop = 1
            break
        if iters % 512 == 0:
            # Re-project accumulated drift off the equality manifold.
            # The cached `vol` is kept: the displacement is at rounding
            # scale and recomputing would let the history dip by ~1e-15.
            x = x - np.dot(corr, np.dot(a_mat, x) - b_vec)

    x = x - np.dot(corr, np.dot(a_mat, x) - b_vec)
    return x, iters, pg_norm, dvol, stop, history[:iters]


_MODES = {"numpy": (_lob_batch_impl, _ascend_impl)}

if HAVE_NUMBA:
    _MODES["numba"] = (njit(cache=True)(_lob_batch_impl),
                       njit(cache=True)(_ascend_impl))


def available_modes():
    return tuple(sorted(_MODES))


def active_mode():
    """Kernel mode selected by availability and the IDEALTRI_NO_NUMBA
    environment flag."""
    if os.environ.get("IDEALTRI_NO_NUMBA", "") not in ("", "0"):
        return "numpy"
    return "numba" if HAVE_NUMBA else "numpy"


def get_kernels(mode=None):
    """(lob_batch, ascend) kernel pair for the requested mode."""
    if mode is None:
        mode = active_mode()
    if mode not in _MODES:
        raise ValueError("kernel mode %r not available (have %s)"
                         % (mode, ", ".join(available_modes())))
    return _MODES[mode]
