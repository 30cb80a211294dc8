"""Angle structures on an ideal triangulation.

Each tetrahedron carries three dihedral angles, one per pair of opposite
edges (slot 0: edges 01|23, slot 1: 02|13, slot 2: 03|12).  An angle
structure assigns positive angles summing to pi in every tetrahedron and
to 2*pi around every edge class.  The equality constraints form an exact
integer matrix in units of pi.
"""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .triangulation import skeleton

# Slot of the opposite-edge pair containing edge (a, b), a < b.
_SLOT = {(0, 1): 0, (2, 3): 0, (0, 2): 1, (1, 3): 1, (0, 3): 2, (1, 2): 2}


def angle_slot(a, b):
    """Angle slot (0, 1 or 2) of the tetrahedron edge between vertices
    a and b."""
    return _SLOT[(a, b) if a < b else (b, a)]


@dataclass(frozen=True)
class AnglePoint:
    """Dihedral angles in radians, one row of (a, b, c) per tetrahedron."""

    angles: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.angles, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 3:
            raise ValueError("angles must have shape (tets, 3)")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "angles", arr)

    @property
    def flat(self):
        return self.angles.reshape(-1)

    def min_angle(self):
        return float(self.angles.min())


@dataclass(frozen=True)
class AngleSystem:
    """The equality system of an angle structure, in units of pi.

    matrix has one row per tetrahedron (angle sum 1) followed by one row
    per edge class (angle sum 2), over 3n angle variables; rhs holds the
    corresponding 1s and 2s.  The positivity domain is the open box
    0 < angle < pi in each variable."""

    tets: int
    matrix: np.ndarray   # integer entries, shape (tets + edges, 3 * tets)
    rhs: np.ndarray      # integer entries, units of pi

    @property
    def variables(self):
        return 3 * self.tets

    @property
    def edge_rows(self):
        return self.matrix.shape[0] - self.tets

    def residual(self, point):
        """Largest violation of the equalities at an AnglePoint, radians."""
        lhs = self.matrix.astype(float) @ point.flat
        return float(np.abs(lhs - np.pi * self.rhs.astype(float)).max())


def angle_equations(tri):
    """The angle-structure equality system of a closed triangulation.

    The equations only need well-defined edge classes, so any closed,
    involutive table with valid edges is accepted; the stronger
    census-validity requirement lives in max_volume, whose results are
    only meaningful there."""
    if not tri.is_closed():
        raise ValueError("angle equations need a closed triangulation")
    sk = skeleton(tri)
    if any(not e.valid for e in sk.edges):
        raise ValueError("angle equations need valid edge classes")
    n = tri.size
    rows = []
    rhs = []
    for t in range(n):
        row = [0] * (3 * n)
        for s in range(3):
            row[3 * t + s] = 1
        rows.append(row)
        rhs.append(1)
    for e in sk.edges:
        row = [0] * (3 * n)
        for (t, (a, b), _sign) in e.members:
            row[3 * t + angle_slot(a, b)] += 1
        rows.append(row)
        rhs.append(2)
    return AngleSystem(tets=n,
                       matrix=np.array(rows, dtype=np.int64),
                       rhs=np.array(rhs, dtype=np.int64))


def coordinate_bounds(system):
    """Per-variable (min, max) over the closed polytope (equalities plus
    0 <= angle <= pi), in units of pi.  Returns None when the polytope is
    empty.  Variables with equal bounds are pinned by the constraints;
    a polytope can be nonempty yet have empty interior (the pinned
    variables of a flat tetrahedron sit at 0 and pi)."""
    a = system.matrix.astype(float)
    m = system.variables
    b_eq = system.rhs.astype(float)
    box = [(0.0, 1.0)] * m
    lo = np.empty(m)
    hi = np.empty(m)
    for i in range(m):
        c = np.zeros(m)
        c[i] = 1.0
        res = linprog(c, A_eq=a, b_eq=b_eq, bounds=box, method="highs")
        if not res.success:
            return None
        lo[i] = res.x[i]
        res = linprog(-c, A_eq=a, b_eq=b_eq, bounds=box, method="highs")
        hi[i] = res.x[i]
    return lo, hi


def _maxmin_interior(a, b, margin):
    """Maximise the minimum coordinate subject to a x = b, 0 <= x <= 1
    (all in units of pi).  Returns the optimum polished onto the
    equality manifold, or None if its minimum coordinate is below
    `margin` (also in units of pi)."""
    m = a.shape[1]
    c = np.zeros(m + 1)
    c[m] = -1.0
    a_eq = np.hstack([a, np.zeros((a.shape[0], 1))])
    a_ub = np.hstack([-np.eye(m), np.ones((m, 1))])
    b_ub = np.zeros(m)
    bounds = [(0.0, 1.0)] * m + [(None, 0.5)]
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=b,
                  bounds=bounds, method="highs")
    if not res.success:
        return None
    x = res.x[:m]
    # Polish: exact projection onto the affine equality set.
    x = x - np.linalg.pinv(a) @ (a @ x - b)
    if x.min() < margin:
        return None
    return x


def feasible_point(system, margin=1e-6):
    """An interior point of the angle polytope, or None.

    Maximises the minimum angle subject to the equalities (a linear
    program); the returned point is polished onto the equality manifold
    and satisfies them to 1e-12, with every angle at least `margin`
    radians.  Returns None when no interior point exists."""
    x = _maxmin_interior(system.matrix.astype(float),
                         system.rhs.astype(float), margin / np.pi)
    if x is None:
        return None
    return AnglePoint(angles=(x * np.pi).reshape(system.tets, 3))
