"""Exact integer linear algebra and first homology.

Homology is read off the dual spine of the triangulation: one generator
per face class, one relator per edge class (the cyclic word of faces
crossed while encircling the edge, with signs from the crossing
direction), and generators on a spanning tree of the dual graph killed.
Abelianising and reducing the exponent matrix to Smith normal form gives
H1 of the underlying non-compact manifold.

All arithmetic is over Python integers, so unimodularity of the
transformation matrices can be verified exactly.
"""

from dataclasses import dataclass

from .triangulation import face_classes, skeleton, edge_walk, validate


class IntMatrix:
    """A dense matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", len(data[0]) if data else 0)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return "IntMatrix(%r)" % (list(map(list, self.data)),)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return IntMatrix(
            [[sum(self.data[i][k] * other.data[k][j]
                  for k in range(self.cols))
              for j in range(other.cols)]
             for i in range(self.rows)])

    def diagonal(self):
        return tuple(self.data[i][i] for i in range(min(self.rows, self.cols)))

    def determinant(self):
        """Exact determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [list(row) for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def smith_normal_form(a):
    """Smith normal form with transforms: returns (S, U, V) with
    U @ a @ V == S, U and V unimodular, and S diagonal with each
    diagonal entry dividing the next.

    Pivots are chosen with minimal absolute value to limit coefficient
    growth; entries not divisible by the pivot are folded into its row
    until the pivot divides everything that remains.
    """
    if not isinstance(a, IntMatrix):
        a = IntMatrix(a)
    rows, cols = a.rows, a.cols
    s = [list(row) for row in a.data]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def row_op(i, j, k):  # row i += k * row j
        for c in range(cols):
            s[i][c] += k * s[j][c]
        for c in range(rows):
            u[i][c] += k * u[j][c]

    def col_op(i, j, k):  # col i += k * col j
        for r in range(rows):
            s[r][i] += k * s[r][j]
        for r in range(cols):
            v[r][i] += k * v[r][j]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(rows):
            s[r][i], s[r][j] = s[r][j], s[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    k = 0
    while k < min(rows, cols):
        # Minimal-absolute-value nonzero pivot in the remaining block.
        pivot = None
        for i in range(k, rows):
            for j in range(k, cols):
                if s[i][j] != 0 and (pivot is None
                                     or abs(s[i][j]) < abs(s[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(k, pivot[0])
        swap_cols(k, pivot[1])

        dirty = False
        for i in range(k + 1, rows):
            if s[i][k] != 0:
                row_op(i, k, -(s[i][k] // s[k][k]))
                dirty = dirty or s[i][k] != 0
        for j in range(k + 1, cols):
            if s[k][j] != 0:
                col_op(j, k, -(s[k][j] // s[k][k]))
                dirty = dirty or s[k][j] != 0
        if dirty:
            continue  # remainders became new, smaller pivot candidates

        # Pivot must divide the rest of the block for the divisor chain.
        offender = None
        for i in range(k + 1, rows):
            for j in range(k + 1, cols):
                if s[i][j] % s[k][k] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(k, offender, 1)
            continue

        if s[k][k] < 0:
            negate_row(k)
        k += 1

    return IntMatrix(s), IntMatrix(u), IntMatrix(v)


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group in invariant-factor form:
    Z^rank plus cyclic factors Z_d1 + ... + Z_dk with d1 | d2 | ... | dk,
    every di >= 2."""

    rank: int
    torsion: tuple

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion %r is not a divisor chain"
                                 % (self.torsion,))
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append("Z^%d" % self.rank)
        parts.extend("Z_%d" % d for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SpinePresentation:
    """Fundamental-group presentation from the dual spine: one generator
    per face class, with the spanning-tree generators marked trivial and
    one relator per edge class."""

    generators: int
    tree: tuple      # generator indices killed by the spanning tree
    relators: tuple  # each a tuple of (generator index, +1 or -1)


def _require_census_valid(tri):
    report = validate(tri)
    if not report.census_valid:
        raise ValueError("not a census-valid triangulation: %s"
                         % "; ".join(report.messages))


def spine_presentation(tri):
    """Presentation of the fundamental group of the underlying manifold.

    The relator for an edge class records, in order, the faces crossed by
    a loop encircling the edge; a crossing counts +1 when it passes from
    the lexicographically lesser side of the face class to the greater,
    -1 the other way."""
    _require_census_valid(tri)
    faces = face_classes(tri)
    side_index = {}
    for i, (side0, side1) in enumerate(faces):
        side_index[side0] = (i, 1)
        side_index[side1] = (i, -1)

    # Spanning tree of the dual graph (tetrahedra joined by face classes).
    tree = []
    seen = {0}
    frontier = [0]
    while frontier:
        t = frontier.pop(0)
        for f in range(4):
            g = tri.gluing(t, f)
            if g.tet not in seen:
                seen.add(g.tet)
                frontier.append(g.tet)
                tree.append(side_index[min((t, f), (g.tet, g.perm(f)))][0])
    tree.sort()

    relators = []
    for e in skeleton(tri).edges:
        word = []
        for (t, pi) in edge_walk(tri, e.representative()):
            idx, sign = side_index[(t, pi(2))]
            word.append((idx, sign))
        relators.append(tuple(word))

    return SpinePresentation(generators=len(faces), tree=tuple(tree),
                             relators=tuple(relators))


def first_homology(tri):
    """H1 of the underlying manifold: abelianise the spine presentation
    and reduce the exponent matrix to Smith normal form."""
    pres = spine_presentation(tri)
    live = [i for i in range(pres.generators) if i not in set(pres.tree)]
    col_of = {gen: j for j, gen in enumerate(live)}
    matrix = [[0] * len(live) for _ in pres.relators]
    for r, word in enumerate(pres.relators):
        for gen, sign in word:
            if gen in col_of:
                matrix[r][col_of[gen]] += sign
    s, _u, _v = smith_normal_form(IntMatrix(matrix))
    diag = [d for d in s.diagonal() if d != 0]
    return AbelianGroup(rank=len(live) - len(diag),
                        torsion=tuple(d for d in diag if d > 1))
