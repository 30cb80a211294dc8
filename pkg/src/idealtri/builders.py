"""Constructions of explicit census triangulations.

The central objects are the six-tetrahedron triangulations x101 and x103.
x101 is assembled from a five-tetrahedron cube (corner tetrahedra cut off
at A, C, F, H around a central tetrahedron BDEG), a sixth tetrahedron
layered onto the upper square to flip its boundary diagonal, and three
affine identifications of opposite squares.  x103 is x101 with the
octahedron around the layered diagonal edge retriangulated by a 4-4 move.

Cube vertices are labelled A..H: ABCD is the upper square, EFGH the lower
square with E below A, F below B, G below C, H below D.
"""

from dataclasses import dataclass, replace

from .perm4 import Perm4
from .triangulation import (Triangulation, Gluing, make_closed,
                            is_orientable)
from .moves import move_44

# Vertex letters of each tetrahedron of the five-tetrahedron cube; the
# position of a letter is its vertex label in that tetrahedron.
_CUBE_TETS = ("ABDE", "CBDG", "FBEG", "HDEG", "BDEG")

# Each square as its boundary cycle of cube vertices.
_CUBE_SQUARES = ("ABCD", "EFGH", "ABFE", "CDHG", "ADHE", "BCGF")


@dataclass(frozen=True)
class Square:
    """A labelled boundary square: two boundary triangles sharing the
    named diagonal.  `cycle` lists its corners in cyclic order."""

    cycle: str
    triangles: tuple  # two (tet, face) pairs
    diagonal: str     # two letters, sorted

    @property
    def corners(self):
        return frozenset(self.cycle)


@dataclass(frozen=True)
class SquareMap:
    """A corner correspondence between two boundary squares, written
    positionally: source[i] maps to target[i]."""

    source: str
    target: str

    def apply(self, letter):
        return self.target[self.source.index(letter)]


@dataclass(frozen=True)
class CubeComplex:
    """A triangulation under construction, with its boundary organised
    into labelled squares.  `tet_letters[t][v]` is the cube letter at
    vertex v of tetrahedron t; `flip_edge` is the interior edge created
    by the most recent layering, as a (tet, a, b) handle."""

    tri: Triangulation
    tet_letters: tuple
    squares: tuple
    flip_edge: tuple = None

    def square(self, letters):
        want = frozenset(letters)
        for s in self.squares:
            if s.corners == want:
                return s
        raise KeyError("no boundary square with corners %s"
                       % "".join(sorted(want)))


def _face_of(letters, want):
    """Face index of the tetrahedron with vertex letters `letters` whose
    letter set is `want`."""
    for f in range(4):
        if frozenset(letters) - {letters[f]} == frozenset(want):
            return f
    raise KeyError("no face %s in tetrahedron %s" % (want, letters))


def _letter_perm(src_letters, dst_letters, corr, src_face, dst_face):
    """Perm4 gluing the face `src_face` to `dst_face`, sending each face
    vertex to the vertex whose letter is corr(letter)."""
    images = [0] * 4
    images[src_face] = dst_face
    for v in range(4):
        if v != src_face:
            images[v] = dst_letters.index(corr(src_letters[v]))
    return Perm4(images)


def _glue_faces(table, letters, t1, set1, t2, set2, corr):
    f1 = _face_of(letters[t1], set1)
    f2 = _face_of(letters[t2], set2)
    p = _letter_perm(letters[t1], letters[t2], corr, f1, f2)
    table[t1][f1] = Gluing(t2, p)
    table[t2][f2] = Gluing(t1, p.inverse())


def five_tet_cube():
    """The standard five-tetrahedron cube: corner tetrahedra at A, C, F
    and H around the central tetrahedron BDEG, with all 12 boundary
    triangles unglued.  Square diagonals are BD, EG, BE, DG, DE, BG."""
    letters = list(_CUBE_TETS)
    table = [[None] * 4 for _ in range(5)]
    for t in range(4):
        inner = set(letters[t]) - {letters[t][0]}
        _glue_faces(table, letters, t, inner, 4, inner, lambda x: x)

    squares = []
    for cycle in _CUBE_SQUARES:
        tris = []
        for t in range(4):
            corners = set(cycle) & set(letters[t])
            if len(corners) == 3:
                tris.append((t, _face_of(letters[t], corners)))
        assert len(tris) == 2
        (t1, f1), (t2, f2) = tris
        shared = sorted((set(cycle) & set(letters[t1]))
                        & (set(cycle) & set(letters[t2])))
        squares.append(Square(cycle=cycle, triangles=tuple(tris),
                              diagonal="".join(shared)))

    return CubeComplex(tri=Triangulation(table), tet_letters=tuple(letters),
                       squares=tuple(squares))


def layer_on_square(complex_, square):
    """Attach a new tetrahedron across the two triangles of a boundary
    square, flipping the square's diagonal.  The old diagonal becomes an
    interior edge, returned as the flip_edge handle of the result."""
    sq = complex_.square(square)
    letters = list(complex_.tet_letters) + [sq.cycle]
    new = len(letters) - 1
    table = [list(faces) for faces in complex_.tri.tets] + [[None] * 4]

    diag = set(sq.diagonal)
    off = sorted(set(sq.cycle) - diag)
    for (t, f) in sq.triangles:
        tri_set = frozenset(letters[t][v] for v in range(4) if v != f)
        _glue_faces(table, letters, t, tri_set, new, tri_set, lambda x: x)

    new_tris = tuple((new, _face_of(letters[new], set(sq.cycle) - {x}))
                     for x in diag)
    new_sq = Square(cycle=sq.cycle, triangles=new_tris,
                    diagonal="".join(off))
    squares = tuple(new_sq if s is sq else s for s in complex_.squares)
    a, b = sorted(letters[new].index(x) for x in diag)
    return CubeComplex(tri=Triangulation(table), tet_letters=tuple(letters),
                       squares=squares, flip_edge=(new, a, b))


class DiagonalMismatch(ValueError):
    """A square identification does not send diagonal to diagonal."""


def identify_squares(complex_, square_map):
    """Glue two boundary squares by the given corner correspondence.

    The correspondence must respect the squares' cyclic structure and
    send the source diagonal to the target diagonal; the two triangle
    pairs are then glued by the induced affine maps."""
    src = complex_.square(square_map.source)
    dst = complex_.square(square_map.target)
    if src is dst:
        raise ValueError("cannot identify a square with itself")
    for word, sq in ((square_map.source, src), (square_map.target, dst)):
        edges = {frozenset((sq.cycle[i], sq.cycle[(i + 1) % 4]))
                 for i in range(4)}
        for i in range(4):
            if frozenset((word[i], word[(i + 1) % 4])) not in edges:
                raise ValueError("%s does not trace the square %s"
                                 % (word, sq.cycle))

    mapped = frozenset(square_map.apply(x) for x in src.diagonal)
    if mapped != frozenset(dst.diagonal):
        raise DiagonalMismatch(
            "map sends diagonal %s to %s, but the target diagonal is %s"
            % (src.diagonal, "".join(sorted(mapped)), dst.diagonal))

    letters = complex_.tet_letters
    table = [list(faces) for faces in complex_.tri.tets]
    for (t, f) in src.triangles:
        s1 = frozenset(letters[t][v] for v in range(4) if v != f)
        s2 = frozenset(square_map.apply(x) for x in s1)
        t2 = next(t_ for (t_, f_) in dst.triangles
                  if frozenset(letters[t_][v] for v in range(4) if v != f_) == s2)
        _glue_faces(table, letters, t, s1, t2, s2, square_map.apply)

    squares = tuple(s for s in complex_.squares if s not in (src, dst))
    return replace(complex_, tri=Triangulation(table), squares=squares)


# The three identification maps of opposite cube squares: upper to lower
# by a diagonal reflection, left to right by a horizontal reflection,
# front to back by a quarter turn.
X101_MAPS = (SquareMap("ABCD", "GFEH"),
             SquareMap("ABFE", "CDHG"),
             SquareMap("ADHE", "CGFB"))


def _build_x101_complex():
    c = layer_on_square(five_tet_cube(), "ABCD")
    for m in X101_MAPS:
        c = identify_squares(c, m)
    assert c.tri.is_closed()
    return c


def build_x101():
    """The six-tetrahedron triangulation x101.  Deterministic; the gluing
    table is identical across runs."""
    return _build_x101_complex().tri


def x101_flip_edge():
    """The interior diagonal edge between the cube and the layered
    tetrahedron: the unique handle on which build_x103 performs its 4-4
    move.  Returned as a (tet, a, b) representative for build_x101()."""
    return _build_x101_complex().flip_edge


def build_x103(choice=0):
    """The six-tetrahedron triangulation x103: x101 with the octahedron
    around the layered diagonal edge retriangulated about a new axis.

    The prose definition does not pin down which of the two candidate
    axes the census entry uses; both give a triangulation two Pachner
    moves from x101, and both are exposed here."""
    return move_44(build_x101(), x101_flip_edge(), choice)


def double_cover(tri):
    """The orientation double cover: two signed copies of each
    tetrahedron, with gluings lifted so the cover is orientable.

    Copy t of sheet +1 keeps index t; copy t of sheet -1 has index
    size + t (this fixed indexing is the covering map).  Input must be
    connected and non-orientable, otherwise the cover would be the
    disjoint union of two copies."""
    if is_orientable(tri):
        raise ValueError("triangulation is already orientable")
    n = tri.size
    table = [[None] * 4 for _ in range(2 * n)]
    for t in range(n):
        for f in range(4):
            g = tri.gluing(t, f)
            if g is None:
                continue
            if g.perm.sign() < 0:
                table[t][f] = Gluing(g.tet, g.perm)
                table[n + t][f] = Gluing(n + g.tet, g.perm)
            else:
                table[t][f] = Gluing(n + g.tet, g.perm)
                table[n + t][f] = Gluing(g.tet, g.perm)
    return Triangulation(table)


def build_figure_eight():
    """The standard two-tetrahedron figure-eight knot complement: the
    orientable control case (one torus cusp, H1 = Z, both edge classes of
    degree six).  Up to isomorphism it is the unique two-tetrahedron
    census triangulation with those invariants and H1 = Z; its sister has
    H1 = Z + Z_5."""
    return make_closed(2, {
        (0, 0): (1, (0, 1, 2, 3)),
        (0, 1): (1, (1, 2, 0, 3)),
        (0, 2): (1, (1, 0, 3, 2)),
        (0, 3): (1, (3, 0, 2, 1)),
    })
