"""Core representation of ideal triangulations.

A triangulation is a collection of n tetrahedra whose faces are identified
in pairs.  Face f of a tetrahedron is the face opposite vertex f.  A gluing
stored at face f of tetrahedron t is a pair (target tet t', permutation p)
where p maps vertex labels of t to vertex labels of t'; face f of t is
identified with face p(f) of t'.  The matching gluing stored at
(t', p(f)) must be (t, p inverse) -- the involution invariant.

Construction only checks table shape; involution, closedness and the
topological conditions are diagnosed by validate(), which reports rather
than raises.
"""

from dataclasses import dataclass

from .perm4 import Perm4
from .union_find import UnionFind

# The three vertex pairs spanning each face: face f has vertices
# {0,1,2,3} - {f}.
FACE_VERTICES = tuple(tuple(v for v in range(4) if v != f) for f in range(4))

# The six edges of a tetrahedron as ordered (a, b) with a < b.
TET_EDGES = tuple((a, b) for a in range(4) for b in range(a + 1, 4))


@dataclass(frozen=True)
class Gluing:
    """Target tetrahedron and label bijection for one glued face."""

    tet: int
    perm: Perm4


class Triangulation:
    """An immutable table of face gluings for n tetrahedra.

    `tets[t][f]` is the Gluing of face f of tetrahedron t, or None if the
    face is unglued (a boundary face).
    """

    __slots__ = ("tets",)

    def __init__(self, tets):
        table = []
        for t, faces in enumerate(tets):
            faces = tuple(faces)
            if len(faces) != 4:
                raise ValueError("tetrahedron %d does not have 4 faces" % t)
            for f, g in enumerate(faces):
                if g is None:
                    continue
                if not isinstance(g, Gluing):
                    raise TypeError("entry (%d,%d) is not a Gluing" % (t, f))
                if not 0 <= g.tet < len(tets):
                    raise ValueError(
                        "gluing (%d,%d) targets tetrahedron %d of %d"
                        % (t, f, g.tet, len(tets)))
            table.append(faces)
        object.__setattr__(self, "tets", tuple(table))

    def __setattr__(self, name, value):
        raise AttributeError("Triangulation is immutable")

    @property
    def size(self):
        return len(self.tets)

    def gluing(self, t, f):
        return self.tets[t][f]

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.tets == other.tets

    def __hash__(self):
        return hash(self.tets)

    def __repr__(self):
        return "<Triangulation of %d tetrahedra>" % self.size

    # -- elementary predicates ------------------------------------------

    def is_closed(self):
        return all(g is not None for faces in self.tets for g in faces)

    def boundary_faces(self):
        return [(t, f) for t, faces in enumerate(self.tets)
                for f, g in enumerate(faces) if g is None]

    def involution_violations(self):
        """Faces whose partner gluing is missing or not the inverse."""
        bad = []
        for t, faces in enumerate(self.tets):
            for f, g in enumerate(faces):
                if g is None:
                    continue
                back = self.tets[g.tet][g.perm(f)]
                if back is None or back.tet != t or back.perm != g.perm.inverse():
                    bad.append((t, f))
        return bad

    def is_connected(self):
        if self.size == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            t = stack.pop()
            for g in self.tets[t]:
                if g is not None and g.tet not in seen:
                    seen.add(g.tet)
                    stack.append(g.tet)
        return len(seen) == self.size


def make_closed(n, gluings):
    """Build a Triangulation from one-sided gluing data.

    `gluings` maps (t, f) -> (t', images); the inverse entries are filled
    in automatically.  Raises if two entries collide inconsistently.
    """
    table = [[None] * 4 for _ in range(n)]
    for (t, f), (s, images) in gluings.items():
        p = images if isinstance(images, Perm4) else Perm4(images)
        for (a, b), g in (((t, f), Gluing(s, p)),
                          ((s, p(f)), Gluing(t, p.inverse()))):
            if table[a][b] is not None and table[a][b] != g:
                raise ValueError("conflicting gluings at (%d,%d)" % (a, b))
            table[a][b] = g
    return Triangulation(table)


# ---------------------------------------------------------------------------
# Skeleton: edge and vertex equivalence classes


@dataclass(frozen=True)
class EdgeClass:
    """An equivalence class of tetrahedron edges.

    Members are (tet, (a, b), sign) triples: the edge from vertex a to
    vertex b of tetrahedron `tet` (a < b), traversed with `sign` relative
    to the orientation of the class representative.  The class is invalid
    if some member is identified with itself with endpoints swapped.
    """

    index: int
    members: tuple
    valid: bool

    @property
    def degree(self):
        return len(self.members)

    def representative(self):
        """A directed representative (tet, a, b) of the class orientation."""
        t, (a, b), s = self.members[0]
        return (t, a, b) if s > 0 else (t, b, a)


@dataclass(frozen=True)
class VertexClass:
    """An equivalence class of tetrahedron vertices (an ideal vertex)."""

    index: int
    members: tuple


@dataclass(frozen=True)
class SkeletonReport:
    tets: int
    edges: tuple
    vertices: tuple
    glued_face_pairs: int

    def edge_containing(self, t, a, b):
        for e in self.edges:
            for (tet, pair, _sign) in e.members:
                if tet == t and pair == tuple(sorted((a, b))):
                    return e
        raise KeyError("edge (%d; %d,%d) not found" % (t, a, b))

    def vertex_containing(self, t, v):
        for vc in self.vertices:
            if (t, v) in vc.members:
                return vc
        raise KeyError("vertex (%d,%d) not found" % (t, v))


def _require_involution(tri):
    bad = tri.involution_violations()
    if bad:
        raise ValueError("gluing table violates the involution invariant "
                         "at faces %s" % (bad[:4],))


def skeleton(tri):
    """Edge and vertex classes of the triangulation.

    Edge identifications are tracked on directed edges, so a class whose
    two directions are merged (an edge identified with itself reversed) is
    detected and flagged invalid.
    """
    _require_involution(tri)

    directed = UnionFind()
    verts = UnionFind()
    pairs = 0
    for t in range(tri.size):
        for v in range(4):
            verts.add((t, v))
        for a, b in TET_EDGES:
            directed.add((t, a, b))
            directed.add((t, b, a))
    for t in range(tri.size):
        for f in range(4):
            g = tri.gluing(t, f)
            if g is None:
                continue
            if (t, f) <= (g.tet, g.perm(f)):
                pairs += 1
            p = g.perm
            for v in FACE_VERTICES[f]:
                verts.union((t, v), (g.tet, p(v)))
            for a, b in TET_EDGES:
                if a != f and b != f:
                    directed.union((t, a, b), (g.tet, p(a), p(b)))
                    directed.union((t, b, a), (g.tet, p(b), p(a)))

    # Group undirected edges: the directed classes of (a,b) and (b,a)
    # coincide exactly when the edge is invalid.
    edge_groups = {}
    for t in range(tri.size):
        for a, b in TET_EDGES:
            fwd = directed.find((t, a, b))
            rev = directed.find((t, b, a))
            key = min(fwd, rev)
            edge_groups.setdefault(key, []).append((t, (a, b)))

    edges = []
    for key in sorted(edge_groups):
        members = sorted(edge_groups[key])
        t0, (a0, b0) = members[0]
        valid = not directed.same((t0, a0, b0), (t0, b0, a0))
        root = directed.find((t0, a0, b0))
        signed = []
        for t, (a, b) in members:
            sign = 1 if directed.find((t, a, b)) == root else -1
            signed.append((t, (a, b), sign))
        edges.append(EdgeClass(index=len(edges), members=tuple(signed),
                               valid=valid))

    vertices = [VertexClass(index=i, members=tuple(cls))
                for i, cls in enumerate(verts.classes())]

    return SkeletonReport(tets=tri.size, edges=tuple(edges),
                          vertices=tuple(vertices), glued_face_pairs=pairs)


def face_classes(tri):
    """Glued face pairs as ((t, f), (t', f')) with the lesser side first,
    sorted.  Unglued faces are not listed."""
    seen = set()
    out = []
    for t in range(tri.size):
        for f in range(4):
            g = tri.gluing(t, f)
            if g is None or (t, f) in seen:
                continue
            other = (g.tet, g.perm(f))
            seen.add((t, f))
            seen.add(other)
            out.append(tuple(sorted(((t, f), other))))
    out.sort()
    return out


def edge_walk(tri, rep):
    """Walk around a directed edge (t, a, b); tri must be closed.

    Returns the cyclic list of embeddings (tet, pi) where pi is a Perm4
    with (pi(0), pi(1)) the directed edge in that tetrahedron and face
    pi(2) the face crossed to reach the next embedding.  The walk length
    is the degree of the edge class.
    """
    t, a, b = rep
    c, d = (v for v in range(4) if v not in (a, b))
    pi = Perm4((a, b, c, d))
    start = (t, pi.images)
    out = []
    while True:
        out.append((t, pi))
        g = tri.gluing(t, pi(2))
        if g is None:
            raise ValueError("edge walk crossed a boundary face at "
                             "(%d,%d)" % (t, pi(2)))
        p = g.perm
        t, pi = g.tet, Perm4((p(pi(0)), p(pi(1)), p(pi(3)), p(pi(2))))
        if (t, pi.images) == start:
            return out
        if len(out) > 6 * tri.size:
            raise RuntimeError("edge walk failed to close up")


# ---------------------------------------------------------------------------
# Vertex links


@dataclass(frozen=True)
class LinkSurface:
    """The boundary surface of a small neighbourhood of an ideal vertex,
    triangulated by one corner triangle per incident tetrahedron corner."""

    triangles: int
    edges: int
    vertices: int
    orientable: bool
    connected: bool

    @property
    def euler_characteristic(self):
        return self.vertices - self.edges + self.triangles

    def kind(self):
        if not self.connected:
            return "disconnected"
        chi = self.euler_characteristic
        if chi == 0:
            return "torus" if self.orientable else "klein-bottle"
        return "chi=%d" % chi


def vertex_link(tri, vclass):
    """Build the link of a vertex class of a closed triangulation.

    Corner triangle (t, v) has a vertex on each edge (v, w), w != v, and a
    side on each face u containing v.  Face gluings identify sides; the
    resulting closed surface is returned with its Euler characteristic,
    orientability and connectedness.
    """
    _require_involution(tri)
    corners = sorted(vclass.members)

    # Link vertices: classes of (t, v, w).
    lv = UnionFind()
    # Connectedness of the link: plain union-find over corners.
    comp = UnionFind()
    # Orientability: track corners together with a sheet sign; an
    # orientation-reversing side gluing joins opposite sheets of the
    # double cover.
    sheets = UnionFind()
    for (t, v) in corners:
        for w in range(4):
            if w != v:
                lv.add((t, v, w))
        comp.add((t, v))
        sheets.add((t, v, 1))
        sheets.add((t, v, -1))

    side_pairs = 0
    for (t, v) in corners:
        others = [w for w in range(4) if w != v]
        for f in others:  # the three sides of corner (t, v)
            g = tri.gluing(t, f)
            if g is None:
                raise ValueError("vertex link of a non-closed triangulation "
                                 "(boundary face (%d,%d))" % (t, f))
            p = g.perm
            t2, v2 = g.tet, p(v)
            if (t, v, f) <= (t2, v2, p(f)):
                side_pairs += 1
            for w in others:
                if w != f:
                    lv.union((t, v, w), (t2, v2, p(w)))
            # Orientation bookkeeping: orient each corner triangle by the
            # ascending order of its three link vertices; the gluing keeps
            # the two orientations coherent iff it reverses the induced
            # direction of the shared side.
            x, y = (w for w in others if w != f)
            d1 = _side_direction(v, f, x, y)
            x2, y2 = p(x), p(y)
            d2 = _side_direction(v2, p(f), x2, y2)
            # d1 is (start, end) in t's labels; its image under p is
            # (p(start), p(end)).  Coherent when image == reversed(d2).
            image = (p(d1[0]), p(d1[1]))
            flip = 1 if image == (d2[1], d2[0]) else -1
            comp.union((t, v), (t2, v2))
            sheets.union((t, v, 1), (t2, v2, flip))
            sheets.union((t, v, -1), (t2, v2, -flip))

    n_tris = len(corners)
    n_vertices = len({lv.find((t, v, w))
                      for (t, v) in corners for w in range(4) if w != v})
    connected = len({comp.find(c) for c in corners}) == 1
    # For a disconnected link this reflects only the first corner's
    # component; nothing downstream needs more.
    orientable = not sheets.same((corners[0][0], corners[0][1], 1),
                                 (corners[0][0], corners[0][1], -1))
    return LinkSurface(triangles=n_tris, edges=side_pairs,
                       vertices=n_vertices, orientable=orientable,
                       connected=connected)


def _side_direction(v, f, x, y):
    """Directed side of corner triangle (t, v) lying on face f.

    The corner triangle is oriented by the ascending cycle of its link
    vertices (w0, w1, w2); boundary directions are w0->w1, w1->w2, w2->w0.
    The side on face f holds the two link vertices {x, y} != f.
    """
    w0, w1, w2 = sorted(w for w in range(4) if w != v)
    lo, hi = min(x, y), max(x, y)
    if (lo, hi) == (w0, w1):
        return (w0, w1)
    if (lo, hi) == (w1, w2):
        return (w1, w2)
    return (w2, w0)


# ---------------------------------------------------------------------------
# Orientability


def is_orientable(tri):
    """Whether the tetrahedra admit a coherent orientation assignment.

    Convention: a gluing between coherently oriented tetrahedra must be an
    odd permutation (an affine face identification reverses orientation,
    and the odd label bijections are exactly the reflections).  Signs are
    propagated greedily over the face-pairing graph.
    """
    _require_involution(tri)
    if not tri.is_connected():
        raise ValueError("orientability needs a connected triangulation")
    sign = {0: 1}
    stack = [0]
    while stack:
        t = stack.pop()
        for g in tri.tets[t]:
            if g is None:
                continue
            want = -sign[t] * g.perm.sign()
            if g.tet not in sign:
                sign[g.tet] = want
                stack.append(g.tet)
            elif sign[g.tet] != want:
                return False
    return True


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class ValidationReport:
    """Diagnoses are data: nothing here raises on a bad triangulation."""

    involution_ok: bool
    closed: bool
    connected: bool
    edges_valid: bool
    links_ok: bool
    messages: tuple

    @property
    def census_valid(self):
        return (self.involution_ok and self.closed and self.connected
                and self.edges_valid and self.links_ok)


def validate(tri):
    """Check the conditions for a census-style ideal triangulation:
    involutive gluings, closed, connected, valid edges, and every vertex
    link a connected surface of Euler characteristic 0."""
    messages = []

    bad = tri.involution_violations()
    involution_ok = not bad
    for (t, f) in bad:
        messages.append("involution violated at face (%d,%d)" % (t, f))

    boundary = tri.boundary_faces()
    closed = not boundary
    for (t, f) in boundary:
        messages.append("unglued face (%d,%d)" % (t, f))

    connected = tri.is_connected()
    if not connected:
        messages.append("face-pairing graph is disconnected")

    edges_valid = True
    links_ok = False
    if involution_ok:
        sk = skeleton(tri)
        for e in sk.edges:
            if not e.valid:
                edges_valid = False
                messages.append(
                    "edge class %d identified with itself reversed" % e.index)
        if closed:
            links_ok = True
            for vc in sk.vertices:
                link = vertex_link(tri, vc)
                if link.euler_characteristic != 0 or not link.connected:
                    links_ok = False
                    messages.append(
                        "link of vertex class %d is %s"
                        % (vc.index, link.kind()))
        else:
            messages.append("vertex links not closed surfaces "
                            "(triangulation has boundary)")
    else:
        messages.append("skeleton not computed (involution violated)")

    return ValidationReport(involution_ok=involution_ok, closed=closed,
                            connected=connected, edges_valid=edges_valid,
                            links_ok=links_ok, messages=tuple(messages))
