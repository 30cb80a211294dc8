"""Local retriangulation moves: Pachner 2-3, 3-2, and the 4-4 move.

Each move removes a small cluster of tetrahedra and replaces it by a new
cluster with the same boundary.  The clusters are described by abstract
vertex letters; outer faces are matched between old and new cluster by
their letter sets, and the surviving gluings are rewritten through that
correspondence.  All moves preserve the underlying manifold.
"""

from dataclasses import dataclass

from .perm4 import Perm4
from .triangulation import (Triangulation, Gluing, face_classes, skeleton,
                            edge_walk, EdgeClass, FACE_VERTICES)


class MoveError(ValueError):
    """A move precondition failed (wrong degree, repeated tetrahedra, ...)."""


@dataclass(frozen=True, order=True)
class MoveDescriptor:
    """A move location in a specific triangulation.

    kind 23: loc indexes face_classes(tri); kind 32 and 44: loc indexes
    skeleton(tri).edges.  choice selects the new diagonal for a 4-4 move
    and is ignored otherwise.
    """

    kind: int
    loc: int
    choice: int = 0

    def __post_init__(self):
        if self.kind not in (23, 32, 44):
            raise ValueError("unknown move kind %r" % (self.kind,))


# ---------------------------------------------------------------------------
# Cluster replacement


def _face_letters(letters, f):
    return frozenset(letters[v] for v in range(4) if v != f)


def _replace_cluster(tri, removed, old_letters, old_outer, new_letters):
    """Rebuild `tri` with the tetrahedra in `removed` replaced.

    old_letters[t] assigns an abstract letter to each vertex label of the
    removed tetrahedron t; new_letters[k] does the same for the k-th new
    tetrahedron.  old_outer lists the removed-cluster faces that survive
    as the cluster boundary.  New faces sharing a letter set are glued to
    each other; each remaining new face must match exactly one old outer
    face, through which the external gluing is transported.
    """
    removed_set = set(removed)
    survivors = [t for t in range(tri.size) if t not in removed_set]
    renum = {t: i for i, t in enumerate(survivors)}
    base = len(survivors)

    # Pair up the new faces by letter set.
    by_set = {}
    for k, letters in enumerate(new_letters):
        for f in range(4):
            by_set.setdefault(_face_letters(letters, f), []).append((k, f))

    internal = {s: fs for s, fs in by_set.items() if len(fs) == 2}
    exposed = {s: fs[0] for s, fs in by_set.items() if len(fs) == 1}

    # Transfer permutation q for each old outer face: old labels of t to
    # new labels of the matching new tetrahedron, sending face to face.
    transfer = {}
    for (t, f) in old_outer:
        s = _face_letters(old_letters[t], f)
        if s not in exposed:
            raise AssertionError("outer face (%d,%d) has no new match" % (t, f))
        k, fn = exposed.pop(s)
        pos = {letter: v for v, letter in enumerate(new_letters[k])}
        q = [0] * 4
        q[f] = fn
        for v in range(4):
            if v != f:
                q[v] = pos[old_letters[t][v]]
        transfer[(t, f)] = (k, Perm4(q))
    if exposed:
        raise AssertionError("unmatched new cluster faces: %r" % (exposed,))

    table = [[None] * 4 for _ in range(base + len(new_letters))]

    def put(t, f, s, p):
        table[t][f] = Gluing(s, p)

    for t in survivors:
        for f in range(4):
            g = tri.gluing(t, f)
            if g is None:
                continue
            if g.tet in removed_set:
                k, q = transfer[(g.tet, g.perm(f))]
                put(renum[t], f, base + k, q * g.perm)
            else:
                put(renum[t], f, renum[g.tet], g.perm)

    for (k1, f1), (k2, f2) in (sorted(v) for v in internal.values()):
        pos2 = {letter: v for v, letter in enumerate(new_letters[k2])}
        p = [0] * 4
        p[f1] = f2
        for v in range(4):
            if v != f1:
                p[v] = pos2[new_letters[k1][v]]
        p = Perm4(p)
        put(base + k1, f1, base + k2, p)
        put(base + k2, f2, base + k1, p.inverse())

    for (t, f), (k, q) in transfer.items():
        g = tri.gluing(t, f)
        if g is None:
            continue
        if g.tet in removed_set:
            k2, q2 = transfer[(g.tet, g.perm(f))]
            put(base + k, q(f), base + k2, q2 * g.perm * q.inverse())
        else:
            put(base + k, q(f), renum[g.tet], g.perm * q.inverse())

    return Triangulation(table)


# ---------------------------------------------------------------------------
# Location handles


def resolve_face(tri, face):
    """Accept a face as (tet, face) or as an index into face_classes()."""
    if isinstance(face, int):
        classes = face_classes(tri)
        if not 0 <= face < len(classes):
            raise MoveError("no face class with index %d" % face)
        return classes[face][0]
    t, f = face
    return (t, f)

def resolve_edge(tri, edge):
    """Accept an edge as (tet, a, b), an EdgeClass, or an index into
    skeleton(tri).edges.  Returns a directed representative."""
    if isinstance(edge, EdgeClass):
        return edge.representative()
    if isinstance(edge, int):
        edges = skeleton(tri).edges
        if not 0 <= edge < len(edges):
            raise MoveError("no edge class with index %d" % edge)
        return edges[edge].representative()
    t, a, b = edge
    return (t, a, b)


def _canonical_edge_rep(tri, rep):
    """Least (tet, a, b) over all directed members of the edge class."""
    walk = edge_walk(tri, rep)
    best = None
    for (t, pi) in walk:
        for cand in ((t, pi(0), pi(1)), (t, pi(1), pi(0))):
            if best is None or cand < best:
                best = cand
    return best, len(walk)


# ---------------------------------------------------------------------------
# The moves


def pachner_23(tri, face):
    """Replace the two tetrahedra adjacent along `face` by three around a
    new interior edge of degree 3.

    The new edge is (result.size - 3, vertices 0 and 1): the three new
    tetrahedra are appended last and carry the new edge as their 01-edge.
    """
    t0, f0 = resolve_face(tri, face)
    g = tri.gluing(t0, f0)
    if g is None:
        raise MoveError("face (%d,%d) is on the boundary" % (t0, f0))
    if g.tet == t0:
        raise MoveError("face (%d,%d) glues tetrahedron %d to itself"
                        % (t0, f0, t0))
    t1, p = g.tet, g.perm
    f1 = p(f0)

    v = FACE_VERTICES[f0]  # base vertices in t0, ascending
    base_letters = ("B0", "B1", "B2")
    old_letters = {t0: [None] * 4, t1: [None] * 4}
    old_letters[t0][f0] = "P"
    old_letters[t1][f1] = "Q"
    for k in range(3):
        old_letters[t0][v[k]] = base_letters[k]
        old_letters[t1][p(v[k])] = base_letters[k]

    old_outer = [(t0, v[k]) for k in range(3)] + [(t1, p(v[k])) for k in range(3)]
    new_letters = [("P", "Q", base_letters[k], base_letters[(k + 1) % 3])
                   for k in range(3)]
    return _replace_cluster(tri, [t0, t1], old_letters, old_outer, new_letters)


def _walk_letters(tri, rep, degree_wanted):
    """Embeddings around an edge plus abstract letters for each incident
    tetrahedron: U, V are the edge endpoints and W0..Wd-1 the link."""
    walk = edge_walk(tri, rep)
    d = len(walk)
    if d != degree_wanted:
        raise MoveError("edge has degree %d, need %d" % (d, degree_wanted))
    tets = [t for (t, _) in walk]
    if len(set(tets)) != d:
        raise MoveError("edge meets a repeated tetrahedron")
    old_letters = {}
    for i, (t, pi) in enumerate(walk):
        letters = [None] * 4
        letters[pi(0)] = "U"
        letters[pi(1)] = "V"
        letters[pi(2)] = "W%d" % ((i - 1) % d)
        letters[pi(3)] = "W%d" % i
        old_letters[t] = letters
    old_outer = [(t, pi(0)) for (t, pi) in walk] + \
                [(t, pi(1)) for (t, pi) in walk]
    return walk, old_letters, old_outer


def pachner_32(tri, edge):
    """Replace the three tetrahedra around a degree-3 edge by two glued
    along the triangle spanned by the edge's link."""
    rep = resolve_edge(tri, edge)
    walk, old_letters, old_outer = _walk_letters(tri, rep, 3)
    removed = [t for (t, _) in walk]
    new_letters = [("U", "W0", "W1", "W2"), ("V", "W0", "W1", "W2")]
    return _replace_cluster(tri, removed, old_letters, old_outer, new_letters)


def move_44(tri, edge, choice=0):
    """Retriangulate the octahedron around a degree-4 edge about one of
    its two other axes.

    The octahedron's link vertices are ordered by their least (tet,
    vertex) incidence; choice 0 picks the axis through the least link
    vertex, choice 1 the remaining axis.  The four old tetrahedra are
    replaced by four new ones; the tetrahedron count is unchanged.
    """
    if choice not in (0, 1):
        raise MoveError("choice must be 0 or 1")
    rep, degree = _canonical_edge_rep(tri, resolve_edge(tri, edge))
    if degree != 4:
        raise MoveError("edge has degree %d, need 4" % degree)
    walk, old_letters, old_outer = _walk_letters(tri, rep, 4)
    removed = [t for (t, _) in walk]

    # Least (tet, vertex) incidence of each link vertex W_i: it appears in
    # walk tetrahedron i as pi_i(3) and in tetrahedron i+1 as pi_{i+1}(2).
    key = {}
    for i in range(4):
        t_i, pi_i = walk[i]
        t_j, pi_j = walk[(i + 1) % 4]
        key["W%d" % i] = min((t_i, pi_i(3)), (t_j, pi_j(2)))

    diagonals = sorted((sorted(("W0", "W2"), key=key.get),
                        sorted(("W1", "W3"), key=key.get)),
                       key=lambda d: key[d[0]])
    x, y = diagonals[choice]
    u, w = diagonals[1 - choice]
    # Equator around the new axis: U and V alternate with the old
    # diagonal's vertices, lesser-keyed one first.
    cycle = ("U", u, "V", w)
    new_letters = [(x, y, cycle[k], cycle[(k + 1) % 4]) for k in range(4)]
    return _replace_cluster(tri, removed, old_letters, old_outer, new_letters)


def move_44_as_pachner_pair(tri, edge, choice=0):
    """The same retriangulation as move_44, performed as a 2-3 move on a
    face containing the edge followed by a 3-2 move on the edge.

    The 2-3 move is applied to the walk face whose opposite link vertices
    form the target diagonal; the original edge then has degree 3 and is
    removed by the 3-2 move.  The result is isomorphic to move_44 with
    the same choice (the two implementations cross-check each other).
    """
    if choice not in (0, 1):
        raise MoveError("choice must be 0 or 1")
    rep, degree = _canonical_edge_rep(tri, resolve_edge(tri, edge))
    if degree != 4:
        raise MoveError("edge has degree %d, need 4" % degree)
    walk, _letters, _outer = _walk_letters(tri, rep, 4)

    key = {}
    for i in range(4):
        t_i, pi_i = walk[i]
        t_j, pi_j = walk[(i + 1) % 4]
        key[i] = min((t_i, pi_i(3)), (t_j, pi_j(2)))
    diagonals = sorted(((0, 2), (1, 3)),
                       key=lambda d: min(key[d[0]], key[d[1]]))
    j0, j1 = diagonals[choice]

    # The 2-3 move on the face between walk tetrahedra j0+1 and j0+2
    # creates the edge joining link vertices W_{j0} and W_{j0+2}.
    i = (j0 + 1) % 4
    t_i, pi_i = walk[i]
    mid = pachner_23(tri, (t_i, pi_i(2)))
    # The original edge now has degree 3; locate it by its surviving
    # member in walk tetrahedron j0 (which the 2-3 move left untouched).
    t_keep, pi_keep = walk[(j0 + 3) % 4]
    removed = sorted((t_i, tri.gluing(t_i, pi_i(2)).tet))
    shift = sum(1 for r in removed if r < t_keep)
    return pachner_32(mid, (t_keep - shift, pi_keep(0), pi_keep(1)))


# ---------------------------------------------------------------------------
# Enumeration and replay


def legal_moves(tri, max_tets=None):
    """All applicable 2-3 and 3-2 descriptors, sorted.

    4-4 moves are not enumerated: a 4-4 move equals a 2-3/3-2 pair, so
    they add nothing to path search.  max_tets suppresses 2-3 moves that
    would exceed the given tetrahedron count.
    """
    out = []
    if max_tets is None or tri.size + 1 <= max_tets:
        for i, ((t0, f0), (t1, f1)) in enumerate(face_classes(tri)):
            if t0 != t1:
                out.append(MoveDescriptor(kind=23, loc=i))
    for i, e in enumerate(skeleton(tri).edges):
        if e.degree == 3 and e.valid:
            if len({t for (t, _, _) in e.members}) == 3:
                out.append(MoveDescriptor(kind=32, loc=i))
    return out


def apply_move(tri, desc):
    if desc.kind == 23:
        return pachner_23(tri, desc.loc)
    if desc.kind == 32:
        return pachner_32(tri, desc.loc)
    return move_44(tri, desc.loc, desc.choice)
