"""Combinatorial isomorphism testing and canonical signatures.

The signature of a closed connected triangulation is computed by running a
breadth-first canonical relabelling from every (start tetrahedron, start
labelling) pair -- 24n candidates -- and keeping the lexicographically
least encoding.  Equal signatures are therefore equivalent to the
existence of a combinatorial isomorphism, with no floating point anywhere.

Encoding: a stream of symbols in 0..63 rendered in the alphabet below.
The first symbol is the tetrahedron count n (n <= 62; 63 is reserved as
an escape and currently rejected).  Then, for each tetrahedron in
canonical order and each face 0..3, two symbols: the target tetrahedron
index and the index (0..23) of the gluing permutation in the canonical
labelling.  Tree gluings encode as permutation index 0 by construction.
"""

import random
from dataclasses import dataclass

from .perm4 import Perm4, ALL_PERMS
from .triangulation import Triangulation, Gluing

ALPHABET = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-"
_SYMBOL = {c: i for i, c in enumerate(ALPHABET)}
MAX_TETS = 62


@dataclass(frozen=True)
class Isomorphism:
    """A combinatorial isomorphism: a bijection of tetrahedra together
    with a vertex relabelling for each source tetrahedron."""

    tet_map: tuple       # tet_map[t] = image tetrahedron
    vertex_maps: tuple   # vertex_maps[t] maps labels of t to labels of image

    def apply(self, tri):
        """Transport the gluing table of `tri` along this isomorphism."""
        n = tri.size
        table = [[None] * 4 for _ in range(n)]
        for t in range(n):
            rho = self.vertex_maps[t]
            for f in range(4):
                g = tri.gluing(t, f)
                if g is None:
                    continue
                q = self.vertex_maps[g.tet] * g.perm * rho.inverse()
                table[self.tet_map[t]][rho(f)] = Gluing(self.tet_map[g.tet], q)
        return Triangulation(table)

    def compose(self, first):
        """The isomorphism applying `first`, then self."""
        n = len(first.tet_map)
        tet_map = tuple(self.tet_map[first.tet_map[t]] for t in range(n))
        vmaps = tuple(self.vertex_maps[first.tet_map[t]] * first.vertex_maps[t]
                      for t in range(n))
        return Isomorphism(tet_map=tet_map, vertex_maps=vmaps)

    def inverse(self):
        n = len(self.tet_map)
        inv_tet = [0] * n
        inv_v = [None] * n
        for t in range(n):
            inv_tet[self.tet_map[t]] = t
            inv_v[self.tet_map[t]] = self.vertex_maps[t].inverse()
        return Isomorphism(tet_map=tuple(inv_tet), vertex_maps=tuple(inv_v))

    @classmethod
    def identity(cls, n):
        ident = Perm4.identity()
        return cls(tet_map=tuple(range(n)), vertex_maps=(ident,) * n)


def _require_encodable(tri):
    if tri.size == 0:
        raise ValueError("cannot encode the empty triangulation")
    if tri.size > MAX_TETS:
        raise ValueError("signatures support at most %d tetrahedra" % MAX_TETS)
    if not tri.is_closed():
        raise ValueError("signatures require a closed triangulation "
                         "(unglued faces present)")
    if tri.involution_violations():
        raise ValueError("gluing table violates the involution invariant")
    if not tri.is_connected():
        raise ValueError("signatures require a connected triangulation")


def _candidate_stream(tri, start, rho, best):
    """Canonical encoding stream for one (start, labelling) choice, or
    None as soon as it is lexicographically worse than `best`."""
    n = tri.size
    new_of_old = {start: 0}
    old_of_new = [start]
    vmap = {start: rho}
    stream = []
    pos = 0
    for new_t in range(n):
        old_t = old_of_new[new_t]
        inv = vmap[old_t].inverse()
        for new_f in range(4):
            g = tri.gluing(old_t, inv(new_f))
            old_s = g.tet
            if old_s not in new_of_old:
                new_of_old[old_s] = len(old_of_new)
                old_of_new.append(old_s)
                vmap[old_s] = vmap[old_t] * g.perm.inverse()
            q = vmap[old_s] * g.perm * inv
            for sym in (new_of_old[old_s], q.index()):
                if best is not None and pos < len(best):
                    if sym > best[pos]:
                        return None
                    if sym < best[pos]:
                        best = None  # now strictly better; stop comparing
                stream.append(sym)
                pos += 1
    return stream


def canonical_form(tri):
    """The canonical signature of `tri` together with the relabelling
    isomorphism onto its canonical representative."""
    _require_encodable(tri)
    n = tri.size
    best = None
    best_choice = None
    for start in range(n):
        for rho in ALL_PERMS:
            stream = _candidate_stream(tri, start, rho, best)
            if stream is not None and (best is None or stream < best):
                best = stream
                best_choice = (start, rho)
    # Rebuild the winning relabelling as an Isomorphism.
    start, rho = best_choice
    new_of_old = {start: 0}
    old_of_new = [start]
    vmap = {start: rho}
    for new_t in range(n):
        old_t = old_of_new[new_t]
        inv = vmap[old_t].inverse()
        for new_f in range(4):
            g = tri.gluing(old_t, inv(new_f))
            if g.tet not in new_of_old:
                new_of_old[g.tet] = len(old_of_new)
                old_of_new.append(g.tet)
                vmap[g.tet] = vmap[old_t] * g.perm.inverse()
    iso = Isomorphism(tet_map=tuple(new_of_old[t] for t in range(n)),
                      vertex_maps=tuple(vmap[t] for t in range(n)))
    sig = ALPHABET[n] + "".join(ALPHABET[s] for s in best)
    return sig, iso


def canonical_signature(tri):
    """Relabelling-invariant signature string: equal signatures if and
    only if the triangulations are combinatorially isomorphic."""
    return canonical_form(tri)[0]


def decode_signature(sig):
    """Rebuild a triangulation from its signature (round trip up to
    isomorphism; decoding a canonical signature gives the canonical
    representative exactly)."""
    if not sig:
        raise ValueError("empty signature")
    try:
        symbols = [_SYMBOL[c] for c in sig]
    except KeyError as exc:
        raise ValueError("signature contains invalid character %r"
                         % (exc.args[0],)) from None
    n = symbols[0]
    if n == 0 or n > MAX_TETS:
        raise ValueError("bad tetrahedron count %d in signature" % n)
    if len(symbols) != 1 + 8 * n:
        raise ValueError("signature length %d does not match %d tetrahedra"
                         % (len(symbols), n))
    table = []
    k = 1
    for _t in range(n):
        faces = []
        for _f in range(4):
            target, perm_idx = symbols[k], symbols[k + 1]
            k += 2
            if target >= n or perm_idx >= 24:
                raise ValueError("signature entry out of range")
            faces.append(Gluing(target, ALL_PERMS[perm_idx]))
        table.append(faces)
    tri = Triangulation(table)
    if tri.involution_violations():
        raise ValueError("signature does not describe an involutive table")
    return tri


def are_isomorphic(a, b):
    """A witness isomorphism from `a` onto `b`, or None.  Agrees with
    signature equality by construction."""
    sig_a, iso_a = canonical_form(a)
    sig_b, iso_b = canonical_form(b)
    if sig_a != sig_b:
        return None
    return iso_b.inverse().compose(iso_a)


def relabel(tri, seed):
    """A pseudorandom relabelling of `tri`: a tetrahedron permutation and
    per-tetrahedron vertex permutations drawn deterministically from
    `seed`."""
    rng = random.Random(seed)
    n = tri.size
    tets = list(range(n))
    rng.shuffle(tets)
    iso = Isomorphism(
        tet_map=tuple(tets),
        vertex_maps=tuple(ALL_PERMS[rng.randrange(24)] for _ in range(n)))
    return iso.apply(tri)
