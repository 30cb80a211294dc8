"""Bounded breadth-first search in the Pachner graph.

States are canonical signatures, so the search is independent of
tetrahedron labelling and never revisits an isomorphic triangulation.
Moves are the 2-3 and 3-2 Pachner moves (a 4-4 move is their composite
and would add nothing to path search).  Failure to connect two
triangulations within a budget means exactly that -- the method is
one-sided and never certifies non-homeomorphism.
"""

from dataclasses import dataclass, field

from .homology import first_homology
from .isosig import canonical_signature, decode_signature
from .moves import apply_move, legal_moves
from .triangulation import skeleton, is_orientable, validate


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the Pachner-graph exploration: no state may exceed the
    larger input size plus max_extra_tets, paths are at most max_depth
    moves, and at most max_nodes distinct states are generated."""

    max_extra_tets: int = 1
    max_depth: int = 2
    max_nodes: int = 100000

    def __post_init__(self):
        if self.max_extra_tets < 0 or self.max_depth < 0 or self.max_nodes < 1:
            raise ValueError("budget out of range: %r" % (self,))


@dataclass(frozen=True)
class PachnerPath:
    """A move path between canonical signatures.  Each descriptor refers
    to the canonical form of the state it is applied to, so the path can
    be replayed mechanically."""

    start_sig: str
    end_sig: str
    moves: tuple

    def __len__(self):
        return len(self.moves)

    def replay(self):
        """Apply the moves from the canonical start; returns the final
        signature, which equals end_sig for a valid path."""
        sig = self.start_sig
        for d in self.moves:
            sig = canonical_signature(apply_move(decode_signature(sig), d))
        return sig


def _invariant_key(tri):
    sk = skeleton(tri)
    return (len(sk.vertices), is_orientable(tri), str(first_homology(tri)))


def _expand(sig, max_tets):
    """Sorted (descriptor, successor signature) pairs of a state."""
    tri = decode_signature(sig)
    out = []
    for d in legal_moves(tri, max_tets=max_tets):
        out.append((d, canonical_signature(apply_move(tri, d))))
    return out


class _Budget:
    def __init__(self, budget):
        self.left = budget.max_nodes

    def charge(self, k=1):
        self.left -= k
        return self.left >= 0


def _trace(parents, sig):
    """Moves along the tree from the root down to `sig`."""
    moves = []
    while parents[sig] is not None:
        sig, d = parents[sig]
        moves.append(d)
    moves.reverse()
    return moves


def _find_step(u_sig, v_sig, max_tets):
    """The least descriptor turning state u into state v (which must be
    adjacent, e.g. from a recorded search edge in the other direction)."""
    for d, sig in _expand(u_sig, max_tets):
        if sig == v_sig:
            return d
    raise RuntimeError("states are not adjacent")


def bfs_connect(a, b, budget=SearchBudget()):
    """Shortest Pachner path between two triangulations within a budget,
    or None.

    Distinct homology, cusp count or orientability short-circuit to None
    before any search (those are provably distinct manifolds); otherwise
    None only means no path was found within the budget.  Searches with
    max_depth at most 2 are plain breadth-first and return the
    lexicographically least minimal path; deeper budgets use a
    bidirectional search whose result is still deterministic and
    minimal."""
    for tri in (a, b):
        if not validate(tri).census_valid:
            raise ValueError("bfs_connect needs census-valid input")
    if _invariant_key(a) != _invariant_key(b):
        return None
    max_tets = max(a.size, b.size) + budget.max_extra_tets
    sig_a = canonical_signature(a)
    sig_b = canonical_signature(b)
    if sig_a == sig_b:
        return PachnerPath(start_sig=sig_a, end_sig=sig_b, moves=())

    nodes = _Budget(budget)
    nodes.charge(2)
    if budget.max_depth == 0:
        return None
    if budget.max_depth <= 2:
        path = _bfs_oneway(sig_a, sig_b, budget.max_depth, max_tets, nodes)
    else:
        path = _bfs_bidirectional(sig_a, sig_b, budget.max_depth, max_tets,
                                  nodes)
    return path


def _bfs_oneway(sig_a, sig_b, max_depth, max_tets, nodes):
    parents = {sig_a: None}
    frontier = [sig_a]
    for _depth in range(max_depth):
        nxt = []
        for sig in frontier:
            for d, succ in _expand(sig, max_tets):
                if succ in parents:
                    continue
                if not nodes.charge():
                    return None
                parents[succ] = (sig, d)
                if succ == sig_b:
                    return PachnerPath(start_sig=sig_a, end_sig=sig_b,
                                       moves=tuple(_trace(parents, succ)))
                nxt.append(succ)
        frontier = nxt
    return None


def _bfs_bidirectional(sig_a, sig_b, max_depth, max_tets, nodes):
    fwd = {sig_a: None}
    bwd = {sig_b: None}
    frontiers = {0: [sig_a], 1: [sig_b]}
    trees = {0: fwd, 1: bwd}
    depths = [0, 0]
    while depths[0] + depths[1] < max_depth and frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        tree, other = trees[side], trees[1 - side]
        nxt = []
        meets = []
        for sig in frontiers[side]:
            for d, succ in _expand(sig, max_tets):
                if succ in tree:
                    continue
                if not nodes.charge():
                    return None
                tree[succ] = (sig, d)
                nxt.append(succ)
                if succ in other:
                    meets.append(succ)
        depths[side] += 1
        if meets:
            meet = min(meets)
            fwd_moves = _trace(fwd, meet)
            # The backward tree records moves from b out to the meet
            # state; invert them one adjacency at a time.
            back = []
            sig = meet
            while bwd[sig] is not None:
                parent, _d = bwd[sig]
                back.append(_find_step(sig, parent, max_tets))
                sig = parent
            return PachnerPath(start_sig=sig_a, end_sig=sig_b,
                               moves=tuple(fwd_moves + back))
        frontiers[side] = nxt
    return None


@dataclass(frozen=True)
class DedupeGroup:
    """Entries provably connected by move paths, with the witnesses that
    join them."""

    names: tuple
    witnesses: tuple  # (name_from, name_to, PachnerPath)


@dataclass(frozen=True)
class DedupeReport:
    groups: tuple

    def group_of(self, name):
        for g in self.groups:
            if name in g.names:
                return g
        raise KeyError(name)


def dedupe_census(entries, budget=SearchBudget()):
    """Partition named triangulations into classes provably connected by
    Pachner paths within the budget.

    Entries are first grouped by the cheap invariants (tetrahedron
    count, cusp count, orientability, H1); the search only ever runs
    inside those buckets, so grouping is conservative: it can miss
    duplicates, never merge distinct manifolds."""
    entries = sorted(entries, key=lambda kv: kv[0])
    names = [name for name, _ in entries]
    if len(set(names)) != len(names):
        raise ValueError("duplicate entry names")
    for name, tri in entries:
        if not validate(tri).census_valid:
            raise ValueError("entry %r is not census-valid" % name)

    buckets = {}
    for name, tri in entries:
        key = (tri.size,) + _invariant_key(tri)
        buckets.setdefault(key, []).append((name, tri))

    leader = {name: name for name in names}

    def find(name):
        while leader[name] != name:
            name = leader[name]
        return name

    witnesses = []
    for key in sorted(buckets):
        bucket = buckets[key]
        for i in range(len(bucket)):
            for j in range(i + 1, len(bucket)):
                if find(bucket[i][0]) == find(bucket[j][0]):
                    continue
                path = bfs_connect(bucket[i][1], bucket[j][1], budget)
                if path is not None:
                    leader[find(bucket[j][0])] = find(bucket[i][0])
                    witnesses.append((bucket[i][0], bucket[j][0], path))

    groups = {}
    for name in names:
        groups.setdefault(find(name), []).append(name)
    out = []
    for root in sorted(groups, key=lambda r: groups[r][0]):
        members = tuple(sorted(groups[root]))
        wit = tuple(w for w in witnesses if w[0] in members)
        out.append(DedupeGroup(names=members, witnesses=wit))
    return DedupeReport(groups=tuple(out))
