"""Permutations of the four vertex labels {0,1,2,3} of a tetrahedron.

A face gluing is an affine identification of two triangular faces, and is
recorded as the bijection of vertex labels it induces (the label opposite
the source face maps to the label opposite the target face).  There are
exactly 24 such permutations; they are indexed 0..23 in lexicographic
order of their image tuples, so index 0 is the identity.
"""

from itertools import permutations


class Perm4:
    """A bijection of {0,1,2,3}, stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != [0, 1, 2, 3]:
            raise ValueError("not a permutation of {0,1,2,3}: %r" % (images,))
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm4 is immutable")

    def __call__(self, i):
        return self.images[i]

    def __getitem__(self, i):
        return self.images[i]

    def __iter__(self):
        return iter(self.images)

    def __eq__(self, other):
        return isinstance(other, Perm4) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Perm4(%d,%d,%d,%d)" % self.images

    def __mul__(self, other):
        """Composition: (p * q)(x) == p(q(x)), i.e. q acts first."""
        return Perm4(tuple(self.images[other.images[i]] for i in range(4)))

    def inverse(self):
        inv = [0] * 4
        for i, im in enumerate(self.images):
            inv[im] = i
        return Perm4(inv)

    def sign(self):
        """+1 for even permutations, -1 for odd."""
        s = 1
        im = self.images
        for i in range(4):
            for j in range(i + 1, 4):
                if im[i] > im[j]:
                    s = -s
        return s

    def index(self):
        """Rank of this permutation in lexicographic order (0..23)."""
        return _PERM_INDEX[self.images]

    @classmethod
    def from_index(cls, k):
        return ALL_PERMS[k]

    @classmethod
    def identity(cls):
        return IDENTITY

    @classmethod
    def transposition(cls, a, b):
        im = [0, 1, 2, 3]
        im[a], im[b] = im[b], im[a]
        return cls(im)


ALL_PERMS = tuple(Perm4(p) for p in permutations(range(4)))
_PERM_INDEX = {p.images: k for k, p in enumerate(ALL_PERMS)}
IDENTITY = ALL_PERMS[0]
