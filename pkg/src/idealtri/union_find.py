"""Disjoint-set forest over hashable keys, with path compression."""


class UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, k):
        if k not in self.parent:
            self.parent[k] = k
        return k

    def find(self, k):
        self.add(k)
        root = k
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[k] != root:
            self.parent[k], k = root, self.parent[k]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
        return ra

    def same(self, a, b):
        return self.find(a) == self.find(b)

    def classes(self):
        """Partition of all added keys, each class sorted, classes ordered
        by their smallest member.  Keys must be mutually comparable."""
        groups = {}
        for k in self.parent:
            groups.setdefault(self.find(k), []).append(k)
        out = [sorted(g) for g in groups.values()]
        out.sort(key=lambda g: g[0])
        return out
