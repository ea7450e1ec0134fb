"""Union-find with canonical minimum representatives.

Quotient sets everywhere in this package are computed by merging; the
representative of a class is the least member under a fixed total order,
so outputs are stable across merge schedules.
"""


class UnionFind:
    """Disjoint sets over arbitrary hashable keys.

    The order in which keys are first added fixes the total order used
    to pick class representatives.
    """

    def __init__(self, keys=()):
        self.parent = {}
        self.rank = {}
        self.order = {}
        for k in keys:
            self.add(k)

    def add(self, k):
        if k not in self.parent:
            self.parent[k] = k
            self.rank[k] = 0
            self.order[k] = len(self.order)
        return k

    def find(self, k):
        root = k
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[k] != root:
            self.parent[k], k = root, self.parent[k]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return ra

    def classes(self):
        """Partition as a list of tuples, each sorted by insertion order,
        the list itself sorted by the representative's insertion order."""
        buckets = {}
        for k in self.parent:
            buckets.setdefault(self.find(k), []).append(k)
        out = []
        for members in buckets.values():
            members.sort(key=lambda k: self.order[k])
            out.append(tuple(members))
        out.sort(key=lambda c: self.order[c[0]])
        return out

    def representative(self, k):
        """Least member (insertion order) of k's class."""
        root = self.find(k)
        best = None
        for j in self.parent:
            if self.find(j) == root:
                if best is None or self.order[j] < self.order[best]:
                    best = j
        return best

    def representatives(self):
        """Map every key to the least member of its class."""
        rep_of_root = {}
        for c in self.classes():
            root = self.find(c[0])
            rep_of_root[root] = c[0]
        return {k: rep_of_root[self.find(k)] for k in self.parent}
