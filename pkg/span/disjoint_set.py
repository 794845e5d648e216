# https://en.wikipedia.org/wiki/Disjoint-set_data_structure

import collections
from typing import Dict, Generic, Hashable, Iterable, List, TypeVar

T = TypeVar("T", bound=Hashable)


class DisjointSet(Generic[T]):
    """Union-find over hashable labels; classes keep the order elements were added."""

    def __init__(self, elements: Iterable[T] = ()):
        self.parent: Dict[T, T] = {}
        self.rank: Dict[T, int] = {}
        self.order: Dict[T, int] = {}
        for e in elements:
            self.make_set(e)

    def make_set(self, e: T):
        if e in self.parent:
            return
        self.parent[e] = e
        self.rank[e] = 0
        self.order[e] = len(self.order)

    # find with path compression
    def find(self, e: T) -> T:
        self.make_set(e)
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    # union by rank
    def union(self, x: T, y: T) -> bool:
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return False
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1
        return True

    def classes(self) -> List[List[T]]:
        """Classes in order of their first element, members in insertion order."""
        groups = collections.defaultdict(list)
        for e in sorted(self.parent, key=self.order.__getitem__):
            groups[self.find(e)].append(e)
        return sorted(groups.values(), key=lambda members: self.order[members[0]])

