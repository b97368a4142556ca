from typing import Dict, Generic, Hashable, Iterable, TypeVar

T = TypeVar("T", bound=Hashable)


class DisjointSet(Generic[T]):
    """Union-find avec compression de chemin et union par rang"""

    def __init__(self, elements: Iterable[T] = ()):
        self.parent: Dict[T, T] = {}
        self.rank: Dict[T, int] = {}
        for e in elements:
            self.make_set(e)

    def make_set(self, e: T):
        if e in self.parent:
            return
        self.parent[e] = e
        self.rank[e] = 0

    def find(self, e: T) -> T:
        self.make_set(e)
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    def union(self, x: T, y: T):
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1

    def count(self) -> int:
        """Nombre de classes"""
        return sum(1 for e in self.parent if self.parent[e] == e)
