"""Disjoint sets with path compression, used to glue interval cells."""

import typing

DataType = typing.TypeVar("DataType", bound=typing.Hashable)


class UnionFind(typing.Generic[DataType]):
    def __init__(self, initial_items: typing.Optional[typing.Iterable[DataType]] = None):
        self._parent: typing.Dict[DataType, DataType] = {}
        self._rank: typing.Dict[DataType, int] = {}
        for item in initial_items or ():
            self.add(item)

    def __contains__(self, item: DataType) -> bool:
        return item in self._parent

    def __len__(self) -> int:
        return len(self._parent)

    def add(self, item: DataType) -> None:
        if item not in self._parent:
            self._parent[item] = item
            self._rank[item] = 0

    def find(self, item: DataType) -> DataType:
        path = []
        while self._parent[item] != item:
            path.append(item)
            item = self._parent[item]
        for node in path:
            self._parent[node] = item
        return item

    def union(self, a: DataType, b: DataType, root: typing.Optional[DataType] = None) -> DataType:
        """Merge the classes of a and b; `root`, if given, becomes the representative."""
        self.add(a)
        self.add(b)
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if root is not None and self.find(root) == rb:
            ra, rb = rb, ra
        elif root is None and self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._rank[ra] = max(self._rank[ra], self._rank[rb] + 1)
        return ra

    def classes(self) -> typing.Dict[DataType, typing.List[DataType]]:
        groups: typing.Dict[DataType, typing.List[DataType]] = {}
        for item in self._parent:
            groups.setdefault(self.find(item), []).append(item)
        return groups
