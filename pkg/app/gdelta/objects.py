"""The objects [n]_k of the isovariant simplex category and their vertex order."""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Tuple

from exceptions import InvalidObject, NonCanonicalVertex

E = "e"
S = "s"
BRANCHES = (E, S)


@dataclass(frozen=True, order=True)
class Vertex:
    """A vertex [index, branch]; real vertices always carry branch e."""

    index: int
    branch: str = E

    def swapped(self) -> "Vertex":
        return Vertex(self.index, S if self.branch == E else E)

    def __str__(self) -> str:
        return f"({self.index},{self.branch})"


@dataclass(frozen=True, order=True)
class SimplexObject:
    """The C2-poset [n]_k: indices below k come in free pairs, the rest are fixed."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.k <= self.n + 1:
            raise InvalidObject(f"no object [{self.n}]_{self.k}")

    def __str__(self) -> str:
        return f"[{self.n}]_{self.k}"

    @property
    def size(self) -> int:
        return self.n + 1 + self.k

    def is_real(self, index: int) -> bool:
        return index >= self.k

    def vertex(self, index: int, branch: str = E) -> Vertex:
        """Canonical vertex, folding the s branch onto e for real indices."""
        if not 0 <= index <= self.n or branch not in BRANCHES:
            raise NonCanonicalVertex(f"({index},{branch}) is not a vertex of {self}")
        return Vertex(index, E if index >= self.k else branch)

    def check(self, v: Vertex) -> Vertex:
        if not 0 <= v.index <= self.n or v.branch not in BRANCHES:
            raise NonCanonicalVertex(f"{v} is not a vertex of {self}")
        if v.index >= self.k and v.branch != E:
            raise NonCanonicalVertex(f"{v} is real in {self} and must use branch e")
        return v

    def swap(self, v: Vertex) -> Vertex:
        if v.index >= self.k:
            return v
        return v.swapped()

    @cached_property
    def vertices(self) -> Tuple[Vertex, ...]:
        free = [Vertex(j, b) for j in range(self.k) for b in BRANCHES]
        real = [Vertex(j) for j in range(self.k, self.n + 1)]
        return tuple(free + real)

    def leq(self, u: Vertex, v: Vertex) -> bool:
        self.check(u)
        self.check(v)
        return u.index <= v.index and (u.branch == v.branch or v.index >= self.k)


def vertices(obj: SimplexObject) -> List[Vertex]:
    """Canonical vertices: free pairs first (e before s), then real vertices."""
    return list(obj.vertices)


def leq(obj: SimplexObject, u: Vertex, v: Vertex) -> bool:
    return obj.leq(u, v)
