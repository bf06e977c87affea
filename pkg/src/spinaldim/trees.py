"""Spherically homogeneous rooted trees given by a valency sequence.

A tree is described by the finite prefix (l_0, ..., l_{N-1}) of its valency
sequence: every vertex at distance n from the root has l_n children.  A
vertex at level n is a path (x_1, ..., x_n) of 1-based letters with
1 <= x_i <= l_{i-1}.  Level n holds m_n = l_0 * ... * l_{n-1} vertices, and
the mixed-radix index below enumerates them in lexicographic order.

Everything here is immutable and 1-based, matching cycle notation for the
permutations that act on the letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

Vertex = tuple[int, ...]


@dataclass(frozen=True)
class TreeSequence:
    """Finite prefix of a valency sequence, each entry >= 3.

    ``extends`` is an optional marker naming the rule that produced the
    prefix when it comes from a synthesized infinite sequence.
    """

    valencies: tuple[int, ...]
    extends: str | None = None

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.valencies)
        object.__setattr__(self, "valencies", vals)
        for v in vals:
            if v < 3:
                raise ValueError(f"valency {v} < 3 makes the level action trivial")

    @classmethod
    def from_text(cls, text: str, extends: str | None = None) -> "TreeSequence":
        """Parse a comma-separated list such as "5,13,133"."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise ValueError("empty valency sequence")
        return cls(tuple(int(p) for p in parts), extends)

    def to_text(self) -> str:
        return ",".join(str(v) for v in self.valencies)

    def __len__(self) -> int:
        return len(self.valencies)

    def __iter__(self) -> Iterator[int]:
        return iter(self.valencies)

    def __getitem__(self, i: int) -> int:
        return self.valencies[i]

    def _check_level(self, n: int) -> None:
        if not 0 <= n <= len(self.valencies):
            raise ValueError(
                f"level {n} out of range for sequence of length {len(self.valencies)}"
            )

    def level_size(self, n: int) -> int:
        """Number of vertices at level n: the product of the first n valencies."""
        self._check_level(n)
        m = 1
        for v in self.valencies[:n]:
            m *= v
        return m

    def subtree_sequence(self, n: int) -> "TreeSequence":
        """The valency sequence (l_n, l_{n+1}, ...) of a level-n subtree."""
        self._check_level(n)
        return TreeSequence(self.valencies[n:])

    def validate_vertex(self, v: Vertex) -> None:
        self._check_level(len(v))
        for i, x in enumerate(v):
            if not 1 <= x <= self.valencies[i]:
                raise ValueError(f"letter {x} at position {i} outside 1..{self.valencies[i]}")

    def vertex_index(self, v: Vertex) -> int:
        """Position of v in the lexicographic enumeration of its level, 1-based."""
        self.validate_vertex(v)
        idx = 0
        for i, x in enumerate(v):
            idx = idx * self.valencies[i] + (x - 1)
        return idx + 1

    def index_vertex(self, n: int, i: int) -> Vertex:
        """Inverse of vertex_index: the i-th vertex of level n, 1 <= i <= m_n."""
        size = self.level_size(n)
        if not 1 <= i <= size:
            raise ValueError(f"index {i} outside 1..{size} at level {n}")
        rem = i - 1
        letters = []
        for val in reversed(self.valencies[:n]):
            rem, digit = divmod(rem, val)
            letters.append(digit + 1)
        return tuple(reversed(letters))

    def vertices(self, n: int) -> Iterator[Vertex]:
        """All level-n vertices in lexicographic order."""
        self._check_level(n)
        ranges = [range(1, v + 1) for v in self.valencies[:n]]
        return iter(product(*ranges))
