"""Immutable labeled trees on dense integer vertices, with exact metrics
and a canonical form that is a complete isomorphism invariant.

Vertices are 0..n-1.  Every value here is immutable after construction and
safe to share between concurrent workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

__all__ = [
    "CanonicalCode",
    "Tree",
    "canonical_code",
    "center",
    "diameter",
    "distance",
    "distances_from",
    "format_tree_text",
    "is_isomorphic",
    "parse_tree_text",
    "to_dot",
    "tree_path",
]

# A canonical code is a nested-parenthesis string; equal codes iff isomorphic.
CanonicalCode = str

Edge = tuple[int, int]


@dataclass(frozen=True)
class Tree:
    """A tree given by its vertex count and edge set.

    Construction validates the invariants: exactly n-1 distinct edges over
    {0..n-1}, no self-loops, connected.  Edges are normalized to (u, v)
    tuples with u < v.
    """

    n: int
    edges: frozenset

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e!r} out of range for n={self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        if len(norm) != self.n - 1:
            raise ValueError(
                f"a tree on {self.n} vertices needs exactly {self.n - 1} "
                f"distinct edges, got {len(norm)}"
            )
        object.__setattr__(self, "edges", frozenset(norm))
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(
            self, "_adj", tuple(tuple(sorted(nbrs)) for nbrs in adj)
        )
        if self.n > 1:
            seen = [False] * self.n
            seen[0] = True
            queue = deque([0])
            count = 1
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        count += 1
                        queue.append(y)
            if count != self.n:
                raise ValueError("edge set is not connected")

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj  # type: ignore[attr-defined]

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]  # type: ignore[attr-defined]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.degree(v) == 1)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:  # compact, deterministic
        return f"Tree(n={self.n}, edges={sorted(self.edges)})"


def tree(n: int, edges: Iterable[Edge]) -> Tree:
    """Convenience constructor accepting any iterable of edge pairs."""
    return Tree(n, frozenset(tuple(e) for e in edges))


def distances_from(t: Tree, source: int) -> list[int]:
    """BFS distances from `source` to every vertex."""
    t._check_vertex(source)
    dist = [-1] * t.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in t.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(t: Tree, u: int, v: int) -> int:
    """Length of the unique u-v path."""
    t._check_vertex(u)
    t._check_vertex(v)
    if u == v:
        return 0
    return distances_from(t, u)[v]


def diameter(t: Tree) -> int:
    """Maximum pairwise distance (double-sweep BFS)."""
    if t.n == 1:
        return 0
    d0 = distances_from(t, 0)
    far = max(range(t.n), key=lambda v: d0[v])
    return max(distances_from(t, far))


def tree_path(t: Tree, u: int, v: int) -> tuple[int, ...]:
    """The unique path u .. v as a vertex tuple."""
    t._check_vertex(u)
    t._check_vertex(v)
    if u == v:
        return (u,)
    parent = [-1] * t.n
    parent[u] = u
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in t.adjacency[x]:
            if parent[y] < 0:
                parent[y] = x
                queue.append(y)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def center(t: Tree) -> tuple[int, ...]:
    """The one or two middle vertices, found by iterative leaf removal."""
    if t.n <= 2:
        return tuple(range(t.n))
    degree = [t.degree(v) for v in range(t.n)]
    layer = [v for v in range(t.n) if degree[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for u in t.adjacency[v]:
                if degree[u] > 1:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    return tuple(sorted(layer))


def _rooted_code(t: Tree, root: int) -> str:
    """Nested-parenthesis encoding of the tree rooted at `root`, with
    children sorted; invariant under relabeling."""
    parent = [-1] * t.n
    parent[root] = root
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in t.adjacency[x]:
            if parent[y] < 0:
                parent[y] = x
                order.append(y)
                queue.append(y)
    codes: list[str] = [""] * t.n
    children: list[list[int]] = [[] for _ in range(t.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    for v in reversed(order):
        codes[v] = "(" + "".join(sorted(codes[c] for c in children[v])) + ")"
    return codes[root]


@lru_cache(maxsize=65536)
def canonical_code(t: Tree) -> CanonicalCode:
    """A complete isomorphism invariant: rooted encoding at the center,
    taking the lexicographic minimum over the two rootings when the center
    is an edge."""
    mids = center(t)
    return min(_rooted_code(t, r) for r in mids)


def is_isomorphic(t1: Tree, t2: Tree) -> bool:
    return t1.n == t2.n and canonical_code(t1) == canonical_code(t2)


# Tree text format: first line `n`, then n-1 lines `u v`, 0-based, LF.

def format_tree_text(t: Tree) -> str:
    lines = [str(t.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(t.edges))
    return "\n".join(lines) + "\n"


def parse_tree_text(text: str) -> Tree:
    """Parse the tree text format; malformed input reports the line number."""
    lines = text.splitlines()
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        raise ValueError("line 1: empty input, expected vertex count")
    lineno, head = rows[0]
    try:
        n = int(head)
    except ValueError:
        raise ValueError(f"line {lineno}: expected vertex count, got {head!r}") from None
    edges = []
    for lineno, row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {row!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex in {row!r}") from None
        edges.append((u, v))
    try:
        return tree(n, edges)
    except ValueError as exc:
        raise ValueError(f"line 1: invalid tree: {exc}") from None


def to_dot(t: Tree, edge_labels: dict | None = None, name: str = "tree") -> str:
    """DOT serialization; optional per-edge labels keyed by (u, v), u < v."""
    lines = [f"graph {name} {{"]
    for u, v in sorted(t.edges):
        if edge_labels and (u, v) in edge_labels:
            lines.append(f'  {u} -- {v} [label="{edge_labels[(u, v)]}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
