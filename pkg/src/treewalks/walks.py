"""Exact counting of walks, closed walks, fixed-length paths, and the
distance sum, plus a brute-force enumeration oracle.

All counts are directed walks (a walk and its reverse are distinct) and use
arbitrary-precision integers; there is no floating point anywhere here.
"""

from __future__ import annotations

from collections import deque

from .trees import Tree, distances_from

__all__ = [
    "Walk",
    "count_closed_walks",
    "count_ell_paths",
    "count_walks",
    "enumerate_walks",
    "wiener",
]

Walk = tuple[int, ...]


def _require_positive_length(length: int) -> None:
    # length-0 walks exist (one per vertex) but the counting APIs are
    # deliberately restricted to length >= 1
    if length < 1:
        raise ValueError(f"walk length must be >= 1, got {length}")


def count_walks(t: Tree, length: int) -> int:
    """Number of directed walks of `length` steps: the sum of all entries of
    the length-th adjacency power, by iterated exact vector multiply."""
    _require_positive_length(length)
    adj = t.adjacency
    vec = [1] * t.n
    for _ in range(length):
        vec = [sum(vec[u] for u in adj[v]) for v in range(t.n)]
    return sum(vec)


def _step_vector(adj, vec: dict[int, int]) -> dict[int, int]:
    nxt: dict[int, int] = {}
    for v, c in vec.items():
        for u in adj[v]:
            nxt[u] = nxt.get(u, 0) + c
    return nxt


def _source_classes(t: Tree) -> list[tuple[int, int]]:
    """(representative, multiplicity) pairs: leaves hanging on a common
    neighbor are interchangeable, so one of them stands for the class."""
    classes: list[tuple[int, int]] = []
    leaf_groups: dict[int, list[int]] = {}
    for v in range(t.n):
        nbrs = t.adjacency[v]
        if len(nbrs) == 1 and t.n > 1:
            leaf_groups.setdefault(nbrs[0], []).append(v)
        else:
            classes.append((v, 1))
    for group in leaf_groups.values():
        classes.append((min(group), len(group)))
    return classes


def count_closed_walks(t: Tree, length: int) -> int:
    """Number of directed closed walks of `length` steps: the trace of the
    length-th adjacency power.

    Even lengths use the half-power identity trace(A^(2m)) = sum over
    sources of the squared entries of A^m applied to the source indicator.
    """
    _require_positive_length(length)
    adj = t.adjacency
    total = 0
    if length % 2 == 0:
        half = length // 2
        for source, mult in _source_classes(t):
            vec = {source: 1}
            for _ in range(half):
                vec = _step_vector(adj, vec)
            total += mult * sum(c * c for c in vec.values())
    else:
        for source, mult in _source_classes(t):
            vec = {source: 1}
            for _ in range(length):
                vec = _step_vector(adj, vec)
            total += mult * vec.get(source, 0)
    return total


def enumerate_walks(
    t: Tree, length: int, start: int | None = None, end: int | None = None
) -> list[Walk]:
    """All walks of exactly `length` steps matching the optional endpoint
    constraints, in lexicographic vertex order.  This is the enumeration
    oracle; counts must agree with the matrix-power counters."""
    if length < 0:
        raise ValueError(f"walk length must be >= 0, got {length}")
    if start is not None:
        t._check_vertex(start)
    if end is not None:
        t._check_vertex(end)
    sources = [start] if start is not None else list(range(t.n))
    adj = t.adjacency
    out: list[Walk] = []
    for s in sources:
        stack: list[tuple[tuple[int, ...], int]] = [((s,), 0)]
        while stack:
            walk, depth = stack.pop()
            if depth == length:
                if end is None or walk[-1] == end:
                    out.append(walk)
                continue
            for u in reversed(adj[walk[-1]]):
                stack.append((walk + (u,), depth + 1))
    return out


def count_ell_paths(t: Tree, length: int) -> int:
    """Number of paths with exactly `length` edges.  In a tree every vertex
    pair determines one path, so this is the number of unordered pairs at
    distance `length`."""
    _require_positive_length(length)
    total = 0
    for v in range(t.n):
        total += sum(1 for d in distances_from(t, v) if d == length)
    assert total % 2 == 0
    return total // 2


def wiener(t: Tree) -> int:
    """Sum of distances over unordered vertex pairs, via the edge-split
    identity: each edge contributes (size of one side) * (size of the other).
    """
    if t.n == 1:
        return 0
    adj = t.adjacency
    parent = [-1] * t.n
    order = [0]
    parent[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if parent[y] < 0:
                parent[y] = x
                order.append(y)
                queue.append(y)
    size = [1] * t.n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    return sum(size[v] * (t.n - size[v]) for v in order[1:])
