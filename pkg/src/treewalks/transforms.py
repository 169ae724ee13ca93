"""Tree rewiring moves: the end-to-end path move (kc_transform) that shifts
one endpoint's branches to the other, the leaf delete-clone move
(dc_transform), bare-path enumeration, and distance-valency.
"""

from __future__ import annotations

from dataclasses import dataclass

from .trees import CanonicalCode, Tree, canonical_code, distances_from, tree, tree_path

__all__ = [
    "BarePath",
    "Valency",
    "bare_paths",
    "dc_transform",
    "is_bare_path",
    "kc_moves",
    "kc_transform",
    "valency",
]


@dataclass(frozen=True)
class BarePath:
    """A path whose interior vertices all have degree two in the host tree.
    Single edges qualify vacuously."""

    vertices: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.vertices) - 1

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


@dataclass(frozen=True)
class Valency:
    """Number of vertices at one fixed distance from a vertex."""

    vertex: int
    r: int


def _path_if_bare(t: Tree, x: int, y: int) -> tuple[int, ...] | None:
    if x == y:
        return None
    path = tree_path(t, x, y)
    for v in path[1:-1]:
        if t.degree(v) != 2:
            return None
    return path


def is_bare_path(t: Tree, x: int, y: int) -> bool:
    return _path_if_bare(t, x, y) is not None


def bare_paths(t: Tree) -> list[BarePath]:
    """All bare paths, one per unordered endpoint pair (x < y), sorted."""
    if t.n < 2:
        raise ValueError("bare paths need n >= 2")
    out = []
    for x in range(t.n):
        for y in range(x + 1, t.n):
            path = _path_if_bare(t, x, y)
            if path is not None:
                out.append(BarePath(path))
    return out


def kc_transform(t: Tree, x: int, y: int) -> Tree:
    """Move every neighbor of y except its path-neighbor z over to x, along
    the bare path from x to y.  The result is again a tree on n vertices;
    with y a leaf the tree is unchanged."""
    path = _path_if_bare(t, x, y)
    if path is None:
        raise ValueError(f"({x}, {y}) does not span a bare path")
    z = path[-2]
    moved = [w for w in t.neighbors(y) if w != z]
    edges = set(t.edges)
    for w in moved:
        edges.discard((min(w, y), max(w, y)))
        edges.add((min(w, x), max(w, x)))
    return tree(t.n, edges)


def kc_moves(t: Tree) -> set[CanonicalCode]:
    """Canonical codes of every tree reachable by one end-to-end path move,
    over all bare paths and both orientations, deduplicated."""
    out: set[CanonicalCode] = set()
    for bp in bare_paths(t):
        x, y = bp.endpoints
        out.add(canonical_code(kc_transform(t, x, y)))
        out.add(canonical_code(kc_transform(t, y, x)))
    return out


def valency(t: Tree, v: int, ell: int) -> Valency:
    """r(v): the number of vertices at distance exactly ell from v."""
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    dist = distances_from(t, v)
    return Valency(vertex=v, r=sum(1 for d in dist if d == ell))


def dc_transform(t: Tree, v: int, w: int) -> Tree:
    """Delete leaf v and attach a clone of leaf w (reusing v's id) to w's
    unique neighbor.  Total on distinct leaf pairs with n >= 3; callers
    enforce any valency conditions themselves."""
    if v == w:
        raise ValueError("leaves must be distinct")
    if t.degree(v) != 1 or t.degree(w) != 1:
        raise ValueError(f"{v} and {w} must both be leaves")
    if t.n < 3:
        raise ValueError("delete-clone needs n >= 3")
    old_parent = t.neighbors(v)[0]
    new_parent = t.neighbors(w)[0]
    edges = set(t.edges)
    edges.discard((min(v, old_parent), max(v, old_parent)))
    edges.add((min(v, new_parent), max(v, new_parent)))
    return tree(t.n, edges)
