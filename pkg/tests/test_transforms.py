import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treewalks.generate import broom, enumerate_free_trees, path_tree, star_tree
from treewalks.transforms import (
    bare_paths,
    dc_transform,
    is_bare_path,
    kc_moves,
    kc_transform,
    valency,
)
from treewalks.trees import canonical_code, distance, is_isomorphic, tree
from treewalks.walks import count_closed_walks, count_ell_paths

from conftest import trees


class TestBarePaths:
    def test_path_graph_all_pairs(self):
        for n in range(2, 8):
            assert len(bare_paths(path_tree(n))) == n * (n - 1) // 2

    def test_star_only_edges(self):
        for n in range(4, 8):
            paths = bare_paths(star_tree(n))
            assert len(paths) == n - 1
            assert all(bp.k == 1 for bp in paths)

    def test_small_broom(self):
        # 5-vertex broom: handle pairs {01, 02, 12} plus star edges {2-3, 2-4}
        got = {bp.vertices for bp in bare_paths(broom(2, 2))}
        assert got == {(0, 1), (0, 1, 2), (1, 2), (2, 3), (2, 4)}

    def test_interior_degree_two(self):
        for t in enumerate_free_trees(7):
            for bp in bare_paths(t):
                assert all(t.degree(v) == 2 for v in bp.vertices[1:-1])


class TestKcTransform:
    def test_path4_to_star(self, p4):
        moved = kc_transform(p4, 1, 2)
        assert is_isomorphic(moved, star_tree(4))
        assert moved.edges == tree(4, [(0, 1), (1, 2), (1, 3)]).edges

    def test_leaf_target_is_identity(self, p4):
        assert kc_transform(p4, 1, 0) == p4

    def test_star_leaf_center(self):
        s5 = star_tree(5)
        assert is_isomorphic(kc_transform(s5, 1, 0), s5)

    def test_non_bare_path_rejected(self):
        with pytest.raises(ValueError):
            kc_transform(star_tree(5), 1, 2)

    def test_same_vertex_rejected(self, p4):
        with pytest.raises(ValueError):
            kc_transform(p4, 1, 1)

    def test_symmetry_small(self):
        # both orientations give isomorphic trees, all trees n <= 8
        for n in range(2, 9):
            for t in enumerate_free_trees(n):
                for bp in bare_paths(t):
                    x, y = bp.endpoints
                    assert is_isomorphic(kc_transform(t, x, y), kc_transform(t, y, x))

    @given(trees(min_n=2, max_n=8), st.data())
    @settings(deadline=None)
    def test_output_is_valid_tree(self, t, data):
        bp = data.draw(st.sampled_from(bare_paths(t)))
        moved = kc_transform(t, *bp.endpoints)
        assert moved.n == t.n
        assert len(moved.edges) == t.n - 1


class TestKcMoves:
    def test_star_fixed_point(self):
        s5 = star_tree(5)
        assert kc_moves(s5) == {canonical_code(s5)}

    def test_path4_moves(self, p4, s4):
        assert kc_moves(p4) == {canonical_code(p4), canonical_code(s4)}

    def test_non_star_has_improving_move(self):
        for n in range(4, 10):
            by_code = {canonical_code(t): t for t in enumerate_free_trees(n)}
            star_code = canonical_code(star_tree(n))
            for code, t in by_code.items():
                if code == star_code:
                    continue
                base = count_closed_walks(t, 4)
                assert any(
                    count_closed_walks(by_code[m], 4) > base
                    for m in kc_moves(t)
                    if m in by_code
                )


class TestValency:
    def test_path_endpoint(self):
        for n in range(2, 8):
            assert valency(path_tree(n), 0, n - 1).r == 1

    def test_star_center(self):
        for n in range(3, 8):
            assert valency(star_tree(n), 0, 1).r == n - 1

    def test_double_counting(self):
        for n in range(2, 9):
            for t in enumerate_free_trees(n):
                for ell in range(1, 8):
                    total = sum(valency(t, v, ell).r for v in range(t.n))
                    assert total == 2 * count_ell_paths(t, ell)


class TestDcTransform:
    def test_path_to_star(self):
        t = tree(4, [(0, 1), (1, 2), (2, 3)])
        moved = dc_transform(t, 0, 3)
        assert moved.edges == tree(4, [(1, 2), (2, 3), (0, 2)]).edges

    def test_star_stays_star(self):
        s5 = star_tree(5)
        assert is_isomorphic(dc_transform(s5, 1, 2), s5)

    def test_non_leaf_rejected(self, p4):
        with pytest.raises(ValueError):
            dc_transform(p4, 1, 3)

    def test_same_leaf_rejected(self, p4):
        with pytest.raises(ValueError):
            dc_transform(p4, 0, 0)

    def test_two_vertices_rejected(self):
        with pytest.raises(ValueError):
            dc_transform(tree(2, [(0, 1)]), 0, 1)

    def test_gain_identity(self):
        # R(T') - R(T) = r(w) - r(v) for leaves at distance other than ell
        for n in range(3, 9):
            for t in enumerate_free_trees(n):
                leaves = t.leaves()
                for ell in range(3, 8):
                    base = count_ell_paths(t, ell)
                    for v in leaves:
                        for w in leaves:
                            if v == w or distance(t, v, w) == ell:
                                continue
                            gain = count_ell_paths(dc_transform(t, v, w), ell) - base
                            assert gain == valency(t, w, ell).r - valency(t, v, ell).r
