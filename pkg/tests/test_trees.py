import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treewalks.generate import all_labeled_trees, p_broom, path_tree, star_tree
from treewalks.trees import (
    Tree,
    canonical_code,
    center,
    diameter,
    distance,
    distances_from,
    format_tree_text,
    is_isomorphic,
    parse_tree_text,
    to_dot,
    tree,
    tree_path,
)

from conftest import trees


def relabel(t: Tree, perm: list[int]) -> Tree:
    return tree(t.n, [(perm[u], perm[v]) for u, v in t.edges])


def brute_force_isomorphic(t1: Tree, t2: Tree) -> bool:
    """Oracle: try every vertex bijection."""
    if t1.n != t2.n:
        return False
    target = t2.edges
    for perm in itertools.permutations(range(t1.n)):
        if frozenset((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in t1.edges) == target:
            return True
    return False


class TestConstruction:
    def test_single_vertex(self):
        t = tree(1, [])
        assert t.n == 1 and not t.edges

    def test_wrong_edge_count(self):
        with pytest.raises(ValueError):
            tree(4, [(0, 1), (1, 2)])

    def test_duplicate_edges_rejected(self):
        with pytest.raises(ValueError):
            tree(3, [(0, 1), (1, 0)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            tree(3, [(0, 1), (2, 2)])

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            tree(4, [(0, 1), (2, 3), (0, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            tree(3, [(0, 1), (1, 5)])

    @given(trees(max_n=9))
    def test_invariants(self, t):
        assert len(t.edges) == t.n - 1
        assert all(distances_from(t, 0)[v] >= 0 for v in range(t.n))


class TestDistance:
    def test_path_endpoints(self, p4):
        assert distance(p4, 0, 3) == 3

    def test_same_vertex(self, p4):
        assert all(distance(p4, v, v) == 0 for v in range(4))

    def test_star_leaves(self):
        assert distance(star_tree(5), 1, 2) == 2

    def test_out_of_range(self, p4):
        with pytest.raises(ValueError):
            distance(p4, 0, 7)

    @given(trees(min_n=2, max_n=8), st.data())
    def test_tree_metric_along_path(self, t, data):
        u = data.draw(st.integers(0, t.n - 1))
        v = data.draw(st.integers(0, t.n - 1))
        path = tree_path(t, u, v)
        w = data.draw(st.sampled_from(list(path)))
        assert distance(t, u, v) == distance(t, u, w) + distance(t, w, v)

    @given(trees(min_n=2, max_n=8), st.data())
    def test_symmetry(self, t, data):
        u = data.draw(st.integers(0, t.n - 1))
        v = data.draw(st.integers(0, t.n - 1))
        assert distance(t, u, v) == distance(t, v, u)


class TestDiameter:
    def test_star(self):
        assert all(diameter(star_tree(n)) == 2 for n in range(3, 8))

    def test_path(self):
        assert all(diameter(path_tree(n)) == n - 1 for n in range(1, 9))

    def test_p_broom_reaches_target_length(self):
        # frozen from the all-pairs oracle below
        t = p_broom(16, 4, 3)
        assert diameter(t) == 4
        all_pairs = max(
            distance(t, u, v) for u in range(t.n) for v in range(t.n)
        )
        assert all_pairs == 4

    @given(trees(min_n=2, max_n=8))
    def test_matches_all_pairs(self, t):
        assert diameter(t) == max(
            max(distances_from(t, v)) for v in range(t.n)
        )


class TestCanonicalCode:
    def test_relabeling_invariance_path5(self):
        t = path_tree(5)
        for perm in ([4, 3, 2, 1, 0], [2, 0, 1, 4, 3], [1, 3, 0, 2, 4]):
            relabeled = relabel(t, perm)
            if is_isomorphic(t, relabeled):
                assert canonical_code(t) == canonical_code(relabeled)

    def test_star_vs_path(self, p4, s4):
        assert canonical_code(p4) != canonical_code(s4)

    def test_all_pruefer_trees_n5_give_three_codes(self):
        codes = {canonical_code(t) for t in all_labeled_trees(5)}
        assert len(codes) == 3

    @given(trees(min_n=1, max_n=8), st.data())
    @settings(deadline=None)
    def test_relabeling_invariance(self, t, data):
        perm = data.draw(st.permutations(list(range(t.n))))
        assert canonical_code(t) == canonical_code(relabel(t, list(perm)))

    def test_complete_invariant_small(self):
        # codes agree exactly with brute-force isomorphism classes
        for n in range(2, 7):
            trees_n = list(all_labeled_trees(n))[:120]
            by_code = {}
            for t in trees_n:
                by_code.setdefault(canonical_code(t), []).append(t)
            reps = [group[0] for group in by_code.values()]
            for r1, r2 in itertools.combinations(reps, 2):
                assert not brute_force_isomorphic(r1, r2)
            for group in by_code.values():
                for t in group[1:3]:
                    assert brute_force_isomorphic(group[0], t)

    def test_center_of_even_path_is_edge(self):
        assert center(path_tree(4)) == (1, 2)
        assert center(path_tree(5)) == (2,)


class TestIsomorphism:
    def test_relabeled_true(self, p4):
        assert is_isomorphic(p4, relabel(p4, [3, 1, 0, 2]))

    def test_path_vs_star_false(self, p4, s4):
        assert not is_isomorphic(p4, s4)


class TestTextFormat:
    def test_roundtrip(self, p4):
        assert parse_tree_text(format_tree_text(p4)) == p4

    def test_malformed_reports_line(self):
        with pytest.raises(ValueError, match="line 3"):
            parse_tree_text("3\n0 1\n1 x\n")

    def test_bad_header(self):
        with pytest.raises(ValueError, match="line 1"):
            parse_tree_text("nope\n0 1\n")

    def test_dot_output(self, p4):
        dot = to_dot(p4)
        assert dot.startswith("graph") and "0 -- 1" in dot
