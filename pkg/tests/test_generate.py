import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treewalks.generate import (
    FamilySpec,
    all_labeled_trees,
    broom,
    double_broom_paths,
    double_broom_walks,
    enumerate_free_trees,
    from_pruefer,
    make_family,
    p_broom,
    path_tree,
    star_tree,
    to_pruefer,
)
from treewalks.trees import canonical_code, is_isomorphic, tree

from conftest import trees

# computed by Pruefer enumeration plus canonical deduplication (see
# test_free_counts_match_pruefer_oracle), not copied from anywhere
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106)


class TestPruefer:
    def test_n2_empty_sequence(self):
        assert from_pruefer((), 2) == tree(2, [(0, 1)])

    def test_repeated_symbol_gives_star(self):
        assert from_pruefer((0, 0, 0), 5) == star_tree(5)

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            from_pruefer((0, 1), 5)

    def test_out_of_range_entry(self):
        with pytest.raises(ValueError):
            from_pruefer((0, 9, 0), 5)

    def test_all_sequences_n4(self):
        all_trees = [from_pruefer(seq, 4) for seq in itertools.product(range(4), repeat=2)]
        assert len({t.edges for t in all_trees}) == 16
        assert len({canonical_code(t) for t in all_trees}) == 2

    @given(trees(min_n=2, max_n=9))
    def test_roundtrip(self, t):
        assert from_pruefer(to_pruefer(t), t.n) == t


class TestFreeTreeEnumeration:
    def test_n1(self):
        assert len(enumerate_free_trees(1)) == 1

    def test_n4_is_path_and_star(self):
        codes = {canonical_code(t) for t in enumerate_free_trees(4)}
        assert codes == {canonical_code(path_tree(4)), canonical_code(star_tree(4))}

    def test_counts(self):
        got = tuple(len(enumerate_free_trees(n)) for n in range(1, 11))
        assert got == FREE_TREE_COUNTS

    def test_free_counts_match_pruefer_oracle(self):
        # independent route: exhaustive labeled generation, dedupe by code
        for n in range(2, 8):
            oracle = len({canonical_code(t) for t in all_labeled_trees(n)})
            assert len(enumerate_free_trees(n)) == oracle

    def test_second_canonicalization_pass(self):
        # re-count n=7 using a brute-force canonical form (lexicographically
        # smallest relabeled edge set) instead of the production code
        def brute_canonical(t):
            return min(
                tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in t.edges))
                for p in itertools.permutations(range(t.n))
            )

        reps = enumerate_free_trees(7)
        assert len(reps) == 11
        assert len({brute_canonical(t) for t in reps}) == 11

    def test_sorted_and_deterministic(self):
        codes = [canonical_code(t) for t in enumerate_free_trees(8)]
        assert codes == sorted(codes)
        assert len(set(codes)) == len(codes)

    def test_limit(self):
        with pytest.raises(ValueError):
            enumerate_free_trees(13)


class TestFamilies:
    def test_broom_from_exact_rational_instance(self):
        # ck = 720 leaves, (2-c)k = 1280 path edges at c = 18/25, k = 1000
        t = broom(1280, 720)
        assert t.n == 2001
        assert t.degree(1280) == 720 + 1

    def test_double_broom_walks_order(self):
        for k in (2, 4, 10, 1000):
            assert double_broom_walks(k).n == 2 * k + 1

    def test_double_broom_paths_shape(self):
        t = double_broom_paths(8, 5)
        assert t.n == 8
        assert t.degree(0) == 1 + 2 and t.degree(3) == 1 + 2

    def test_p_broom_structure(self):
        t = p_broom(16, 4, 3)
        assert t.n == 16
        assert t.degree(0) == 3
        leaf_parents = sorted(t.neighbors(v)[0] for v in t.leaves())
        counts = {p: leaf_parents.count(p) for p in set(leaf_parents)}
        assert sorted(counts.values()) == [4, 4, 4]

    def test_p_broom_leaf_distribution_balanced(self):
        t = p_broom(14, 6, 2)
        per_leg = sorted(
            sum(1 for v in t.leaves() if t.neighbors(v)[0] == end)
            for end in {t.neighbors(v)[0] for v in t.leaves()}
        )
        assert per_leg[-1] - per_leg[0] <= 1

    def test_p_broom_infeasible(self):
        with pytest.raises(ValueError):
            p_broom(4, 4, 3)
        with pytest.raises(ValueError):
            p_broom(16, 5, 2)

    def test_degenerate_double_broom_is_path(self):
        assert is_isomorphic(double_broom_paths(5, 4), path_tree(5))

    def test_make_family_dispatch(self):
        assert make_family(FamilySpec("path", {"n": 5})) == path_tree(5)
        assert make_family(FamilySpec("star", {"n": 5})) == star_tree(5)
        assert make_family(FamilySpec("broom", {"path_length": 2, "leaves": 2})) == broom(2, 2)
        assert make_family(FamilySpec("p_broom", {"n": 16, "ell": 4, "p": 3})) == p_broom(16, 4, 3)

    def test_make_family_unknown_kind(self):
        with pytest.raises(ValueError):
            make_family(FamilySpec("wheel", {"n": 5}))

    @given(st.integers(0, 6), st.integers(0, 6))
    @settings(deadline=None)
    def test_broom_valid(self, path_length, leaves):
        if path_length == 0 and leaves == 0:
            t = broom(0, 0)
            assert t.n == 1
        else:
            t = broom(path_length, leaves)
            assert t.n == path_length + leaves + 1
