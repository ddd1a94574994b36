"""Canonical codes, enumeration, counting, and random generation."""

import pytest
from hypothesis import given, settings, strategies as st

from treereg.graphs import TreeWitness, from_edge_list, path_graph, star_graph
from treereg.trees import (
    TreeCode,
    canonical_code,
    count_trees,
    enumerate_codes,
    enumerate_trees,
    graph_from_code,
    max_order_cap,
    prufer_to_edges,
    random_tree,
    tree_from_code,
)
from treereg.tables import TABLE4_TREES

from conftest import prufer_dedup_codes, relabel, tree_witnesses

KNOWN_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


class TestCanonicalCode:
    def test_p4_under_reversed_labeling(self):
        g1 = path_graph(4)
        g2 = relabel(g1, [3, 2, 1, 0])
        assert canonical_code(TreeWitness(g1)) == canonical_code(TreeWitness(g2))

    def test_star_vs_path_distinct(self):
        assert canonical_code(TreeWitness(star_graph(3))) != canonical_code(
            TreeWitness(path_graph(4))
        )

    def test_table4_trees_distinct(self):
        codes = {
            canonical_code(TreeWitness(from_edge_list(edges, 9)))
            for edges in TABLE4_TREES
        }
        assert len(codes) == 2

    def test_non_tree_rejected(self):
        with pytest.raises(ValueError, match="not a tree"):
            canonical_code(from_edge_list([(0, 1), (1, 2), (0, 2)], 3))

    @given(tree_witnesses(max_order=10), st.data())
    def test_invariant_under_relabeling(self, t, data):
        perm = data.draw(st.permutations(range(t.order)))
        assert canonical_code(t) == canonical_code(
            TreeWitness(relabel(t.graph, list(perm)))
        )

    @given(tree_witnesses(max_order=12))
    def test_code_length_is_order(self, t):
        assert len(canonical_code(t)) == t.order

    @given(tree_witnesses(max_order=12))
    def test_rebuild_round_trip(self, t):
        code = canonical_code(t)
        assert canonical_code(tree_from_code(code)) == code

    def test_text_round_trip(self):
        code = canonical_code(TreeWitness(path_graph(5)))
        assert TreeCode.from_text(code.to_text()) == code

    def test_invalid_level_sequence(self):
        with pytest.raises(ValueError, match="level"):
            graph_from_code((0, 2))
        with pytest.raises(ValueError, match="start at 0"):
            graph_from_code((1, 2))


class TestEnumeration:
    @pytest.mark.parametrize("n,count", sorted(KNOWN_COUNTS.items()))
    def test_known_counts(self, n, count):
        assert len(enumerate_codes(n)) == count

    @pytest.mark.parametrize("n,count", sorted(KNOWN_COUNTS.items()))
    def test_count_without_materializing(self, n, count):
        assert count_trees(n) == count

    def test_strictly_increasing_codes(self):
        for n in (6, 7, 8):
            codes = enumerate_codes(n)
            assert all(a < b for a, b in zip(codes, codes[1:]))

    def test_witness_orders(self):
        assert all(t.order == 7 for t in enumerate_trees(7))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_matches_prufer_dedup_oracle(self, n):
        assert {c.levels for c in enumerate_codes(n)} == prufer_dedup_codes(n)

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="outside"):
            enumerate_codes(0)
        with pytest.raises(ValueError, match="outside"):
            count_trees(max_order_cap() + 1)

    def test_env_cap_override(self, monkeypatch):
        monkeypatch.setenv("TREEREG_MAX_ORDER", "5")
        assert max_order_cap() == 5
        with pytest.raises(ValueError, match="outside"):
            enumerate_codes(6)
        monkeypatch.setenv("TREEREG_MAX_ORDER", "bogus")
        with pytest.raises(ValueError, match="not an integer"):
            max_order_cap()


class TestPrufer:
    def test_decode_star(self):
        edges = prufer_to_edges([0, 0], 4)
        assert sorted(tuple(sorted(e)) for e in edges) == [(0, 1), (0, 2), (0, 3)]

    def test_decode_path(self):
        edges = prufer_to_edges([1, 2], 4)
        g = from_edge_list(edges, 4)
        assert canonical_code(TreeWitness(g)) == canonical_code(TreeWitness(path_graph(4)))

    def test_bad_length(self):
        with pytest.raises(ValueError, match="length"):
            prufer_to_edges([0], 4)

    @given(st.integers(2, 30), st.data())
    @settings(max_examples=60)
    def test_decode_always_a_tree(self, n, data):
        seq = data.draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
        TreeWitness(from_edge_list(prufer_to_edges(seq, n), n))


class TestRandomTree:
    def test_single_vertex(self):
        assert random_tree(1, 7).order == 1

    def test_two_vertices(self):
        t = random_tree(2, 99)
        assert t.graph.edges() == ((0, 1),)

    def test_deterministic(self):
        assert random_tree(9, 1234).graph == random_tree(9, 1234).graph

    def test_seed_changes_tree(self):
        trees = {canonical_code(random_tree(12, s)).levels for s in range(20)}
        assert len(trees) > 1

    def test_invalid_order(self):
        with pytest.raises(ValueError, match=">= 1"):
            random_tree(0, 1)
