"""Combinatorial core: colex order, graphs, links, compression, poset."""

from functools import cmp_to_key
from itertools import combinations
from math import comb

import numpy as np
import pytest

from laglab.hypergraph import (
    EdgeListParseError,
    RGraph,
    UniformityError,
    ancestors,
    as_edge,
    build_colex_graph,
    colex_compare,
    colex_rank,
    colex_unrank,
    complement,
    compress,
    count_left_compressed,
    descendants,
    difference_link,
    direct_descendants,
    enumerate_left_compressed,
    is_down_closed,
    is_left_compressed,
    link,
    pair_link,
    parse_edge_list,
    serialize_edge_list,
)
from oracles import downset_filter_count, random_rgraph

# the first 21 triples in colex order
COLEX_LISTING = [
    (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5), (1, 3, 5),
    (2, 3, 5), (1, 4, 5), (2, 4, 5), (3, 4, 5), (1, 2, 6), (1, 3, 6),
    (2, 3, 6), (1, 4, 6), (2, 4, 6), (3, 4, 6), (1, 5, 6), (2, 5, 6),
    (3, 5, 6), (4, 5, 6), (1, 2, 7),
]


class TestColexOrder:
    def test_compare_examples(self):
        assert colex_compare((2, 4, 6), (1, 5, 6)) == -1
        assert colex_compare((1, 2, 3), (1, 2, 3)) == 0
        assert colex_compare((3, 4, 5), (1, 2, 6)) == -1
        assert colex_compare((1, 5, 6), (2, 4, 6)) == 1

    def test_compare_matches_symmetric_difference_definition(self):
        triples = list(combinations(range(1, 7), 3))
        for a in triples:
            for b in triples:
                if a == b:
                    continue
                expected = -1 if max(set(a) ^ set(b)) in b else 1
                assert colex_compare(a, b) == expected

    def test_compare_uniformity_error(self):
        with pytest.raises(UniformityError):
            colex_compare((1, 2, 3), (1, 2))

    def test_rank_examples(self):
        assert colex_rank((1, 2, 3)) == 0
        assert colex_rank((4, 5, 6)) == 19
        assert colex_rank((1, 2, 7)) == 20

    def test_unrank_examples(self):
        assert colex_unrank(3, 0) == (1, 2, 3)
        assert colex_unrank(3, 19) == (4, 5, 6)
        assert colex_unrank(3, 7) == (1, 4, 5)

    def test_listing_ranks(self):
        for k, e in enumerate(COLEX_LISTING):
            assert colex_rank(e) == k
            assert colex_unrank(3, k) == e

    def test_rank_bijection_first_10000(self):
        triples = [colex_unrank(3, k) for k in range(10_000)]
        assert len(set(triples)) == 10_000
        assert [colex_rank(e) for e in triples] == list(range(10_000))
        resorted = sorted(triples, key=cmp_to_key(colex_compare))
        assert resorted == triples

    @pytest.mark.parametrize("r", [2, 3, 4, 5])
    def test_unrank_roundtrip(self, r):
        for k in range(300):
            assert colex_rank(colex_unrank(r, k)) == k


class TestRGraph:
    def test_validation(self):
        with pytest.raises(ValueError):
            RGraph(3, 4, frozenset({(1, 2, 5)}))  # vertex above n
        with pytest.raises(UniformityError):
            RGraph(3, 4, frozenset({(1, 2)}))
        with pytest.raises(ValueError):
            as_edge((2, 2, 3))
        with pytest.raises(ValueError):
            RGraph(1, 4)

    def test_from_edges_infers_n(self):
        g = RGraph.from_edges(3, [(1, 2, 5)])
        assert g.n == 5 and g.m == 1

    def test_canonical_hash_is_stable(self):
        g1 = RGraph.from_edges(3, [(1, 2, 3), (1, 2, 4)])
        g2 = RGraph.from_edges(3, [(1, 2, 4), (1, 2, 3)])
        assert g1.canonical_hash() == g2.canonical_hash()


class TestColexGraphs:
    def test_first_four_triples_are_complete_graph(self):
        g = build_colex_graph(3, 4)
        assert g.edges == RGraph.complete(3, 4).edges
        assert g.n == 4

    def test_empty(self):
        g = build_colex_graph(3, 0)
        assert g.m == 0 and g.n == 0

    def test_five_edges(self):
        g = build_colex_graph(3, 5)
        assert g.edges == RGraph.complete(3, 4).edges | {(1, 2, 5)}

    @pytest.mark.parametrize("r", [2, 3, 4])
    @pytest.mark.parametrize("t", [3, 4, 5, 6, 7, 8])
    def test_binomial_prefix_is_complete(self, r, t):
        if t < r:
            pytest.skip("no complete graph below uniformity")
        g = build_colex_graph(r, comb(t, r))
        assert g.edges == RGraph.complete(r, t).edges


class TestComplementAndLinks:
    def test_complement_complete(self):
        assert complement(RGraph.complete(3, 4)).m == 0

    def test_complement_empty(self):
        assert complement(RGraph(3, 4, frozenset())).m == 4

    def test_complement_c19_on_six(self):
        g = build_colex_graph(3, 19).with_n(6)
        expected = set(combinations(range(1, 7), 3)) - set(g.edges)
        assert complement(g).edges == frozenset(expected) == {(4, 5, 6)}

    def test_link(self):
        assert link(RGraph.complete(3, 3), 1) == {(2, 3)}

    def test_pair_link(self):
        assert pair_link(RGraph.complete(3, 4), 1, 2) == {(3,), (4,)}

    def test_difference_link(self):
        g = RGraph.from_edges(3, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5)])
        assert difference_link(g, 1, 4) == {(2, 5)}

    def test_link_out_of_range(self):
        with pytest.raises(ValueError):
            link(RGraph.complete(3, 3), 4)


class TestLeftCompression:
    def test_colex_graphs_left_compressed(self):
        for m in range(36):
            g = build_colex_graph(3, m)
            assert is_left_compressed(g)
            assert is_down_closed(g)

    def test_missing_descendant(self):
        g = RGraph.from_edges(3, [(1, 2, 3), (1, 2, 5)])
        assert not is_left_compressed(g)

    def test_empty_graph_vacuous(self):
        assert is_left_compressed(RGraph(3, 4, frozenset()))

    def test_shift_and_descendant_criteria_agree_exhaustively(self):
        # every edge set on [5] (and [4])
        for t in (4, 5):
            triples = list(combinations(range(1, t + 1), 3))
            for mask in range(1 << len(triples)):
                edges = [e for k, e in enumerate(triples) if mask >> k & 1]
                g = RGraph.from_edges(3, edges, n=t)
                assert is_left_compressed(g) == is_down_closed(g)

    def test_compress_fixpoint(self):
        g = build_colex_graph(3, 7)
        assert compress(g).edges == g.edges

    def test_compress_single_edge(self):
        assert compress(RGraph.from_edges(3, [(1, 2, 5)])).edges == {(1, 2, 3)}

    def test_compress_three_edges(self):
        g = RGraph.from_edges(3, [(1, 3, 4), (2, 3, 4), (1, 2, 5)])
        out = compress(g)
        assert out.m == 3
        assert is_left_compressed(out)
        assert out.edges == {(1, 2, 3), (1, 2, 4), (1, 2, 5)}

    def test_compress_idempotent_preserves_edges(self):
        rng = np.random.default_rng(20260810)
        for _ in range(1000):
            n = int(rng.integers(4, 8))
            g = random_rgraph(rng, 3, n, float(rng.uniform(0.1, 0.9)))
            c = compress(g)
            assert c.m == g.m
            assert is_left_compressed(c)
            assert compress(c).edges == c.edges


class TestDescendantPoset:
    def test_minimal_element(self):
        assert descendants((1, 2, 3)) == frozenset()

    def test_direct_descendants(self):
        assert direct_descendants((1, 2, 5)) == {(1, 2, 4)}
        assert direct_descendants((1, 2, 3)) == frozenset()

    def test_descendants_match_bruteforce(self):
        for e in [(2, 4, 6), (1, 3, 7), (3, 5, 6)]:
            brute = {
                c
                for c in combinations(range(1, max(e) + 1), 3)
                if all(a <= b for a, b in zip(c, e)) and sum(c) < sum(e)
            }
            assert descendants(e) == brute

    def test_ancestors_at_t7(self):
        anc = ancestors((4, 5, 7), within=7)
        assert (4, 5, 6) not in anc
        assert (5, 6, 7) in anc
        brute = {
            c
            for c in combinations(range(1, 8), 3)
            if all(a >= b for a, b in zip(c, (4, 5, 7))) and sum(c) > 16
        }
        assert anc == brute

    def test_direct_descendants_are_descendants_with_sum_gap_one(self):
        for e in combinations(range(1, 8), 3):
            dd = direct_descendants(e)
            assert dd == {d for d in descendants(e) if sum(d) == sum(e) - 1}


class TestEnumeration:
    def test_unique_four_edge_downset(self):
        graphs = list(enumerate_left_compressed(4, 4))
        assert len(graphs) == 1
        assert graphs[0].edges == RGraph.complete(3, 4).edges

    def test_unique_single_edge(self):
        graphs = list(enumerate_left_compressed(5, 1))
        assert len(graphs) == 1
        assert graphs[0].edges == {(1, 2, 3)}

    @pytest.mark.parametrize("t", [4, 5])
    def test_counts_match_filter_oracle(self, t):
        for m in range(comb(t, 3) + 1):
            assert count_left_compressed(t, m) == downset_filter_count(t, m)

    def test_all_yielded_are_left_compressed_and_unique(self):
        for m in range(11):
            graphs = list(enumerate_left_compressed(5, m))
            assert len({g.edges for g in graphs}) == len(graphs)
            assert all(is_left_compressed(g) for g in graphs)
            assert len(graphs) == count_left_compressed(5, m)

    def test_removing_maximal_edge_stays_in_class(self):
        for m in range(1, 11):
            for g in enumerate_left_compressed(5, m):
                maximal = [
                    e for e in g.edges
                    if not any(e in descendants(f) for f in g.edges if f != e)
                ]
                assert maximal
                for e in maximal:
                    smaller = RGraph(3, 5, g.edges - {e})
                    assert is_left_compressed(smaller)
                    assert smaller.m == m - 1

    @pytest.mark.parametrize("t", [4, 5, 6])
    def test_colex_graph_enumerated(self, t):
        for m in range(comb(t - 1, 3) + 1, comb(t, 3) + 1):
            target = build_colex_graph(3, m).edges
            assert any(
                g.edges == target for g in enumerate_left_compressed(t, m)
            )


class TestEdgeListFormat:
    def test_roundtrip_bit_exact(self):
        g = build_colex_graph(3, 7)
        text = serialize_edge_list(g)
        assert text == "3 5 7\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n1 2 5\n1 3 5\n2 3 5\n"
        back = parse_edge_list(text)
        assert back == g
        assert serialize_edge_list(back) == text

    def test_roundtrip_random(self):
        rng = np.random.default_rng(99)
        for _ in range(50):
            g = random_rgraph(rng, 3, int(rng.integers(4, 8)), 0.5)
            assert parse_edge_list(serialize_edge_list(g)) == g

    def test_parse_errors_report_location(self):
        with pytest.raises(EdgeListParseError, match="line 1"):
            parse_edge_list("")
        with pytest.raises(EdgeListParseError, match="line 1"):
            parse_edge_list("3 x 1\n1 2 3\n")
        with pytest.raises(EdgeListParseError, match="line 2, column 3"):
            parse_edge_list("3 5 1\n1 q 3\n")
        with pytest.raises(EdgeListParseError, match="line 2"):
            parse_edge_list("3 5 1\n1 2\n")
        with pytest.raises(EdgeListParseError, match="exceeds n"):
            parse_edge_list("3 4 1\n1 2 5\n")
        with pytest.raises(EdgeListParseError, match="duplicate"):
            parse_edge_list("3 5 2\n1 2 3\n1 2 3\n")
        with pytest.raises(EdgeListParseError, match="announced"):
            parse_edge_list("3 5 3\n1 2 3\n")
