import itertools

import pytest

from eigsum.graphs import (
    Graph,
    Graph6Error,
    GraphError,
    complete_graph,
    components,
    cycle_graph,
    cycle_space_dim,
    disjoint_union,
    family_double_star,
    family_G,
    family_star_plus,
    format_edge_list,
    from_edge_list,
    graph6_decode,
    graph6_encode,
    is_bipartite,
    is_connected,
    is_tree,
    parse_edge_list,
    path_graph,
)
from eigsum.rng import XorShift64Star
from eigsum.search import are_isomorphic


def triangle_count(g):
    adj = g.adjacency_sets()
    return sum(
        1
        for a, b, c in itertools.combinations(range(g.n), 3)
        if b in adj[a] and c in adj[a] and c in adj[b]
    )


class TestConstruction:
    def test_triangle(self):
        g = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
        assert g.n == 3 and g.e == 3

    def test_empty(self):
        g = from_edge_list(4, [])
        assert g.e == 0

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match="self-loop"):
            from_edge_list(2, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError, match="out of range"):
            from_edge_list(2, [(0, 2)])

    def test_duplicate_edges_collapse(self):
        g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
        assert g.e == 1

    def test_edges_stored_sorted(self):
        g = from_edge_list(4, [(3, 2), (1, 0)])
        assert g.edges == ((0, 1), (2, 3))

    def test_structural_equality(self):
        assert from_edge_list(3, [(2, 1)]) == from_edge_list(3, [(1, 2)])
        # same class, different labels: structurally different values
        assert from_edge_list(3, [(0, 1)]) != from_edge_list(3, [(1, 2)])


class TestGraph6:
    def test_k3_encodes_to_Bw(self):
        # header 3+63=66='B'; bits x(0,1) x(0,2) x(1,2) = 111, padded 111000,
        # group 56+63=119='w'
        assert graph6_encode(complete_graph(3)) == "Bw"

    def test_single_vertex(self):
        # header byte 1+63=64='@', no adjacency bits
        assert graph6_encode(Graph(1)) == "@"

    def test_roundtrip_random(self):
        rng = XorShift64Star(2024)
        for _ in range(1000):
            n = rng.randint(1, 12)
            g = rng.random_graph(n)
            assert graph6_decode(graph6_encode(g)) == g

    def test_decode_bad_character(self):
        with pytest.raises(Graph6Error) as err:
            graph6_decode("B" + chr(250))
        assert err.value.offset == 1

    def test_decode_bad_length(self):
        with pytest.raises(Graph6Error):
            graph6_decode("Bww")

    def test_decode_bad_padding(self):
        # n=3 needs 3 bits; set a padding bit: 111001 -> 57+63 = 120 = 'x'
        with pytest.raises(Graph6Error, match="padding"):
            graph6_decode("Bx")

    def test_encode_large_rejected(self):
        with pytest.raises(GraphError, match="62"):
            graph6_encode(Graph(63))


class TestStructure:
    def test_components(self):
        assert components(complete_graph(3)).omega == 1
        g = disjoint_union(complete_graph(3), complete_graph(2))
        part = components(g)
        assert part.omega == 2
        assert part.blocks == ((0, 1, 2), (3, 4))
        assert components(Graph(4)).omega == 4

    def test_cycle_space_dim(self):
        assert cycle_space_dim(path_graph(5)) == 0
        assert cycle_space_dim(family_star_plus(4)) == 1
        assert cycle_space_dim(complete_graph(4)) == 3
        assert cycle_space_dim(Graph(5)) == 0

    def test_forest_iff_zero(self):
        rng = XorShift64Star(5)
        for _ in range(200):
            g = rng.random_graph(rng.randint(1, 8))
            has_cycle = cycle_space_dim(g) > 0
            forest = all(
                is_tree(g_sub)
                for g_sub in (
                    from_edge_list(
                        len(block),
                        [
                            (block.index(u), block.index(v))
                            for u, v in g.edges
                            if u in block and v in block
                        ],
                    )
                    for block in components(g).blocks
                )
            )
            assert has_cycle == (not forest)

    def test_tree_connected(self):
        assert is_tree(path_graph(5))
        assert is_connected(family_star_plus(3))
        assert not is_tree(family_star_plus(3))
        assert not is_connected(disjoint_union(complete_graph(3), complete_graph(2)))

    def test_bipartite(self):
        assert is_bipartite(path_graph(6))
        assert is_bipartite(cycle_graph(6))
        assert not is_bipartite(cycle_graph(5))


class TestFamilies:
    def test_family_G_small(self):
        g = family_G(2, 1)
        assert g.n == 5 and g.e == 5 and cycle_space_dim(g) == 1
        g = family_G(0, 2)
        assert g.n == 4 and g.e == 5

    def test_family_G_counts(self):
        for s in range(0, 21):
            for t in range(1, 21):
                g = family_G(s, t)
                assert g.n == s + t + 2
                assert g.e == s + 2 * t + 1

    def test_family_G_rejects_degenerate(self):
        with pytest.raises(GraphError):
            family_G(3, 0)

    def test_family_G_is_star_plus(self):
        for n in range(5, 11):
            assert are_isomorphic(family_G(n - 3, 1), family_star_plus(n - 1))

    def test_star_plus(self):
        g = family_star_plus(3)
        assert g.n == 4 and g.e == 4
        assert sorted(g.degree_sequence(), reverse=True) == [3, 2, 2, 1]
        assert triangle_count(g) == 1
        for a in range(3, 11):
            g = family_star_plus(a)
            assert g.e == a + 1
            assert triangle_count(g) == 1
            assert sorted(g.degree_sequence(), reverse=True) == [a, 2, 2] + [1] * (a - 2)
        assert cycle_space_dim(family_star_plus(4)) == 1

    def test_star_plus_rejects_small(self):
        with pytest.raises(GraphError):
            family_star_plus(2)

    def test_double_star(self):
        assert are_isomorphic(family_double_star(1, 1), path_graph(4))
        g = family_double_star(2, 2)
        assert g.n == 6 and is_tree(g)
        g = family_double_star(3, 2)
        assert g.n == 7 and g.e == 6 and is_tree(g)
        with pytest.raises(GraphError):
            family_double_star(0, 1)


class TestEdgeListFormat:
    def test_roundtrip(self):
        g = family_star_plus(4)
        assert parse_edge_list(format_edge_list(g)) == g

    def test_header_mismatch(self):
        with pytest.raises(GraphError, match="promises"):
            parse_edge_list("3 2\n0 1\n")

    def test_bad_line(self):
        with pytest.raises(GraphError, match="line 2"):
            parse_edge_list("2 1\n0 x\n")
