from hypothesis import given, settings, strategies as st
import pytest

from exactcolor import (
    BlockKind,
    DisconnectedClassError,
    NotAPartitionError,
    OutOfRangeError,
    SelfLoopError,
    block_cut_tree,
    build_graph,
    complete,
    contract_partition,
    cycle,
    path,
    perfect_matchings,
    petersen,
    recognize,
    tightness_gadget,
)
from conftest import perfect_matchings_filter


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return build_graph(n, edges)


class TestBuildGraph:
    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
        assert g.min_degree() == g.max_degree() == 2
        assert g.m == 3

    def test_duplicate_edges_collapse(self):
        g = build_graph(2, [(0, 1), (1, 0)])
        assert g.m == 1

    def test_isolated_vertex(self):
        g = build_graph(1, [])
        assert g.min_degree() == g.max_degree() == 0

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            build_graph(2, [(0, 2)])

    def test_self_loop(self):
        with pytest.raises(SelfLoopError):
            build_graph(3, [(1, 1)])

    @given(graphs())
    @settings(max_examples=60)
    def test_adjacency_symmetric_sorted(self, g):
        for v in range(g.n):
            assert list(g.adj[v]) == sorted(set(g.adj[v]))
            for u in g.adj[v]:
                assert v in g.adj[u]
                assert u != v


class TestBlockCutTree:
    def test_bowtie(self, bowtie):
        bct = block_cut_tree(bowtie)
        assert len(bct.blocks) == 2
        assert all(k == BlockKind.CYCLE for k in bct.kinds)
        assert bct.cut_vertices == {2}

    def test_path4(self):
        bct = block_cut_tree(path(4))
        assert len(bct.blocks) == 3
        assert all(k == BlockKind.EDGE for k in bct.kinds)
        assert bct.cut_vertices == {1, 2}

    def test_petersen_single_block(self):
        bct = block_cut_tree(petersen())
        assert len(bct.blocks) == 1
        assert bct.kinds[0] == BlockKind.OTHER
        assert not bct.cut_vertices

    def test_triangle_is_cycle_and_clique(self):
        bct = block_cut_tree(complete(3))
        assert bct.kinds[0] == BlockKind.CYCLE
        assert bct.is_cactus() and bct.is_block_graph()

    @given(graphs())
    @settings(max_examples=60)
    def test_edges_partition_into_blocks(self, g):
        bct = block_cut_tree(g)
        block_edge_count = sum(len(e) for e in bct.block_edges)
        assert block_edge_count == g.m
        seen = set()
        for edges in bct.block_edges:
            for e in edges:
                assert e not in seen
                seen.add(e)

    @given(graphs())
    @settings(max_examples=60)
    def test_cut_vertices_lie_in_two_blocks(self, g):
        bct = block_cut_tree(g)
        membership = bct.blocks_of_vertex(g.n)
        for v in range(g.n):
            assert (len(membership[v]) >= 2) == (v in bct.cut_vertices)


class TestRecognize:
    def test_cycle6(self):
        c = recognize(cycle(6))
        assert c.is_cactus and not c.is_chordal and c.regular_degree == 2
        assert c.is_disjoint_cycles

    def test_complete5(self):
        c = recognize(complete(5))
        assert c.is_block_graph and c.is_chordal

    def test_tightness_gadget(self):
        c = recognize(tightness_gadget())
        assert c.is_cactus and not c.is_tree

    def test_tree(self):
        c = recognize(path(5))
        assert c.is_tree and c.is_forest and c.is_cactus and c.is_block_graph

    def test_chordal_known_cases(self):
        assert recognize(complete(4)).is_chordal
        assert not recognize(cycle(4)).is_chordal
        assert not recognize(petersen()).is_chordal


class TestPerfectMatchings:
    def test_cycle4_has_two(self):
        assert len(perfect_matchings(cycle(4))) == 2

    def test_odd_cycle_has_none(self):
        assert perfect_matchings(cycle(5)) == []

    def test_petersen_has_six(self):
        assert len(perfect_matchings(petersen())) == 6

    def test_truncation_is_prefix(self):
        full = perfect_matchings(complete(6))
        assert perfect_matchings(complete(6), limit=3) == full[:3]

    @pytest.mark.parametrize(
        "g", [cycle(4), cycle(6), cycle(8), complete(4), complete(6), petersen(),
              path(6), tightness_gadget()],
        ids=["C4", "C6", "C8", "K4", "K6", "petersen", "P6", "gadget"],
    )
    def test_agrees_with_subset_filter(self, g):
        got = {frozenset(m.edges) for m in perfect_matchings(g)}
        assert got == perfect_matchings_filter(g)

    def test_matching_invariants(self):
        for m in perfect_matchings(petersen()):
            verts = [v for e in m.edges for v in e]
            assert len(verts) == len(set(verts)) == 10
            assert m.perfect


class TestContractPartition:
    def test_c4_matching_gives_k2(self):
        q = contract_partition(cycle(4), [[0, 1], [2, 3]])
        assert q == complete(2)

    def test_singletons_identity(self):
        g = petersen()
        assert contract_partition(g, [[v] for v in range(g.n)]) == g

    def test_gadget_matching_gives_k3(self):
        q = contract_partition(tightness_gadget(), [[0, 3], [1, 4], [2, 5]])
        assert q == complete(3)

    def test_not_a_partition(self):
        with pytest.raises(NotAPartitionError):
            contract_partition(cycle(4), [[0, 1], [1, 2, 3]])
        with pytest.raises(NotAPartitionError):
            contract_partition(cycle(4), [[0, 1]])

    def test_disconnected_class(self):
        with pytest.raises(DisconnectedClassError):
            contract_partition(cycle(4), [[0, 2], [1, 3]])

    @given(graphs(max_n=8))
    @settings(max_examples=40)
    def test_class_count_becomes_vertex_count(self, g):
        # contract each connected component to one vertex
        from exactcolor import connected_components

        comps = connected_components(g)
        if not comps:
            return
        q = contract_partition(g, comps)
        assert q.n == len(comps)
        assert q.m == 0  # components have no cross edges

    def test_quotient_simple_and_loopless(self, bowtie):
        q = contract_partition(bowtie, [[0, 1], [2], [3, 4]])
        for v in range(q.n):
            assert v not in q.adj[v]
            assert len(q.adj[v]) == len(set(q.adj[v]))
