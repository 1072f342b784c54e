import pytest
from helpers import MOD3_TABLES, all_dyck, planted_trees, red_count

from dyckstats import (
    NotPlantedError,
    OrderedTree,
    PlantedTree,
    RegraftCase,
    edges_at_residue,
    exterior_edges,
    exterior_pairs,
    make_bouquet,
    make_chain,
    parse_path,
    path_to_tree,
    regraft,
    regraft_case,
    regraft_inverse,
    regraft_inverse_case,
    regraft_path,
    regraft_path_inverse,
    regraft_tree,
    regraft_tree_inverse,
    tree_to_path,
    up_steps_at_residue,
)
from dyckstats.trees import _edges

# Three worked planted trees, built from their construction descriptions.
#
# EX_A: the root's child v has two leaf children and a third child whose
# subtree has a leaf and a 2-chain (7 edges, exterior edges: stalk and the
# third child edge).  Its image hangs the two leaves under a fresh vertex
# appended right of the rightmost depth-3 vertex of the third component's
# image.
EX_A = (((), (), ((), ((),))),)
EX_A_IMAGE = ((((), ((), ())), ()),)
# EX_B: v has a leaf, a two-leaf fork, and a 2-chain (7 edges, exterior:
# stalk and the fork edge).  The last component is a chain, the previous one
# exterior, so the image grows a 2-chain plus one pendant edge off the image
# of the fork and hangs the leaf under it.
EX_B = (((), ((), ()), ((),)),)
EX_B_IMAGE = ((((),), (((),),), ()),)
# EX_C: v carries copies of EX_A and EX_B plus a 2-chain and a 3-chain
# (20 edges, 5 exterior edges).  Both trailing components are chains, so a
# fresh 3-chain with pendant edges is built and the two images hang below it,
# their deep edges shifting from level 3 to level 6.
EX_C = ((EX_A[0], EX_B[0], ((),), (((),),)),)


def levels_histogram(tree) -> dict[int, int]:
    out: dict[int, int] = {}
    for _, _, level, _ in _edges(tree.shape):
        out[level] = out.get(level, 0) + 1
    return out


class TestBaseCases:
    @pytest.mark.parametrize("k", range(1, 8))
    def test_chain_maps_to_bouquet(self, k):
        assert regraft(make_chain(k)) == make_bouquet(k)

    @pytest.mark.parametrize("k", range(1, 8))
    def test_bouquet_maps_back_to_chain(self, k):
        assert regraft_inverse(make_bouquet(k)) == make_chain(k)

    def test_single_edge_fixed(self):
        assert regraft(make_chain(1)) == make_chain(1)
        assert regraft_inverse(make_chain(1)) == make_chain(1)

    def test_two_chain_fixed(self):
        # The 2-chain and the size-2 bouquet are the same tree.
        assert regraft(make_chain(2)) == make_chain(2)

    def test_not_planted(self):
        with pytest.raises(NotPlantedError):
            regraft(path_to_tree(parse_path("UDUD")))
        with pytest.raises(NotPlantedError):
            regraft_inverse(path_to_tree(parse_path("UDUD")))


class TestCaseClassification:
    def test_chain(self):
        assert regraft_case(make_chain(5)) is RegraftCase.CHAIN

    def test_last_exterior(self):
        t = PlantedTree.from_shape(((((), ()),),))
        assert regraft_case(t) is RegraftCase.LAST_EXTERIOR

    def test_prev_exterior(self):
        # v's children: a two-leaf subtree then a leaf.
        t = PlantedTree.from_shape(((((), ()), ()),))
        assert regraft_case(t) is RegraftCase.PREV_EXTERIOR

    def test_tail_chains(self):
        # v has two single-edge children.
        t = PlantedTree.from_shape((((), ()),))
        assert regraft_case(t) is RegraftCase.TAIL_CHAINS

    @pytest.mark.parametrize("n", range(1, 9))
    def test_inverse_case_recovers_forward_case(self, n):
        for t in planted_trees(n):
            assert regraft_inverse_case(regraft(t)) is regraft_case(t)


class TestWorkedExamples:
    def test_first_tree(self):
        t = PlantedTree.from_shape(EX_A)
        assert t.edge_count == 7
        assert len(exterior_edges(t)) == 2
        image = regraft(t)
        assert image.shape == EX_A_IMAGE
        assert red_count(image) == 2
        assert regraft_inverse(image) == t

    def test_second_tree(self):
        t = PlantedTree.from_shape(EX_B)
        assert t.edge_count == 7
        assert len(exterior_edges(t)) == 2
        image = regraft(t)
        assert image.shape == EX_B_IMAGE
        assert red_count(image) == 2
        assert regraft_inverse(image) == t

    def test_third_tree(self):
        t = PlantedTree.from_shape(EX_C)
        assert t.edge_count == 20
        assert len(exterior_edges(t)) == 5
        image = regraft(t)
        assert red_count(image) == 5
        hist = levels_histogram(image)
        # one fresh deepest-level-3 edge; earlier deep edges moved to level 6
        assert hist.get(3) == 1
        assert hist.get(6) == 4
        assert regraft_inverse(image) == t

    def test_merged_tree_and_path(self):
        t = OrderedTree.from_shape((EX_A[0], EX_B[0]))
        p = tree_to_path(t)
        assert p.n == 14
        assert len(p.blocks()) == 2
        assert exterior_pairs(p) == 4
        assert red_count(regraft_tree(t)) == 4
        assert up_steps_at_residue(regraft_path(p), 3, {0}) == 4


class TestPlantedExhaustive:
    @pytest.mark.parametrize("n", range(1, 10))
    def test_round_trips(self, n):
        for t in planted_trees(n):
            image = regraft(t)
            assert regraft_inverse(image) == t
            assert regraft(regraft_inverse(t)) == t

    @pytest.mark.parametrize("n", range(1, 10))
    def test_statistic_transport(self, n):
        for t in planted_trees(n):
            image = regraft(t)
            assert image.edge_count == t.edge_count
            assert red_count(image) == len(exterior_edges(t))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_stalk_image_is_rightmost_level_three(self, n):
        for t in planted_trees(n):
            if not exterior_edges(t):
                continue
            image = regraft(t)
            hist = levels_histogram(image)
            assert hist.get(3, 0) >= 1

    @pytest.mark.parametrize("n", range(1, 9))
    def test_bijective_on_size_class(self, n):
        images = {regraft(t) for t in planted_trees(n)}
        assert len(images) == len(planted_trees(n))
        assert images == set(planted_trees(n))

    def test_trace_records_cases(self):
        trace = []
        regraft(PlantedTree.from_shape(EX_C), trace)
        assert trace[0] == (0, RegraftCase.TAIL_CHAINS)
        assert all(isinstance(case, RegraftCase) for _, case in trace)


class TestTreeLift:
    def test_empty_tree(self):
        assert regraft_tree(OrderedTree()) == OrderedTree()
        assert regraft_tree_inverse(OrderedTree()) == OrderedTree()

    @pytest.mark.parametrize("n", range(9))
    def test_round_trip(self, n):
        for p in all_dyck(n):
            t = path_to_tree(p)
            assert regraft_tree_inverse(regraft_tree(t)) == t

    @pytest.mark.parametrize("n", range(9))
    def test_transport(self, n):
        for p in all_dyck(n):
            t = path_to_tree(p)
            assert red_count(regraft_tree(t)) == len(exterior_edges(t))


class TestPathLift:
    def test_fixed_point(self):
        assert regraft_path(parse_path("UUDD")) == parse_path("UUDD")

    def test_chain_to_bouquet_on_words(self):
        assert regraft_path(parse_path("UUUDDD")).word() == "UUDUDD"

    def test_inverse_on_words(self):
        assert regraft_path_inverse(parse_path("UUDUDD")).word() == "UUUDDD"

    def test_distribution_on_c6(self):
        tally: dict[int, int] = {}
        for p in all_dyck(6):
            k = up_steps_at_residue(regraft_path(p), 3, {0})
            tally[k] = tally.get(k, 0) + 1
        assert tally == MOD3_TABLES[0][6]
        exterior_tally: dict[int, int] = {}
        for p in all_dyck(6):
            k = exterior_pairs(p)
            exterior_tally[k] = exterior_tally.get(k, 0) + 1
        assert exterior_tally == tally

    @pytest.mark.parametrize("n", list(range(9)) + [10])
    def test_injective_and_transporting(self, n):
        seen = set()
        for p in all_dyck(n):
            q = regraft_path(p)
            assert q.n == p.n
            assert up_steps_at_residue(q, 3, {0}) == exterior_pairs(p)
            assert q not in seen
            seen.add(q)
        assert len(seen) == len(all_dyck(n))
