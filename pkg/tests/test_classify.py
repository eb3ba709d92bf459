import pytest

from minhom import (
    BipartitionedDigraph,
    Digraph,
    brute_force_minhom,
    classify_bipartite,
    classify_multipartite,
    converse,
    solve_minhom,
    CostTable,
)
from minhom.classify import (
    DIRECTED_THREE_CYCLE,
    SHAPE_THREE_CYCLE,
    SHAPE_TOURNAMENT,
    SHAPE_TOURNAMENT_MINUS,
    transitive_tournament,
    transitive_tournament_minus,
)
from minhom.errors import NotSemicompleteBipartite, NotSemicompleteMultipartite
from minhom.gadgets import gadget_target
from minhom.ordering import ordering_is_usable

from conftest import (
    bipartite,
    directed_cycle,
    four_cycle_target,
    random_digraph,
    random_semicomplete,
    two_cycle_target,
)


class TestBipartite:
    def test_c4_prime_hard(self):
        result = classify_bipartite(gadget_target("c4p"))
        assert result.verdict == "np-hard"
        assert result.witness is not None and result.witness.kind == "C4'"

    def test_four_cycle_polynomial_k4(self):
        result = classify_bipartite(four_cycle_target())
        assert result.verdict == "polynomial"
        assert result.k_values == (4,)

    def test_two_cycle_polynomial_k2(self):
        result = classify_bipartite(two_cycle_target())
        assert result.verdict == "polynomial" and result.k_values == (2,)

    def test_requires_semicomplete(self):
        with pytest.raises(NotSemicompleteBipartite):
            classify_bipartite(bipartite(1, 1, []))

    def test_one_sided_target_is_trivially_polynomial(self):
        result = classify_bipartite(bipartite(3, 0, []))
        assert result.verdict == "polynomial"
        assert len(result.orderings) == 3
        assert result.solver_ordering.classes == ((0, 1, 2), ())

    def test_verdict_converse_symmetric(self, rng):
        for _ in range(50):
            h = random_semicomplete(rng, rng.randint(1, 3), rng.randint(1, 3))
            a = classify_bipartite(h)
            b = classify_bipartite(BipartitionedDigraph(converse(h.base), h.side))
            assert a.verdict == b.verdict

    def test_polynomial_verdicts_are_executable(self, rng):
        ran = 0
        for _ in range(120):
            h = random_semicomplete(rng, rng.randint(1, 3), rng.randint(1, 3))
            result = classify_bipartite(h)
            if result.verdict != "polynomial":
                continue
            assert ordering_is_usable(h.base, result.solver_ordering)
            D = random_digraph(rng, rng.randint(1, 5), 0.3)
            ct = CostTable([[rng.randint(0, 9) for _ in range(h.n)]
                            for _ in range(D.n)])
            got = solve_minhom(D, ct, h.base, result.solver_ordering)
            want = brute_force_minhom(D, ct, h.base)
            assert (got is None) == (want is None)
            if got is not None:
                assert got.cost == want.cost
                ran += 1
        assert ran > 20


class TestMultipartite:
    def test_tt3_polynomial(self):
        result = classify_multipartite(transitive_tournament(3), [[0], [1], [2]])
        assert result.verdict == "polynomial" and result.shape == SHAPE_TOURNAMENT

    def test_three_cycle_polynomial(self):
        result = classify_multipartite(DIRECTED_THREE_CYCLE, [[0], [1], [2]])
        assert result.verdict == "polynomial" and result.shape == SHAPE_THREE_CYCLE
        assert result.solver_ordering is not None and result.solver_ordering.k == 3

    def test_three_cycle_with_reversed_arc_hard(self):
        h = Digraph(3, [(0, 1), (1, 2), (2, 0), (1, 0)])
        result = classify_multipartite(h, [[0], [1], [2]])
        assert result.verdict == "np-hard" and result.reason

    def test_tournament_minus_arc_shape(self):
        # blow-up of the 4-vertex near-tournament is semicomplete 3-partite:
        # its source and sink classes are non-adjacent and merge into one part
        tm = transitive_tournament_minus(4)
        parts = [[0, 3], [1], [2]]
        result = classify_multipartite(tm, parts)
        assert result.verdict == "polynomial"
        assert result.shape == SHAPE_TOURNAMENT_MINUS
        assert result.solver_ordering is None  # classify-only shape

    def test_three_cycle_blowup_solves(self, rng):
        arcs = []
        classes = [[0, 1], [2], [3, 4]]
        for i in range(3):
            for x in classes[i]:
                for y in classes[(i + 1) % 3]:
                    arcs.append((x, y))
        h = Digraph(5, arcs)
        result = classify_multipartite(h, classes)
        assert result.shape == SHAPE_THREE_CYCLE
        for _ in range(25):
            D = random_digraph(rng, rng.randint(1, 5), 0.3)
            ct = CostTable([[rng.randint(0, 9) for _ in range(5)]
                            for _ in range(D.n)])
            got = solve_minhom(D, ct, h, result.solver_ordering)
            want = brute_force_minhom(D, ct, h)
            assert (got is None) == (want is None)
            if got is not None:
                assert got.cost == want.cost

    def test_k2_delegates_to_bipartite(self):
        h = gadget_target("c4p")
        result = classify_multipartite(h.base, [[0, 2], [1, 3]])
        assert result.verdict == "np-hard" and result.witness.kind == "C4'"

    def test_partition_validation(self):
        tt = transitive_tournament(3)
        with pytest.raises(NotSemicompleteMultipartite):
            classify_multipartite(tt, [[0], [1]])  # vertex 2 missing
        with pytest.raises(NotSemicompleteMultipartite):
            classify_multipartite(tt, [[0, 1], [2]])  # arc inside a class
        with pytest.raises(NotSemicompleteMultipartite):
            classify_multipartite(Digraph(3, [(0, 1)]), [[0], [1], [2]])

    def test_acyclic_tournament_blowup(self):
        arcs = [(0, 2), (0, 3), (1, 2), (1, 3), (0, 4), (1, 4), (2, 4), (3, 4)]
        h = Digraph(5, arcs)
        result = classify_multipartite(h, [[0, 1], [2, 3], [4]])
        assert result.verdict == "polynomial" and result.shape == SHAPE_TOURNAMENT
