import random

import pytest

from minhom import (
    Digraph,
    brute_force_minhom,
    detect_forbidden,
    max_independent_set_size,
    reduce_to_minhom,
    verify_reduction,
)
from minhom.gadgets import GADGET_KINDS, GADGET_SIZES, gadget_target

from conftest import directed_cycle, random_digraph


class TestReduce:
    def test_c4p_single_arc_shape(self):
        inst = reduce_to_minhom("c4p", Digraph(2, [(0, 1)]))
        assert inst.dprime.n == 5
        assert len(inst.dprime.arcs) == 4
        assert inst.original_vertices == (0, 1)
        # endpoints keep the 1,1,0,1 scheme; internals are free
        assert inst.costs.rows[0] == (1, 1, 0, 1)
        assert inst.costs.rows[2] == (0, 0, 0, 0)

    def test_c4pp_single_arc_shape(self):
        inst = reduce_to_minhom("c4pp", Digraph(2, [(0, 1)]))
        assert inst.dprime.n == 3
        assert inst.dprime.arcs == frozenset({(0, 2), (2, 1)})

    def test_hstar_single_arc_shape(self):
        inst = reduce_to_minhom("hstar", Digraph(2, [(0, 1)]))
        assert inst.dprime.n == 7
        # internals 2..6 stand for the gadget's private 5 vertices; the two
        # original endpoints are hit by the gadget's connector arcs
        assert (6, 0) in inst.dprime.arcs and (6, 1) in inst.dprime.arcs
        assert (2, 0) in inst.dprime.arcs and (4, 1) in inst.dprime.arcs

    def test_n_gadget_prohibitive_costs_scale_with_instance(self):
        inst = reduce_to_minhom("n1", Digraph(3, [(0, 1)]))
        big = 2 * 3 + 1
        assert inst.costs.rows[0] == (big, 1, big, big, big, 0)
        # the middle internal of each arc gadget blocks one target vertex
        y = inst.original_vertices[-1] + 2
        assert inst.costs.rows[y][5] == big

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            reduce_to_minhom("nope", Digraph(1, []))

    @pytest.mark.parametrize("kind", GADGET_KINDS)
    def test_size_law(self, kind, rng):
        for _ in range(10):
            D = random_digraph(rng, rng.randint(1, 6), 0.4)
            inst = reduce_to_minhom(kind, D)
            assert inst.dprime.n == D.n + GADGET_SIZES[kind] * len(D.arcs)

    @pytest.mark.parametrize("kind", GADGET_KINDS)
    def test_gadget_internals_not_shared(self, kind):
        D = Digraph(3, [(0, 1), (1, 2), (0, 2)])
        inst = reduce_to_minhom(kind, D)
        internals = range(3, inst.dprime.n)
        per_arc = GADGET_SIZES[kind]
        groups = [set(internals[i:i + per_arc])
                  for i in range(0, len(internals), per_arc)]
        for a in range(len(groups)):
            for b in range(a + 1, len(groups)):
                joined = any(
                    inst.dprime.has_arc(x, y) or inst.dprime.has_arc(y, x)
                    for x in groups[a] for y in groups[b])
                assert not joined


class TestTargets:
    @pytest.mark.parametrize("kind", GADGET_KINDS)
    def test_target_is_np_hard(self, kind):
        assert detect_forbidden(gadget_target(kind)) is not None


class TestIndependentSet:
    def test_no_arcs(self):
        assert max_independent_set_size(Digraph(4, [])) == 4

    def test_triangle(self):
        assert max_independent_set_size(directed_cycle(3)) == 1

    def test_path(self):
        assert max_independent_set_size(Digraph(5, [(i, i + 1) for i in range(4)])) == 3

    def test_two_cycle_counts_once(self):
        assert max_independent_set_size(Digraph(2, [(0, 1), (1, 0)])) == 1


class TestVerifyReduction:
    @pytest.mark.parametrize("kind", GADGET_KINDS)
    def test_spec_instances(self, kind):
        for D, alpha in [
            (Digraph(2, [(0, 1)]), 1),
            (Digraph(2, []), 2),
            (directed_cycle(3), 1),
        ]:
            assert max_independent_set_size(D) == alpha
            assert verify_reduction(reduce_to_minhom(kind, D), alpha)

    @pytest.mark.parametrize("kind", GADGET_KINDS)
    def test_random_instances(self, kind, rng):
        for _ in range(12):
            D = random_digraph(rng, rng.randint(1, 6), rng.choice([0.15, 0.4]))
            alpha = max_independent_set_size(D)
            inst = reduce_to_minhom(kind, D)
            hom = brute_force_minhom(inst.dprime, inst.costs, inst.target.base)
            assert hom is not None
            assert hom.cost == D.n - alpha
