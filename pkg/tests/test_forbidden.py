import pytest

from minhom import (
    BipartitionedDigraph,
    Digraph,
    UndirectedGraph,
    converse,
    detect_forbidden,
    detect_long_induced_even_cycle,
    pattern_catalog,
)
from minhom.digraph import digraphs_isomorphic, graphs_isomorphic
from minhom.errors import NotSemicompleteBipartite
from minhom.forbidden import (
    BIPARTITE_CLAW_EDGES,
    BIPARTITE_NET_EDGES,
    BIPARTITE_TENT_EDGES,
    DEFAULT_CATALOG,
    verify_witness,
)
from minhom.gadgets import gadget_target
from minhom.ordering import exhaustive_search

from conftest import bipartite, directed_cycle, random_semicomplete


def conv_bipartite(h: BipartitionedDigraph) -> BipartitionedDigraph:
    return BipartitionedDigraph(converse(h.base), h.side)


def pattern_host(edges, n_x=4, n_y=3) -> BipartitionedDigraph:
    """Embed an undirected pattern as the 2-cycle and backward views.

    Pattern edges become 2-cycles and every other pair gets a single forward
    arc, so the backward and 2-cycle views both equal the pattern while the
    forward view is complete.  No directed catalog pattern can occur: each
    needs a single arc out of the U side, and here every U-to-V arc is half
    of a 2-cycle.
    """
    eset = {frozenset(e) for e in edges}
    arcs = []
    for x in range(n_x):
        for y in range(n_x, n_x + n_y):
            arcs.append((x, y))
            if frozenset((x, y)) in eset:
                arcs.append((y, x))
    return bipartite(n_x, n_y, arcs)


class TestCatalog:
    def test_directed_catalog_is_converse_closed(self):
        cat = DEFAULT_CATALOG
        base = dict(cat.directed[:5])
        for kind, pat in cat.directed[5:]:
            assert kind.endswith("-converse")
            assert pat == converse(base[kind[:-len("-converse")]])

    def test_pattern_arc_counts(self):
        counts = {kind: len(pat.arcs) for kind, pat in DEFAULT_CATALOG.directed[:5]}
        assert counts == {"C4'": 5, "C4''": 6, "H*": 6, "N1": 12, "N2": 11}

    def test_undirected_patterns_distinct(self):
        claw = UndirectedGraph(7, BIPARTITE_CLAW_EDGES)
        net = UndirectedGraph(7, BIPARTITE_NET_EDGES)
        tent = UndirectedGraph(7, BIPARTITE_TENT_EDGES)
        assert not graphs_isomorphic(claw, net)
        assert not graphs_isomorphic(net, tent)
        assert not graphs_isomorphic(claw, tent)

    def test_tent_override_changes_catalog(self):
        cat = pattern_catalog(tent_edges=BIPARTITE_NET_EDGES)
        tent_entry = dict(cat.undirected)["bipartite-tent"]
        assert tent_entry == UndirectedGraph(7, BIPARTITE_NET_EDGES)

    def test_gadget_targets_match_directed_patterns(self):
        pats = dict(DEFAULT_CATALOG.directed)
        for cli_kind, kind in [("c4p", "C4'"), ("c4pp", "C4''"),
                               ("hstar", "H*"), ("n1", "N1"), ("n2", "N2")]:
            assert digraphs_isomorphic(gadget_target(cli_kind).base, pats[kind])


class TestDetect:
    def test_c4_prime_is_its_own_witness(self):
        w = detect_forbidden(gadget_target("c4p"))
        assert w is not None and w.kind == "C4'" and w.vertices == (0, 1, 2, 3)
        assert w.side_view is None

    def test_directed_four_cycle_is_clean(self):
        h = BipartitionedDigraph(directed_cycle(4), "VUVU")
        assert detect_forbidden(h) is None

    def test_single_two_cycle_is_clean(self):
        assert detect_forbidden(bipartite(1, 1, [(0, 1), (1, 0)])) is None

    def test_requires_semicomplete(self):
        with pytest.raises(NotSemicompleteBipartite):
            detect_forbidden(bipartite(1, 1, []))

    @pytest.mark.parametrize("cli_kind,expect", [
        ("c4p", "C4'"), ("c4pp", "C4''"), ("hstar", "H*"),
        ("n1", "N1"), ("n2", "N2"),
    ])
    def test_gadget_targets_self_witness(self, cli_kind, expect):
        w = detect_forbidden(gadget_target(cli_kind))
        assert w is not None and w.kind == expect

    def test_deterministic(self):
        h = gadget_target("n1")
        assert detect_forbidden(h) == detect_forbidden(h)

    def test_converse_symmetry(self, rng):
        for _ in range(60):
            h = random_semicomplete(rng, rng.randint(1, 3), rng.randint(1, 3))
            w1 = detect_forbidden(h)
            w2 = detect_forbidden(conv_bipartite(h))
            assert (w1 is None) == (w2 is None)

    def test_witnesses_re_validate(self, rng):
        seen = 0
        for _ in range(120):
            h = random_semicomplete(rng, 3, 3)
            w = detect_forbidden(h)
            if w is not None:
                assert verify_witness(h, w)
                seen += 1
        assert seen > 10


class TestUndirectedPatternHosts:
    """Targets built so an undirected obstruction occurs in the forward view."""

    @pytest.mark.parametrize("name,edges", [
        ("bipartite-claw", BIPARTITE_CLAW_EDGES),
        ("bipartite-net", BIPARTITE_NET_EDGES),
        ("bipartite-tent", BIPARTITE_TENT_EDGES),
    ])
    def test_host_detected_with_expected_kind(self, name, edges):
        h = pattern_host(edges)
        w = detect_forbidden(h)
        assert w is not None and w.kind == name and w.side_view == "backward"
        assert verify_witness(h, w)

    @pytest.mark.parametrize("edges", [
        BIPARTITE_CLAW_EDGES, BIPARTITE_NET_EDGES, BIPARTITE_TENT_EDGES,
    ])
    def test_host_has_no_layered_ordering(self, edges):
        # dichotomy consistency at the pattern itself: an obstruction-bearing
        # target must not admit any 2- or 4-class ordering
        assert exhaustive_search(pattern_host(edges)) is None

    @pytest.mark.parametrize("edges", [
        BIPARTITE_CLAW_EDGES, BIPARTITE_NET_EDGES, BIPARTITE_TENT_EDGES,
    ])
    def test_vertex_deleted_hosts_stay_consistent(self, edges):
        # deleting any vertex must keep verdict and ordering search agreeing
        from minhom.digraph import induced_subdigraph
        h = pattern_host(edges)
        for drop in range(h.n):
            keep = [v for v in range(h.n) if v != drop]
            sub = BipartitionedDigraph(induced_subdigraph(h.base, keep),
                                       tuple(h.side[v] for v in keep))
            w = detect_forbidden(sub)
            found = exhaustive_search(sub)
            assert (w is None) == (found is not None)

    def test_six_cycle_host_detected(self):
        edges = [(i, i + 3) for i in range(3)] + [((i + 1) % 3, i + 3) for i in range(3)]
        h = pattern_host(edges, n_x=3, n_y=3)
        w = detect_forbidden(h)
        assert w is not None and w.kind == "even-cycle" and w.cycle_length == 6


class TestLongInducedCycles:
    def cycle_graph(self, n):
        return UndirectedGraph(n, [(i, (i + 1) % n) for i in range(n)])

    def test_c6_found(self):
        cyc = detect_long_induced_even_cycle(self.cycle_graph(6))
        assert cyc is not None and len(cyc) == 6

    def test_complete_bipartite_has_none(self):
        k33 = UndirectedGraph(6, [(i, j + 3) for i in range(3) for j in range(3)])
        assert detect_long_induced_even_cycle(k33) is None

    def test_c8_found(self):
        cyc = detect_long_induced_even_cycle(self.cycle_graph(8))
        assert cyc is not None and len(cyc) == 8

    def test_chord_kills_cycle(self):
        g = UndirectedGraph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
        assert detect_long_induced_even_cycle(g) is None

    def test_path_has_none(self):
        g = UndirectedGraph(7, [(i, i + 1) for i in range(6)])
        assert detect_long_induced_even_cycle(g) is None

    def test_returned_cycle_is_induced(self):
        g = UndirectedGraph(9, [(i, (i + 1) % 6) for i in range(6)]
                            + [(6, 7), (7, 8), (0, 6)])
        cyc = detect_long_induced_even_cycle(g)
        assert cyc is not None
        n = len(cyc)
        assert n >= 6
        for i in range(n):
            for j in range(i + 1, n):
                adjacent = g.has_edge(cyc[i], cyc[j])
                consecutive = (j - i == 1) or (i == 0 and j == n - 1)
                assert adjacent == consecutive
