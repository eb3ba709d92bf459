"""Cyclic layered vertex orderings of target digraphs.

A target digraph H is solvable by the layered min-cut reduction when its
vertices split into classes V_1..V_k (k >= 2) such that every arc goes from
some V_i to V_{i+1 (mod k)} and, for each consecutive pair, the arcs from
V_i to V_{i+1} satisfy the min-max exchange property with respect to the
within-class orders: whenever two such arcs "cross", the arcs joining the
earlier tail to the earlier head and the later tail to the later head must
also be present.  (For k = 2 both directions of arcs exist between the two
classes; each direction is checked against its own concatenation.  Checking
the full induced subdigraph would wrongly reject targets with 2-cycles, such
as blow-ups of a directed 2-cycle, which are solvable.)

From an accepted ordering the solver consumes interval tables: the
out-neighborhood of the i-th vertex of class j must occupy a consecutive run
of positions L(i,j)+1 .. R(i,j)-1 in class j+1, except that positions held
by target vertices with no in-arcs at all ("dead" positions, which no input
vertex with an in-arc can ever take) may interrupt the run; L and R must be
non-decreasing in i across the nonempty rows.  Empty out-neighborhoods are
encoded L=0, R=1 and sit outside the monotonicity comparison.

For strongly connected targets there are no empty rows or dead positions
and these laws reduce to plain consecutiveness and monotonicity.  Beyond
that they are exactly what the exchange property forces: a gap in a row at
a position some other row covers, or non-monotone endpoints between two
nonempty rows, would yield a crossing arc pair whose exchange arc is
missing.  Both laws are still re-checked, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

from .digraph import (
    BACKWARD,
    FORWARD,
    SIDE_U,
    SIDE_V,
    BipartitionedDigraph,
    Digraph,
    find_induced_subdigraph,
    is_extension_of,
    is_semicomplete_bipartite,
    underlying,
    undirected_components,
)
from .errors import InconsistencyError, IntervalError
from .forbidden import DEFAULT_CATALOG, PatternCatalog, detect_forbidden

DIRECTED_FOUR_CYCLE = Digraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))


@dataclass(frozen=True)
class KMinMaxOrdering:
    """A k-partition into ordered classes; ``classes[i]`` lists V_{i+1} in order."""

    classes: tuple[tuple[int, ...], ...]

    def __init__(self, classes: Sequence[Sequence[int]]):
        object.__setattr__(self, "classes",
                           tuple(tuple(c) for c in classes))

    @property
    def k(self) -> int:
        return len(self.classes)

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def to_json(self) -> dict:
        return {"k": self.k, "classes": [list(c) for c in self.classes]}


@dataclass(frozen=True)
class IntervalTable:
    """Out-neighborhood intervals; ``low[j][i]``/``high[j][i]`` are L and R for
    the vertex at (0-indexed) position i of class j, bounding 1-indexed
    positions in class j+1 (mod k)."""

    low: tuple[tuple[int, ...], ...]
    high: tuple[tuple[int, ...], ...]


def is_min_max_ordering(graph: Digraph, order: Sequence[int]) -> bool:
    """Check the min-max exchange property of a full vertex ordering.

    For every two arcs whose tails satisfy i < j and whose heads satisfy
    s < r (a "crossing" pair ir, js), the arcs i->s and j->r must exist.
    """
    order = list(order)
    if sorted(order) != list(range(graph.n)):
        raise ValueError("order must be a permutation of the vertex set")
    pos = {v: i for i, v in enumerate(order)}
    arcs = sorted(graph.arcs)
    return _min_max_pairs(arcs, pos, pos, graph.arcs)


def _min_max_pairs(arcs, tail_pos, head_pos, arcset) -> bool:
    # shared core: positions of tails/heads may come from different orders
    for a in range(len(arcs)):
        u1, w1 = arcs[a]
        i, r = tail_pos[u1], head_pos[w1]
        for b in range(len(arcs)):
            u2, w2 = arcs[b]
            j, s = tail_pos[u2], head_pos[w2]
            if i < j and s < r:
                if (u1, w2) not in arcset or (u2, w1) not in arcset:
                    return False
    return True


def validate_k_min_max(graph: Digraph, ordering: KMinMaxOrdering) -> bool:
    """Check both defining clauses; False for any violation (never raises)."""
    classes = ordering.classes
    k = len(classes)
    if k < 2:
        return False
    seen: dict[int, int] = {}
    for ci, cls in enumerate(classes):
        for v in cls:
            if not (0 <= v < graph.n) or v in seen:
                return False
            seen[v] = ci
    if len(seen) != graph.n:
        return False
    for u, v in graph.arcs:
        if seen[v] != (seen[u] + 1) % k:
            return False
    for ci in range(k):
        nxt = (ci + 1) % k
        concat = classes[ci] + classes[nxt]
        pos = {v: i for i, v in enumerate(concat)}
        forward = sorted((u, v) for u, v in graph.arcs
                         if seen[u] == ci and seen[v] == nxt)
        if not _min_max_pairs(forward, pos, pos, graph.arcs):
            return False
    return True


def interval_table(graph: Digraph, ordering: KMinMaxOrdering) -> IntervalTable:
    """Compute L/R interval tables for an ordering that validates.

    Raises IntervalError if some out-neighborhood is not a consecutive run of
    positions in the next class (gaps at dead positions excepted), or if the
    interval endpoints of the nonempty rows fail to be monotone along a
    class.  Empty rows are encoded (0, 1) and skipped by the monotone
    comparison; the solver gives empty rows and dead positions dedicated
    treatment.
    """
    if not validate_k_min_max(graph, ordering):
        raise ValueError("ordering does not satisfy the layered min-max property")
    classes = ordering.classes
    k = len(classes)
    low: list[tuple[int, ...]] = []
    high: list[tuple[int, ...]] = []
    for j in range(k):
        nxt = classes[(j + 1) % k]
        rank = {v: i + 1 for i, v in enumerate(nxt)}
        # a dead position holds a target vertex with no in-arcs: no row of
        # this class covers it, so it may interrupt a row's run
        dead = {i + 1 for i, v in enumerate(nxt) if graph.in_degree(v) == 0}
        lo_row: list[int] = []
        hi_row: list[int] = []
        for v in classes[j]:
            ranks = sorted(rank[w] for w in graph.out_neighbors(v))
            if not ranks:
                lo, hi = 0, 1
            else:
                have = set(ranks)
                for m in range(ranks[0], ranks[-1] + 1):
                    if m not in have and m not in dead:
                        raise IntervalError(
                            f"out-neighborhood of vertex {v} is not consecutive "
                            f"in the next class")
                lo, hi = ranks[0] - 1, ranks[-1] + 1
            lo_row.append(lo)
            hi_row.append(hi)
        prev = None
        for i in range(len(lo_row)):
            if hi_row[i] - lo_row[i] == 1:
                continue  # empty row, position unconstrained
            if prev is not None:
                if lo_row[i] < lo_row[prev] or hi_row[i] < hi_row[prev]:
                    raise IntervalError(
                        f"interval endpoints not monotone within class {j}")
            prev = i
        low.append(tuple(lo_row))
        high.append(tuple(hi_row))
    return IntervalTable(low=tuple(low), high=tuple(high))


def ordering_is_usable(graph: Digraph, ordering: KMinMaxOrdering) -> bool:
    """True when the ordering validates and yields clean interval tables."""
    if not validate_k_min_max(graph, ordering):
        return False
    try:
        interval_table(graph, ordering)
    except IntervalError:
        return False
    return True


def order_by_degrees(graph: BipartitionedDigraph) -> KMinMaxOrdering:
    """Two-class candidate: each side sorted by out-degree ascending, ties by
    in-degree descending, remaining ties by vertex id.  This only sorts; the
    caller must validate the result."""
    base = graph.base

    def side_order(side):
        verts = graph.side_vertices(side)
        return tuple(sorted(verts, key=lambda v: (base.out_degree(v),
                                                  -base.in_degree(v))))

    return KMinMaxOrdering((side_order(SIDE_V), side_order(SIDE_U)))


def decompose_c4_extension(graph: BipartitionedDigraph) -> KMinMaxOrdering:
    """Four-class ordering for a blow-up of the directed 4-cycle.

    Requires an obstruction-free target that contains an induced directed
    4-cycle; such a target is always a blow-up of it, so failure to decompose
    signals a detector bug rather than bad input.
    """
    assignment = is_extension_of(graph.base, DIRECTED_FOUR_CYCLE)
    if assignment is None:
        raise InconsistencyError(
            "target contains an induced directed 4-cycle and no obstruction, "
            "yet is not a blow-up of the 4-cycle")
    classes = tuple(
        tuple(v for v in range(graph.base.n) if assignment[v] == c)
        for c in range(4))
    return KMinMaxOrdering(classes)


def _one_direction_orders(graph: BipartitionedDigraph, direction: str):
    """Heuristic within-side orders making one arc family min-max, or None.

    ``direction`` is ``forward`` (tails on the V side) or ``backward`` (tails
    on the U side).  Tails are sorted by ascending out-degree in the family,
    heads by descending in-degree; the result is verified before returning.
    """
    if direction == FORWARD:
        tail_side, head_side = SIDE_V, SIDE_U
    else:
        tail_side, head_side = SIDE_U, SIDE_V
    arcs = sorted((u, v) for u, v in graph.base.arcs
                  if graph.side[u] == tail_side)
    outdeg: dict[int, int] = {v: 0 for v in graph.side_vertices(tail_side)}
    indeg: dict[int, int] = {v: 0 for v in graph.side_vertices(head_side)}
    for u, v in arcs:
        outdeg[u] += 1
        indeg[v] += 1
    tails = tuple(sorted(outdeg, key=lambda v: (outdeg[v], v)))
    heads = tuple(sorted(indeg, key=lambda v: (-indeg[v], v)))
    tail_pos = {v: i for i, v in enumerate(tails)}
    head_pos = {v: i for i, v in enumerate(heads)}
    arcset = frozenset(arcs)
    if _min_max_pairs(arcs, tail_pos, head_pos, arcset):
        return tails, heads
    return None


def exhaustive_two_class_search(graph: BipartitionedDigraph) -> Optional[KMinMaxOrdering]:
    """Scan all pairs of within-side permutations; first usable ordering wins."""
    vs = graph.side_vertices(SIDE_V)
    us = graph.side_vertices(SIDE_U)
    for pv in permutations(vs):
        for pu in permutations(us):
            cand = KMinMaxOrdering((pv, pu))
            if ordering_is_usable(graph.base, cand):
                return cand
    return None


def exhaustive_four_class_search(graph: BipartitionedDigraph) -> Optional[KMinMaxOrdering]:
    """Scan all splits of each side into two classes plus within-class orders.

    Classes alternate sides around the cycle (any arc crosses sides), and
    validity is invariant under rotating the classes, so anchoring class 1 on
    the V side loses nothing.
    """
    vs = graph.side_vertices(SIDE_V)
    us = graph.side_vertices(SIDE_U)

    def splits(verts):
        m = len(verts)
        for mask in range(1 << m):
            first = tuple(verts[i] for i in range(m) if mask >> i & 1)
            second = tuple(verts[i] for i in range(m) if not mask >> i & 1)
            yield first, second

    for v1, v3 in splits(vs):
        for u2, u4 in splits(us):
            for p1 in permutations(v1):
                for p2 in permutations(u2):
                    for p3 in permutations(v3):
                        for p4 in permutations(u4):
                            cand = KMinMaxOrdering((p1, p2, p3, p4))
                            if ordering_is_usable(graph.base, cand):
                                return cand
    return None


def exhaustive_search(graph: BipartitionedDigraph) -> Optional[KMinMaxOrdering]:
    """Complete search over 2-class and 4-class orderings."""
    found = exhaustive_two_class_search(graph)
    if found is not None:
        return found
    return exhaustive_four_class_search(graph)


def construct_ordering(graph: BipartitionedDigraph,
                       catalog: PatternCatalog = DEFAULT_CATALOG) -> Optional[KMinMaxOrdering]:
    """Build a usable layered ordering of a connected semicomplete bipartite
    target, or return None when an obstruction makes the problem intractable.

    Strategy: if an induced directed 4-cycle is present the target is a
    blow-up of it (4 classes).  Otherwise a 2-class ordering exists; cheap
    recipes are tried first (lifting a min-max order of one arc family when
    the other family covers all pairs, then the degree sort), each accepted
    only if it validates with clean interval tables, with a complete
    permutation search as the safety net.
    """
    if not is_semicomplete_bipartite(graph):
        raise ValueError("target must be semicomplete bipartite")
    if len(undirected_components(underlying(graph.base))) > 1:
        raise ValueError("target must be connected")
    if detect_forbidden(graph, catalog) is not None:
        return None

    if find_induced_subdigraph(DIRECTED_FOUR_CYCLE, graph.base) is not None:
        ordering = decompose_c4_extension(graph)
        if not ordering_is_usable(graph.base, ordering):
            raise InconsistencyError("4-cycle blow-up ordering failed validation")
        return ordering

    vs = graph.side_vertices(SIDE_V)
    us = graph.side_vertices(SIDE_U)
    arcs = graph.base.arcs
    forward_complete = all((v, u) in arcs for v in vs for u in us)
    backward_complete = all((u, v) in arcs for v in vs for u in us)

    candidates: list[KMinMaxOrdering] = []
    if forward_complete:
        lifted = _one_direction_orders(graph, BACKWARD)
        if lifted is not None:
            tails, heads = lifted  # tails on U side, heads on V side
            candidates.append(KMinMaxOrdering((heads, tails)))
    if backward_complete:
        lifted = _one_direction_orders(graph, FORWARD)
        if lifted is not None:
            tails, heads = lifted
            candidates.append(KMinMaxOrdering((tails, heads)))
    candidates.append(order_by_degrees(graph))
    for cand in candidates:
        if ordering_is_usable(graph.base, cand):
            return cand

    found = exhaustive_two_class_search(graph)
    if found is None:
        raise InconsistencyError(
            "no layered ordering found for an obstruction-free target")
    return found
