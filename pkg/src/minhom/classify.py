"""Top-level complexity classification of target digraphs.

Semicomplete bipartite targets: intractable exactly when an obstruction from
the forbidden catalog occurs induced; otherwise every component carries a
2- or 4-class layered ordering and the min-cut solver applies.

Semicomplete multipartite targets with k >= 3 classes: tractable exactly
when the target is a blow-up of the transitive tournament on k vertices, of
the transitive tournament on k+1 vertices minus its source-to-sink arc, or
of the directed 3-cycle.  Only the last shape is solved here (it has a
3-class layered ordering); the tournament shapes are classified but their
dedicated solver is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .digraph import (
    SIDE_U,
    SIDE_V,
    BipartitionedDigraph,
    Digraph,
    induced_subdigraph,
    is_extension_of,
    is_semicomplete_bipartite,
    underlying,
    undirected_components,
)
from .errors import InconsistencyError, NotSemicompleteBipartite, NotSemicompleteMultipartite
from .forbidden import DEFAULT_CATALOG, ForbiddenWitness, PatternCatalog, detect_forbidden
from .ordering import KMinMaxOrdering, construct_ordering, ordering_is_usable

SHAPE_TOURNAMENT = "tournament-extension"
SHAPE_TOURNAMENT_MINUS = "tournament-minus-arc-extension"
SHAPE_THREE_CYCLE = "directed-3-cycle-extension"

DIRECTED_THREE_CYCLE = Digraph(3, ((0, 1), (1, 2), (2, 0)))


def transitive_tournament(p: int) -> Digraph:
    return Digraph(p, ((i, j) for i in range(p) for j in range(i + 1, p)))


def transitive_tournament_minus(p: int) -> Digraph:
    """Transitive tournament minus the arc from its source to its sink."""
    arcs = [(i, j) for i in range(p) for j in range(i + 1, p)]
    arcs.remove((0, p - 1))
    return Digraph(p, arcs)


@dataclass(frozen=True)
class Classification:
    """Outcome of classifying a target.

    Polynomial verdicts for bipartite targets carry one validated ordering
    per connected component plus a single whole-target ordering usable by the
    solver.  NP-hard bipartite verdicts carry a checkable witness.  For
    multipartite targets, ``shape`` names the matching tractable blow-up
    shape (solver ordering present only for the 3-cycle shape) and ``reason``
    explains NP-hard verdicts.
    """

    polynomial: bool
    orderings: tuple[KMinMaxOrdering, ...] = ()
    witness: Optional[ForbiddenWitness] = None
    shape: Optional[str] = None
    reason: Optional[str] = None
    solver_ordering: Optional[KMinMaxOrdering] = None

    @property
    def verdict(self) -> str:
        return "polynomial" if self.polynomial else "np-hard"

    @property
    def k_values(self) -> tuple[int, ...]:
        return tuple(o.k for o in self.orderings)


def classify_bipartite(graph: BipartitionedDigraph,
                       catalog: PatternCatalog = DEFAULT_CATALOG) -> Classification:
    """Dichotomy verdict for a semicomplete bipartite target."""
    if not is_semicomplete_bipartite(graph):
        raise NotSemicompleteBipartite("classification requires a semicomplete "
                                       "bipartite target")
    witness = detect_forbidden(graph, catalog)
    if witness is not None:
        return Classification(polynomial=False, witness=witness)

    comps = undirected_components(underlying(graph.base))
    orderings: list[KMinMaxOrdering] = []
    isolated: list[int] = []
    main: Optional[KMinMaxOrdering] = None
    for comp in comps:
        if len(comp) == 1:
            isolated.append(comp[0])
            orderings.append(KMinMaxOrdering(((comp[0],), ())))
            continue
        sub = BipartitionedDigraph(induced_subdigraph(graph.base, comp),
                                   tuple(graph.side[v] for v in comp))
        local = construct_ordering(sub, catalog)
        if local is None:
            raise InconsistencyError(
                "component has no ordering despite an obstruction-free target")
        remapped = KMinMaxOrdering(
            tuple(tuple(comp[i] for i in cls) for cls in local.classes))
        if main is not None:
            raise InconsistencyError(
                "semicomplete bipartite target with two non-trivial components")
        main = remapped
        orderings.append(remapped)

    if main is None:
        solver_ordering = KMinMaxOrdering((tuple(sorted(isolated)), ()))
    elif isolated:
        # fold isolated vertices into the front of class 1: empty-interval
        # rows sort before everything and nothing points at them
        classes = (tuple(sorted(isolated)) + main.classes[0],) + main.classes[1:]
        solver_ordering = KMinMaxOrdering(classes)
    else:
        solver_ordering = main
    if not ordering_is_usable(graph.base, solver_ordering):
        raise InconsistencyError("combined whole-target ordering failed validation")
    return Classification(polynomial=True, orderings=tuple(orderings),
                          solver_ordering=solver_ordering)


def _check_multipartite(graph: Digraph, parts: Sequence[Sequence[int]]) -> None:
    seen: dict[int, int] = {}
    for pi, part in enumerate(parts):
        for v in part:
            if not (0 <= v < graph.n) or v in seen:
                raise NotSemicompleteMultipartite("parts must partition the vertices")
            seen[v] = pi
        if not part:
            raise NotSemicompleteMultipartite("empty class in the partition")
    if len(seen) != graph.n:
        raise NotSemicompleteMultipartite("parts must partition the vertices")
    for u, v in graph.arcs:
        if seen[u] == seen[v]:
            raise NotSemicompleteMultipartite(f"arc ({u},{v}) inside one class")
    for pi in range(len(parts)):
        for pj in range(pi + 1, len(parts)):
            for u in parts[pi]:
                for v in parts[pj]:
                    if not (graph.has_arc(u, v) or graph.has_arc(v, u)):
                        raise NotSemicompleteMultipartite(
                            f"non-adjacent cross-class pair ({u},{v})")


def classify_multipartite(graph: Digraph, parts: Sequence[Sequence[int]],
                          catalog: PatternCatalog = DEFAULT_CATALOG) -> Classification:
    """Dichotomy verdict for a semicomplete multipartite target."""
    parts = [tuple(p) for p in parts]
    if len(parts) < 2:
        raise NotSemicompleteMultipartite("need at least two classes")
    _check_multipartite(graph, parts)
    k = len(parts)
    if k == 2:
        side = [""] * graph.n
        for v in parts[0]:
            side[v] = SIDE_V
        for v in parts[1]:
            side[v] = SIDE_U
        return classify_bipartite(BipartitionedDigraph(graph, side), catalog)

    shapes = (
        (SHAPE_TOURNAMENT, transitive_tournament(k)),
        (SHAPE_TOURNAMENT_MINUS, transitive_tournament_minus(k + 1)),
        (SHAPE_THREE_CYCLE, DIRECTED_THREE_CYCLE),
    )
    for shape, pattern in shapes:
        assignment = is_extension_of(graph, pattern)
        if assignment is None:
            continue
        solver_ordering = None
        if shape == SHAPE_THREE_CYCLE:
            classes = tuple(
                tuple(v for v in range(graph.n) if assignment[v] == c)
                for c in range(3))
            solver_ordering = KMinMaxOrdering(classes)
            if not ordering_is_usable(graph, solver_ordering):
                raise InconsistencyError("3-cycle blow-up ordering failed validation")
        return Classification(polynomial=True, shape=shape,
                              solver_ordering=solver_ordering)
    return Classification(
        polynomial=False,
        reason="not a blow-up of a transitive tournament, a transitive "
               "tournament minus its source-to-sink arc, or the directed 3-cycle")
