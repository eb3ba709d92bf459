"""Obstruction detection for semicomplete bipartite targets.

A semicomplete bipartite target admits a polynomial-time exact solver exactly
when none of a fixed family of obstructions occurs inside it as an induced
substructure.  The family consists of five small digraphs (and their
converses), plus three seven-vertex bipartite graphs and all even cycles of
length at least six, the latter searched for in the underlying graphs of the
forward-arc, backward-arc, and 2-cycle views of the target.

The patterns are declared as data in one catalog.  The edge set of the
"bipartite tent" entry is kept overridable (see :func:`pattern_catalog`):
unlike the other entries it is defined here from a diagram rather than an
arc list, so a caller who disagrees with the transcription can rebuild the
catalog with a different edge set and re-run every downstream check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .digraph import (
    BACKWARD,
    FORWARD,
    TWO_CYCLE,
    BipartitionedDigraph,
    Digraph,
    UndirectedGraph,
    arc_subdigraph,
    converse,
    digraphs_isomorphic,
    graphs_isomorphic,
    induced_subdigraph,
    induced_subgraph,
    is_semicomplete_bipartite,
    underlying,
)
from .errors import NotSemicompleteBipartite

SIDE_VIEWS = (FORWARD, BACKWARD, TWO_CYCLE)

# Directed patterns, vertices 0-indexed.  Odd/even vertex ids alternate sides.
_C4P_ARCS = ((0, 1), (1, 2), (2, 3), (3, 0), (1, 0))
_C4PP_ARCS = _C4P_ARCS + ((2, 1),)
_HSTAR_ARCS = ((0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4))
_N1_ARCS = ((0, 1), (1, 0), (2, 3), (3, 2), (4, 5), (5, 4),
            (1, 2), (1, 4), (0, 3), (0, 5), (4, 3), (2, 5))
_N2_ARCS = tuple(a for a in _N1_ARCS if a != (1, 0))

# Seven-vertex undirected patterns on sides {0,1,2,3} and {4,5,6}.
BIPARTITE_CLAW_EDGES = ((3, 4), (4, 0), (3, 5), (5, 1), (3, 6), (6, 2))
BIPARTITE_NET_EDGES = ((0, 4), (4, 2), (4, 3), (2, 5), (3, 5), (5, 1), (6, 3))
# Two 4-cycles sharing an edge, plus one pendant vertex: 0-4, 4-2, 1-4, 1-6,
# 3-4, 3-5, 0-6, 0-5.
BIPARTITE_TENT_EDGES = ((0, 4), (4, 2), (1, 4), (1, 6), (3, 4), (3, 5), (0, 6), (0, 5))


@dataclass(frozen=True)
class PatternCatalog:
    """Ordered obstruction patterns; order fixes witness determinism."""

    directed: tuple[tuple[str, Digraph], ...]
    undirected: tuple[tuple[str, UndirectedGraph], ...]


def pattern_catalog(tent_edges=BIPARTITE_TENT_EDGES) -> PatternCatalog:
    """Build the obstruction catalog, optionally overriding the tent edges."""
    base = (
        ("C4'", Digraph(4, _C4P_ARCS)),
        ("C4''", Digraph(4, _C4PP_ARCS)),
        ("H*", Digraph(5, _HSTAR_ARCS)),
        ("N1", Digraph(6, _N1_ARCS)),
        ("N2", Digraph(6, _N2_ARCS)),
    )
    directed = base + tuple(
        (kind + "-converse", converse(pat)) for kind, pat in base)
    undirected = (
        ("bipartite-claw", UndirectedGraph(7, BIPARTITE_CLAW_EDGES)),
        ("bipartite-net", UndirectedGraph(7, BIPARTITE_NET_EDGES)),
        ("bipartite-tent", UndirectedGraph(7, tent_edges)),
    )
    return PatternCatalog(directed=directed, undirected=undirected)


DEFAULT_CATALOG = pattern_catalog()


@dataclass(frozen=True)
class ForbiddenWitness:
    """A concrete obstruction occurrence inside a target digraph.

    ``vertices`` is the witnessing vertex set (ascending).  ``side_view``
    names the arc family whose underlying graph hosts an undirected pattern,
    and is None for the directed patterns.  ``cycle_length`` is set only for
    the even-cycle kind.
    """

    kind: str
    vertices: tuple[int, ...]
    side_view: Optional[str] = None
    cycle_length: Optional[int] = None

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "side_view": self.side_view if self.side_view is not None else "none",
            "vertices": list(self.vertices),
        }
        if self.cycle_length is not None:
            out["cycle_length"] = self.cycle_length
        return out


def _is_cycle_graph(graph: UndirectedGraph) -> bool:
    # connected and 2-regular
    if graph.n < 3 or len(graph.edges) != graph.n:
        return False
    if any(graph.degree(v) != 2 for v in range(graph.n)):
        return False
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in graph.neighbors(v):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == graph.n


def detect_forbidden(graph: BipartitionedDigraph,
                     catalog: PatternCatalog = DEFAULT_CATALOG) -> Optional[ForbiddenWitness]:
    """Search for an induced obstruction; None means the target is tractable.

    Deterministic: kinds are scanned in catalog order (directed patterns,
    then claw/net/tent each across the three side views, then even cycles by
    side view and ascending length), and within a kind the lexicographically
    least witnessing vertex tuple is returned.
    """
    if not is_semicomplete_bipartite(graph):
        raise NotSemicompleteBipartite("forbidden-pattern search requires a "
                                       "semicomplete bipartite target")
    n = graph.base.n
    for kind, pat in catalog.directed:
        if pat.n > n:
            continue
        want = len(pat.arcs)
        for combo in combinations(range(n), pat.n):
            sub = induced_subdigraph(graph.base, combo)
            if len(sub.arcs) == want and digraphs_isomorphic(pat, sub):
                return ForbiddenWitness(kind=kind, vertices=combo)

    views = [(s, underlying(arc_subdigraph(graph, s))) for s in SIDE_VIEWS]
    for kind, pat in catalog.undirected:
        if pat.n > n:
            continue
        want = len(pat.edges)
        for s, view in views:
            for combo in combinations(range(n), pat.n):
                sub = induced_subgraph(view, combo)
                if len(sub.edges) == want and graphs_isomorphic(pat, sub):
                    return ForbiddenWitness(kind=kind, vertices=combo, side_view=s)

    for s, view in views:
        for length in range(6, n + 1, 2):
            for combo in combinations(range(n), length):
                sub = induced_subgraph(view, combo)
                if _is_cycle_graph(sub):
                    return ForbiddenWitness(kind="even-cycle", vertices=combo,
                                            side_view=s, cycle_length=length)
    return None


def detect_long_induced_even_cycle(graph: UndirectedGraph) -> Optional[list[int]]:
    """Find an induced cycle with at least 6 vertices, as an ordered cycle.

    Intended for bipartite graphs, where every cycle is even.  Enumerates
    induced paths by DFS, anchored at each cycle's minimum vertex, pruning
    any extension that would create a chord.
    """
    adj = [set(graph.neighbors(v)) for v in range(graph.n)]

    def grow(path: list[int], on_path: set[int]) -> Optional[list[int]]:
        anchor = path[0]
        last = path[-1]
        interior = on_path - {anchor, last}
        for w in graph.neighbors(last):
            if w <= anchor or w in on_path:
                continue
            if adj[w] & interior:
                continue  # chord to an interior vertex
            if anchor in adj[w]:
                if len(path) + 1 >= 6:
                    return path + [w]
                continue  # closing now is too short; extending keeps the chord
            path.append(w)
            on_path.add(w)
            found = grow(path, on_path)
            if found is not None:
                return found
            path.pop()
            on_path.remove(w)
        return None

    for v in range(graph.n):
        for a in graph.neighbors(v):
            if a <= v:
                continue
            cycle = grow([v, a], {v, a})
            if cycle is not None:
                return cycle
    return None


def verify_witness(graph: BipartitionedDigraph, witness: ForbiddenWitness,
                   catalog: PatternCatalog = DEFAULT_CATALOG) -> bool:
    """Re-validate a witness by direct induced arc/edge exactness."""
    combo = witness.vertices
    if witness.kind == "even-cycle":
        view = underlying(arc_subdigraph(graph, witness.side_view))
        sub = induced_subgraph(view, combo)
        return (len(combo) == witness.cycle_length and witness.cycle_length >= 6
                and witness.cycle_length % 2 == 0 and _is_cycle_graph(sub))
    for kind, pat in catalog.directed:
        if kind == witness.kind:
            sub = induced_subdigraph(graph.base, combo)
            return pat.n == len(combo) and digraphs_isomorphic(pat, sub)
    for kind, pat in catalog.undirected:
        if kind == witness.kind:
            view = underlying(arc_subdigraph(graph, witness.side_view))
            sub = induced_subgraph(view, combo)
            return pat.n == len(combo) and graphs_isomorphic(pat, sub)
    return False
