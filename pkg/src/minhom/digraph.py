"""Core digraph types and structural views.

Vertices are dense 0-indexed integers so downstream flow networks can use
plain array indexing; display names are optional metadata.  All types are
immutable after construction and every operation here is a pure function of
its inputs, so values can be shared freely between threads.

Loops and duplicate arcs are rejected at construction time.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import InputFormatError

SIDE_V = "V"
SIDE_U = "U"

FORWARD = "forward"
BACKWARD = "backward"
TWO_CYCLE = "two_cycle"


class Digraph:
    """A loop-free digraph without multiple arcs on vertices 0..n-1."""

    __slots__ = ("n", "arcs", "labels", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]],
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        arcset = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arcset:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
        self.n = n
        self.arcs = arcset
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must cover every vertex")
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(arcset):
            out[u].append(v)
            inn[v].append(u)
        for lst in inn:
            lst.sort()
        self._out = tuple(tuple(x) for x in out)
        self._in = tuple(tuple(x) for x in inn)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def __eq__(self, other) -> bool:
        return (isinstance(other, Digraph)
                and self.n == other.n and self.arcs == other.arcs)

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"


class UndirectedGraph:
    """A loop-free undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"loop at vertex {a} is not allowed")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a},{b}) out of range for n={n}")
            norm.add((min(a, b), max(a, b)))
        self.n = n
        self.edges = frozenset(norm)
        adj: list[list[int]] = [[] for _ in range(n)]
        for a, b in sorted(norm):
            adj[a].append(b)
            adj[b].append(a)
        for lst in adj:
            lst.sort()
        self._adj = tuple(tuple(x) for x in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def __eq__(self, other) -> bool:
        return (isinstance(other, UndirectedGraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, edges={sorted(self.edges)})"


class BipartitionedDigraph:
    """A digraph together with a fixed bipartition of its vertices.

    ``side[v]`` is either ``"V"`` or ``"U"``.  Every arc must join opposite
    sides; whether the digraph is also semicomplete is a property checked by
    :func:`is_semicomplete_bipartite`, not a stored flag.
    """

    __slots__ = ("base", "side")

    def __init__(self, base: Digraph, side: Sequence[str]):
        side = tuple(side)
        if len(side) != base.n:
            raise ValueError("side assignment must cover every vertex")
        for s in side:
            if s not in (SIDE_V, SIDE_U):
                raise ValueError(f"invalid side marker {s!r}")
        for u, v in base.arcs:
            if side[u] == side[v]:
                raise ValueError(f"arc ({u},{v}) joins vertices on one side")
        self.base = base
        self.side = side

    @property
    def n(self) -> int:
        return self.base.n

    def side_vertices(self, s: str) -> tuple[int, ...]:
        return tuple(v for v in range(self.base.n) if self.side[v] == s)

    def __eq__(self, other) -> bool:
        return (isinstance(other, BipartitionedDigraph)
                and self.base == other.base and self.side == other.side)

    def __hash__(self) -> int:
        return hash((self.base, self.side))

    def __repr__(self) -> str:
        return f"BipartitionedDigraph({self.base!r}, side={self.side})"


def is_semicomplete_bipartite(graph: BipartitionedDigraph) -> bool:
    """True iff every cross-side pair carries at least one arc."""
    vs = graph.side_vertices(SIDE_V)
    us = graph.side_vertices(SIDE_U)
    arcs = graph.base.arcs
    for v in vs:
        for u in us:
            if (v, u) not in arcs and (u, v) not in arcs:
                return False
    return True


def converse(graph: Digraph) -> Digraph:
    """The digraph with every arc reversed."""
    return Digraph(graph.n, ((v, u) for u, v in graph.arcs), graph.labels)


def underlying(graph: Digraph) -> UndirectedGraph:
    """Forget orientations (and collapse 2-cycles into single edges)."""
    return UndirectedGraph(graph.n, graph.arcs)


def arc_subdigraph(graph: BipartitionedDigraph, which: str) -> Digraph:
    """Keep only one family of arcs, preserving the vertex set.

    ``forward`` keeps V-to-U arcs, ``backward`` keeps U-to-V arcs, and
    ``two_cycle`` keeps both arcs of every 2-cycle.
    """
    arcs = graph.base.arcs
    side = graph.side
    if which == FORWARD:
        kept = [(u, v) for u, v in arcs if side[u] == SIDE_V]
    elif which == BACKWARD:
        kept = [(u, v) for u, v in arcs if side[u] == SIDE_U]
    elif which == TWO_CYCLE:
        kept = [(u, v) for u, v in arcs if (v, u) in arcs]
    else:
        raise ValueError(f"unknown arc family {which!r}")
    return Digraph(graph.base.n, kept, graph.base.labels)


def induced_subdigraph(graph: Digraph, vertices: Sequence[int]) -> Digraph:
    """The subdigraph induced on ``vertices``, relabeled 0..k-1 in given order."""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise ValueError("vertex list contains duplicates")
    arcs = [(index[u], index[v]) for u, v in graph.arcs
            if u in index and v in index]
    return Digraph(len(vertices), arcs)


def induced_subgraph(graph: UndirectedGraph, vertices: Sequence[int]) -> UndirectedGraph:
    """The undirected subgraph induced on ``vertices``, relabeled in order."""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise ValueError("vertex list contains duplicates")
    edges = [(index[a], index[b]) for a, b in graph.edges
             if a in index and b in index]
    return UndirectedGraph(len(vertices), edges)


def strong_components(graph: Digraph) -> list[list[int]]:
    """Strongly connected components in a topological order of the condensation.

    Arcs between distinct components only go from earlier components in the
    returned list to later ones.  Iterative Tarjan; components and their
    members come out in a deterministic order (roots scanned ascending,
    members sorted).
    """
    n = graph.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps_rev: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        # explicit DFS stack: (vertex, iterator position over out-neighbors)
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            out = graph.out_neighbors(v)
            advanced = False
            while i < len(out):
                w = out[i]
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                comps_rev.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    comps_rev.reverse()  # Tarjan emits sinks first
    return comps_rev


def weak_components(graph: Digraph) -> list[list[int]]:
    """Weakly connected components, each sorted, ordered by smallest member."""
    n = graph.n
    seen = [False] * n
    comps = []
    for root in range(n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for w in graph.out_neighbors(v) + graph.in_neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    frontier.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def undirected_components(graph: UndirectedGraph) -> list[list[int]]:
    """Connected components of an undirected graph, deterministic order."""
    seen = [False] * graph.n
    comps = []
    for root in range(graph.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for w in graph.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    frontier.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def find_induced_subdigraph(pattern: Digraph, graph: Digraph) -> Optional[dict[int, int]]:
    """Find an injective, arc-exact embedding of ``pattern`` into ``graph``.

    Returns a map m with m(x)m(y) an arc of ``graph`` iff xy is an arc of
    ``pattern`` (induced match), or None.  Backtracking over pattern vertices
    in id order with degree pruning; intended for small fixed patterns.
    """
    if pattern.n > graph.n:
        return None
    assignment: dict[int, int] = {}
    used = [False] * graph.n

    def extend(p: int) -> bool:
        if p == pattern.n:
            return True
        p_out = set(pattern.out_neighbors(p))
        p_in = set(pattern.in_neighbors(p))
        for c in range(graph.n):
            if used[c]:
                continue
            if graph.out_degree(c) < pattern.out_degree(p):
                continue
            if graph.in_degree(c) < pattern.in_degree(p):
                continue
            ok = True
            for q, d in assignment.items():
                if ((q in p_in) != graph.has_arc(d, c)
                        or (q in p_out) != graph.has_arc(c, d)):
                    ok = False
                    break
            if not ok:
                continue
            assignment[p] = c
            used[c] = True
            if extend(p + 1):
                return True
            del assignment[p]
            used[c] = False
        return False

    if extend(0):
        return dict(assignment)
    return None


def digraphs_isomorphic(a: Digraph, b: Digraph) -> bool:
    """Exact isomorphism test for small digraphs (backtracking)."""
    if a.n != b.n or len(a.arcs) != len(b.arcs):
        return False
    sig_a = sorted((a.out_degree(v), a.in_degree(v)) for v in range(a.n))
    sig_b = sorted((b.out_degree(v), b.in_degree(v)) for v in range(b.n))
    if sig_a != sig_b:
        return False
    m = find_induced_subdigraph(a, b)
    return m is not None


def graphs_isomorphic(a: UndirectedGraph, b: UndirectedGraph) -> bool:
    """Exact isomorphism test for small undirected graphs (backtracking)."""
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False
    if sorted(a.degree(v) for v in range(a.n)) != sorted(b.degree(v) for v in range(b.n)):
        return False
    assignment: dict[int, int] = {}
    used = [False] * b.n

    def extend(p: int) -> bool:
        if p == a.n:
            return True
        nbrs = set(a.neighbors(p))
        for c in range(b.n):
            if used[c] or b.degree(c) != a.degree(p):
                continue
            if all((q in nbrs) == b.has_edge(d, c) for q, d in assignment.items()):
                assignment[p] = c
                used[c] = True
                if extend(p + 1):
                    return True
                del assignment[p]
                used[c] = False
        return False

    return extend(0)


def is_extension_of(graph: Digraph, pattern: Digraph) -> Optional[dict[int, int]]:
    """Test whether ``graph`` is a blow-up of ``pattern``.

    Looks for a surjection of vertices of ``graph`` onto vertices of
    ``pattern`` whose classes are independent sets, with x->y an arc of
    ``graph`` exactly when class(x)->class(y) is an arc of ``pattern``.
    Returns the class assignment, or None.
    """
    if pattern.n == 0 or graph.n < pattern.n:
        return None
    assignment: dict[int, int] = {}
    class_count = [0] * pattern.n

    def extend(v: int) -> bool:
        if v == graph.n:
            return all(c > 0 for c in class_count)
        # not enough vertices left to populate the remaining empty classes
        missing = sum(1 for c in class_count if c == 0)
        if graph.n - v < missing:
            return False
        for cls in range(pattern.n):
            ok = True
            for w, cw in assignment.items():
                if graph.has_arc(w, v) != pattern.has_arc(cw, cls):
                    ok = False
                    break
                if graph.has_arc(v, w) != pattern.has_arc(cls, cw):
                    ok = False
                    break
            if not ok:
                continue
            assignment[v] = cls
            class_count[cls] += 1
            if extend(v + 1):
                return True
            del assignment[v]
            class_count[cls] -= 1
        return False

    if extend(0):
        return dict(assignment)
    return None


# --- text format -----------------------------------------------------------
#
# Line 1:            digraph <n>
# Optional line 2:   sides <s_0> <s_1> ... <s_{n-1}>     with s_i in {V, U}
# Then one line      <u> <v>                             per arc, 0-indexed.
# Lines starting with '#' are comments.  The serializer emits arcs sorted
# lexicographically, so parse/format round-trips are byte stable.

def parse_digraph(text: str):
    """Parse the digraph text format.

    Returns a BipartitionedDigraph when a ``sides`` line is present, and a
    plain Digraph otherwise.  Raises InputFormatError on malformed input.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InputFormatError("empty digraph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "digraph":
        raise InputFormatError(f"expected 'digraph <n>' header, got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise InputFormatError(f"bad vertex count {head[1]!r}") from None
    body = lines[1:]
    side = None
    if body and body[0].split() and body[0].split()[0] == "sides":
        side = body[0].split()[1:]
        if len(side) != n:
            raise InputFormatError("sides line must list one marker per vertex")
        body = body[1:]
    arcs = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise InputFormatError(f"expected arc line '<u> <v>', got {ln!r}")
        try:
            arcs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputFormatError(f"non-integer arc endpoints in {ln!r}") from None
    try:
        base = Digraph(n, arcs)
        if side is not None:
            return BipartitionedDigraph(base, side)
        return base
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None


def format_digraph(graph) -> str:
    """Serialize a Digraph or BipartitionedDigraph (arcs sorted)."""
    if isinstance(graph, BipartitionedDigraph):
        base, side = graph.base, graph.side
    else:
        base, side = graph, None
    out = [f"digraph {base.n}"]
    if side is not None:
        out.append("sides " + " ".join(side))
    out.extend(f"{u} {v}" for u, v in sorted(base.arcs))
    return "\n".join(out) + "\n"


def all_vertex_subsets(n: int, k: int):
    """Lexicographic k-subsets of range(n), as tuples."""
    return combinations(range(n), k)
