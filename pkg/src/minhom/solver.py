"""Exact minimum-cost homomorphism solving via a layered minimum cut.

Given a target H with a usable k-class ordering, the input digraph D is
level-partitioned (each arc must advance one class cyclically, which fixes
levels per weak component up to a cyclic shift), and for each component and
shift a flow network is built:

 * an uncuttable arc from the source to the first chain node of every input
   vertex x;
 * a chain arc per position i of x's class, weighted cost(x, i-th class
   vertex) + M, the last one entering the sink, so every finite cut severs
   each chain at least once and (because M exceeds any homomorphism cost)
   exactly once -- the severed position is the assignment of x;
 * per input arc xy and position i, uncuttable consistency arcs into the
   interval table's L/R boundary nodes of y's chain, which make a finite cut
   encode exactly the level-respecting homomorphisms.

The minimum cut then weighs (minimum homomorphism cost) + |vertices| * M.
Index boundaries follow the chain-node convention: position l(j)+1 of any
chain denotes the sink.  Consistency arcs that provably cannot cross a
finite cut (heads pinned to the source side by the source arcs, or tails at
the sink) are omitted by default; ``literal_boundary_arcs=True`` restores
them for cross-checking.

Two kinds of target positions get dedicated treatment instead of
consistency arcs.  A position whose target vertex has no out-arcs cannot
host any input vertex that has an out-arc; one whose target vertex has no
in-arcs ("dead", the positions allowed to interrupt interval runs) cannot
host any input vertex that has an in-arc.  For each affected input vertex
the chain arc at such a position is made uncuttable, which forbids exactly
that one assignment.  (Expressing the out-empty case with boundary
consistency arcs would forbid every position up to it, which is only
correct when empty rows precede all nonempty ones; and interval runs
interrupted by dead positions are not expressible with boundary arcs alone.
Both situations arise only in non-strongly-connected targets, where the
exchange property can force them.)

Isolated input vertices bypass the networks entirely: they map to their
cheapest target vertex (least id on ties), and are accounted into the
reported total cut weight at bypass cost + M, exactly what their singleton
chain would contribute.

A brute-force oracle (`brute_force_minhom`) provides the independent ground
truth: exhaustive search over assignments, organized as divide-and-conquer
over graph separators with memoization so that gadget-style instances with
many small appendages stay tractable.  It shares nothing with the flow path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .digraph import Digraph, weak_components
from .errors import BudgetExceeded, DimensionMismatch, InconsistencyError, InputFormatError
from .flow import FlowNetwork
from .ordering import IntervalTable, KMinMaxOrdering, interval_table, validate_k_min_max

DEFAULT_ORACLE_BUDGET = 5_000_000


class CostTable:
    """Nonnegative integer costs, one row per input vertex, one column per
    target vertex."""

    __slots__ = ("n_input", "n_target", "rows")

    def __init__(self, rows: Sequence[Sequence[int]], n_target: Optional[int] = None):
        rows = tuple(tuple(int(c) for c in row) for row in rows)
        if rows:
            width = len(rows[0])
        else:
            width = n_target if n_target is not None else 0
        for row in rows:
            if len(row) != width:
                raise ValueError("cost rows must all have the same length")
            for c in row:
                if c < 0:
                    raise ValueError("costs must be nonnegative")
        if n_target is not None and width != n_target:
            raise ValueError("cost row width does not match target size")
        self.n_input = len(rows)
        self.n_target = width
        self.rows = rows

    def cost(self, u: int, h: int) -> int:
        return self.rows[u][h]

    def total(self) -> int:
        return sum(sum(row) for row in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, CostTable) and self.rows == other.rows \
            and self.n_target == other.n_target

    def __hash__(self) -> int:
        return hash((self.rows, self.n_target))

    def __repr__(self) -> str:
        return f"CostTable({self.n_input}x{self.n_target})"


def parse_costs(text: str) -> CostTable:
    """Parse the cost table text format: ``costs <nD> <nH>`` then nD rows."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InputFormatError("empty cost file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "costs":
        raise InputFormatError(f"expected 'costs <nD> <nH>' header, got {lines[0]!r}")
    try:
        nd, nh = int(head[1]), int(head[2])
    except ValueError:
        raise InputFormatError("bad dimensions in cost header") from None
    if len(lines) - 1 != nd:
        raise InputFormatError(f"expected {nd} cost rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != nh:
            raise InputFormatError(f"expected {nh} entries per cost row, got {ln!r}")
        try:
            row = [int(p) for p in parts]
        except ValueError:
            raise InputFormatError(f"non-integer cost in {ln!r}") from None
        if any(c < 0 for c in row):
            raise InputFormatError("costs must be nonnegative")
        rows.append(row)
    return CostTable(rows, n_target=nh)


def format_costs(table: CostTable) -> str:
    out = [f"costs {table.n_input} {table.n_target}"]
    out.extend(" ".join(str(c) for c in row) for row in table.rows)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class Homomorphism:
    """An arc-preserving assignment of input vertices to target vertices."""

    mapping: tuple[int, ...]
    cost: int


def is_homomorphism(D: Digraph, H: Digraph, mapping: Sequence[int]) -> bool:
    if len(mapping) != D.n:
        return False
    if any(not (0 <= h < H.n) for h in mapping):
        return False
    return all(H.has_arc(mapping[u], mapping[v]) for u, v in D.arcs)


@dataclass(frozen=True)
class LevelAssignment:
    """Per-component base levels; valid levelings are the base plus one cyclic
    shift chosen independently per weak component."""

    k: int
    components: tuple[tuple[int, ...], ...]
    base: tuple[int, ...]


def level_partitions(D: Digraph, k: int) -> Optional[LevelAssignment]:
    """Level each weak component so arcs advance one level mod k, or None.

    A component whose traversal reaches a contradiction mod k admits no such
    leveling, hence no homomorphism into any target with a k-class ordering.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    base = [-1] * D.n
    comps = weak_components(D)
    for comp in comps:
        root = comp[0]
        base[root] = 0
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for w in D.out_neighbors(v):
                lw = (base[v] + 1) % k
                if base[w] < 0:
                    base[w] = lw
                    frontier.append(w)
                elif base[w] != lw:
                    return None
            for w in D.in_neighbors(v):
                lw = (base[v] - 1) % k
                if base[w] < 0:
                    base[w] = lw
                    frontier.append(w)
                elif base[w] != lw:
                    return None
    return LevelAssignment(k=k, components=tuple(tuple(c) for c in comps),
                           base=tuple(base))


class CutNetwork:
    """A built flow network plus the bookkeeping to read assignments back."""

    __slots__ = ("flow", "source", "sink", "vertices", "levels", "ordering",
                 "costs", "M", "inf", "node_base", "chain_edges")

    def __init__(self, flow, source, sink, vertices, levels, ordering, costs,
                 M, inf, node_base, chain_edges):
        self.flow = flow
        self.source = source
        self.sink = sink
        self.vertices = vertices
        self.levels = levels
        self.ordering = ordering
        self.costs = costs
        self.M = M
        self.inf = inf
        self.node_base = node_base
        self.chain_edges = chain_edges


def build_network(D: Digraph, costs: CostTable, H: Digraph,
                  ordering: KMinMaxOrdering, table: IntervalTable,
                  levels: dict[int, int], vertices: Optional[Sequence[int]] = None,
                  M: Optional[int] = None,
                  literal_boundary_arcs: bool = False) -> CutNetwork:
    """Assemble the cut network for the given vertices and concrete levels.

    ``levels[x]`` is the class index of x; every class used must be nonempty.
    ``M`` defaults to 1 + the grand total of the cost table.
    """
    _check_dims(D, costs, H)
    classes = ordering.classes
    sizes = ordering.class_sizes()
    k = ordering.k
    if vertices is None:
        vertices = tuple(range(D.n))
    else:
        vertices = tuple(sorted(vertices))
    vset = set(vertices)
    for x in vertices:
        j = levels[x]
        if not (0 <= j < k):
            raise ValueError(f"level of vertex {x} out of range")
        if sizes[j] == 0:
            raise ValueError(f"vertex {x} is leveled into an empty class")
    if M is None:
        M = 1 + costs.total()

    node_base: dict[int, int] = {}
    next_id = 2  # 0 = source, 1 = sink
    for x in vertices:
        node_base[x] = next_id
        next_id += sizes[levels[x]]

    def node(x: int, i: int) -> int:
        # position i of x's chain, 1-indexed; position size+1 is the sink
        if i == sizes[levels[x]] + 1:
            return 1
        return node_base[x] + i - 1

    def row_empty(j: int, i: int) -> bool:
        return table.high[j][i - 1] - table.low[j][i - 1] == 1

    has_out = {x: any(y in vset for y in D.out_neighbors(x)) for x in vertices}
    has_in = {x: any(y in vset for y in D.in_neighbors(x)) for x in vertices}

    chain_caps: dict[int, list[Optional[int]]] = {}
    finite_total = 0
    for x in vertices:
        j = levels[x]
        caps: list[Optional[int]] = []
        for i in range(1, sizes[j] + 1):
            h = classes[j][i - 1]
            banned = ((has_out[x] and H.out_degree(h) == 0)
                      or (has_in[x] and H.in_degree(h) == 0))
            if banned:
                caps.append(None)  # position forbidden: uncuttable chain arc
            else:
                cap = costs.cost(x, h) + M
                caps.append(cap)
                finite_total += cap
        chain_caps[x] = caps
    inf = finite_total + 1

    net = FlowNetwork(next_id)
    chain_edges: dict[int, list[int]] = {}
    for x in vertices:
        j = levels[x]
        edges = [net.add_edge(0, node(x, 1), inf)]
        for i in range(1, sizes[j] + 1):
            cap = chain_caps[x][i - 1]
            edges.append(net.add_edge(node(x, i), node(x, i + 1),
                                      inf if cap is None else cap))
        chain_edges[x] = edges

    for x, y in sorted(D.arcs):
        if x not in vset or y not in vset:
            continue
        j = levels[x]
        jn = levels[y]
        if jn != (j + 1) % k:
            raise ValueError(f"levels of arc ({x},{y}) do not advance one class")
        ln = sizes[jn]
        for i in range(1, sizes[j] + 1):
            if row_empty(j, i):
                continue  # position already forbidden outright
            lo = table.low[j][i - 1]
            hi = table.high[j][i - 1]
            # head at position lo+1 == 1 is pinned to the source side and the
            # arc can never cross a finite cut
            if lo > 0 or literal_boundary_arcs:
                net.add_edge(node(x, i), node(y, lo + 1), inf)
            # tail at position hi == ln+1 is the sink; such arcs cannot cross
            if hi <= ln or literal_boundary_arcs:
                net.add_edge(node(y, hi), node(x, i + 1), inf)

    return CutNetwork(flow=net, source=0, sink=1, vertices=vertices,
                      levels=dict(levels), ordering=ordering, costs=costs,
                      M=M, inf=inf, node_base=node_base, chain_edges=chain_edges)


def min_cut_solve(net: CutNetwork) -> tuple[frozenset[int], int]:
    """Exact minimum cut: returns (source-side node set, cut weight).

    Chains are pre-saturated up to their cheapest arc before running the
    augmenting phases; this is a plain feasible-flow warm start and does not
    change the result.
    """
    warm = 0
    for x in net.vertices:
        edges = net.chain_edges[x]
        amount = min((net.flow.cap[e] for e in edges[1:]
                      if net.flow.cap[e] < net.inf), default=0)
        if amount > 0:
            net.flow.send_along(edges, amount)
            warm += amount
    weight = warm + net.flow.max_flow(net.source, net.sink)
    side = net.flow.residual_reachable(net.source)
    return side, weight


def recover_homomorphism(net: CutNetwork, side: frozenset[int],
                         weight: int) -> tuple[dict[int, int], int]:
    """Read the assignment off a finite minimum cut and re-verify it.

    Returns (assignment, cost) with cost == weight - |vertices| * M; any
    failure of the chain-prefix structure, arc preservation, or the cost
    identity raises InconsistencyError since the theory rules them out.
    """
    classes = net.ordering.classes
    sizes = net.ordering.class_sizes()
    assignment: dict[int, int] = {}
    cost = 0
    for x in net.vertices:
        j = net.levels[x]
        size = sizes[j]
        base = net.node_base[x]
        in_side = [base + i in side for i in range(size)]
        if not in_side[0]:
            raise InconsistencyError(f"chain of vertex {x} starts outside the cut")
        p = 0
        while p < size and in_side[p]:
            p += 1
        if any(in_side[p:]):
            raise InconsistencyError(f"cut crosses chain of vertex {x} twice")
        assignment[x] = classes[j][p - 1]
        cost += net.costs.cost(x, assignment[x])
    if cost != weight - len(net.vertices) * net.M:
        raise InconsistencyError("cut weight does not match recovered cost")
    return assignment, cost


@dataclass(frozen=True)
class SolveReport:
    """A solved instance: the optimum plus min-cut accounting.

    ``cut_weight`` sums the component cuts (isolated vertices counted at
    bypass cost + M, as their singleton chains would be), so it always equals
    ``homomorphism.cost + n * M``.
    """

    homomorphism: Homomorphism
    cut_weight: int
    M: int


def _check_dims(D: Digraph, costs: CostTable, H: Digraph) -> None:
    if costs.n_input != D.n or costs.n_target != H.n:
        raise DimensionMismatch(
            f"cost table is {costs.n_input}x{costs.n_target}, expected "
            f"{D.n}x{H.n}")


def solve_minhom_detailed(D: Digraph, costs: CostTable, H: Digraph,
                          ordering: KMinMaxOrdering) -> Optional[SolveReport]:
    """Find a minimum-cost homomorphism of D into H, or None if none exists.

    The ordering must be a usable layered ordering of H.  Components of D are
    solved independently, each over its k cyclic level shifts, taking the
    best finite shift; isolated vertices take their cheapest target vertex.
    """
    _check_dims(D, costs, H)
    if not validate_k_min_max(H, ordering):
        raise ValueError("ordering is not a layered min-max ordering of H")
    table = interval_table(H, ordering)
    k = ordering.k
    sizes = ordering.class_sizes()
    M = 1 + costs.total()

    lv = level_partitions(D, k)
    if lv is None:
        return None

    mapping: list[int] = [-1] * D.n
    total_cost = 0
    total_weight = 0
    for comp in lv.components:
        if len(comp) == 1:
            x = comp[0]
            best_h = min(range(H.n), key=lambda h: (costs.cost(x, h), h),
                         default=None)
            if best_h is None:
                return None
            mapping[x] = best_h
            total_cost += costs.cost(x, best_h)
            total_weight += costs.cost(x, best_h) + M
            continue
        best: Optional[tuple[int, CutNetwork, frozenset[int]]] = None
        for shift in range(k):
            levels = {x: (lv.base[x] + shift) % k for x in comp}
            if any(sizes[levels[x]] == 0 for x in comp):
                continue
            net = build_network(D, costs, H, ordering, table, levels,
                                vertices=comp, M=M)
            side, weight = min_cut_solve(net)
            if weight >= net.inf:
                continue
            if best is None or weight < best[0]:
                best = (weight, net, side)
        if best is None:
            return None
        weight, net, side = best
        assignment, cost = recover_homomorphism(net, side, weight)
        for x, h in assignment.items():
            mapping[x] = h
        total_cost += cost
        total_weight += weight

    hom = Homomorphism(tuple(mapping), total_cost)
    if not is_homomorphism(D, H, hom.mapping):
        raise InconsistencyError("recovered assignment is not a homomorphism")
    return SolveReport(homomorphism=hom, cut_weight=total_weight, M=M)


def solve_minhom(D: Digraph, costs: CostTable, H: Digraph,
                 ordering: KMinMaxOrdering) -> Optional[Homomorphism]:
    report = solve_minhom_detailed(D, costs, H, ordering)
    return report.homomorphism if report is not None else None


# --- exhaustive oracle -------------------------------------------------------

def _dissection_order(comp: list[int], D: Digraph) -> list[int]:
    """Order vertices so that earlier ones split the rest into small pieces."""
    if len(comp) <= 3:
        return sorted(comp)
    members = set(comp)

    def split_sizes(without: int) -> list[int]:
        left = members - {without}
        sizes = []
        seen: set[int] = set()
        for root in left:
            if root in seen:
                continue
            size = 0
            frontier = [root]
            seen.add(root)
            while frontier:
                v = frontier.pop()
                size += 1
                for w in D.out_neighbors(v) + D.in_neighbors(v):
                    if w in left and w not in seen:
                        seen.add(w)
                        frontier.append(w)
            sizes.append(size)
        return sizes

    pivot = min(comp, key=lambda v: (max(split_sizes(v), default=0), v))
    rest = sorted(members - {pivot})
    pieces: list[list[int]] = []
    seen: set[int] = set()
    for root in rest:
        if root in seen:
            continue
        piece = [root]
        seen.add(root)
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for w in D.out_neighbors(v) + D.in_neighbors(v):
                if w in members and w != pivot and w not in seen:
                    seen.add(w)
                    piece.append(w)
                    frontier.append(w)
        pieces.append(piece)
    order = [pivot]
    for piece in sorted(pieces, key=min):
        order.extend(_dissection_order(piece, D))
    return order


def brute_force_minhom(D: Digraph, costs: CostTable, H: Digraph,
                       budget: int = DEFAULT_ORACLE_BUDGET) -> Optional[Homomorphism]:
    """Exhaustive minimum over all homomorphisms of D into H, or None.

    Independent ground truth for the flow solver: plain search over vertex
    assignments.  The search assigns separator vertices first and solves the
    disconnected remainders independently (with memoization on the boundary
    colors), which keeps instances with many small appendages feasible while
    remaining an exhaustive enumeration.  ``budget`` caps the number of
    explored search nodes; exceeding it raises BudgetExceeded.
    """
    _check_dims(D, costs, H)
    if D.n == 0:
        return Homomorphism((), 0)
    if H.n == 0:
        return None
    nh = H.n
    hout = [frozenset(H.out_neighbors(h)) for h in range(nh)]
    hin = [frozenset(H.in_neighbors(h)) for h in range(nh)]
    nodes = 0

    mapping = [-1] * D.n
    total = 0
    for comp in weak_components(D):
        order = _dissection_order(list(comp), D)
        order_pos = {v: i for i, v in enumerate(order)}
        memo: dict = {}

        def boundary_sig(sub: frozenset, fixed: dict) -> tuple:
            sig = set()
            for v in sub:
                for w in D.out_neighbors(v) + D.in_neighbors(v):
                    if w in fixed:
                        sig.add((w, fixed[w]))
            return tuple(sorted(sig))

        def split(rest: frozenset) -> list[frozenset]:
            out = []
            seen: set[int] = set()
            for root in sorted(rest):
                if root in seen:
                    continue
                piece = {root}
                seen.add(root)
                frontier = [root]
                while frontier:
                    v = frontier.pop()
                    for w in D.out_neighbors(v) + D.in_neighbors(v):
                        if w in rest and w not in seen:
                            seen.add(w)
                            piece.add(w)
                            frontier.append(w)
                out.append(frozenset(piece))
            return out

        def solve(sub: frozenset, fixed: dict):
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"oracle exceeded {budget} search nodes")
            v = min(sub, key=order_pos.__getitem__)
            in_fixed = [fixed[w] for w in D.in_neighbors(v) if w in fixed]
            out_fixed = [fixed[w] for w in D.out_neighbors(v) if w in fixed]
            rest = sub - {v}
            best = None
            best_assign = None
            colors = sorted(range(nh), key=lambda c: (costs.cost(v, c), c))
            for c in colors:
                here = costs.cost(v, c)
                if best is not None and here >= best:
                    break  # colors are cost-sorted; nothing cheaper remains
                if any(c not in hout[cw] for cw in in_fixed):
                    continue
                if any(cw not in hout[c] for cw in out_fixed):
                    continue
                assign = [(v, c)]
                feasible = True
                if rest:
                    fixed[v] = c
                    for piece in split(rest):
                        key = (piece, boundary_sig(piece, fixed))
                        if key in memo:
                            res = memo[key]
                        else:
                            res = solve(piece, fixed)
                            memo[key] = res
                        if res is None:
                            feasible = False
                            break
                        here += res[0]
                        assign.extend(res[1])
                        if best is not None and here >= best:
                            feasible = False
                            break
                    del fixed[v]
                if not feasible:
                    continue
                if best is None or here < best:
                    best = here
                    best_assign = tuple(assign)
            if best is None:
                return None
            return best, best_assign

        result = solve(frozenset(comp), {})
        if result is None:
            return None
        comp_cost, assign = result
        for v, c in assign:
            mapping[v] = c
        total += comp_cost
    return Homomorphism(tuple(mapping), total)
