"""Hardness reductions: independent-set instances to homomorphism instances.

Each reduction fixes one small intractable target and replaces every arc uv
of an input digraph D by a fresh copy of a small gadget digraph hanging off
u and v, with a cost table arranged so that a minimum-cost homomorphism of
the transformed digraph selects a maximum independent set of D: the optimum
cost is |V(D)| - alpha(D).  Verifying that identity with the exhaustive
oracle exercises the constructions end to end at desk scale.

Gadget internals are never shared between arcs; only the original endpoints
are.  Original vertices keep their ids, internals are appended in sorted
arc order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import BipartitionedDigraph, Digraph
from .solver import CostTable, brute_force_minhom

GADGET_KINDS = ("c4p", "c4pp", "hstar", "n1", "n2")

_TARGETS = {
    "c4p": (4, ((0, 1), (1, 0), (1, 2), (2, 3), (3, 0)), "VUVU"),
    "c4pp": (4, ((0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 0)), "VUVU"),
    "hstar": (5, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4)), "VUVUU"),
    "n1": (6, ((0, 1), (1, 0), (2, 3), (3, 2), (4, 5), (5, 4),
               (1, 2), (1, 4), (0, 3), (0, 5), (4, 3), (2, 5)), "VUVUVU"),
    "n2": (6, ((0, 1), (2, 3), (3, 2), (4, 5), (5, 4),
               (1, 2), (1, 4), (0, 3), (0, 5), (4, 3), (2, 5)), "VUVUVU"),
}

# vertices added per arc of D, per gadget kind
GADGET_SIZES = {"c4p": 3, "c4pp": 1, "hstar": 5, "n1": 3, "n2": 3}


def gadget_target(kind: str) -> BipartitionedDigraph:
    n, arcs, sides = _TARGETS[kind]
    return BipartitionedDigraph(Digraph(n, arcs), tuple(sides))


@dataclass(frozen=True)
class GadgetInstance:
    """A reduced instance: transformed digraph, costs, and the fixed target."""

    kind: str
    target: BipartitionedDigraph
    dprime: Digraph
    costs: CostTable
    original_vertices: tuple[int, ...]


def reduce_to_minhom(kind: str, D: Digraph) -> GadgetInstance:
    """Transform an independent-set instance into a homomorphism instance."""
    if kind not in GADGET_KINDS:
        raise ValueError(f"unknown gadget kind {kind!r}")
    target = gadget_target(kind)
    nh = target.base.n
    n0 = D.n
    big = 2 * n0 + 1  # prohibitive cost relative to the endpoint scheme

    zeros = [0] * nh
    if kind == "c4p":
        endpoint = [1, 1, 0, 1]
    elif kind == "c4pp":
        endpoint = [1, 1, 1, 0]
    elif kind == "hstar":
        endpoint = [1, 1, 1, 0, 1]
    elif kind == "n1":
        endpoint = [big, 1, big, big, big, 0]
    else:  # n2
        endpoint = [1, big, big, big, 0, big]

    arcs: list[tuple[int, int]] = []
    rows: list[list[int]] = [list(endpoint) for _ in range(n0)]
    nxt = n0
    for u, v in sorted(D.arcs):
        if kind == "c4p":
            x, y, z = nxt, nxt + 1, nxt + 2
            nxt += 3
            arcs += [(u, x), (x, y), (y, z), (v, z)]
            rows += [list(zeros), list(zeros), list(zeros)]
        elif kind == "c4pp":
            x = nxt
            nxt += 1
            arcs += [(u, x), (x, v)]
            rows += [list(zeros)]
        elif kind == "hstar":
            w1, w2, w3, w4, w5 = range(nxt, nxt + 5)
            nxt += 5
            arcs += [(w1, w2), (w2, w3), (w3, w4), (w4, w1),
                     (w5, u), (w5, v), (w1, u), (w3, v)]
            rows += [list(zeros) for _ in range(5)]
        elif kind == "n1":
            x, y, z = nxt, nxt + 1, nxt + 2
            nxt += 3
            arcs += [(u, x), (v, z), (x, y), (y, z)]
            y_row = list(zeros)
            y_row[5] = big
            rows += [list(zeros), y_row, list(zeros)]
        else:  # n2
            x, y, z = nxt, nxt + 1, nxt + 2
            nxt += 3
            arcs += [(u, x), (v, z), (x, y), (z, y)]
            x_row = list(zeros)
            x_row[3] = big
            z_row = list(zeros)
            z_row[5] = big
            rows += [x_row, list(zeros), z_row]

    dprime = Digraph(nxt, arcs)
    costs = CostTable(rows, n_target=nh)
    return GadgetInstance(kind=kind, target=target, dprime=dprime,
                          costs=costs, original_vertices=tuple(range(n0)))


def max_independent_set_size(D: Digraph) -> int:
    """Exhaustive maximum independent set size (adjacency in either direction)."""
    adj = [0] * D.n
    for u, v in D.arcs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    def best(candidates: int) -> int:
        if candidates == 0:
            return 0
        v = (candidates & -candidates).bit_length() - 1
        without = best(candidates & ~(1 << v))
        with_v = 1 + best(candidates & ~(1 << v) & ~adj[v])
        return max(without, with_v)

    return best((1 << D.n) - 1)


def verify_reduction(instance: GadgetInstance, alpha: int,
                     budget: int = 5_000_000) -> bool:
    """Check the reduction identity: oracle optimum == |V(D)| - alpha."""
    hom = brute_force_minhom(instance.dprime, instance.costs,
                             instance.target.base, budget=budget)
    return hom is not None and hom.cost == len(instance.original_vertices) - alpha
