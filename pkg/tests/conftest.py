"""Shared builders for the test suite."""

from __future__ import annotations

import itertools
import random

import pytest

from minhom import BipartitionedDigraph, Digraph


def bipartite(a: int, b: int, arcs) -> BipartitionedDigraph:
    """Sides: vertices 0..a-1 on V, a..a+b-1 on U."""
    return BipartitionedDigraph(Digraph(a + b, arcs), "V" * a + "U" * b)


def directed_cycle(p: int) -> Digraph:
    return Digraph(p, [(i, (i + 1) % p) for i in range(p)])


def two_cycle_target() -> BipartitionedDigraph:
    return bipartite(1, 1, [(0, 1), (1, 0)])


def four_cycle_target() -> BipartitionedDigraph:
    return BipartitionedDigraph(directed_cycle(4), "VUVU")


def random_semicomplete(rng: random.Random, a: int, b: int) -> BipartitionedDigraph:
    arcs = []
    for v in range(a):
        for u in range(a, a + b):
            state = rng.randint(0, 2)
            if state == 0:
                arcs.append((v, u))
            elif state == 1:
                arcs.append((u, v))
            else:
                arcs.extend([(v, u), (u, v)])
    return bipartite(a, b, arcs)


def enumerate_semicomplete(a: int, b: int):
    """All semicomplete bipartite digraphs with fixed side sizes."""
    pairs = [(v, a + u) for v in range(a) for u in range(b)]
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (v, u), state in zip(pairs, states):
            if state == 0:
                arcs.append((v, u))
            elif state == 1:
                arcs.append((u, v))
            else:
                arcs.extend([(v, u), (u, v)])
        yield bipartite(a, b, arcs)


def random_digraph(rng: random.Random, n: int, density: float) -> Digraph:
    arcs = [(u, v) for u in range(n) for v in range(n)
            if u != v and rng.random() < density]
    return Digraph(n, arcs)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
