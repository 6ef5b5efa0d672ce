"""Shared test helpers: brute-force oracles and instance builders.

The oracles recompute everything from first principles (vertex
permutations and exhaustive class assignments) and share no code with the
library, so expected values in the tests are frozen against them instead
of against the code under test.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

import woodall_packer as wp


def brute_dicycles(g: wp.Digraph) -> set[frozenset[wp.Arc]]:
    """Every simple dicycle, as its arc set, by trying all vertex tuples.

    A directed cycle has one vertex sequence up to rotation; anchoring the
    smallest vertex first makes each appear exactly once. Only sensible for
    small n (the loop is sum over k of n!/(n-k)! tuples).
    """
    found = set()
    for size in range(2, g.n + 1):
        for nodes in itertools.permutations(range(g.n), size):
            if nodes[0] != min(nodes):
                continue
            arcs = [wp.Arc(nodes[i], nodes[(i + 1) % size]) for i in range(size)]
            if all(a in g.arcs for a in arcs):
                found.add(frozenset(arcs))
    return found


def brute_is_transversal(g: wp.Digraph, arcs: set[wp.Arc]) -> bool:
    """Does the arc set meet every brute-enumerated dicycle?"""
    return all(cyc & arcs for cyc in brute_dicycles(g))


def brute_nu(g: wp.Digraph) -> int:
    """Largest number of disjoint transversals, by trying every assignment
    of arcs to k classes or none. Only for instances with few arcs."""
    arcs = sorted(g.arcs)
    if len(arcs) > 9:
        raise ValueError("brute_nu is exponential, keep it under ten arcs")
    cycles = brute_dicycles(g)
    if not cycles:
        raise ValueError("no dicycle, packing number undefined")
    # disjoint transversals each take an arc of a shortest dicycle
    ceiling = min(len(arcs), min(len(c) for c in cycles))
    for k in range(ceiling, 0, -1):
        for classes in itertools.product(range(k + 1), repeat=len(arcs)):
            split = [
                {a for a, c in zip(arcs, classes) if c == i} for i in range(k)
            ]
            if all(
                all(cyc & set(t) for cyc in cycles) for t in split
            ):
                return k
    return 0


def assert_packing(g: wp.Digraph, p: wp.Packing, size: int) -> None:
    """Library verification plus, on tiny instances, the brute oracle."""
    report = wp.verify_packing(g, p)
    assert report.verdict, report
    assert len(p) == size
    if g.n <= 6:
        seen: set[wp.Arc] = set()
        for t in p.transversals:
            assert not (seen & t), "classes overlap"
            seen |= t
            assert brute_is_transversal(g, set(t))


def ditriangle_digraph() -> wp.Digraph:
    return wp.make_digraph(3, [(0, 1), (1, 2), (2, 0)])


def digon_digraph() -> wp.Digraph:
    return wp.make_digraph(2, [(0, 1), (1, 0)])


def bidirected_triangle() -> wp.Digraph:
    return wp.make_digraph(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)])


def glued_k4s() -> tuple[wp.Digraph, wp.Ditriangle]:
    """Two K4 orientations sharing the ditriangle 0->1->2->0, one apex on
    each side. Five nodes; the triangle separates apexes 3 and 4."""
    arcs = [
        (0, 1), (1, 2), (2, 0),
        (0, 3), (3, 1), (2, 3),
        (4, 0), (1, 4), (4, 2),
    ]
    return wp.make_digraph(5, arcs), wp.make_ditriangle(0, 1, 2)


def single_ditriangle_5() -> wp.Digraph:
    """Five-node 3-tree digraph, no separator ditriangle, acyclic core.

    Vertex 3 is a degree-3 source (on no dicycle); vertex 4 sits on the
    only ditriangle 0->1->4->0. Built for pinning down the routing rule
    around degree-3 vertices.
    """
    arcs = [
        (0, 1), (2, 0), (2, 1),
        (3, 0), (3, 1), (3, 2),
        (1, 4), (2, 4), (4, 0),
    ]
    return wp.make_digraph(5, arcs)


def shared_out_arc_5() -> wp.Digraph:
    """Five-node 3-tree digraph where vertex 4 lies on two ditriangles,
    0->4->1->0 and 2->4->1->2, sharing the out-arc 4->1."""
    arcs = [
        (1, 0), (1, 2), (0, 2),
        (3, 0), (3, 1), (3, 2),
        (0, 4), (2, 4), (4, 1),
    ]
    return wp.make_digraph(5, arcs)


def cyclic_core_8() -> wp.Digraph:
    """Eight-node instance with no separator ditriangle whose core, after
    deleting the degree-3 vertices {3, 7}, keeps the dicycle 0->1->4->2->0.
    The plain degree-3 routing cannot handle it."""
    arcs = [
        (0, 1), (0, 4), (0, 7), (1, 3), (1, 4), (2, 0), (2, 1), (3, 0),
        (3, 2), (4, 2), (4, 6), (5, 0), (5, 1), (5, 4), (6, 0), (6, 5),
        (6, 7), (7, 5),
    ]
    return wp.make_digraph(8, arcs)


def lift_resistant_9() -> wp.Digraph:
    """Nine-node instance where even packing the cyclic core recursively
    and lifting the degree-3 vertices back cannot succeed; only the
    insertion-order search packs it."""
    arcs = [
        (0, 2), (0, 5), (0, 7), (1, 0), (1, 2), (1, 4), (1, 7), (1, 8),
        (2, 3), (2, 8), (3, 0), (3, 1), (4, 0), (4, 3), (4, 6), (5, 1),
        (5, 2), (5, 8), (6, 0), (6, 3), (7, 4),
    ]
    return wp.make_digraph(9, arcs)


def order_sensitive_17() -> wp.Digraph:
    """Seventeen-node instance on which the insertion-order search thrashes
    under the canonical peel order but finishes quickly under a relabeled
    one; exercises the restart portfolio."""
    arcs = [
        (0, 3), (0, 12), (1, 0), (1, 2), (1, 4), (1, 5), (1, 7), (2, 0),
        (2, 5), (2, 6), (2, 7), (2, 8), (2, 9), (2, 11), (2, 14), (3, 1),
        (3, 2), (4, 2), (4, 3), (4, 6), (5, 0), (5, 7), (5, 10), (5, 13),
        (5, 16), (6, 3), (7, 8), (7, 10), (7, 14), (7, 16), (8, 1), (9, 0),
        (9, 5), (10, 2), (10, 16), (11, 1), (11, 4), (12, 5), (12, 9),
        (13, 2), (13, 9), (14, 8), (15, 3), (15, 4), (15, 6),
    ]
    return wp.make_digraph(17, arcs)


@st.composite
def small_digraphs(draw, max_n: int = 7, allow_digons: bool = True):
    """Arbitrary small digraphs for property tests."""
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.sets(st.sampled_from(pairs)))
    if not allow_digons:
        arcs = {(u, v) for u, v in arcs if (v, u) not in arcs or u < v}
    return wp.make_digraph(n, arcs)
