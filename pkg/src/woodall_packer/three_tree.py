"""Recognition and decomposition of 3-trees.

A 3-tree grows from a triangle by repeatedly picking three pairwise
adjacent vertices and attaching a new vertex to all three. The planar ones
are exactly those whose growth always subdivides a face of the current
plane drawing (Apollonian networks); :func:`certify_apollonian` checks that
combinatorially by tracking the face multiset, starting from the two sides
of the base triangle, without building an embedding.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .digraph import (
    Digraph,
    Graph,
    connected_components,
    induced_subdigraph,
    make_graph,
    underlying_graph,
)
from .dicycles import Ditriangle, ditriangles
from .errors import NotIndependent, TooSmall


class Step(NamedTuple):
    """One growth step: ``vertex`` is attached to the triangle ``host``."""

    vertex: int
    host: frozenset[int]


@dataclass(frozen=True)
class ConstructionSequence:
    """A base triangle plus the ordered growth steps of a 3-tree."""

    base: frozenset[int]
    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        if len(self.base) != 3:
            raise ValueError("base must have exactly three vertices")

    @property
    def n(self) -> int:
        return 3 + len(self.steps)

    def replay(self) -> Graph:
        """Rebuild the graph, checking each host is already present and
        pairwise adjacent and each vertex enters exactly once."""
        present = set(self.base)
        edges = {tuple(sorted(e)) for e in combinations(self.base, 2)}
        for vertex, host in self.steps:
            if len(host) != 3:
                raise ValueError(f"host {sorted(host)} is not a triangle")
            if vertex in present:
                raise ValueError(f"vertex {vertex} introduced twice")
            if not host <= present:
                raise ValueError(f"host {sorted(host)} not yet introduced")
            for u, v in combinations(sorted(host), 2):
                if (u, v) not in edges:
                    raise ValueError(f"host pair {u}-{v} is not an edge")
            for u in host:
                edges.add((min(u, vertex), max(u, vertex)))
            present.add(vertex)
        if sorted(present) != list(range(len(present))):
            raise ValueError("vertex labels must be dense from zero")
        return make_graph(len(present), edges)


@dataclass(frozen=True)
class SeparatorSplit:
    """A ditriangle whose removal disconnects the graph, together with the
    vertex sets of the resulting parts (each part keeps the triangle)."""

    ditriangle: Ditriangle
    parts: tuple[frozenset[int], ...]


def peel_order(graph: Graph) -> ConstructionSequence | None:
    """Recognize a 3-tree by greedily deleting degree-3 vertices whose
    neighborhoods are triangles; returns the growth sequence or None.

    The lowest-numbered deletable vertex goes first, so recognition is
    reproducible. Which vertex is peeled first never changes the outcome,
    only the sequence returned.
    """
    if graph.n < 3:
        return None
    adj: list[set[int]] = [set(graph.adj[v]) for v in range(graph.n)]
    alive = set(range(graph.n))
    removed: list[Step] = []
    while len(alive) > 3:
        pick = -1
        for v in sorted(alive):
            if len(adj[v]) == 3:
                x, y, z = sorted(adj[v])
                if y in adj[x] and z in adj[x] and z in adj[y]:
                    pick = v
                    break
        if pick < 0:
            return None
        nbrs = frozenset(adj[pick])
        for u in nbrs:
            adj[u].discard(pick)
        adj[pick].clear()
        alive.remove(pick)
        removed.append(Step(pick, nbrs))
    a, b, c = sorted(alive)
    if not (b in adj[a] and c in adj[a] and c in adj[b]):
        return None
    return ConstructionSequence(frozenset(alive), tuple(reversed(removed)))


def certify_apollonian(seq: ConstructionSequence) -> bool:
    """True iff every step subdivides a face still available at that point.

    The base triangle starts with both of its sides available; a step
    consumes one face and exposes the three new ones. Malformed sequences
    (reused vertices, hosts never introduced) simply fail the check.
    """
    faces: Counter[frozenset[int]] = Counter({seq.base: 2})
    present = set(seq.base)
    for vertex, host in seq.steps:
        if vertex in present or len(host) != 3:
            return False
        if faces[host] == 0:
            return False
        faces[host] -= 1
        for pair in combinations(host, 2):
            faces[frozenset((vertex, *pair))] += 1
        present.add(vertex)
    return True


def degree3_set(graph: Graph) -> frozenset[int]:
    """All vertices of degree exactly three.

    On a 3-tree with at least five vertices this set is independent and its
    deletion leaves a smaller 3-tree; independence is checked here, the
    closure property is the caller's to rely on.
    """
    if graph.n <= 4:
        raise TooSmall("need at least five vertices")
    v3 = frozenset(v for v in range(graph.n) if graph.degree(v) == 3)
    for v in sorted(v3):
        for w in graph.adj[v]:
            if w in v3:
                raise NotIndependent(f"degree-3 vertices {v} and {w} are adjacent")
    return v3


def find_separator_ditriangle(g: Digraph) -> SeparatorSplit | None:
    """First ditriangle (in canonical order) whose three vertices separate
    the underlying graph, with the parts it splits off. None when every
    ditriangle leaves the rest connected. Assumes a connected input."""
    ug = underlying_graph(g)
    for tri in ditriangles(g):
        cut = frozenset(tri.nodes())
        comps = connected_components(ug, without=cut)
        if len(comps) >= 2:
            parts = tuple(comp | cut for comp in comps)
            return SeparatorSplit(tri, parts)
    return None


def split_at_separator(g: Digraph, split: SeparatorSplit) -> list[tuple[Digraph, dict[int, int]]]:
    """Induced subdigraph of each part, with its old-to-new relabeling.

    Parts overlap exactly in the separator triangle, so the triangle's arcs
    appear in every piece and all other arcs in exactly one.
    """
    return [induced_subdigraph(g, part) for part in split.parts]
