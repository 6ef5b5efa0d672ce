"""Shortest dicycles, ditriangles, and simple dicycle enumeration."""

from __future__ import annotations

import math
from collections import defaultdict, deque
from dataclasses import dataclass

from .digraph import Arc, DicycleWitness, Digraph, canonical_witness
from .errors import DigonEncountered, LimitExceeded, NoChordFound

INFINITE = math.inf


@dataclass(frozen=True)
class Ditriangle:
    """A directed triangle ``a -> b -> c -> a``, stored with the smallest
    node first so each rotation class has one representative."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if len({self.a, self.b, self.c}) != 3:
            raise ValueError("ditriangle nodes must be distinct")

    def nodes(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def arcs(self) -> tuple[Arc, Arc, Arc]:
        return (Arc(self.a, self.b), Arc(self.b, self.c), Arc(self.c, self.a))

    def witness(self) -> DicycleWitness:
        return DicycleWitness(self.nodes())


def make_ditriangle(a: int, b: int, c: int) -> Ditriangle:
    """Canonical representative of the rotation class of ``a->b->c->a``."""
    rotations = ((a, b, c), (b, c, a), (c, a, b))
    return Ditriangle(*min(rotations))


def girth(g: Digraph) -> tuple[int | float, DicycleWitness | None]:
    """Length of a shortest dicycle with a witness, or ``(inf, None)``.

    Digons are found by a direct antiparallel scan; otherwise a BFS from
    every source finds the shortest dicycle through it.
    """
    for a in g.sorted_arcs:
        if a.tail < a.head and a.reverse() in g.arcs:
            return 2, canonical_witness((a.tail, a.head))

    best: int | float = INFINITE
    best_witness: DicycleWitness | None = None
    for s in range(g.n):
        dist = {s: 0}
        parent: dict[int, int] = {}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du + 1 >= best:
                break
            for v in g.out_adj[u]:
                if v == s:
                    # cycle s -> ... -> u -> s of length du + 1
                    nodes = [u]
                    while nodes[-1] != s:
                        nodes.append(parent[nodes[-1]])
                    nodes.reverse()
                    best = du + 1
                    best_witness = canonical_witness(nodes)
                    queue.clear()
                    break
                if v not in dist:
                    dist[v] = du + 1
                    parent[v] = u
                    queue.append(v)
    return best, best_witness


def find_ditriangle(g: Digraph) -> Ditriangle | None:
    """First ditriangle in arc-scan order, or None."""
    for a in g.sorted_arcs:
        for c in g.out_adj[a.head]:
            if c != a.tail and g.has_arc(c, a.tail):
                return make_ditriangle(a.tail, a.head, c)
    return None


def ditriangles(g: Digraph) -> list[Ditriangle]:
    """All ditriangles, one canonical representative each, sorted."""
    found = set()
    for a in g.arcs:
        for c in g.out_adj[a.head]:
            if c != a.tail and g.has_arc(c, a.tail):
                found.add(make_ditriangle(a.tail, a.head, c))
    return sorted(found, key=lambda t: t.nodes())


def shorten_to_ditriangle(g: Digraph, c: DicycleWitness) -> Ditriangle:
    """Shrink a dicycle to a ditriangle by repeated chord splitting.

    Whenever the working dicycle is longer than three, a chord of its
    underlying cycle exists (the underlying graph is chordal); whichever way
    the chord is oriented, it closes a strictly shorter dicycle with one of
    the two chord-to-chord stretches. Chords are scanned over position pairs
    in a fixed order so the result is reproducible. Each split shortens the
    cycle, so at most ``len(c) - 3`` rounds happen.
    """
    if not g.digon_free:
        raise DigonEncountered("chord splitting requires a digon-free digraph")
    if len(c) < 3:
        raise ValueError("need a dicycle of length at least three")
    if not c.valid_in(g):
        raise ValueError("witness is not a dicycle of this digraph")

    nodes = list(c.nodes)
    while len(nodes) > 3:
        k = len(nodes)
        chord = None
        for i in range(k):
            for j in range(i + 1, k):
                if j == i + 1 or (i == 0 and j == k - 1):
                    continue  # consecutive on the cycle, not a chord
                u, v = nodes[i], nodes[j]
                if g.has_arc(u, v):
                    chord = (i, j, True)
                    break
                if g.has_arc(v, u):
                    chord = (i, j, False)
                    break
            if chord:
                break
        if chord is None:
            raise NoChordFound(f"dicycle {tuple(nodes)} has no chord")
        i, j, forward = chord
        if forward:
            # arc nodes[i] -> nodes[j] plus the stretch back to nodes[i]
            nodes = [nodes[i]] + nodes[j:] + nodes[:i]
        else:
            # stretch nodes[i] .. nodes[j] plus the arc back to nodes[i]
            nodes = nodes[i:j + 1]
    return make_ditriangle(*nodes)


def enumerate_dicycles(g: Digraph, max_count: int) -> list[DicycleWitness]:
    """All simple dicycles, one representative per rotation class.

    Runs a blocked backtracking search anchored at each node in turn,
    restricted to larger-numbered nodes, so every dicycle appears exactly
    once with its smallest node first. Raises :class:`LimitExceeded` with
    the first ``max_count`` witnesses if there are more than that.
    """
    if max_count < 0:
        raise ValueError("max_count must be nonnegative")
    found: list[DicycleWitness] = []
    for s in range(g.n):
        adj = _anchored_adjacency(g, s)
        if adj is None:
            continue
        for nodes in _blocked_search(s, adj):
            if len(found) >= max_count:
                raise LimitExceeded(found, max_count)
            found.append(DicycleWitness(nodes))
    return found


def _anchored_adjacency(g: Digraph, s: int) -> dict[int, tuple[int, ...]] | None:
    """Successor lists inside the strong component of ``s`` among nodes
    ``>= s``, or None when no dicycle through ``s`` survives there."""
    fwd = {s}
    frontier = [s]
    while frontier:
        u = frontier.pop()
        for v in g.out_adj[u]:
            if v >= s and v not in fwd:
                fwd.add(v)
                frontier.append(v)
    bwd = {s}
    frontier = [s]
    while frontier:
        u = frontier.pop()
        for v in g.in_adj[u]:
            if v >= s and v not in bwd:
                bwd.add(v)
                frontier.append(v)
    allowed = fwd & bwd
    adj = {
        u: tuple(v for v in g.out_adj[u] if v in allowed)
        for u in sorted(allowed)
    }
    if not adj.get(s):
        return None
    return adj


def _blocked_search(s: int, adj: dict[int, tuple[int, ...]]):
    """Yield node tuples of all dicycles through ``s`` in ``adj``."""
    path = [s]
    blocked = {s}
    closed = [False]
    block_map: dict[int, set[int]] = defaultdict(set)
    stack = [iter(adj[s])]
    while stack:
        advanced = False
        for w in stack[-1]:
            if w == s:
                yield tuple(path)
                closed[-1] = True
            elif w not in blocked:
                path.append(w)
                closed.append(False)
                blocked.add(w)
                stack.append(iter(adj[w]))
                advanced = True
                break
        if advanced:
            continue
        stack.pop()
        v = path.pop()
        if closed.pop():
            if closed:
                closed[-1] = True
            pending = {v}
            while pending:
                u = pending.pop()
                if u in blocked:
                    blocked.remove(u)
                    pending |= block_map[u]
                    block_map[u].clear()
        else:
            for w in adj[v]:
                block_map[w].add(v)
