"""Immutable digraph and graph values plus the basic structural operations.

Digraphs are simple: no self-loops, no parallel duplicates. Antiparallel
pairs (digons) are allowed and tracked. All values are frozen and every
operation is a pure function with deterministic iteration order, so repeated
runs produce identical certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import ArcNotPresent, NodeOutOfRange, SelfLoop


class Arc(NamedTuple):
    """A directed arc from ``tail`` to ``head``."""

    tail: int
    head: int

    def reverse(self) -> "Arc":
        return Arc(self.head, self.tail)


@dataclass(frozen=True)
class DicycleWitness:
    """A directed cycle, listed as distinct nodes with arcs between
    consecutive entries and from the last back to the first."""

    nodes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.nodes) < 2:
            raise ValueError("a dicycle visits at least two nodes")
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("dicycle nodes must be distinct")

    def __len__(self) -> int:
        return len(self.nodes)

    def arcs(self) -> tuple[Arc, ...]:
        k = len(self.nodes)
        return tuple(Arc(self.nodes[i], self.nodes[(i + 1) % k]) for i in range(k))

    def valid_in(self, g: "Digraph") -> bool:
        return all(a in g.arcs for a in self.arcs())


def canonical_witness(nodes: Iterable[int]) -> DicycleWitness:
    """Rotate a cyclic node sequence so its smallest node comes first."""
    seq = tuple(nodes)
    i = seq.index(min(seq))
    return DicycleWitness(seq[i:] + seq[:i])


@dataclass(frozen=True)
class Digraph:
    """A digraph on nodes ``0..n-1`` with a frozen arc set."""

    n: int
    arcs: frozenset[Arc]

    @cached_property
    def sorted_arcs(self) -> tuple[Arc, ...]:
        return tuple(sorted(self.arcs))

    @cached_property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        succ: list[list[int]] = [[] for _ in range(self.n)]
        for a in self.sorted_arcs:
            succ[a.tail].append(a.head)
        return tuple(tuple(s) for s in succ)

    @cached_property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        pred: list[list[int]] = [[] for _ in range(self.n)]
        for a in self.sorted_arcs:
            pred[a.head].append(a.tail)
        return tuple(tuple(sorted(p)) for p in pred)

    @cached_property
    def digon_free(self) -> bool:
        return all(a.reverse() not in self.arcs for a in self.arcs)

    def has_arc(self, tail: int, head: int) -> bool:
        return Arc(tail, head) in self.arcs


@dataclass(frozen=True)
class Graph:
    """An undirected graph on ``0..n-1``; edges are stored as ``(u, v)``
    tuples with ``u < v``."""

    n: int
    edges: frozenset[tuple[int, int]]

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(tuple(sorted(s)) for s in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def make_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Validated constructor; duplicate arcs collapse into one."""
    if n < 0:
        raise ValueError("node count must be nonnegative")
    out = set()
    for tail, head in arcs:
        if tail == head:
            raise SelfLoop(f"arc {tail}->{head} is a self-loop")
        if not (0 <= tail < n and 0 <= head < n):
            raise NodeOutOfRange(f"arc {tail}->{head} outside range(0, {n})")
        out.add(Arc(tail, head))
    return Digraph(n, frozenset(out))


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validated undirected constructor; orientation and duplicates collapse."""
    if n < 0:
        raise ValueError("node count must be nonnegative")
    out = set()
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"edge {u}-{v} is a self-loop")
        if not (0 <= u < n and 0 <= v < n):
            raise NodeOutOfRange(f"edge {u}-{v} outside range(0, {n})")
        out.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(out))


def underlying_graph(g: Digraph) -> Graph:
    """Forget orientation; an antiparallel pair becomes a single edge."""
    return Graph(g.n, frozenset((min(a), max(a)) for a in g.arcs))


def is_acyclic(g: Digraph) -> bool:
    return not isinstance(acyclicity_certificate(g), DicycleWitness)


def acyclicity_certificate(g: Digraph) -> tuple[int, ...] | DicycleWitness:
    """Return a topological order, or a dicycle if none exists.

    Exactly one of the two certificates is possible. The DFS scans roots and
    successors in ascending order, so the result is reproducible.
    """
    color = [0] * g.n  # 0 fresh, 1 on the current path, 2 finished
    order: list[int] = []
    path: list[int] = []
    for root in range(g.n):
        if color[root]:
            continue
        color[root] = 1
        path.append(root)
        stack: list = [iter(g.out_adj[root])]
        while stack:
            advanced = False
            for nxt in stack[-1]:
                if color[nxt] == 0:
                    color[nxt] = 1
                    path.append(nxt)
                    stack.append(iter(g.out_adj[nxt]))
                    advanced = True
                    break
                if color[nxt] == 1:
                    return canonical_witness(path[path.index(nxt):])
            if not advanced:
                stack.pop()
                done = path.pop()
                color[done] = 2
                order.append(done)
    order.reverse()
    return tuple(order)


def induced_subdigraph(g: Digraph, keep: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
    """Restrict to ``keep`` and relabel densely in ascending order.

    Returns the subdigraph together with the old-to-new node mapping.
    """
    kept = sorted(set(keep))
    for v in kept:
        if not (0 <= v < g.n):
            raise NodeOutOfRange(f"node {v} outside range(0, {g.n})")
    to_new = {old: new for new, old in enumerate(kept)}
    arcs = frozenset(
        Arc(to_new[a.tail], to_new[a.head])
        for a in g.arcs
        if a.tail in to_new and a.head in to_new
    )
    return Digraph(len(kept), arcs), to_new


def induced_subgraph(graph: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Undirected counterpart of :func:`induced_subdigraph`."""
    kept = sorted(set(keep))
    for v in kept:
        if not (0 <= v < graph.n):
            raise NodeOutOfRange(f"node {v} outside range(0, {graph.n})")
    to_new = {old: new for new, old in enumerate(kept)}
    edges = frozenset(
        (to_new[u], to_new[v])
        for u, v in graph.edges
        if u in to_new and v in to_new
    )
    return Graph(len(kept), edges), to_new


def remove_arcs(g: Digraph, drop: Iterable[Arc]) -> Digraph:
    """Delete the given arcs; every one of them must be present."""
    dropped = frozenset(Arc(t, h) for t, h in drop)
    missing = dropped - g.arcs
    if missing:
        raise ArcNotPresent(f"arcs not in digraph: {sorted(missing)}")
    return Digraph(g.n, g.arcs - dropped)


def connected_components(graph: Graph, without: frozenset[int] = frozenset()) -> list[frozenset[int]]:
    """Components of the graph with ``without`` deleted, ordered by their
    smallest node. Isolated nodes count as components."""
    seen: set[int] = set(without)
    comps: list[frozenset[int]] = []
    for start in range(graph.n):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        seen.add(start)
        while frontier:
            v = frontier.pop()
            for w in graph.adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    frontier.append(w)
        comps.append(frozenset(comp))
    return comps
