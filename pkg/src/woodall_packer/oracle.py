"""Independent checks: transversal tests, packing verification, and an
exhaustive packing-number search.

Everything here decides rather than constructs, so the packer can be
validated against code that shares none of its reasoning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, NamedTuple

from .digraph import Arc, DicycleWitness, Digraph, acyclicity_certificate, remove_arcs
from .dicycles import Ditriangle, ditriangles, enumerate_dicycles, girth
from .errors import AcyclicInput, BudgetExhausted, LimitExceeded

if TYPE_CHECKING:
    from .packing import Packing


class TransversalCheck(NamedTuple):
    index: int
    ok: bool
    counterexample: DicycleWitness | None


@dataclass(frozen=True)
class VerificationReport:
    """Everything :func:`verify_packing` measured about a candidate packing."""

    disjoint: bool
    per_transversal: tuple[TransversalCheck, ...]
    size: int
    girth: int | float
    verdict: bool


def is_transversal(g: Digraph, arcs: Iterable[Arc]) -> tuple[bool, DicycleWitness | None]:
    """An arc set is a dicycle transversal iff deleting it leaves the
    digraph acyclic. Returns a leftover dicycle as the counterexample."""
    rest = remove_arcs(g, arcs)
    cert = acyclicity_certificate(rest)
    if isinstance(cert, DicycleWitness):
        return False, cert
    return True, None


def verify_packing(g: Digraph, p: "Packing") -> VerificationReport:
    """Check disjointness and the transversal property of every class.

    Never raises: a class with arcs outside the digraph simply fails its
    check. The verdict also requires size <= girth, which genuine disjoint
    transversals cannot violate.
    """
    classes = tuple(frozenset(t) for t in p.transversals)
    disjoint = True
    seen: set[Arc] = set()
    for t in classes:
        if seen & t:
            disjoint = False
            break
        seen |= t
    checks = []
    for i, t in enumerate(classes):
        if t <= g.arcs:
            ok, bad = is_transversal(g, t)
        else:
            ok, bad = False, None
        checks.append(TransversalCheck(i, ok, bad))
    value, _ = girth(g)
    verdict = disjoint and all(c.ok for c in checks) and len(classes) <= value
    return VerificationReport(disjoint, tuple(checks), len(classes), value, verdict)


def check_split(g: Digraph, p: "Packing") -> tuple[bool, Ditriangle | None]:
    """Do all three arcs of every ditriangle sit in three distinct
    transversals? Returns the first offending ditriangle otherwise."""
    if len(p.transversals) != 3:
        raise ValueError("split check applies to packings of size three")
    where: dict[Arc, int] = {}
    for i, t in enumerate(p.transversals):
        for a in t:
            where[a] = i
    for tri in ditriangles(g):
        idxs = [where.get(a) for a in tri.arcs()]
        if None in idxs or len(set(idxs)) != 3:
            return False, tri
    return True, None


def exact_nu(g: Digraph, budget: int | None = None) -> int:
    """Largest number of pairwise disjoint dicycle transversals, by
    exhaustive search downward from the girth.

    Arcs on no dicycle are irrelevant and dropped up front. For the girth
    value itself, the arcs of one shortest dicycle can be pinned to classes
    1..k up to relabeling; below it, classes are interchangeable so they are
    claimed in first-use order. ``budget`` caps the number of search nodes;
    when it runs out, :class:`BudgetExhausted` reports the best size proven
    feasible so far.
    """
    value, witness = girth(g)
    if witness is None:
        raise AcyclicInput("no dicycle, packing number undefined")

    core = _cyclic_core(g)
    try:
        cycles = [frozenset(w.arcs()) for w in enumerate_dicycles(g, 20000)]
    except LimitExceeded as e:
        cycles = [frozenset(w.arcs()) for w in e.witnesses]

    spent = [0]
    for k in range(int(value), 1, -1):
        pinned = list(witness.arcs()) if k == value else []
        if _packable(g, core, cycles, pinned, k, spent, budget):
            return k
    return 1


def _cyclic_core(g: Digraph) -> list[Arc]:
    """Arcs lying on at least one dicycle: both ends in one strong
    component. Order: most-constrained first is approximated later; here
    plain sorted order."""
    comp = _strong_components(g)
    return [a for a in g.sorted_arcs if comp[a.tail] == comp[a.head]]


def _strong_components(g: Digraph) -> list[int]:
    """Component index per node (iterative Tarjan)."""
    index = [-1] * g.n
    low = [0] * g.n
    comp = [-1] * g.n
    on_stack = [False] * g.n
    stack: list[int] = []
    counter = [0]
    comps = [0]
    for root in range(g.n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            out = g.out_adj[v]
            while pi < len(out):
                w = out[pi]
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comps[0]
                    if w == v:
                        break
                comps[0] += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp


def _packable(
    g: Digraph,
    core: list[Arc],
    cycles: list[frozenset[Arc]],
    pinned: list[Arc],
    k: int,
    spent: list[int],
    budget: int | None,
) -> bool:
    """Can the core arcs be split into k disjoint transversals?

    Assignment search over core arcs; class k means "left out". A class
    stays viable as long as the arcs known to avoid it carry no dicycle,
    checked incrementally. Known dicycles prune branches that can no longer
    reach every class.
    """
    unused = k
    pin_set = set(pinned)
    order = pinned + [a for a in sorted(core, key=lambda a: (-sum(a in c for c in cycles), a)) if a not in pin_set]
    position = {a: i for i, a in enumerate(order)}
    assigned: dict[Arc, int] = {}
    # avoid[i]: adjacency of the arcs decided to lie outside class i
    avoid: list[dict[int, list[int]]] = [{} for _ in range(k)]

    cycle_members = [sorted(c, key=position.get) for c in cycles]
    hit: list[set[int]] = [set() for _ in cycles]
    undecided = [len(c) for c in cycles]
    touching: dict[Arc, list[int]] = {}
    for ci, c in enumerate(cycles):
        for a in c:
            touching.setdefault(a, []).append(ci)

    def creates_cycle(i: int, a: Arc) -> bool:
        # does adding a to avoid[i] close a dicycle there?
        adj = avoid[i]
        seen = {a.head}
        frontier = [a.head]
        while frontier:
            u = frontier.pop()
            if u == a.tail:
                return True
            for v in adj.get(u, ()):
                if v not in seen:
                    seen.add(v)
                    frontier.append(v)
        return False

    def place(a: Arc, cls: int) -> bool:
        # feasibility screens, then commit
        for i in range(k):
            if i != cls and creates_cycle(i, a):
                return False
        for ci in touching.get(a, ()):
            hits = len(hit[ci]) + (1 if cls < k and cls not in hit[ci] else 0)
            if k - hits > undecided[ci] - 1:
                return False
        assigned[a] = cls
        for i in range(k):
            if i != cls:
                avoid[i].setdefault(a.tail, []).append(a.head)
        for ci in touching.get(a, ()):
            if cls < k:
                hit[ci].add(cls)
            undecided[ci] -= 1
        return True

    def unplace(a: Arc, cls: int) -> None:
        del assigned[a]
        for i in range(k):
            if i != cls:
                avoid[i][a.tail].pop()
        for ci in touching.get(a, ()):
            if cls < k and not any(assigned.get(b) == cls for b in cycles[ci]):
                hit[ci].discard(cls)
            undecided[ci] += 1

    def search(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        spent[0] += 1
        if budget is not None and spent[0] > budget:
            raise BudgetExhausted(1, budget)
        a = order[pos]
        if pos < len(pinned):
            choices = [pos]
        elif pinned:
            choices = list(range(k)) + [unused]
        else:
            choices = list(range(min(used + 1, k))) + [unused]
        for cls in choices:
            if place(a, cls):
                bumped = max(used, cls + 1) if cls < k else used
                if search(pos + 1, bumped):
                    return True
                unplace(a, cls)
        return False

    return search(0, 0)
