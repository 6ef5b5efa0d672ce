"""Constructing maximum packings of disjoint dicycle transversals.

On a digraph whose underlying graph is a 3-tree, the packing number equals
the girth, and the equality is realized constructively:

* girth 2: order the nodes and split the arcs into the forward and the
  backward class; both classes are acyclic, so each is a transversal of
  the other's cycles.
* girth 3: recurse on separating ditriangles, and when none exists route
  each arc by its role around the degree-3 vertices. When the core left
  by deleting those vertices is acyclic it absorbs everything else into
  one class; when it is not, the core is packed recursively and the
  degree-3 vertices are lifted back in one ditriangle at a time.

Every packing built here is re-verified from scratch before being
returned; a :class:`ConstructionFailed` on a 3-tree input is a bug, and
the exception carries the instance for replay.

Size-3 packings additionally keep every ditriangle's arcs in three
pairwise distinct classes. That stronger shape is what makes packings of
separate parts mergeable along a shared ditriangle, and it is recorded as
a :class:`SplitCertificate`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .digraph import (
    Arc,
    DicycleWitness,
    Digraph,
    acyclicity_certificate,
    induced_subdigraph,
    make_digraph,
    underlying_graph,
)
from .dicycles import Ditriangle, ditriangles, enumerate_dicycles, girth, make_ditriangle
from .errors import (
    AcyclicInput,
    CertificateViolation,
    ConstructionFailed,
    DigonCreated,
    DigonEncountered,
    HostMismatch,
    InnerCycle,
    NotThreeTree,
)
from .three_tree import (
    ConstructionSequence,
    SeparatorSplit,
    degree3_set,
    find_separator_ditriangle,
    peel_order,
    split_at_separator,
)


@dataclass(frozen=True)
class Packing:
    """Pairwise disjoint dicycle transversals. Arcs left in no class are
    simply uncovered; that never hurts validity."""

    transversals: tuple[frozenset[Arc], ...]

    def __len__(self) -> int:
        return len(self.transversals)


@dataclass(frozen=True)
class SplitCertificate:
    """For each ditriangle, the classes of its arcs ``a->b``, ``b->c``,
    ``c->a`` in that order; the three are pairwise distinct."""

    assignments: dict[Ditriangle, tuple[int, int, int]]


def build_split_certificate(g: Digraph, p: Packing) -> SplitCertificate:
    """Read the certificate off a packing, or raise
    :class:`CertificateViolation` at the first ditriangle whose arcs are
    not spread over three distinct classes."""
    where: dict[Arc, int] = {}
    for i, t in enumerate(p.transversals):
        for a in t:
            where[a] = i
    assignments: dict[Ditriangle, tuple[int, int, int]] = {}
    for tri in ditriangles(g):
        idxs = tuple(where.get(a) for a in tri.arcs())
        if None in idxs or len(set(idxs)) != 3:
            raise CertificateViolation(f"ditriangle {tri.nodes()} maps to classes {idxs}")
        assignments[tri] = idxs  # type: ignore[assignment]
    return SplitCertificate(assignments)


def pack(g: Digraph, deep_verify: bool = False) -> Packing:
    """A verified packing of size equal to the girth.

    Requires the underlying graph to be a 3-tree and at least one dicycle.
    ``deep_verify`` re-checks every recursion level instead of only the
    root, which helps pin down where a hypothetical failure originates.
    """
    if peel_order(underlying_graph(g)) is None:
        raise NotThreeTree("underlying graph does not peel down to a triangle")
    value, _ = girth(g)
    if math.isinf(value):
        raise AcyclicInput("no dicycle to pack against")
    if value == 2:
        p = two_acyclic_decomposition(g, range(g.n))
    elif value == 3:
        p, _ = _pack3(g, deep_verify)
    else:
        # a digon-free 3-tree digraph with a dicycle always has a ditriangle
        raise ConstructionFailed(g, f"girth {value} should be impossible here")

    from .oracle import verify_packing

    report = verify_packing(g, p)
    if not report.verdict or len(p) != value:
        raise ConstructionFailed(g, "verification rejected the constructed packing")
    return p


def two_acyclic_decomposition(g: Digraph, order: Iterable[int]) -> Packing:
    """Split the arcs into the classes running forward and backward along
    a node order. Each class is acyclic, hence a transversal of everything
    the other class carries. Works for any digraph."""
    seq = list(order)
    if sorted(seq) != list(range(g.n)):
        raise ValueError("order must be a permutation of the nodes")
    pos = {v: i for i, v in enumerate(seq)}
    forward = frozenset(a for a in g.arcs if pos[a.tail] < pos[a.head])
    return Packing((forward, g.arcs - forward))


def pack3(g: Digraph, deep_verify: bool = False) -> tuple[Packing, SplitCertificate]:
    """Size-3 packing with its split certificate, for girth-3 inputs."""
    value, _ = girth(g)
    if value != 3:
        raise ValueError(f"pack3 needs girth exactly 3, got {value}")
    return _pack3(g, deep_verify)


def _pack3(g: Digraph, deep_verify: bool) -> tuple[Packing, SplitCertificate]:
    if g.n <= 4:
        out = pack_small(g)
    else:
        split = find_separator_ditriangle(g)
        if split is None:
            v3 = degree3_set(underlying_graph(g))
            try:
                out = pack_around_degree3(g, v3)
            except InnerCycle:
                try:
                    out = pack_by_core_lift(g, v3, deep_verify)
                except ConstructionFailed:
                    out = pack_incremental(g)
        else:
            parts = []
            for sub, to_new in split_at_separator(g, split):
                sub_packing, sub_cert = _pack3(sub, deep_verify)
                to_old = {new: old for old, new in to_new.items()}
                parts.append((
                    _relabel_packing(sub_packing, to_old),
                    _relabel_certificate(sub_cert, to_old),
                ))
            out = merge_at_ditriangle(parts, split.ditriangle)
    if deep_verify:
        from .oracle import check_split, verify_packing

        report = verify_packing(g, out[0])
        ok, _ = check_split(g, out[0])
        if not (report.verdict and ok and len(out[0]) == 3):
            raise ConstructionFailed(g, "level verification failed")
    return out


def pack_small(g: Digraph) -> tuple[Packing, SplitCertificate]:
    """Exhaustive base packer for three or four nodes.

    Tries every assignment of arcs to the three classes or to none,
    pruning on two facts: the decided arcs of a ditriangle must stay
    distinct and used, and a dicycle must still be able to reach all three
    classes. The search is tiny (at most six arcs).
    """
    if not 3 <= g.n <= 4:
        raise ValueError("small packer covers three or four nodes")
    if not g.digon_free:
        raise DigonEncountered("girth-3 instances cannot carry digons")
    cycles = [frozenset(w.arcs()) for w in enumerate_dicycles(g, 100)]
    if not cycles:
        raise AcyclicInput("no dicycle to pack against")
    tris = [t.arcs() for t in ditriangles(g)]
    arcs = list(g.sorted_arcs)
    index = {a: i for i, a in enumerate(arcs)}
    UNUSED = 3
    assign: list[int | None] = [None] * len(arcs)

    def consistent() -> bool:
        for t in tris:
            decided = [assign[index[a]] for a in t if assign[index[a]] is not None]
            if UNUSED in decided:
                return False
            if len(set(decided)) != len(decided):
                return False
        for cyc in cycles:
            states = [assign[index[a]] for a in cyc]
            missing = {0, 1, 2} - {s for s in states if s is not None}
            if len(missing) > sum(1 for s in states if s is None):
                return False
        return True

    def search(pos: int) -> bool:
        if pos == len(arcs):
            return True
        for cls in (0, 1, 2, UNUSED):
            assign[pos] = cls
            if consistent() and search(pos + 1):
                return True
        assign[pos] = None
        return False

    if not search(0):
        raise ConstructionFailed(g, "exhausted all small assignments")
    classes = tuple(
        frozenset(a for a in arcs if assign[index[a]] == cls) for cls in range(3)
    )
    p = Packing(classes)
    return p, build_split_certificate(g, p)


def merge_at_ditriangle(
    parts: Sequence[tuple[Packing, SplitCertificate]], shared: Ditriangle
) -> tuple[Packing, SplitCertificate]:
    """Union the parts' packings class-by-class after rotating each part so
    the shared ditriangle's arcs land in classes 0, 1, 2 in arc order.

    Parts overlap in exactly those three arcs, and after the rotation they
    agree on them, so disjointness survives the union. Every ditriangle
    lies inside a single part, so the merged certificate is the union of
    the rotated part certificates.
    """
    ab, bc, ca = shared.arcs()
    merged: list[set[Arc]] = [set(), set(), set()]
    assignments: dict[Ditriangle, tuple[int, int, int]] = {}
    for packing, certificate in parts:
        triple = certificate.assignments.get(shared)
        if triple is None:
            raise CertificateViolation(f"part certificate misses {shared.nodes()}")
        if len(set(triple)) != 3:
            raise CertificateViolation(f"shared arcs share a class: {triple}")
        for arc, idx in zip((ab, bc, ca), triple):
            if arc not in packing.transversals[idx]:
                raise CertificateViolation(f"certificate lies about {arc}")
        rotate = {old: new for new, old in enumerate(triple)}
        for old, new in rotate.items():
            merged[new] |= packing.transversals[old]
        for tri, (i, j, l) in certificate.assignments.items():
            mapped = (rotate[i], rotate[j], rotate[l])
            if assignments.setdefault(tri, mapped) != mapped:
                raise CertificateViolation(f"parts disagree on {tri.nodes()}")
    p = Packing(tuple(frozenset(c) for c in merged))
    return p, SplitCertificate(assignments)


def pack_around_degree3(g: Digraph, v3: Iterable[int]) -> tuple[Packing, SplitCertificate]:
    """Pack a girth-3 instance whose core, after deleting the degree-3
    vertices, is acyclic.

    The core's arcs seed class 0. Around each degree-3 vertex u, every
    in-arc of u on a ditriangle goes to class 1 and every out-arc of u on
    a ditriangle to class 2; the rest of u's arcs join class 0. The
    degree-3 set is independent, so no arc gets two assignments. A core
    that still has a dicycle raises :class:`InnerCycle`; the caller then
    falls back to :func:`pack_by_core_lift`.
    """
    cut = frozenset(v3)
    inner = frozenset(range(g.n)) - cut
    sub, _ = induced_subdigraph(g, inner)
    cert = acyclicity_certificate(sub)
    if isinstance(cert, DicycleWitness):
        raise InnerCycle(f"core keeps dicycle {cert.nodes}")

    t1 = {a for a in g.arcs if a.tail in inner and a.head in inner}
    t2: set[Arc] = set()
    t3: set[Arc] = set()
    for u in sorted(cut):
        for x in g.out_adj[u]:
            for y in g.in_adj[u]:
                if x != y and g.has_arc(x, y):
                    t2.add(Arc(y, u))
                    t3.add(Arc(u, x))
        for y in g.in_adj[u]:
            if Arc(y, u) not in t2:
                t1.add(Arc(y, u))
        for x in g.out_adj[u]:
            if Arc(u, x) not in t3:
                t1.add(Arc(u, x))

    if (t1 & t2) or (t1 & t3) or (t2 & t3):
        raise ConstructionFailed(g, "arc routed into two classes")
    p = Packing((frozenset(t1), frozenset(t2), frozenset(t3)))
    try:
        certificate = build_split_certificate(g, p)
    except CertificateViolation as exc:
        raise ConstructionFailed(g, str(exc)) from exc
    return p, certificate


def pack_by_core_lift(
    g: Digraph, v3: Iterable[int], deep_verify: bool = False
) -> tuple[Packing, SplitCertificate]:
    """Pack a girth-3 instance whose core still carries dicycles.

    Deleting the degree-3 set can leave dicycles behind even when no
    ditriangle separates: a ditriangle may bound a face while all three of
    its corners keep degree four or more. The core is then itself a
    girth-3 digraph on a smaller 3-tree, so it is packed recursively, and
    any core arc the recursion left unassigned joins class 0.

    Each degree-3 vertex u rejoins under two families of constraints. On
    every ditriangle through u, the arc between u's two neighbors already
    has a class and u's two arcs on that ditriangle take the two remaining
    classes. For every in/out pair of u whose shortcut arc between the
    neighbors runs the same way, a dicycle through u shortcuts to a core
    dicycle using that arc, so one of the pair should carry the shortcut
    arc's class. Assignments satisfying the first family exactly and the
    second with as few misses as possible are tried in order, flipping
    choices near an offending dicycle until the packing verifies;
    exhausting the choices raises :class:`ConstructionFailed`.
    """
    from .oracle import verify_packing

    cut = frozenset(v3)
    inner = frozenset(range(g.n)) - cut
    core, to_new = induced_subdigraph(g, inner)
    value, _ = girth(core)
    if value != 3:
        raise ValueError(f"core lift needs a girth-3 core, got {value}")
    sub_packing, _ = _pack3(core, deep_verify)
    to_old = {new: old for old, new in to_new.items()}
    lifted = _relabel_packing(sub_packing, to_old)
    base = [set(t) for t in lifted.transversals]
    spare = {a for a in g.arcs if a.tail in inner and a.head in inner}
    for t in base:
        spare -= t
    base[0] |= spare
    where: dict[Arc, int] = {}
    for i, t in enumerate(base):
        for a in t:
            where[a] = i

    # per degree-3 vertex, every consistent way to class its three arcs
    events: list[tuple[int, list[dict[Arc, int]]]] = []
    for u in sorted(cut):
        cyclic_pairs = []
        shortcut_pairs = []
        for x in g.out_adj[u]:
            for y in g.in_adj[u]:
                if x == y:
                    continue
                if g.has_arc(x, y):
                    cyclic_pairs.append((Arc(y, u), Arc(u, x), where[Arc(x, y)]))
                elif g.has_arc(y, x):
                    shortcut_pairs.append((Arc(y, u), Arc(u, x), where[Arc(y, x)]))
        u_arcs = [Arc(y, u) for y in g.in_adj[u]]
        u_arcs += [Arc(u, x) for x in g.out_adj[u]]
        ranked: list[tuple[int, tuple[int, ...]]] = []
        for triple in product((0, 1, 2), repeat=len(u_arcs)):
            cls = dict(zip(u_arcs, triple))
            if any(
                {cls[into], cls[out_of], closing} != {0, 1, 2}
                for into, out_of, closing in cyclic_pairs
            ):
                continue
            misses = sum(
                closing not in (cls[into], cls[out_of])
                for into, out_of, closing in shortcut_pairs
            )
            ranked.append((misses, triple))
        if not ranked:
            raise ConstructionFailed(g, f"no consistent classes around vertex {u}")
        ranked.sort()
        events.append((u, [dict(zip(u_arcs, t)) for _, t in ranked]))

    choice = [0] * len(events)
    seen = {tuple(choice)}
    for _ in range(512):
        classes = [set(t) for t in base]
        for (_, options), pick in zip(events, choice):
            for arc, cls in options[pick].items():
                classes[cls].add(arc)
        p = Packing(tuple(frozenset(c) for c in classes))
        report = verify_packing(g, p)
        if report.verdict:
            try:
                certificate = build_split_certificate(g, p)
            except CertificateViolation as exc:
                raise ConstructionFailed(g, str(exc)) from exc
            return p, certificate
        bad = next((t for t in report.per_transversal if not t.ok), None)
        if bad is None or bad.counterexample is None:
            raise ConstructionFailed(g, "lifted classes overlap or exceed the girth")
        cycle_arcs = set(bad.counterexample.arcs())
        on_cycle = set(bad.counterexample.nodes)
        # flip the most promising unseen choice: ideally one lending the
        # failing class an arc of the uncovered dicycle itself
        candidates: list[tuple[int, int, int]] = []
        for i, (u, options) in enumerate(events):
            for alt in range(len(options)):
                if alt == choice[i]:
                    continue
                key = tuple(choice[:i]) + (alt,) + tuple(choice[i + 1:])
                if key in seen:
                    continue
                gives = any(
                    cls == bad.index and arc in cycle_arcs
                    for arc, cls in options[alt].items()
                )
                rank = 0 if gives else 1 if u in on_cycle else 2
                candidates.append((rank, i, alt))
        if not candidates:
            break
        _, i, alt = min(candidates)
        choice[i] = alt
        seen.add(tuple(choice))
    raise ConstructionFailed(g, "no liftable class assignment verified")


def _label_portfolio(n: int) -> list[dict[int, int] | None]:
    """Identity plus a few fixed relabelings that reshuffle the peel order."""
    perms: list[dict[int, int] | None] = [None]
    seen = {tuple(range(n))}
    candidates = [{v: n - 1 - v for v in range(n)}]
    for k in (1, 3, 5, 7, 11, 13):
        candidates.append({v: (v + k) % n for v in range(n)})
    for perm in candidates:
        key = tuple(perm[v] for v in range(n))
        if key not in seen:
            seen.add(key)
            perms.append(perm)
    return perms


def _incremental_search(
    g: Digraph, seq: ConstructionSequence, budget: int
) -> tuple[tuple[frozenset[Arc], ...] | None, int]:
    """One depth-first pass over ``seq``; returns (classes, tries spent)."""
    UNUSED = 3
    base = sorted(seq.base)
    base_arcs = [
        Arc(t, h)
        for t, h in ((u, v) for u in base for v in base)
        if g.has_arc(t, h)
    ]
    base_tri = len(ditriangles(induced_subdigraph(g, frozenset(base))[0])) > 0

    levels: list[tuple[list[Arc], list[tuple[int, int, int, int]]]] = []
    for step in seq.steps:
        u = step.vertex
        ins = [Arc(y, u) for y in sorted(step.host) if g.has_arc(y, u)]
        outs = [Arc(u, x) for x in sorted(step.host) if g.has_arc(u, x)]
        arcs = ins + outs
        pairs = [
            (arcs.index(a), arcs.index(b), b.head, a.tail)
            for a in ins
            for b in outs
            if a.tail != b.head
        ]
        levels.append((arcs, pairs))

    assign: dict[Arc, int] = {}
    out_adj: dict[int, list[tuple[int, Arc]]] = {v: [] for v in range(g.n)}

    def covering_classes(src: int, dst: int) -> set[int]:
        """Classes present on every currently assigned path src -> dst."""
        found = set()
        for cls in range(3):
            seen = {src}
            queue = [src]
            while queue:
                v = queue.pop()
                for w, arc in out_adj[v]:
                    if assign[arc] != cls and w not in seen:
                        seen.add(w)
                        queue.append(w)
            if dst not in seen:
                found.add(cls)
        return found

    def place(arcs: Sequence[Arc], classes: Sequence[int]) -> None:
        for arc, cls in zip(arcs, classes):
            assign[arc] = cls
            out_adj[arc.tail].append((arc.head, arc))

    def unplace(arcs: Sequence[Arc]) -> None:
        for arc in arcs:
            del assign[arc]
            out_adj[arc.tail].pop()

    def detour_breaks(arcs: Sequence[Arc], classes: Sequence[int]) -> int:
        """New two-arc paths around an existing arc that skip its class."""
        cls_of = dict(zip(arcs, classes))
        breaks = 0
        for a in arcs:
            for b in arcs:
                if a.head == b.tail and a.tail != b.head:
                    old = assign.get(Arc(a.tail, b.head))
                    if old is not None and old not in (cls_of[a], cls_of[b]):
                        breaks += old != UNUSED
        return breaks

    spent = [0]

    def descend(level: int) -> bool:
        if level == len(levels):
            return True
        arcs, pairs = levels[level]
        allowed = [covering_classes(src, dst) for _, _, src, dst in pairs]
        ranked = []
        for classes in product((0, 1, 2, UNUSED), repeat=len(arcs)):
            ok = True
            for (i, j, _, _), cover in zip(pairs, allowed):
                if not {0, 1, 2} - {classes[i], classes[j]} <= cover:
                    ok = False
                    break
            if ok:
                unused = sum(c == UNUSED for c in classes)
                ranked.append((detour_breaks(arcs, classes), unused, classes))
        ranked.sort()
        for *_, classes in ranked:
            if spent[0] >= budget:
                return False
            spent[0] += 1
            place(arcs, classes)
            if descend(level + 1):
                return True
            unplace(arcs)
        return False

    def start() -> bool:
        for classes in product((0, 1, 2, UNUSED), repeat=len(base_arcs)):
            if base_tri and sorted(classes) != [0, 1, 2]:
                continue
            if spent[0] >= budget:
                return False
            spent[0] += 1
            place(base_arcs, classes)
            if descend(0):
                return True
            unplace(base_arcs)
        return False

    if not start():
        return None, spent[0]
    classes = tuple(
        frozenset(a for a, c in assign.items() if c == cls) for cls in range(3)
    )
    return classes, spent[0]


def pack_incremental(
    g: Digraph,
    seq: ConstructionSequence | None = None,
    budget: int = 500_000,
) -> tuple[Packing, SplitCertificate]:
    """Pack a girth-3 instance by replaying its 3-tree construction.

    Vertices are classed in insertion order. Every dicycle decomposes at
    its youngest vertex u into an in-arc, an out-arc, and a path between
    u's neighbors that already exists when u arrives. So placing u only
    has to guarantee, for each of u's in/out pairs, that every class
    missing from the pair lies on every existing path between the pair's
    endpoints, which is a reachability check per class. Satisfying that at
    every step covers all dicycles, and it forces the three arcs of every
    ditriangle apart, because there the closing arc is itself a path.

    Choices are explored depth-first, preferring assignments that keep
    each arc's class on the new two-arc detours around it. The cost of the
    search is very sensitive to the insertion order, so unless ``seq``
    pins one, ``budget`` (total assignments tried) is spent in growing
    slices across a fixed portfolio of vertex relabelings, each of which
    induces a different order.
    """
    ug = underlying_graph(g)
    value, _ = girth(g)
    if value != 3:
        raise ValueError(f"incremental packer needs girth exactly 3, got {value}")

    no_fit = "no class assignment satisfies every coverage constraint"
    found: tuple[frozenset[Arc], ...] | None = None
    back: dict[int, int] | None = None
    if seq is not None:
        if seq.replay() != ug:
            raise HostMismatch("construction sequence does not rebuild the instance")
        found, used = _incremental_search(g, seq, budget)
        if found is None and used < budget:
            raise ConstructionFailed(g, no_fit)
    else:
        if peel_order(ug) is None:
            raise NotThreeTree("underlying graph does not peel down to a triangle")
        remaining = budget
        chunk = 2_000
        while remaining > 0 and found is None:
            for perm in _label_portfolio(g.n):
                cap = min(chunk, remaining)
                if cap <= 0:
                    break
                if perm is None:
                    pg = g
                else:
                    pg = make_digraph(
                        g.n, ((perm[a.tail], perm[a.head]) for a in g.arcs)
                    )
                pseq = peel_order(underlying_graph(pg))
                assert pseq is not None
                got, used = _incremental_search(pg, pseq, cap)
                remaining -= used
                if got is not None:
                    found = got
                    if perm is not None:
                        back = {perm[v]: v for v in range(g.n)}
                    break
                if used < cap:
                    # the whole tree fit in the slice, so every order is hopeless
                    raise ConstructionFailed(g, no_fit)
            chunk *= 8
    if found is None:
        raise ConstructionFailed(g, "incremental search exhausted its budget")
    p = Packing(found)
    if back is not None:
        p = _relabel_packing(p, back)
    try:
        certificate = build_split_certificate(g, p)
    except CertificateViolation as exc:
        raise ConstructionFailed(g, str(exc)) from exc
    return p, certificate


def complete_partial(g: Digraph, host: ConstructionSequence) -> Digraph:
    """Extend a digon-free partial digraph to its full 3-tree host by
    adding each missing edge as a single low-to-high arc.

    New arcs sit on edges the input did not use at all, so no digon can
    appear, and a girth of 3 is preserved: old dicycles survive and no
    shorter one can arise without a digon.
    """
    if not g.digon_free:
        raise DigonCreated("partial digraph already carries an antiparallel pair")
    full = host.replay()
    if full.n != g.n:
        raise HostMismatch(f"host has {full.n} nodes, digraph has {g.n}")
    present = underlying_graph(g).edges
    if not present <= full.edges:
        extra = sorted(present - full.edges)
        raise HostMismatch(f"edges outside the host: {extra}")
    added = (Arc(u, v) for u, v in sorted(full.edges - present))
    completed = Digraph(g.n, g.arcs | frozenset(added))
    assert completed.digon_free
    old_value, _ = girth(g)
    if old_value == 3:
        new_value, _ = girth(completed)
        assert new_value == 3
    return completed


def restrict_packing(p: Packing, g: Digraph) -> Packing:
    """Drop all arcs outside ``g`` from every class. Transversals of a
    completion stay transversals of the partial digraph it came from,
    because each of its dicycles already lived there."""
    return Packing(tuple(frozenset(t & g.arcs) for t in p.transversals))


def _relabel_packing(p: Packing, mapping: dict[int, int]) -> Packing:
    return Packing(tuple(
        frozenset(Arc(mapping[a.tail], mapping[a.head]) for a in t)
        for t in p.transversals
    ))


def _relabel_certificate(c: SplitCertificate, mapping: dict[int, int]) -> SplitCertificate:
    return SplitCertificate({
        make_ditriangle(mapping[t.a], mapping[t.b], mapping[t.c]): idxs
        for t, idxs in c.assignments.items()
    })
