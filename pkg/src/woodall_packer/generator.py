"""Seeded random instances: 3-tree skeletons grown face by face, plus arc
orientations with optional digons.

Randomness comes from ``random.Random`` (the stdlib Mersenne twister)
seeded with strings derived from the configured seed, one stream for the
skeleton and one for the orientation, so structure and orientation can be
varied independently and every instance is reproducible bit for bit.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .digraph import Arc, Digraph, Graph, make_graph
from .dicycles import girth
from .errors import ResampleExhausted
from .three_tree import ConstructionSequence, Step


@dataclass(frozen=True)
class GenConfig:
    n: int
    seed: int
    digon_probability: float = 0.0
    require_dicycle: bool = False
    max_resamples: int = 64

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("need at least three nodes")
        if not 0.0 <= self.digon_probability <= 1.0:
            raise ValueError("digon probability must lie in [0, 1]")
        if self.max_resamples < 1:
            raise ValueError("need at least one orientation attempt")


def random_apollonian(cfg: GenConfig) -> tuple[ConstructionSequence, Graph]:
    """Grow a planar 3-tree by inserting each new vertex into a uniformly
    chosen available face. The base triangle contributes both its sides."""
    rng = random.Random(f"{cfg.seed}:structure")
    faces: list[tuple[int, int, int]] = [(0, 1, 2), (0, 1, 2)]
    edges = {(0, 1), (0, 2), (1, 2)}
    steps: list[Step] = []
    for v in range(3, cfg.n):
        host = faces.pop(rng.randrange(len(faces)))
        steps.append(Step(v, frozenset(host)))
        a, b, c = host
        faces.extend(((a, b, v), (a, c, v), (b, c, v)))
        edges.update(((a, v), (b, v), (c, v)))
    seq = ConstructionSequence(frozenset((0, 1, 2)), tuple(steps))
    return seq, make_graph(cfg.n, edges)


def orient(graph: Graph, cfg: GenConfig) -> Digraph:
    """Give every edge a uniform direction; each edge independently also
    gains its reverse arc with ``digon_probability``.

    Two draws happen per edge whatever the probability, so the same seed
    yields the same base orientation across different digon settings. With
    ``require_dicycle`` the orientation is redrawn until some dicycle
    exists, at most ``max_resamples`` times.
    """
    rng = random.Random(f"{cfg.seed}:orientation")
    edges = sorted(graph.edges)
    for _ in range(cfg.max_resamples):
        arcs: set[Arc] = set()
        for u, v in edges:
            flip = rng.random() < 0.5
            arcs.add(Arc(v, u) if flip else Arc(u, v))
            if rng.random() < cfg.digon_probability:
                arcs.add(Arc(u, v) if flip else Arc(v, u))
        g = Digraph(graph.n, frozenset(arcs))
        if not cfg.require_dicycle:
            return g
        value, _ = girth(g)
        if not math.isinf(value):
            return g
    raise ResampleExhausted(
        f"no dicycle within {cfg.max_resamples} orientation draws (seed {cfg.seed})"
    )


def generate(cfg: GenConfig) -> tuple[ConstructionSequence, Digraph]:
    """Skeleton plus orientation in one call."""
    seq, graph = random_apollonian(cfg)
    return seq, orient(graph, cfg)
