"""Seeded random cacti and uncertain-point instances for tests and the CLI."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InfeasibleParams
from .graph import CactusGraph, GraphPoint, build_graph
from .model import Instance, Location, UncertainPoint


@dataclass(frozen=True)
class GenParams:
    vertices: int = 20
    cycles: int = 2
    cycle_min: int = 3
    cycle_max: int = 6
    n: int = 3
    m: int = 4
    weight_lo: float = 0.5
    weight_hi: float = 2.0
    seed: int = 0
    interior_frac: float = 0.5
    constant_hi: float = 0.0


def random_cactus(rng: random.Random, vertices: int, cycles: int,
                  cycle_min: int = 3, cycle_max: int = 6) -> CactusGraph:
    """Grow a random tree, then splice in cycles by attaching at a vertex or
    inflating an unused tree edge into a cycle."""
    if vertices < 2 or cycle_min < 2 or cycle_max < cycle_min:
        raise InfeasibleParams("need at least two vertices and cycle sizes >= 2")
    sizes = [rng.randint(cycle_min, cycle_max) for _ in range(cycles)]
    modes = [rng.random() < 0.5 for _ in range(cycles)]  # True: replace a tree edge
    cost = sum(k - 2 if replace else k - 1 for k, replace in zip(sizes, modes))
    tree_size = vertices - cost
    if tree_size < 1 or (tree_size < 2 and any(modes)):
        raise InfeasibleParams("vertex budget too small for the requested cycles")

    def length() -> float:
        return round(rng.uniform(0.5, 2.5), 6)

    edges: list[tuple[int, int, float]] = []
    for v in range(1, tree_size):
        edges.append((rng.randrange(v), v, length()))
    total = tree_size
    replaceable = list(range(len(edges)))
    for k, replace in zip(sizes, modes):
        if replace and replaceable:
            pick = replaceable.pop(rng.randrange(len(replaceable)))
            u, p, _ = edges[pick]
            chain = [u] + list(range(total, total + k - 2)) + [p]
            total += k - 2
        else:
            anchor = rng.randrange(total)
            chain = [anchor] + list(range(total, total + k - 1)) + [anchor]
            total += k - 1
        for a, b in zip(chain, chain[1:]):
            edges.append((a, b, length()))
    return build_graph(total, edges)


def random_tree(rng: random.Random, vertices: int) -> CactusGraph:
    edges = [(rng.randrange(v), v, round(rng.uniform(0.5, 2.5), 6))
             for v in range(1, vertices)]
    return build_graph(vertices, edges)


def _parallel_pairs(g: CactusGraph) -> set[int]:
    count: dict[tuple[int, int], int] = {}
    for e in g.edges:
        key = (min(e.u, e.v), max(e.u, e.v))
        count[key] = count.get(key, 0) + 1
    return {eid for eid, e in enumerate(g.edges)
            if count[(min(e.u, e.v), max(e.u, e.v))] > 1}


def random_probs(rng: random.Random, m: int) -> list[float]:
    """m nonnegative probabilities; the last one takes the exact remainder."""
    raw = [0.05 + rng.random() for _ in range(m)]
    s = sum(raw)
    probs = [r / s for r in raw[:-1]]
    probs.append(1.0 - sum(probs))
    return probs


def random_instance(rng: random.Random, g: CactusGraph, n: int, m: int,
                    weight_range: tuple[float, float] = (0.5, 2.0),
                    interior_frac: float = 0.5,
                    constant_hi: float = 0.0) -> Instance:
    """Scatter n uncertain points with m locations each over the graph.

    Interior locations avoid parallel-pair edges so the JSON edge addressing
    stays unambiguous; each point's locations are sorted so that per-edge
    offsets are nondecreasing.
    """
    avoid = _parallel_pairs(g)
    points = []
    for _ in range(n):
        probs = random_probs(rng, m)
        locs = []
        for j in range(m):
            if rng.random() < interior_frac:
                eid = rng.randrange(len(g.edges))
                if eid not in avoid:
                    t = rng.uniform(0.05, 0.95) * g.edges[eid].length
                    locs.append((1, eid, t, probs[j]))
                    continue
            locs.append((0, rng.randrange(g.vertex_count), 0.0, probs[j]))
        locs.sort(key=lambda q: q[:3])
        locations = tuple(
            Location(v if kind == 0 else g.point(v, t), f)
            for kind, v, t, f in locs)
        weight = rng.uniform(*weight_range)
        constant = rng.uniform(0.0, constant_hi) if constant_hi > 0 else 0.0
        points.append(UncertainPoint(weight, locations, constant))
    return Instance(g, tuple(points))


def generate(params: GenParams) -> Instance:
    """Deterministic instance from GenParams; same seed, same instance."""
    rng = random.Random(params.seed)
    g = random_cactus(rng, params.vertices, params.cycles,
                      params.cycle_min, params.cycle_max)
    return random_instance(rng, g, params.n, params.m,
                           (params.weight_lo, params.weight_hi),
                           params.interior_frac, params.constant_hi)
