"""Uncertain points, instances, validation, and the expected-distance evaluators.

An uncertain point has a weight w, an additive constant c, and a discrete
distribution over locations; its expected distance to a point x is
``c + w * sum_j f_j * d(p_j, x)``.  Two evaluators are provided: an
oracle-grade one built on Dijkstra, and a linear-time bulk evaluator that
sweeps the skeleton once for vertex-constrained instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import IndexOutOfRange, NotAnArticulation, NotVertexConstrained
from .graph import Block, CactusGraph, GraphPoint, components_without
from .skeleton import SkeletonTree, build_skeleton, propagate_distances

PROB_TOL = 1e-9


@dataclass(frozen=True)
class Location:
    """One possible position of an uncertain point: a vertex id or an interior point."""

    position: int | GraphPoint
    prob: float


@dataclass(frozen=True)
class UncertainPoint:
    weight: float
    locations: tuple[Location, ...]
    constant: float = 0.0


@dataclass(eq=False)
class Instance:
    graph: CactusGraph
    points: tuple[UncertainPoint, ...]

    def __post_init__(self):
        self.points = tuple(
            UncertainPoint(p.weight,
                           tuple(Location(_canonical(self.graph, l.position), l.prob)
                                 for l in p.locations),
                           p.constant)
            for p in self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def skeleton(self) -> SkeletonTree:
        return build_skeleton(self.graph)

    @cached_property
    def is_vertex_constrained(self) -> bool:
        """True when every location sits at a vertex."""
        return all(isinstance(l.position, int)
                   for p in self.points for l in p.locations)

    @cached_property
    def locations_by_vertex(self) -> list[list[tuple[int, float]]]:
        """Per vertex, the (point index, probability) pairs located there."""
        if not self.is_vertex_constrained:
            raise NotVertexConstrained("instance has interior locations")
        table: list[list[tuple[int, float]]] = [[] for _ in range(self.graph.vertex_count)]
        for i, p in enumerate(self.points):
            for loc in p.locations:
                table[loc.position].append((i, loc.prob))
        return table


@dataclass(frozen=True)
class CenterResult:
    point: GraphPoint
    objective: float


@dataclass
class ValidationReport:
    prob_deviation: list[float] = field(default_factory=list)
    issues: list[tuple] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.issues

    def summary(self) -> str:
        if self.valid:
            return "ok"
        return "; ".join(f"{kind}({', '.join(map(str, rest))})"
                         for kind, *rest in self.issues[:8])


def _canonical(g: CactusGraph, pos: int | GraphPoint) -> int | GraphPoint:
    """Snap endpoint offsets to vertex form; leave invalid positions untouched."""
    if isinstance(pos, int):
        return pos
    if 0 <= pos.edge < len(g.edges):
        length = g.edges[pos.edge].length
        if -1e-12 <= pos.t <= length + 1e-12:
            p = g.point(pos.edge, pos.t)
            v = g.point_vertex(p)
            return v if v is not None else p
    return pos


def validate_instance(inst: Instance) -> ValidationReport:
    """Check probability sums, location ordering and on-graph positions."""
    g = inst.graph
    report = ValidationReport()
    if inst.n < 1:
        report.issues.append(("no_points",))
    for i, p in enumerate(inst.points):
        total = 0.0
        last_offset: dict[int, float] = {}
        if p.weight < 0:
            report.issues.append(("negative_weight", i))
        for j, loc in enumerate(p.locations):
            if loc.prob < 0:
                report.issues.append(("negative_prob", i, j))
            total += loc.prob
            pos = loc.position
            if isinstance(pos, int):
                if not 0 <= pos < g.vertex_count:
                    report.issues.append(("off_graph", i, j))
                continue
            if not 0 <= pos.edge < len(g.edges):
                report.issues.append(("off_graph", i, j))
                continue
            length = g.edges[pos.edge].length
            if pos.t < -1e-12 or pos.t > length + 1e-12:
                report.issues.append(("off_graph", i, j))
                continue
            prev = last_offset.get(pos.edge)
            if prev is not None and pos.t < prev - 1e-12:
                report.issues.append(("unsorted", i, pos.edge))
            last_offset[pos.edge] = pos.t
        deviation = abs(total - 1.0)
        report.prob_deviation.append(deviation)
        if deviation > PROB_TOL:
            report.issues.append(("prob_sum", i, deviation))
    return report


def location_point(g: CactusGraph, pos: int | GraphPoint) -> GraphPoint:
    return g.vertex_point(pos) if isinstance(pos, int) else pos


def expected_distance_naive(inst: Instance, i: int, x: GraphPoint) -> float:
    """Oracle-grade Ed(P_i, x) via shortest-path distances from x."""
    if not 0 <= i < inst.n:
        raise IndexOutOfRange(f"point index {i} out of range")
    g = inst.graph
    dist = g.distances_from_point(x)
    p = inst.points[i]
    acc = 0.0
    for loc in p.locations:
        acc += loc.prob * g.point_eval(dist, location_point(g, loc.position), x)
    return p.constant + p.weight * acc


def naive_expected_all(inst: Instance, x: GraphPoint) -> list[float]:
    """All Ed(P_i, x) from one Dijkstra; same math as expected_distance_naive."""
    g = inst.graph
    dist = g.distances_from_point(x)
    out = []
    for p in inst.points:
        acc = 0.0
        for loc in p.locations:
            acc += loc.prob * g.point_eval(dist, location_point(g, loc.position), x)
        out.append(p.constant + p.weight * acc)
    return out


def expected_distances_all(inst: Instance, x: GraphPoint) -> list[float]:
    """All Ed(P_i, x) in O(|G| + mn) by one pre-order sweep of the skeleton.

    Requires every location to sit at a vertex.
    """
    if not inst.is_vertex_constrained:
        raise NotVertexConstrained("expected_distances_all needs vertex locations")
    dist = propagate_distances(inst.skeleton, x)
    out = []
    for p in inst.points:
        acc = 0.0
        for loc in p.locations:
            acc += loc.prob * dist[loc.position]
        out.append(p.constant + p.weight * acc)
    return out


@dataclass(frozen=True)
class SplitSums:
    """Per-point probability mass in each split subgraph of a cut, plus mass at the cut."""

    splits: tuple[tuple[int, ...], ...]
    sums: tuple[tuple[float, ...], ...]    # indexed [point][split]
    at_cut: tuple[float, ...]


def probability_split_sums(inst: Instance, cut: int | Block) -> SplitSums:
    """Probability sums of every point over the split subgraphs of a cut."""
    if not inst.is_vertex_constrained:
        raise NotVertexConstrained("probability_split_sums needs vertex locations")
    g = inst.graph
    if isinstance(cut, Block):
        removed = set(cut.vertices)
    else:
        removed = {cut}
    comps = components_without(g, removed)
    if not isinstance(cut, Block) and len(comps) < 2:
        raise NotAnArticulation(f"removing vertex {cut} does not disconnect the graph")
    comp_of = {}
    for k, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = k
    sums = [[0.0] * len(comps) for _ in range(inst.n)]
    at_cut = [0.0] * inst.n
    for i, p in enumerate(inst.points):
        for loc in p.locations:
            v = loc.position
            if v in removed:
                at_cut[i] += loc.prob
            else:
                sums[i][comp_of[v]] += loc.prob
    return SplitSums(tuple(tuple(c) for c in comps),
                     tuple(tuple(row) for row in sums),
                     tuple(at_cut))
