"""Weighted undirected cactus graphs: validation, blocks, points on edges, distances.

A cactus is a connected graph in which every edge lies on at most one simple
cycle, so every biconnected block is either a bridge edge or a simple cycle.
Distance queries here are oracle grade (Dijkstra from a split point); the fast
solver paths never call them in a hot loop.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import BadVertexId, NonpositiveEdgeLength, NotACactus, NotConnected

# Offsets this close to an endpoint snap to the vertex itself.
SNAP_EPS = 1e-12
# Default comparison tolerance for distance values.
DEFAULT_EPS = 1e-9

BRIDGE = "bridge"
CYCLE = "cycle"


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    length: float

    def other(self, vertex: int) -> int:
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise ValueError(f"vertex {vertex} is not an endpoint of this edge")


@dataclass(frozen=True)
class GraphPoint:
    """A point on the graph: offset ``t`` along edge ``edge`` from its stored u endpoint."""

    edge: int
    t: float


@dataclass(frozen=True)
class Block:
    """One biconnected block: a bridge edge or a simple cycle.

    For cycles, ``edges`` and ``vertices`` are aligned cyclically so that
    ``edges[i]`` joins ``vertices[i]`` and ``vertices[(i + 1) % k]``, and
    ``prefix[i]`` is the arc position of ``vertices[i]`` measured from
    ``vertices[0]`` in that stored direction.
    """

    kind: str
    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    prefix: tuple[float, ...] = ()
    circumference: float = 0.0


class CactusGraph:
    """Immutable weighted cactus with adjacency and block decomposition."""

    def __init__(self, vertex_count: int, edges: list[Edge],
                 adjacency: list[list[int]], blocks: list[Block],
                 edge_block: list[int]):
        self.vertex_count = vertex_count
        self.edges = edges
        self.adjacency = adjacency
        self.blocks = blocks
        self.edge_block = edge_block

    # -- basic queries -------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_length(self, eid: int) -> float:
        return self.edges[eid].length

    def neighbors(self, v: int):
        for eid in self.adjacency[v]:
            yield self.edges[eid].other(v), eid

    # -- points --------------------------------------------------------

    def point(self, edge_id: int, t: float) -> GraphPoint:
        """Canonical point on edge ``edge_id``; offsets snap to endpoints within 1e-12."""
        if not 0 <= edge_id < len(self.edges):
            raise ValueError(f"edge id {edge_id} out of range")
        length = self.edges[edge_id].length
        if t < -SNAP_EPS or t > length + SNAP_EPS:
            raise ValueError(f"offset {t} outside edge of length {length}")
        if abs(t) <= SNAP_EPS:
            t = 0.0
        elif abs(t - length) <= SNAP_EPS:
            t = length
        return GraphPoint(edge_id, t)

    def vertex_point(self, v: int) -> GraphPoint:
        """Canonical vertex form: the smallest incident edge id, offset at v's end."""
        if not 0 <= v < self.vertex_count:
            raise BadVertexId(f"vertex {v} out of range")
        eid = min(self.adjacency[v])
        e = self.edges[eid]
        return GraphPoint(eid, 0.0 if e.u == v else e.length)

    def point_vertex(self, p: GraphPoint) -> int | None:
        """Vertex id if ``p`` sits at an edge endpoint, else None."""
        e = self.edges[p.edge]
        if abs(p.t) <= SNAP_EPS:
            return e.u
        if abs(p.t - e.length) <= SNAP_EPS:
            return e.v
        return None

    def same_point(self, p: GraphPoint, q: GraphPoint, eps: float = DEFAULT_EPS) -> bool:
        pv, qv = self.point_vertex(p), self.point_vertex(q)
        if pv is not None or qv is not None:
            return pv == qv
        return p.edge == q.edge and abs(p.t - q.t) <= eps

    # -- distances -----------------------------------------------------

    def vertex_distances(self, source: int) -> list[float]:
        """Dijkstra distances from a vertex to every vertex."""
        return self._dijkstra({source: 0.0})

    def distances_from_point(self, p: GraphPoint) -> list[float]:
        """Dijkstra distances from an arbitrary point to every vertex."""
        v = self.point_vertex(p)
        if v is not None:
            return self._dijkstra({v: 0.0})
        e = self.edges[p.edge]
        seeds = {e.u: p.t}
        other = e.length - p.t
        if e.v in seeds:
            seeds[e.v] = min(seeds[e.v], other)
        else:
            seeds[e.v] = other
        return self._dijkstra(seeds)

    def _dijkstra(self, seeds: dict[int, float]) -> list[float]:
        dist = [float("inf")] * self.vertex_count
        heap = []
        for v, d in seeds.items():
            dist[v] = d
            heap.append((d, v))
        heapq.heapify(heap)
        while heap:
            d, v = heapq.heappop(heap)
            if d > dist[v]:
                continue
            for eid in self.adjacency[v]:
                e = self.edges[eid]
                w = e.other(v)
                nd = d + e.length
                if nd < dist[w]:
                    dist[w] = nd
                    heapq.heappush(heap, (nd, w))
        return dist

    def point_to_point(self, p: GraphPoint, q: GraphPoint) -> float:
        dist = self.distances_from_point(p)
        return self.point_eval(dist, q, p)

    def point_eval(self, vertex_dist: list[float], q: GraphPoint,
                   source: GraphPoint | None = None) -> float:
        """Distance to ``q`` given per-vertex distances from some source point.

        When ``source`` lies on the same edge as ``q``, the direct along-edge
        path is also a candidate (it can beat any path through the endpoints).
        """
        qv = self.point_vertex(q)
        if qv is not None:
            return vertex_dist[qv]
        e = self.edges[q.edge]
        best = min(vertex_dist[e.u] + q.t, vertex_dist[e.v] + (e.length - q.t))
        if source is not None and source.edge == q.edge:
            best = min(best, abs(source.t - q.t))
        return best


def shortest_distance(g: CactusGraph, p: GraphPoint, q: GraphPoint) -> float:
    """Exact shortest-path length between two points; symmetric, zero on identity."""
    return g.point_to_point(p, q)


def components_without(g: CactusGraph, removed) -> list[list[int]]:
    """Connected components of the graph after deleting a vertex set, sorted."""
    seen = set(removed)
    comps: list[list[int]] = []
    for s in range(g.vertex_count):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w, _ in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def biconnected_blocks(g: CactusGraph) -> list[Block]:
    """The block decomposition; every edge appears in exactly one block."""
    return g.blocks


def build_graph(vertex_count: int, edge_list: list[tuple[int, int, float]]) -> CactusGraph:
    """Validate and index a cactus given as ``(u, v, length)`` triples.

    Raises NotConnected, NotACactus, NonpositiveEdgeLength or BadVertexId.
    Parallel edges are allowed and form a two-vertex cycle block.
    """
    if vertex_count <= 0:
        raise BadVertexId("vertex count must be positive")
    if not edge_list:
        raise NotConnected("edge list is empty")
    edges: list[Edge] = []
    adjacency: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v, length in edge_list:
        if not (0 <= u < vertex_count) or not (0 <= v < vertex_count):
            raise BadVertexId(f"edge ({u}, {v}) references a vertex out of range")
        if u == v:
            raise NotACactus(f"self-loop at vertex {u}")
        if not length > 0:
            raise NonpositiveEdgeLength(f"edge ({u}, {v}) has length {length}")
        eid = len(edges)
        edges.append(Edge(u, v, float(length)))
        adjacency[u].append(eid)
        adjacency[v].append(eid)

    block_edge_sets = _biconnected_edge_sets(vertex_count, edges, adjacency)
    blocks: list[Block] = []
    edge_block = [-1] * len(edges)
    for bid, eids in enumerate(block_edge_sets):
        block = _classify_block(edges, eids)
        blocks.append(block)
        for eid in eids:
            edge_block[eid] = bid
    return CactusGraph(vertex_count, edges, adjacency, blocks, edge_block)


def _biconnected_edge_sets(vertex_count: int, edges: list[Edge],
                           adjacency: list[list[int]]) -> list[list[int]]:
    """Iterative Hopcroft-Tarjan over edge ids; multigraph safe."""
    disc = [-1] * vertex_count
    low = [0] * vertex_count
    edge_stack: list[int] = []
    components: list[list[int]] = []

    disc[0] = low[0] = 0
    timer = 1
    # frames: (vertex, entering edge id, index into adjacency list)
    stack = [(0, -1, 0)]
    while stack:
        v, pe, idx = stack[-1]
        if idx < len(adjacency[v]):
            stack[-1] = (v, pe, idx + 1)
            eid = adjacency[v][idx]
            if eid == pe:
                continue
            w = edges[eid].other(v)
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                edge_stack.append(eid)
                stack.append((w, eid, 0))
            elif disc[w] < disc[v]:
                edge_stack.append(eid)
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if stack:
                u, _, _ = stack[-1]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    comp = []
                    while True:
                        eid = edge_stack.pop()
                        comp.append(eid)
                        if eid == pe:
                            break
                    comp.reverse()
                    components.append(comp)
    if any(d == -1 for d in disc):
        raise NotConnected("graph is not connected")
    return components


def _classify_block(edges: list[Edge], eids: list[int]) -> Block:
    if len(eids) == 1:
        e = edges[eids[0]]
        return Block(BRIDGE, (eids[0],), (e.u, e.v))
    verts = set()
    local: dict[int, list[int]] = {}
    for eid in eids:
        e = edges[eid]
        verts.update((e.u, e.v))
        local.setdefault(e.u, []).append(eid)
        local.setdefault(e.v, []).append(eid)
    if len(verts) != len(eids) or any(len(inc) != 2 for inc in local.values()):
        raise NotACactus("a biconnected block is neither a bridge nor a simple cycle")
    # Walk the cycle starting along the smallest edge id; this fixes the
    # stored (clockwise) direction deterministically.
    start_eid = min(eids)
    start = edges[start_eid].u
    order_e = [start_eid]
    order_v = [start]
    cur = edges[start_eid].other(start)
    prev_eid = start_eid
    while cur != start:
        order_v.append(cur)
        a, b = local[cur]
        nxt = b if a == prev_eid else a
        order_e.append(nxt)
        cur = edges[nxt].other(cur)
        prev_eid = nxt
    prefix = [0.0]
    for eid in order_e[:-1]:
        prefix.append(prefix[-1] + edges[eid].length)
    circumference = prefix[-1] + edges[order_e[-1]].length
    return Block(CYCLE, tuple(order_e), tuple(order_v), tuple(prefix), circumference)
