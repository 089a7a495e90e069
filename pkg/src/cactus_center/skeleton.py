"""Skeleton tree of a cactus: graft, cycle and hinge nodes with O(1) lookups.

The skeleton T has one node per block (cycle or graft) and one per hinge
vertex (a cycle vertex of degree at least 3 in the graph); each block node is
joined to the hinge nodes of the hinges on its block, so node kinds alternate
along every tree edge.  A graft is a maximal bridge-connected tree subgraph
with hinges only at its leaves; a vertex shared by two cycles becomes a hinge
node sitting directly between the two cycle nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptySubtree, InternalInconsistency, NotABlockNode
from .graph import BRIDGE, CYCLE as CYCLE_BLOCK, CactusGraph, GraphPoint

GRAFT = "graft"
CYCLE = "cycle"
HINGE = "hinge"


@dataclass
class SkeletonNode:
    kind: str
    neighbors: list[int] = field(default_factory=list)
    vertices: tuple[int, ...] = ()      # block nodes: block vertex set (cycles in cyclic order)
    edges: tuple[int, ...] = ()         # block nodes: edge ids (cycles in cyclic order)
    block_id: int = -1                  # cycle nodes: index into graph.blocks
    prefix: tuple[float, ...] = ()      # cycle nodes: arc position of vertices[i]
    circumference: float = 0.0          # cycle nodes
    hinge_vertex: int = -1              # hinge nodes

    @property
    def is_block(self) -> bool:
        return self.kind != HINGE


@dataclass(frozen=True)
class SplitSubtree:
    """One component hanging off a block's hinge: root block node plus everything behind it."""

    hinge_node: int
    root_node: int
    nodes: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class HSubtree:
    """A block node together with its hinge nodes and the subtrees behind each hinge."""

    block_node: int
    hinges: tuple[int, ...]
    splits: tuple[SplitSubtree, ...]


class SkeletonTree:
    def __init__(self, graph: CactusGraph, nodes: list[SkeletonNode],
                 vertex_node: list[int], hinge_node_by_vertex: dict[int, int],
                 local_index: list[dict[int, int]], edge_node: list[int]):
        self.graph = graph
        self.nodes = nodes
        self.vertex_node = vertex_node
        self.hinge_node_by_vertex = hinge_node_by_vertex
        self.local_index = local_index
        self.edge_node = edge_node

    def __len__(self) -> int:
        return len(self.nodes)

    def node_of_vertex(self, v: int) -> int:
        """The node holding vertex v: its hinge node when v is a hinge, else its block node."""
        return self.vertex_node[v]

    def is_hinge_vertex(self, v: int) -> bool:
        return v in self.hinge_node_by_vertex

    def blocks_of_vertex(self, v: int) -> list[int]:
        """Block nodes whose block contains v (several when v is a hinge)."""
        nid = self.vertex_node[v]
        if self.nodes[nid].kind == HINGE:
            return list(self.nodes[nid].neighbors)
        return [nid]

    def copy_index(self, block_node: int, v: int) -> int:
        """Local index of vertex v on the given block (the hinge's open copy)."""
        return self.local_index[block_node][v]

    def node_of_point(self, p: GraphPoint) -> int:
        """A node containing the point: block node of its edge, or hinge node at a hinge vertex."""
        v = self.graph.point_vertex(p)
        if v is not None:
            return self.vertex_node[v]
        return self.edge_node[p.edge]

    def subtree_nodes(self, root: int, avoid: int) -> frozenset[int]:
        """Nodes reachable from ``root`` without stepping on ``avoid``."""
        seen = {root}
        stack = [root]
        while stack:
            u = stack.pop()
            for w in self.nodes[u].neighbors:
                if w != avoid and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)


def build_skeleton(g: CactusGraph) -> SkeletonTree:
    """Decompose the cactus into its skeleton tree; deterministic given input order."""
    on_cycle = set()
    for block in g.blocks:
        if block.kind == CYCLE_BLOCK:
            on_cycle.update(block.vertices)
    hinges = sorted(v for v in on_cycle if g.degree(v) >= 3)
    hinge_set = set(hinges)

    nodes: list[SkeletonNode] = []
    block_membership: dict[int, list[int]] = {}

    def register(nid: int, verts) -> None:
        for v in verts:
            block_membership.setdefault(v, []).append(nid)

    # Cycle nodes come first, in block order.
    for bid, block in enumerate(g.blocks):
        if block.kind != CYCLE_BLOCK:
            continue
        nid = len(nodes)
        nodes.append(SkeletonNode(
            CYCLE, vertices=block.vertices, edges=block.edges, block_id=bid,
            prefix=block.prefix, circumference=block.circumference))
        register(nid, block.vertices)

    # Grafts: bridge-edge components that do not expand through hinge vertices.
    bridge_ids = [bid for bid, b in enumerate(g.blocks) if b.kind == BRIDGE]
    seen_edges: set[int] = set()
    for bid in bridge_ids:
        eid = g.blocks[bid].edges[0]
        if eid in seen_edges:
            continue
        edges = []
        verts: set[int] = set()
        stack = [eid]
        seen_edges.add(eid)
        while stack:
            cur = stack.pop()
            edges.append(cur)
            for v in (g.edges[cur].u, g.edges[cur].v):
                if v in verts:
                    continue
                verts.add(v)
                if v in hinge_set:
                    continue
                for nxt in g.adjacency[v]:
                    if nxt not in seen_edges and g.blocks[g.edge_block[nxt]].kind == BRIDGE:
                        seen_edges.add(nxt)
                        stack.append(nxt)
        nid = len(nodes)
        nodes.append(SkeletonNode(GRAFT, vertices=tuple(sorted(verts)),
                                  edges=tuple(sorted(edges))))
        register(nid, verts)

    n_blocks = len(nodes)
    hinge_node_by_vertex: dict[int, int] = {}
    for v in hinges:
        nid = len(nodes)
        nodes.append(SkeletonNode(HINGE, hinge_vertex=v, vertices=(v,)))
        hinge_node_by_vertex[v] = nid
        for b in block_membership[v]:
            nodes[nid].neighbors.append(b)
            nodes[b].neighbors.append(nid)

    edge_count = sum(len(nodes[h].neighbors) for h in range(n_blocks, len(nodes)))
    if edge_count != len(nodes) - 1:
        raise InternalInconsistency("skeleton is not a tree")

    vertex_node = [-1] * g.vertex_count
    for v, nid in hinge_node_by_vertex.items():
        vertex_node[v] = nid
    for nid in range(n_blocks):
        for v in nodes[nid].vertices:
            if vertex_node[v] == -1:
                vertex_node[v] = nid
    local_index = [
        {v: i for i, v in enumerate(node.vertices)} if node.is_block else {}
        for node in nodes
    ]
    edge_node = [-1] * len(g.edges)
    for nid in range(n_blocks):
        for eid in nodes[nid].edges:
            edge_node[eid] = nid
    return SkeletonTree(g, nodes, vertex_node, hinge_node_by_vertex, local_index, edge_node)


def h_subtree(sk: SkeletonTree, u: int) -> HSubtree:
    """The H-subtree of a block node: its hinges and the split subtrees behind them."""
    node = sk.nodes[u]
    if not node.is_block:
        raise NotABlockNode(f"node {u} is a hinge node")
    splits = []
    for h in node.neighbors:
        for b in sk.nodes[h].neighbors:
            if b != u:
                splits.append(SplitSubtree(h, b, sk.subtree_nodes(b, avoid=h)))
    return HSubtree(u, tuple(node.neighbors), tuple(splits))


def centroid(sk: SkeletonTree, live_subtree) -> int:
    """A node of the live subtree whose split subtrees within it all have at most
    half its nodes; ties broken by smallest node id."""
    live = sorted(set(live_subtree))
    if not live:
        raise EmptySubtree("live subtree is empty")
    live_set = set(live)
    total = len(live)
    root = live[0]
    # Iterative post-order to get subtree sizes within the live set.
    size = {v: 1 for v in live}
    parent = {root: -1}
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for w in sk.nodes[v].neighbors:
            if w in live_set and w not in parent:
                parent[w] = v
                order.append(w)
                stack.append(w)
    if len(order) != total:
        raise InternalInconsistency("live subtree is not connected")
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    best = -1
    for v in live:
        worst = total - size[v]
        for w in sk.nodes[v].neighbors:
            if w in live_set and parent.get(w) == v:
                worst = max(worst, size[w])
        if worst <= total // 2 and (best == -1 or v < best):
            best = v
    if best == -1:
        raise InternalInconsistency("no centroid found")
    return best


def propagate_distances(sk: SkeletonTree, source: GraphPoint,
                        allowed=None) -> list[float]:
    """Distances from a point to every vertex by one block-by-block pre-order sweep.

    Runs in time linear in the graph: each block is entered once through a
    hinge whose distance is already final, and distances inside a block follow
    from tree offsets (grafts) or the shorter of the two arcs (cycles).
    ``allowed`` restricts the sweep to a node subset; unreached vertices stay
    at infinity.
    """
    g = sk.graph
    dist = [float("inf")] * g.vertex_count
    pending: list[tuple[int, int]] = []   # (block node, entry vertex)
    visited: set[int] = set()

    def enqueue_vertex(v: int) -> None:
        for b in sk.blocks_of_vertex(v):
            if b not in visited and (allowed is None or b in allowed):
                visited.add(b)
                pending.append((b, v))

    v0 = g.point_vertex(source)
    if v0 is not None:
        dist[v0] = 0.0
        enqueue_vertex(v0)
    else:
        b0 = sk.edge_node[source.edge]
        if allowed is None or b0 in allowed:
            visited.add(b0)
            _seed_block_from_point(sk, b0, source, dist)
            for v in sk.nodes[b0].vertices:
                if sk.is_hinge_vertex(v):
                    enqueue_vertex(v)

    while pending:
        b, entry = pending.pop()
        _sweep_block(sk, b, entry, dist)
        for v in sk.nodes[b].vertices:
            if v != entry and sk.is_hinge_vertex(v):
                enqueue_vertex(v)
    return dist


def _sweep_block(sk: SkeletonTree, b: int, entry: int, dist: list[float]) -> None:
    g = sk.graph
    node = sk.nodes[b]
    d0 = dist[entry]
    if node.kind == CYCLE:
        length = node.circumference
        p0 = node.prefix[sk.local_index[b][entry]]
        for v, pos in zip(node.vertices, node.prefix):
            arc = abs(pos - p0)
            d = d0 + min(arc, length - arc)
            if d < dist[v]:
                dist[v] = d
    else:
        edge_set = set(node.edges)
        stack = [entry]
        seen = {entry}
        while stack:
            v = stack.pop()
            for eid in g.adjacency[v]:
                if eid not in edge_set:
                    continue
                w = g.edges[eid].other(v)
                if w not in seen:
                    seen.add(w)
                    nd = dist[v] + g.edges[eid].length
                    if nd < dist[w]:
                        dist[w] = nd
                    stack.append(w)


def _seed_block_from_point(sk: SkeletonTree, b: int, source: GraphPoint,
                           dist: list[float]) -> None:
    """Distances inside the block containing an interior source point."""
    g = sk.graph
    node = sk.nodes[b]
    e = g.edges[source.edge]
    if node.kind == CYCLE:
        length = node.circumference
        idx = node.edges.index(source.edge)
        start = node.vertices[idx]
        p0 = node.prefix[idx] + (source.t if e.u == start else e.length - source.t)
        for v, pos in zip(node.vertices, node.prefix):
            arc = abs(pos - p0)
            dist[v] = min(dist[v], min(arc, length - arc))
    else:
        # Bridge interior: the two sides of the tree are independent.
        edge_set = set(node.edges) - {source.edge}
        for seed, d0 in ((e.u, source.t), (e.v, e.length - source.t)):
            if d0 < dist[seed]:
                dist[seed] = d0
            stack = [seed]
            seen = {seed}
            while stack:
                v = stack.pop()
                for eid in g.adjacency[v]:
                    if eid not in edge_set:
                        continue
                    w = g.edges[eid].other(v)
                    if w not in seen:
                        seen.add(w)
                        nd = dist[v] + g.edges[eid].length
                        if nd < dist[w]:
                            dist[w] = nd
                        stack.append(w)
