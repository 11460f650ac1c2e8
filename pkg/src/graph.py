"""
Graph substrate: validated simple graphs, distance tables and vertex-edge distances.

Vertices are 0-based indices; edges are identified by their position in the
edge list as given, so the vertex-edge distance matrix rows line up with the
caller's edge order.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .exceptions import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    IndexOutOfRangeError,
    InvalidInputError,
    LoopEdgeError,
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class DistanceTables:
    """All-pairs vertex distances ``vv`` (n x n) and the vertex-edge matrix ``ve`` (m x n)."""

    vv: np.ndarray
    ve: np.ndarray

    def __post_init__(self) -> None:
        self.vv.setflags(write=False)
        self.ve.setflags(write=False)


@dataclass(frozen=True)
class SimpleGraph:
    """
    A finite simple graph with indexed vertices and positionally indexed edges.

    May be disconnected; use ``Graph`` wherever distances are needed.
    """

    n: int
    edges: Tuple[Edge, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InvalidInputError(f"vertex count must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != self.n:
                raise InvalidInputError(f"expected {self.n} labels, got {len(labels)}")
            object.__setattr__(self, "labels", labels)

        seen: Dict[Edge, int] = {}
        for position, (u, v) in enumerate(self.edges):
            for endpoint in (u, v):
                if not 0 <= endpoint < self.n:
                    raise IndexOutOfRangeError("vertex", endpoint, self.n)
            if u == v:
                raise LoopEdgeError(u, position)
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(key, position)
            seen[key] = position
        object.__setattr__(self, "_edge_lookup", seen)

    @property
    def m(self) -> int:
        return len(self.edges)

    def check_vertex(self, v: int) -> int:
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 0 <= v < self.n:
            raise IndexOutOfRangeError("vertex", v, self.n)
        return int(v)

    def check_edge(self, e: int) -> int:
        if isinstance(e, bool) or not isinstance(e, (int, np.integer)) or not 0 <= e < self.m:
            raise IndexOutOfRangeError("edge", e, self.m)
        return int(e)

    def edge_index(self, u: int, v: int) -> int:
        """Position of the unordered edge ``uv`` in the edge list."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_lookup[key]  # type: ignore[attr-defined]
        except KeyError:
            raise InvalidInputError(f"({u}, {v}) is not an edge") from None

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._edge_lookup  # type: ignore[attr-defined]

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        counts = [0] * self.n
        for u, v in self.edges:
            counts[u] += 1
            counts[v] += 1
        return tuple(counts)

    def degree(self, v: int) -> int:
        return self.degrees[self.check_vertex(v)]

    def label(self, v: int) -> str:
        """Display label; 1-based ``v{i}`` unless labels were supplied."""
        v = self.check_vertex(v)
        if self.labels is not None:
            return self.labels[v]
        return f"v{v + 1}"

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.edges)
        return nxg

    def is_connected(self) -> bool:
        return self.n == 1 or nx.is_connected(self.to_networkx())


@dataclass(frozen=True)
class Graph(SimpleGraph):
    """A connected simple graph; distances are computed on first use and cached."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.n > 1:
            components = nx.number_connected_components(self.to_networkx())
            if components != 1:
                raise DisconnectedGraphError(self.n, components)

    @cached_property
    def distances(self) -> DistanceTables:
        return all_pairs_distances(self)

    def edge_endpoints(self) -> Tuple[np.ndarray, np.ndarray]:
        if not self.edges:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty
        arr = np.asarray(self.edges, dtype=np.int64)
        return arr[:, 0], arr[:, 1]


def build_simple_graph(n: int, edges: Iterable[Sequence[int]],
                       labels: Optional[Sequence[str]] = None) -> SimpleGraph:
    """Validate a possibly disconnected simple graph (used for corona second factors)."""
    return SimpleGraph(n, tuple(_as_pair(e) for e in edges),
                       tuple(labels) if labels is not None else None)


def build_graph(n: int, edges: Iterable[Sequence[int]],
                labels: Optional[Sequence[str]] = None) -> Graph:
    """
    Validate and build a connected simple graph.

    Args:
        n: Vertex count (at least 1).
        edges: Unordered vertex pairs, 0-based; order is preserved.
        labels: Optional display label per vertex.

    Returns:
        The validated Graph.

    Raises:
        DisconnectedGraphError, LoopEdgeError, DuplicateEdgeError, IndexOutOfRangeError
    """
    g = Graph(n, tuple(_as_pair(e) for e in edges),
              tuple(labels) if labels is not None else None)
    logger.debug(f"Built graph with n={g.n}, m={g.m}")
    return g


def as_connected(g: SimpleGraph) -> Graph:
    """Promote a SimpleGraph to Graph, checking connectivity."""
    if isinstance(g, Graph):
        return g
    return Graph(g.n, g.edges, g.labels)


def from_networkx(nxg: nx.Graph, edges: Optional[Iterable[Edge]] = None,
                  labels: Optional[Sequence[str]] = None) -> Graph:
    """
    Convert a networkx graph, relabelling nodes 0..n-1 in sorted node order.

    Edges are taken in ``edges`` order when given, otherwise sorted as (min, max) pairs.
    """
    nodes = sorted(nxg.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    if edges is None:
        pairs = sorted(tuple(sorted((index[a], index[b]))) for a, b in nxg.edges())
    else:
        pairs = [(index[a], index[b]) for a, b in edges]
    return build_graph(len(nodes), pairs, labels)


def all_pairs_distances(g: Graph) -> DistanceTables:
    """
    Compute hop distances between all vertex pairs (BFS from every vertex)
    and derive the vertex-edge matrix D with ``ve[i][j] = d(e_i, v_j)``.
    """
    vv = np.zeros((g.n, g.n), dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        for target, length in lengths.items():
            vv[source, target] = length
    xs, ys = g.edge_endpoints()
    ve = np.minimum(vv[xs], vv[ys]) if g.m else np.zeros((0, g.n), dtype=np.int64)
    return DistanceTables(vv=vv, ve=ve)


def vertex_edge_distance(g: Graph, v: int, e: int) -> int:
    """Distance between vertex ``v`` and edge ``e = xy``: ``min(d(v, x), d(v, y))``."""
    v = g.check_vertex(v)
    e = g.check_edge(e)
    return int(g.distances.ve[e, v])


def vertex_distance(g: Graph, u: int, v: int) -> int:
    return int(g.distances.vv[g.check_vertex(u), g.check_vertex(v)])


def disjoint_union(graphs: Sequence[SimpleGraph]) -> Tuple[int, List[Edge], List[int]]:
    """Vertex count, edge list and per-component offsets of the component-major union."""
    offsets: List[int] = []
    edges: List[Edge] = []
    total = 0
    for g in graphs:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in g.edges)
        total += g.n
    return total, edges, offsets


def _as_pair(edge: Sequence[int]) -> Edge:
    if len(edge) != 2:
        raise InvalidInputError(f"an edge needs exactly two endpoints, got {tuple(edge)!r}")
    u, v = edge
    return int(u), int(v)
