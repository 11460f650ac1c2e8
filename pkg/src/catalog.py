"""
Named-graph catalog.

Canonical orderings:
    path            vertices 0..n-1 along the path; edges (i, i+1)
    cycle           vertices in cyclic order; edges (i, i+1) then (0, n-1)
    complete        edges in lexicographic order; K3 is (0, 1), (0, 2), (1, 2),
                    while cycle 3 numbers the triangle (0, 1), (1, 2), (0, 2)
    star            K_{1,m}, center 0, leaves 1..m
    wheel           hub 0, rim 1..n-1 in cyclic order (n = total vertex count)
    petersen        networkx ordering: outer 5-cycle 0..4, inner pentagram 5..9
    truncated_cube  networkx ordering of the 24-vertex Archimedean solid
    complete_bipartite  K_{a,b}, part A = 0..a-1, part B = a..a+b-1
    hypercube       Q_d, vertex i is the bit string of i (most significant bit first)

Unless stated otherwise edges are sorted lexicographically as (min, max) pairs.
"""
import logging
from typing import Callable, Dict, List, Sequence, Tuple

import networkx as nx

from .exceptions import BadParamsError, UnknownGraphError
from .graph import Graph, build_graph, from_networkx

logger = logging.getLogger(__name__)


def _single(name: str, params: Sequence[int], minimum: int) -> int:
    if len(params) != 1:
        raise BadParamsError(name, f"expects exactly one parameter, got {len(params)}")
    value = params[0]
    if value < minimum:
        raise BadParamsError(name, f"parameter must be at least {minimum}, got {value}")
    return value


def _none(name: str, params: Sequence[int]) -> None:
    if params:
        raise BadParamsError(name, f"takes no parameters, got {len(params)}")


def _path(params: Sequence[int]) -> Graph:
    n = _single("path", params, 1)
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(params: Sequence[int]) -> Graph:
    n = _single("cycle", params, 3)
    return build_graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def _complete(params: Sequence[int]) -> Graph:
    return from_networkx(nx.complete_graph(_single("complete", params, 1)))


def _star(params: Sequence[int]) -> Graph:
    return from_networkx(nx.star_graph(_single("star", params, 1)))


def _wheel(params: Sequence[int]) -> Graph:
    return from_networkx(nx.wheel_graph(_single("wheel", params, 4)))


def _petersen(params: Sequence[int]) -> Graph:
    _none("petersen", params)
    return from_networkx(nx.petersen_graph())


def _truncated_cube(params: Sequence[int]) -> Graph:
    _none("truncated_cube", params)
    return from_networkx(nx.truncated_cube_graph())


def _complete_bipartite(params: Sequence[int]) -> Graph:
    if len(params) != 2 or min(params) < 1:
        raise BadParamsError("complete_bipartite", "expects two parameters a, b >= 1")
    a, b = params
    return from_networkx(nx.complete_bipartite_graph(a, b))


def _hypercube(params: Sequence[int]) -> Graph:
    d = _single("hypercube", params, 1)
    # nodes are bit tuples; sorted tuple order is binary counting order
    return from_networkx(nx.hypercube_graph(d))


_CATALOG: Dict[str, Tuple[Callable[[Sequence[int]], Graph], str]] = {
    "path": (_path, "path P_n on n >= 1 vertices [n]"),
    "cycle": (_cycle, "cycle C_n, n >= 3 [n]"),
    "complete": (_complete, "complete graph K_n, n >= 1 [n]"),
    "star": (_star, "star K_{1,m}, center 0, m >= 1 [m]"),
    "wheel": (_wheel, "wheel on n >= 4 vertices, hub 0 [n]"),
    "petersen": (_petersen, "Petersen graph, 10 vertices []"),
    "truncated_cube": (_truncated_cube, "truncated cube, 24 vertices, 36 edges []"),
    "complete_bipartite": (_complete_bipartite, "complete bipartite K_{a,b} [a b]"),
    "hypercube": (_hypercube, "hypercube Q_d on 2^d vertices [d]"),
}


def catalog_names() -> List[Tuple[str, str]]:
    """Catalog families with a one-line description, in listing order."""
    return [(name, description) for name, (_, description) in _CATALOG.items()]


def catalog_graph(name: str, params: Sequence[int] = ()) -> Graph:
    """
    Build a named graph.

    Args:
        name: Family name, e.g. ``path`` or ``truncated_cube``.
        params: Integer parameters of the family.

    Raises:
        UnknownGraphError: if ``name`` is not in the catalog.
        BadParamsError: if ``params`` do not fit the family.
    """
    try:
        builder, _ = _CATALOG[name]
    except KeyError:
        raise UnknownGraphError(name) from None
    try:
        values = [int(p) for p in params]
    except (TypeError, ValueError):
        raise BadParamsError(name, f"parameters must be integers, got {list(params)!r}") from None
    g = builder(values)
    logger.debug(f"Catalog graph {name}{values}: n={g.n}, m={g.m}")
    return g
