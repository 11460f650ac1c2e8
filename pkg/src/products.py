"""
Hierarchical, Cartesian, corona and bridge-cycle constructions together with the
equidistant-discriminator quantities edim(G(U)), edim+(G(U)) and the bounds and
exact formulas built on them.

Product vertex (g, h) of G(U) x H has index ``g * n(H) + h`` (G-layers are
contiguous blocks). Edges: every G-layer (h = 0, 1, ...) in G's edge order,
then the H-layers above the roots in U order.

edim(G(U)) is computed as one minimum hitting set over every root-equidistant
edge pair. A set S of vertices distinguishes all such pairs exactly when, for
every root u and distance k, S is an equidistant discriminator for E_G(u, k);
so the union of per-class discriminators realising the minimum is such an S,
and any such S restricts to per-class discriminators whose union is S. The two
minima therefore agree (likewise for edim+ with the root pairs added).
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from .config import PRODUCTS_CONFIG
from .exceptions import (
    HTooSmallError,
    InvalidInputError,
    RequiresMultipleRootsError,
    RootedPathExcludedError,
    TooFewComponentsError,
)
from .graph import Graph, SimpleGraph, as_connected, build_graph, disjoint_union
from .resolvability import DimensionResult, is_family_F
from .solver import (
    HittingSetInstance,
    SolverOptions,
    edge_pair_rows,
    enumerate_optimal_witnesses,
    solve_hitting_set,
    vertex_pair_rows,
)

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class RootedSubset:
    """A graph G with an ordered non-empty root set U."""

    g: Graph
    u_set: Tuple[int, ...]

    def __post_init__(self) -> None:
        roots = tuple(self.g.check_vertex(u) for u in self.u_set)
        if not roots:
            raise InvalidInputError("root set U must not be empty")
        if len(set(roots)) != len(roots):
            raise InvalidInputError(f"root set {list(roots)} contains duplicates")
        object.__setattr__(self, "u_set", roots)

    @classmethod
    def single(cls, g: Graph, u: int) -> "RootedSubset":
        return cls(g, (u,))


@dataclass(frozen=True)
class ProductGraph:
    """A constructed product and the factor pair behind each of its vertices."""

    graph: Graph
    labeling: Tuple[Pair, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {pair: i for i, pair in enumerate(self.labeling)})

    def vertex(self, a: int, b: int) -> int:
        try:
            return self._index[(a, b)]  # type: ignore[attr-defined]
        except KeyError:
            raise InvalidInputError(f"({a}, {b}) is not a product vertex") from None

    def pair(self, index: int) -> Pair:
        return self.labeling[self.graph.check_vertex(index)]


def hierarchical_product(gu: RootedSubset, h: Graph) -> ProductGraph:
    """
    G(U) x H: G-layer edges for every vertex of H, H-layer edges only above U.

    Args:
        gu: First factor with its root set.
        h: Second factor.

    Returns:
        ProductGraph with vertex (g, h) at index ``g * n(H) + h``.
    """
    g = gu.g
    nh = h.n
    edges: List[Pair] = []
    for b in range(nh):
        edges.extend((x * nh + b, y * nh + b) for x, y in g.edges)
    for u in gu.u_set:
        edges.extend((u * nh + p, u * nh + q) for p, q in h.edges)
    labeling = tuple((a, b) for a in range(g.n) for b in range(nh))
    labels = [f"({g.label(a)},{h.label(b)})" for a, b in labeling]
    product = build_graph(g.n * nh, edges, labels)
    logger.debug(f"Hierarchical product: |U|={len(gu.u_set)}, n={product.n}, m={product.m}")
    return ProductGraph(product, labeling)


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    """G x H as the hierarchical product with U = V(G)."""
    return hierarchical_product(RootedSubset(g, tuple(range(g.n))), h)


def through_U_distance(gu: RootedSubset, a: int, b: int) -> int:
    """Length of a shortest a,b-walk in G visiting a vertex of U."""
    g = gu.g
    a = g.check_vertex(a)
    b = g.check_vertex(b)
    vv = g.distances.vv
    roots = list(gu.u_set)
    return int((vv[a, roots] + vv[roots, b]).min())


def product_distance(gu: RootedSubset, h: Graph, p1: Pair, p2: Pair) -> int:
    """Distance in G(U) x H from the factor distances, without building the product."""
    g1, h1 = gu.g.check_vertex(p1[0]), h.check_vertex(p1[1])
    g2, h2 = gu.g.check_vertex(p2[0]), h.check_vertex(p2[1])
    if h1 == h2:
        return int(gu.g.distances.vv[g1, g2])
    return through_U_distance(gu, g1, g2) + int(h.distances.vv[h1, h2])


def edge_ball(g: Graph, v: int, k: int) -> Tuple[int, ...]:
    """E_G(v, k): indices of the edges at distance exactly k from v."""
    v = g.check_vertex(v)
    if k < 0:
        raise InvalidInputError(f"distance must be non-negative, got {k}")
    return tuple(int(e) for e in np.flatnonzero(g.distances.ve[:, v] == k))


def equidistant_pairs(gu: RootedSubset) -> List[Pair]:
    """Edge pairs lying at a common distance from some root, sorted."""
    ve = gu.g.distances.ve
    pairs: Set[Pair] = set()
    for u in gu.u_set:
        column = ve[:, u]
        for k in np.unique(column):
            members = np.flatnonzero(column == k).tolist()
            pairs.update(combinations(members, 2))
    return sorted(pairs)


def equidistant_instance(gu: RootedSubset, include_roots: bool = False) -> HittingSetInstance:
    """Hitting-set rows for edim(G(U)); with ``include_roots`` also the root pairs for edim+."""
    g = gu.g
    rows = list(edge_pair_rows(g, equidistant_pairs(gu)))
    if include_roots:
        rows.extend(vertex_pair_rows(g, combinations(sorted(gu.u_set), 2)))
    return HittingSetInstance.from_rows(g.n, rows)


def edim_GU(gu: RootedSubset, options: Optional[SolverOptions] = None) -> DimensionResult:
    """Smallest vertex set distinguishing every pair of edges equidistant from some root."""
    result = solve_hitting_set(equidistant_instance(gu), options)
    return result.as_dimension()


def edim_plus_GU(gu: RootedSubset, options: Optional[SolverOptions] = None) -> DimensionResult:
    """edim(G(U)) with every pair of distinct roots to be distinguished as well."""
    result = solve_hitting_set(equidistant_instance(gu, include_roots=True), options)
    return result.as_dimension()


def is_rooted_path(g: Graph, u: int) -> bool:
    """True iff G is a path and u one of its end vertices (K1 counts)."""
    u = g.check_vertex(u)
    if g.n == 1:
        return True
    is_path = g.m == g.n - 1 and max(g.degrees) <= 2
    return is_path and g.degrees[u] == 1


@dataclass(frozen=True)
class BoundResult:
    """
    One evaluated bound or formula.

    ``value`` is None when the bound does not apply. ``applicable_any`` reports,
    for the witness-meets-U bound, whether any optimal edim+ witness meets U
    (None when not scanned).
    """

    bound_name: str
    value: Optional[int]
    applicable: bool
    applicable_any: Optional[bool] = None
    witness: Tuple[int, ...] = ()
    note: str = ""


def theorem1_bound(gu: RootedSubset, h: Graph,
                   options: Optional[SolverOptions] = None) -> int:
    """n(H) * (edim+(G(U)) + 1), valid for |U| > 1."""
    if len(gu.u_set) <= 1:
        raise RequiresMultipleRootsError(len(gu.u_set))
    return h.n * (edim_plus_GU(gu, options).dimension + 1)


def eq1_bound(gu: RootedSubset, h: Graph, options: Optional[SolverOptions] = None,
              exhaustive_max_vertices: Optional[int] = None) -> BoundResult:
    """
    n(H) * edim+(G(U)) when |U| = 1 or the returned optimal witness meets U.

    For n(G) up to ``exhaustive_max_vertices`` every optimal witness is also
    scanned, and ``applicable_any`` tells whether some witness meets U.
    """
    cap = (PRODUCTS_CONFIG["exhaustive_witness_max_vertices"]
           if exhaustive_max_vertices is None else exhaustive_max_vertices)
    instance = equidistant_instance(gu, include_roots=True)
    result = solve_hitting_set(instance, options)
    roots = set(gu.u_set)
    if len(roots) == 1:
        applicable = True
        applicable_any: Optional[bool] = True
    else:
        applicable = bool(roots & set(result.witness))
        applicable_any = None
        if applicable:
            applicable_any = True
        elif gu.g.n <= cap:
            applicable_any = any(roots & set(w)
                                 for w in enumerate_optimal_witnesses(instance, result.optimum))
    note = ""
    if not applicable and applicable_any:
        note = "returned witness misses U but another optimal witness meets it"
    elif not applicable and applicable_any is None:
        note = "returned witness misses U; other optimal witnesses not scanned"
    elif not applicable:
        note = "no optimal witness meets U"
    return BoundResult(
        bound_name="eq1",
        value=h.n * result.optimum if applicable else None,
        applicable=applicable,
        applicable_any=applicable_any,
        witness=result.witness,
        note=note,
    )


def theorem2_exact(g: Graph, u: int, h: Graph,
                   options: Optional[SolverOptions] = None) -> int:
    """edim(G(u) x H) = n(H) * edim(G(u)) for G(u) not a rooted path and n(H) >= 2."""
    if is_rooted_path(g, u):
        raise RootedPathExcludedError(u, "theorem2_exact")
    if h.n < 2:
        raise HTooSmallError(h.n, 2, "theorem2_exact")
    return h.n * edim_GU(RootedSubset.single(g, u), options).dimension


def product_generator(gu: RootedSubset, h: Graph, base: Iterable[int],
                      extra_root: Optional[int] = None) -> Tuple[int, ...]:
    """Product vertices (base [+ extra_root]) x V(H), sorted."""
    layer = set(base)
    if extra_root is not None:
        layer.add(extra_root)
    return tuple(sorted(a * h.n + b for a in layer for b in range(h.n)))


def theorem1_generator(gu: RootedSubset, h: Graph,
                       options: Optional[SolverOptions] = None) -> Tuple[int, ...]:
    """Generator of the multi-root bound: (edim+ witness + first root) x V(H)."""
    witness = edim_plus_GU(gu, options).basis
    return product_generator(gu, h, witness, gu.u_set[0])


def eq1_generator(gu: RootedSubset, h: Graph,
                  options: Optional[SolverOptions] = None) -> Optional[Tuple[int, ...]]:
    """witness x V(H) when the returned edim+ witness meets U, else None."""
    bound = eq1_bound(gu, h, options, exhaustive_max_vertices=0)
    if not bound.applicable:
        return None
    return product_generator(gu, h, bound.witness)


def join_with_apex(h: SimpleGraph) -> RootedSubset:
    """H + v with the apex v = n(H) adjacent to every vertex of H, rooted at the apex."""
    apex = h.n
    edges = list(h.edges) + [(v, apex) for v in range(h.n)]
    labels = None
    if h.labels is not None:
        labels = list(h.labels) + ["apex"]
    return RootedSubset.single(build_graph(h.n + 1, edges, labels), apex)


def corona_product(g: Graph, h: SimpleGraph) -> ProductGraph:
    """
    G o H built as (H + v)(v) x G and relabelled.

    Vertex x of G keeps index x; vertex a of the copy attached to x gets
    ``n(G) + x * n(H) + a``. ``labeling`` holds the hierarchical pair
    (vertex of H + v, vertex of G), the apex being ``n(H)``.
    """
    joined = join_with_apex(h)
    apex = h.n
    layered = hierarchical_product(joined, g)
    ng, nh = g.n, h.n

    def relabel(index: int) -> int:
        a, x = layered.labeling[index]
        return x if a == apex else ng + x * nh + a

    n = ng * (nh + 1)
    labeling: List[Pair] = [(0, 0)] * n
    for index, pair in enumerate(layered.labeling):
        labeling[relabel(index)] = pair
    edges = [(relabel(p), relabel(q)) for p, q in layered.graph.edges]
    labels = [g.label(x) if a == apex else f"({h.label(a)},{g.label(x)})" for a, x in labeling]
    corona = build_graph(n, edges, labels)
    logger.debug(f"Corona product: n={corona.n}, m={corona.m}")
    return ProductGraph(corona, tuple(labeling))


def _in_family_F(h: SimpleGraph) -> bool:
    # a disconnected H has a vertex at infinite distance from some edge, or no edges at all
    if not h.is_connected():
        return False
    return is_family_F(as_connected(h))


def corona_edim(g: Graph, h: SimpleGraph) -> int:
    """n(H) if n(G) = 1 and H is in family F, otherwise n(G) * (n(H) - 1)."""
    if h.n < 2:
        raise HTooSmallError(h.n, 2, "corona_edim")
    if g.n == 1 and _in_family_F(h):
        return h.n
    return g.n * (h.n - 1)


def bridge_cycle(components: Sequence[Tuple[Graph, int]]) -> Graph:
    """
    Disjoint union of rooted graphs with roots joined in a cycle r1 r2 ... rk r1.

    Vertices are numbered component by component.
    """
    if len(components) < 3:
        raise TooFewComponentsError(len(components))
    graphs = [g for g, _ in components]
    roots = [g.check_vertex(r) for g, r in components]
    n, edges, offsets = disjoint_union(graphs)
    ring = [offset + r for offset, r in zip(offsets, roots)]
    edges.extend((ring[i], ring[i + 1]) for i in range(len(ring) - 1))
    edges.append((ring[0], ring[-1]))
    return build_graph(n, edges)


def bridge_cycle_edim(g: Graph, r: int, k: int,
                      options: Optional[SolverOptions] = None) -> int:
    """k * edim(G(r)) for k identical copies of G rooted at r."""
    if is_rooted_path(g, r):
        raise RootedPathExcludedError(r, "bridge_cycle_edim")
    if k < 3:
        raise TooFewComponentsError(k)
    return k * edim_GU(RootedSubset.single(g, r), options).dimension


def evaluate_bounds(gu: RootedSubset, h: Graph,
                    options: Optional[SolverOptions] = None,
                    exhaustive_max_vertices: Optional[int] = None) -> List[BoundResult]:
    """Every hierarchical-product bound or formula for (G(U), H), applicable or not."""
    results: List[BoundResult] = []
    plus = edim_plus_GU(gu, options)
    if len(gu.u_set) > 1:
        results.append(BoundResult("theorem1", h.n * (plus.dimension + 1), True, witness=plus.basis))
    else:
        results.append(BoundResult("theorem1", None, False, note="requires |U| > 1"))
    results.append(eq1_bound(gu, h, options, exhaustive_max_vertices))
    if len(gu.u_set) != 1:
        results.append(BoundResult("theorem2", None, False, note="requires |U| = 1"))
    elif is_rooted_path(gu.g, gu.u_set[0]):
        results.append(BoundResult("theorem2", None, False, note="G(u) is a rooted path"))
    elif h.n < 2:
        results.append(BoundResult("theorem2", None, False, note="requires n(H) >= 2"))
    else:
        base = edim_GU(gu, options)
        results.append(BoundResult("theorem2", h.n * base.dimension, True, witness=base.basis))
    return results


def corona_bound(g: Graph, h: SimpleGraph) -> BoundResult:
    """edim(G o H) as a BoundResult, with the branch taken in ``note``."""
    if h.n < 2:
        return BoundResult("theorem3", None, False, note="requires n(H) > 1")
    branch = "n(G) = 1 and H in F" if g.n == 1 and _in_family_F(h) else "n(G)(n(H) - 1)"
    return BoundResult("theorem3", corona_edim(g, h), True, note=branch)
