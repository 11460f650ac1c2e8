import pytest
from hypothesis import given, settings

from src.catalog import catalog_graph
from src.exceptions import (
    HTooSmallError,
    IndexOutOfRangeError,
    InvalidInputError,
    RequiresMultipleRootsError,
    RootedPathExcludedError,
    TooFewComponentsError,
)
from src.graph import build_simple_graph
from src.products import (
    RootedSubset,
    bridge_cycle,
    bridge_cycle_edim,
    cartesian_product,
    corona_bound,
    corona_edim,
    corona_product,
    edge_ball,
    edim_GU,
    edim_plus_GU,
    eq1_bound,
    eq1_generator,
    equidistant_pairs,
    evaluate_bounds,
    hierarchical_product,
    is_rooted_path,
    join_with_apex,
    product_distance,
    theorem1_bound,
    theorem1_generator,
    theorem2_exact,
    through_U_distance,
)
from src.resolvability import brute_force_dim, brute_force_edim, is_edge_metric_generator
from src.solver import edim_via_ilp

from .strategies import connected_graphs, rooted_graphs, simple_graphs

ALTERNATE_ROOTS = (0, 2, 4, 6, 8, 10)


@pytest.fixture
def alt_roots(p11):
    return RootedSubset(p11, ALTERNATE_ROOTS)


def test_rooted_subset_validation(triangle):
    with pytest.raises(InvalidInputError):
        RootedSubset(triangle, ())
    with pytest.raises(InvalidInputError):
        RootedSubset(triangle, (0, 0))
    with pytest.raises(IndexOutOfRangeError):
        RootedSubset(triangle, (3,))


def test_alt_roots_product_size(alt_roots, p2):
    product = hierarchical_product(alt_roots, p2)
    assert (product.graph.n, product.graph.m) == (22, 26)


def test_single_root_k2_product_is_a_path(p2):
    product = hierarchical_product(RootedSubset.single(p2, 0), p2)
    assert product.graph.edges == ((0, 2), (1, 3), (0, 1))
    assert sorted(product.graph.degrees) == [1, 1, 2, 2]
    assert product.graph.label(2) == "(v2,v1)"


def test_labeling_round_trip(alt_roots, p2):
    product = hierarchical_product(alt_roots, p2)
    for index in range(product.graph.n):
        assert product.vertex(*product.pair(index)) == index
    assert product.vertex(3, 1) == 7
    with pytest.raises(InvalidInputError):
        product.vertex(11, 0)


def test_cartesian_product_edge_count(c4):
    p3 = catalog_graph("path", [3])
    product = cartesian_product(c4, p3)
    assert product.graph.m == 4 * 2 + 3 * 4
    square = cartesian_product(catalog_graph("path", [2]), catalog_graph("path", [2]))
    assert set(square.graph.degrees) == {2}


def test_through_U_distance(alt_roots):
    p3 = catalog_graph("path", [3])
    assert through_U_distance(RootedSubset.single(p3, 0), 2, 2) == 4
    assert through_U_distance(alt_roots, 1, 1) == 2
    assert through_U_distance(alt_roots, 0, 5) == 5
    with pytest.raises(IndexOutOfRangeError):
        through_U_distance(alt_roots, 0, 11)


def test_product_distance(p2):
    gu = RootedSubset.single(p2, 0)
    assert product_distance(gu, p2, (1, 0), (1, 1)) == 3
    assert product_distance(gu, p2, (1, 0), (0, 0)) == 1
    product = hierarchical_product(gu, p2)
    assert product.graph.distances.vv[product.vertex(1, 0), product.vertex(1, 1)] == 3


def test_product_distance_matches_bfs_on_alt_roots(alt_roots, p2):
    product = hierarchical_product(alt_roots, p2)
    vv = product.graph.distances.vv
    for p, first in enumerate(product.labeling):
        for q, second in enumerate(product.labeling):
            assert product_distance(alt_roots, p2, first, second) == vv[p, q]


def test_edge_ball():
    p4 = catalog_graph("path", [4])
    assert edge_ball(p4, 0, 0) == (0,)
    assert edge_ball(p4, 0, 1) == (1,)
    assert edge_ball(p4, 0, 5) == ()
    with pytest.raises(InvalidInputError):
        edge_ball(p4, 0, -1)


def test_equidistant_pairs(c4):
    assert equidistant_pairs(RootedSubset(c4, (0, 2))) == [(0, 3), (1, 2)]


@pytest.mark.parametrize("n", range(1, 9))
def test_rooted_path_has_no_equidistant_constraints(n):
    g = catalog_graph("path", [n])
    assert edim_GU(RootedSubset.single(g, 0)) == (0, ())
    assert edim_GU(RootedSubset.single(g, n - 1)).dimension == 0


def test_alt_roots_values(alt_roots):
    assert edim_GU(alt_roots).dimension == 1
    plus = edim_plus_GU(alt_roots)
    assert plus == (1, (10,))


def test_triangle_single_root(triangle):
    # only v1v2 and v1v3 share a distance from v1
    assert edim_GU(RootedSubset.single(triangle, 0)) == (1, (2,))


def test_c4_antipodal_roots(c4):
    gu = RootedSubset(c4, (0, 2))
    assert edim_GU(gu) == (1, (3,))
    assert edim_plus_GU(gu) == (2, (2, 3))
    assert theorem1_bound(gu, catalog_graph("path", [2])) == 6


def test_single_root_plus_equals_base(triangle):
    gu = RootedSubset.single(triangle, 1)
    assert edim_plus_GU(gu) == edim_GU(gu)


def test_theorem1_needs_multiple_roots(triangle, p2):
    with pytest.raises(RequiresMultipleRootsError):
        theorem1_bound(RootedSubset.single(triangle, 0), p2)


def test_alt_roots_bounds(alt_roots, p2):
    assert theorem1_bound(alt_roots, p2) == 4
    eq1 = eq1_bound(alt_roots, p2)
    assert (eq1.value, eq1.applicable, eq1.applicable_any) == (2, True, True)
    assert edim_via_ilp(hierarchical_product(alt_roots, p2).graph).optimum == 2


def test_eq1_not_applicable():
    g = catalog_graph("path", [5])
    eq1 = eq1_bound(RootedSubset(g, (1, 3)), catalog_graph("path", [2]))
    assert eq1.witness == (4,)
    assert not eq1.applicable and eq1.value is None
    assert eq1.applicable_any is False
    assert eq1.note


def test_eq1_skips_scan_above_cap():
    g = catalog_graph("path", [5])
    eq1 = eq1_bound(RootedSubset(g, (1, 3)), catalog_graph("path", [2]), exhaustive_max_vertices=4)
    assert eq1.applicable_any is None


def test_eq1_single_root(triangle, p2):
    eq1 = eq1_bound(RootedSubset.single(triangle, 0), p2)
    assert (eq1.value, eq1.applicable) == (2, True)


def test_generators(alt_roots, p2):
    product = hierarchical_product(alt_roots, p2).graph
    assert eq1_generator(alt_roots, p2) == (20, 21)
    assert is_edge_metric_generator(product, eq1_generator(alt_roots, p2))
    generator = theorem1_generator(alt_roots, p2)
    assert generator == (0, 1, 20, 21)
    assert is_edge_metric_generator(product, generator)
    assert eq1_generator(RootedSubset(catalog_graph("path", [5]), (1, 3)), p2) is None


@pytest.mark.parametrize(
    "g, u, expected",
    [
        (catalog_graph("path", [5]), 0, True),
        (catalog_graph("path", [5]), 4, True),
        (catalog_graph("path", [5]), 2, False),
        (catalog_graph("path", [1]), 0, True),
        (catalog_graph("cycle", [4]), 0, False),
        (catalog_graph("star", [3]), 1, False),
    ],
)
def test_is_rooted_path(g, u, expected):
    assert is_rooted_path(g, u) is expected


def test_theorem2(triangle, p2):
    assert theorem2_exact(triangle, 0, p2) == 2
    product = hierarchical_product(RootedSubset.single(triangle, 0), p2)
    assert brute_force_edim(product.graph).dimension == 2


def test_theorem2_errors(triangle, p2):
    with pytest.raises(RootedPathExcludedError):
        theorem2_exact(catalog_graph("path", [4]), 3, p2)
    with pytest.raises(HTooSmallError):
        theorem2_exact(triangle, 0, catalog_graph("path", [1]))


def test_join_with_apex():
    k1 = join_with_apex(build_simple_graph(1, []))
    assert (k1.g.n, k1.g.edges, k1.u_set) == (2, ((0, 1),), (1,))
    two = join_with_apex(build_simple_graph(2, []))
    assert two.g.edges == ((0, 2), (1, 2))
    assert two.u_set == (2,)
    k3 = join_with_apex(catalog_graph("path", [2]))
    assert k3.g.m == 3


def test_corona_small_cases(p2):
    k1 = catalog_graph("path", [1])
    assert corona_product(k1, k1).graph.edges == ((1, 0),)
    comb = corona_product(p2, k1)
    assert (comb.graph.n, comb.graph.m) == (4, 3)
    assert comb.graph.edges == ((2, 0), (3, 1), (0, 1))
    assert comb.pair(0) == (1, 0)
    assert comb.pair(3) == (0, 1)


def test_corona_vertex_layout(p2):
    corona = corona_product(catalog_graph("path", [3]), p2)
    # vertex a of the copy attached to x sits at n(G) + x * n(H) + a
    assert corona.graph.has_edge(3 + 1 * 2 + 0, 1)
    assert corona.graph.has_edge(3 + 2 * 2 + 0, 3 + 2 * 2 + 1)
    assert corona.graph.label(0) == "v1"


@pytest.mark.parametrize(
    "g, h, expected",
    [
        (catalog_graph("path", [1]), catalog_graph("complete", [3]), 3),
        (catalog_graph("path", [2]), catalog_graph("path", [2]), 2),
        (catalog_graph("path", [3]), catalog_graph("complete", [2]), 3),
        (catalog_graph("path", [1]), catalog_graph("path", [4]), 3),
        (catalog_graph("path", [1]), build_simple_graph(2, []), 1),
        (catalog_graph("path", [2]), build_simple_graph(2, []), 2),
    ],
)
def test_corona_edim(g, h, expected):
    assert corona_edim(g, h) == expected
    assert brute_force_edim(corona_product(g, h).graph).dimension == expected


def test_corona_errors():
    with pytest.raises(HTooSmallError):
        corona_edim(catalog_graph("path", [2]), catalog_graph("path", [1]))


def test_corona_bound():
    bound = corona_bound(catalog_graph("path", [1]), catalog_graph("complete", [3]))
    assert (bound.bound_name, bound.value, bound.applicable) == ("theorem3", 3, True)
    assert not corona_bound(catalog_graph("path", [2]), catalog_graph("path", [1])).applicable


def test_bridge_cycle_of_single_vertices():
    k1 = catalog_graph("path", [1])
    assert bridge_cycle([(k1, 0)] * 3).edges == ((0, 1), (1, 2), (0, 2))
    assert bridge_cycle([(k1, 0)] * 5).edges == catalog_graph("cycle", [5]).edges


def test_bridge_cycle_counts(p2):
    bc = bridge_cycle([(p2, 0)] * 3)
    assert (bc.n, bc.m) == (6, 6)
    mixed = bridge_cycle([(p2, 1), (catalog_graph("path", [3]), 1), (catalog_graph("path", [1]), 0)])
    assert mixed.n == 6
    assert mixed.edges[-3:] == ((1, 3), (3, 5), (1, 5))


def test_bridge_cycle_errors(p2, triangle):
    with pytest.raises(TooFewComponentsError):
        bridge_cycle([(p2, 0)] * 2)
    with pytest.raises(TooFewComponentsError):
        bridge_cycle_edim(triangle, 0, 2)
    with pytest.raises(RootedPathExcludedError):
        bridge_cycle_edim(catalog_graph("path", [1]), 0, 3)


def test_bridge_cycle_edim(triangle):
    assert bridge_cycle_edim(triangle, 0, 3) == 3
    bc = bridge_cycle([(triangle, 0)] * 3)
    assert brute_force_edim(bc).dimension == 3


def test_evaluate_bounds_multi_root(alt_roots, p2):
    results = {b.bound_name: b for b in evaluate_bounds(alt_roots, p2)}
    assert results["theorem1"].value == 4
    assert results["eq1"].value == 2
    assert not results["theorem2"].applicable


def test_evaluate_bounds_single_root(triangle, p2):
    results = {b.bound_name: b for b in evaluate_bounds(RootedSubset.single(triangle, 0), p2)}
    assert not results["theorem1"].applicable and results["theorem1"].value is None
    assert results["eq1"].value == 2
    assert results["theorem2"].value == 2


def test_evaluate_bounds_rooted_path(p2):
    results = {b.bound_name: b for b in evaluate_bounds(RootedSubset.single(p2, 0), p2)}
    assert results["theorem2"].note == "G(u) is a rooted path"


@settings(max_examples=30, deadline=None)
@given(rooted_graphs(max_n=5), connected_graphs(max_n=4))
def test_product_distance_property(rooted, h):
    g, roots = rooted
    gu = RootedSubset(g, roots)
    product = hierarchical_product(gu, h)
    assert product.graph.n == g.n * h.n
    assert product.graph.m == h.n * g.m + len(roots) * h.m
    vv = product.graph.distances.vv
    for p, first in enumerate(product.labeling):
        for q, second in enumerate(product.labeling):
            assert product_distance(gu, h, first, second) == vv[p, q]


@settings(max_examples=30, deadline=None)
@given(rooted_graphs(max_n=6))
def test_plus_variant_sandwich(rooted):
    g, roots = rooted
    gu = RootedSubset(g, roots)
    base = edim_GU(gu).dimension
    plus = edim_plus_GU(gu).dimension
    assert base <= plus <= base + brute_force_dim(g, roots).dimension


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_n=4), simple_graphs(max_n=3))
def test_corona_counts(g, h):
    corona = corona_product(g, h)
    assert corona.graph.n == g.n * (h.n + 1)
    assert corona.graph.m == g.m + g.n * (h.m + h.n)
