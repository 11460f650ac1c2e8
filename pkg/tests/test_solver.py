import pytest
from hypothesis import given, settings

from src.catalog import catalog_graph
from src.config import SOLVER_CONFIG
from src.exceptions import InfeasibleError
from src.resolvability import brute_force_dim, brute_force_edim, is_edge_metric_generator, is_metric_generator
from src.solver import (
    ConstraintKind,
    HittingSetInstance,
    PairOrigin,
    SolverOptions,
    build_edge_instance,
    build_vertex_instance,
    dim_via_ilp,
    edim_via_ilp,
    enumerate_optimal_witnesses,
    export_lp,
    solve_hitting_set,
)

from .strategies import connected_graphs

TRIANGLE_LP = """\\ minimum hitting set model, one covering row per item pair
Minimize
 edim: x1 + x2 + x3
Subject To
 e1_e2: x1 + x3 >= 1
 e1_e3: x2 + x3 >= 1
 e2_e3: x1 + x2 >= 1
Binary
 x1 x2 x3
End
"""


def _instance(universe, rows):
    origin = PairOrigin(0, 1, ConstraintKind.EDGE_PAIR)
    return HittingSetInstance.from_rows(universe, [(row, origin) for row in rows])


def test_triangle_rows(triangle):
    inst = build_edge_instance(triangle)
    assert inst.constraints == (frozenset({0, 2}), frozenset({1, 2}), frozenset({0, 1}))
    assert [o[0].tag() for o in inst.origins] == ["e1_e2", "e1_e3", "e2_e3"]


def test_triangle_solution(triangle):
    result = solve_hitting_set(build_edge_instance(triangle))
    assert result.optimum == 2
    assert result.witness == (1, 2)
    assert result.optimal


def test_triangle_lp(triangle):
    assert export_lp(build_edge_instance(triangle)) == TRIANGLE_LP


def test_complete_triangle_lp_uses_lexicographic_edges():
    lines = export_lp(build_edge_instance(catalog_graph("complete", [3]))).splitlines()
    assert lines[4:7] == [" e1_e2: x2 + x3 >= 1", " e1_e3: x1 + x3 >= 1", " e2_e3: x1 + x2 >= 1"]
    assert lines[:4] == TRIANGLE_LP.splitlines()[:4]


def test_lp_wraps_long_lines():
    inst = _instance(12, [range(12)])
    lines = export_lp(inst, "cover").splitlines()
    assert lines[2] == " cover: x1 + x2 + x3 + x4 + x5 + x6 + x7 + x8 + x9 + x10"
    assert lines[3] == "    + x11 + x12"
    assert lines[-3:] == [" x1 x2 x3 x4 x5 x6 x7 x8 x9 x10", " x11 x12", "End"]
    assert lines[5:7] == [" e1_e2: x1 + x2 + x3 + x4 + x5 + x6 + x7 + x8 + x9 + x10", "    + x11 + x12 >= 1"]


def test_lp_without_rows():
    text = export_lp(_instance(1, []))
    assert "Subject To" not in text
    assert text.endswith("Binary\n x1\nEnd\n")


def test_empty_row_is_infeasible():
    inst = _instance(2, [[0, 1], []])
    with pytest.raises(InfeasibleError) as info:
        solve_hitting_set(inst)
    assert info.value.constraint_index == 1
    with pytest.raises(InfeasibleError):
        export_lp(inst)


def test_no_rows():
    result = solve_hitting_set(_instance(3, []))
    assert (result.optimum, result.witness, result.optimal) == (0, (), True)


def test_identical_rows_are_merged():
    rows = [([0, 1], PairOrigin(0, 1, ConstraintKind.EDGE_PAIR)),
            ([1, 0], PairOrigin(2, 3, ConstraintKind.EDGE_PAIR))]
    merged = HittingSetInstance.from_rows(2, rows)
    assert len(merged) == 1
    assert len(merged.origins[0]) == 2
    assert len(HittingSetInstance.from_rows(2, rows, deduplicate=False)) == 2


def test_dominated_rows_do_not_change_optimum():
    inst = _instance(3, [[0], [0, 1], [0, 1, 2]])
    for reduce in (True, False):
        result = solve_hitting_set(inst, SolverOptions(reduce_dominated=reduce))
        assert result.witness == (0,)


def test_canonical_witness_prefers_high_indices():
    inst = _instance(2, [[0, 1]])
    assert solve_hitting_set(inst).witness == (1,)
    assert solve_hitting_set(inst, SolverOptions(canonical_witness=False)).witness == (0,)


def test_enumerate_optimal_witnesses(triangle):
    inst = build_edge_instance(triangle)
    assert enumerate_optimal_witnesses(inst, 2) == [(0, 1), (0, 2), (1, 2)]
    assert enumerate_optimal_witnesses(inst, 2, limit=1) == [(0, 1)]
    assert enumerate_optimal_witnesses(inst, 1) == []


def test_vertex_instance_path():
    g = catalog_graph("path", [3])
    inst = build_vertex_instance(g)
    assert inst.constraints == (frozenset({0, 1, 2}), frozenset({0, 2}))
    assert inst.origins[0][0].tag() == "v1_v2"
    assert dim_via_ilp(g).witness == (2,)


def test_restricted_edges(triangle):
    result = edim_via_ilp(triangle, f=[0, 1])
    assert (result.optimum, result.witness) == (1, (2,))


def test_single_edge_graph():
    k2 = catalog_graph("path", [2])
    assert len(build_edge_instance(k2)) == 0
    result = edim_via_ilp(k2)
    assert (result.optimum, result.witness, result.optimal) == (1, (1,), True)
    assert edim_via_ilp(k2, f=[0]).optimum == 0
    assert edim_via_ilp(catalog_graph("path", [1])).optimum == 0


def test_petersen():
    g = catalog_graph("petersen")
    assert edim_via_ilp(g).optimum == 4
    assert dim_via_ilp(g).optimum == 3


def test_time_limit_keeps_a_cover():
    g = catalog_graph("truncated_cube")
    inst = build_edge_instance(g)
    result = solve_hitting_set(inst, SolverOptions(time_limit=1e-9))
    assert inst.is_hit_by(result.witness)
    assert result.optimum >= 3


def test_options_from_config():
    options = SolverOptions.from_config(time_limit=2.5)
    assert options.time_limit == 2.5
    assert SolverOptions.from_config().time_limit is None


def test_default_options_follow_configured_time_limit(monkeypatch):
    assert SolverOptions().time_limit is None
    monkeypatch.setitem(SOLVER_CONFIG, "time_limit", 3.0)
    assert SolverOptions().time_limit == 3.0
    assert SolverOptions(time_limit=1.0).time_limit == 1.0


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=7))
def test_ilp_matches_brute_force(g):
    edim = edim_via_ilp(g)
    assert edim.optimum == brute_force_edim(g).dimension
    assert is_edge_metric_generator(g, edim.witness)
    dim = dim_via_ilp(g)
    assert dim.optimum == brute_force_dim(g).dimension
    assert is_metric_generator(g, dim.witness)
