import pytest
from hypothesis import given, settings, strategies as st

from helpers import connected_graphs

from spantrees.errors import InvalidParameter
from spantrees.graphs import (
    FamilySpec,
    Graph,
    delete_vertex,
    graph_difference,
    make_complete,
    make_counterexample,
    make_cycle,
    make_grid,
    make_half_graph,
    make_path,
    make_star,
    make_subdivided_star,
    make_torus,
    power,
    relabel,
    subdivision_vertices,
)


def test_graph_validation():
    with pytest.raises(InvalidParameter):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(InvalidParameter):
        Graph(3, frozenset({(1, 4)}))
    with pytest.raises(InvalidParameter):
        Graph(0, frozenset())
    g = Graph.from_edges(3, [(2, 1), (1, 2), (3, 2)])
    assert g.edges == {(1, 2), (2, 3)}


def test_json_round_trip():
    g = make_torus(3, 4)
    assert Graph.from_json(g.to_json()) == g
    assert g.to_dict()["edges"] == sorted([list(e) for e in g.edges])


def test_paths_and_cycles():
    assert make_path(1).num_edges == 0
    assert make_path(2).edges == {(1, 2)}
    assert make_cycle(3) == make_complete(3)
    assert make_cycle(4).degrees() == [2, 2, 2, 2]
    with pytest.raises(InvalidParameter):
        make_cycle(2)
    with pytest.raises(InvalidParameter):
        make_path(0)


def test_figure_examples():
    assert power(make_cycle(7), 2).num_edges == 14
    p6 = power(make_path(6), 3)
    assert p6.num_edges == 5 + 4 + 3
    assert all(p6.has_edge(i, j) for i in range(1, 7) for j in range(i + 1, min(i + 3, 6) + 1))


def test_power_boundaries():
    assert power(make_path(6), 1) == make_path(6)
    assert power(make_path(5), 4) == make_complete(5)
    assert power(make_cycle(5), 2) == make_complete(5)


def test_grids_and_tori():
    assert make_grid(1, 6) == make_path(6)
    square = make_grid(2, 2)
    assert square.num_edges == 4 and square.degrees() == [2, 2, 2, 2] and square.is_connected()
    g = make_grid(3, 3)
    assert (g.n, g.num_edges) == (9, 12)
    t = make_torus(3, 3)
    assert (t.n, t.num_edges) == (9, 18)
    t = make_torus(3, 4)
    assert (t.n, t.num_edges) == (12, 24)
    assert set(make_torus(4, 4).degrees()) == {4}
    with pytest.raises(InvalidParameter):
        make_torus(2, 5)
    # label (i-1)*b + j: row neighbours differ by 1, column neighbours by b
    g = make_grid(3, 5)
    assert g.has_edge(1, 2) and g.has_edge(1, 6) and not g.has_edge(5, 6)


def test_star():
    assert make_star(4).edges == {(1, 2), (1, 3), (1, 4)}
    assert delete_vertex(make_star(6), 1).num_edges == 0


def test_delete_vertex():
    assert delete_vertex(make_cycle(3), 3) == make_path(2)
    k4_minus = Graph(4, make_complete(4).edges - {(1, 4)})
    assert delete_vertex(k4_minus, 1) == make_complete(3)
    with pytest.raises(InvalidParameter):
        delete_vertex(make_path(3), 4)


def test_subdivided_star():
    assert make_subdivided_star(1, 2, 1) == make_path(3)
    g = make_subdivided_star(1, 2, 3)
    assert g.n == 7 and len(g.leaves()) == 3 and g.is_tree()
    with pytest.raises(InvalidParameter):
        make_subdivided_star(3, 3, 1)


@given(st.integers(1, 4), st.integers(2, 12), st.integers(1, 6))
def test_subdivided_star_shape(p, q, k):
    if p >= q:
        return
    g = make_subdivided_star(p, q, k)
    assert g.is_tree()
    assert g.n == q * k + 1
    if p * k >= 2:
        assert len(g.leaves()) == p * k
    inner = subdivision_vertices(p, q, k)
    assert len(inner) == (q - p) * k
    assert all(g.degree(v) == 2 for v in inner)


def test_counterexample():
    g = make_counterexample(2)
    assert (g.n, g.num_edges) == (5, 5)
    assert g.has_edge(2, 4)
    with pytest.raises(InvalidParameter):
        make_counterexample(1)


def test_half_graph():
    assert make_half_graph(1).edges == {(1, 2)}
    assert make_half_graph(2).edges == {(1, 3), (1, 4), (2, 4)}
    assert make_half_graph(3).num_edges == 6


def test_graph_difference():
    g = make_complete(4)
    assert graph_difference(g, g).num_edges == 0
    assert graph_difference(g, make_cycle(4)).edges == {(1, 3), (2, 4)}
    with pytest.raises(InvalidParameter):
        graph_difference(make_path(3), make_path(4))


def test_relabel_requires_permutation():
    g = make_path(3)
    assert relabel(g, {1: 3, 2: 2, 3: 1}) == g
    with pytest.raises(InvalidParameter):
        relabel(g, {1: 1, 2: 1, 3: 3})


def test_family_vertex_maps():
    for r in range(1, 5):
        fam = FamilySpec.create("path-power", r=r)
        assert fam.vertex_map == (1, r + 2)
        assert fam.member(3) == power(make_path(r + 5), r)
        fam = FamilySpec.create("cycle-power", r=r)
        assert fam.vertex_map == (1, 2 * r + 1)
        assert fam.member(0) == power(make_cycle(2 * r + 1), r)
    assert FamilySpec.create("torus", a=3).vertex_map == (3, 9)
    assert FamilySpec.create("grid", a=4).member(2) == make_grid(4, 3)
    fam = FamilySpec.create("subdivided-star", p=2, q=5)
    assert fam.member(1).n == fam.vertex_count(1) == 11
    assert FamilySpec.create("counterexample").member(0) == make_counterexample(2)
    with pytest.raises(InvalidParameter):
        FamilySpec.create("wheel")
    with pytest.raises(InvalidParameter):
        FamilySpec.create("torus", a=2)


# -- properties --------------------------------------------------------------

@given(connected_graphs())
def test_power_one_is_identity(g):
    assert g.is_connected()
    assert power(g, 1) == g


@given(st.integers(3, 20), st.integers(1, 6))
def test_path_power_inside_cycle_power(n, k):
    assert power(make_path(n), k).edges <= power(make_cycle(n), k).edges


@given(st.integers(3, 8), st.integers(3, 8))
def test_torus_and_grid_edge_counts(a, b):
    assert make_torus(a, b).num_edges == 2 * a * b
    assert make_grid(a, b).num_edges == a * (b - 1) + b * (a - 1)


@settings(max_examples=40)
@given(st.integers(1, 5), st.integers(0, 6))
def test_half_graph_edge_count(r, extra):
    n = 2 * r + 1 + extra
    diff = graph_difference(power(make_cycle(n), r), power(make_path(n), r))
    assert diff.num_edges == r * (r + 1) // 2


@given(st.integers(1, 6), st.integers(1, 6))
def test_generators_are_deterministic(a, b):
    assert make_grid(a, b) == make_grid(a, b)
    assert make_grid(a, b).to_json() == make_grid(a, b).to_json()
