import pytest
from hypothesis import given, settings

from quivnoeth import (
    Quiver,
    QuiverError,
    QuiverParseError,
    cycle_vertices,
    enumerate_paths,
    opposite,
    parse_path,
    parse_quiver,
    reachable_subquiver,
    serialize_quiver,
)
from quivnoeth.quiver import iter_paths

from oracles import path_count
from strategies import quivers


def test_parse_kronecker(kronecker):
    assert sorted(kronecker.vertices) == ["x", "y"]
    assert [a.id for a in kronecker.arrows] == ["a", "b"]
    assert kronecker.out_degree("x") == 2


def test_declaration_order_is_free():
    q = parse_quiver("arrow a : x -> y\nvertex y\nvertex x\n")
    assert q == parse_quiver("vertex x\nvertex y\narrow a : x -> y\n")


def test_comments_and_blank_lines():
    q = parse_quiver("# header\n\nvertex x   # the only vertex\narrow l : x -> x\n")
    assert q.out_degree("x") == 1


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("vertex x\nvertex x\n", 2),
        ("vertex x\narrow a : x -> y\n", 2),
        ("vertex x\n\nedge a x x\n", 3),
        ("vertex x\narrow a : x -> x\narrow a : x -> x\n", 3),
        ("vertex x\nray r at x\nray r at x\n", 3),
        ("vertex x.1\n", 1),
        ("vertex x\nray r at z\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(QuiverParseError) as err:
        parse_quiver(text)
    assert err.value.lineno == lineno
    assert f"line {lineno}" in str(err.value)


def test_serialize_sorted():
    q = parse_quiver("vertex y\nvertex x\nray s at y\narrow b : y -> x\narrow a : x -> y\n")
    assert serialize_quiver(q) == (
        "vertex x\nvertex y\narrow a : x -> y\narrow b : y -> x\nray s at y\n"
    )


@given(quivers(rays=True))
def test_round_trip(q):
    assert parse_quiver(serialize_quiver(q)) == q


def test_ray_vertices_and_arrows(ray_simple):
    q = ray_simple
    assert q.has_vertex("r.0") and q.has_vertex("r.17")
    assert not q.is_core_vertex("r.0")
    assert [a.id for a in q.out_arrows("y")] == ["r:0"]
    assert q.arrow("r:3").source == "r.2" and q.arrow("r:3").target == "r.3"
    p = parse_path(q, "x: a.r:0.r:1")
    assert p.target == "r.1"
    assert str(p) == "x: a.r:0.r:1"


def test_path_display(kronecker, jordan):
    assert str(kronecker.path("x", ["a"])) == "x: a"
    assert str(kronecker.trivial_path("x")) == "x: -"
    assert jordan.path("x", ["l", "l"]).word() == "l l"
    assert kronecker.trivial_path("y").word() == "e_y"


def test_path_rejects_noncomposable(kronecker):
    with pytest.raises(QuiverError):
        kronecker.path("x", ["a", "b"])
    with pytest.raises(QuiverError):
        parse_path(kronecker, "y: a")


def test_opposite(kronecker, ray_simple):
    op = opposite(kronecker)
    assert op.out_degree("y") == 2 and op.out_degree("x") == 0
    assert opposite(op) == kronecker
    with pytest.raises(QuiverError):
        opposite(ray_simple)


def test_reachable_subquiver(cycle_branch, ray_simple):
    sub = reachable_subquiver(cycle_branch, "z")
    assert sorted(sub.vertices) == ["z"] and not sub.arrows
    sub = reachable_subquiver(ray_simple, "y")
    assert sorted(sub.vertices) == ["y"] and sub.rays == (("r", "y"),)


def test_cycle_vertices(jordan, cycle_branch, kronecker):
    assert cycle_vertices(jordan) == {"x"}
    assert cycle_vertices(cycle_branch) == {"x", "y"}
    assert cycle_vertices(kronecker) == frozenset()


def test_enumerate_paths_counts(kronecker, a2, jordan):
    assert len(enumerate_paths(kronecker, "x", 3, "y")) == 2
    assert len(enumerate_paths(jordan, "x", 3)) == 4
    assert len(enumerate_paths(a2, "x", 5)) == 2


@settings(max_examples=60)
@given(quivers(max_vertices=3, max_arrows=4))
def test_path_counts_match_adjacency_powers(q):
    total = sum(len(enumerate_paths(q, v, 3)) for v in q.vertices)
    assert total == path_count(q, 3)


@given(quivers(max_vertices=3, max_arrows=5))
def test_iter_paths_order_and_uniqueness(q):
    for v in q.vertices:
        paths = list(iter_paths(q, v, 3))
        assert len(set(paths)) == len(paths)
        keys = [p.sort_key() for p in paths]
        assert keys == sorted(keys)
        assert all(q.contains_path(p) for p in paths)


def test_quiver_is_immutable(jordan):
    with pytest.raises(AttributeError):
        jordan.vertices = ()


def test_duplicate_ids_rejected_in_constructor():
    with pytest.raises(QuiverError):
        Quiver(["x", "x"], [])
